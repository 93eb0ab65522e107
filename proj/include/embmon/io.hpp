#pragma once

#include <memory>

#include "embmon/mds.hpp"

namespace embmon {

/// Parsed input file: a group, a monoid, or a Mori dream space.
struct InputDocument {
    std::string kind; // "group" | "monoid" | "mds"
    std::optional<AbelianGroup> group;
    std::optional<EmbeddedMonoid> monoid;
    std::shared_ptr<MoriDreamSpace> mds;
    std::optional<GroupElement> canonicalClass; // optional mds payload
};

InputDocument loadInput(const std::string &path);

/// "3;1" syntax: free coordinates, optional ';', torsion coordinates.
GroupElement parseElement(const std::string &text, const AbelianGroup &g);

VecInt parseIntVector(const std::string &text);
Int parseInt(const std::string &text);
Rat parseRat(const std::string &text);

} // namespace embmon
