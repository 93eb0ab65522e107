#pragma once

#include <stdexcept>
#include <string>

namespace embmon {

struct Error : std::runtime_error {
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

struct GroupMismatch : Error {
    explicit GroupMismatch(const std::string &msg = "elements belong to different groups") : Error(msg) {}
};

struct AmbientMismatch : Error {
    explicit AmbientMismatch(const std::string &msg = "monoids live in different ambient groups") : Error(msg) {}
};

struct UnboundedPolyhedron : Error {
    explicit UnboundedPolyhedron(const std::string &msg = "polyhedron is unbounded") : Error(msg) {}
};

struct NotAFacet : Error {
    explicit NotAFacet(const std::string &msg = "cone is not a facet of the parent cone") : Error(msg) {}
};

struct NotSpanning : Error {
    explicit NotSpanning(const std::string &msg = "monoid does not generate the ambient group") : Error(msg) {}
};

struct InhomogeneousRelation : Error {
    explicit InhomogeneousRelation(const std::string &msg = "relation is not homogeneous") : Error(msg) {}
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string &msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string &msg) : Error(msg) {}
};

} // namespace embmon
