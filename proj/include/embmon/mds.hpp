#pragma once

#include <mutex>
#include <optional>

#include "embmon/monoid.hpp"

namespace embmon {

struct RelationMonomial {
    Rat coeff;      // nonzero
    VecInt exponents; // in Z^numVars, entries >= 0
};

/// A Cox-ring relation stored as a sum of monomials.
struct Relation {
    std::vector<RelationMonomial> monomials;
};

/// Subset of {1..numVars}, sorted ascending.
using FaceIndexSet = std::vector<int>;

struct PicardData {
    Subgroup subgroup;          // Pic(X) inside Cl(X)
    SubgroupCoordinates coords; // canonical coordinates for Pic(X)
};

/// Mori dream space given by its Cox-ring data: class group, generator
/// degrees, relations and an ample class. Combinatorial caches (F-faces,
/// covering collection, Picard group, base point free monoid) fill once.
class MoriDreamSpace {
public:
    MoriDreamSpace(AbelianGroup classGroup, std::vector<GroupElement> degrees, std::vector<Relation> relations,
                   std::optional<GroupElement> ampleClass,
                   std::optional<std::vector<FaceIndexSet>> userFFaces = std::nullopt);

    MoriDreamSpace(const MoriDreamSpace &) = delete;
    MoriDreamSpace &operator=(const MoriDreamSpace &) = delete;

    int numVars() const { return static_cast<int>(degrees_.size()); }
    const AbelianGroup &classGroup() const { return classGroup_; }
    const std::vector<GroupElement> &degrees() const { return degrees_; }
    const std::vector<Relation> &relations() const { return relations_; }
    bool hasAmple() const { return ample_.has_value(); }
    const GroupElement &ampleClass() const;

    /// Q applied to an exponent vector.
    GroupElement degreeOf(const VecInt &exponents) const;

    const std::vector<FaceIndexSet> &fFaces() const;
    /// The sum-of-monomials rule is only a necessary condition when more than
    /// one relation is present and no explicit F-face list was supplied.
    bool fFaceRuleIsHeuristic() const { return relations_.size() > 1 && !userFFaces_.has_value(); }

    const std::vector<FaceIndexSet> &relevantFaces() const;
    const std::vector<FaceIndexSet> &coveringCollection() const;

    const PicardData &picard() const;

    /// Monoid Q(gamma ∩ Z^r) inside Cl(X).
    EmbeddedMonoid faceMonoid(const FaceIndexSet &gamma) const;

    /// BPF(X) in the canonical coordinates of Pic(X).
    const EmbeddedMonoid &bpfMonoid() const;
    /// The same generators expressed in Cl(X).
    const std::vector<GroupElement> &bpfGeneratorsAmbient() const;

    bool isBasePointFree(const GroupElement &w) const;
    std::vector<FaceIndexSet> baseLocusFaces(const GroupElement &w) const;

    bool semiampleContains(const GroupElement &w) const;
    RationalCone semiampleCone() const;

    GroupElement canonicalClass() const;
    bool isGorenstein(const GroupElement &kx) const;

    RationalCone movingCone() const;
    bool qFactorialityCheck() const;

    Int dimension() const;

private:
    template <typename T> struct Cache {
        mutable std::once_flag flag;
        mutable std::optional<T> value;
        template <typename F> const T &get(F &&f) const
        {
            std::call_once(flag, [&] { value.emplace(f()); });
            return *value;
        }
    };

    struct HRepList {
        std::vector<VecInt> facets;
        std::vector<VecInt> equations;
    };

    std::vector<VecInt> degreeFreeParts(const FaceIndexSet &gamma) const;
    const HRepList &semiampleHRep() const;
    std::vector<const EmbeddedMonoid *> coveringMonoids() const;

    AbelianGroup classGroup_;
    std::vector<GroupElement> degrees_;
    std::vector<Relation> relations_;
    std::optional<GroupElement> ample_;
    std::optional<std::vector<FaceIndexSet>> userFFaces_;

    Cache<std::vector<FaceIndexSet>> fFaces_;
    Cache<std::vector<FaceIndexSet>> rlv_;
    Cache<std::vector<FaceIndexSet>> cov_;
    Cache<std::vector<EmbeddedMonoid>> covMonoids_;
    Cache<PicardData> picard_;
    Cache<std::pair<EmbeddedMonoid, std::vector<GroupElement>>> bpf_;
    Cache<HRepList> semiample_;
};

/// Integer point with f.x > 0 for every inequality and e.x = 0 for every
/// equation, found by constraint generation; empty when none exists.
std::optional<VecInt> strictlyPositivePoint(int dim, const std::vector<VecInt> &inequalities,
                                            const std::vector<VecInt> &equations);

/// Relative interior point of a cone, scaled to integer coordinates; empty
/// only for inconsistent input.
std::optional<VecInt> relativeInteriorPoint(const RationalCone &cone);

} // namespace embmon
