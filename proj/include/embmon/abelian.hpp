#pragma once

#include <optional>
#include <string>
#include <vector>

#include "embmon/errors.hpp"
#include "embmon/matrix.hpp"

namespace embmon {

class GroupElement;

/// Finitely generated abelian group Z^rank + Z/a_1 + ... + Z/a_t with all a_i >= 2.
class AbelianGroup {
public:
    AbelianGroup() = default;
    AbelianGroup(int rank, VecInt torsionOrders);

    int rank() const { return rank_; }
    const VecInt &torsionOrders() const { return torsion_; }
    int torsionCount() const { return static_cast<int>(torsion_.size()); }
    int generatorCount() const { return rank_ + torsionCount(); }
    bool isTrivial() const { return rank_ == 0 && torsion_.empty(); }

    /// True when the torsion orders form a divisibility chain a_i | a_{i+1}.
    bool isCanonical() const;

    Int torsionExponent() const; // lcm of the torsion orders, 1 if none

    GroupElement zero() const;
    GroupElement element(VecInt freePart, VecInt torsionPart) const;

    /// Free generators e_1..e_rank followed by the torsion generators.
    std::vector<GroupElement> canonicalGenerators() const;

    /// All elements of the torsion part, lexicographically ordered.
    std::vector<VecInt> torsionElements() const;

    bool operator==(const AbelianGroup &o) const { return rank_ == o.rank_ && torsion_ == o.torsion_; }
    bool operator!=(const AbelianGroup &o) const { return !(*this == o); }

    std::string str() const;

private:
    int rank_ = 0;
    VecInt torsion_;
};

/// Element of an AbelianGroup, torsion coordinates always reduced into [0, a_i).
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(AbelianGroup group, VecInt freePart, VecInt torsionPart);

    const AbelianGroup &group() const { return group_; }
    const VecInt &freePart() const { return free_; }
    const VecInt &torsionPart() const { return torsion_; }

    bool isZero() const;
    bool freePartIsZero() const { return isZeroVec(free_); }

    GroupElement add(const GroupElement &other) const;
    GroupElement negate() const;
    GroupElement scalarMultiply(const Int &c) const;

    /// Order as a group element; 0 when the free part is nonzero (infinite order).
    Int order() const;

    bool operator==(const GroupElement &o) const;
    bool operator!=(const GroupElement &o) const { return !(*this == o); }

    std::string str() const; // "3;1" style: free coords ';' torsion coords

private:
    AbelianGroup group_;
    VecInt free_;
    VecInt torsion_;
};

GroupElement operator+(const GroupElement &a, const GroupElement &b);
GroupElement operator-(const GroupElement &a, const GroupElement &b);
GroupElement operator-(const GroupElement &a);
GroupElement operator*(const Int &c, const GroupElement &a);

/// Deterministic total order: free part lex, then torsion lex.
bool lexLess(const GroupElement &a, const GroupElement &b);

/// Homomorphism given by the images of the domain's canonical generators.
/// Construction checks well-definedness on the torsion generators.
class GroupHom {
public:
    GroupHom() = default;
    GroupHom(AbelianGroup domain, AbelianGroup codomain, std::vector<GroupElement> images);

    const AbelianGroup &domain() const { return domain_; }
    const AbelianGroup &codomain() const { return codomain_; }
    const std::vector<GroupElement> &images() const { return images_; }

    GroupElement apply(const GroupElement &x) const;
    GroupElement applyToCoefficients(const VecInt &coeffs) const;

    /// Free parts of the generator images as matrix columns (rank(domain) columns
    /// only makes sense for free domains; includes torsion generator columns too).
    IntMat freePartMatrix() const;

private:
    AbelianGroup domain_;
    AbelianGroup codomain_;
    std::vector<GroupElement> images_;
};

/// Generators of {x in domain : h(x) = 0}. For a free domain the generators
/// form a lattice basis of the kernel.
std::vector<GroupElement> homKernel(const GroupHom &h);

/// Subgroup of an ambient group, described by a generator list.
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(AbelianGroup ambient, std::vector<GroupElement> generators);

    const AbelianGroup &ambient() const { return ambient_; }
    const std::vector<GroupElement> &generators() const { return generators_; }

    bool contains(const GroupElement &x) const;

    /// Integer coefficients c with sum c_i * g_i = x, if x lies in the subgroup.
    std::optional<VecInt> solve(const GroupElement &x) const;

private:
    AbelianGroup ambient_;
    std::vector<GroupElement> generators_;
};

Subgroup subgroupIntersection(const Subgroup &a, const Subgroup &b);

/// Finite presentation Z^numGenerators / (columns of relation vectors).
struct Presentation {
    int numGenerators = 0;
    std::vector<VecInt> relations;
};

/// Canonical form of a presented group together with both directions of the
/// isomorphism: generatorImages sends presentation generators into the
/// canonical group, canonicalGeneratorReps lifts each canonical generator to
/// a representative coefficient vector.
struct CanonicalizedPresentation {
    AbelianGroup group;
    std::vector<GroupElement> generatorImages;
    std::vector<VecInt> canonicalGeneratorReps;
};

CanonicalizedPresentation canonicalize(const Presentation &p);

struct CanonicalizedGroup {
    AbelianGroup group;
    GroupHom iso;    // original -> canonical
    GroupHom isoInv; // canonical -> original
};

/// Canonical form (divisibility-chain torsion) of an existing group.
CanonicalizedGroup canonicalize(const AbelianGroup &g);

/// A subgroup rewritten as a group in its own right: `group` is the canonical
/// form, `embed` maps it into the ambient group, and coordinates() expresses
/// ambient elements of the subgroup in the canonical generators. For full
/// sublattices of Z^n the free coordinates come from the Hermite basis, so the
/// full lattice gets identity coordinates.
class SubgroupCoordinates {
public:
    SubgroupCoordinates() = default;
    explicit SubgroupCoordinates(const Subgroup &s);

    const AbelianGroup &group() const { return group_; }
    const Subgroup &subgroup() const { return subgroup_; }

    GroupElement toAmbient(const GroupElement &x) const;
    std::optional<GroupElement> coordinates(const GroupElement &ambientElement) const;

    /// Generators of the subgroup expressed in ambient coordinates, one per
    /// canonical generator of group().
    const std::vector<GroupElement> &basis() const { return basis_; }

private:
    Subgroup subgroup_;
    AbelianGroup group_;
    std::vector<GroupElement> basis_; // ambient elements
};

} // namespace embmon
