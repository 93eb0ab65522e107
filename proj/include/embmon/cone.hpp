#pragma once

#include <optional>

#include "embmon/errors.hpp"
#include "embmon/matrix.hpp"

namespace embmon {

/// Minimal V-representation of a rational cone: extreme rays of the pointed
/// part plus a lineality basis.
struct ConeVRep {
    std::vector<VecInt> rays;
    std::vector<VecInt> lineality;
};

/// H-representation: inward facet normals (facet.x >= 0) and span equations
/// (eq.x = 0). Facet normals are primitive representatives inside span(cone).
struct ConeHRep {
    std::vector<VecInt> facets;
    std::vector<VecInt> equations;
};

/// V-representation of the cone {x : ineq.x >= 0 for all ineqs, eq.x = 0}.
ConeVRep doubleDescription(int dim, const std::vector<VecInt> &ineqs, const std::vector<VecInt> &eqs);

/// Exact convex polyhedral cone with both representations available.
class RationalCone {
public:
    RationalCone() = default;

    static RationalCone fromGenerators(int dim, const std::vector<VecInt> &generators);
    static RationalCone fromHRep(int dim, const std::vector<VecInt> &ineqs, const std::vector<VecInt> &eqs);

    int ambientDim() const { return dim_; }
    const std::vector<VecInt> &rays() const { return rays_; }
    const std::vector<VecInt> &linealityBasis() const { return lineality_; }
    const std::vector<VecInt> &facetNormals() const { return hrep_.facets; }
    const std::vector<VecInt> &spanEquations() const { return hrep_.equations; }

    bool isPointed() const { return lineality_.empty(); }
    bool isZeroCone() const { return rays_.empty() && lineality_.empty(); }
    int dim() const; // dimension of the linear span

    bool contains(const VecRat &x) const;
    bool contains(const VecInt &x) const;
    bool relativeInteriorContains(const VecRat &x) const;
    bool relativeInteriorContains(const VecInt &x) const;

    /// All generators (rays plus +-lineality) — convenient for LP membership.
    std::vector<VecInt> generatorsWithLineality() const;

    bool operator==(const RationalCone &o) const
    {
        return dim_ == o.dim_ && rays_ == o.rays_ && lineality_ == o.lineality_;
    }

private:
    int dim_ = 0;
    std::vector<VecInt> rays_;
    std::vector<VecInt> lineality_;
    ConeHRep hrep_;
};

struct ConeFacet {
    RationalCone cone;
    VecInt normal; // primitive inward normal defining the facet
};

/// Codimension-1 faces with their defining normals, sorted by normal.
std::vector<ConeFacet> facets(const RationalCone &c);

/// Primitive linear form cutting out a facet, normalized on the lattice
/// span(cone) ∩ Z^n. Integer level sets of the form are the facet parallels.
class FacetParallelForm {
public:
    FacetParallelForm() = default;
    FacetParallelForm(VecInt normal, Int denom) : normal_(std::move(normal)), denom_(std::move(denom)) {}

    const VecInt &normal() const { return normal_; }
    const Int &denominator() const { return denom_; }

    Rat levelOf(const VecRat &x) const;
    /// Exact integer level of a lattice point of span(cone); throws if fractional.
    Int levelOf(const VecInt &x) const;

private:
    VecInt normal_;
    Int denom_ = 1;
};

/// One affine slice {x in lin(cone) : form(x) = level}.
struct AffineSlice {
    FacetParallelForm form;
    Int level;
};

/// The facet-parallel form of facet F inside sigma; throws NotAFacet when F
/// is not a facet of sigma.
FacetParallelForm facetParallelForm(const RationalCone &sigma, const RationalCone &facet);

} // namespace embmon
