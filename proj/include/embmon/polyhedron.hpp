#pragma once

#include "embmon/cone.hpp"
#include "embmon/lp.hpp"

namespace embmon {

/// Inequality a.x >= b (equations use the same shape with equality semantics).
struct AffineConstraint {
    VecInt a;
    Rat b;
};

/// Exact rational polyhedron in H-representation.
class RationalPolyhedron {
public:
    RationalPolyhedron() = default;
    explicit RationalPolyhedron(int dim) : dim_(dim) {}

    int ambientDim() const { return dim_; }
    const std::vector<AffineConstraint> &inequalities() const { return ineqs_; }
    const std::vector<AffineConstraint> &equations() const { return eqs_; }

    void addInequality(VecInt a, Rat b); // a.x >= b
    void addEquation(VecInt a, Rat b);   // a.x  = b

    bool contains(const VecRat &x) const;
    bool contains(const VecInt &x) const;

    /// LP description with one variable per coordinate.
    LpProblem toLp() const;

private:
    int dim_ = 0;
    std::vector<AffineConstraint> ineqs_;
    std::vector<AffineConstraint> eqs_;
};

bool isEmpty(const RationalPolyhedron &p);
bool isBounded(const RationalPolyhedron &p);

/// All integer points, lexicographically sorted; throws UnboundedPolyhedron.
std::vector<VecInt> latticePoints(const RationalPolyhedron &p);

/// Integer points of the projection of the feasible region of `base` onto its
/// first `dim` variables. The projection must be bounded.
std::vector<VecInt> projectedLatticePoints(const LpProblem &base, int dim);

/// Integer value tuples (f_1(x), ..., f_k(x)) of the given linear forms over
/// the feasible region of `base`; the image must be bounded.
std::vector<VecInt> formLatticePoints(const LpProblem &base, const std::vector<VecRat> &forms);

/// H-representation of the Minkowski sum of the segments [0, g] over the
/// generator list.
RationalPolyhedron zonotope(int dim, const std::vector<VecInt> &generators);

/// Lattice points of the zonotope, enumerated through its box preimage.
std::vector<VecInt> zonotopeLatticePoints(int dim, const std::vector<VecInt> &generators);

} // namespace embmon
