#include "embmon/cone.hpp"

#include <algorithm>
#include <cassert>

#include "embmon/lp.hpp"

namespace embmon {

namespace {

using Bits = std::vector<bool>;

struct DdRay {
    VecInt v;
    Bits tight; // over the inequality indices processed so far
};

bool subsetOf(const Bits &a, const Bits &b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

Bits intersect(const Bits &a, const Bits &b)
{
    Bits r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] && b[i];
    return r;
}

struct DdState {
    std::vector<VecInt> lineality;
    std::vector<DdRay> rays;
    int processedIneqs = 0;

    void markTightForAll()
    {
        for (DdRay &r : rays) r.tight.push_back(true);
    }

    // Incorporate the constraint a.x >= 0 (or a.x = 0 for equations).
    void addConstraint(const VecInt &a, bool equation)
    {
        // A lineality direction with nonzero value absorbs the constraint.
        int hit = -1;
        for (std::size_t i = 0; i < lineality.size(); ++i)
            if (dotII(a, lineality[i]) != 0) {
                hit = static_cast<int>(i);
                break;
            }
        if (hit >= 0) {
            VecInt l0 = lineality[hit];
            Int al0 = dotII(a, l0);
            if (al0 < 0) {
                l0 = negVec(l0);
                al0 = -al0;
            }
            std::vector<VecInt> newLin;
            for (std::size_t i = 0; i < lineality.size(); ++i) {
                if (static_cast<int>(i) == hit) continue;
                Int ali = dotII(a, lineality[i]);
                VecInt l = subVec(scaleVec(al0, lineality[i]), scaleVec(ali, l0));
                primitivize(l);
                newLin.push_back(std::move(l));
            }
            lineality = std::move(newLin);
            for (DdRay &r : rays) {
                Int ar = dotII(a, r.v);
                r.v = subVec(scaleVec(al0, r.v), scaleVec(ar, l0));
                primitivize(r.v);
            }
            if (!equation) {
                markTightForAll(); // projected rays lie on the new hyperplane
                DdRay nr;
                nr.v = std::move(l0);
                nr.tight.assign(processedIneqs, true);
                nr.tight.push_back(false);
                rays.push_back(std::move(nr));
                ++processedIneqs;
            }
            return;
        }

        // Constraint restricted to the pointed part.
        std::vector<Int> vals(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) vals[i] = dotII(a, rays[i].v);

        std::vector<DdRay> result;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            bool keep = equation ? vals[i] == 0 : vals[i] >= 0;
            if (keep) {
                DdRay r = rays[i];
                if (!equation) r.tight.push_back(vals[i] == 0);
                result.push_back(std::move(r));
            }
        }
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (vals[p] <= 0) continue;
            for (std::size_t n = 0; n < rays.size(); ++n) {
                if (vals[n] >= 0) continue;
                if (!adjacent(p, n)) continue;
                DdRay w;
                w.v = subVec(scaleVec(vals[p], rays[n].v), scaleVec(vals[n], rays[p].v));
                primitivize(w.v);
                w.tight = intersect(rays[p].tight, rays[n].tight);
                if (!equation) w.tight.push_back(true);
                result.push_back(std::move(w));
            }
        }
        rays = std::move(result);
        if (!equation) ++processedIneqs;
    }

    // Combinatorial adjacency test over the processed inequalities.
    bool adjacent(std::size_t p, std::size_t n) const
    {
        Bits common = intersect(rays[p].tight, rays[n].tight);
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (i == p || i == n) continue;
            if (subsetOf(common, rays[i].tight)) return false;
        }
        return true;
    }
};

std::vector<VecInt> sortedUniquePrimitive(std::vector<VecInt> vs)
{
    for (VecInt &v : vs) primitivize(v);
    std::sort(vs.begin(), vs.end(), [](const VecInt &a, const VecInt &b) { return lexLess(a, b); });
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    vs.erase(std::remove_if(vs.begin(), vs.end(), [](const VecInt &v) { return isZeroVec(v); }), vs.end());
    return vs;
}

// Canonical lineality basis via the Hermite form of the spanned lattice's
// saturation (kernel of the orthogonal-complement equations).
std::vector<VecInt> canonicalSubspaceBasis(int dim, const std::vector<VecInt> &spanning)
{
    if (spanning.empty()) return {};
    IntMat rows = IntMat::fromRows(spanning);
    IntMat comp = kernelBasis(rows);                 // columns c with spanning . c = 0
    IntMat basis = kernelBasis(comp.transposed());   // saturated lattice of the span
    std::vector<VecInt> out;
    for (int j = 0; j < basis.cols(); ++j) {
        VecInt v = basis.column(j);
        primitivize(v);
        out.push_back(std::move(v));
    }
    (void)dim;
    return sortedUniquePrimitive(std::move(out));
}

// Orthogonal projection onto the subspace {x : W x = 0}, scaled to a
// primitive integer vector. W rows are independent.
VecInt projectToSubspace(const VecInt &u, const std::vector<VecInt> &wrows)
{
    if (wrows.empty()) {
        VecInt v = u;
        primitivize(v);
        return v;
    }
    IntMat W = IntMat::fromRows(wrows);
    const int m = W.rows();
    IntMat G(m, m); // W W^T
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) G.at(i, j) = dotII(wrows[i], wrows[j]);
    VecRat rhs(m);
    for (int i = 0; i < m; ++i) rhs[i] = Rat(dotII(wrows[i], u));
    auto c = solveRational(G, rhs);
    assert(c.has_value());
    VecRat proj(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
        proj[k] = Rat(u[k]);
        for (int i = 0; i < m; ++i) proj[k] -= (*c)[i] * Rat(wrows[i][k]);
    }
    return clearDenominators(proj);
}

} // namespace

ConeVRep doubleDescription(int dim, const std::vector<VecInt> &ineqs, const std::vector<VecInt> &eqs)
{
    DdState st;
    for (int i = 0; i < dim; ++i) {
        VecInt e(dim, Int(0));
        e[i] = 1;
        st.lineality.push_back(std::move(e));
    }
    for (const VecInt &e : eqs)
        if (!isZeroVec(e)) st.addConstraint(e, true);
    for (const VecInt &a : ineqs)
        if (!isZeroVec(a)) st.addConstraint(a, false);

    ConeVRep out;
    for (DdRay &r : st.rays) out.rays.push_back(std::move(r.v));
    out.rays = sortedUniquePrimitive(std::move(out.rays));
    out.lineality = canonicalSubspaceBasis(dim, st.lineality);
    return out;
}

RationalCone RationalCone::fromGenerators(int dim, const std::vector<VecInt> &generators)
{
    for (const VecInt &g : generators)
        if (static_cast<int>(g.size()) != dim) throw InvalidInput("cone generator has wrong dimension");

    RationalCone c;
    c.dim_ = dim;

    std::vector<VecInt> gens = sortedUniquePrimitive(generators);

    // Dual cone {y : y.g >= 0}: its V-representation is our H-representation.
    ConeVRep dual = doubleDescription(dim, gens, {});
    c.hrep_.equations = dual.lineality;
    for (const VecInt &u : dual.rays) c.hrep_.facets.push_back(projectToSubspace(u, dual.lineality));
    c.hrep_.facets = sortedUniquePrimitive(std::move(c.hrep_.facets));

    // Minimal V-representation from the facets.
    ConeVRep vrep = doubleDescription(dim, c.hrep_.facets, c.hrep_.equations);
    c.rays_ = std::move(vrep.rays);
    c.lineality_ = std::move(vrep.lineality);
    return c;
}

RationalCone RationalCone::fromHRep(int dim, const std::vector<VecInt> &ineqs, const std::vector<VecInt> &eqs)
{
    ConeVRep vrep = doubleDescription(dim, ineqs, eqs);
    std::vector<VecInt> gens = vrep.rays;
    for (const VecInt &l : vrep.lineality) {
        gens.push_back(l);
        gens.push_back(negVec(l));
    }
    return fromGenerators(dim, gens);
}

int RationalCone::dim() const
{
    return dim_ - static_cast<int>(hrep_.equations.size());
}

bool RationalCone::contains(const VecRat &x) const
{
    for (const VecInt &e : hrep_.equations)
        if (dotIR(e, x) != 0) return false;
    for (const VecInt &f : hrep_.facets)
        if (dotIR(f, x) < 0) return false;
    return true;
}

bool RationalCone::contains(const VecInt &x) const
{
    return contains(toRatVec(x));
}

bool RationalCone::relativeInteriorContains(const VecRat &x) const
{
    for (const VecInt &e : hrep_.equations)
        if (dotIR(e, x) != 0) return false;
    for (const VecInt &f : hrep_.facets)
        if (dotIR(f, x) <= 0) return false;
    return true;
}

bool RationalCone::relativeInteriorContains(const VecInt &x) const
{
    return relativeInteriorContains(toRatVec(x));
}

std::vector<VecInt> RationalCone::generatorsWithLineality() const
{
    std::vector<VecInt> gens = rays_;
    for (const VecInt &l : lineality_) {
        gens.push_back(l);
        gens.push_back(negVec(l));
    }
    return gens;
}

std::vector<ConeFacet> facets(const RationalCone &c)
{
    std::vector<ConeFacet> out;
    for (const VecInt &f : c.facetNormals()) {
        std::vector<VecInt> gens;
        for (const VecInt &r : c.rays())
            if (dotII(f, r) == 0) gens.push_back(r);
        for (const VecInt &l : c.linealityBasis()) {
            gens.push_back(l);
            gens.push_back(negVec(l));
        }
        out.push_back({RationalCone::fromGenerators(c.ambientDim(), gens), f});
    }
    std::sort(out.begin(), out.end(),
              [](const ConeFacet &a, const ConeFacet &b) { return lexLess(a.normal, b.normal); });
    return out;
}

Rat FacetParallelForm::levelOf(const VecRat &x) const
{
    return dotIR(normal_, x) / Rat(denom_);
}

Int FacetParallelForm::levelOf(const VecInt &x) const
{
    Int num = dotII(normal_, x);
    if (num % denom_ != 0) throw InvalidInput("point is not on an integral facet parallel");
    return num / denom_;
}

FacetParallelForm facetParallelForm(const RationalCone &sigma, const RationalCone &facet)
{
    for (const ConeFacet &cf : facets(sigma)) {
        // Both sides carry canonical V-representations, so facet identity is
        // plain equality.
        if (facet.rays() != cf.cone.rays() || facet.linealityBasis() != cf.cone.linealityBasis()) continue;

        // Normalize to be primitive on the lattice span(sigma) ∩ Z^n.
        IntMat lattice;
        if (sigma.spanEquations().empty())
            lattice = IntMat::identity(sigma.ambientDim());
        else
            lattice = kernelBasis(IntMat::fromRows(sigma.spanEquations()));
        Int g = 0;
        for (int j = 0; j < lattice.cols(); ++j) g = gcdInt(g, dotII(cf.normal, lattice.column(j)));
        if (g == 0) g = 1;
        return FacetParallelForm(cf.normal, g);
    }
    throw NotAFacet();
}

} // namespace embmon
