#include "embmon/polyhedron.hpp"

#include <algorithm>
#include <cassert>

namespace embmon {

void RationalPolyhedron::addInequality(VecInt a, Rat b)
{
    if (static_cast<int>(a.size()) != dim_) throw InvalidInput("constraint has wrong dimension");
    ineqs_.push_back({std::move(a), std::move(b)});
}

void RationalPolyhedron::addEquation(VecInt a, Rat b)
{
    if (static_cast<int>(a.size()) != dim_) throw InvalidInput("constraint has wrong dimension");
    eqs_.push_back({std::move(a), std::move(b)});
}

bool RationalPolyhedron::contains(const VecRat &x) const
{
    for (const AffineConstraint &c : ineqs_)
        if (dotIR(c.a, x) < c.b) return false;
    for (const AffineConstraint &c : eqs_)
        if (dotIR(c.a, x) != c.b) return false;
    return true;
}

bool RationalPolyhedron::contains(const VecInt &x) const
{
    return contains(toRatVec(x));
}

LpProblem RationalPolyhedron::toLp() const
{
    LpProblem lp;
    lp.n = dim_;
    for (const AffineConstraint &c : ineqs_) lp.addGe(toRatVec(c.a), c.b);
    for (const AffineConstraint &c : eqs_) lp.addEq(toRatVec(c.a), c.b);
    return lp;
}

bool isEmpty(const RationalPolyhedron &p)
{
    return !lpFeasible(p.toLp()).feasible();
}

bool isBounded(const RationalPolyhedron &p)
{
    LpProblem lp = p.toLp();
    for (int i = 0; i < p.ambientDim(); ++i) {
        VecRat obj(p.ambientDim(), Rat(0));
        obj[i] = 1;
        LpResult mx = lpMaximize(lp, obj);
        if (mx.status == LpStatus::Infeasible) return true; // empty set is bounded
        if (mx.status == LpStatus::Unbounded) return false;
        if (lpMinimize(lp, obj).status == LpStatus::Unbounded) return false;
    }
    return true;
}

namespace {

void enumerateRec(LpProblem &lp, const std::vector<VecRat> &forms, std::size_t level, VecInt &prefix,
                  std::vector<VecInt> &out)
{
    if (level == forms.size()) {
        out.push_back(prefix);
        return;
    }
    const VecRat &obj = forms[level];

    LpResult lo = lpMinimize(lp, obj);
    if (lo.status == LpStatus::Infeasible) return;
    if (lo.status == LpStatus::Unbounded) throw UnboundedPolyhedron();
    LpResult hi = lpMaximize(lp, obj);
    if (hi.status == LpStatus::Unbounded) throw UnboundedPolyhedron();

    Int from = ceilRat(lo.value);
    Int to = floorRat(hi.value);
    for (Int v = from; v <= to; ++v) {
        lp.addEq(obj, Rat(v));
        prefix[level] = v;
        enumerateRec(lp, forms, level + 1, prefix, out);
        lp.rows.pop_back();
    }
}

} // namespace

std::vector<VecInt> formLatticePoints(const LpProblem &base, const std::vector<VecRat> &forms)
{
    if (forms.empty()) {
        // No coordinates to enumerate; the single empty point exists iff the
        // auxiliary system is feasible.
        if (lpFeasible(base).feasible()) return {VecInt{}};
        return {};
    }
    LpProblem lp = base;
    VecInt prefix(forms.size(), Int(0));
    std::vector<VecInt> out;
    enumerateRec(lp, forms, 0, prefix, out);
    return out;
}

std::vector<VecInt> projectedLatticePoints(const LpProblem &base, int dim)
{
    std::vector<VecRat> forms;
    for (int k = 0; k < dim; ++k) {
        VecRat f(base.n, Rat(0));
        f[k] = 1;
        forms.push_back(std::move(f));
    }
    return formLatticePoints(base, forms);
}

std::vector<VecInt> latticePoints(const RationalPolyhedron &p)
{
    if (!isBounded(p)) throw UnboundedPolyhedron();
    return projectedLatticePoints(p.toLp(), p.ambientDim());
}

RationalPolyhedron zonotope(int dim, const std::vector<VecInt> &generators)
{
    std::vector<VecInt> gens;
    for (const VecInt &g : generators) {
        if (static_cast<int>(g.size()) != dim) throw InvalidInput("zonotope generator has wrong dimension");
        if (!isZeroVec(g)) gens.push_back(g);
    }

    RationalPolyhedron out(dim);

    // Equations cut out the linear span of the generators.
    IntMat complement;
    if (gens.empty())
        complement = IntMat::identity(dim);
    else
        complement = kernelBasis(IntMat::fromRows(gens));
    for (int j = 0; j < complement.cols(); ++j) {
        VecInt e = complement.column(j);
        primitivize(e);
        out.addEquation(e, Rat(0));
    }
    if (gens.empty()) return out;

    IntMat spanBasis = kernelBasis(complement.transposed());
    const int s = spanBasis.cols();
    if (s == 0) return out;

    auto supportValue = [&](const VecInt &n) {
        Rat h = 0;
        for (const VecInt &g : gens) {
            Int v = dotII(n, g);
            if (v > 0) h += Rat(v);
        }
        return h;
    };

    // Facet directions of a zonotope are the normals (within the span) of
    // hyperplanes spanned by generator subsets.
    std::vector<VecInt> normals;
    std::vector<int> comb(s - 1);
    const int m = static_cast<int>(gens.size());
    if (s == 1) {
        VecInt n = spanBasis.column(0);
        primitivize(n);
        normals.push_back(n);
    } else {
        for (int i = 0; i < s - 1; ++i) comb[i] = i;
        for (;;) {
            // normal in span coordinates: kernel of (subset . basis) value matrix
            IntMat M(s - 1, s);
            for (int r = 0; r < s - 1; ++r)
                for (int c = 0; c < s; ++c) M.at(r, c) = dotII(gens[comb[r]], spanBasis.column(c));
            IntMat ker = kernelBasis(M);
            if (ker.cols() == 1) {
                VecInt y = ker.column(0);
                VecInt n(dim, Int(0));
                for (int c = 0; c < s; ++c) n = addVec(n, scaleVec(y[c], spanBasis.column(c)));
                primitivize(n);
                normals.push_back(n);
            }
            // next combination
            int i = s - 2;
            while (i >= 0 && comb[i] == m - (s - 1) + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int k = i + 1; k < s - 1; ++k) comb[k] = comb[k - 1] + 1;
        }
    }

    std::sort(normals.begin(), normals.end(), [](const VecInt &a, const VecInt &b) { return lexLess(a, b); });
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());

    for (const VecInt &n : normals) {
        VecInt neg = negVec(n);
        out.addInequality(neg, -supportValue(n)); // n.x <= h(n)
        out.addInequality(n, -supportValue(neg)); // n.x >= -h(-n)
    }
    return out;
}

std::vector<VecInt> zonotopeLatticePoints(int dim, const std::vector<VecInt> &generators)
{
    std::vector<VecInt> gens;
    for (const VecInt &g : generators)
        if (!isZeroVec(g)) gens.push_back(g);

    // Enumerate coordinate values of x = sum alpha_i g_i over the unit box.
    const int m = static_cast<int>(gens.size());
    LpProblem lp;
    lp.n = m;
    lp.markAllNonnegative();
    for (int i = 0; i < m; ++i) lp.addBound(i, Rel::Le, Rat(1));
    std::vector<VecRat> forms;
    for (int k = 0; k < dim; ++k) {
        VecRat f(m);
        for (int i = 0; i < m; ++i) f[i] = Rat(gens[i][k]);
        forms.push_back(std::move(f));
    }
    return formLatticePoints(lp, forms);
}

} // namespace embmon
