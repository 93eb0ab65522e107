#include "embmon/monoid.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <thread>

namespace embmon {

EmbeddedMonoid::EmbeddedMonoid(AbelianGroup group, std::vector<GroupElement> generators)
    : group_(std::move(group)), generators_(std::move(generators))
{
    for (const GroupElement &g : generators_)
        if (g.group() != group_) throw GroupMismatch("monoid generator outside the ambient group");
}

std::vector<VecInt> EmbeddedMonoid::generatorFreeParts() const
{
    std::vector<VecInt> parts;
    parts.reserve(generators_.size());
    for (const GroupElement &g : generators_) parts.push_back(g.freePart());
    return parts;
}

const RationalCone &EmbeddedMonoid::cone() const
{
    if (!cone_) {
        auto c = std::make_shared<RationalCone>(RationalCone::fromGenerators(group_.rank(), generatorFreeParts()));
        std::shared_ptr<RationalCone> expected;
        std::atomic_compare_exchange_strong(&cone_, &expected, c);
    }
    return *std::atomic_load(&cone_);
}

namespace {

// Nonnegative rational combination test: v in cone(gens)?
bool inGeneratedCone(const std::vector<VecInt> &gens, const VecInt &v)
{
    const int dim = static_cast<int>(v.size());
    LpProblem lp;
    lp.n = static_cast<int>(gens.size());
    for (int k = 0; k < dim; ++k) {
        VecRat row(lp.n);
        for (int i = 0; i < lp.n; ++i) row[i] = Rat(gens[i][k]);
        lp.addEq(std::move(row), Rat(v[k]));
    }
    lp.markAllNonnegative();
    return lpFeasible(lp).feasible();
}

// A nontrivial nonnegative dependency among the nonzero vectors certifies a
// lineality direction.
bool conePointed(const std::vector<VecInt> &freeParts)
{
    std::vector<VecInt> nonzero;
    for (const VecInt &v : freeParts)
        if (!isZeroVec(v)) nonzero.push_back(v);
    if (nonzero.empty()) return true;

    const int dim = static_cast<int>(nonzero[0].size());
    LpProblem lp;
    lp.n = static_cast<int>(nonzero.size());
    for (int k = 0; k < dim; ++k) {
        VecRat row(lp.n);
        for (int i = 0; i < lp.n; ++i) row[i] = Rat(nonzero[i][k]);
        lp.addEq(std::move(row), Rat(0));
    }
    VecRat obj(lp.n, Rat(1));
    lp.markAllNonnegative();
    for (int i = 0; i < lp.n; ++i) lp.addBound(i, Rel::Le, Rat(1));
    LpResult r = lpMaximize(lp, obj);
    return !(r.optimal() && r.value > 0);
}

Int capFor(const AbelianGroup &K, const GroupElement &g, CapMode mode)
{
    Int b = 1;
    bool any = false;
    for (int k = 0; k < K.torsionCount(); ++k) {
        if (g.torsionPart()[k] == 0) continue;
        any = true;
        if (mode == CapMode::Product)
            b *= K.torsionOrders()[k];
        else
            b = lcmInt(b, K.torsionOrders()[k]);
    }
    assert(any); // zero generators are excluded beforehand
    (void)any;
    return b;
}

bool torsionMatches(const AbelianGroup &K, const std::vector<const GroupElement *> &gens, const VecInt &coeffs,
                    const GroupElement &w)
{
    VecInt acc(K.torsionCount(), Int(0));
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (int k = 0; k < K.torsionCount(); ++k) acc[k] += coeffs[i] * gens[i]->torsionPart()[k];
    for (int k = 0; k < K.torsionCount(); ++k)
        if (modReduce(acc[k], K.torsionOrders()[k]) != w.torsionPart()[k]) return false;
    return true;
}

// Pointed-cone membership: enumerate the coefficient polytope
// B = (Q^0)^{-1}(w^0) ∩ Q^t_{>=0}, capped on the coordinates of generators
// with zero free part, then match the torsion part.
std::optional<VecInt> pointedMembership(const EmbeddedMonoid &S, const std::vector<int> &active,
                                        const GroupElement &w, const InMonoidOptions &opts, InMonoidTrace *trace)
{
    const AbelianGroup &K = S.group();
    const int t = static_cast<int>(active.size());

    std::vector<const GroupElement *> gens(t);
    for (int i = 0; i < t; ++i) gens[i] = &S.generators()[active[i]];

    LpProblem lp;
    lp.n = t;
    for (int k = 0; k < K.rank(); ++k) {
        VecRat row(t);
        for (int i = 0; i < t; ++i) row[i] = Rat(gens[i]->freePart()[k]);
        lp.addEq(std::move(row), Rat(w.freePart()[k]));
    }
    lp.markAllNonnegative();
    for (int i = 0; i < t; ++i)
        if (gens[i]->freePartIsZero()) lp.addBound(i, Rel::Le, Rat(capFor(K, *gens[i], opts.capMode)));

    std::vector<VecInt> points = projectedLatticePoints(lp, t);
    if (trace) {
        trace->latticePoints = points;
        trace->pointedPath = true;
    }

    for (const VecInt &x : points) {
        if (!torsionMatches(K, gens, x, w)) continue;
        VecInt full(S.generators().size(), Int(0));
        for (int i = 0; i < t; ++i) full[active[i]] = x[i];
        return full;
    }
    return std::nullopt;
}

// General case: cone(S) has lineality. The generators whose free part lies in
// the lineality space generate a full subgroup of K (a positive integer
// dependency with zero value exists), so membership reduces to a bounded
// enumeration over the remaining generators plus a subgroup test.
std::optional<VecInt> linealityMembership(const EmbeddedMonoid &S, const std::vector<int> &active,
                                          const GroupElement &w, InMonoidTrace *trace)
{
    const AbelianGroup &K = S.group();
    std::vector<VecInt> freeParts;
    for (int a : active) freeParts.push_back(S.generators()[a].freePart());

    std::vector<int> linIdx, restIdx;
    for (std::size_t i = 0; i < active.size(); ++i) {
        if (inGeneratedCone(freeParts, negVec(freeParts[i])))
            linIdx.push_back(active[i]);
        else
            restIdx.push_back(active[i]);
    }

    std::vector<GroupElement> linGens;
    std::vector<VecInt> linFree;
    for (int a : linIdx) {
        linGens.push_back(S.generators()[a]);
        linFree.push_back(S.generators()[a].freePart());
    }
    Subgroup H(K, linGens);

    // Equations: the rest-part combination must equal w^0 modulo the lineality
    // space, expressed through an integer basis of its orthogonal complement.
    IntMat comp = kernelBasis(IntMat::fromRows(linFree));
    const int t = static_cast<int>(restIdx.size());
    LpProblem lp;
    lp.n = t;
    for (int j = 0; j < comp.cols(); ++j) {
        VecInt c = comp.column(j);
        VecRat row(t);
        for (int i = 0; i < t; ++i) row[i] = Rat(dotII(c, S.generators()[restIdx[i]].freePart()));
        lp.addEq(std::move(row), Rat(dotII(c, w.freePart())));
    }
    lp.markAllNonnegative();

    std::vector<VecInt> points = projectedLatticePoints(lp, t);
    if (trace) {
        trace->latticePoints = points;
        trace->pointedPath = false;
    }

    // Positive dependency with zero group value, used to shift negative
    // subgroup coefficients into the nonnegative range.
    VecInt dep;
    GroupElement depValue = K.zero();
    {
        LpProblem dlp;
        dlp.n = static_cast<int>(linIdx.size());
        const int dim = K.rank();
        for (int k = 0; k < dim; ++k) {
            VecRat row(dlp.n);
            for (int i = 0; i < dlp.n; ++i) row[i] = Rat(linFree[i][k]);
            dlp.addEq(std::move(row), Rat(0));
        }
        dlp.markAllNonnegative();
        for (int i = 0; i < dlp.n; ++i) dlp.addBound(i, Rel::Ge, Rat(1));
        LpResult r = lpMinimize(dlp, VecRat(dlp.n, Rat(1)));
        assert(r.optimal());
        Int mult = 1;
        for (const Rat &q : r.x) mult = lcmInt(mult, q.get_den());
        dep.resize(dlp.n);
        for (int i = 0; i < dlp.n; ++i) dep[i] = r.x[i].get_num() * (mult / r.x[i].get_den());
        for (int i = 0; i < dlp.n; ++i) depValue = depValue + linGens[i].scalarMultiply(dep[i]);
        Int e = depValue.order();
        assert(e != 0);
        for (Int &d : dep) d *= e; // now sum dep_i * linGens_i = 0 in K
    }

    for (const VecInt &x : points) {
        GroupElement rest = w;
        for (int i = 0; i < t; ++i) rest = rest - S.generators()[restIdx[i]].scalarMultiply(x[i]);
        auto c = H.solve(rest);
        if (!c) continue;
        // Shift by the zero-value dependency until all coefficients are >= 0.
        Int shift = 0;
        for (std::size_t i = 0; i < c->size(); ++i) {
            if ((*c)[i] >= 0) continue;
            Int need = cdivQ(-(*c)[i], dep[i]);
            shift = std::max(shift, need);
        }
        VecInt full(S.generators().size(), Int(0));
        for (int i = 0; i < t; ++i) full[restIdx[i]] = x[i];
        for (std::size_t i = 0; i < linIdx.size(); ++i) full[linIdx[i]] = (*c)[i] + shift * dep[i];
        return full;
    }
    return std::nullopt;
}

} // namespace

std::optional<VecInt> monoidCoefficients(const EmbeddedMonoid &S, const GroupElement &w,
                                         const InMonoidOptions &opts, InMonoidTrace *trace)
{
    if (w.group() != S.group()) throw GroupMismatch();

    std::vector<int> active;
    for (std::size_t i = 0; i < S.generators().size(); ++i)
        if (!S.generators()[i].isZero()) active.push_back(static_cast<int>(i));

    if (w.isZero()) return VecInt(S.generators().size(), Int(0));
    if (active.empty()) return std::nullopt;

    std::vector<VecInt> freeParts;
    for (int a : active) freeParts.push_back(S.generators()[a].freePart());

    if (conePointed(freeParts)) return pointedMembership(S, active, w, opts, trace);
    return linealityMembership(S, active, w, trace);
}

bool inMonoid(const EmbeddedMonoid &S, const GroupElement &w, const InMonoidOptions &opts)
{
    return monoidCoefficients(S, w, opts).has_value();
}

namespace {

std::vector<GroupElement> sortedUniqueElements(std::vector<GroupElement> v)
{
    std::sort(v.begin(), v.end(), [](const GroupElement &a, const GroupElement &b) { return lexLess(a, b); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Int freeNorm(const GroupElement &g)
{
    Int n = 0;
    for (const Int &x : g.freePart()) n += abs(x);
    return n;
}

} // namespace

IntersectionResult generatorsIntMonoid(const EmbeddedMonoid &S1, const EmbeddedMonoid &S2,
                                       const InMonoidOptions &opts)
{
    if (S1.group() != S2.group()) throw AmbientMismatch();
    const AbelianGroup &K = S1.group();
    const int n1 = static_cast<int>(S1.generators().size());
    const int n2 = static_cast<int>(S2.generators().size());

    // Kernel of (x, y) -> sum x_i s1_i - sum y_j s2_j, a lattice in Z^(n1+n2).
    std::vector<GroupElement> images;
    for (const GroupElement &g : S1.generators()) images.push_back(g);
    for (const GroupElement &g : S2.generators()) images.push_back(g.negate());
    GroupHom beta(AbelianGroup(n1 + n2, {}), K, images);
    std::vector<GroupElement> kernel = homKernel(beta);

    const int rho = static_cast<int>(kernel.size());
    std::vector<VecInt> kernelCols;
    for (const GroupElement &z : kernel) kernelCols.push_back(z.freePart());

    // Monoid Z^rho ∩ preimage of the nonnegative orthant; its generators are
    // the lattice points of the zonotope over the extreme rays (Gordan).
    std::vector<VecInt> rayIneqs;
    for (int c = 0; c < n1 + n2; ++c) {
        VecInt row(rho);
        for (int k = 0; k < rho; ++k) row[k] = kernelCols[k][c];
        rayIneqs.push_back(std::move(row));
    }
    ConeVRep cone = doubleDescription(rho, rayIneqs, {});
    assert(cone.lineality.empty());

    std::vector<VecInt> points = zonotopeLatticePoints(rho, cone.rays);

    std::vector<GroupElement> raw;
    for (const VecInt &u : points) {
        GroupElement g = K.zero();
        for (int k = 0; k < rho; ++k)
            for (int i = 0; i < n1; ++i)
                g = g + S1.generators()[i].scalarMultiply(u[k] * kernelCols[k][i]);
        raw.push_back(g);
    }
    std::sort(raw.begin(), raw.end(), [](const GroupElement &a, const GroupElement &b) { return lexLess(a, b); });

    // Reduction pass 1: drop zero and any element that is the sum of two
    // strictly earlier elements (earlier in a fixed total order). Strictness
    // makes the sieve sound by induction: a dropped element is a combination
    // of strictly smaller ones, which are themselves combinations of kept
    // elements.
    std::vector<GroupElement> ordered;
    for (const GroupElement &g : sortedUniqueElements(raw))
        if (!g.isZero()) ordered.push_back(g);
    std::sort(ordered.begin(), ordered.end(), [](const GroupElement &a, const GroupElement &b) {
        Int na = freeNorm(a), nb = freeNorm(b);
        if (na != nb) return na < nb;
        return lexLess(a, b);
    });
    std::vector<GroupElement> kept;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        bool redundant = false;
        for (std::size_t a = 0; a < i && !redundant; ++a) {
            GroupElement need = ordered[i] - ordered[a];
            auto it = std::lower_bound(ordered.begin(), ordered.begin() + i, need,
                                       [](const GroupElement &x, const GroupElement &y) {
                                           Int nx = freeNorm(x), ny = freeNorm(y);
                                           if (nx != ny) return nx < ny;
                                           return lexLess(x, y);
                                       });
            if (it != ordered.begin() + i && *it == need) redundant = true;
        }
        if (!redundant) kept.push_back(ordered[i]);
    }

    // Reduction pass 2: full membership test against the remaining elements,
    // scanning in decreasing norm order.
    std::vector<GroupElement> byNorm = kept;
    std::sort(byNorm.begin(), byNorm.end(), [](const GroupElement &a, const GroupElement &b) {
        Int na = freeNorm(a), nb = freeNorm(b);
        if (na != nb) return na > nb;
        return lexLess(b, a);
    });
    std::vector<GroupElement> reduced = kept;
    for (const GroupElement &g : byNorm) {
        std::vector<GroupElement> others;
        for (const GroupElement &h : reduced)
            if (!(h == g)) others.push_back(h);
        if (others.size() == reduced.size()) continue; // already dropped
        if (inMonoid(EmbeddedMonoid(K, others), g, opts)) reduced = others;
    }

    IntersectionResult out;
    out.rawGenerators = std::move(raw);
    out.monoid = EmbeddedMonoid(K, sortedUniqueElements(std::move(reduced)));
    return out;
}

std::vector<GroupElement> moduleGenerators(const EmbeddedMonoid &S)
{
    const AbelianGroup &K = S.group();
    const RationalCone &sigma = S.cone();

    // One element of S per extreme ray, with minimal free part on that ray;
    // fall back to the full generator list when the cone is not pointed.
    std::vector<VecInt> chosen;
    if (sigma.isPointed()) {
        for (const VecInt &ray : sigma.rays()) {
            const VecInt *best = nullptr;
            Int bestMult = 0;
            for (const GroupElement &g : S.generators()) {
                const VecInt &f = g.freePart();
                if (isZeroVec(f)) continue;
                // f = mult * ray?
                Int mult = 0;
                bool onRay = true;
                for (std::size_t k = 0; k < f.size(); ++k) {
                    if (ray[k] == 0) {
                        if (f[k] != 0) onRay = false;
                    } else {
                        Int m = f[k] / ray[k];
                        if (m * ray[k] != f[k] || m <= 0 || (mult != 0 && m != mult)) onRay = false;
                        mult = m;
                    }
                    if (!onRay) break;
                }
                if (!onRay) continue;
                if (!best || mult < bestMult) {
                    best = &f;
                    bestMult = mult;
                }
            }
            if (!best) {
                chosen = S.generatorFreeParts();
                break;
            }
            chosen.push_back(*best);
        }
    } else {
        chosen = S.generatorFreeParts();
    }

    std::vector<VecInt> zpts = zonotopeLatticePoints(K.rank(), chosen);
    std::vector<GroupElement> out;
    for (const VecInt &p : zpts)
        for (const VecInt &tor : K.torsionElements()) out.push_back(K.element(p, tor));
    return sortedUniqueElements(std::move(out));
}

bool inSaturation(const EmbeddedMonoid &S, const GroupElement &w)
{
    if (w.group() != S.group()) throw GroupMismatch();
    return inGeneratedCone(S.generatorFreeParts(), w.freePart());
}

bool inConductorIdeal(const EmbeddedMonoid &S, const GroupElement &w, const InMonoidOptions &opts, int threads)
{
    if (w.group() != S.group()) throw GroupMismatch();
    std::vector<GroupElement> M = moduleGenerators(S);

    if (threads <= 1 || M.size() < 4) {
        for (const GroupElement &m : M)
            if (!inMonoid(S, w + m, opts)) return false;
        return true;
    }

    std::atomic<bool> ok{true};
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= M.size() || !ok.load()) return;
            if (!inMonoid(S, w + M[i], opts)) ok.store(false);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread &t : pool) t.join();
    return ok.load();
}

GroupElement conductorBasePoint(const EmbeddedMonoid &S)
{
    const AbelianGroup &K = S.group();
    const RationalCone &sigma = S.cone();
    const std::vector<VecInt> &lin = sigma.linealityBasis();

    // Functionals vanishing on the lineality space detect the ray class of a
    // free part: f lies over the ray iff f = m*ray + l with m > 0, l in the
    // lineality span.
    IntMat comp;
    if (!lin.empty()) comp = kernelBasis(IntMat::fromRows(lin));

    auto classMultiple = [&](const VecInt &f, const VecInt &ray) -> std::optional<Rat> {
        Rat m;
        if (lin.empty()) {
            int k0 = -1;
            for (std::size_t k = 0; k < ray.size(); ++k)
                if (ray[k] != 0) {
                    k0 = static_cast<int>(k);
                    break;
                }
            if (k0 < 0) return std::nullopt;
            m = Rat(f[k0]) / Rat(ray[k0]);
            if (m <= 0) return std::nullopt;
            for (std::size_t k = 0; k < ray.size(); ++k)
                if (Rat(f[k]) != m * Rat(ray[k])) return std::nullopt;
            return m;
        }
        int c0 = -1;
        for (int j = 0; j < comp.cols(); ++j)
            if (dotII(comp.column(j), ray) != 0) {
                c0 = j;
                break;
            }
        if (c0 < 0) return std::nullopt;
        m = Rat(dotII(comp.column(c0), f)) / Rat(dotII(comp.column(c0), ray));
        if (m <= 0) return std::nullopt;
        VecRat rest(f.size());
        for (std::size_t k = 0; k < f.size(); ++k) rest[k] = Rat(f[k]) - m * Rat(ray[k]);
        IntMat linCols = IntMat::fromColumns(lin);
        if (!solveRational(linCols, rest)) return std::nullopt;
        return m;
    };

    VecInt sum(K.rank(), Int(0));
    for (const VecInt &ray : sigma.rays()) {
        const VecInt *best = nullptr;
        Rat bestMult;
        for (const GroupElement &g : S.generators()) {
            const VecInt &f = g.freePart();
            if (isZeroVec(f)) continue;
            auto m = classMultiple(f, ray);
            if (!m) continue;
            if (!best || *m < bestMult || (*m == bestMult && lexLess(f, *best))) {
                best = &f;
                bestMult = *m;
            }
        }
        assert(best); // every extreme ray class of cone(S) carries a generator
        sum = addVec(sum, *best);
    }
    return K.element(sum, VecInt(K.torsionCount(), Int(0)));
}

GroupElement conductorPoint(const EmbeddedMonoid &S, const InMonoidOptions &opts)
{
    if (!isSpanning(S)) throw NotSpanning();
    GroupElement w = conductorBasePoint(S);
    for (Int r = 1;; ++r) {
        GroupElement c = w.scalarMultiply(r);
        if (inConductorIdeal(S, c, opts)) return c;
        if (r > 1000000) throw Error("conductor search did not terminate");
    }
}

bool isSpanning(const EmbeddedMonoid &S)
{
    Subgroup span(S.group(), S.generators());
    for (const GroupElement &g : S.group().canonicalGenerators())
        if (!span.contains(g)) return false;
    return true;
}

} // namespace embmon
