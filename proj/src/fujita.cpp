#include "embmon/fujita.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <thread>

namespace embmon {

std::vector<GroupElement> minimalRayElements(const EmbeddedMonoid &S, const RationalCone &sigma,
                                             const RationalCone &facet, const InMonoidOptions &opts)
{
    const AbelianGroup &K = S.group();
    std::vector<GroupElement> out;

    for (const VecInt &ray : facet.rays()) {
        if (!sigma.contains(ray)) throw NotAFacet("facet ray outside the parent cone");

        // Some generator sits on the ray, bounding the search for the minimal
        // free part.
        Int cap = 0;
        for (const GroupElement &g : S.generators()) {
            const VecInt &f = g.freePart();
            if (isZeroVec(f)) continue;
            Int mult = 0;
            bool onRay = true;
            for (std::size_t c = 0; c < f.size(); ++c) {
                if (ray[c] == 0) {
                    if (f[c] != 0) onRay = false;
                } else {
                    Int m = f[c] / ray[c];
                    if (m * ray[c] != f[c] || m <= 0 || (mult != 0 && m != mult)) onRay = false;
                    mult = m;
                }
                if (!onRay) break;
            }
            if (onRay && (cap == 0 || mult < cap)) cap = mult;
        }
        assert(cap > 0);

        for (Int t = 1; t <= cap; ++t) {
            std::vector<GroupElement> found;
            for (const VecInt &tor : K.torsionElements()) {
                GroupElement cand = K.element(scaleVec(t, ray), tor);
                if (inMonoid(S, cand, opts)) found.push_back(cand);
            }
            if (!found.empty()) {
                out.insert(out.end(), found.begin(), found.end());
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const GroupElement &a, const GroupElement &b) { return lexLess(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FujitaSetting buildFujitaSetting(const EmbeddedMonoid &S, const GroupElement &kx, Int dimension,
                                 const InMonoidOptions &opts)
{
    if (kx.group() != S.group()) throw GroupMismatch();
    if (!isSpanning(S)) throw NotSpanning();

    FujitaSetting st;
    st.monoid = S;
    st.kx = kx;
    st.dimension = std::move(dimension);
    st.sigma = S.cone();
    if (!st.sigma.isPointed()) throw InvalidInput("cone of the monoid has lineality");
    assert(st.sigma.spanEquations().empty()); // spanning monoids have full-dimensional cones

    // A conductor element: 0 exactly when S is saturated, otherwise the
    // canonical interior-point multiple.
    GroupElement zero = S.group().zero();
    st.conductor = inConductorIdeal(S, zero, opts) ? zero : conductorPoint(S, opts);

    VecInt target = subVec(st.conductor.freePart(), kx.freePart()); // (-kx + C)^0
    bool first = true;
    for (const ConeFacet &cf : facets(st.sigma)) {
        FujitaFacetData fd;
        fd.facet = cf.cone;
        fd.form = facetParallelForm(st.sigma, cf.cone);
        fd.minimalRayElements = minimalRayElements(S, st.sigma, cf.cone, opts);
        fd.alpha = fd.form.levelOf(target);
        if (first || fd.alpha > st.nu) st.nu = fd.alpha;
        first = false;
        st.facets.push_back(std::move(fd));
    }
    if (first) st.nu = 0; // no facets: sigma is the whole space
    return st;
}

std::vector<GroupElement> candidateClasses(const FujitaSetting &setting, int facetIndex, const Int &k)
{
    if (k < 1) throw InvalidInput("facet parallel level must be >= 1");
    const FujitaFacetData &fd = setting.facets.at(facetIndex);
    const AbelianGroup &K = setting.monoid.group();
    const int n = K.rank();

    // Rays of sigma away from the facet, pushed to their level-k points.
    std::vector<VecRat> corners;
    for (const VecInt &ray : setting.sigma.rays()) {
        Int level = dotII(fd.form.normal(), ray);
        if (level == 0) continue;
        assert(level > 0);
        Rat scale = Rat(k * fd.form.denominator()) / Rat(level);
        VecRat p(n);
        for (int c = 0; c < n; ++c) p[c] = scale * Rat(ray[c]);
        corners.push_back(std::move(p));
    }
    if (corners.empty()) return {};

    std::vector<VecInt> shifts;
    for (const GroupElement &m : fd.minimalRayElements) shifts.push_back(m.freePart());
    std::sort(shifts.begin(), shifts.end(), [](const VecInt &a, const VecInt &b) { return lexLess(a, b); });
    shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());

    // x = sum beta_j corner_j + sum alpha_i shift_i, sum beta = 1,
    // beta >= 0, 0 <= alpha <= 1, x in sigma (closed); then keep the strict
    // interior points.
    const int tB = static_cast<int>(corners.size());
    const int tA = static_cast<int>(shifts.size());
    LpProblem lp;
    lp.n = n + tB + tA;
    for (int c = 0; c < n; ++c) {
        VecRat row(lp.n, Rat(0));
        row[c] = 1;
        for (int j = 0; j < tB; ++j) row[n + j] = -corners[j][c];
        for (int i = 0; i < tA; ++i) row[n + tB + i] = -Rat(shifts[i][c]);
        lp.addEq(std::move(row), Rat(0));
    }
    {
        VecRat row(lp.n, Rat(0));
        for (int j = 0; j < tB; ++j) row[n + j] = 1;
        lp.addEq(std::move(row), Rat(1));
    }
    for (int j = 0; j < tB; ++j) lp.markNonnegative(n + j);
    for (int i = 0; i < tA; ++i) {
        lp.markNonnegative(n + tB + i);
        lp.addBound(n + tB + i, Rel::Le, Rat(1));
    }
    for (const VecInt &f : setting.sigma.facetNormals()) {
        VecRat row(lp.n, Rat(0));
        for (int c = 0; c < n; ++c) row[c] = Rat(f[c]);
        lp.addGe(std::move(row), Rat(0));
    }

    std::vector<GroupElement> out;
    for (const VecInt &x : projectedLatticePoints(lp, n)) {
        if (!setting.sigma.relativeInteriorContains(x)) continue;
        assert(fd.form.levelOf(x) == k);
        for (const VecInt &tor : K.torsionElements()) out.push_back(K.element(x, tor));
    }
    std::sort(out.begin(), out.end(), [](const GroupElement &a, const GroupElement &b) { return lexLess(a, b); });
    return out;
}

FujitaReport runFujitaLoops(const FujitaSetting &setting, const InMonoidOptions &opts, int threads)
{
    FujitaReport report;
    report.setting = setting;

    std::vector<std::map<Int, std::vector<GroupElement>>> gpCache(setting.facets.size());

    for (std::size_t i = 0; i < setting.facets.size(); ++i) {
        const Int &alpha = setting.facets[i].alpha;
        for (Int m = setting.dimension + 1; m <= setting.nu - 1; ++m) {
            Int kMax = fdivQ(alpha - 1, m);
            for (Int k = 1; k <= kMax; ++k) {
                auto it = gpCache[i].find(k);
                if (it == gpCache[i].end())
                    it = gpCache[i].emplace(k, candidateClasses(setting, static_cast<int>(i), k)).first;
                const std::vector<GroupElement> &gp = it->second;

                FujitaCell cell{static_cast<int>(i) + 1, m, k, static_cast<int>(gp.size())};
                report.loopTrace.push_back(cell);

                std::vector<char> fails(gp.size(), 0);
                auto testOne = [&](std::size_t idx) {
                    GroupElement tested = setting.kx + gp[idx].scalarMultiply(m);
                    if (!inMonoid(setting.monoid, tested, opts)) fails[idx] = 1;
                };
                if (threads <= 1 || gp.size() < 4) {
                    for (std::size_t idx = 0; idx < gp.size(); ++idx) testOne(idx);
                } else {
                    std::atomic<std::size_t> next{0};
                    auto worker = [&] {
                        for (;;) {
                            std::size_t idx = next.fetch_add(1);
                            if (idx >= gp.size()) return;
                            testOne(idx);
                        }
                    };
                    std::vector<std::thread> pool;
                    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
                    for (std::thread &t : pool) t.join();
                }
                if (!report.witness) {
                    for (std::size_t idx = 0; idx < gp.size(); ++idx) {
                        if (!fails[idx]) continue;
                        FujitaWitness w;
                        w.facetIndex = cell.facetIndex;
                        w.m = m;
                        w.k = k;
                        w.ampleClass = gp[idx];
                        w.tested = setting.kx + gp[idx].scalarMultiply(m);
                        w.freePartInCone = setting.sigma.contains(w.tested.freePart());
                        report.witness = std::move(w);
                        break;
                    }
                }
            }
        }
    }

    report.verdict = !report.witness.has_value();
    return report;
}

FujitaReport fujitaBpf(const MoriDreamSpace &X, const GroupElement &kx, const InMonoidOptions &opts, int threads)
{
    if (kx.group() != X.classGroup()) throw GroupMismatch();
    if (!X.isGorenstein(kx)) {
        FujitaReport report;
        report.verdict = false;
        report.reason = "notGorenstein";
        return report;
    }
    const EmbeddedMonoid &S = X.bpfMonoid();
    auto kxPic = X.picard().coords.coordinates(kx);
    assert(kxPic.has_value());
    FujitaSetting setting = buildFujitaSetting(S, *kxPic, X.dimension(), opts);
    return runFujitaLoops(setting, opts, threads);
}

} // namespace embmon
