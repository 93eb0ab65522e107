#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "embmon/io.hpp"
#include "support.hpp"

using namespace embmon;
using namespace embmon::testsupport;

namespace {

std::shared_ptr<MoriDreamSpace> loadFixture(const std::string &name)
{
    InputDocument doc = loadInput(std::string(EMBMON_FIXTURES) + "/" + name);
    REQUIRE(doc.mds);
    return doc.mds;
}

VecInt sortedAlphas(const FujitaSetting &st)
{
    VecInt a = st.alphas();
    std::sort(a.begin(), a.end());
    return a;
}

// Crafted non-saturated spanning monoids in Z^2 used by the brute-force
// equivalence suite.
EmbeddedMonoid craftedOrthant()
{
    AbelianGroup K(2, {});
    return EmbeddedMonoid(K, {K.element({2, 0}, {}), K.element({3, 0}, {}), K.element({0, 2}, {}),
                              K.element({0, 3}, {}), K.element({1, 1}, {})});
}

EmbeddedMonoid craftedSkew()
{
    AbelianGroup K(2, {});
    return EmbeddedMonoid(K, {K.element({1, 0}, {}), K.element({1, 2}, {}), K.element({2, 1}, {})});
}

// Membership cache: the suite reuses two fixed monoids, and the tested
// classes overlap heavily across random draws.
bool cachedMember(int monoidIdx, const EmbeddedMonoid &S, const GroupElement &w)
{
    static std::map<std::pair<int, std::pair<Int, Int>>, bool> memo;
    auto key = std::make_pair(monoidIdx, std::make_pair(w.freePart()[0], w.freePart()[1]));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool r = inMonoid(S, w);
    memo.emplace(key, r);
    return r;
}

// Exhaustive check of the conjecture over the candidate window the lemmas
// reduce to: all lattice classes in the strict cone interior with facet level
// at most nu, multipliers up to nu + 2.
bool bruteForceFujita(const FujitaSetting &st, int monoidIdx)
{
    const AbelianGroup &K = st.monoid.group();
    REQUIRE(K.rank() == 2);
    REQUIRE(K.torsionCount() == 0);

    // enumerate interior lattice classes with all facet levels <= nu
    LpProblem lp;
    lp.n = 2;
    for (const FujitaFacetData &fd : st.facets) {
        VecRat row(2);
        row[0] = Rat(fd.form.normal()[0], fd.form.denominator());
        row[1] = Rat(fd.form.normal()[1], fd.form.denominator());
        lp.addGe(row, Rat(0));
        lp.addLe(row, Rat(st.nu));
    }
    for (const VecInt &x : projectedLatticePoints(lp, 2)) {
        if (!st.sigma.relativeInteriorContains(x)) continue;
        GroupElement L = K.element(x, {});
        for (Int m = st.dimension + 1; m <= st.nu + 2; ++m) {
            if (!cachedMember(monoidIdx, st.monoid, st.kx + L.scalarMultiply(m))) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("setting of the first Fujita example")
{
    auto X = loadFixture("fujita1.mds.json");
    GroupElement kx = X->classGroup().element({-4, 1, -106}, {});
    REQUIRE(X->isGorenstein(kx));

    auto kxPic = X->picard().coords.coordinates(kx);
    REQUIRE(kxPic.has_value());
    FujitaSetting st = buildFujitaSetting(X->bpfMonoid(), *kxPic, X->dimension());

    CHECK(st.conductor.isZero());
    CHECK(sortedAlphas(st) == VecInt{-90, -1, 4});
    CHECK(st.nu == 4);
    CHECK(st.dimension == 6);

    FujitaReport report = runFujitaLoops(st);
    CHECK(report.verdict);
    CHECK(report.loopTrace.empty()); // dim+1 = 7 > nu-1 = 3
    CHECK(!report.witness.has_value());

    FujitaReport full = fujitaBpf(*X, kx);
    CHECK(full.verdict);
    CHECK(full.loopTrace.empty());
}

TEST_CASE("setting and failure witness of the second Fujita example")
{
    auto X = loadFixture("fujita2.mds.json");
    GroupElement kx = X->classGroup().element({4, 0}, {});
    REQUIRE(X->isGorenstein(kx));

    auto kxPic = X->picard().coords.coordinates(kx);
    REQUIRE(kxPic.has_value());
    FujitaSetting st = buildFujitaSetting(X->bpfMonoid(), *kxPic, X->dimension());

    CHECK(st.conductor.isZero());
    CHECK(sortedAlphas(st) == VecInt{-4, 8});
    CHECK(st.nu == 8);

    // the candidate set at the failing cell is exactly {[1,3]}
    int failingFacet = -1;
    for (std::size_t i = 0; i < st.facets.size(); ++i)
        if (st.facets[i].alpha == 8) failingFacet = static_cast<int>(i);
    REQUIRE(failingFacet >= 0);
    std::vector<GroupElement> gp = candidateClasses(st, failingFacet, Int(1));
    REQUIRE(gp.size() == 1);
    CHECK(gp[0].freePart() == VecInt{1, 3});

    FujitaReport report = fujitaBpf(*X, kx);
    CHECK(!report.verdict);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->m == 7);
    CHECK(report.witness->k == 1);
    CHECK(report.witness->ampleClass.freePart() == VecInt{1, 3});
    CHECK(report.witness->tested.freePart() == VecInt{11, 21});
    CHECK(!report.witness->freePartInCone);
    CHECK(!inMonoid(report.setting->monoid, report.witness->tested));
    // every executed cell appears in the trace
    CHECK(report.loopTrace.size() == 1);
    CHECK(report.loopTrace[0].facetIndex == report.witness->facetIndex);
    CHECK(report.loopTrace[0].candidateCount == 1);

    // threaded run gives the identical witness
    FujitaReport threaded = fujitaBpf(*X, kx, {}, 4);
    CHECK(!threaded.verdict);
    CHECK(threaded.witness->tested.freePart() == VecInt{11, 21});
}

TEST_CASE("non-Gorenstein spaces fail early")
{
    AbelianGroup cl(1, {});
    std::vector<GroupElement> degrees{cl.element({1}, {}), cl.element({2}, {})};
    MoriDreamSpace X(cl, degrees, {}, cl.element({2}, {}));
    FujitaReport report = fujitaBpf(X, X.canonicalClass());
    CHECK(!report.verdict);
    CHECK(report.reason == "notGorenstein");
    CHECK(!report.setting.has_value());
}

TEST_CASE("minimal ray elements and candidate levels")
{
    auto X = loadFixture("fujita2.mds.json");
    const EmbeddedMonoid &S = X->bpfMonoid();
    const RationalCone &sigma = S.cone();

    for (const ConeFacet &cf : facets(sigma)) {
        std::vector<GroupElement> ms = minimalRayElements(S, sigma, cf.cone);
        REQUIRE(ms.size() == 1);
        // the generators themselves sit on the rays
        bool isGen = false;
        for (const GroupElement &g : S.generators()) isGen = isGen || (g == ms[0]);
        CHECK(isGen);
    }

    // facet-level identities for the candidate construction
    GroupElement kx = X->picard().coords.coordinates(X->classGroup().element({4, 0}, {})).value();
    FujitaSetting st = buildFujitaSetting(S, kx, X->dimension());
    for (std::size_t i = 0; i < st.facets.size(); ++i) {
        for (Int k = 1; k <= 3; ++k) {
            for (const GroupElement &L : candidateClasses(st, static_cast<int>(i), k)) {
                CHECK(st.sigma.relativeInteriorContains(L.freePart()));
                CHECK(st.facets[i].form.levelOf(L.freePart()) == k);
            }
        }
    }
}

TEST_CASE("fujita verdict equals exhaustive search on crafted monoids")
{
    std::vector<EmbeddedMonoid> monoids{craftedOrthant(), craftedSkew()};
    for (const EmbeddedMonoid &S : monoids) CHECK(isSpanning(S));
    // an element of the saturation that is missing from the monoid certifies
    // non-saturatedness
    CHECK(inSaturation(monoids[0], monoids[0].group().element({1, 0}, {})));
    CHECK(!inMonoid(monoids[0], monoids[0].group().element({1, 0}, {})));
    CHECK(inSaturation(monoids[1], monoids[1].group().element({1, 1}, {})));
    CHECK(!inMonoid(monoids[1], monoids[1].group().element({1, 1}, {})));

    Rng rng(20260808);
    int done = 0;
    std::map<std::pair<int, std::pair<Int, Int>>, FujitaSetting> settings;
    while (done < 200) {
        int which = randInt(rng, 0, 1);
        const EmbeddedMonoid &S = monoids[which];
        const AbelianGroup &K = S.group();
        GroupElement kx = K.element({Int(randInt(rng, -8, 0)), Int(randInt(rng, -8, 0))}, {});
        Int dim = randInt(rng, 1, 4);

        auto key = std::make_pair(which, std::make_pair(kx.freePart()[0], kx.freePart()[1]));
        auto found = settings.find(key);
        if (found == settings.end()) found = settings.emplace(key, buildFujitaSetting(S, kx, dim)).first;
        FujitaSetting st = found->second;
        st.dimension = dim;

        if (st.nu > 8) continue; // keep the exhaustive window small
        FujitaReport report = runFujitaLoops(st);
        CHECK(report.verdict == bruteForceFujita(st, which));
        // internal consistency: verdict is true iff no traced cell failed
        CHECK(report.verdict == !report.witness.has_value());
        ++done;
    }
}

TEST_CASE("torsion candidate classes are tested per torsion part")
{
    // S = <(1;0),(1;1)> in Z + Z/2 is spanning and not saturated; every level
    // carries both torsion variants of the candidate class.
    AbelianGroup K(1, {2});
    EmbeddedMonoid S(K, {K.element({1}, {0}), K.element({1}, {1})});
    CHECK(!inMonoid(S, K.element({0}, {1})));
    CHECK(inSaturation(S, K.element({0}, {1})));

    GroupElement kx = K.element({-3}, {1});
    FujitaSetting st = buildFujitaSetting(S, kx, Int(1));
    CHECK(st.conductor == K.element({1}, {0}));
    CHECK(st.nu == 4);
    std::vector<GroupElement> gp = candidateClasses(st, 0, Int(1));
    REQUIRE(gp.size() == 2); // free part (1) with both torsion parts

    FujitaReport report = runFujitaLoops(st);
    CHECK(!report.verdict);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->m == 2);
    CHECK(report.witness->tested.freePart() == VecInt{-1});
    CHECK(!report.witness->freePartInCone);
}

TEST_CASE("saturated monoids with empty loops pass")
{
    AbelianGroup K(2, {});
    EmbeddedMonoid S(K, {K.element({1, 0}, {}), K.element({0, 1}, {})});
    GroupElement kx = K.element({-2, -2}, {});
    FujitaSetting st = buildFujitaSetting(S, kx, Int(1));
    CHECK(st.conductor.isZero()); // saturated
    CHECK(st.nu == 2);
    FujitaReport report = runFujitaLoops(st);
    CHECK(report.verdict);
    CHECK(report.loopTrace.empty());
}
