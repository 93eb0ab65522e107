#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace embmon;
using namespace embmon::testsupport;

namespace {

EmbeddedMonoid runningExample()
{
    AbelianGroup K(1, {4});
    return EmbeddedMonoid(K, {K.element({0}, {2}), K.element({1}, {1}), K.element({3}, {2})});
}

EmbeddedMonoid numerical(const std::vector<long> &gens)
{
    AbelianGroup Z(1, {});
    std::vector<GroupElement> gs;
    for (long g : gens) gs.push_back(Z.element({Int(g)}, {}));
    return EmbeddedMonoid(Z, gs);
}

std::vector<GroupElement> sortedElems(std::vector<GroupElement> v)
{
    std::sort(v.begin(), v.end(), [](const GroupElement &a, const GroupElement &b) { return lexLess(a, b); });
    return v;
}

} // namespace

TEST_CASE("membership in the running torsion example")
{
    EmbeddedMonoid S = runningExample();
    const AbelianGroup &K = S.group();

    InMonoidTrace trace;
    auto coeffs = monoidCoefficients(S, K.element({3}, {1}), {}, &trace);
    REQUIRE(coeffs.has_value());
    CHECK(*coeffs == VecInt{1, 3, 0});

    // The enumerated coefficient polytope matches the worked computation.
    std::vector<VecInt> expect;
    for (int a = 0; a <= 4; ++a) {
        expect.push_back({Int(a), 3, 0});
        expect.push_back({Int(a), 0, 1});
    }
    auto lex = [](std::vector<VecInt> v) {
        std::sort(v.begin(), v.end(), [](const VecInt &a, const VecInt &b) { return lexLess(a, b); });
        return v;
    };
    CHECK(lex(trace.latticePoints) == lex(expect));

    CHECK(inMonoid(S, K.zero()));
    CHECK(monoidCoefficients(S, K.zero())->size() == 3);
    CHECK(!inMonoid(S, K.element({1}, {0})));

    // cap modes agree
    InMonoidOptions product;
    product.capMode = CapMode::Product;
    CHECK(inMonoid(S, K.element({3}, {1}), product));

    AbelianGroup other(1, {});
    CHECK_THROWS_AS(inMonoid(S, other.element({1}, {})), GroupMismatch);
}

TEST_CASE("membership agrees with brute force on random pointed monoids")
{
    Rng rng(160901);
    int done = 0;
    while (done < 220) {
        AbelianGroup g = randomGroup(rng, 2, 2, 6);
        EmbeddedMonoid S = randomPointedMonoid(rng, g, 4, 4);
        GroupElement w = randomElement(rng, g, 0, 9);
        bool expect = bruteForceInMonoid(S, w);
        auto coeffs = monoidCoefficients(S, w);
        CHECK(coeffs.has_value() == expect);
        if (coeffs) {
            GroupElement acc = g.zero();
            for (std::size_t i = 0; i < coeffs->size(); ++i)
                acc = acc + S.generators()[i].scalarMultiply((*coeffs)[i]);
            CHECK(acc == w);
        }
        // the cap mode cannot change the verdict
        InMonoidOptions product;
        product.capMode = CapMode::Product;
        CHECK(inMonoid(S, w, product) == expect);
        ++done;
    }
}

TEST_CASE("membership handles cones with lineality")
{
    AbelianGroup K(1, {2});
    EmbeddedMonoid S(K, {K.element({1}, {0}), K.element({-1}, {1})});
    // (0;1) = s1 + s2
    auto c = monoidCoefficients(S, K.element({0}, {1}));
    REQUIRE(c.has_value());
    GroupElement acc = K.zero();
    for (std::size_t i = 0; i < c->size(); ++i) {
        CHECK((*c)[i] >= 0);
        acc = acc + S.generators()[i].scalarMultiply((*c)[i]);
    }
    CHECK(acc == K.element({0}, {1}));

    // the full group is reachable here: lin(S) = Z + Z/2
    CHECK(inMonoid(S, K.element({-5}, {1})));
    CHECK(inMonoid(S, K.element({7}, {0})));

    // but a proper sublattice is not
    AbelianGroup Z(1, {});
    EmbeddedMonoid T(Z, {Z.element({2}, {}), Z.element({-2}, {})});
    CHECK(inMonoid(T, Z.element({-4}, {})));
    CHECK(!inMonoid(T, Z.element({3}, {})));
}

TEST_CASE("membership on random signed monoids (lineality allowed)")
{
    Rng rng(424213);
    int done = 0;
    while (done < 200) {
        AbelianGroup g = randomGroup(rng, 2, 1, 4);
        std::vector<GroupElement> gens;
        for (int i = 0, n = randInt(rng, 1, 3); i < n; ++i) gens.push_back(randomElement(rng, g, -2, 2));
        EmbeddedMonoid S(g, gens);

        // a small nonnegative combination must be found, and any witness has
        // to reproduce its element
        GroupElement w = randomCombination(rng, S, 2);
        auto coeffs = monoidCoefficients(S, w);
        REQUIRE(coeffs.has_value());
        GroupElement acc = g.zero();
        for (std::size_t i = 0; i < coeffs->size(); ++i) {
            CHECK((*coeffs)[i] >= 0);
            acc = acc + S.generators()[i].scalarMultiply((*coeffs)[i]);
        }
        CHECK(acc == w);

        // probes: whenever the algorithm says no, a bounded search must not
        // find a representation either
        GroupElement probe = randomElement(rng, g, -3, 3);
        if (!inMonoid(S, probe)) {
            bool found = false;
            std::vector<Int> x(gens.size(), Int(0));
            for (;;) {
                GroupElement sum = g.zero();
                for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + gens[i].scalarMultiply(x[i]);
                if (sum == probe) {
                    found = true;
                    break;
                }
                std::size_t i = 0;
                while (i < gens.size()) {
                    x[i] += 1;
                    if (x[i] <= 8) break;
                    x[i] = 0;
                    ++i;
                }
                if (i == gens.size()) break;
            }
            CHECK(!found);
        }
        ++done;
    }
}

TEST_CASE("intersection reproduces the numerical-semigroup example")
{
    EmbeddedMonoid S1 = numerical({2, 5});
    EmbeddedMonoid S2 = numerical({3});
    IntersectionResult r = generatorsIntMonoid(S1, S2);

    std::vector<Int> raw;
    for (const GroupElement &g : r.rawGenerators) raw.push_back(g.freePart()[0]);
    std::sort(raw.begin(), raw.end());
    CHECK(raw == VecInt{0, 6, 9, 12, 15, 21});

    std::vector<Int> red;
    for (const GroupElement &g : r.monoid.generators()) red.push_back(g.freePart()[0]);
    CHECK(red == VecInt{6, 9});

    // brute-force semigroup oracle on 0..30
    AbelianGroup Z(1, {});
    for (long v = 0; v <= 30; ++v) {
        bool expect = bruteForceInMonoid(S1, Z.element({Int(v)}, {})) &&
                      bruteForceInMonoid(S2, Z.element({Int(v)}, {}));
        CHECK(inMonoid(r.monoid, Z.element({Int(v)}, {})) == expect);
    }

    AbelianGroup K(1, {4});
    CHECK_THROWS_AS(generatorsIntMonoid(S1, runningExample()), AmbientMismatch);
}

TEST_CASE("intersection soundness and completeness on random monoids")
{
    Rng rng(2038);
    int done = 0;
    while (done < 200) {
        AbelianGroup g = randomGroup(rng, 2, 1, 4);
        EmbeddedMonoid S1 = randomPointedMonoid(rng, g, 3, 3);
        EmbeddedMonoid S2 = randomPointedMonoid(rng, g, 3, 3);
        IntersectionResult r = generatorsIntMonoid(S1, S2);

        for (const GroupElement &gen : r.monoid.generators()) {
            CHECK(inMonoid(S1, gen));
            CHECK(inMonoid(S2, gen));
        }
        for (int rep = 0; rep < 4; ++rep) {
            GroupElement w = randomCombination(rng, S1, 2);
            if (inMonoid(S2, w)) CHECK(inMonoid(r.monoid, w));
        }
        // S ∩ S has the same membership as S on test points
        IntersectionResult same = generatorsIntMonoid(S1, S1);
        for (int rep = 0; rep < 3; ++rep) {
            GroupElement w = randomElement(rng, g, 0, 5);
            CHECK(inMonoid(same.monoid, w) == inMonoid(S1, w));
        }
        ++done;
    }
}

TEST_CASE("module generators of the saturation")
{
    EmbeddedMonoid S = runningExample();
    std::vector<GroupElement> M = moduleGenerators(S);
    std::vector<GroupElement> expect;
    const AbelianGroup &K = S.group();
    for (int a = 0; a < 4; ++a) {
        expect.push_back(K.element({0}, {Int(a)}));
        expect.push_back(K.element({1}, {Int(a)}));
    }
    CHECK(sortedElems(M) == sortedElems(expect));

    EmbeddedMonoid one = numerical({1});
    std::vector<GroupElement> M1 = moduleGenerators(one);
    CHECK(M1.size() == 2); // {0, 1}

    AbelianGroup Z2(2, {});
    EmbeddedMonoid axes(Z2, {Z2.element({1, 0}, {}), Z2.element({0, 1}, {})});
    CHECK(moduleGenerators(axes).size() == 4); // unit square
}

TEST_CASE("saturation membership via the cone")
{
    EmbeddedMonoid S = runningExample();
    const AbelianGroup &K = S.group();
    CHECK(inSaturation(S, K.element({0}, {1}))); // 2w = s1
    CHECK(inSaturation(S, K.element({3}, {1}))); // already in S
    CHECK(!inSaturation(numerical({2, 5}), AbelianGroup(1, {}).element({-1}, {})));
}

TEST_CASE("saturation matches brute force on random monoids")
{
    Rng rng(75);
    for (int iter = 0; iter < 200; ++iter) {
        AbelianGroup g = randomGroup(rng, 2, 1, 4);
        EmbeddedMonoid S = randomPointedMonoid(rng, g, 3, 3);
        GroupElement w = randomElement(rng, g, 0, 4);
        // brute force over small multiples is sound: a hit certifies membership
        if (bruteForceInSaturation(S, w, 16)) CHECK(inSaturation(S, w));
        // and cone membership of the free part is what the answer must equal
        if (!inSaturation(S, w)) CHECK(!bruteForceInSaturation(S, w, 16));
    }
}

TEST_CASE("conductor ideal membership on the running example")
{
    EmbeddedMonoid S = runningExample();
    const AbelianGroup &K = S.group();
    CHECK(inConductorIdeal(S, K.element({3}, {1})));
    CHECK(!inConductorIdeal(S, K.element({1}, {0})));
    CHECK(!inConductorIdeal(S, K.element({2}, {0})));

    // saturated monoid: 0 lies in the conductor ideal
    CHECK(inConductorIdeal(numerical({1}), AbelianGroup(1, {}).zero()));

    // threaded evaluation agrees
    CHECK(inConductorIdeal(S, K.element({3}, {1}), {}, 4));
    CHECK(!inConductorIdeal(S, K.element({2}, {0}), {}, 4));
}

TEST_CASE("conductor points of the pinned examples")
{
    EmbeddedMonoid S = runningExample();
    GroupElement c = conductorPoint(S);
    CHECK(c == S.group().element({3}, {0}));

    AbelianGroup Z2(2, {});
    EmbeddedMonoid axes(Z2, {Z2.element({1, 0}, {}), Z2.element({0, 1}, {})});
    CHECK(conductorPoint(axes) == Z2.element({1, 1}, {}));

    GroupElement c25 = conductorPoint(numerical({2, 5}));
    CHECK(c25.freePart() == VecInt{4});

    CHECK_THROWS_AS(conductorPoint(numerical({2, 4})), NotSpanning);
}

TEST_CASE("conductor point validity on random spanning monoids")
{
    Rng rng(99120);
    int done = 0;
    while (done < 200) {
        AbelianGroup g = randomGroup(rng, 2, 1, 4);
        EmbeddedMonoid S = randomPointedMonoid(rng, g, 4, 3);
        if (!isSpanning(S)) continue;
        GroupElement c = conductorPoint(S);
        for (const GroupElement &m : moduleGenerators(S)) CHECK(inMonoid(S, c + m));

        // c + saturation stays inside S on random saturation elements
        int found = 0;
        for (int rep = 0; rep < 200 && found < 50; ++rep) {
            GroupElement w = randomElement(rng, g, 0, 6);
            if (!inSaturation(S, w)) continue;
            ++found;
            CHECK(inMonoid(S, c + w));
        }
        ++done;
    }
}

TEST_CASE("saturations multiply through intersections")
{
    // Lemma: the saturation of S1 ∩ S2 is the intersection of the saturations.
    Rng rng(414243);
    int done = 0;
    while (done < 200) {
        AbelianGroup g = randomGroup(rng, 2, 1, 4);
        EmbeddedMonoid S1 = randomPointedMonoid(rng, g, 3, 3);
        EmbeddedMonoid S2 = randomPointedMonoid(rng, g, 3, 3);
        IntersectionResult r = generatorsIntMonoid(S1, S2);

        Subgroup K1(g, S1.generators());
        Subgroup K2(g, S2.generators());
        for (int rep = 0; rep < 5; ++rep) {
            GroupElement w = randomElement(rng, g, 0, 5);
            if (!K1.contains(w) || !K2.contains(w)) continue; // w must lie in K1 ∩ K2
            CHECK(inSaturation(r.monoid, w) == (inSaturation(S1, w) && inSaturation(S2, w)));
        }
        ++done;
    }
}

TEST_CASE("conductors of intersections")
{
    // Lemma: c(S1) ∩ c(S2) is contained in the conductor ideal of S1 ∩ S2.
    Rng rng(515253);
    int done = 0, witnesses = 0;
    while (done < 60) {
        AbelianGroup g(1, {});
        EmbeddedMonoid S1 = randomPointedMonoid(rng, g, 3, 4);
        EmbeddedMonoid S2 = randomPointedMonoid(rng, g, 3, 4);
        if (!isSpanning(S1) || !isSpanning(S2)) continue;
        bool nonzero1 = false, nonzero2 = false;
        for (const GroupElement &x : S1.generators()) nonzero1 = nonzero1 || !x.isZero();
        for (const GroupElement &x : S2.generators()) nonzero2 = nonzero2 || !x.isZero();
        if (!nonzero1 || !nonzero2) continue;
        IntersectionResult r = generatorsIntMonoid(S1, S2);
        for (long v = 0; v <= 12; ++v) {
            GroupElement w = g.element({Int(v)}, {});
            if (inConductorIdeal(S1, w) && inConductorIdeal(S2, w)) {
                CHECK(inConductorIdeal(r.monoid, w));
                ++witnesses;
            }
        }
        ++done;
    }
    CHECK(witnesses > 20); // the property was exercised, not vacuous
}

TEST_CASE("intersections of spanning monoids span when cone interiors meet")
{
    Rng rng(616263);
    int done = 0;
    while (done < 200) {
        AbelianGroup g = randomGroup(rng, 2, 1, 4);
        EmbeddedMonoid S1 = randomPointedMonoid(rng, g, 3, 3);
        EmbeddedMonoid S2 = randomPointedMonoid(rng, g, 3, 3);
        if (!isSpanning(S1) || !isSpanning(S2)) continue;

        // relative interiors must meet nontrivially
        auto interiorMeet = [&]() {
            const RationalCone &c1 = S1.cone();
            const RationalCone &c2 = S2.cone();
            if (c1.isZeroCone() || c2.isZeroCone()) return false;
            std::vector<VecInt> g1 = c1.generatorsWithLineality();
            std::vector<VecInt> g2 = c2.generatorsWithLineality();
            LpProblem lp;
            lp.n = static_cast<int>(g1.size() + g2.size()) + 1;
            const int t = lp.n - 1;
            for (int k = 0; k < g.rank(); ++k) {
                VecRat row(lp.n, Rat(0));
                for (std::size_t i = 0; i < g1.size(); ++i) row[i] = Rat(g1[i][k]);
                for (std::size_t j = 0; j < g2.size(); ++j) row[g1.size() + j] = -Rat(g2[j][k]);
                lp.addEq(std::move(row), Rat(0));
            }
            for (int i = 0; i < t; ++i) {
                VecRat row(lp.n, Rat(0));
                row[i] = 1;
                row[t] = -1;
                lp.addGe(std::move(row), Rat(0));
            }
            lp.addBound(t, Rel::Le, Rat(1));
            VecRat obj(lp.n, Rat(0));
            obj[t] = 1;
            LpResult res = lpMaximize(lp, obj);
            return res.optimal() && res.value > 0;
        };
        if (!interiorMeet()) continue;

        IntersectionResult r = generatorsIntMonoid(S1, S2);
        Subgroup K12 = subgroupIntersection(Subgroup(g, S1.generators()), Subgroup(g, S2.generators()));
        Subgroup span(g, r.monoid.generators());
        for (const GroupElement &b : K12.generators()) CHECK(span.contains(b));
        ++done;
    }
}

TEST_CASE("spanning test")
{
    CHECK(isSpanning(numerical({2, 5})));
    CHECK(!isSpanning(numerical({2, 4})));
    CHECK(isSpanning(runningExample()));
    CHECK(!isSpanning(EmbeddedMonoid(AbelianGroup(1, {}), {})));
}
