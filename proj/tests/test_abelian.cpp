#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace embmon;
using namespace embmon::testsupport;

namespace {

IntMat mat(std::vector<VecInt> rows)
{
    return IntMat::fromRows(rows);
}

bool isDiagonalChain(const IntMat &D)
{
    for (int i = 0; i < D.rows(); ++i)
        for (int j = 0; j < D.cols(); ++j)
            if (i != j && D.at(i, j) != 0) return false;
    int nmin = std::min(D.rows(), D.cols());
    for (int i = 0; i + 1 < nmin; ++i) {
        if (D.at(i, i) < 0) return false;
        if (D.at(i + 1, i + 1) != 0 && D.at(i, i) != 0 && D.at(i + 1, i + 1) % D.at(i, i) != 0) return false;
        if (D.at(i, i) == 0 && D.at(i + 1, i + 1) != 0) return false;
    }
    return true;
}

Int detOfUnimodular(const IntMat &M)
{
    // Fraction-free expansion is fine at test sizes.
    const int n = M.rows();
    if (n == 0) return 1;
    if (n == 1) return M.at(0, 0);
    Int det = 0;
    for (int j = 0; j < n; ++j) {
        if (M.at(0, j) == 0) continue;
        IntMat sub(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = M.at(r, c);
            }
        }
        Int term = M.at(0, j) * detOfUnimodular(sub);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

} // namespace

TEST_CASE("smith normal form on the pinned examples")
{
    // gcd-of-minors oracle for the 2x2 case: d1 = gcd of entries,
    // d1*d2 = gcd of 2x2 minors.
    SmithForm s = smithNormalForm(mat({{2, 0}, {0, 3}}));
    CHECK(s.D.at(0, 0) == 1);
    CHECK(s.D.at(1, 1) == 6);
    CHECK(s.U.mul(mat({{2, 0}, {0, 3}})).mul(s.V) == s.D);

    SmithForm id = smithNormalForm(IntMat::identity(2));
    CHECK(id.D == IntMat::identity(2));

    SmithForm z = smithNormalForm(mat({{0}}));
    CHECK(z.D.at(0, 0) == 0);
}

TEST_CASE("smith normal form properties on random matrices")
{
    Rng rng(20240811);
    for (int iter = 0; iter < 250; ++iter) {
        int m = randInt(rng, 1, 5), n = randInt(rng, 1, 5);
        IntMat M(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) M.at(i, j) = randInt(rng, -9, 9);
        SmithForm s = smithNormalForm(M);
        CHECK(s.U.mul(M).mul(s.V) == s.D);
        CHECK(isDiagonalChain(s.D));
        Int du = detOfUnimodular(s.U);
        Int dv = detOfUnimodular(s.V);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
    }
}

TEST_CASE("hermite column basis is canonical")
{
    // Full lattice gets the identity basis.
    IntMat H = hermiteColumnBasis(mat({{1, 0, 3}, {0, 1, 5}}));
    CHECK(H == IntMat::identity(2));
    // 2Z + 3Z = Z.
    CHECK(hermiteColumnBasis(mat({{2, 3}})).at(0, 0) == 1);
    // columns (2,0),(0,3) span the same lattice as columns (2,3),(0,3)
    CHECK(sameColumnLattice(mat({{2, 0}, {0, 3}}), mat({{2, 0}, {3, 3}})));
}

TEST_CASE("group elements reduce torsion and obey arithmetic")
{
    AbelianGroup K(1, {4});
    GroupElement a = K.element({1}, {3});
    GroupElement b = K.element({2}, {2});
    CHECK((a + b) == K.element({3}, {1}));
    CHECK(K.element({0}, {2}).scalarMultiply(2) == K.zero());
    CHECK(K.element({3}, {1}).freePart() == VecInt{3});
    CHECK((-a) == K.element({-1}, {1}));

    AbelianGroup other(1, {5});
    CHECK_THROWS_AS((void)(a + other.element({1}, {0})), GroupMismatch);
}

TEST_CASE("canonicalize presentations (SNF oracle)")
{
    // Z^2 / <(2,0)> = Z + Z/2.
    CanonicalizedPresentation c = canonicalize(Presentation{2, {{2, 0}}});
    CHECK(c.group.rank() == 1);
    CHECK(c.group.torsionOrders() == VecInt{2});

    // Z^3 / <(1,1,1)> = Z^2.
    CanonicalizedPresentation c2 = canonicalize(Presentation{3, {{1, 1, 1}}});
    CHECK(c2.group.rank() == 2);
    CHECK(c2.group.torsionOrders().empty());

    // Already canonical group maps to itself.
    AbelianGroup K(1, {4});
    CanonicalizedGroup cg = canonicalize(K);
    CHECK(cg.group == K);
}

TEST_CASE("canonicalize round trips on random groups")
{
    Rng rng(77001);
    for (int iter = 0; iter < 200; ++iter) {
        AbelianGroup g = randomGroup(rng, 2, 2, 9);
        CanonicalizedGroup c = canonicalize(g);
        CHECK(c.group.isCanonical());
        for (int rep = 0; rep < 3; ++rep) {
            GroupElement x = randomElement(rng, g, -6, 6);
            CHECK(c.isoInv.apply(c.iso.apply(x)) == x);
            GroupElement y = randomElement(rng, c.group, -6, 6);
            CHECK(c.iso.apply(c.isoInv.apply(y)) == y);
        }
    }
}

TEST_CASE("homKernel on the intersection example")
{
    // Z^3 -> Z, x -> (2x1 + 5x2) - 3x3; kernel = lin((1,2,4),(0,3,5)).
    AbelianGroup Z3(3, {});
    AbelianGroup Z(1, {});
    GroupHom h(Z3, Z, {Z.element({2}, {}), Z.element({5}, {}), Z.element({-3}, {})});
    std::vector<GroupElement> ker = homKernel(h);
    REQUIRE(ker.size() == 2);

    std::vector<VecInt> got, expect = {{1, 2, 4}, {0, 3, 5}};
    for (const GroupElement &g : ker) got.push_back(g.freePart());
    CHECK(sameColumnLattice(IntMat::fromColumns(got), IntMat::fromColumns(expect)));

    // Trivial cases.
    GroupHom zmap(AbelianGroup(2, {}), Z, {Z.zero(), Z.zero()});
    CHECK(homKernel(zmap).size() == 2);
    GroupHom idmap(Z, Z, {Z.element({1}, {})});
    CHECK(homKernel(idmap).empty());
}

TEST_CASE("homKernel generators map to zero and certify membership")
{
    Rng rng(9443);
    for (int iter = 0; iter < 200; ++iter) {
        AbelianGroup dom = randomGroup(rng);
        AbelianGroup cod = randomGroup(rng);
        std::vector<GroupElement> images;
        bool ok = true;
        for (int i = 0; i < dom.generatorCount(); ++i) {
            GroupElement img = randomElement(rng, cod, -4, 4);
            if (i >= dom.rank()) {
                // force well-definedness: use an image killed by the order
                Int a = dom.torsionOrders()[i - dom.rank()];
                GroupElement killed = cod.zero();
                for (int k = 0; k < cod.torsionCount(); ++k) {
                    Int ord = cod.torsionOrders()[k];
                    Int step = ord / gcdInt(ord, a);
                    VecInt t(cod.torsionCount(), Int(0));
                    t[k] = step * randInt(rng, 0, 3);
                    killed = killed + cod.element(VecInt(cod.rank(), Int(0)), t);
                }
                img = killed;
            }
            images.push_back(img);
        }
        GroupHom h(dom, cod, images);
        (void)ok;
        std::vector<GroupElement> ker = homKernel(h);
        for (const GroupElement &g : ker) CHECK(h.apply(g).isZero());

        // random combinations stay in the kernel
        Subgroup K(dom, ker);
        GroupElement combo = dom.zero();
        for (const GroupElement &g : ker) combo = combo + g.scalarMultiply(randInt(rng, -3, 3));
        CHECK(h.apply(combo).isZero());
        CHECK(K.contains(combo));

        // an element with nonzero image is never inside the kernel subgroup
        GroupElement probe = randomElement(rng, dom, -4, 4);
        if (!h.apply(probe).isZero()) CHECK(!K.contains(probe));
    }
}

TEST_CASE("subgroup intersection: pinned and brute-forced")
{
    AbelianGroup Z(1, {});
    Subgroup twoZ(Z, {Z.element({2}, {})});
    Subgroup threeZ(Z, {Z.element({3}, {})});
    Subgroup six = subgroupIntersection(twoZ, threeZ);
    CHECK(six.contains(Z.element({6}, {})));
    CHECK(!six.contains(Z.element({2}, {})));
    CHECK(!six.contains(Z.element({3}, {})));

    Subgroup same = subgroupIntersection(twoZ, twoZ);
    CHECK(same.contains(Z.element({2}, {})));

    Subgroup zero(Z, {});
    CHECK(subgroupIntersection(twoZ, zero).generators().empty());
}

TEST_CASE("subgroup intersection vs brute force on small groups")
{
    Rng rng(55100);
    for (int iter = 0; iter < 200; ++iter) {
        AbelianGroup g = randomGroup(rng, 2, 1, 4);
        std::vector<GroupElement> ga, gb;
        for (int i = 0, n = randInt(rng, 1, 2); i < n; ++i) ga.push_back(randomElement(rng, g, -3, 3));
        for (int i = 0, n = randInt(rng, 1, 2); i < n; ++i) gb.push_back(randomElement(rng, g, -3, 3));
        Subgroup A(g, ga), B(g, gb);
        Subgroup I = subgroupIntersection(A, B);

        for (const GroupElement &x : I.generators()) {
            CHECK(A.contains(x));
            CHECK(B.contains(x));
        }
        // brute force on a small window
        for (int rep = 0; rep < 6; ++rep) {
            GroupElement x = randomElement(rng, g, -4, 4);
            CHECK(I.contains(x) == (A.contains(x) && B.contains(x)));
        }
    }
}

TEST_CASE("subgroup coordinates give identity on full lattices")
{
    AbelianGroup Z3(3, {});
    Subgroup full(Z3, Z3.canonicalGenerators());
    SubgroupCoordinates sc(full);
    CHECK(sc.group().rank() == 3);
    GroupElement x = Z3.element({4, -1, 106}, {});
    auto c = sc.coordinates(x);
    REQUIRE(c.has_value());
    CHECK(c->freePart() == VecInt{4, -1, 106});

    // index-2 sublattice of Z
    AbelianGroup Z(1, {});
    SubgroupCoordinates sub(Subgroup(Z, {Z.element({2}, {})}));
    CHECK(sub.group().rank() == 1);
    CHECK(!sub.coordinates(Z.element({1}, {})).has_value());
    auto c2 = sub.coordinates(Z.element({6}, {}));
    REQUIRE(c2.has_value());
    CHECK(c2->freePart() == VecInt{3});
}

TEST_CASE("subgroup coordinates round trip with torsion")
{
    Rng rng(31337);
    for (int iter = 0; iter < 120; ++iter) {
        AbelianGroup g = randomGroup(rng, 2, 2, 6);
        std::vector<GroupElement> gens;
        for (int i = 0, n = randInt(rng, 1, 3); i < n; ++i) gens.push_back(randomElement(rng, g, -3, 3));
        Subgroup H(g, gens);
        SubgroupCoordinates sc(H);
        // every generator has coordinates, and they invert
        for (const GroupElement &x : gens) {
            auto c = sc.coordinates(x);
            REQUIRE(c.has_value());
            CHECK(sc.toAmbient(*c) == x);
        }
        // random subgroup elements round trip too
        GroupElement s = g.zero();
        for (const GroupElement &x : gens) s = s + x.scalarMultiply(randInt(rng, -2, 2));
        auto c = sc.coordinates(s);
        REQUIRE(c.has_value());
        CHECK(sc.toAmbient(*c) == s);
    }
}
