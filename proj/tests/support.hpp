#pragma once

#include <random>

#include "embmon/fujita.hpp"
#include "embmon/monoid.hpp"

namespace embmon::testsupport {

using Rng = std::mt19937_64;

inline int randInt(Rng &rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline AbelianGroup randomGroup(Rng &rng, int maxRank = 2, int maxTorsion = 2, int maxOrder = 6)
{
    int rank = randInt(rng, 0, maxRank);
    int tc = randInt(rng, 0, maxTorsion);
    if (rank == 0 && tc == 0) rank = 1;
    VecInt torsion;
    for (int i = 0; i < tc; ++i) torsion.push_back(randInt(rng, 2, maxOrder));
    return AbelianGroup(rank, torsion);
}

/// Random monoid with nonnegative free parts (pointed cone by construction).
inline EmbeddedMonoid randomPointedMonoid(Rng &rng, const AbelianGroup &g, int maxGens = 4, int maxCoord = 5)
{
    int t = randInt(rng, 1, maxGens);
    std::vector<GroupElement> gens;
    for (int i = 0; i < t; ++i) {
        VecInt f(g.rank()), tor(g.torsionCount());
        bool zero = true;
        for (int k = 0; k < g.rank(); ++k) {
            f[k] = randInt(rng, 0, maxCoord);
            if (f[k] != 0) zero = false;
        }
        for (int k = 0; k < g.torsionCount(); ++k) {
            tor[k] = randInt(rng, 0, 5);
            if (tor[k] != 0) zero = false;
        }
        if (zero && g.rank() > 0) f[0] = 1;
        gens.push_back(g.element(f, tor));
    }
    return EmbeddedMonoid(g, gens);
}

inline GroupElement randomElement(Rng &rng, const AbelianGroup &g, int lo, int hi)
{
    VecInt f(g.rank()), t(g.torsionCount());
    for (int k = 0; k < g.rank(); ++k) f[k] = randInt(rng, lo, hi);
    for (int k = 0; k < g.torsionCount(); ++k) t[k] = randInt(rng, 0, 8);
    return g.element(f, t);
}

/// Random element of the monoid itself (a small nonnegative combination).
inline GroupElement randomCombination(Rng &rng, const EmbeddedMonoid &S, int maxCoeff = 3)
{
    GroupElement acc = S.group().zero();
    for (const GroupElement &g : S.generators()) acc = acc + g.scalarMultiply(randInt(rng, 0, maxCoeff));
    return acc;
}

/// Brute-force membership oracle, valid for monoids whose generator free
/// parts are componentwise nonnegative: coefficients of a generator with
/// nonzero free part are bounded by min_j floor(w_j / s_ij), the others by
/// the product of the torsion orders met by the generator.
inline bool bruteForceInMonoid(const EmbeddedMonoid &S, const GroupElement &w)
{
    const AbelianGroup &K = S.group();
    std::vector<GroupElement> gens;
    for (const GroupElement &g : S.generators())
        if (!g.isZero()) gens.push_back(g);
    if (w.isZero()) return true;

    for (int k = 0; k < K.rank(); ++k)
        if (w.freePart()[k] < 0) return false;

    std::vector<Int> bounds;
    for (const GroupElement &g : gens) {
        for (int k = 0; k < K.rank(); ++k)
            if (g.freePart()[k] < 0) throw std::logic_error("oracle needs nonnegative free parts");
        if (g.freePartIsZero()) {
            Int b = 1;
            for (int k = 0; k < K.torsionCount(); ++k)
                if (g.torsionPart()[k] != 0) b *= K.torsionOrders()[k];
            bounds.push_back(b);
        } else {
            Int b = -1;
            for (int k = 0; k < K.rank(); ++k) {
                if (g.freePart()[k] == 0) continue;
                Int cap = fdivQ(w.freePart()[k], g.freePart()[k]);
                if (b < 0 || cap < b) b = cap;
            }
            if (b < 0) b = 0;
            bounds.push_back(b);
        }
    }

    std::vector<Int> x(gens.size(), Int(0));
    for (;;) {
        GroupElement acc = K.zero();
        for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + gens[i].scalarMultiply(x[i]);
        if (acc == w) return true;
        std::size_t i = 0;
        while (i < gens.size()) {
            x[i] += 1;
            if (x[i] <= bounds[i]) break;
            x[i] = 0;
            ++i;
        }
        if (i == gens.size()) return false;
    }
}

/// Exhaustive saturation oracle: search small multiplier/coefficient space.
inline bool bruteForceInSaturation(const EmbeddedMonoid &S, const GroupElement &w, int maxMultiplier = 24)
{
    for (int n = 1; n <= maxMultiplier; ++n)
        if (bruteForceInMonoid(S, w.scalarMultiply(n))) return true;
    return false;
}

struct SuiteResult {
    int cases = 0;
    int failures = 0;
};

} // namespace embmon::testsupport
