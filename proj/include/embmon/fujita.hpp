#pragma once

#include "embmon/mds.hpp"

namespace embmon {

struct FujitaFacetData {
    RationalCone facet;
    FacetParallelForm form;
    std::vector<GroupElement> minimalRayElements;
    Int alpha;
};

/// All data of the base point free test for a spanning monoid S inside
/// K = Pic(X): the cone sigma, its facets with parallels and minimal ray
/// elements, a conductor element, and the level bounds.
struct FujitaSetting {
    EmbeddedMonoid monoid;
    GroupElement kx;
    Int dimension;
    RationalCone sigma;
    std::vector<FujitaFacetData> facets;
    GroupElement conductor;
    Int nu;

    VecInt alphas() const
    {
        VecInt a;
        for (const FujitaFacetData &f : facets) a.push_back(f.alpha);
        return a;
    }
};

struct FujitaCell {
    int facetIndex; // 1-based
    Int m;
    Int k;
    int candidateCount;
};

struct FujitaWitness {
    int facetIndex; // 1-based
    Int m;
    Int k;
    GroupElement ampleClass; // the candidate L
    GroupElement tested;     // kx + m*L
    bool freePartInCone;     // whether the tested class even lies in cone(S)
};

struct FujitaReport {
    bool verdict = false;
    std::string reason; // "notGorenstein" when the early exit fires
    std::optional<FujitaSetting> setting;
    std::vector<FujitaCell> loopTrace;
    std::optional<FujitaWitness> witness;
};

/// Elements of S with minimal free part over each ray of the facet, one per
/// torsion part realizable at that minimal free part.
std::vector<GroupElement> minimalRayElements(const EmbeddedMonoid &S, const RationalCone &sigma,
                                             const RationalCone &facet, const InMonoidOptions &opts = {});

FujitaSetting buildFujitaSetting(const EmbeddedMonoid &S, const GroupElement &kx, Int dimension,
                                 const InMonoidOptions &opts = {});

/// Candidate classes Gp for one facet (0-based index) and level k >= 1.
std::vector<GroupElement> candidateClasses(const FujitaSetting &setting, int facetIndex, const Int &k);

/// The triple loop over (facet, multiplier, level); every cell is traced and
/// the witness is the canonically first failure.
FujitaReport runFujitaLoops(const FujitaSetting &setting, const InMonoidOptions &opts = {}, int threads = 1);

/// Full test for a Mori dream space with known canonical class.
FujitaReport fujitaBpf(const MoriDreamSpace &X, const GroupElement &kx, const InMonoidOptions &opts = {},
                       int threads = 1);

} // namespace embmon
