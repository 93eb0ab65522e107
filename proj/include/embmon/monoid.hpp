#pragma once

#include <memory>
#include <optional>

#include "embmon/abelian.hpp"
#include "embmon/cone.hpp"
#include "embmon/polyhedron.hpp"

namespace embmon {

/// Finitely generated submonoid S of an abelian group K, kept with K.
class EmbeddedMonoid {
public:
    EmbeddedMonoid() = default;
    EmbeddedMonoid(AbelianGroup group, std::vector<GroupElement> generators);

    const AbelianGroup &group() const { return group_; }
    const std::vector<GroupElement> &generators() const { return generators_; }

    /// cone(S): cone of the generator free parts in K^0 ⊗ Q.
    const RationalCone &cone() const;

    std::vector<VecInt> generatorFreeParts() const;

private:
    AbelianGroup group_;
    std::vector<GroupElement> generators_;
    mutable std::shared_ptr<RationalCone> cone_; // filled once, compute-then-publish
};

enum class CapMode { Lcm, Product };

struct InMonoidOptions {
    CapMode capMode = CapMode::Lcm;
};

/// Inspection data for the membership algorithm: the lattice points of the
/// bounded polyhedron that was enumerated (coefficient space).
struct InMonoidTrace {
    std::vector<VecInt> latticePoints;
    bool pointedPath = true;
};

/// Coefficients x >= 0 with sum x_i s_i = w, if w lies in S.
std::optional<VecInt> monoidCoefficients(const EmbeddedMonoid &S, const GroupElement &w,
                                         const InMonoidOptions &opts = {}, InMonoidTrace *trace = nullptr);

bool inMonoid(const EmbeddedMonoid &S, const GroupElement &w, const InMonoidOptions &opts = {});

struct IntersectionResult {
    std::vector<GroupElement> rawGenerators; // Gordan generators, unreduced
    EmbeddedMonoid monoid;                   // redundancy-reduced generators
};

/// Generators of S1 ∩ S2 for monoids in a common ambient group.
IntersectionResult generatorsIntMonoid(const EmbeddedMonoid &S1, const EmbeddedMonoid &S2,
                                       const InMonoidOptions &opts = {});

/// Finite module generators of the saturation over S: lattice points of the
/// zonotope over one minimal generator per extreme ray, times the torsion part.
std::vector<GroupElement> moduleGenerators(const EmbeddedMonoid &S);

/// True iff some positive multiple of w lies in S (free part in cone(S)).
bool inSaturation(const EmbeddedMonoid &S, const GroupElement &w);

/// True iff w + m lies in S for every module generator m.
bool inConductorIdeal(const EmbeddedMonoid &S, const GroupElement &w, const InMonoidOptions &opts = {},
                      int threads = 1);

/// Conductor element r*w for the canonical interior point w and minimal r >= 1.
/// Requires a spanning monoid (NotSpanning otherwise).
GroupElement conductorPoint(const EmbeddedMonoid &S, const InMonoidOptions &opts = {});

/// Canonical relative-interior point used by conductorPoint: sum over the
/// extreme rays of cone(S) of the minimal generator free part on each ray,
/// with zero torsion.
GroupElement conductorBasePoint(const EmbeddedMonoid &S);

/// True iff the generators of S generate K as a group.
bool isSpanning(const EmbeddedMonoid &S);

} // namespace embmon
