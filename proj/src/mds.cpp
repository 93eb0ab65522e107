#include "embmon/mds.hpp"

#include <algorithm>
#include <cassert>

namespace embmon {

namespace {

std::vector<VecInt> dedupeVectors(std::vector<VecInt> v)
{
    std::sort(v.begin(), v.end(), [](const VecInt &a, const VecInt &b) { return lexLess(a, b); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::uint64_t faceMask(const FaceIndexSet &gamma)
{
    std::uint64_t m = 0;
    for (int i : gamma) m |= (std::uint64_t{1} << (i - 1));
    return m;
}

FaceIndexSet maskToFace(std::uint64_t mask, int r)
{
    FaceIndexSet f;
    for (int i = 0; i < r; ++i)
        if (mask & (std::uint64_t{1} << i)) f.push_back(i + 1);
    return f;
}

} // namespace

MoriDreamSpace::MoriDreamSpace(AbelianGroup classGroup, std::vector<GroupElement> degrees,
                               std::vector<Relation> relations, std::optional<GroupElement> ampleClass,
                               std::optional<std::vector<FaceIndexSet>> userFFaces)
    : classGroup_(std::move(classGroup)), degrees_(std::move(degrees)), relations_(std::move(relations)),
      ample_(std::move(ampleClass)), userFFaces_(std::move(userFFaces))
{
    const int r = numVars();
    if (r == 0) throw InvalidInput("a Mori dream space needs at least one Cox generator");
    if (r > 30) throw InvalidInput("more than 30 Cox generators are not supported");
    for (const GroupElement &d : degrees_)
        if (d.group() != classGroup_) throw GroupMismatch("degree outside the class group");
    if (ample_ && ample_->group() != classGroup_) throw GroupMismatch("ample class outside the class group");

    for (const Relation &rel : relations_) {
        if (rel.monomials.empty()) throw InvalidInput("empty relation");
        for (const RelationMonomial &m : rel.monomials) {
            if (m.coeff == 0) throw InvalidInput("relation monomial with zero coefficient");
            if (static_cast<int>(m.exponents.size()) != r) throw InvalidInput("exponent vector length mismatch");
            for (const Int &e : m.exponents)
                if (e < 0) throw InvalidInput("negative exponent in relation");
        }
        for (std::size_t a = 0; a < rel.monomials.size(); ++a)
            for (std::size_t b = a + 1; b < rel.monomials.size(); ++b)
                if (rel.monomials[a].exponents == rel.monomials[b].exponents)
                    throw InvalidInput("repeated monomial in relation");
        GroupElement deg = degreeOf(rel.monomials[0].exponents);
        for (const RelationMonomial &m : rel.monomials)
            if (!(degreeOf(m.exponents) == deg)) throw InhomogeneousRelation();
    }

    if (userFFaces_) {
        for (FaceIndexSet &f : *userFFaces_) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            for (int i : f)
                if (i < 1 || i > r) throw InvalidInput("F-face index out of range");
        }
    }
}

const GroupElement &MoriDreamSpace::ampleClass() const
{
    if (!ample_) throw InvalidInput("no ample class given");
    return *ample_;
}

GroupElement MoriDreamSpace::degreeOf(const VecInt &exponents) const
{
    assert(static_cast<int>(exponents.size()) == numVars());
    GroupElement acc = classGroup_.zero();
    for (int i = 0; i < numVars(); ++i) acc = acc + degrees_[i].scalarMultiply(exponents[i]);
    return acc;
}

const std::vector<FaceIndexSet> &MoriDreamSpace::fFaces() const
{
    return fFaces_.get([&] {
        const int r = numVars();
        std::vector<std::vector<std::uint64_t>> supports(relations_.size());
        for (std::size_t j = 0; j < relations_.size(); ++j)
            for (const RelationMonomial &m : relations_[j].monomials) {
                std::uint64_t s = 0;
                for (int i = 0; i < r; ++i)
                    if (m.exponents[i] > 0) s |= (std::uint64_t{1} << i);
                supports[j].push_back(s);
            }

        // A face passes when every relation restricted to it keeps either zero
        // monomials or at least two.
        auto passes = [&](std::uint64_t mask) {
            for (const auto &rel : supports) {
                int surviving = 0;
                for (std::uint64_t s : rel)
                    if ((s & ~mask) == 0) ++surviving;
                if (surviving == 1) return false;
            }
            return true;
        };

        std::vector<FaceIndexSet> out;
        if (userFFaces_) {
            std::vector<std::uint64_t> masks;
            for (const FaceIndexSet &f : *userFFaces_) {
                std::uint64_t m = faceMask(f);
                if (!passes(m)) throw InvalidInput("user F-face violates the restriction rule");
                masks.push_back(m);
            }
            std::sort(masks.begin(), masks.end());
            masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
            for (std::uint64_t m : masks) out.push_back(maskToFace(m, r));
            return out;
        }

        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask)
            if (passes(mask)) out.push_back(maskToFace(mask, r));
        return out;
    });
}

std::vector<VecInt> MoriDreamSpace::degreeFreeParts(const FaceIndexSet &gamma) const
{
    std::vector<VecInt> cols;
    for (int i : gamma) cols.push_back(degrees_[i - 1].freePart());
    return cols;
}

const std::vector<FaceIndexSet> &MoriDreamSpace::relevantFaces() const
{
    return rlv_.get([&] {
        const VecInt &u0 = ampleClass().freePart();
        std::vector<FaceIndexSet> out;
        for (const FaceIndexSet &gamma : fFaces()) {
            if (gamma.empty()) {
                if (isZeroVec(u0)) out.push_back(gamma);
                continue;
            }
            std::vector<VecInt> cols = degreeFreeParts(gamma);

            // Cheap span filter before the strict LP.
            IntMat A = IntMat::fromColumns(cols);
            IntMat Au = A;
            {
                std::vector<VecInt> withU = cols;
                withU.push_back(u0);
                Au = IntMat::fromColumns(withU);
            }
            if (rationalRank(A) != rationalRank(Au)) continue;

            // u in relint(cone(cols)) iff u = sum lambda_i cols_i with all
            // lambda_i > 0.
            const int k = static_cast<int>(cols.size());
            LpProblem lp;
            lp.n = k + 1; // lambdas, t
            for (int i = 0; i < k; ++i) lp.markNonnegative(i);
            for (int row = 0; row < classGroup_.rank(); ++row) {
                VecRat a(lp.n, Rat(0));
                for (int i = 0; i < k; ++i) a[i] = Rat(cols[i][row]);
                lp.addEq(std::move(a), Rat(u0[row]));
            }
            for (int i = 0; i < k; ++i) {
                VecRat a(lp.n, Rat(0));
                a[i] = 1;
                a[k] = -1;
                lp.addGe(std::move(a), Rat(0)); // lambda_i >= t
            }
            lp.addBound(k, Rel::Le, Rat(1));
            VecRat obj(lp.n, Rat(0));
            obj[k] = 1;
            LpResult res = lpMaximize(lp, obj);
            if (res.optimal() && res.value > 0) out.push_back(gamma);
        }
        return out;
    });
}

const std::vector<FaceIndexSet> &MoriDreamSpace::coveringCollection() const
{
    return cov_.get([&] {
        const std::vector<FaceIndexSet> &rlv = relevantFaces();
        std::vector<std::uint64_t> masks;
        for (const FaceIndexSet &f : rlv) masks.push_back(faceMask(f));
        std::vector<FaceIndexSet> out;
        for (std::size_t i = 0; i < rlv.size(); ++i) {
            bool minimal = true;
            for (std::size_t j = 0; j < rlv.size() && minimal; ++j) {
                if (i == j) continue;
                if ((masks[j] & masks[i]) == masks[j] && masks[j] != masks[i]) minimal = false;
            }
            if (minimal) out.push_back(rlv[i]);
        }
        return out;
    });
}

EmbeddedMonoid MoriDreamSpace::faceMonoid(const FaceIndexSet &gamma) const
{
    std::vector<GroupElement> gens;
    for (int i : gamma) gens.push_back(degrees_[i - 1]);
    std::sort(gens.begin(), gens.end(), [](const GroupElement &a, const GroupElement &b) { return lexLess(a, b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return EmbeddedMonoid(classGroup_, std::move(gens));
}

std::vector<const EmbeddedMonoid *> MoriDreamSpace::coveringMonoids() const
{
    const std::vector<EmbeddedMonoid> &ms = covMonoids_.get([&] {
        std::vector<EmbeddedMonoid> out;
        for (const FaceIndexSet &gamma : coveringCollection()) {
            EmbeddedMonoid m = faceMonoid(gamma);
            bool seen = false;
            for (const EmbeddedMonoid &o : out)
                if (o.generators() == m.generators()) seen = true;
            if (!seen) out.push_back(std::move(m));
        }
        std::sort(out.begin(), out.end(), [](const EmbeddedMonoid &a, const EmbeddedMonoid &b) {
            return a.generators().size() < b.generators().size();
        });
        return out;
    });
    std::vector<const EmbeddedMonoid *> ptrs;
    for (const EmbeddedMonoid &m : ms) ptrs.push_back(&m);
    return ptrs;
}

const PicardData &MoriDreamSpace::picard() const
{
    return picard_.get([&] {
        Subgroup acc(classGroup_, classGroup_.canonicalGenerators());
        for (const FaceIndexSet &gamma : coveringCollection()) {
            std::vector<GroupElement> gens;
            for (int i : gamma) gens.push_back(degrees_[i - 1]);
            acc = subgroupIntersection(acc, Subgroup(classGroup_, gens));
            // Compress the generator list through the canonical basis.
            SubgroupCoordinates sc(acc);
            acc = Subgroup(classGroup_, sc.basis());
        }
        PicardData out{acc, SubgroupCoordinates(acc)};
        return out;
    });
}

const EmbeddedMonoid &MoriDreamSpace::bpfMonoid() const
{
    return bpf_.get([&] {
               std::vector<const EmbeddedMonoid *> mons = coveringMonoids();
               if (mons.empty()) throw InvalidInput("empty covering collection");

               auto containsAll = [&](const EmbeddedMonoid &big, const EmbeddedMonoid &small) {
                   for (const GroupElement &g : small.generators())
                       if (!inMonoid(big, g)) return false;
                   return true;
               };

               EmbeddedMonoid S = *mons[0];
               for (std::size_t i = 1; i < mons.size(); ++i) {
                   const EmbeddedMonoid &T = *mons[i];
                   if (containsAll(T, S)) continue; // S ∩ T = S
                   if (containsAll(S, T)) {
                       S = T;
                       continue;
                   }
                   S = generatorsIntMonoid(S, T).monoid;
               }

               const PicardData &pic = picard();
               std::vector<GroupElement> picGens;
               std::vector<GroupElement> ambient;
               for (const GroupElement &g : S.generators()) {
                   auto c = pic.coords.coordinates(g);
                   if (!c) throw Error("base point free generator outside the Picard group");
                   picGens.push_back(*c);
                   ambient.push_back(g);
               }
               return std::make_pair(EmbeddedMonoid(pic.coords.group(), picGens), ambient);
           })
        .first;
}

const std::vector<GroupElement> &MoriDreamSpace::bpfGeneratorsAmbient() const
{
    bpfMonoid();
    return bpf_.value->second;
}

bool MoriDreamSpace::isBasePointFree(const GroupElement &w) const
{
    if (w.group() != classGroup_) throw GroupMismatch();
    if (!picard().coords.coordinates(w)) return false; // not Cartier
    for (const EmbeddedMonoid *m : coveringMonoids())
        if (!inMonoid(*m, w)) return false;
    return true;
}

std::vector<FaceIndexSet> MoriDreamSpace::baseLocusFaces(const GroupElement &w) const
{
    if (w.group() != classGroup_) throw GroupMismatch();
    std::vector<FaceIndexSet> out;
    for (const FaceIndexSet &gamma : relevantFaces())
        if (!inMonoid(faceMonoid(gamma), w)) out.push_back(gamma);
    return out;
}

const MoriDreamSpace::HRepList &MoriDreamSpace::semiampleHRep() const
{
    return semiample_.get([&] {
        HRepList out;
        for (const FaceIndexSet &gamma : coveringCollection()) {
            RationalCone c = RationalCone::fromGenerators(classGroup_.rank(), degreeFreeParts(gamma));
            for (const VecInt &f : c.facetNormals()) out.facets.push_back(f);
            for (const VecInt &e : c.spanEquations()) out.equations.push_back(e);
        }
        out.facets = dedupeVectors(std::move(out.facets));
        out.equations = dedupeVectors(std::move(out.equations));
        return out;
    });
}

bool MoriDreamSpace::semiampleContains(const GroupElement &w) const
{
    if (w.group() != classGroup_) throw GroupMismatch();
    const HRepList &h = semiampleHRep();
    for (const VecInt &e : h.equations)
        if (dotII(e, w.freePart()) != 0) return false;
    for (const VecInt &f : h.facets)
        if (dotII(f, w.freePart()) < 0) return false;
    return true;
}

RationalCone MoriDreamSpace::semiampleCone() const
{
    const HRepList &h = semiampleHRep();
    return RationalCone::fromHRep(classGroup_.rank(), h.facets, h.equations);
}

GroupElement MoriDreamSpace::canonicalClass() const
{
    GroupElement acc = classGroup_.zero();
    for (const Relation &rel : relations_) acc = acc + degreeOf(rel.monomials[0].exponents);
    for (const GroupElement &d : degrees_) acc = acc - d;
    return acc;
}

bool MoriDreamSpace::isGorenstein(const GroupElement &kx) const
{
    if (kx.group() != classGroup_) throw GroupMismatch();
    return picard().subgroup.contains(kx);
}

RationalCone MoriDreamSpace::movingCone() const
{
    std::vector<VecInt> facets, equations;
    for (int skip = 0; skip < numVars(); ++skip) {
        std::vector<VecInt> cols;
        for (int i = 0; i < numVars(); ++i)
            if (i != skip) cols.push_back(degrees_[i].freePart());
        RationalCone c = RationalCone::fromGenerators(classGroup_.rank(), cols);
        for (const VecInt &f : c.facetNormals()) facets.push_back(f);
        for (const VecInt &e : c.spanEquations()) equations.push_back(e);
    }
    return RationalCone::fromHRep(classGroup_.rank(), dedupeVectors(std::move(facets)),
                                  dedupeVectors(std::move(equations)));
}

bool MoriDreamSpace::qFactorialityCheck() const
{
    if (classGroup_.rank() == 0) return true;
    // The ample point sits in the relative interior of every relevant image
    // cone, so the chamber is full-dimensional iff each of those cones is.
    for (const FaceIndexSet &gamma : relevantFaces()) {
        if (gamma.empty()) return false; // only relevant when the ample class is zero
        if (rationalRank(IntMat::fromColumns(degreeFreeParts(gamma))) < classGroup_.rank()) return false;
    }
    return true;
}

Int MoriDreamSpace::dimension() const
{
    return Int(numVars()) - Int(relations_.size()) - Int(classGroup_.rank());
}

std::optional<VecInt> strictlyPositivePoint(int dim, const std::vector<VecInt> &inequalities,
                                            const std::vector<VecInt> &equations)
{
    if (inequalities.empty()) return VecInt(dim, Int(0));

    // By homogeneity, f.x > 0 for all f is equivalent to feasibility of
    // f.x >= 1, a pure phase-1 question. Constraint generation keeps the
    // working set near the size of a basis.
    std::vector<bool> active(inequalities.size(), false);
    std::size_t activeCount = 0;
    for (std::size_t i = 0; i < inequalities.size() && activeCount < static_cast<std::size_t>(dim) + 4; ++i) {
        active[i] = true;
        ++activeCount;
    }

    for (;;) {
        LpProblem lp;
        lp.n = dim;
        for (std::size_t i = 0; i < inequalities.size(); ++i) {
            if (!active[i]) continue;
            VecRat a(lp.n, Rat(0));
            for (int c = 0; c < dim; ++c) a[c] = Rat(inequalities[i][c]);
            lp.addGe(std::move(a), Rat(1));
        }
        for (const VecInt &e : equations) {
            VecRat a(lp.n, Rat(0));
            for (int c = 0; c < dim; ++c) a[c] = Rat(e[c]);
            lp.addEq(std::move(a), Rat(0));
        }
        LpResult res = lpFeasible(lp);
        if (!res.feasible()) return std::nullopt;

        // Collect the most violated strict inequalities, a few per round.
        std::vector<std::pair<Rat, std::size_t>> violated;
        for (std::size_t i = 0; i < inequalities.size(); ++i) {
            if (active[i]) continue;
            Rat v = dotIR(inequalities[i], res.x);
            if (v <= 0) violated.emplace_back(v, i);
        }
        if (violated.empty()) {
            VecInt out = clearDenominators(res.x);
            if (out.empty()) out = VecInt(dim, Int(0));
            return out;
        }
        std::sort(violated.begin(), violated.end());
        for (std::size_t k = 0; k < violated.size() && k < 16; ++k) active[violated[k].second] = true;
    }
}

std::optional<VecInt> relativeInteriorPoint(const RationalCone &cone)
{
    if (cone.facetNormals().empty()) return VecInt(cone.ambientDim(), Int(0));
    return strictlyPositivePoint(cone.ambientDim(), cone.facetNormals(), cone.spanEquations());
}

} // namespace embmon
