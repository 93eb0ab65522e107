#include "embmon/abelian.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace embmon {

AbelianGroup::AbelianGroup(int rank, VecInt torsionOrders) : rank_(rank), torsion_(std::move(torsionOrders))
{
    if (rank_ < 0) throw InvalidInput("group rank must be nonnegative");
    for (const Int &a : torsion_)
        if (a < 2) throw InvalidInput("torsion orders must be >= 2");
}

bool AbelianGroup::isCanonical() const
{
    for (std::size_t i = 0; i + 1 < torsion_.size(); ++i)
        if (torsion_[i + 1] % torsion_[i] != 0) return false;
    return true;
}

Int AbelianGroup::torsionExponent() const
{
    Int e = 1;
    for (const Int &a : torsion_) e = lcmInt(e, a);
    return e;
}

GroupElement AbelianGroup::zero() const
{
    return GroupElement(*this, VecInt(rank_, Int(0)), VecInt(torsion_.size(), Int(0)));
}

GroupElement AbelianGroup::element(VecInt freePart, VecInt torsionPart) const
{
    return GroupElement(*this, std::move(freePart), std::move(torsionPart));
}

std::vector<GroupElement> AbelianGroup::canonicalGenerators() const
{
    std::vector<GroupElement> gens;
    gens.reserve(generatorCount());
    for (int i = 0; i < rank_; ++i) {
        VecInt f(rank_, Int(0));
        f[i] = 1;
        gens.push_back(element(std::move(f), VecInt(torsion_.size(), Int(0))));
    }
    for (int j = 0; j < torsionCount(); ++j) {
        VecInt t(torsion_.size(), Int(0));
        t[j] = 1;
        gens.push_back(element(VecInt(rank_, Int(0)), std::move(t)));
    }
    return gens;
}

std::vector<VecInt> AbelianGroup::torsionElements() const
{
    std::vector<VecInt> out;
    VecInt cur(torsion_.size(), Int(0));
    for (;;) {
        out.push_back(cur);
        int i = static_cast<int>(torsion_.size()) - 1;
        while (i >= 0) {
            cur[i] += 1;
            if (cur[i] < torsion_[i]) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

std::string AbelianGroup::str() const
{
    std::ostringstream os;
    if (rank_ > 0) os << "Z^" << rank_;
    if (torsion_.empty() && rank_ == 0) os << "0";
    for (const Int &a : torsion_) {
        if (os.tellp() > 0) os << " + ";
        os << "Z/" << a.get_str();
    }
    return os.str();
}

GroupElement::GroupElement(AbelianGroup group, VecInt freePart, VecInt torsionPart)
    : group_(std::move(group)), free_(std::move(freePart)), torsion_(std::move(torsionPart))
{
    if (static_cast<int>(free_.size()) != group_.rank() ||
        static_cast<int>(torsion_.size()) != group_.torsionCount())
        throw InvalidInput("element coordinate lengths do not match the group");
    for (int i = 0; i < group_.torsionCount(); ++i) torsion_[i] = modReduce(torsion_[i], group_.torsionOrders()[i]);
}

bool GroupElement::isZero() const
{
    return isZeroVec(free_) && isZeroVec(torsion_);
}

GroupElement GroupElement::add(const GroupElement &other) const
{
    if (group_ != other.group_) throw GroupMismatch();
    return GroupElement(group_, addVec(free_, other.free_), addVec(torsion_, other.torsion_));
}

GroupElement GroupElement::negate() const
{
    return GroupElement(group_, negVec(free_), negVec(torsion_));
}

GroupElement GroupElement::scalarMultiply(const Int &c) const
{
    return GroupElement(group_, scaleVec(c, free_), scaleVec(c, torsion_));
}

Int GroupElement::order() const
{
    if (!isZeroVec(free_)) return 0;
    Int e = 1;
    for (int i = 0; i < group_.torsionCount(); ++i) {
        const Int &a = group_.torsionOrders()[i];
        e = lcmInt(e, a / gcdInt(torsion_[i], a));
    }
    return e;
}

bool GroupElement::operator==(const GroupElement &o) const
{
    return group_ == o.group_ && free_ == o.free_ && torsion_ == o.torsion_;
}

std::string GroupElement::str() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < free_.size(); ++i) {
        if (i) os << ',';
        os << free_[i].get_str();
    }
    if (!torsion_.empty()) {
        os << ';';
        for (std::size_t i = 0; i < torsion_.size(); ++i) {
            if (i) os << ',';
            os << torsion_[i].get_str();
        }
    }
    return os.str();
}

GroupElement operator+(const GroupElement &a, const GroupElement &b) { return a.add(b); }
GroupElement operator-(const GroupElement &a, const GroupElement &b) { return a.add(b.negate()); }
GroupElement operator-(const GroupElement &a) { return a.negate(); }
GroupElement operator*(const Int &c, const GroupElement &a) { return a.scalarMultiply(c); }

bool lexLess(const GroupElement &a, const GroupElement &b)
{
    if (lexLess(a.freePart(), b.freePart())) return true;
    if (lexLess(b.freePart(), a.freePart())) return false;
    return lexLess(a.torsionPart(), b.torsionPart());
}

GroupHom::GroupHom(AbelianGroup domain, AbelianGroup codomain, std::vector<GroupElement> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images))
{
    if (static_cast<int>(images_.size()) != domain_.generatorCount())
        throw InvalidInput("homomorphism needs one image per domain generator");
    for (const GroupElement &img : images_)
        if (img.group() != codomain_) throw GroupMismatch("homomorphism image lies in the wrong group");
    for (int j = 0; j < domain_.torsionCount(); ++j) {
        const Int &a = domain_.torsionOrders()[j];
        if (!images_[domain_.rank() + j].scalarMultiply(a).isZero())
            throw InvalidInput("homomorphism is not well defined on a torsion generator");
    }
}

GroupElement GroupHom::apply(const GroupElement &x) const
{
    if (x.group() != domain_) throw GroupMismatch();
    GroupElement acc = codomain_.zero();
    for (int i = 0; i < domain_.rank(); ++i) acc = acc + images_[i].scalarMultiply(x.freePart()[i]);
    for (int j = 0; j < domain_.torsionCount(); ++j)
        acc = acc + images_[domain_.rank() + j].scalarMultiply(x.torsionPart()[j]);
    return acc;
}

GroupElement GroupHom::applyToCoefficients(const VecInt &coeffs) const
{
    assert(coeffs.size() == images_.size());
    GroupElement acc = codomain_.zero();
    for (std::size_t i = 0; i < coeffs.size(); ++i) acc = acc + images_[i].scalarMultiply(coeffs[i]);
    return acc;
}

IntMat GroupHom::freePartMatrix() const
{
    std::vector<VecInt> cols;
    cols.reserve(images_.size());
    for (const GroupElement &img : images_) cols.push_back(img.freePart());
    return IntMat::fromColumns(cols);
}

namespace {

// Stacked relation matrix of a generator list inside an ambient group:
// rows = ambient free coords then torsion coords; columns = the generators
// followed by one torsion-modulus column per ambient torsion coordinate.
IntMat stackedMatrix(const AbelianGroup &ambient, const std::vector<GroupElement> &gens)
{
    const int rk = ambient.rank();
    const int tc = ambient.torsionCount();
    const int k = static_cast<int>(gens.size());
    IntMat M(rk + tc, k + tc);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < rk; ++i) M.at(i, j) = gens[j].freePart()[i];
        for (int i = 0; i < tc; ++i) M.at(rk + i, j) = gens[j].torsionPart()[i];
    }
    for (int i = 0; i < tc; ++i) M.at(rk + i, k + i) = ambient.torsionOrders()[i];
    return M;
}

VecInt elementAsColumn(const GroupElement &x)
{
    VecInt b = x.freePart();
    b.insert(b.end(), x.torsionPart().begin(), x.torsionPart().end());
    return b;
}

IntMat invertUnimodular(const IntMat &U)
{
    SmithForm snf = smithNormalForm(U);
    for (int i = 0; i < U.rows(); ++i) assert(snf.D.at(i, i) == 1);
    return snf.V.mul(snf.U);
}

} // namespace

std::vector<GroupElement> homKernel(const GroupHom &h)
{
    const AbelianGroup &D = h.domain();
    const AbelianGroup &C = h.codomain();
    IntMat M = stackedMatrix(C, h.images());
    IntMat K = kernelBasis(M);

    const int n = D.generatorCount();
    std::vector<GroupElement> gens;
    for (int j = 0; j < K.cols(); ++j) {
        VecInt v = K.column(j);
        VecInt f(v.begin(), v.begin() + D.rank());
        VecInt t(v.begin() + D.rank(), v.begin() + n);
        GroupElement g = D.element(std::move(f), std::move(t));
        if (!g.isZero()) gens.push_back(g);
    }
    std::sort(gens.begin(), gens.end(), [](const GroupElement &a, const GroupElement &b) { return lexLess(a, b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

Subgroup::Subgroup(AbelianGroup ambient, std::vector<GroupElement> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators))
{
    for (const GroupElement &g : generators_)
        if (g.group() != ambient_) throw GroupMismatch("subgroup generator outside the ambient group");
}

bool Subgroup::contains(const GroupElement &x) const
{
    return solve(x).has_value();
}

std::optional<VecInt> Subgroup::solve(const GroupElement &x) const
{
    if (x.group() != ambient_) throw GroupMismatch();
    IntMat M = stackedMatrix(ambient_, generators_);
    auto z = solveIntegral(M, elementAsColumn(x));
    if (!z) return std::nullopt;
    return VecInt(z->begin(), z->begin() + generators_.size());
}

Subgroup subgroupIntersection(const Subgroup &a, const Subgroup &b)
{
    if (a.ambient() != b.ambient()) throw GroupMismatch("subgroups of different ambient groups");
    const AbelianGroup &K = a.ambient();
    const int ka = static_cast<int>(a.generators().size());
    const int kb = static_cast<int>(b.generators().size());

    std::vector<GroupElement> images;
    images.reserve(ka + kb);
    for (const GroupElement &g : a.generators()) images.push_back(g);
    for (const GroupElement &g : b.generators()) images.push_back(g.negate());

    GroupHom difference(AbelianGroup(ka + kb, {}), K, images);
    std::vector<GroupElement> kernel = homKernel(difference);

    std::vector<GroupElement> gens;
    for (const GroupElement &z : kernel) {
        GroupElement g = K.zero();
        for (int i = 0; i < ka; ++i) g = g + a.generators()[i].scalarMultiply(z.freePart()[i]);
        if (!g.isZero()) gens.push_back(g);
    }
    std::sort(gens.begin(), gens.end(), [](const GroupElement &x, const GroupElement &y) { return lexLess(x, y); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return Subgroup(K, std::move(gens));
}

CanonicalizedPresentation canonicalize(const Presentation &p)
{
    const int n = p.numGenerators;
    IntMat R(n, static_cast<int>(p.relations.size()));
    for (std::size_t j = 0; j < p.relations.size(); ++j) {
        if (static_cast<int>(p.relations[j].size()) != n) throw InvalidInput("relation length mismatch");
        for (int i = 0; i < n; ++i) R.at(i, static_cast<int>(j)) = p.relations[j][i];
    }

    SmithForm snf = smithNormalForm(R);
    const int nmin = std::min(R.rows(), R.cols());

    // Coordinate i of U*x survives as a free coordinate (d_i = 0 or absent),
    // a torsion coordinate (d_i >= 2), or is killed (d_i = 1).
    std::vector<int> freeIdx, torIdx;
    VecInt torsionOrders;
    for (int i = 0; i < n; ++i) {
        Int d = (i < nmin) ? snf.D.at(i, i) : Int(0);
        if (d == 0)
            freeIdx.push_back(i);
        else if (d >= 2) {
            torIdx.push_back(i);
            torsionOrders.push_back(d);
        }
    }

    CanonicalizedPresentation out;
    out.group = AbelianGroup(static_cast<int>(freeIdx.size()), torsionOrders);

    for (int j = 0; j < n; ++j) {
        VecInt uj = snf.U.column(j);
        VecInt f, t;
        for (int i : freeIdx) f.push_back(uj[i]);
        for (int i : torIdx) t.push_back(uj[i]);
        out.generatorImages.push_back(out.group.element(std::move(f), std::move(t)));
    }

    IntMat Uinv = invertUnimodular(snf.U);
    for (int i : freeIdx) out.canonicalGeneratorReps.push_back(Uinv.column(i));
    for (int i : torIdx) out.canonicalGeneratorReps.push_back(Uinv.column(i));
    return out;
}

CanonicalizedGroup canonicalize(const AbelianGroup &g)
{
    Presentation p;
    p.numGenerators = g.generatorCount();
    for (int j = 0; j < g.torsionCount(); ++j) {
        VecInt rel(p.numGenerators, Int(0));
        rel[g.rank() + j] = g.torsionOrders()[j];
        p.relations.push_back(rel);
    }
    CanonicalizedPresentation cp = canonicalize(p);

    std::vector<GroupElement> invImages;
    for (const VecInt &rep : cp.canonicalGeneratorReps) {
        VecInt f(rep.begin(), rep.begin() + g.rank());
        VecInt t(rep.begin() + g.rank(), rep.end());
        invImages.push_back(g.element(std::move(f), std::move(t)));
    }

    CanonicalizedGroup out;
    out.group = cp.group;
    out.iso = GroupHom(g, cp.group, cp.generatorImages);
    out.isoInv = GroupHom(cp.group, g, invImages);
    return out;
}

SubgroupCoordinates::SubgroupCoordinates(const Subgroup &s) : subgroup_(s)
{
    const AbelianGroup &K = s.ambient();
    const std::vector<GroupElement> &gens = s.generators();
    const int k = static_cast<int>(gens.size());

    std::vector<VecInt> freeCols;
    freeCols.reserve(k);
    for (const GroupElement &g : gens) freeCols.push_back(g.freePart());
    IntMat L0 = IntMat::fromColumns(freeCols);
    if (L0.rows() == 0) L0 = IntMat(K.rank(), k);

    IntMat B = hermiteColumnBasis(L0);
    const int rho = B.cols();

    std::vector<GroupElement> freeBasis;
    for (int j = 0; j < rho; ++j) {
        auto c = solveIntegral(L0, B.column(j));
        assert(c.has_value());
        GroupElement hb = K.zero();
        for (int i = 0; i < k; ++i) hb = hb + gens[i].scalarMultiply((*c)[i]);
        freeBasis.push_back(hb);
    }

    // Torsion part of the subgroup: images of the kernel of the free-part map.
    IntMat K0 = kernelBasis(L0);
    std::vector<GroupElement> torGens;
    for (int j = 0; j < K0.cols(); ++j) {
        VecInt z = K0.column(j);
        GroupElement t = K.zero();
        for (int i = 0; i < k; ++i) t = t + gens[i].scalarMultiply(z[i]);
        if (!t.isZero()) torGens.push_back(t);
    }

    // Abstract cyclic decomposition of the finite group generated by torGens.
    Presentation tp;
    tp.numGenerators = static_cast<int>(torGens.size());
    if (!torGens.empty()) {
        GroupHom h(AbelianGroup(tp.numGenerators, {}), K, torGens);
        for (const GroupElement &rel : homKernel(h)) tp.relations.push_back(rel.freePart());
    }
    CanonicalizedPresentation ct = canonicalize(tp);
    assert(ct.group.rank() == 0);

    std::vector<GroupElement> torBasis;
    for (const VecInt &rep : ct.canonicalGeneratorReps) {
        GroupElement t = K.zero();
        for (std::size_t i = 0; i < torGens.size(); ++i) t = t + torGens[i].scalarMultiply(rep[i]);
        torBasis.push_back(t);
    }

    group_ = AbelianGroup(rho, ct.group.torsionOrders());
    basis_ = freeBasis;
    basis_.insert(basis_.end(), torBasis.begin(), torBasis.end());
}

GroupElement SubgroupCoordinates::toAmbient(const GroupElement &x) const
{
    if (x.group() != group_) throw GroupMismatch();
    GroupElement acc = subgroup_.ambient().zero();
    for (int i = 0; i < group_.rank(); ++i) acc = acc + basis_[i].scalarMultiply(x.freePart()[i]);
    for (int j = 0; j < group_.torsionCount(); ++j)
        acc = acc + basis_[group_.rank() + j].scalarMultiply(x.torsionPart()[j]);
    return acc;
}

std::optional<GroupElement> SubgroupCoordinates::coordinates(const GroupElement &ambientElement) const
{
    if (ambientElement.group() != subgroup_.ambient()) throw GroupMismatch();

    std::vector<VecInt> cols;
    for (int i = 0; i < group_.rank(); ++i) cols.push_back(basis_[i].freePart());
    IntMat B = IntMat::fromColumns(cols);
    if (B.rows() == 0) B = IntMat(subgroup_.ambient().rank(), group_.rank());
    auto f = solveIntegral(B, ambientElement.freePart());
    if (!f) return std::nullopt;

    GroupElement rest = ambientElement;
    for (int i = 0; i < group_.rank(); ++i) rest = rest - basis_[i].scalarMultiply((*f)[i]);

    std::vector<GroupElement> torBasis(basis_.begin() + group_.rank(), basis_.end());
    Subgroup torPart(subgroup_.ambient(), torBasis);
    auto t = torPart.solve(rest);
    if (!t) return std::nullopt;
    return group_.element(*f, *t);
}

} // namespace embmon
