#include "embmon/lp.hpp"

#include <cassert>

namespace embmon {

void LpProblem::addBound(int i, Rel rel, Rat b)
{
    VecRat a(n, Rat(0));
    a[i] = 1;
    rows.push_back({std::move(a), rel, std::move(b)});
}

namespace {

// Full-tableau simplex on min c.z s.t. T z = rhs, z >= 0 with an explicit
// starting basis whose columns are unit vectors in T.
class Tableau {
public:
    Tableau(std::vector<VecRat> rows, std::vector<int> basis, int numVars, int enterLimit)
        : T_(std::move(rows)), basis_(std::move(basis)), N_(numVars), enterLimit_(enterLimit)
    {
    }

    int rows() const { return static_cast<int>(T_.size()); }
    const std::vector<int> &basis() const { return basis_; }
    const Rat &rhs(int i) const { return T_[i][N_]; }
    const Rat &at(int i, int j) const { return T_[i][j]; }

    void setCosts(const VecRat &c)
    {
        costs_ = c;
        z_.assign(N_ + 1, Rat(0));
        for (int j = 0; j <= N_; ++j) {
            Rat acc = (j < N_) ? -costs_[j] : Rat(0);
            for (int i = 0; i < rows(); ++i)
                if (costs_[basis_[i]] != 0) acc += costs_[basis_[i]] * T_[i][j];
            z_[j] = acc;
        }
    }

    // Reduced cost row entry for column j is z_[j] = c_B B^-1 A_j - c_j.
    // Bland: enter smallest j with z_[j] > 0 (improves minimization).
    bool iterate()
    {
        int enter = -1;
        for (int j = 0; j < enterLimit_; ++j)
            if (z_[j] > 0) {
                enter = j;
                break;
            }
        if (enter < 0) return false; // optimal

        int leave = -1;
        Rat bestRatio;
        for (int i = 0; i < rows(); ++i) {
            if (T_[i][enter] <= 0) continue;
            Rat ratio = T_[i][N_] / T_[i][enter];
            if (leave < 0 || ratio < bestRatio || (ratio == bestRatio && basis_[i] < basis_[leave])) {
                leave = i;
                bestRatio = ratio;
            }
        }
        if (leave < 0) {
            unbounded_ = true;
            return false;
        }
        pivot(leave, enter);
        return true;
    }

    void run()
    {
        while (iterate()) {
        }
    }

    bool unbounded() const { return unbounded_; }

    Rat objectiveValue() const
    {
        Rat v = 0;
        for (int i = 0; i < rows(); ++i) v += costs_[basis_[i]] * T_[i][N_];
        return v;
    }

    VecRat solution() const
    {
        VecRat x(N_, Rat(0));
        for (int i = 0; i < rows(); ++i) x[basis_[i]] = T_[i][N_];
        return x;
    }

    void pivot(int r, int c)
    {
        Rat p = T_[r][c];
        assert(p != 0);
        for (int j = 0; j <= N_; ++j) T_[r][j] /= p;
        for (int i = 0; i < rows(); ++i) {
            if (i == r || T_[i][c] == 0) continue;
            Rat f = T_[i][c];
            for (int j = 0; j <= N_; ++j) T_[i][j] -= f * T_[r][j];
        }
        if (z_[c] != 0) {
            Rat f = z_[c];
            for (int j = 0; j <= N_; ++j) z_[j] -= f * T_[r][j];
        }
        basis_[r] = c;
    }

    void dropRow(int i)
    {
        T_.erase(T_.begin() + i);
        basis_.erase(basis_.begin() + i);
    }

private:
    std::vector<VecRat> T_; // rows x (N_ + 1), last column is the rhs
    std::vector<int> basis_;
    VecRat costs_;
    VecRat z_;
    int N_;
    int enterLimit_;
    bool unbounded_ = false;
};

LpResult solve(const LpProblem &p, const VecRat &objective, bool maximize)
{
    assert(static_cast<int>(objective.size()) == p.n);
    const int n = p.n;
    const int m = static_cast<int>(p.rows.size());

    // Nonnegative variables get one column, free variables split into
    // u - v; one slack per inequality, one artificial per row.
    std::vector<int> posCol(n), negCol(n, -1);
    int col = 0;
    for (int j = 0; j < n; ++j) {
        posCol[j] = col++;
        if (!p.isNonnegative(j)) negCol[j] = col++;
    }
    int numSlacks = 0;
    for (const LpConstraint &row : p.rows)
        if (row.rel != Rel::Eq) ++numSlacks;
    const int slackBase = col;
    const int artBase = col + numSlacks;
    const int N = artBase + m;

    // A slack entering with coefficient +1 on a row with nonnegative rhs can
    // start in the basis; only the remaining rows need artificials.
    std::vector<VecRat> T(m, VecRat(N + 1, Rat(0)));
    std::vector<int> basis(m);
    std::vector<bool> artificialUsed(m, false);
    int slack = 0;
    for (int i = 0; i < m; ++i) {
        const LpConstraint &row = p.rows[i];
        assert(static_cast<int>(row.a.size()) == n);
        bool flip = false;
        Rat rhs = row.b;
        // Normalize to a.x (+ slack) = b with b >= 0.
        Rat slackSign = 0;
        if (row.rel == Rel::Le)
            slackSign = 1;
        else if (row.rel == Rel::Ge)
            slackSign = -1;
        if (rhs < 0) {
            flip = true;
            rhs = -rhs;
        }
        for (int j = 0; j < n; ++j) {
            if (row.a[j] == 0) continue;
            Rat aij = flip ? -row.a[j] : row.a[j];
            T[i][posCol[j]] = aij;
            if (negCol[j] >= 0) T[i][negCol[j]] = -aij;
        }
        Rat effSign = flip ? -slackSign : slackSign;
        if (row.rel != Rel::Eq) {
            T[i][slackBase + slack] = effSign;
            ++slack;
        }
        T[i][N] = rhs;
        if (row.rel != Rel::Eq && effSign > 0) {
            basis[i] = slackBase + slack - 1;
        } else {
            T[i][artBase + i] = 1;
            artificialUsed[i] = true;
            basis[i] = artBase + i;
        }
    }

    // Artificial columns never re-enter the basis (dropped once they leave).
    Tableau tab(std::move(T), std::move(basis), N, artBase);

    bool anyArtificial = false;
    for (bool b : artificialUsed) anyArtificial = anyArtificial || b;
    if (anyArtificial) {
        // Phase 1: minimize the sum of artificials.
        VecRat phase1(N, Rat(0));
        for (int i = 0; i < m; ++i)
            if (artificialUsed[i]) phase1[artBase + i] = 1;
        tab.setCosts(phase1);
        tab.run();
        assert(!tab.unbounded());
        if (tab.objectiveValue() != 0) return {LpStatus::Infeasible, Rat(0), {}};
    }

    // Drive remaining artificials out of the basis.
    for (int i = tab.rows() - 1; i >= 0; --i) {
        if (tab.basis()[i] < artBase) continue;
        int c = -1;
        for (int j = 0; j < artBase; ++j)
            if (tab.at(i, j) != 0) {
                c = j;
                break;
            }
        if (c >= 0)
            tab.pivot(i, c);
        else
            tab.dropRow(i); // redundant constraint
    }

    // Phase 2 on the real objective (artificials keep cost 0 and stay nonbasic).
    // Internally the tableau minimizes, so maximization negates the costs.
    VecRat phase2(N, Rat(0));
    for (int j = 0; j < n; ++j) {
        Rat cj = maximize ? -objective[j] : objective[j];
        phase2[posCol[j]] = cj;
        if (negCol[j] >= 0) phase2[negCol[j]] = -cj;
    }
    tab.setCosts(phase2);
    tab.run();
    if (tab.unbounded()) return {LpStatus::Unbounded, Rat(0), {}};

    VecRat z = tab.solution();
    VecRat x(n);
    for (int j = 0; j < n; ++j) x[j] = negCol[j] >= 0 ? z[posCol[j]] - z[negCol[j]] : z[posCol[j]];
    Rat value = 0;
    for (int j = 0; j < n; ++j) value += objective[j] * x[j];
    return {LpStatus::Optimal, value, x};
}

} // namespace

LpResult lpMaximize(const LpProblem &p, const VecRat &objective)
{
    return solve(p, objective, true);
}

LpResult lpMinimize(const LpProblem &p, const VecRat &objective)
{
    return solve(p, objective, false);
}

LpResult lpFeasible(const LpProblem &p)
{
    return solve(p, VecRat(p.n, Rat(0)), false);
}

} // namespace embmon
