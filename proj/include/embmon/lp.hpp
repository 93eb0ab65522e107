#pragma once

#include "embmon/ints.hpp"

namespace embmon {

enum class Rel { Le, Ge, Eq };

struct LpConstraint {
    VecRat a;
    Rel rel;
    Rat b;
};

/// Linear program over rational variables x in Q^n; variables marked
/// nonnegative are handled natively (no free-variable split, no bound row).
struct LpProblem {
    int n = 0;
    std::vector<LpConstraint> rows;
    std::vector<bool> nonneg; // empty means all variables are free

    void addLe(VecRat a, Rat b) { rows.push_back({std::move(a), Rel::Le, std::move(b)}); }
    void addGe(VecRat a, Rat b) { rows.push_back({std::move(a), Rel::Ge, std::move(b)}); }
    void addEq(VecRat a, Rat b) { rows.push_back({std::move(a), Rel::Eq, std::move(b)}); }

    /// Bound a single coordinate: x_i rel b.
    void addBound(int i, Rel rel, Rat b);

    void markAllNonnegative() { nonneg.assign(n, true); }
    void markNonnegative(int i)
    {
        if (nonneg.empty()) nonneg.assign(n, false);
        nonneg[i] = true;
    }
    bool isNonnegative(int i) const { return !nonneg.empty() && nonneg[i]; }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value;
    VecRat x;

    bool optimal() const { return status == LpStatus::Optimal; }
    bool feasible() const { return status != LpStatus::Infeasible; }
};

/// Exact two-phase simplex with Bland's rule; deterministic.
LpResult lpMaximize(const LpProblem &p, const VecRat &objective);
LpResult lpMinimize(const LpProblem &p, const VecRat &objective);
LpResult lpFeasible(const LpProblem &p);

} // namespace embmon
