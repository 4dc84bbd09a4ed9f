#pragma once

#include "colorfan/rational.hpp"

#include <vector>

namespace colorfan {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    RatVec x;
};

/// max c.x subject to A x <= b, x free. Exact two-phase simplex with
/// Bland's rule.
LpResult lp_max(const RatMat& A, const RatVec& b, const RatVec& c);

/// Is there any x with A x <= b?
bool lp_feasible(const RatMat& A, const RatVec& b);

/// Exact convex-combination membership test.
bool in_convex_hull(const RatVec& p, const std::vector<RatVec>& points);

} // namespace colorfan
