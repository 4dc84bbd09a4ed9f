#include "colorfan/lp.hpp"

namespace colorfan {

namespace {

// Tableau simplex for min cost.y s.t. [A | I_art] y = b, y >= 0, pivoting by
// Bland's rule (first negative reduced cost; ties in the ratio test broken
// by smallest basis index), which cannot cycle.
struct Tableau {
    RatMat t;                // m x (cols + 1), last column is the rhs
    std::vector<int> basis;  // column index per row

    int rows() const { return static_cast<int>(t.rows()); }
    int cols() const { return static_cast<int>(t.cols()) - 1; }

    void pivot(int row, int col) {
        Rational p = t(row, col);
        t.row(row) /= p;
        for (int i = 0; i < rows(); ++i) {
            if (i == row) continue;
            Rational f = t(i, col);
            if (f != 0) t.row(i) -= f * t.row(row);
        }
        basis[row] = col;
    }

    // Returns false when the objective is unbounded below.
    bool iterate(const RatVec& cost) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols() && enter < 0; ++j) {
                Rational r = cost(j);
                for (int i = 0; i < rows(); ++i)
                    if (cost(basis[i]) != 0) r -= cost(basis[i]) * t(i, j);
                if (r < 0) enter = j;
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < rows(); ++i) {
                if (t(i, enter) <= 0) continue;
                Rational ratio = t(i, cols()) / t(i, enter);
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    Rational objective(const RatVec& cost) const {
        Rational v(0);
        for (int i = 0; i < rows(); ++i) v += cost(basis[i]) * t(i, cols());
        return v;
    }
};

struct EqResult {
    LpStatus status;
    RatVec y;
    Rational value;
};

// min cost.y s.t. A y = b, y >= 0
EqResult simplex_eq(const RatMat& A, const RatVec& b, const RatVec& cost) {
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());

    // Phase 1 with artificials.
    Tableau tab;
    tab.t = RatMat::Zero(m, n + m + 1);
    tab.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        int sign = b(i) < 0 ? -1 : 1;
        for (int j = 0; j < n; ++j) tab.t(i, j) = sign * A(i, j);
        tab.t(i, n + i) = 1;
        tab.t(i, n + m) = sign * b(i);
        tab.basis[i] = n + i;
    }
    RatVec cost1 = RatVec::Zero(n + m);
    for (int i = 0; i < m; ++i) cost1(n + i) = 1;
    tab.iterate(cost1); // phase 1 is bounded below by 0
    if (tab.objective(cost1) != 0) return {LpStatus::Infeasible, RatVec(), Rational(0)};

    // Drive artificials out of the basis; rows that cannot pivot are
    // redundant equalities.
    std::vector<char> live(m, 1);
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        int col = -1;
        for (int j = 0; j < n && col < 0; ++j)
            if (tab.t(i, j) != 0) col = j;
        if (col >= 0) tab.pivot(i, col);
        else live[i] = 0;
    }

    // Phase 2 without the artificial columns.
    int m2 = 0;
    for (int i = 0; i < m; ++i) m2 += live[i];
    Tableau tab2;
    tab2.t = RatMat::Zero(m2, n + 1);
    tab2.basis.resize(m2);
    for (int i = 0, r = 0; i < m; ++i) {
        if (!live[i]) continue;
        for (int j = 0; j < n; ++j) tab2.t(r, j) = tab.t(i, j);
        tab2.t(r, n) = tab.t(i, n + m);
        tab2.basis[r] = tab.basis[i];
        ++r;
    }
    if (!tab2.iterate(cost)) return {LpStatus::Unbounded, RatVec(), Rational(0)};

    RatVec y = RatVec::Zero(n);
    for (int i = 0; i < m2; ++i) y(tab2.basis[i]) = tab2.t(i, n);
    return {LpStatus::Optimal, std::move(y), tab2.objective(cost)};
}

} // namespace

LpResult lp_max(const RatMat& A, const RatVec& b, const RatVec& c) {
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());
    // x = u - w with slacks: [A  -A  I][u w s]^T = b
    RatMat Aeq(m, 2 * n + m);
    Aeq.setZero();
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            Aeq(i, j) = A(i, j);
            Aeq(i, n + j) = -A(i, j);
        }
        Aeq(i, 2 * n + i) = 1;
    }
    RatVec cost = RatVec::Zero(2 * n + m);
    for (int j = 0; j < n; ++j) {
        cost(j) = -c(j);
        cost(n + j) = c(j);
    }
    EqResult r = simplex_eq(Aeq, b, cost);
    LpResult out;
    out.status = r.status;
    if (r.status == LpStatus::Optimal) {
        out.value = -r.value;
        out.x = RatVec::Zero(n);
        for (int j = 0; j < n; ++j) out.x(j) = r.y(j) - r.y(n + j);
    }
    return out;
}

bool lp_feasible(const RatMat& A, const RatVec& b) {
    RatVec c = RatVec::Zero(A.cols());
    return lp_max(A, b, c).status != LpStatus::Infeasible;
}

bool in_convex_hull(const RatVec& p, const std::vector<RatVec>& points) {
    if (points.empty()) return false;
    const int d = static_cast<int>(p.size());
    const int k = static_cast<int>(points.size());
    RatMat A(d + 1, k);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < d; ++i) A(i, j) = points[j](i);
        A(d, j) = 1;
    }
    RatVec b(d + 1);
    for (int i = 0; i < d; ++i) b(i) = p(i);
    b(d) = 1;
    return simplex_eq(A, b, RatVec::Zero(k)).status != LpStatus::Infeasible;
}

} // namespace colorfan
