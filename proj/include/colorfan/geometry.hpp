#pragma once

#include "colorfan/chow.hpp"
#include "colorfan/multimatroid.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace colorfan {

/// A polytope in the orthant coordinates of a maximal colored set: rows
/// A x <= b and/or a cached exact vertex set. All data rational.
struct ExactPolytope {
    int dim = 0;
    RatMat A{0, 0};
    RatVec b{0};
    std::optional<std::vector<RatVec>> verts;
};

ExactPolytope from_hrep(RatMat A, RatVec b);
ExactPolytope from_vrep(int dim, std::vector<RatVec> verts); // prunes to extremes

/// Exact vertex enumeration: solve every n-subset of tight rows, keep
/// feasible solutions, dedupe, sort. Throws input_error on an unbounded
/// polytope unless assume_bounded (structural boundedness) is set.
std::vector<RatVec> vertex_enumeration(const ExactPolytope& p, bool assume_bounded = false);

/// Computes and caches the vertex set.
void ensure_vertices(ExactPolytope& p, bool assume_bounded = false);

/// Facet rows recovered from a full-dimensional vertex set.
void ensure_hrep(ExactPolytope& p);

/// Exact extreme points of a point cloud (dedupe + convex-hull pruning).
std::vector<RatVec> extreme_points(std::vector<RatVec> points);

int affine_dim(const std::vector<RatVec>& points);

/// Normalized volume: n! times Euclidean volume (the standard n-simplex has
/// volume 1), by triangulating from the first vertex over a boundary
/// triangulation. Lower-dimensional or empty polytopes have volume 0.
Rational normalized_volume(const ExactPolytope& p);

/// Same, coning from a chosen base vertex (used to test triangulation
/// independence).
Rational normalized_volume_from_base(const ExactPolytope& p, int base_vertex);

/// Equality as convex bodies: equal extreme point sets plus mutual
/// H-satisfaction where rows are present.
bool polytope_equal(const ExactPolytope& p, const ExactPolytope& q);

/// IP(M(T)): nonnegativity rows plus sum_{i in X} x_i <= rk(X) for every
/// nonempty X. Vertices come from Edmonds' greedy enumeration when the
/// restriction satisfies M1-M3, else from brute force.
ExactPolytope independence_polytope(const RestrictedRank& r);

/// The pieces IP(M(T)) per maximal T, keyed by set id.
using OrthantComplex = std::map<int, ExactPolytope>;
OrthantComplex independence_complex(const RankFunction& rk);

/// Vol(IPC(M)) = sum over maximal T of Vol_T(IP(M(T))).
Rational ipc_volume(const RankFunction& rk);

/// Independent route: per orthant, collapse to the Minkowski coefficients
/// a^T and expand Vol_T as the sum over ordered tuples of nonempty subsets
/// of prod a^T_{S_i} times the SDR indicator. input_error above budget_n.
Rational ipc_volume_via_transversals(const RankFunction& rk, int budget_n = 4);

/// The single-orthant term of the expansion above.
Rational orthant_volume_via_transversals(const RankFunction& rk, int maximal_id);

/// Scaled coordinate simplex scale * conv({0} ∪ {e_i : i in mask}).
ExactPolytope simplex_polytope(int dim, std::uint32_t mask, const Rational& scale = Rational(1));

/// Convex hull of pairwise vertex sums. All inputs over the same ambient.
ExactPolytope minkowski_sum(const std::vector<ExactPolytope>& parts);

/// Is there a bijection iota with iota(i) in masks[i]?
bool sdr_exists(const std::vector<std::uint32_t>& masks, int n);

/// Mixed volume of coordinate sub-simplices, computed two independent ways
/// (SDR indicator; inclusion-exclusion of Minkowski-sum volumes) and checked
/// for agreement. internal_error on mismatch.
Rational mixed_volume_simplices(int n, const std::vector<std::uint32_t>& masks);

/// P_{sigma_C}(D) in the orthant coordinates of the chain's top: cone rows
/// x_{j_1} >= ... >= x_{j_n} >= 0 plus sum_{i in S_k} x_i <= c(S_k). The
/// chain must be maximal and the X-coefficients nonnegative.
ExactPolytope normal_complex_piece(const Divisor& d, const Chain& max_chain);

struct NormalComplexReport {
    bool equal = true;
    /// Every piece equals its globally-constrained version.
    bool pieces_globally_cut = true;
    std::string detail;
};

/// Checks (i) each P_{sigma_C} equals the polytope with all rank rows of its
/// orthant imposed and (ii) the union over MaxChain(T) has the vertex set
/// and the normalized volume of IP(M(T)). Requires a pseudo-cubical rank
/// function unless force is set (the equality genuinely fails otherwise).
NormalComplexReport normal_complex_equals_ipc(const RankFunction& rk, bool force = false);

} // namespace colorfan
