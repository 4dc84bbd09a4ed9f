#pragma once

#include "colorfan/fan.hpp"
#include "colorfan/ground.hpp"

#include <functional>
#include <map>
#include <vector>

namespace colorfan {

enum class Basis { X, F, H };

const char* basis_name(Basis b);
Basis basis_from_name(const std::string& name);

/// A divisor class on Sigma^pi: sparse rational coefficients on nonempty
/// colored sets in one of the three generator bases. x_empty = h_empty = 0,
/// so the empty set is never a key; zero coefficients are dropped.
struct Divisor {
    PosetPtr poset;
    Basis basis = Basis::X;
    std::map<int, Rational> coeffs;
};

Divisor make_divisor(PosetPtr poset, Basis basis, std::map<int, Rational> coeffs);

/// Generator divisors x_S, f_S, h_S.
Divisor generator_divisor(PosetPtr poset, Basis basis, int set_id);

/// Exact basis change, routed through the X<->F and F<->H triangular
/// (Moebius) transforms. Round trips are identities.
Divisor convert(const Divisor& d, Basis target);

/// Per-orthant collapse of the H-coefficients: a^T_X = sum of a_{S'} over
/// S' with S' ∩ T = X, for nonempty X ⊆ T. These are the Minkowski-sum
/// simplex coefficients for orthant T. T must be maximal.
std::map<int, Rational> restrict_to_boolean(const Divisor& d, int maximal_id);

/// Dense X-basis coefficient table indexed by set id (entry 0 unused).
std::vector<Rational> dense_x_coefficients(const Divisor& d);

struct DegreeOptions {
    /// Called with every intermediate cycle (dimensions n-1 down to 0).
    std::function<void(const WeightedCycle&)> on_intermediate;
};

/// Iterated tropical divisor intersection on the weight-1 top cycle. The
/// sign is calibrated once per fan against the canonical maximal-chain
/// monomial, whose degree is +1 by definition of the degree map.
class DegreeEngine {
public:
    explicit DegreeEngine(const Fan& fan);

    const Fan& fan() const { return *fan_; }
    const Rational& calibration() const { return calibration_; }

    Rational degree(const std::vector<Divisor>& divisors,
                    const DegreeOptions& opts = {}) const;

    /// Same, for pre-converted dense X-coefficient tables.
    Rational degree_x(const std::vector<std::vector<Rational>>& xcoeffs,
                      const DegreeOptions& opts = {}) const;

    /// Zero-copy variant for shared tables (hot loops).
    Rational degree_tables(const std::vector<const std::vector<Rational>*>& xcoeffs,
                           const DegreeOptions& opts = {}) const;

private:
    Rational raw(const std::vector<const std::vector<Rational>*>& phis,
                 const DegreeOptions& opts) const;

    const Fan* fan_;
    std::vector<RatVec> rat_rays_;   // per set id
    std::vector<int> dim_index_;     // cone id -> position within its dimension
    Rational calibration_ = 1;
};

/// One-shot convenience wrapper (builds a throwaway engine).
Rational degree_product(const Fan& fan, const std::vector<Divisor>& divisors,
                        const DegreeOptions& opts = {});

struct TransversalIdentityReport {
    Rational degree;
    long long transversal = 0;
    bool equal = false;
};

/// Both sides of the h-monomial identity, computed independently: the degree
/// through the intersection engine, the count through bipartite matching.
TransversalIdentityReport verify_transversal_identity(const DegreeEngine& engine,
                                                       const std::vector<int>& sets);

} // namespace colorfan
