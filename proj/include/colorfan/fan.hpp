#pragma once

#include "colorfan/ground.hpp"
#include "colorfan/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace colorfan {

/// Ray vector of a nonempty colored set in the dropped-label coordinates of
/// N^pi (ambient dimension sum_i (|E_i| - 1)). input_error on the empty set.
LatVec ray_vector(const Poset& poset, int set_id);

/// A weighted cycle of pure dimension `dim`: rational weights on dim-cones
/// of the fan, keyed by their chains; absent cones carry weight 0.
struct WeightedCycle {
    int dim = 0;
    std::map<Chain, Rational> weights;
};

struct BalanceReport {
    bool balanced = true;
    std::optional<Chain> violating_face; // first failure in canonical cone order
};

struct UnimodularReport {
    bool unimodular = true;
    std::optional<Chain> violating_cone;
};

/// The pi-colored fan: one cone per chain of nonempty colored sets (plus the
/// origin), indexed and grouped by dimension. Immutable after build;
/// structural certification (unimodularity, top-cycle balancing) is computed
/// eagerly so the degree engine can rely on it.
class Fan {
public:
    static Fan build(PosetPtr poset);

    const Poset& poset() const { return *poset_; }
    const PosetPtr& poset_ptr() const { return poset_; }
    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return poset_->n(); }

    int cone_count() const { return static_cast<int>(chains_.size()); }
    const Chain& chain_of(int cone) const { return chains_[cone]; }
    int dim_of(int cone) const { return static_cast<int>(chains_[cone].size()); }
    const std::vector<int>& cones_of_dim(int d) const { return by_dim_[d]; }
    int cone_id(const Chain& chain) const; // -1 if absent

    struct ConeFacet {
        int facet;   // cone id of the chain with one set removed
        int dropped; // the removed set id
    };
    const std::vector<ConeFacet>& facets_of(int cone) const { return facets_[cone]; }

    const LatVec& ray(int set_id) const { return rays_[set_id]; }

    /// Writes v as sum_j lambda_j * ray(chain[j]); nullopt if v is not in the
    /// span of the cone's generators. Exact.
    std::optional<RatVec> span_coefficients(const Chain& chain, const RatVec& v) const;

    const UnimodularReport& unimodularity() const { return unimodular_; }
    const BalanceReport& top_balancing() const { return top_balance_; }

    /// Raw intersection value of the canonical maximal-chain monomial; the
    /// degree map is this engine output divided by the calibration (+-1).
    const Rational& calibration() const { return calibration_; }
    void set_calibration(Rational c) { calibration_ = std::move(c); }

private:
    PosetPtr poset_;
    int ambient_dim_ = 0;
    std::vector<int> coord_base_;          // first coordinate of each block
    std::vector<LatVec> rays_;             // per set id (empty vector for id 0)
    std::vector<Chain> chains_;            // per cone id; chains_[0] is empty
    std::vector<std::vector<int>> by_dim_;
    std::map<Chain, int> index_;
    std::vector<std::vector<ConeFacet>> facets_;
    UnimodularReport unimodular_;
    BalanceReport top_balance_;
    Rational calibration_ = 0;             // 0 = not yet computed

    friend std::optional<RatVec> span_coefficients_impl(const Fan&, const Chain&, const RatVec&);
};

/// Weight-1 cycle on the maximal cones.
WeightedCycle top_cycle(const Fan& fan);

/// True iff the generators can be extended to a lattice basis: the gcd of all
/// maximal minors of the generator matrix is 1. Reduces to |det| == 1 when
/// the matrix is square.
bool generators_unimodular(const std::vector<LatVec>& generators);

UnimodularReport check_unimodular(const Fan& fan);

/// Exact balancing test: for every codimension-one face tau of the cycle's
/// support, the weighted sum of coface ray generators lies in span(tau).
BalanceReport check_balancing(const Fan& fan, const WeightedCycle& cycle);

} // namespace colorfan
