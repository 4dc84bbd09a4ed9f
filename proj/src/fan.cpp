#include "colorfan/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace colorfan {

LatVec ray_vector(const Poset& poset, int set_id) {
    if (set_id == poset.empty_id())
        throw input_error("the empty set has no ray");
    const GroundSet& g = poset.ground();
    int dim = 0;
    std::vector<int> base(g.block_count());
    for (int b = 0; b < g.block_count(); ++b) {
        base[b] = dim;
        dim += g.block_size(b) - 1;
    }
    LatVec v = LatVec::Zero(dim);
    const auto& slots = poset.slots(set_id);
    for (int b = 0; b < g.block_count(); ++b) {
        if (slots[b] == -1) continue;
        int drop = g.dropped_pos(b);
        if (slots[b] == drop) {
            for (int p = 0, c = 0; p < g.block_size(b); ++p) {
                if (p == drop) continue;
                v(base[b] + c) -= 1;
                ++c;
            }
        } else {
            int c = slots[b] - (slots[b] > drop ? 1 : 0);
            v(base[b] + c) += 1;
        }
    }
    return v;
}

Fan Fan::build(PosetPtr poset) {
    Fan fan;
    fan.poset_ = std::move(poset);
    const Poset& P = *fan.poset_;
    const GroundSet& g = P.ground();
    const int n = P.n();

    // The quotient collapses blocks of size one (their rays vanish), so the
    // fan is only defined when every block has at least two labels.
    for (int b = 0; b < n; ++b)
        if (g.block_size(b) < 2)
            throw input_error("fan construction needs at least two labels per block");

    fan.coord_base_.resize(n);
    for (int b = 0; b < n; ++b) {
        fan.coord_base_[b] = fan.ambient_dim_;
        fan.ambient_dim_ += g.block_size(b) - 1;
    }

    fan.rays_.resize(P.set_count());
    for (int id = 1; id < P.set_count(); ++id)
        fan.rays_[id] = ray_vector(P, id);

    // Enumerate every chain of nonempty colored sets by DFS from each set,
    // extending only by supersets. The origin is cone 0.
    fan.by_dim_.resize(n + 1);
    auto add_cone = [&](const Chain& chain) {
        int id = static_cast<int>(fan.chains_.size());
        fan.chains_.push_back(chain);
        fan.index_.emplace(chain, id);
        fan.by_dim_[chain.size()].push_back(id);
        return id;
    };
    add_cone({});

    // Supersets of each set, precomputed for the DFS.
    std::vector<std::vector<int>> supersets(P.set_count());
    for (int a = 1; a < P.set_count(); ++a)
        for (int b = a + 1; b < P.set_count(); ++b) {
            if (P.subset(a, b)) supersets[a].push_back(b);
            else if (P.subset(b, a)) supersets[b].push_back(a);
        }
    for (auto& v : supersets) std::sort(v.begin(), v.end());

    std::vector<int> stack;
    auto dfs = [&](auto&& self, int top) -> void {
        stack.push_back(top);
        add_cone(stack);
        if (static_cast<int>(stack.size()) < n)
            for (int s : supersets[top]) self(self, s);
        stack.pop_back();
    };
    for (int id = 1; id < P.set_count(); ++id) dfs(dfs, id);

    fan.facets_.resize(fan.chains_.size());
    for (int c = 0; c < fan.cone_count(); ++c) {
        const Chain& chain = fan.chains_[c];
        for (std::size_t j = 0; j < chain.size(); ++j) {
            Chain sub = chain;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
            fan.facets_[c].push_back({fan.index_.at(sub), chain[j]});
        }
    }

    fan.unimodular_ = check_unimodular(fan);
    fan.top_balance_ = check_balancing(fan, top_cycle(fan));
    return fan;
}

int Fan::cone_id(const Chain& chain) const {
    auto it = index_.find(chain);
    return it == index_.end() ? -1 : it->second;
}

std::optional<RatVec> Fan::span_coefficients(const Chain& chain, const RatVec& v) const {
    const Poset& P = *poset_;
    const GroundSet& g = P.ground();
    const int k = static_cast<int>(chain.size());
    if (k == 0) return v.isZero(0) ? std::make_optional(RatVec(0)) : std::nullopt;

    // All sets in a chain pick the same element per occupied block, so the
    // coefficient along e_t can be read off one signature coordinate of t
    // and the candidate combination verified by exact reconstruction.
    const auto& top = P.slots(chain[k - 1]);
    RatVec gamma(k); // gamma_j: coefficient along e_t for t entering at step j
    for (int j = 0; j < k; ++j) {
        const auto& cur = P.slots(chain[j]);
        const int* prev = j > 0 ? P.slots(chain[j - 1]).data() : nullptr;
        int block = -1;
        for (int b = 0; b < P.n(); ++b) {
            if (cur[b] == -1) continue;
            if (prev && prev[b] != -1) continue;
            block = b;
            break;
        }
        if (block < 0) return std::nullopt; // not a strict chain
        int pos = top[block];
        int drop = g.dropped_pos(block);
        if (pos == drop) {
            int other = drop == 0 ? 1 : 0; // any other position of the block
            gamma(j) = -v(coord_base_[block] + (other > drop ? other - 1 : other));
        } else {
            gamma(j) = v(coord_base_[block] + (pos > drop ? pos - 1 : pos));
        }
    }
    RatVec lambda(k);
    for (int j = 0; j < k; ++j)
        lambda(j) = gamma(j) - (j + 1 < k ? gamma(j + 1) : Rational(0));

    RatVec rebuilt = RatVec::Zero(ambient_dim_);
    for (int j = 0; j < k; ++j)
        rebuilt += lambda(j) * to_rational(rays_[chain[j]]);
    if (rebuilt != v) return std::nullopt;
    return lambda;
}

WeightedCycle top_cycle(const Fan& fan) {
    WeightedCycle cycle;
    cycle.dim = fan.dim();
    for (int c : fan.cones_of_dim(fan.dim()))
        cycle.weights.emplace(fan.chain_of(c), Rational(1));
    return cycle;
}

namespace {

std::int64_t int_det(const std::vector<std::vector<std::int64_t>>& m) {
    const int k = static_cast<int>(m.size());
    if (k == 0) return 1;
    if (k == 1) return m[0][0];
    std::int64_t det = 0;
    std::vector<std::vector<std::int64_t>> minor(k - 1, std::vector<std::int64_t>(k - 1));
    for (int c = 0; c < k; ++c) {
        if (m[0][c] == 0) continue;
        for (int i = 1; i < k; ++i)
            for (int j = 0, jj = 0; j < k; ++j)
                if (j != c) minor[i - 1][jj++] = m[i][j];
        std::int64_t sub = int_det(minor);
        det += (c % 2 == 0 ? 1 : -1) * m[0][c] * sub;
    }
    return det;
}

} // namespace

bool generators_unimodular(const std::vector<LatVec>& generators) {
    if (generators.empty()) return true;
    const int k = static_cast<int>(generators.size());
    const int dim = static_cast<int>(generators[0].size());
    if (k > dim) return false;
    // gcd of all k x k minors (rows chosen among the dim coordinates)
    std::vector<int> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    std::int64_t gcd = 0;
    std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k));
    while (true) {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = generators[j](rows[i]);
        gcd = std::gcd(gcd, int_det(m));
        if (gcd == 1) return true;
        // next combination
        int i = k - 1;
        while (i >= 0 && rows[i] == dim - k + i) --i;
        if (i < 0) break;
        ++rows[i];
        for (int j = i + 1; j < k; ++j) rows[j] = rows[j - 1] + 1;
    }
    return gcd == 1;
}

UnimodularReport check_unimodular(const Fan& fan) {
    UnimodularReport report;
    for (int c : fan.cones_of_dim(fan.dim())) {
        const Chain& chain = fan.chain_of(c);
        std::vector<LatVec> gens;
        gens.reserve(chain.size());
        for (int s : chain) gens.push_back(fan.ray(s));
        if (!generators_unimodular(gens)) {
            report.unimodular = false;
            report.violating_cone = chain;
            return report;
        }
    }
    return report;
}

BalanceReport check_balancing(const Fan& fan, const WeightedCycle& cycle) {
    BalanceReport report;
    if (cycle.dim == 0) return report;

    // Accumulate the weighted coface sum at every codimension-one face of
    // the support, then test exact span membership.
    std::map<int, RatVec> sums;
    for (const auto& [chain, w] : cycle.weights) {
        if (w == 0) continue;
        int cone = fan.cone_id(chain);
        if (cone < 0) throw input_error("cycle references a cone outside the fan");
        if (static_cast<int>(chain.size()) != cycle.dim)
            throw input_error("cycle cone of wrong dimension");
        for (const auto& f : fan.facets_of(cone)) {
            auto [it, fresh] = sums.emplace(f.facet, RatVec());
            if (fresh) it->second = RatVec::Zero(fan.ambient_dim());
            it->second += w * to_rational(fan.ray(f.dropped));
        }
    }
    for (const auto& [face, sum] : sums) {
        if (!fan.span_coefficients(fan.chain_of(face), sum)) {
            report.balanced = false;
            report.violating_face = fan.chain_of(face);
            return report;
        }
    }
    return report;
}

} // namespace colorfan
