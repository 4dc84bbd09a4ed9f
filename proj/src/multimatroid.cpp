#include "colorfan/multimatroid.hpp"

#include <algorithm>
#include <numeric>

namespace colorfan {

RankFunction make_rank(PosetPtr poset, std::vector<Rational> values) {
    if (static_cast<int>(values.size()) != poset->set_count())
        throw input_error("rank vector has wrong length");
    if (values[poset->empty_id()] != 0)
        throw input_error("rk(empty) must be 0");
    return RankFunction{std::move(poset), std::move(values)};
}

RankFunction make_rank(PosetPtr poset, const std::map<int, Rational>& values) {
    std::vector<Rational> v(poset->set_count(), Rational(0));
    for (const auto& [id, r] : values) {
        if (id < 0 || id >= poset->set_count())
            throw input_error("rank on invalid set id");
        v[id] = r;
    }
    return make_rank(std::move(poset), std::move(v));
}

namespace {

std::string set_name(const Poset& P, int id) {
    auto labs = P.labels_of(id);
    std::string out = "{";
    for (std::size_t i = 0; i < labs.size(); ++i) {
        if (i) out += ",";
        out += labs[i];
    }
    return out + "}";
}

} // namespace

RAxiomReport check_R_axioms(const RankFunction& rk) {
    const Poset& P = *rk.poset;
    RAxiomReport rep;
    if (rk.values[P.empty_id()] != 0) {
        rep.r1 = false;
        rep.w1 = AxiomWitness{P.empty_id(), -1, "rk(empty) != 0"};
    }
    // R2 on covering pairs S < S + x.
    for (int s = 0; s < P.set_count() && rep.r2; ++s) {
        const auto& slots = P.slots(s);
        for (int b = 0; b < P.n() && rep.r2; ++b) {
            if (slots[b] != -1) continue;
            for (int p = 0; p < P.ground().block_size(b); ++p) {
                std::vector<int> up = slots;
                up[b] = p;
                int t = P.id_of_slots(up);
                if (rk.values[s] > rk.values[t]) {
                    rep.r2 = false;
                    rep.w2 = AxiomWitness{s, t,
                                          "rk" + set_name(P, s) + " = " + to_string(rk.values[s]) +
                                              " > rk" + set_name(P, t) + " = " +
                                              to_string(rk.values[t])};
                    break;
                }
            }
        }
    }
    // R3 on all pairs with colored union.
    for (int s = 0; s < P.set_count() && rep.r3; ++s)
        for (int t = s + 1; t < P.set_count(); ++t) {
            if (!P.compatible_union(s, t)) continue;
            int u = P.union_id(s, t);
            int i = P.intersect_id(s, t);
            if (rk.values[u] + rk.values[i] > rk.values[s] + rk.values[t]) {
                rep.r3 = false;
                rep.w3 = AxiomWitness{s, t,
                                      "rk" + set_name(P, u) + " + rk" + set_name(P, i) + " > rk" +
                                          set_name(P, s) + " + rk" + set_name(P, t)};
                break;
            }
        }
    return rep;
}

MultimatroidReport check_multimatroid_axioms(const RankFunction& rk) {
    const Poset& P = *rk.poset;
    MultimatroidReport rep;
    for (int s = 0; s < P.set_count(); ++s) {
        const Rational& v = rk.values[s];
        if (denominator(v) != 1 || v < 0) {
            rep.integral = false;
            rep.w_integral = AxiomWitness{s, -1, "rk" + set_name(P, s) + " = " + to_string(v) +
                                                     " is not a natural number"};
            break;
        }
    }
    if (rk.values[P.empty_id()] != 0) {
        rep.br1 = false;
        rep.w1 = AxiomWitness{P.empty_id(), -1, "rk(empty) != 0"};
    }
    // BR2: rk(S) <= rk(S + x) <= rk(S) + 1 for x in a block missing from S.
    for (int s = 0; s < P.set_count() && rep.br2; ++s) {
        const auto& slots = P.slots(s);
        for (int b = 0; b < P.n() && rep.br2; ++b) {
            if (slots[b] != -1) continue;
            for (int p = 0; p < P.ground().block_size(b); ++p) {
                std::vector<int> up = slots;
                up[b] = p;
                int t = P.id_of_slots(up);
                if (rk.values[t] < rk.values[s] || rk.values[t] > rk.values[s] + 1) {
                    rep.br2 = false;
                    rep.w2 = AxiomWitness{s, t,
                                          "rk" + set_name(P, t) + " = " + to_string(rk.values[t]) +
                                              " outside [rk, rk+1] of rk" + set_name(P, s) +
                                              " = " + to_string(rk.values[s])};
                    break;
                }
            }
        }
    }
    // BR3 = R3.
    for (int s = 0; s < P.set_count() && rep.br3; ++s)
        for (int t = s + 1; t < P.set_count(); ++t) {
            if (!P.compatible_union(s, t)) continue;
            int u = P.union_id(s, t);
            int i = P.intersect_id(s, t);
            if (rk.values[u] + rk.values[i] > rk.values[s] + rk.values[t]) {
                rep.br3 = false;
                rep.w3 = AxiomWitness{s, t, "submodularity fails"};
                break;
            }
        }
    // BR4: for x != y in a block missing from S, one of the increments is 1.
    for (int s = 0; s < P.set_count() && rep.br4; ++s) {
        const auto& slots = P.slots(s);
        for (int b = 0; b < P.n() && rep.br4; ++b) {
            if (slots[b] != -1) continue;
            const int r = P.ground().block_size(b);
            for (int p = 0; p < r && rep.br4; ++p)
                for (int q = p + 1; q < r; ++q) {
                    std::vector<int> up = slots;
                    up[b] = p;
                    int sx = P.id_of_slots(up);
                    up[b] = q;
                    int sy = P.id_of_slots(up);
                    if (rk.values[sx] - rk.values[s] != 1 && rk.values[sy] - rk.values[s] != 1) {
                        rep.br4 = false;
                        rep.w4 = AxiomWitness{sx, sy,
                                              "neither " + set_name(P, sx) + " nor " +
                                                  set_name(P, sy) + " increments rk" +
                                                  set_name(P, s) + " by 1"};
                        break;
                    }
                }
        }
    }
    return rep;
}

RestrictedRank restrict(const RankFunction& rk, int set_id) {
    const Poset& P = *rk.poset;
    RestrictedRank r;
    r.set_id = set_id;
    r.element_blocks = underlying_blocks(P, set_id);
    const int k = r.n();
    const auto& slots = P.slots(set_id);
    r.by_mask.resize(std::size_t(1) << k);
    std::vector<int> cur(P.n(), -1);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        for (int i = 0; i < k; ++i)
            cur[r.element_blocks[i]] = (mask >> i) & 1 ? slots[r.element_blocks[i]] : -1;
        r.by_mask[mask] = rk.values[P.id_of_slots(cur)];
    }
    return r;
}

bool satisfies_matroid_axioms(const RestrictedRank& r) {
    const unsigned full = (1u << r.n());
    if (r.by_mask[0] != 0) return false;
    for (unsigned a = 0; a < full; ++a)
        for (int i = 0; i < r.n(); ++i) {
            if (a & (1u << i)) continue;
            if (r.by_mask[a] > r.by_mask[a | (1u << i)]) return false;
        }
    for (unsigned a = 0; a < full; ++a)
        for (unsigned b = a + 1; b < full; ++b)
            if (r.by_mask[a | b] + r.by_mask[a & b] > r.by_mask[a] + r.by_mask[b]) return false;
    return true;
}

Divisor divisor_of(const RankFunction& rk) {
    std::map<int, Rational> coeffs;
    for (int id = 1; id < rk.poset->set_count(); ++id)
        if (rk.values[id] != 0) coeffs.emplace(id, rk.values[id]);
    return make_divisor(rk.poset, Basis::X, std::move(coeffs));
}

const char* cubicality_name(Cubicality c) {
    switch (c) {
        case Cubicality::NotPseudoCubical: return "not_pseudo_cubical";
        case Cubicality::PseudoCubical: return "pseudo_cubical";
        case Cubicality::Cubical: return "cubical";
    }
    return "?";
}

CubicalityReport cubicality(const RankFunction& rk) {
    const Poset& P = *rk.poset;
    CubicalityReport rep;
    std::optional<Chain> tight;
    std::string tight_detail;
    for (int t : P.maximal_ids()) {
        for (const Chain& chain : enumerate_max_chains(P, t)) {
            const int n = static_cast<int>(chain.size());
            auto rank_at = [&](int i) { // i in [0, n], 0 = empty set
                return i == 0 ? Rational(0) : rk.values[chain[i - 1]];
            };
            for (int i = 1; i <= n; ++i) {
                // monotone step
                Rational lo = rank_at(i - 1), hi = rank_at(i);
                if (hi < lo) {
                    rep.verdict = Cubicality::NotPseudoCubical;
                    rep.witness = chain;
                    rep.detail = "rk decreases along the chain: " + to_string(hi) + " < " +
                                 to_string(lo);
                    return rep;
                }
                if (hi == lo && !tight) {
                    tight = chain;
                    tight_detail = "rk(S_" + std::to_string(i) + ") = rk(S_" +
                                   std::to_string(i - 1) + ") = " + to_string(hi);
                }
                // concavity step, i <= n-1
                if (i <= n - 1) {
                    Rational lhs = 2 * rank_at(i);
                    Rational rhs = rank_at(i - 1) + rank_at(i + 1);
                    if (lhs < rhs) {
                        rep.verdict = Cubicality::NotPseudoCubical;
                        rep.witness = chain;
                        rep.detail = "2*" + to_string(rank_at(i)) + " < " +
                                     to_string(rank_at(i - 1)) + " + " + to_string(rank_at(i + 1));
                        return rep;
                    }
                    if (lhs == rhs && !tight) {
                        tight = chain;
                        tight_detail = "2*" + to_string(rank_at(i)) + " = " +
                                       to_string(rank_at(i - 1)) + " + " +
                                       to_string(rank_at(i + 1));
                    }
                }
            }
        }
    }
    if (tight) {
        rep.verdict = Cubicality::PseudoCubical;
        rep.witness = tight;
        rep.detail = tight_detail;
    }
    return rep;
}

RankFunction boolean_multimatroid(PosetPtr poset) {
    std::vector<Rational> v(poset->set_count());
    for (int id = 0; id < poset->set_count(); ++id) v[id] = poset->size_of(id);
    return make_rank(std::move(poset), std::move(v));
}

RankFunction quadratic_rank(PosetPtr poset) {
    const int n = poset->n();
    auto choose2 = [](int m) { return m * (m - 1) / 2; };
    std::vector<Rational> v(poset->set_count());
    for (int id = 0; id < poset->set_count(); ++id)
        v[id] = choose2(n + 1) - choose2(n + 1 - poset->size_of(id));
    return make_rank(std::move(poset), std::move(v));
}

RankFunction sum_h_rank(PosetPtr poset) {
    std::map<int, Rational> ones;
    for (int id = 1; id < poset->set_count(); ++id) ones[id] = 1;
    Divisor sum_h = make_divisor(poset, Basis::H, std::move(ones));
    Divisor x = convert(sum_h, Basis::X);
    std::vector<Rational> v(poset->set_count(), Rational(0));
    for (const auto& [id, c] : x.coeffs) v[id] = c;
    return make_rank(std::move(poset), std::move(v));
}

namespace {

// Deterministic generator independent of the standard library's
// distribution implementations.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {
        next();
        next();
    }
    std::uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545f4914f6cdd1dull;
    }
    int uniform(int lo, int hi) { // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

RankFunction sample_pseudo_cubical(const PosetPtr& poset, Rng& rng) {
    const int n = poset->n();
    // Strictly decreasing positive increments by size, then small per-set
    // noise; the margin keeps the chain inequalities valid.
    std::vector<Rational> incr(n + 1, Rational(0));
    for (int k = 1; k <= n; ++k)
        incr[k] = Rational(2 * (n - k + 1) + rng.uniform(0, 1), 1);
    // enforce strict decrease
    for (int k = 1; k < n; ++k)
        if (incr[k] <= incr[k + 1]) incr[k] = incr[k + 1] + 1;
    std::vector<Rational> base(n + 1, Rational(0));
    for (int k = 1; k <= n; ++k) base[k] = base[k - 1] + incr[k];

    std::vector<Rational> v(poset->set_count());
    for (int id = 0; id < poset->set_count(); ++id) {
        v[id] = base[poset->size_of(id)];
        if (id != poset->empty_id()) v[id] += Rational(rng.uniform(0, 3), 16);
    }
    return make_rank(poset, std::move(v));
}

RankFunction sample_coverage(const PosetPtr& poset, Rng& rng, bool modular) {
    const Poset& P = *poset;
    const GroundSet& g = P.ground();
    // Universe with random positive weights; each ground element covers a
    // random subset (a dedicated point per element in the modular case).
    int total_elems = 0;
    for (int b = 0; b < P.n(); ++b) total_elems += g.block_size(b);
    const int m = modular ? total_elems : std::max(3, P.n() + 2);
    std::vector<Rational> weight(m);
    for (int u = 0; u < m; ++u) weight[u] = Rational(rng.uniform(1, 12), rng.uniform(1, 2));

    std::vector<std::vector<std::uint32_t>> covers(P.n()); // per block, per position
    int next_point = 0;
    for (int b = 0; b < P.n(); ++b) {
        covers[b].resize(g.block_size(b));
        for (int p = 0; p < g.block_size(b); ++p) {
            if (modular) {
                covers[b][p] = 1u << (next_point++ % 32);
            } else {
                std::uint32_t c = 0;
                for (int u = 0; u < m; ++u)
                    if (rng.uniform(0, 2) == 0) c |= 1u << u;
                covers[b][p] = c;
            }
        }
    }
    std::vector<Rational> v(P.set_count());
    for (int id = 0; id < P.set_count(); ++id) {
        std::uint32_t covered = 0;
        const auto& slots = P.slots(id);
        for (int b = 0; b < P.n(); ++b)
            if (slots[b] != -1) covered |= covers[b][slots[b]];
        Rational r(0);
        for (int u = 0; u < m; ++u)
            if (covered & (1u << u)) r += weight[u];
        v[id] = r;
    }
    return make_rank(poset, std::move(v));
}

} // namespace

RankFunction random_R_multimatroid(PosetPtr poset, std::uint64_t seed, SampleMode mode,
                                   const SampleOptions& opts) {
    Rng rng(seed);
    for (int attempt = 0; attempt < opts.rejection_budget; ++attempt) {
        RankFunction rk = mode == SampleMode::PseudoCubical
                              ? sample_pseudo_cubical(poset, rng)
                              : sample_coverage(poset, rng, opts.modular);
        if (mode == SampleMode::PseudoCubical) {
            if (cubicality(rk).verdict != Cubicality::NotPseudoCubical &&
                check_R_axioms(rk).pass())
                return rk;
        } else {
            if (check_R_axioms(rk).pass()) return rk;
        }
    }
    throw input_error("rejection budget of " + std::to_string(opts.rejection_budget) +
                      " samples exceeded");
}

// DFS over integer rank vectors in level order with incremental BR pruning;
// visits exactly the multimatroids with ranks bounded by max_rank.
void enumerate_multimatroids(const Poset& P, int max_rank,
                             const std::function<void(const std::vector<Rational>&)>& fn) {
    std::vector<int> order(P.set_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::make_pair(P.size_of(a), a) < std::make_pair(P.size_of(b), b);
    });

    std::vector<Rational> rk(P.set_count(), Rational(0));
    std::vector<char> assigned(P.set_count(), 0);

    // subset pairs with union = S, both proper, precomputed per set
    std::vector<std::vector<std::pair<int, int>>> union_pairs(P.set_count());
    for (int s = 0; s < P.set_count(); ++s) {
        std::vector<int> subs;
        for_each_nonempty_subset(P, s, [&](int x) {
            if (x != s) subs.push_back(x);
        });
        subs.push_back(P.empty_id());
        for (int a : subs)
            for (int b : subs)
                if (a <= b && P.union_id(a, b) == s) union_pairs[s].emplace_back(a, b);
    }

    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == order.size()) {
            fn(rk);
            return;
        }
        int s = order[depth];
        if (s == P.empty_id()) {
            assigned[s] = 1;
            self(self, depth + 1);
            assigned[s] = 0;
            return;
        }
        const auto& slots = P.slots(s);
        for (int v = 0; v <= max_rank; ++v) {
            rk[s] = v;
            bool ok = true;
            // BR2 against every coapex S \ {x}
            for (int b = 0; b < P.n() && ok; ++b) {
                if (slots[b] == -1) continue;
                std::vector<int> down = slots;
                down[b] = -1;
                int sub = P.id_of_slots(down);
                Rational diff = rk[s] - rk[sub];
                if (diff < 0 || diff > 1) ok = false;
            }
            // BR3 on pairs with union exactly S
            for (const auto& [a, b] : union_pairs[s]) {
                if (!ok) break;
                int meet = P.intersect_id(a, b);
                if (rk[s] + rk[meet] > rk[a] + rk[b]) ok = false;
            }
            // BR4 against already-assigned siblings
            for (int b = 0; b < P.n() && ok; ++b) {
                if (slots[b] == -1) continue;
                std::vector<int> down = slots;
                down[b] = -1;
                int base = P.id_of_slots(down);
                for (int q = 0; q < P.ground().block_size(b) && ok; ++q) {
                    if (q == slots[b]) continue;
                    std::vector<int> sib = slots;
                    sib[b] = q;
                    int sid = P.id_of_slots(sib);
                    if (!assigned[sid]) continue;
                    if (rk[s] - rk[base] != 1 && rk[sid] - rk[base] != 1) ok = false;
                }
            }
            if (ok) {
                assigned[s] = 1;
                self(self, depth + 1);
                assigned[s] = 0;
            }
        }
        rk[s] = 0;
    };
    rec(rec, 0);
}


} // namespace colorfan
