#include "colorfan/ground.hpp"

#include <algorithm>
#include <numeric>

namespace colorfan {

GroundSet::GroundSet(std::vector<std::vector<std::string>> blocks)
    : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw input_error("ground set needs at least one block");
    dropped_.resize(blocks_.size());
    for (int b = 0; b < block_count(); ++b) {
        if (blocks_[b].empty())
            throw input_error("block " + std::to_string(b) + " is empty");
        int last = 0;
        for (int p = 0; p < block_size(b); ++p) {
            const std::string& lab = blocks_[b][p];
            if (!where_.emplace(lab, std::make_pair(b, p)).second)
                throw input_error("duplicate label '" + lab + "'");
            if (blocks_[b][p] > blocks_[b][last]) last = p;
        }
        dropped_[b] = last;
    }
}

std::pair<int, int> GroundSet::locate(const std::string& label) const {
    auto it = where_.find(label);
    if (it == where_.end()) throw input_error("unknown label '" + label + "'");
    return it->second;
}

Poset::Poset(GroundSet ground) : ground_(std::move(ground)) {
    const int n = ground_.block_count();
    radix_weight_.assign(n, 1);
    long long count = 1;
    for (int b = n - 1; b >= 0; --b) {
        radix_weight_[b] = static_cast<int>(count);
        count *= ground_.block_size(b) + 1;
        if (count > (1 << 24))
            throw input_error("ground set too large to enumerate");
    }
    set_count_ = static_cast<int>(count);

    slots_.resize(set_count_);
    size_.resize(set_count_);
    mask_.resize(set_count_);
    for (int id = 0; id < set_count_; ++id) {
        std::vector<int> s(n);
        int rest = id, size = 0;
        std::uint32_t mask = 0;
        for (int b = 0; b < n; ++b) {
            int digit = rest / radix_weight_[b];
            rest %= radix_weight_[b];
            s[b] = digit - 1;
            if (digit > 0) {
                ++size;
                mask |= 1u << b;
            }
        }
        slots_[id] = std::move(s);
        size_[id] = size;
        mask_[id] = mask;
        if (size == n) maximal_.push_back(id);
    }
}

std::shared_ptr<const Poset> Poset::create(GroundSet ground) {
    return std::shared_ptr<const Poset>(new Poset(std::move(ground)));
}

int Poset::id_of_slots(const std::vector<int>& slots) const {
    if (static_cast<int>(slots.size()) != n())
        throw input_error("slot vector has wrong length");
    int id = 0;
    for (int b = 0; b < n(); ++b) {
        int digit = slots[b] + 1;
        if (digit < 0 || digit > ground_.block_size(b))
            throw input_error("slot out of range");
        id += digit * radix_weight_[b];
    }
    return id;
}

bool Poset::subset(int a, int b) const {
    const auto& sa = slots_[a];
    const auto& sb = slots_[b];
    for (int i = 0; i < n(); ++i)
        if (sa[i] != -1 && sa[i] != sb[i]) return false;
    return true;
}

bool Poset::compatible_union(int a, int b) const {
    const auto& sa = slots_[a];
    const auto& sb = slots_[b];
    for (int i = 0; i < n(); ++i)
        if (sa[i] != -1 && sb[i] != -1 && sa[i] != sb[i]) return false;
    return true;
}

int Poset::union_id(int a, int b) const {
    const auto& sa = slots_[a];
    const auto& sb = slots_[b];
    std::vector<int> s(n());
    for (int i = 0; i < n(); ++i) s[i] = sa[i] != -1 ? sa[i] : sb[i];
    return id_of_slots(s);
}

int Poset::intersect_id(int a, int b) const {
    const auto& sa = slots_[a];
    const auto& sb = slots_[b];
    std::vector<int> s(n());
    for (int i = 0; i < n(); ++i) s[i] = (sa[i] == sb[i]) ? sa[i] : -1;
    return id_of_slots(s);
}

std::vector<std::string> Poset::labels_of(int id) const {
    std::vector<std::string> out;
    const auto& s = slots_[id];
    for (int b = 0; b < n(); ++b)
        if (s[b] != -1) out.push_back(ground_.label(b, s[b]));
    return out;
}

int Poset::id_of_labels(const std::vector<std::string>& labels) const {
    std::vector<int> s(n(), -1);
    for (const auto& lab : labels) {
        auto [b, p] = ground_.locate(lab);
        if (s[b] != -1 && s[b] != p)
            throw input_error("set is not colored: two labels in block " + std::to_string(b));
        s[b] = p;
    }
    return id_of_slots(s);
}

std::vector<int> enumerate_colored_sets(const Poset& poset) {
    std::vector<int> ids(poset.set_count());
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

std::vector<int> underlying_blocks(const Poset& poset, int id) {
    std::vector<int> out;
    const auto& s = poset.slots(id);
    for (int b = 0; b < poset.n(); ++b)
        if (s[b] != -1) out.push_back(b);
    return out;
}

std::vector<Chain> enumerate_max_chains(const Poset& poset, int maximal_id) {
    if (!poset.is_maximal(maximal_id))
        throw input_error("not a maximal colored set");
    const int n = poset.n();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto& tslots = poset.slots(maximal_id);
    std::vector<Chain> chains;
    do {
        Chain chain;
        std::vector<int> s(n, -1);
        for (int k = 0; k < n; ++k) {
            s[order[k]] = tslots[order[k]];
            chain.push_back(poset.id_of_slots(s));
        }
        chains.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
    return chains;
}

std::vector<Chain> enumerate_all_max_chains(const Poset& poset) {
    std::vector<Chain> all;
    for (int t : poset.maximal_ids()) {
        auto chains = enumerate_max_chains(poset, t);
        all.insert(all.end(), chains.begin(), chains.end());
    }
    return all;
}

void for_each_superset(const Poset& poset, int id, const std::function<void(int)>& fn) {
    const auto& s = poset.slots(id);
    std::vector<int> free_blocks;
    for (int b = 0; b < poset.n(); ++b)
        if (s[b] == -1) free_blocks.push_back(b);
    std::vector<int> cur = s;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == free_blocks.size()) {
            fn(poset.id_of_slots(cur));
            return;
        }
        int b = free_blocks[i];
        for (int p = -1; p < poset.ground().block_size(b); ++p) {
            cur[b] = p;
            self(self, i + 1);
        }
        cur[b] = -1;
    };
    rec(rec, 0);
}

void for_each_nonempty_subset(const Poset& poset, int id, const std::function<void(int)>& fn) {
    const auto& s = poset.slots(id);
    std::vector<int> occupied;
    for (int b = 0; b < poset.n(); ++b)
        if (s[b] != -1) occupied.push_back(b);
    const int k = static_cast<int>(occupied.size());
    std::vector<int> cur(poset.n(), -1);
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        for (int i = 0; i < k; ++i)
            cur[occupied[i]] = (mask >> i) & 1 ? s[occupied[i]] : -1;
        fn(poset.id_of_slots(cur));
    }
}

namespace {

bool augment(int i, const std::vector<std::vector<int>>& adj, std::vector<int>& match,
             std::vector<char>& seen) {
    for (int j : adj[i]) {
        if (seen[j]) continue;
        seen[j] = 1;
        if (match[j] == -1 || augment(match[j], adj, match, seen)) {
            match[j] = i;
            return true;
        }
    }
    return false;
}

bool has_sdr(const Poset& poset, const std::vector<int>& sets, int tid) {
    const int n = poset.n();
    const auto& tslots = poset.slots(tid);
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        const auto& s = poset.slots(sets[i]);
        for (int b = 0; b < n; ++b)
            if (s[b] != -1 && s[b] == tslots[b]) adj[i].push_back(b);
    }
    std::vector<int> match(n, -1);
    for (int i = 0; i < n; ++i) {
        std::vector<char> seen(n, 0);
        if (!augment(i, adj, match, seen)) return false;
    }
    return true;
}

} // namespace

long long transversal_count(const Poset& poset, const std::vector<int>& sets) {
    if (static_cast<int>(sets.size()) != poset.n())
        throw input_error("transversal_count needs exactly n sets");
    for (int id : sets)
        if (id == poset.empty_id())
            throw input_error("transversal_count needs nonempty sets");
    long long count = 0;
    for (int t : poset.maximal_ids())
        if (has_sdr(poset, sets, t)) ++count;
    return count;
}

} // namespace colorfan
