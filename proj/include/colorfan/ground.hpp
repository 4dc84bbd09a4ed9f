#pragma once

#include "colorfan/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace colorfan {

/// Partitioned ground set E = E_1 ⊔ ... ⊔ E_n. Blocks keep their input
/// order; labels are opaque strings, globally distinct.
class GroundSet {
public:
    explicit GroundSet(std::vector<std::vector<std::string>> blocks);

    int block_count() const { return static_cast<int>(blocks_.size()); }
    int block_size(int block) const { return static_cast<int>(blocks_[block].size()); }
    const std::string& label(int block, int pos) const { return blocks_[block][pos]; }
    const std::vector<std::vector<std::string>>& blocks() const { return blocks_; }

    /// (block, position) of a label; input_error if unknown.
    std::pair<int, int> locate(const std::string& label) const;

    /// Position of the lexicographically last label of the block (the one
    /// whose ray is minus the sum of the block's other basis vectors).
    int dropped_pos(int block) const { return dropped_[block]; }

    bool operator==(const GroundSet& other) const { return blocks_ == other.blocks_; }
    bool operator!=(const GroundSet& other) const { return !(*this == other); }

private:
    std::vector<std::vector<std::string>> blocks_;
    std::map<std::string, std::pair<int, int>> where_;
    std::vector<int> dropped_;
};

/// A colored set is stored as its id in the poset R_pi (see Poset). Chains
/// are strictly increasing id sequences ordered by inclusion.
using Chain = std::vector<int>;

/// The poset of colored subsets of a fixed ground set, id-indexed in
/// mixed-radix order: digit i of an id is 0 for "block i unused" or
/// 1 + (in-block position). Id 0 is the empty set. Immutable; share freely.
class Poset {
public:
    static std::shared_ptr<const Poset> create(GroundSet ground);

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.block_count(); }
    int set_count() const { return set_count_; }
    int empty_id() const { return 0; }

    /// Per-block slot: -1 if the block is unused, else the in-block position.
    const std::vector<int>& slots(int id) const { return slots_[id]; }
    int size_of(int id) const { return size_[id]; }
    bool is_maximal(int id) const { return size_[id] == n(); }
    const std::vector<int>& maximal_ids() const { return maximal_; }

    int id_of_slots(const std::vector<int>& slots) const;
    bool subset(int a, int b) const;
    bool compatible_union(int a, int b) const;
    int union_id(int a, int b) const;      // pre: compatible_union(a, b)
    int intersect_id(int a, int b) const;

    /// Bitmask over [n] of the blocks occupied by the set.
    std::uint32_t underlying_mask(int id) const { return mask_[id]; }

    /// Labels in canonical (block, position) order.
    std::vector<std::string> labels_of(int id) const;
    int id_of_labels(const std::vector<std::string>& labels) const;

private:
    explicit Poset(GroundSet ground);

    GroundSet ground_;
    int set_count_ = 0;
    std::vector<int> radix_weight_;            // per block
    std::vector<std::vector<int>> slots_;      // per id
    std::vector<int> size_;                    // per id
    std::vector<std::uint32_t> mask_;          // per id
    std::vector<int> maximal_;
};

using PosetPtr = std::shared_ptr<const Poset>;

/// All colored sets including the empty set, in canonical (id) order.
std::vector<int> enumerate_colored_sets(const Poset& poset);

/// Block indices occupied by the set, increasing.
std::vector<int> underlying_blocks(const Poset& poset, int id);

/// The n! maximal chains ending at the maximal set T, in lexicographic
/// order of the block insertion sequence. input_error if T is not maximal.
std::vector<Chain> enumerate_max_chains(const Poset& poset, int maximal_id);

/// Maximal chains of the whole poset, grouped by top element in id order.
std::vector<Chain> enumerate_all_max_chains(const Poset& poset);

/// Calls fn with every colored superset of the set, including itself.
void for_each_superset(const Poset& poset, int id, const std::function<void(int)>& fn);

/// Calls fn with every nonempty subset of the set, including itself.
void for_each_nonempty_subset(const Poset& poset, int id, const std::function<void(int)>& fn);

/// |T_pi(S_1, ..., S_n)|: the number of maximal colored sets T admitting a
/// bijection iota : [n] -> T with iota(i) in S_i (system of distinct
/// representatives, decided by augmenting-path matching).
/// input_error unless exactly n nonempty sets are given.
long long transversal_count(const Poset& poset, const std::vector<int>& sets);

} // namespace colorfan
