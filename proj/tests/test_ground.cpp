#include "colorfan/ground.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdint>

using namespace colorfan;

namespace {

PosetPtr b2() { return Poset::create(GroundSet({{"1", "1bar"}, {"2", "2bar"}})); }

// Independent oracle for the transversal count: try every bijection
// explicitly instead of running a matching.
long long transversal_bruteforce(const Poset& poset, const std::vector<int>& sets) {
    long long count = 0;
    const int n = poset.n();
    for (int t : poset.maximal_ids()) {
        const auto& tslots = poset.slots(t);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        bool found = false;
        do {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                int block = perm[i];
                const auto& s = poset.slots(sets[i]);
                ok = s[block] != -1 && s[block] == tslots[block];
            }
            if (ok) found = true;
        } while (!found && std::next_permutation(perm.begin(), perm.end()));
        if (found) ++count;
    }
    return count;
}

std::uint64_t mix(std::uint64_t& s) {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545f4914f6cdd1dull;
}

} // namespace

TEST_CASE("colored set counts") {
    auto p = b2();
    CHECK(p->set_count() == 9);
    CHECK(p->maximal_ids().size() == 4);

    auto q = Poset::create(GroundSet({{"a", "b", "c"}, {"1", "2"}}));
    CHECK(q->set_count() == 12);
    CHECK(q->maximal_ids().size() == 6);

    auto r = Poset::create(GroundSet({{"x", "y", "z", "w"}}));
    CHECK(r->set_count() == 5);
    CHECK(r->maximal_ids().size() == 4);
}

TEST_CASE("ground set validation") {
    CHECK_THROWS_AS(GroundSet({}), input_error);
    CHECK_THROWS_AS(GroundSet({{"a"}, {}}), input_error);
    CHECK_THROWS_AS(GroundSet({{"a", "b"}, {"a"}}), input_error);
    CHECK_THROWS_AS(b2()->id_of_labels({"1", "1bar"}), input_error);
    CHECK_THROWS_AS(b2()->id_of_labels({"nope"}), input_error);
}

TEST_CASE("maximal chains") {
    auto p = b2();
    int t12 = p->id_of_labels({"1", "2"});
    auto chains = enumerate_max_chains(*p, t12);
    REQUIRE(chains.size() == 2);
    CHECK(chains[0] == Chain{p->id_of_labels({"1"}), t12});
    CHECK(chains[1] == Chain{p->id_of_labels({"2"}), t12});

    CHECK(enumerate_all_max_chains(*p).size() == 8);
    CHECK_THROWS_AS(enumerate_max_chains(*p, p->id_of_labels({"1"})), input_error);

    auto q = Poset::create(GroundSet({{"a", "b"}, {"c", "d"}, {"e", "f"}}));
    CHECK(enumerate_max_chains(*q, q->maximal_ids()[0]).size() == 6);
}

TEST_CASE("underlying blocks") {
    auto p = b2();
    CHECK(underlying_blocks(*p, p->id_of_labels({"1", "2bar"})) == std::vector<int>{0, 1});
    CHECK(underlying_blocks(*p, p->empty_id()).empty());
    auto q = Poset::create(GroundSet({{"a", "b", "c"}, {"1", "2"}}));
    CHECK(underlying_blocks(*q, q->id_of_labels({"a"})) == std::vector<int>{0});
}

TEST_CASE("transversal count examples") {
    auto p = b2();
    int s1 = p->id_of_labels({"1", "2"});
    int s2 = p->id_of_labels({"1bar", "2"});
    CHECK(transversal_count(*p, {s1, s2}) == 2);

    int one = p->id_of_labels({"1"});
    CHECK(transversal_count(*p, {one, one}) == 0);

    CHECK(transversal_count(*p, {one, s1}) == 1); // maximal chain

    CHECK_THROWS_AS(transversal_count(*p, {s1}), input_error);
    CHECK_THROWS_AS(transversal_count(*p, {s1, p->empty_id()}), input_error);
}

TEST_CASE("transversal count matches brute force and is symmetric") {
    auto q = Poset::create(GroundSet({{"a", "b", "c"}, {"1", "2"}, {"x", "y"}}));
    std::uint64_t state = 77;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> sets(3);
        for (auto& s : sets) s = 1 + static_cast<int>(mix(state) % (q->set_count() - 1));
        long long fast = transversal_count(*q, sets);
        CHECK(fast == transversal_bruteforce(*q, sets));
        std::vector<int> shuffled = sets;
        std::swap(shuffled[0], shuffled[2]);
        CHECK(fast == transversal_count(*q, shuffled));
        CHECK(fast <= static_cast<long long>(q->maximal_ids().size()));
    }
}

TEST_CASE("transversal count is monotone under enlarging a set") {
    auto p = b2();
    std::uint64_t state = 3;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> sets(2);
        for (auto& s : sets) s = 1 + static_cast<int>(mix(state) % (p->set_count() - 1));
        long long base = transversal_count(*p, sets);
        auto slots = p->slots(sets[0]);
        for (int b = 0; b < p->n(); ++b) {
            if (slots[b] != -1) continue;
            auto up = slots;
            up[b] = 0;
            auto bigger = sets;
            bigger[0] = p->id_of_slots(up);
            CHECK(transversal_count(*p, bigger) >= base);
        }
    }
}

TEST_CASE("subset and union helpers") {
    auto p = b2();
    int one = p->id_of_labels({"1"});
    int pair = p->id_of_labels({"1", "2"});
    int other = p->id_of_labels({"1bar"});
    CHECK(p->subset(one, pair));
    CHECK_FALSE(p->subset(pair, one));
    CHECK_FALSE(p->compatible_union(one, other));
    CHECK(p->union_id(one, p->id_of_labels({"2"})) == pair);
    CHECK(p->intersect_id(pair, p->id_of_labels({"1", "2bar"})) == one);

    int supersets = 0, subsets = 0;
    for_each_superset(*p, one, [&](int) { ++supersets; });
    for_each_nonempty_subset(*p, pair, [&](int) { ++subsets; });
    CHECK(supersets == 3); // {1}, {1,2}, {1,2bar}
    CHECK(subsets == 3);   // {1}, {2}, {1,2}
}
