#include "colorfan/fan.hpp"

#include <doctest.h>

using namespace colorfan;

namespace {

PosetPtr b2() { return Poset::create(GroundSet({{"1", "1bar"}, {"2", "2bar"}})); }

LatVec lat(std::initializer_list<std::int64_t> xs) {
    LatVec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (auto x : xs) v(i++) = x;
    return v;
}

} // namespace

TEST_CASE("ray vectors in dropped-label coordinates") {
    auto p = b2();
    Fan fan = Fan::build(p);
    CHECK(fan.ray(p->id_of_labels({"1bar"})) == lat({-1, 0}));
    CHECK(fan.ray(p->id_of_labels({"1bar", "2"})) == lat({-1, 1}));
    CHECK(fan.ray(p->id_of_labels({"1", "2"})) == lat({1, 1}));
    CHECK_THROWS_AS(ray_vector(*p, p->empty_id()), input_error);
}

TEST_CASE("block quotient relation: rays of a block sum to zero") {
    auto q = Poset::create(GroundSet({{"a", "b", "c"}, {"1", "2"}}));
    Fan fan = Fan::build(q);
    for (int b = 0; b < q->n(); ++b) {
        LatVec sum = LatVec::Zero(fan.ambient_dim());
        for (int pos = 0; pos < q->ground().block_size(b); ++pos) {
            std::vector<int> slots(q->n(), -1);
            slots[b] = pos;
            sum += fan.ray(q->id_of_slots(slots));
        }
        CHECK(sum.isZero());
    }
}

TEST_CASE("fan shape") {
    Fan fan = Fan::build(b2());
    CHECK(fan.ambient_dim() == 2);
    CHECK(fan.cones_of_dim(0).size() == 1);
    CHECK(fan.cones_of_dim(1).size() == 8);
    CHECK(fan.cones_of_dim(2).size() == 8);

    auto q = Poset::create(GroundSet({{"a", "b", "c"}, {"1", "2"}}));
    Fan qf = Fan::build(q);
    CHECK(qf.ambient_dim() == 3);
    CHECK(qf.cones_of_dim(1).size() == 11); // 5 singletons + 6 pairs
    CHECK(qf.cones_of_dim(2).size() == 12);

    auto r = Poset::create(GroundSet({{"x", "y", "z"}}));
    Fan rf = Fan::build(r);
    CHECK(rf.ambient_dim() == 2);
    CHECK(rf.cones_of_dim(1).size() == 3);
    CHECK(rf.dim() == 1);

    // blocks of size one have no fan
    CHECK_THROWS_AS(Fan::build(Poset::create(GroundSet({{"1"}, {"2", "2bar"}}))), input_error);
}

TEST_CASE("pure dimension: every cone is a face of a maximal cone") {
    Fan fan = Fan::build(Poset::create(GroundSet({{"a", "b", "c"}, {"1", "2"}})));
    std::vector<char> covered(fan.cone_count(), 0);
    for (int c : fan.cones_of_dim(fan.dim())) covered[c] = 1;
    for (int d = fan.dim(); d >= 1; --d)
        for (int c : fan.cones_of_dim(d))
            if (covered[c])
                for (const auto& f : fan.facets_of(c)) covered[f.facet] = 1;
    for (int c = 0; c < fan.cone_count(); ++c) CHECK(covered[c]);
}

TEST_CASE("unimodularity") {
    CHECK(Fan::build(b2()).unimodularity().unimodular);
    CHECK(Fan::build(Poset::create(GroundSet({{"a", "b", "c"}, {"1", "2"}})))
              .unimodularity()
              .unimodular);

    // corrupted cone: doubled generator
    CHECK(generators_unimodular({lat({1, 0}), lat({1, 1})}));
    CHECK_FALSE(generators_unimodular({lat({2, 0}), lat({1, 1})}));
    CHECK_FALSE(generators_unimodular({lat({1, 0, 0}), lat({1, 2, 0})}));
    // non-square: a single primitive ray in 3-space extends to a basis
    CHECK(generators_unimodular({lat({1, 1, 0})}));
    CHECK_FALSE(generators_unimodular({lat({2, 2, 0})}));
}

TEST_CASE("balancing") {
    Fan fan = Fan::build(b2());
    CHECK(check_balancing(fan, top_cycle(fan)).balanced);

    // weight 2 on one maximal cone breaks it
    WeightedCycle bad = top_cycle(fan);
    bad.weights.begin()->second = 2;
    auto rep = check_balancing(fan, bad);
    CHECK_FALSE(rep.balanced);
    CHECK(rep.violating_face.has_value());

    // zero-dimensional cycles are vacuously balanced
    WeightedCycle origin;
    origin.dim = 0;
    origin.weights.emplace(Chain{}, Rational(7));
    CHECK(check_balancing(fan, origin).balanced);

    // top cycles balance on every small product ground set
    for (auto sizes : {std::vector<int>{2, 3}, {3, 3}, {2, 2, 2}}) {
        std::vector<std::vector<std::string>> blocks;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            std::vector<std::string> blk;
            for (int j = 0; j < sizes[i]; ++j)
                blk.push_back(std::to_string(i) + "_" + std::to_string(j));
            blocks.push_back(blk);
        }
        Fan f = Fan::build(Poset::create(GroundSet(blocks)));
        CHECK(f.unimodularity().unimodular);
        CHECK(f.top_balancing().balanced);
    }
}

TEST_CASE("span coefficients read exact chain combinations") {
    auto p = Poset::create(GroundSet({{"a", "b", "c"}, {"1", "2"}}));
    Fan fan = Fan::build(p);
    Chain chain{p->id_of_labels({"a"}), p->id_of_labels({"a", "1"})};
    RatVec v = 3 * to_rational(fan.ray(chain[0])) - Rational(2, 5) * to_rational(fan.ray(chain[1]));
    auto lambda = fan.span_coefficients(chain, v);
    REQUIRE(lambda.has_value());
    CHECK((*lambda)(0) == 3);
    CHECK((*lambda)(1) == Rational(-2, 5));

    // the span is 2-dimensional inside a 3-dimensional ambient
    RatVec off = v;
    off(1) += 1; // move along e_b, off the span
    CHECK_FALSE(fan.span_coefficients(chain, off).has_value());

    // degenerate chain input is rejected rather than decomposed
    Chain not_strict{p->id_of_labels({"a"}), p->id_of_labels({"a"})};
    CHECK_FALSE(fan.span_coefficients(not_strict, v).has_value());
}
