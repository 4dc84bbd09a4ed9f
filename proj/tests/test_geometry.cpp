#include "colorfan/geometry.hpp"

#include <doctest.h>

using namespace colorfan;

namespace {

PosetPtr b2() { return Poset::create(GroundSet({{"1", "1bar"}, {"2", "2bar"}})); }

RankFunction pentagon(const PosetPtr& p) {
    std::map<int, Rational> rk;
    rk[p->id_of_labels({"1"})] = 5;
    rk[p->id_of_labels({"1bar"})] = 5;
    rk[p->id_of_labels({"2"})] = 4;
    rk[p->id_of_labels({"2bar"})] = 4;
    for (auto labs : {std::vector<std::string>{"1", "2"}, {"1bar", "2"}, {"1", "2bar"},
                      {"1bar", "2bar"}})
        rk[p->id_of_labels(labs)] = 6;
    return make_rank(p, rk);
}

RatVec pt(std::initializer_list<long long> xs) {
    RatVec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (auto x : xs) v(i++) = x;
    return v;
}

RatVec ptq(std::initializer_list<Rational> xs) {
    RatVec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const auto& x : xs) v(i++) = x;
    return v;
}

std::uint64_t mix(std::uint64_t& s) {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545f4914f6cdd1dull;
}

} // namespace

TEST_CASE("independence polytope fixtures") {
    auto p = b2();
    int t = p->id_of_labels({"1", "2"});

    auto ip = independence_polytope(restrict(pentagon(p), t));
    REQUIRE(ip.verts.has_value());
    CHECK(*ip.verts == std::vector<RatVec>{pt({0, 0}), pt({0, 4}), pt({2, 4}), pt({5, 0}),
                                           pt({5, 1})});

    auto square = independence_polytope(restrict(boolean_multimatroid(p), t));
    CHECK(square.verts->size() == 4);
    CHECK(normalized_volume(square) == 2);

    auto origin = independence_polytope(restrict(make_rank(p, std::map<int, Rational>{}), t));
    CHECK(*origin.verts == std::vector<RatVec>{pt({0, 0})});
    CHECK(normalized_volume(origin) == 0);
}

TEST_CASE("vertex enumeration on raw H-reps") {
    // unit square
    RatMat A(4, 2);
    A << 1, 0, -1, 0, 0, 1, 0, -1;
    RatVec b(4);
    b << 1, 0, 1, 0;
    CHECK(vertex_enumeration(from_hrep(A, b)).size() == 4);

    // infeasible
    RatMat A2(2, 1);
    A2 << 1, -1;
    RatVec b2v(2);
    b2v << -1, 0;
    CHECK(vertex_enumeration(from_hrep(A2, b2v)).empty());

    // unbounded
    RatMat A3(1, 1);
    A3 << -1;
    RatVec b3(1);
    b3 << 0;
    CHECK_THROWS_AS(vertex_enumeration(from_hrep(A3, b3)), input_error);
}

TEST_CASE("greedy vertices agree with brute force on random polymatroids") {
    auto p = Poset::create(GroundSet({{"a", "b"}, {"c", "d"}, {"e", "f"}}));
    for (int i = 0; i < 15; ++i) {
        RankFunction rk = random_R_multimatroid(p, 400 + i, SampleMode::General);
        for (int t : p->maximal_ids()) {
            auto r = restrict(rk, t);
            REQUIRE(satisfies_matroid_axioms(r));
            auto fast = independence_polytope(r); // greedy path
            ExactPolytope slow = fast;
            slow.verts.reset();
            CHECK(*fast.verts == vertex_enumeration(slow, true));
        }
    }
}

TEST_CASE("normalized volumes") {
    CHECK(normalized_volume(simplex_polytope(3, 7)) == 1);

    // pentagon from the sum-of-h complex: shoelace gives 17/2, so Vol_T = 17
    std::vector<RatVec> pent{pt({0, 0}), pt({3, 0}), pt({3, 2}), pt({2, 3}), pt({0, 3})};
    ExactPolytope poly = from_vrep(2, pent);
    CHECK(poly.verts->size() == 5);
    CHECK(normalized_volume(poly) == 17);

    // triangulating from any base vertex gives the same value
    for (int base = 0; base < 5; ++base)
        CHECK(normalized_volume_from_base(poly, base) == 17);

    // lower-dimensional polytopes have volume zero
    ExactPolytope seg = from_vrep(2, {pt({0, 0}), pt({2, 2})});
    CHECK(normalized_volume(seg) == 0);
}

TEST_CASE("volume is invariant under coordinate permutation") {
    auto p = Poset::create(GroundSet({{"a", "b"}, {"c", "d"}, {"e", "f"}}));
    for (int i = 0; i < 10; ++i) {
        RankFunction rk = random_R_multimatroid(p, 777 + i, SampleMode::General);
        int t = p->maximal_ids()[0];
        auto r = restrict(rk, t);
        Rational vol = normalized_volume(independence_polytope(r));
        // permute the coordinates of the restriction cyclically
        RestrictedRank perm = r;
        const int n = r.n();
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            unsigned rot = ((mask << 1) | (mask >> (n - 1))) & ((1u << n) - 1);
            perm.by_mask[rot] = r.by_mask[mask];
        }
        CHECK(normalized_volume(independence_polytope(perm)) == vol);
    }
}

TEST_CASE("ipc volume fixtures") {
    auto p = b2();
    CHECK(ipc_volume(boolean_multimatroid(p)) == 8);
    CHECK(ipc_volume(pentagon(p)) == 124);
    CHECK(ipc_volume(sum_h_rank(p)) == 68);

    CHECK(ipc_volume_via_transversals(boolean_multimatroid(p)) == 8);
    CHECK(ipc_volume_via_transversals(pentagon(p)) == 124);
    CHECK(ipc_volume_via_transversals(sum_h_rank(p)) == 68);
    CHECK(ipc_volume_via_transversals(make_rank(p, std::map<int, Rational>{})) == 0);

    int t = p->id_of_labels({"1bar", "2"});
    CHECK(orthant_volume_via_transversals(pentagon(p), t) == 31);

    auto big = Poset::create(GroundSet(
        {{"a", "b"}, {"c", "d"}, {"e", "f"}, {"g", "h"}, {"i", "j"}}));
    CHECK_THROWS_AS(ipc_volume_via_transversals(boolean_multimatroid(big)), input_error);
}

TEST_CASE("both volume routes agree on random rank functions") {
    auto p = Poset::create(GroundSet({{"a", "b", "c"}, {"1", "2"}}));
    for (int i = 0; i < 20; ++i) {
        RankFunction rk = random_R_multimatroid(
            p, 1000 + i, i % 2 ? SampleMode::General : SampleMode::PseudoCubical);
        CHECK(ipc_volume(rk) == ipc_volume_via_transversals(rk));
    }
}

TEST_CASE("minkowski sums") {
    auto pentagon_sum = minkowski_sum({simplex_polytope(2, 1, 2), simplex_polytope(2, 2, 1),
                                       simplex_polytope(2, 3, 3)});
    CHECK(*pentagon_sum.verts == std::vector<RatVec>{pt({0, 0}), pt({0, 4}), pt({2, 4}),
                                                     pt({5, 0}), pt({5, 1})});

    auto square = minkowski_sum({simplex_polytope(2, 1), simplex_polytope(2, 2)});
    CHECK(square.verts->size() == 4);
    CHECK(normalized_volume(square) == 2);

    auto with_origin = minkowski_sum({simplex_polytope(2, 3), simplex_polytope(2, 3, 0)});
    CHECK(*with_origin.verts == *simplex_polytope(2, 3).verts);

    ExactPolytope wrong_dim = simplex_polytope(3, 1);
    CHECK_THROWS_AS(minkowski_sum({simplex_polytope(2, 1), wrong_dim}), input_error);
}

TEST_CASE("mixed volumes of simplices") {
    CHECK(mixed_volume_simplices(2, {1u, 2u}) == 1);
    CHECK(mixed_volume_simplices(2, {1u, 1u}) == 0);
    CHECK(mixed_volume_simplices(2, {3u, 3u}) == 1);
    CHECK_THROWS_AS(mixed_volume_simplices(2, {1u}), input_error);
    CHECK_THROWS_AS(mixed_volume_simplices(2, {0u, 1u}), input_error);

    // exhaustive n = 3: both routes agree and match the SDR indicator
    for (std::uint32_t a = 1; a < 8; ++a)
        for (std::uint32_t b = a; b < 8; ++b)
            for (std::uint32_t c = b; c < 8; ++c) {
                Rational mv = mixed_volume_simplices(3, {a, b, c});
                CHECK(mv == (sdr_exists({a, b, c}, 3) ? 1 : 0));
            }
}

TEST_CASE("independence polytopes glue along faces") {
    // IP(M(S1)) ∩ IP(M(S2)) = IP(M(S1 ∩ S2)), tested in the coordinates of
    // the common maximal orthant
    auto p = Poset::create(GroundSet({{"a", "b"}, {"c", "d"}, {"e", "f"}}));
    std::uint64_t state = 21;
    for (int i = 0; i < 10; ++i) {
        RankFunction rk = random_R_multimatroid(p, 3000 + i, SampleMode::General);
        int t = p->maximal_ids()[mix(state) % p->maximal_ids().size()];
        const auto& tslots = p->slots(t);
        // S1 = t minus one block, S2 = t minus another
        for (int b1 = 0; b1 < p->n(); ++b1)
            for (int b2 = b1 + 1; b2 < p->n(); ++b2) {
                auto s1 = tslots, s2 = tslots;
                s1[b1] = -1;
                s2[b2] = -1;
                int id1 = p->id_of_slots(s1), id2 = p->id_of_slots(s2);
                int meet = p->intersect_id(id1, id2);

                // embed both IPs in T coordinates: x_j = 0 off the support
                auto embed_rows = [&](int sid, RatMat& A, RatVec& b) {
                    auto r = restrict(rk, sid);
                    auto blocks = underlying_blocks(*p, sid);
                    auto tblocks = underlying_blocks(*p, t);
                    ExactPolytope ip = independence_polytope(r);
                    A = RatMat::Zero(ip.A.rows(), p->n());
                    b = ip.b;
                    for (int row = 0; row < ip.A.rows(); ++row)
                        for (int col = 0; col < r.n(); ++col) {
                            int tcol = static_cast<int>(
                                std::find(tblocks.begin(), tblocks.end(), blocks[col]) -
                                tblocks.begin());
                            A(row, tcol) = ip.A(row, col);
                        }
                };
                RatMat A1, A2, A3;
                RatVec b1v, b2v, b3v;
                embed_rows(id1, A1, b1v);
                embed_rows(id2, A2, b2v);
                embed_rows(meet, A3, b3v);

                // force coordinates outside each support to zero (both signs)
                auto with_support = [&](const RatMat& A, const RatVec& bv, int sid) {
                    const auto& slots = p->slots(sid);
                    auto tblocks = underlying_blocks(*p, t);
                    std::vector<int> zero_cols;
                    for (std::size_t i2 = 0; i2 < tblocks.size(); ++i2)
                        if (slots[tblocks[i2]] == -1) zero_cols.push_back(static_cast<int>(i2));
                    RatMat full(A.rows() + 2 * static_cast<int>(zero_cols.size()), p->n());
                    RatVec fb(full.rows());
                    full.setZero();
                    full.topRows(A.rows()) = A;
                    fb.setZero();
                    fb.head(A.rows()) = bv;
                    for (std::size_t i2 = 0; i2 < zero_cols.size(); ++i2) {
                        int r0 = A.rows() + 2 * static_cast<int>(i2);
                        full(r0, zero_cols[i2]) = 1;
                        full(r0 + 1, zero_cols[i2]) = -1;
                    }
                    return from_hrep(full, fb);
                };
                ExactPolytope p1 = with_support(A1, b1v, id1);
                ExactPolytope p2 = with_support(A2, b2v, id2);

                RatMat both(p1.A.rows() + p2.A.rows(), p->n());
                RatVec both_b(both.rows());
                both.topRows(p1.A.rows()) = p1.A;
                both_b.head(p1.A.rows()) = p1.b;
                both.bottomRows(p2.A.rows()) = p2.A;
                both_b.tail(p2.A.rows()) = p2.b;

                ExactPolytope inter = from_hrep(both, both_b);
                ExactPolytope expected = with_support(A3, b3v, meet);
                CHECK(polytope_equal(inter, expected));
            }
    }
}

TEST_CASE("normal complex pieces") {
    auto p = b2();
    auto sh = sum_h_rank(p);
    Divisor d = divisor_of(sh);
    Chain chain{p->id_of_labels({"1"}), p->id_of_labels({"1", "2"})};
    auto piece = normal_complex_piece(d, chain);
    ensure_vertices(piece, true);
    CHECK(*piece.verts == std::vector<RatVec>{pt({0, 0}), ptq({Rational(5, 2), Rational(5, 2)}),
                                              pt({3, 0}), pt({3, 2})});

    // Boolean divisor: the piece is the cone truncated at partial sums 1, 2
    auto bl = divisor_of(boolean_multimatroid(p));
    auto unit_piece = normal_complex_piece(bl, chain);
    ensure_vertices(unit_piece, true);
    CHECK(normalized_volume(unit_piece) == 1); // half of the unit square

    // zero divisor: the origin
    auto zero_piece = normal_complex_piece(
        make_divisor(p, Basis::X, std::map<int, Rational>{}), chain);
    ensure_vertices(zero_piece, true);
    CHECK(*zero_piece.verts == std::vector<RatVec>{pt({0, 0})});

    // negative coefficients are rejected
    std::map<int, Rational> neg{{p->id_of_labels({"1"}), Rational(-1)}};
    CHECK_THROWS_AS(normal_complex_piece(make_divisor(p, Basis::X, neg), chain), input_error);
    // non-maximal chains are rejected
    CHECK_THROWS_AS(normal_complex_piece(d, Chain{p->id_of_labels({"1"})}), input_error);
}

TEST_CASE("normal complex equals IPC for pseudo-cubical ranks") {
    auto p = b2();
    std::map<int, Rational> ex;
    for (auto labs : {std::vector<std::string>{"1"}, {"1bar"}, {"2"}, {"2bar"},
                      {"1bar", "2"}, {"1", "2bar"}})
        ex[p->id_of_labels(labs)] = 1;
    for (auto labs : {std::vector<std::string>{"1", "2"}, {"1bar", "2bar"}})
        ex[p->id_of_labels(labs)] = 2;
    CHECK(normal_complex_equals_ipc(make_rank(p, ex)).equal);
    CHECK(normal_complex_equals_ipc(pentagon(p)).equal);

    // the counterexample ranks on {1} | {2}
    auto p2 = Poset::create(GroundSet({{"1"}, {"2"}}));
    std::map<int, Rational> bad{{p2->id_of_labels({"1"}), Rational(2)},
                                {p2->id_of_labels({"2"}), Rational(1)},
                                {p2->id_of_labels({"1", "2"}), Rational(3)}};
    RankFunction rkbad = make_rank(p2, bad);
    CHECK_THROWS_AS(normal_complex_equals_ipc(rkbad), input_error);
    auto forced = normal_complex_equals_ipc(rkbad, true);
    CHECK_FALSE(forced.equal);
    CHECK_FALSE(forced.pieces_globally_cut);
}

TEST_CASE("pieces tile the orthant for pseudo-cubical ranks") {
    auto p = b2();
    auto sh = sum_h_rank(p);
    Divisor d = divisor_of(sh);
    for (int t : p->maximal_ids()) {
        Rational sum(0);
        for (const Chain& chain : enumerate_max_chains(*p, t)) {
            auto piece = normal_complex_piece(d, chain);
            ensure_vertices(piece, true);
            sum += normalized_volume(piece);
        }
        CHECK(sum == normalized_volume(independence_polytope(restrict(sh, t))));
    }
}
