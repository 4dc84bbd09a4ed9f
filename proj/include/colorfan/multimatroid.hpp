#pragma once

#include "colorfan/chow.hpp"
#include "colorfan/ground.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace colorfan {

/// A candidate rank function on R_pi: total, rational, rk(empty) = 0.
/// No axiom is assumed; axioms are checked by the predicates below, so
/// invalid candidates are representable.
struct RankFunction {
    PosetPtr poset;
    std::vector<Rational> values; // indexed by set id
};

RankFunction make_rank(PosetPtr poset, std::vector<Rational> values);
RankFunction make_rank(PosetPtr poset, const std::map<int, Rational>& values);

struct AxiomWitness {
    int a = -1, b = -1;  // offending set ids
    std::string detail;
};

/// R1: rk(empty) = 0. R2 (monotonicity): checked on all covering pairs.
/// R3 (submodularity): checked on all pairs with colored union.
struct RAxiomReport {
    bool r1 = true, r2 = true, r3 = true;
    std::optional<AxiomWitness> w1, w2, w3;
    bool pass() const { return r1 && r2 && r3; }
};

RAxiomReport check_R_axioms(const RankFunction& rk);

/// BR1-BR4 of a multimatroid plus N-valuedness, each with first witness in
/// canonical order.
struct MultimatroidReport {
    bool integral = true;
    bool br1 = true, br2 = true, br3 = true, br4 = true;
    std::optional<AxiomWitness> w_integral, w1, w2, w3, w4;
    bool pass() const { return integral && br1 && br2 && br3 && br4; }
};

MultimatroidReport check_multimatroid_axioms(const RankFunction& rk);

/// Restriction of rk to the subsets of a colored set T, presented in
/// T-coordinates: element k of T is the k-th occupied block, and ranks are
/// indexed by bitmask over those elements.
struct RestrictedRank {
    int set_id = 0;                 // T
    std::vector<int> element_blocks; // occupied blocks of T, increasing
    std::vector<Rational> by_mask;   // size 1 << |T|
    int n() const { return static_cast<int>(element_blocks.size()); }
};

RestrictedRank restrict(const RankFunction& rk, int set_id);

/// M1-M3 for a restricted rank (the R-matroid axioms).
bool satisfies_matroid_axioms(const RestrictedRank& r);

/// D_M = sum over nonempty S of rk(S) x_S.
Divisor divisor_of(const RankFunction& rk);

enum class Cubicality { NotPseudoCubical, PseudoCubical, Cubical };

const char* cubicality_name(Cubicality c);

/// Classification via the chainwise inequalities 2 rk(S_i) >= rk(S_{i-1}) +
/// rk(S_{i+1}) and rk(S_j) >= rk(S_{j-1}) over every maximal chain, with
/// rk(S_0) = 0; cubical iff all strict. The witness is the first violating
/// chain (not pseudo-cubical) or the first tight chain (pseudo-cubical).
struct CubicalityReport {
    Cubicality verdict = Cubicality::Cubical;
    std::optional<Chain> witness;
    std::string detail;
};

CubicalityReport cubicality(const RankFunction& rk);

/// Canonical generators.
RankFunction boolean_multimatroid(PosetPtr poset);   // rk(S) = |S|
RankFunction quadratic_rank(PosetPtr poset);         // C(n+1,2) - C(n+1-|S|,2)
RankFunction sum_h_rank(PosetPtr poset);             // X-coefficients of sum_S h_S

enum class SampleMode { PseudoCubical, General };

struct SampleOptions {
    int rejection_budget = 1000;
    /// General mode only: force a modular (disjoint-cover) sample, which is
    /// an R-multimatroid but essentially never pseudo-cubical.
    bool modular = false;
};

/// Seeded, deterministic sampling of rank functions.
///  - PseudoCubical: concave increasing size profile plus small per-set
///    noise, verified against the chain inequalities and resampled on
///    failure; every sample passes R1-R3.
///  - General: random weighted-coverage rank (monotone submodular by
///    construction), verified against R1-R3 and resampled on failure;
///    includes non-pseudo-cubical instances.
RankFunction random_R_multimatroid(PosetPtr poset, std::uint64_t seed, SampleMode mode,
                                   const SampleOptions& opts = {});

/// Visits every multimatroid on the poset with integer ranks in
/// [0, max_rank], by DFS over rank vectors in level order with incremental
/// BR1-BR4 pruning.
void enumerate_multimatroids(const Poset& poset, int max_rank,
                             const std::function<void(const std::vector<Rational>&)>& fn);

} // namespace colorfan
