#pragma once

#include "moranrep/cylinders.hpp"
#include "moranrep/digits.hpp"
#include "moranrep/prob.hpp"
#include "moranrep/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace moranrep {

// Hard cap on enumerated cover intervals; exceeding it raises errc::too_large.
constexpr std::size_t kDefaultCoverCap = 10'000'000;

// The restricted set S_(P_s,u): numbers whose P-representation is an
// infinite concatenation of blocks u^{alpha-1} alpha with alpha notin {0, u}.
struct SuSetSpec {
    ProbVector P;
    int u = 0;

    SuSetSpec(ProbVector P_, int u_);

    // Digits admissible as block closers: {1..s-1} \ {u}.
    std::vector<int> admissible_digits() const;

    // Single admissible digit (s = 3, u in {1, 2}): every level is one point,
    // mirroring the remark excluding S_(3,1) and S_(3,2) from the dimension
    // theorems.
    bool degenerate() const;
};

// Block u^{alpha-1} alpha of the defining digit streams.
DigitWord su_block_word(int alpha, int u, int s);

struct SuParse {
    std::vector<int> alphas;
    DigitWord remainder; // trailing incomplete run of u's
};

// Greedy split of w into complete blocks (the inverse of the map sending
// (alpha_n) to the element digit stream). nullopt when w cannot be a prefix
// of any element's stream: a run closes with the wrong digit, or a u-run is
// already too long to close.
std::optional<SuParse> try_parse_su_digits(const DigitWord& w, int u);

// Throwing variant: errc::not_in_set on failure.
SuParse parse_su_digits(const DigitWord& w, int u);

// [inf S, sup S], i.e. the rank-0 restricted cylinder bounds.
IntervalR set_bounds_su(const SuSetSpec& spec);

// Level-k cover: the closed intervals spanned by the rank-k cylinders.
struct CoverLevel {
    int k = 0;
    std::vector<std::pair<DigitWord, IntervalR>> intervals; // sorted by base word
    Rational total_measure;
    bool degenerate = false;
};

// All |A_0 \ {u}|^k rank-k intervals in base-word order. k = 0 yields the
// single rank-0 hull interval.
CoverLevel level_cover_su(const SuSetSpec& spec, int k, std::size_t cap = kDefaultCoverCap,
                          bool parallel = false);

// Per-level measure contraction gamma_u = sum_{c in A_0\{u}} p_c p_u^{c-1}.
Rational gamma_u(const SuSetSpec& spec);

// Closed-form cover measure d_0 * gamma_u^k, no enumeration; equals
// level_cover_su(k).total_measure exactly.
Rational cover_measure_su(const SuSetSpec& spec, int k);

// Whether x lies in some interval of the level-k cover. Digit extraction
// plus block parsing, with a final exact bounds check at the reached base.
bool member_su(const Rational& x, const SuSetSpec& spec, int k);

// Combination set E: numbers whose P-representation is an infinite
// concatenation of words from a fixed finite alphabet {tau_1..tau_m}.
// Prefix-freeness keeps distinct concatenations in distinct cylinders.
struct CombinationAlphabet {
    ProbVector P;
    std::vector<DigitWord> combos;
    // digit_counts[j][i] = multiplicity of digit i in tau_j.
    std::vector<std::vector<int>> digit_counts;

    std::size_t size() const { return combos.size(); }
};

// Validates digits, nonemptiness and prefix-freeness, and counts digits.
// Throws errc::empty_combo or errc::prefix_conflict.
CombinationAlphabet validate_combo_alphabet(const ProbVector& P, std::vector<DigitWord> combos);

// Lexicographically minimal / maximal infinite concatenations, built digit
// by digit over the set of live parse positions with cycle detection.
EventuallyPeriodicSeq combo_min_stream(const CombinationAlphabet& xi);
EventuallyPeriodicSeq combo_max_stream(const CombinationAlphabet& xi);

// [inf E, sup E] = P-values of the extreme streams.
IntervalR set_bounds_combo(const CombinationAlphabet& xi);

// All m^k rank-k intervals (one per combo tuple), in base-word order.
CoverLevel level_cover_combo(const CombinationAlphabet& xi, int k,
                             std::size_t cap = kDefaultCoverCap, bool parallel = false);

// Whether x lies in some interval of the level-k combo cover.
bool member_combo(const Rational& x, const CombinationAlphabet& xi, int k);

} // namespace moranrep
