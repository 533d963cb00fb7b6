#pragma once

#include "moranrep/digits.hpp"
#include "moranrep/prob.hpp"
#include "moranrep/rational.hpp"

#include <optional>
#include <utility>

namespace moranrep {

// Truncation depth used when no depth is given. tail bounds decay like
// (max p_i)^depth, so 64 digits put any truncation error far below the
// tolerances used anywhere in the library.
constexpr int kDefaultDepth = 64;

// --- s-adic / nega-s-adic codecs -------------------------------------------

// x = sum alpha_n / s^n, closed form over (preperiod, period).
Rational decode_sadic(const EventuallyPeriodicSeq& seq);

// x = sum alpha_n / (-s)^n; lands in [-s/(s+1), 1/(s+1)].
Rational decode_negasadic(const EventuallyPeriodicSeq& seq);

struct EncodeResult {
    DigitWord digits;
    bool exact; // residual after the emitted digits is exactly 0
};

// First `depth` digits of the canonical (terminating-preferred) s-adic
// expansion of x in [0,1].
EncodeResult encode_sadic(const Rational& x, int s, int depth);

// For x in (0,1) with a terminating s-adic expansion, both expansions:
// the ...alpha_n(0) form and the ...[alpha_n - 1](s-1) form. nullopt when
// the expansion of x does not terminate.
std::optional<std::pair<EventuallyPeriodicSeq, EventuallyPeriodicSeq>>
dual_sadic_forms(const Rational& x, int s);

// --- P-representation -------------------------------------------------------

// x = beta_{a_1} + sum_{n>=2} beta_{a_n} prod_{j<n} p_{a_j}, with the
// periodic tail closed by a geometric series. Exact.
Rational decode_p(const EventuallyPeriodicSeq& seq, const ProbVector& P);

struct EvalResult {
    Rational value;
    Rational tail_bound; // 0 means `value` is exact
};

// The distribution function f of the random number whose s-adic digits are
// i.i.d. with law P. Exact whenever the s-adic expansion of x terminates or
// its digit residuals cycle within `depth` steps (always eventually true
// for rational x); otherwise the depth-truncated partial sum together with
// the certified bound prod_{j<=depth} p_{alpha_j}.
EvalResult eval_f(const Rational& x, const ProbVector& P, int depth = kDefaultDepth);

// Digit-wise inversion: returns alpha_1..alpha_depth with y in the
// P-cylinder of that base. Greedy: each alpha_k is the largest digit whose
// cylinder starts at or below y, so exact P-rational y gets the
// terminating-form digits.
DigitWord invert_f(const Rational& y, const ProbVector& P, int depth);

} // namespace moranrep
