#include "moranrep/numrep.hpp"

#include "moranrep/error.hpp"

#include <algorithm>
#include <map>

namespace moranrep {

namespace {

// Horner evaluation of sum_{n=1..L} w_n * b^{-n} for rational base b.
Rational positional_value(const std::vector<int>& w, const Rational& b) {
    Rational acc(0);
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = (acc + Rational(*it)) / b;
    return acc;
}

Rational decode_positional(const EventuallyPeriodicSeq& seq, const Rational& b) {
    const auto& pre = seq.preperiod();
    const auto& per = seq.period();
    Rational head = positional_value(pre, b);
    Rational period_value = positional_value(per, b);
    Rational shrink = (Rational(1) / b).pow(static_cast<long>(per.size()));
    Rational tail = period_value / (Rational(1) - shrink);
    Rational scale = (Rational(1) / b).pow(static_cast<long>(pre.size()));
    return head + scale * tail;
}

void check_unit_interval(const Rational& x) {
    if (x < Rational(0) || x > Rational(1))
        raise(errc::out_of_range, "x = " + x.str() + " outside [0, 1]");
}

} // namespace

Rational decode_sadic(const EventuallyPeriodicSeq& seq) {
    return decode_positional(seq, Rational(seq.base()));
}

Rational decode_negasadic(const EventuallyPeriodicSeq& seq) {
    return decode_positional(seq, Rational(-seq.base()));
}

EncodeResult encode_sadic(const Rational& x, int s, int depth) {
    check_base(s);
    check_unit_interval(x);
    if (depth < 0) raise(errc::out_of_range, "depth must be >= 0");

    std::vector<int> digits;
    digits.reserve(static_cast<std::size_t>(depth));
    Rational r = x;
    for (int n = 0; n < depth; ++n) {
        Rational scaled = r * Rational(s);
        long d = scaled.floor_long();
        if (d >= s) d = s - 1; // only reachable from x == 1
        digits.push_back(static_cast<int>(d));
        r = scaled - Rational(d);
    }
    return EncodeResult{DigitWord(s, std::move(digits)), r.is_zero()};
}

std::optional<std::pair<EventuallyPeriodicSeq, EventuallyPeriodicSeq>>
dual_sadic_forms(const Rational& x, int s) {
    check_base(s);
    if (x <= Rational(0) || x >= Rational(1))
        raise(errc::out_of_range, "x = " + x.str() + " outside (0, 1)");

    // Terminating expansion iff every prime factor of den(x) divides s.
    mpz_class den = x.denominator();
    mpz_class base(s), g;
    for (;;) {
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), base.get_mpz_t());
        if (g == 1) break;
        while (mpz_divisible_p(den.get_mpz_t(), g.get_mpz_t()))
            mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
    if (den != 1) return std::nullopt;

    std::vector<int> digits;
    Rational r = x;
    while (!r.is_zero()) {
        Rational scaled = r * Rational(s);
        long d = scaled.floor_long();
        digits.push_back(static_cast<int>(d));
        r = scaled - Rational(d);
    }
    // Greedy stops at the first zero residual, so the last digit is nonzero.
    std::vector<int> low = digits;
    low.back() -= 1;
    EventuallyPeriodicSeq terminating(s, std::move(digits), {0});
    EventuallyPeriodicSeq high_tail(s, std::move(low), {s - 1});
    return std::make_pair(std::move(terminating), std::move(high_tail));
}

Rational decode_p(const EventuallyPeriodicSeq& seq, const ProbVector& P) {
    if (seq.base() != P.base())
        raise(errc::base_mismatch, "sequence base " + std::to_string(seq.base()) +
                                       " != P base " + std::to_string(P.base()));
    Rational value(0), prod(1);
    for (int d : seq.preperiod()) {
        value += P.beta(d) * prod;
        prod *= P.p(d);
    }
    // One period at unit scale, then the geometric closure C / (1 - Q).
    Rational C(0), Q(1);
    for (int d : seq.period()) {
        C += P.beta(d) * Q;
        Q *= P.p(d);
    }
    return value + prod * C / (Rational(1) - Q);
}

EvalResult eval_f(const Rational& x, const ProbVector& P, int depth) {
    check_unit_interval(x);
    if (depth < 1) raise(errc::out_of_range, "depth must be >= 1");
    const int s = P.base();

    // Digit extraction in integer state: with x = c/den, the residual after
    // each digit is (c*s mod den)/den, so the digit stream cycles exactly
    // when c repeats.
    const mpz_class den = x.denominator();
    mpz_class c = x.numerator();
    mpz_class scaled, q;

    Rational acc(0), prod(1);
    // Residual numerator -> (acc, prod) at entry; a repeat closes the tail
    // as a geometric series, making the value exact.
    std::map<mpz_class, std::pair<Rational, Rational>> seen;
    for (int n = 0; n < depth; ++n) {
        if (sgn(c) == 0) return EvalResult{acc, Rational(0)};
        auto it = seen.find(c);
        if (it != seen.end()) {
            const auto& [acc_i, prod_i] = it->second;
            Rational value = acc_i + prod_i * (acc - acc_i) / (prod_i - prod);
            return EvalResult{value, Rational(0)};
        }
        seen.emplace(c, std::make_pair(acc, prod));

        scaled = c * s;
        mpz_fdiv_qr(q.get_mpz_t(), c.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
        long d = q.get_si();
        if (d >= s) { // x == 1: the all-(s-1) stream, summing to 1
            d = s - 1;
            c = scaled - den * d;
        }
        acc += P.beta(static_cast<int>(d)) * prod;
        prod *= P.p(static_cast<int>(d));
    }
    if (sgn(c) == 0) return EvalResult{acc, Rational(0)};
    return EvalResult{acc, prod};
}

DigitWord invert_f(const Rational& y, const ProbVector& P, int depth) {
    check_unit_interval(y);
    if (depth < 0) raise(errc::out_of_range, "depth must be >= 0");
    const int s = P.base();

    std::vector<int> digits;
    digits.reserve(static_cast<std::size_t>(depth));
    Rational rem = y;
    for (int k = 0; k < depth; ++k) {
        // Largest digit whose cylinder starts at or below rem.
        int d = s - 1;
        while (d > 0 && P.beta(d) > rem) --d;
        digits.push_back(d);
        // rem stays in [0, 1]: rem < beta(d+1) gives rem' < 1, and y == 1
        // maps to itself under d = s-1.
        rem = (rem - P.beta(d)) / P.p(d);
    }
    return DigitWord(s, std::move(digits));
}

} // namespace moranrep
