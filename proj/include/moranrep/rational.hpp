#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace moranrep {

// Exact arbitrary-precision fraction. Always stored in lowest terms with a
// positive denominator (GMP canonical form). This is the currency of every
// endpoint, measure and distribution-function value in the library; nothing
// upstream of the dimension solvers ever rounds.
//
// Wrapping mpq_class (rather than using it directly) pins down the
// serialization contract ("num/den") and keeps gmpxx expression templates
// out of the public API.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(n) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    // Parses "a/b" or "a" (optionally signed). Throws errc::parse_error on
    // malformed input or zero denominator.
    static Rational from_string(std::string_view text);

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    // Always "num/den", e.g. "0/1", "1/2", "-3/4". Parsing accepts the bare
    // integer form too, so round trips are unaffected.
    std::string str() const;

    double to_double() const { return q_.get_d(); }

    // floor(x) as a machine integer; throws errc::out_of_range if it does
    // not fit (never happens for the digit-extraction uses in this library).
    long floor_long() const;

    // x^e for integer e (negative allowed; throws on 0^negative).
    Rational pow(long e) const;

    Rational abs() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace moranrep
