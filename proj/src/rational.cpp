#include "moranrep/rational.hpp"

#include "moranrep/error.hpp"

#include <ostream>

namespace moranrep {

const char* errc_name(errc c) {
    switch (c) {
        case errc::wrong_length: return "WrongLength";
        case errc::non_positive_entry: return "NonPositiveEntry";
        case errc::sum_not_one: return "SumNotOne";
        case errc::base_mismatch: return "BaseMismatch";
        case errc::out_of_range: return "OutOfRange";
        case errc::invalid_base_digit: return "InvalidBaseDigit";
        case errc::invalid_next_digit: return "InvalidNextDigit";
        case errc::invalid_alpha: return "InvalidAlpha";
        case errc::not_in_set: return "NotInSet";
        case errc::too_large: return "TooLarge";
        case errc::prefix_conflict: return "PrefixConflict";
        case errc::empty_combo: return "EmptyCombo";
        case errc::empty_ratios: return "EmptyRatios";
        case errc::ratio_out_of_range: return "RatioOutOfRange";
        case errc::no_root: return "NoRoot";
        case errc::invalid_counts: return "InvalidCounts";
        case errc::degenerate_cover: return "DegenerateCover";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) raise(errc::parse_error, "zero denominator");
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (sgn(den) == 0) raise(errc::parse_error, "zero denominator");
    q_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    if (text.empty()) raise(errc::parse_error, "empty rational");
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
        raise(errc::parse_error, "bad rational '" + std::string(text) + "'");
    if (sgn(q.get_den()) == 0)
        raise(errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

long Rational::floor_long() const {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    if (!fl.fits_slong_p()) raise(errc::out_of_range, "floor does not fit a long");
    return fl.get_si();
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long ue = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && is_zero()) raise(errc::out_of_range, "0 to a negative power");
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), ue);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), ue);
    return invert ? Rational(d, n) : Rational(n, d);
}

Rational Rational::abs() const {
    mpq_class a;
    mpq_abs(a.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(a));
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) raise(errc::out_of_range, "division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace moranrep
