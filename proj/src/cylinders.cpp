#include "moranrep/cylinders.hpp"

#include "moranrep/error.hpp"

namespace moranrep {

namespace detail {

void append_block(std::vector<int>& out, int alpha, int u) {
    for (int i = 0; i < alpha - 1; ++i) out.push_back(u);
    out.push_back(alpha);
}

std::vector<int> expand_base(const DigitWord& base, int u) {
    std::vector<int> out;
    for (int c : base.digits) append_block(out, c, u);
    return out;
}

std::vector<int> inf_tail(int s, int u) {
    std::vector<int> t;
    if (u <= 1) {
        // (u...u [s-1]) with s-2 copies of u, u in {0, 1}
        t.assign(static_cast<std::size_t>(s - 2), u);
        t.push_back(s - 1);
    } else {
        t.push_back(1);
    }
    return t;
}

std::vector<int> sup_tail(int s, int u) {
    std::vector<int> t;
    if (u == 0) {
        t.push_back(1);
    } else if (u == s - 1) {
        // ([s-1]...[s-1] [s-2]) with s-3 copies
        t.assign(static_cast<std::size_t>(s - 3), s - 1);
        t.push_back(s - 2);
    } else {
        // (u...u [u+1]) with u copies
        t.assign(static_cast<std::size_t>(u), u);
        t.push_back(u + 1);
    }
    return t;
}

} // namespace detail

Cylinder::Cylinder(ProbVector P_, DigitWord base_) : P(std::move(P_)), base(std::move(base_)) {
    if (base.base != P.base())
        raise(errc::base_mismatch, "cylinder base word uses base " + std::to_string(base.base) +
                                       ", P has base " + std::to_string(P.base()));
}

IntervalR p_cyl_bounds(const Cylinder& c) {
    const int s = c.P.base();
    Rational lo = decode_p(EventuallyPeriodicSeq(s, c.base.digits, {0}), c.P);
    Rational hi = decode_p(EventuallyPeriodicSeq(s, c.base.digits, {s - 1}), c.P);
    return IntervalR{std::move(lo), std::move(hi)};
}

std::vector<Cylinder> p_cyl_children(const Cylinder& c) {
    std::vector<Cylinder> children;
    children.reserve(static_cast<std::size_t>(c.P.base()));
    for (int d = 0; d < c.P.base(); ++d) {
        std::vector<int> digits = c.base.digits;
        digits.push_back(d);
        children.emplace_back(c.P, DigitWord(c.base.base, std::move(digits)));
    }
    return children;
}

RestrictedCylinder::RestrictedCylinder(ProbVector P_, int u_, DigitWord base_)
    : P(std::move(P_)), u(u_), base(std::move(base_)) {
    const int s = P.base();
    if (base.base != s)
        raise(errc::base_mismatch, "base word uses base " + std::to_string(base.base) +
                                       ", P has base " + std::to_string(s));
    check_digit(s, u);
    for (int c : base.digits)
        if (c == 0 || c == u)
            raise(errc::invalid_base_digit,
                  "restricted base digit " + std::to_string(c) + " must avoid 0 and u");
}

EventuallyPeriodicSeq ru_inf_stream(const RestrictedCylinder& c) {
    return EventuallyPeriodicSeq(c.P.base(), detail::expand_base(c.base, c.u),
                                 detail::inf_tail(c.P.base(), c.u));
}

EventuallyPeriodicSeq ru_sup_stream(const RestrictedCylinder& c) {
    return EventuallyPeriodicSeq(c.P.base(), detail::expand_base(c.base, c.u),
                                 detail::sup_tail(c.P.base(), c.u));
}

IntervalR ru_cyl_bounds(const RestrictedCylinder& c) {
    return IntervalR{decode_p(ru_inf_stream(c), c.P), decode_p(ru_sup_stream(c), c.P)};
}

Rational ru_cyl_diameter(const RestrictedCylinder& c) {
    RestrictedCylinder rank0(c.P, c.u, DigitWord(c.P.base(), {}));
    Rational d = ru_cyl_bounds(rank0).length();
    long exponent = -static_cast<long>(c.base.size());
    for (int cj : c.base.digits) {
        exponent += cj;
        d *= c.P.p(cj);
    }
    return d * c.P.p(c.u).pow(exponent);
}

Rational ru_cyl_ratio(const RestrictedCylinder& c, int next) {
    const int s = c.P.base();
    if (next <= 0 || next >= s || next == c.u)
        raise(errc::invalid_base_digit, "next digit " + std::to_string(next) +
                                            " not admissible for u = " + std::to_string(c.u));
    return c.P.p(next) * c.P.p(c.u).pow(next - 1);
}

const char* gap_sign_name(GapSign g) {
    return g == GapSign::ascending ? "ascending" : "descending";
}

GapSign gap_sign(const RestrictedCylinder& c, int p) {
    const int s = c.P.base();
    if (p <= 0 || p + 1 >= s || p == c.u || p + 1 == c.u)
        raise(errc::invalid_next_digit, "digits " + std::to_string(p) + ", " +
                                            std::to_string(p + 1) +
                                            " are not both admissible for u = " +
                                            std::to_string(c.u));
    auto child = [&](int d) {
        std::vector<int> digits = c.base.digits;
        digits.push_back(d);
        return ru_cyl_bounds(RestrictedCylinder(c.P, c.u, DigitWord(s, std::move(digits))));
    };
    IntervalR lower = child(p);
    IntervalR upper = child(p + 1);
    if (lower.hi < upper.lo) return GapSign::ascending;
    if (lower.lo > upper.hi) return GapSign::descending;
    // The gap lemma promises a strict gap for every admissible pair.
    raise(errc::invalid_next_digit, "sibling cylinders overlap; p = " + std::to_string(p));
}

} // namespace moranrep
