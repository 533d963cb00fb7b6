#pragma once

#include "moranrep/digits.hpp"
#include "moranrep/numrep.hpp"
#include "moranrep/prob.hpp"
#include "moranrep/rational.hpp"

#include <vector>

namespace moranrep {

struct IntervalR {
    Rational lo;
    Rational hi;

    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Plain P-cylinder: all x whose P-representation starts with the base word.
// A closed interval of length prod p_{c_i}.
struct Cylinder {
    ProbVector P;
    DigitWord base;

    Cylinder(ProbVector P_, DigitWord base_);
};

// [inf, sup]: inf is the base followed by the all-0 tail, sup by the
// all-(s-1) tail.
IntervalR p_cyl_bounds(const Cylinder& c);

// The s children obtained by appending 0..s-1; they partition the parent up
// to shared endpoints.
std::vector<Cylinder> p_cyl_children(const Cylinder& c);

// Cylinder of the restricted set S_(P_s,u): base digits c_i pick the blocks
// u^{c_i - 1} c_i of the element digit streams, so each c_i must avoid both
// 0 and u.
struct RestrictedCylinder {
    ProbVector P;
    int u = 0;
    DigitWord base;

    RestrictedCylinder(ProbVector P_, int u_, DigitWord base_);
};

// Digit stream(s) realizing the extreme elements: the base expanded to its
// block word followed by the case-table tail for the given u.
EventuallyPeriodicSeq ru_inf_stream(const RestrictedCylinder& c);
EventuallyPeriodicSeq ru_sup_stream(const RestrictedCylinder& c);

// Exact [inf, sup] via decode_p on the extreme streams.
IntervalR ru_cyl_bounds(const RestrictedCylinder& c);

// Closed form d(S) * p_u^{c_1+...+c_n-n} * prod p_{c_j}; agrees exactly with
// hi - lo of ru_cyl_bounds (the two are computed along independent paths).
Rational ru_cyl_diameter(const RestrictedCylinder& c);

// Child/parent diameter ratio p_next * p_u^{next-1} for appending `next`.
Rational ru_cyl_ratio(const RestrictedCylinder& c, int next);

// Relative position of the sibling cylinders with next digits p and p+1.
enum class GapSign {
    ascending,  // sup(child p) < inf(child p+1)
    descending, // inf(child p) > sup(child p+1)
};

const char* gap_sign_name(GapSign g);

// Exact comparison of the two siblings, computed from ru_cyl_bounds (the
// case table of the gap lemma is the test oracle, not the implementation).
// Requires p and p+1 to both be admissible next digits.
GapSign gap_sign(const RestrictedCylinder& c, int p);

namespace detail {
// Block word u^{alpha-1} alpha; alpha must avoid 0 and u.
void append_block(std::vector<int>& out, int alpha, int u);
// Base word expanded block by block.
std::vector<int> expand_base(const DigitWord& base, int u);
// Case-table tails of the gap lemma (period words).
std::vector<int> inf_tail(int s, int u);
std::vector<int> sup_tail(int s, int u);
} // namespace detail

} // namespace moranrep
