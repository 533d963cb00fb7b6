#pragma once

#include "moranrep/rational.hpp"

#include <vector>

namespace moranrep {

// The digit law P = {p_0, ..., p_{s-1}}: positive exact rationals summing
// to 1, together with the cumulative values beta_i = p_0 + ... + p_{i-1}
// (beta_0 = 0). beta is strictly increasing since every p_i > 0.
class ProbVector {
public:
    // Spec operation validate_prob_vector: checks length, positivity and the
    // exact unit sum, and computes beta. Throws errc::wrong_length,
    // errc::non_positive_entry or errc::sum_not_one.
    static ProbVector validate(int s, std::vector<Rational> raw);

    static ProbVector uniform(int s);

    int base() const { return static_cast<int>(p_.size()); }
    const Rational& p(int i) const { return p_.at(static_cast<std::size_t>(i)); }
    const std::vector<Rational>& probabilities() const { return p_; }

    // beta(i) for i in [0, s]; beta(s) = 1 closes the last digit interval.
    const Rational& beta(int i) const { return beta_.at(static_cast<std::size_t>(i)); }

    bool is_uniform() const;

    friend bool operator==(const ProbVector&, const ProbVector&) = default;

private:
    ProbVector(std::vector<Rational> p, std::vector<Rational> beta)
        : p_(std::move(p)), beta_(std::move(beta)) {}

    std::vector<Rational> p_;
    std::vector<Rational> beta_; // size s+1, beta_[s] == 1
};

ProbVector validate_prob_vector(int s, std::vector<Rational> raw);

} // namespace moranrep
