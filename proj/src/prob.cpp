#include "moranrep/prob.hpp"

#include "moranrep/digits.hpp"
#include "moranrep/error.hpp"

namespace moranrep {

ProbVector ProbVector::validate(int s, std::vector<Rational> raw) {
    check_base(s);
    if (raw.size() != static_cast<std::size_t>(s))
        raise(errc::wrong_length, "expected " + std::to_string(s) + " probabilities, got " +
                                      std::to_string(raw.size()));
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (raw[i].sign() <= 0)
            raise(errc::non_positive_entry,
                  "p_" + std::to_string(i) + " = " + raw[i].str() + " is not positive");

    std::vector<Rational> beta(raw.size() + 1);
    beta[0] = Rational(0);
    for (std::size_t i = 0; i < raw.size(); ++i) beta[i + 1] = beta[i] + raw[i];
    if (beta.back() != Rational(1))
        raise(errc::sum_not_one, "probabilities sum to " + beta.back().str());
    return ProbVector(std::move(raw), std::move(beta));
}

ProbVector ProbVector::uniform(int s) {
    check_base(s);
    return validate(s, std::vector<Rational>(static_cast<std::size_t>(s), Rational(1, s)));
}

bool ProbVector::is_uniform() const {
    Rational u(1, base());
    for (const auto& pi : p_)
        if (pi != u) return false;
    return true;
}

ProbVector validate_prob_vector(int s, std::vector<Rational> raw) {
    return ProbVector::validate(s, std::move(raw));
}

} // namespace moranrep
