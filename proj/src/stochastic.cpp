#include "moranrep/stochastic.hpp"

#include "moranrep/error.hpp"
#include "moranrep/numrep.hpp"

#include <algorithm>

namespace moranrep {

std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

constexpr std::uint64_t kStreamSalt = 0x9E3779B97F4A7C15ull;

// Digit d is drawn when beta_d <= u/2^53 < beta_{d+1}. For integer u the
// left comparison is exactly u >= ceil(beta_d * 2^53), so one integer
// threshold per digit reproduces the exact rational inverse-CDF.
std::vector<std::uint64_t> digit_thresholds(const ProbVector& P) {
    std::vector<std::uint64_t> t(static_cast<std::size_t>(P.base()));
    for (int d = 0; d < P.base(); ++d) {
        mpz_class num = P.beta(d).numerator() << 53;
        mpz_class c;
        mpz_cdiv_q(c.get_mpz_t(), num.get_mpz_t(), P.beta(d).denominator().get_mpz_t());
        t[static_cast<std::size_t>(d)] = c.get_ui();
    }
    return t;
}

} // namespace

SampleBatch sample_eta(const ProbVector& P, int depth, std::size_t n, std::uint64_t seed) {
    if (depth < 1) raise(errc::out_of_range, "depth must be >= 1");
    if (n < 1) raise(errc::out_of_range, "n must be >= 1");
    const int s = P.base();
    mpz_class s_pow_depth;
    mpz_ui_pow_ui(s_pow_depth.get_mpz_t(), static_cast<unsigned long>(s),
                  static_cast<unsigned long>(depth));
    const auto thresholds = digit_thresholds(P);

    SampleBatch batch{P, depth, seed, {}};
    batch.values.reserve(n);
    mpz_class numerator;
    for (std::size_t i = 0; i < n; ++i) {
        // Per-sample stream: the splitmix64 finalizer scatters the stream
        // origins so distinct samples never walk the same state sequence.
        std::uint64_t origin = seed + kStreamSalt * static_cast<std::uint64_t>(i + 1);
        std::uint64_t state = splitmix64_next(origin);
        numerator = 0;
        for (int k = 0; k < depth; ++k) {
            std::uint64_t u53 = splitmix64_next(state) >> 11;
            int d = s - 1;
            while (d > 0 && u53 < thresholds[static_cast<std::size_t>(d)]) --d;
            numerator = numerator * s + d;
        }
        batch.values.emplace_back(numerator, s_pow_depth);
    }
    return batch;
}

double ks_distance(const SampleBatch& batch) {
    if (batch.values.empty()) raise(errc::out_of_range, "empty batch");
    std::vector<Rational> sorted = batch.values;
    std::sort(sorted.begin(), sorted.end());

    const double n = static_cast<double>(sorted.size());
    const int depth = std::max(kDefaultDepth, batch.depth + 1);
    double dist = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        // Sample values terminate within batch.depth digits, so f is exact.
        double f = eval_f(sorted[i], batch.P, depth).value.to_double();
        double lo = static_cast<double>(i) / n;
        double hi = static_cast<double>(i + 1) / n;
        dist = std::max(dist, std::max(f - lo, hi - f));
    }
    return dist;
}

} // namespace moranrep
