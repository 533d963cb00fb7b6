#pragma once

#include "moranrep/prob.hpp"
#include "moranrep/rational.hpp"

#include <cstdint>
#include <vector>

namespace moranrep {

// splitmix64 step: the documented PRNG behind sample_eta. Each sample index
// gets its own stream (seed mixed with the index), so batches are
// reproducible and order-independent across threads and languages.
std::uint64_t splitmix64_next(std::uint64_t& state);

// Truncated realizations of the random number eta = sum xi_k / s^k with
// i.i.d. digits xi_k ~ P.
struct SampleBatch {
    ProbVector P;
    int depth = 0;
    std::uint64_t seed = 0;
    std::vector<Rational> values; // each = sum_{k<=depth} xi_k / s^k, exact
};

// Draws n digit streams of length `depth`. Digits come from inverse-CDF
// over beta using an exact rational comparison of a 53-bit uniform
// fraction, so digit assignment has no float-boundary ambiguity.
SampleBatch sample_eta(const ProbVector& P, int depth, std::size_t n, std::uint64_t seed);

// Two-sided Kolmogorov-Smirnov distance between the empirical CDF of the
// batch and the distribution function f evaluated exactly at the sample
// points.
double ks_distance(const SampleBatch& batch);

} // namespace moranrep
