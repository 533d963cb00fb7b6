#pragma once

#include "moranrep/fractal_sets.hpp"
#include "moranrep/rational.hpp"

#include <utility>
#include <vector>

namespace moranrep {

constexpr double kDefaultDimTol = 1e-12;
constexpr int kMaxSolverIterations = 200;

enum class RatioProvenance { moran, su, thm1, thm2, combo };

// Contraction ratios sigma_i of a Moran construction, each in (0, 1).
struct RatioSet {
    std::vector<double> ratios;
    RatioProvenance provenance = RatioProvenance::moran;
};

struct DimensionResult {
    double alpha0 = 0.0;
    double residual = 0.0; // |sum r_i^alpha0 - 1|
    int iterations = 0;
    std::pair<double, double> bracket{0.0, 0.0}; // sum >= 1 at lo, <= 1 at hi
    bool degenerate = false;                     // single-ratio set: alpha0 = 0 is the root
};

// Unique alpha0 >= 0 with sum r_i^alpha0 = 1, by bisection on the strictly
// decreasing ratio sum; the initial upper bound grows geometrically until
// the sum drops below 1.
DimensionResult solve_moran(const RatioSet& rs, double tol = kDefaultDimTol);

// Dimension of S_(P_s,u): ratios p_i * p_u^{i-1} over i in A_0 \ {u}.
DimensionResult dim_su(const SuSetSpec& spec, double tol = kDefaultDimTol);

// Uniform-digit special case: ratios (1/s)^p over p in A_0 \ {u}. Coincides
// with dim_su under uniform P.
DimensionResult dim_thm1(int s, int u, double tol = kDefaultDimTol);

// Combination counts (k, N_k): solves sum_k N_k y^k = 1 for y in (0, 1]
// by bisection in y (the left side is strictly increasing), then
// alpha0 = -ln y / ln s. m = 1 yields the degenerate root y = 1.
DimensionResult dim_thm2(int s, const std::vector<std::pair<int, long>>& counts,
                         double tol = kDefaultDimTol);

// Dimension of a combination set: ratios prod_i p_i^{N_i(tau_j)}. Under
// uniform P this must match dim_thm2 with the word-length counts.
DimensionResult dim_combo(const CombinationAlphabet& xi, double tol = kDefaultDimTol);

// sum over intervals (length / d_total)^alpha in floating point. For a
// level-k cover with ratio set R this equals (sum_r r^alpha)^k up to
// rounding, hence ~1 at the dimension root.
double cover_sum(const CoverLevel& cover, double alpha, const Rational& d_total);

// Box-counting estimate: occupied grid cells of width grid_base^-level
// intersecting any cover interval, least-squares slope of log N against
// level * log(grid_base).
double box_dim_estimate(const CoverLevel& cover, int grid_base, const std::vector<int>& levels);

} // namespace moranrep
