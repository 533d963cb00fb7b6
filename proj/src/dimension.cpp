#include "moranrep/dimension.hpp"

#include "moranrep/error.hpp"

#include <algorithm>
#include <cmath>

namespace moranrep {

namespace {

double ratio_sum(const std::vector<double>& ratios, double alpha) {
    double s = 0.0;
    for (double r : ratios) s += std::pow(r, alpha);
    return s;
}

} // namespace

DimensionResult solve_moran(const RatioSet& rs, double tol) {
    if (rs.ratios.empty()) raise(errc::empty_ratios, "no contraction ratios");
    for (double r : rs.ratios)
        if (!(r > 0.0 && r < 1.0))
            raise(errc::ratio_out_of_range, "ratio " + std::to_string(r) + " outside (0, 1)");
    if (!(tol > 0.0)) raise(errc::out_of_range, "tolerance must be positive");

    DimensionResult result;
    if (rs.ratios.size() == 1) {
        // sum r^0 = 1 exactly; fractality needs at least two pieces.
        result.degenerate = true;
        return result;
    }

    double lo = 0.0, hi = 1.0;
    int iterations = 0;
    while (ratio_sum(rs.ratios, hi) > 1.0) {
        lo = hi;
        hi *= 2.0;
        if (++iterations > 64) raise(errc::ratio_out_of_range, "ratio sum does not drop below 1");
    }

    double mid = hi, fmid = ratio_sum(rs.ratios, mid) - 1.0;
    while (iterations < kMaxSolverIterations) {
        mid = 0.5 * (lo + hi);
        fmid = ratio_sum(rs.ratios, mid) - 1.0;
        ++iterations;
        if (std::abs(fmid) <= tol || hi - lo <= 1e-16 * std::max(1.0, mid)) break;
        (fmid > 0.0 ? lo : hi) = mid;
    }
    result.alpha0 = mid;
    result.residual = std::abs(fmid);
    result.iterations = iterations;
    result.bracket = {lo, hi};
    return result;
}

DimensionResult dim_su(const SuSetSpec& spec, double tol) {
    RatioSet rs{{}, RatioProvenance::su};
    for (int i : spec.admissible_digits())
        rs.ratios.push_back((spec.P.p(i) * spec.P.p(spec.u).pow(i - 1)).to_double());
    return solve_moran(rs, tol);
}

DimensionResult dim_thm1(int s, int u, double tol) {
    check_base(s);
    check_digit(s, u);
    RatioSet rs{{}, RatioProvenance::thm1};
    for (int p = 1; p < s; ++p)
        if (p != u) rs.ratios.push_back(std::pow(1.0 / s, p));
    return solve_moran(rs, tol);
}

DimensionResult dim_thm2(int s, const std::vector<std::pair<int, long>>& counts, double tol) {
    check_base(s);
    if (!(tol > 0.0)) raise(errc::out_of_range, "tolerance must be positive");
    if (counts.empty()) raise(errc::invalid_counts, "no combination counts");

    std::vector<std::pair<int, long>> merged;
    long m = 0;
    for (auto [k, n] : counts) {
        if (k < 1) raise(errc::invalid_counts, "combination length " + std::to_string(k) + " < 1");
        if (n < 0) raise(errc::invalid_counts, "negative count for length " + std::to_string(k));
        if (n == 0) continue;
        m += n;
        auto it = std::find_if(merged.begin(), merged.end(),
                               [k = k](const auto& e) { return e.first == k; });
        if (it == merged.end())
            merged.emplace_back(k, n);
        else
            it->second += n;
    }
    if (m < 1) raise(errc::invalid_counts, "counts sum to zero");

    DimensionResult result;
    if (m == 1) {
        // Single combination: y = 1, alpha0 = 0, one point per level.
        result.degenerate = true;
        return result;
    }

    auto poly = [&](double y) {
        double v = -1.0;
        for (auto [k, n] : merged) v += static_cast<double>(n) * std::pow(y, k);
        return v;
    };
    double ylo = 0.0, yhi = 1.0, ymid = 0.5, fmid = 0.0;
    int iterations = 0;
    while (iterations < kMaxSolverIterations) {
        ymid = 0.5 * (ylo + yhi);
        fmid = poly(ymid);
        ++iterations;
        if (std::abs(fmid) <= tol || yhi - ylo <= 1e-17) break;
        (fmid > 0.0 ? yhi : ylo) = ymid;
    }
    const double ln_s = std::log(static_cast<double>(s));
    result.alpha0 = -std::log(ymid) / ln_s;
    result.residual = std::abs(fmid);
    result.iterations = iterations;
    // Larger y means smaller alpha; ylo produced sums < 1 (above the root).
    result.bracket = {-std::log(yhi) / ln_s, -std::log(ylo) / ln_s};
    return result;
}

DimensionResult dim_combo(const CombinationAlphabet& xi, double tol) {
    RatioSet rs{{}, RatioProvenance::combo};
    for (std::size_t j = 0; j < xi.combos.size(); ++j) {
        Rational w(1);
        for (int d : xi.combos[j].digits) w *= xi.P.p(d);
        rs.ratios.push_back(w.to_double());
    }
    return solve_moran(rs, tol);
}

double cover_sum(const CoverLevel& cover, double alpha, const Rational& d_total) {
    if (!(d_total > Rational(0))) raise(errc::out_of_range, "d_total must be positive");
    double sum = 0.0;
    for (const auto& [base, iv] : cover.intervals)
        sum += std::pow((iv.length() / d_total).to_double(), alpha);
    return sum;
}

double box_dim_estimate(const CoverLevel& cover, int grid_base,
                        const std::vector<int>& levels) {
    if (grid_base < 2) raise(errc::out_of_range, "grid base must be >= 2");
    if (cover.intervals.empty()) raise(errc::degenerate_cover, "cover has no intervals");
    if (levels.size() < 2) raise(errc::degenerate_cover, "need at least two grid levels");

    // log N(cells) against level * log(grid_base), least-squares slope.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int level : levels) {
        if (level < 0) raise(errc::out_of_range, "grid level must be >= 0");
        Rational scale = Rational(grid_base).pow(level);
        std::vector<std::pair<long, long>> cell_ranges;
        cell_ranges.reserve(cover.intervals.size());
        for (const auto& [base, iv] : cover.intervals)
            cell_ranges.emplace_back((iv.lo * scale).floor_long(), (iv.hi * scale).floor_long());
        std::sort(cell_ranges.begin(), cell_ranges.end());
        long occupied = 0, end = -1;
        for (auto [a, b] : cell_ranges) {
            if (a > end) {
                occupied += b - a + 1;
                end = b;
            } else if (b > end) {
                occupied += b - end;
                end = b;
            }
        }
        double x = level * std::log(static_cast<double>(grid_base));
        double y = std::log(static_cast<double>(occupied));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(levels.size());
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) raise(errc::degenerate_cover, "grid levels are collinear");
    return (n * sxy - sx * sy) / denom;
}

} // namespace moranrep
