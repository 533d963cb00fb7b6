#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "moranrep/error.hpp"
#include "moranrep/stochastic.hpp"
#include "test_support.hpp"

#include <cmath>
#include <map>

using namespace moranrep;

namespace {

Rational R(const char* s) { return Rational::from_string(s); }

ProbVector half_quarter_quarter() {
    return ProbVector::validate(3, {R("1/2"), R("1/4"), R("1/4")});
}

} // namespace

TEST_CASE("sampling is deterministic in (P, depth, n, seed)") {
    auto P = half_quarter_quarter();
    auto a = sample_eta(P, 16, 500, 42);
    auto b = sample_eta(P, 16, 500, 42);
    CHECK(a.values == b.values);

    auto c = sample_eta(P, 16, 500, 43);
    CHECK(a.values != c.values);

    // Streams are per-sample: a longer batch starts with the same values.
    auto longer = sample_eta(P, 16, 600, 42);
    CHECK(std::equal(a.values.begin(), a.values.end(), longer.values.begin()));
}

TEST_CASE("deeper truncation only refines each sample") {
    auto P = half_quarter_quarter();
    auto shallow = sample_eta(P, 20, 200, 7);
    auto deep = sample_eta(P, 30, 200, 7);
    Rational bound = Rational(1, 3).pow(20);
    for (std::size_t i = 0; i < shallow.values.size(); ++i) {
        Rational delta = deep.values[i] - shallow.values[i];
        CHECK(delta >= Rational(0));
        CHECK(delta < bound);
    }
}

TEST_CASE("single-digit law") {
    auto P = half_quarter_quarter();
    const std::size_t n = 40000;
    auto batch = sample_eta(P, 1, n, 2024);

    std::map<Rational, std::size_t> freq;
    for (const auto& v : batch.values) ++freq[v];
    REQUIRE(freq.size() == 3);
    CHECK(freq.count(Rational(0)) == 1);
    CHECK(freq.count(R("1/3")) == 1);
    CHECK(freq.count(R("2/3")) == 1);

    auto within_3_sigma = [&](const Rational& value, double p) {
        double observed = static_cast<double>(freq[value]) / static_cast<double>(n);
        double sigma = std::sqrt(p * (1 - p) / static_cast<double>(n));
        return std::abs(observed - p) <= 3 * sigma;
    };
    CHECK(within_3_sigma(Rational(0), 0.5));
    CHECK(within_3_sigma(R("1/3"), 0.25));
    CHECK(within_3_sigma(R("2/3"), 0.25));
}

TEST_CASE("digit frequencies under the uniform law") {
    auto U = ProbVector::uniform(3);
    const std::size_t n = 40000;
    auto batch = sample_eta(U, 1, n, 99);
    std::map<Rational, std::size_t> freq;
    for (const auto& v : batch.values) ++freq[v];
    for (const auto& [value, count] : freq) {
        double observed = static_cast<double>(count) / static_cast<double>(n);
        double sigma = std::sqrt((1.0 / 3) * (2.0 / 3) / static_cast<double>(n));
        CHECK(std::abs(observed - 1.0 / 3) <= 3 * sigma);
    }
}

TEST_CASE("ks_distance on tiny batches") {
    auto P = half_quarter_quarter();
    SampleBatch one{P, 4, 0, {Rational(0)}};
    CHECK(ks_distance(one) == doctest::Approx(1.0));

    SampleBatch empty{P, 4, 0, {}};
    CHECK_THROWS_AS(ks_distance(empty), Error);
}

TEST_CASE("empirical CDF converges to f") {
    const std::size_t n = 20000;
    const double critical = 1.36 / std::sqrt(static_cast<double>(n));

    for (auto P : {ProbVector::uniform(3), half_quarter_quarter()}) {
        int failures = 0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            auto batch = sample_eta(P, 32, n, seed);
            if (ks_distance(batch) > critical + 0.003) ++failures;
        }
        CHECK(failures <= 1);
    }
}
