#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pmac/analysis.hpp"
#include "pmac/rng.hpp"

using namespace pmac;

TEST_CASE("phi and psi endpoints and roots") {
    CHECK(phi(1.0) == doctest::Approx(1.0));
    CHECK(psi(1.0) == doctest::Approx(0.0));
    CHECK(phi(0.0) == doctest::Approx(0.0));
    CHECK(psi(0.0) == doctest::Approx(0.0));
    CHECK(phi(0.5) == doctest::Approx(0.809016994375).epsilon(1e-10));
    CHECK(psi(0.5) == doctest::Approx(-0.309016994375).epsilon(1e-10));
}

TEST_CASE("characteristic root identities") {
    for (double p = 0.05; p < 1.0; p += 0.05) {
        CHECK(phi(p) + psi(p) == doctest::Approx(p).epsilon(1e-12));
        CHECK(phi(p) * psi(p) == doctest::Approx(-p * (1.0 - p)).epsilon(1e-12));
        CHECK(phi(p) >= 0.0);
        CHECK(phi(p) <= 1.0);
        CHECK(psi(p) <= 0.0);
        CHECK(psi(p) >= -1.0);
    }
}

TEST_CASE("extended Fibonacci worked values") {
    for (int k = 1; k <= 20; ++k) CHECK(fib_extended(k, 1.0) == doctest::Approx(1.0));
    CHECK(fib_extended(3, 0.5) == doctest::Approx(0.5));
    CHECK(fib_extended(4, 0.5) == doctest::Approx(0.375));
    CHECK(fib_extended(1, 0.0) == doctest::Approx(1.0));
    CHECK(fib_extended(2, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("recurrence, closed form, combinatorial sum agree") {
    for (double p = 0.1; p < 0.95; p += 0.1) {
        for (int k = 1; k <= 60; ++k) {
            const double f = fib_extended(k, p);
            CHECK(std::fabs(f - fib_closed(k, p)) <= 1e-10);
            if (k <= 25) CHECK(std::fabs(f - fib_comb_sum(k, p)) <= 1e-10);
        }
    }
}

TEST_CASE("no-consecutive-zeros probability") {
    for (double p = 0.1; p < 1.0; p += 0.2) CHECK(no_consec_zeros_prob(1, p) == doctest::Approx(1.0));
    CHECK(no_consec_zeros_prob(2, 0.5) == doctest::Approx(0.75));
    CHECK(no_consec_zeros_prob(5, 0.5) == doctest::Approx(0.40625));
    CHECK(no_consec_zeros_prob(0, 0.3) == doctest::Approx(1.0));
    CHECK(no_consec_zeros_prob(-1, 0.3) == doctest::Approx(1.0));
}

TEST_CASE("J_M matches exhaustive enumeration") {
    for (double p : {0.25, 0.5, 0.75}) {
        for (int m = 1; m <= 12; ++m) {
            double total = 0.0;
            for (int mask = 0; mask < (1 << m); ++mask) {
                bool ok = true;
                for (int i = 0; i + 1 < m; ++i)
                    if (!((mask >> i) & 1) && !((mask >> (i + 1)) & 1)) ok = false;
                if (!ok) continue;
                double prob = 1.0;
                for (int i = 0; i < m; ++i) prob *= ((mask >> i) & 1) ? p : (1.0 - p);
                total += prob;
            }
            CHECK(no_consec_zeros_prob(m, p) == doctest::Approx(total).epsilon(1e-12));
        }
    }
}

TEST_CASE("J_M nonincreasing in M") {
    for (double p : {0.2, 0.5, 0.8})
        for (int m = 1; m <= 30; ++m)
            CHECK(no_consec_zeros_prob(m + 1, p) <= no_consec_zeros_prob(m, p) + 1e-15);
}

TEST_CASE("survival probability worked values") {
    CHECK(survival_prob({CycleType::type1, 0, 0, 3, 0.5}) == doctest::Approx(0.5));
    CHECK(survival_prob({CycleType::type1, 1, 0, 5, 0.5}) == doctest::Approx(0.375));
    CHECK(survival_prob({CycleType::type3, 1, 1, 5, 0.5}) == doctest::Approx(0.34375));
    // type1 (1,1) is J_{M-2} by definition
    for (int m : {3, 5, 7, 9})
        CHECK(survival_prob({CycleType::type1, 1, 1, m, 0.4}) ==
              doctest::Approx(no_consec_zeros_prob(m - 2, 0.4)).epsilon(1e-12));
    // 2a / 2b symmetric under swapping the slot class
    for (int m : {3, 5, 7}) {
        CHECK(survival_prob({CycleType::type2a, 1, 0, m, 0.3}) ==
              doctest::Approx(survival_prob({CycleType::type2b, 0, 1, m, 0.3})).epsilon(1e-12));
        CHECK(survival_prob({CycleType::type2a, 0, 1, m, 0.3}) ==
              doctest::Approx(survival_prob({CycleType::type2b, 1, 0, m, 0.3})).epsilon(1e-12));
    }
}

TEST_CASE("survival probability single-slot Monte Carlo spot check") {
    // type 3, M=3: the boundary case where the generic formula needs care.
    const double p = 0.5;
    auto rng = trial_stream(99, 0);
    const int samples = 200000;
    int survived = 0;
    for (int i = 0; i < samples; ++i) {
        int b[3];
        for (int& v : b) v = bernoulli(rng, p) ? 1 : 0;
        // y = 1 (slot class (1,1)); the triangle survives iff no adjacent pair
        // of silent vertices exists
        bool ok = true;
        for (int j = 0; j < 3; ++j)
            if (b[j] == 0 && b[(j + 1) % 3] == 0) ok = false;
        if (ok) ++survived;
    }
    const double mc = static_cast<double>(survived) / samples;
    const double mu = survival_prob({CycleType::type3, 1, 1, 3, p});
    const double sigma = std::sqrt(mu * (1.0 - mu) / samples);
    CHECK(std::fabs(mc - mu) <= 3.0 * sigma);
}

TEST_CASE("rate formulas") {
    CHECK(c_rate(0.5) == doctest::Approx(0.47918).epsilon(1e-4));
    CHECK(c_group(0.5) == doctest::Approx(0.40564).epsilon(1e-4));
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.25) == doctest::Approx(0.811278).epsilon(1e-5));
    for (double p = 0.001; p < 1.0; p += 0.001) CHECK(c_rate(p) > c_group(p));
}

TEST_CASE("rate maxima") {
    const RateMaximum mc = maximize_rate(&c_rate);
    CHECK(mc.value == doctest::Approx(0.5896).epsilon(1e-3));
    CHECK(mc.p_star == doctest::Approx(0.2956).epsilon(2e-2));
    const RateMaximum mg = maximize_rate(&c_group);
    CHECK(mg.value == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(mg.p_star == doctest::Approx(1.0 - std::pow(2.0, -0.5)).epsilon(2e-2));
}

static double flat(double) { return 0.25; }

TEST_CASE("maximize_rate on a constant function") {
    CHECK(maximize_rate(&flat).value == doctest::Approx(0.25));
}

TEST_CASE("cycle error bound") {
    CHECK(cycle_error_bound(3, 0.5, 0) == doctest::Approx(1.0));
    CHECK(cycle_error_bound(3, 0.5, 10) == doctest::Approx(0.03608).epsilon(1e-3));
    for (int m = 3; m <= 13; m += 2)
        CHECK(cycle_error_bound(m + 2, 0.4, 7) < cycle_error_bound(m, 0.4, 7));
}

TEST_CASE("asymptotic rates") {
    CHECK(asymptotic_partition_rate(0.5) == doctest::Approx(0.5));
    CHECK(asymptotic_gt_rate(0.5) == doctest::Approx(1.0));
    for (double eta = 0.05; eta < 1.0; eta += 0.05)
        CHECK(asymptotic_gt_rate(eta) - asymptotic_partition_rate(eta) ==
              doctest::Approx(-eta * std::log2(eta)).epsilon(1e-10));
}
