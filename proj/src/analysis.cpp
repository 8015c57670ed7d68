#include "pmac/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace pmac {

namespace {

double discriminant_root(double p) {
    return std::sqrt(p * (4.0 - 3.0 * p));
}

}  // namespace

double phi(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("phi: p must be in [0,1]");
    return (p + discriminant_root(p)) / 2.0;
}

double psi(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("psi: p must be in [0,1]");
    return (p - discriminant_root(p)) / 2.0;
}

double fib_extended(int k, double p) {
    if (k < 1) throw std::invalid_argument("fib_extended: k must be >= 1");
    if (k == 1) return 1.0;
    double prev = 1.0;   // F(1)
    double cur = p;      // F(2)
    for (int i = 3; i <= k; ++i) {
        double next = p * cur + p * (1.0 - p) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double fib_closed(int k, double p) {
    const double a = phi(p);
    const double b = psi(p);
    if (a == b) return k == 1 ? 1.0 : 0.0;  // p == 0
    return (std::pow(a, k) - std::pow(b, k)) / (a - b);
}

double fib_comb_sum(int k, double p) {
    if (k < 1) throw std::invalid_argument("fib_comb_sum: k must be >= 1");
    double sum = 0.0;
    for (int j = 0; 2 * j <= k - 1; ++j) {
        // C(k-1-j, j), small enough to stay exact in double for k <= 60
        double c = 1.0;
        for (int i = 1; i <= j; ++i) c = c * (k - 1 - j - j + i) / i;
        sum += c * std::pow(p, k - 1 - j) * std::pow(1.0 - p, j);
    }
    return sum;
}

double no_consec_zeros_prob(int m, double p) {
    if (m <= 0) return 1.0;  // J_0 = J_{-1} = 1
    if (p <= 0.0) return m >= 2 ? 0.0 : 1.0;
    // J_M = F(M+2,p)/p, via the same recurrence
    return fib_extended(m + 2, p) / p;
}

double survival_prob(const SurvivalQuery& q) {
    const double p = q.p;
    const int m = q.m;
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("survival_prob: p must be in [0,1]");
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("survival_prob: M must be odd and >= 3");
    if ((q.u != 0 && q.u != 1) || (q.v != 0 && q.v != 1))
        throw std::invalid_argument("survival_prob: slot class bits must be 0/1");

    const auto J = [p](int k) { return no_consec_zeros_prob(k, p); };

    switch (q.type) {
        case CycleType::type1:
            if (q.u == 0 && q.v == 0) return std::pow(1.0 - p, m - 2);
            if (q.u == 1 && q.v == 1) return J(m - 2);
            return p * J(m - 3);  // (1,0) and (0,1), symmetric
        case CycleType::type2a:
            if (q.u == 0 && q.v == 0) return std::pow(1.0 - p, m - 1);
            if (q.u == 1) return J(m - 1);       // (1,1) and (1,0)
            return p * p * J(m - 3);             // (0,1): both neighbours of vertex 1 must write
        case CycleType::type2b:
            if (q.u == 0 && q.v == 0) return std::pow(1.0 - p, m - 1);
            if (q.v == 1) return J(m - 1);       // (1,1) and (0,1)
            return p * p * J(m - 3);             // (1,0)
        case CycleType::type3:
            if (q.u == 0 && q.v == 0) return std::pow(1.0 - p, m);
            // Cyclic no-00 condition. At M=3 the two "neighbour writes"
            // constraints coincide in one vertex, so the wrap correction is
            // p(1-p)^2 rather than p^2(1-p)^2 J_{-1}.
            if (m == 3) return J(3) - p * (1.0 - p) * (1.0 - p);
            return J(m) - p * p * (1.0 - p) * (1.0 - p) * J(m - 4);
    }
    throw std::logic_error("survival_prob: unreachable");
}

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("binary_entropy: argument in [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double c_rate(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("c_rate: p must be in [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    const double q2 = (1.0 - p) * (1.0 - p);
    return -(1.0 - q2) * std::log2(phi(p)) - q2 * std::log2(1.0 - p);
}

double c_group(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("c_group: p must be in [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    const double a = (1.0 - p) * binary_entropy(p);
    const double b = 0.5 * binary_entropy((1.0 - p) * (1.0 - p));
    return a < b ? a : b;
}

RateMaximum maximize_rate(double (*f)(double), double tol) {
    constexpr int kGrid = 1000;
    int best = 1;
    double best_val = f(1.0 / kGrid);
    std::vector<double> vals(kGrid);
    for (int i = 1; i < kGrid; ++i) {
        vals[static_cast<size_t>(i)] = f(static_cast<double>(i) / kGrid);
        if (vals[static_cast<size_t>(i)] > best_val) {
            best_val = vals[static_cast<size_t>(i)];
            best = i;
        }
    }
    // unimodality scan: values rise to the argmax then fall
    bool unimodal = true;
    for (int i = 2; i <= best; ++i)
        if (vals[static_cast<size_t>(i)] < vals[static_cast<size_t>(i - 1)] - 1e-12) unimodal = false;
    for (int i = best + 1; i < kGrid; ++i)
        if (vals[static_cast<size_t>(i)] > vals[static_cast<size_t>(i - 1)] + 1e-12) unimodal = false;
    if (!unimodal) return {static_cast<double>(best) / kGrid, best_val};

    double lo = static_cast<double>(best - 1) / kGrid;
    double hi = static_cast<double>(best + 1) / kGrid;
    if (best == 1) lo = 1e-9;
    if (best == kGrid - 1) hi = 1.0 - 1e-9;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > tol) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = f(d);
        }
    }
    const double p_star = (lo + hi) / 2.0;
    return {p_star, f(p_star)};
}

double cycle_error_bound(int m, double p, int t) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("cycle_error_bound: M must be odd and >= 3");
    if (t < 0) throw std::invalid_argument("cycle_error_bound: T must be >= 0");
    return std::exp2(-static_cast<double>(m - 2) * c_rate(p) * t);
}

double asymptotic_partition_rate(double eta) {
    if (eta <= 0.0 || eta >= 1.0) throw std::invalid_argument("asymptotic_partition_rate: eta in (0,1)");
    return -(1.0 - eta) * std::log2(1.0 - eta);
}

double asymptotic_gt_rate(double eta) {
    if (eta <= 0.0 || eta >= 1.0) throw std::invalid_argument("asymptotic_gt_rate: eta in (0,1)");
    return binary_entropy(eta);
}

}  // namespace pmac
