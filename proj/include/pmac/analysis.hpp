#pragma once

#include <utility>

namespace pmac {

// Closed-form quantities behind the K=2 achievable-rate analysis:
// characteristic roots phi/psi, the extended Fibonacci recurrence F(k,p),
// the no-consecutive-zeros probability J_M(p), odd-cycle survival
// probabilities, the rates C(p) and C_g(p) and their maxima.

/// Larger root of x^2 = p*x + p*(1-p); in [0,1].
double phi(double p);
/// Smaller root; in [-1,0].
double psi(double p);

/// F(1)=1, F(2)=p, F(k) = p*F(k-1) + p*(1-p)*F(k-2).
/// The recurrence is the production path; see fib_closed for the cross-check.
double fib_extended(int k, double p);
/// (phi^k - psi^k) / (phi - psi). Cross-check only: loses precision for small p.
double fib_closed(int k, double p);
/// sum_j C(k-1-j, j) p^{k-1-j} (1-p)^j, the combinatorial route.
double fib_comb_sum(int k, double p);

/// Probability that a length-M Bernoulli(p) string has no "00" substring.
/// Conventions J_0 = J_{-1} = 1 (boundary of the cycle-survival formulas).
double no_consec_zeros_prob(int m, double p);

/// Odd-cycle taxonomy for K=2 with true active pair {1,2}:
///   type 1  - cycle through edge (1,2)
///   type 2a - cycle through vertex 1 only
///   type 2b - cycle through vertex 2 only
///   type 3  - cycle avoiding both
enum class CycleType { type1, type2a, type2b, type3 };

struct SurvivalQuery {
    CycleType type;
    int u = 0;  // x_{1,t}
    int v = 0;  // x_{2,t}
    int m = 3;  // cycle length, odd, >= 3
    double p = 0.5;
};

/// Probability that the cycle survives one slot of class (u,v).
double survival_prob(const SurvivalQuery& q);

double binary_entropy(double x);
/// Partition random-coding rate C(p).
double c_rate(double p);
/// Group-testing random-coding rate C_g(p) = min{(1-p)H(p), H((1-p)^2)/2}.
double c_group(double p);

struct RateMaximum {
    double p_star;
    double value;
};

/// Golden-section maximum of f on (0,1) after a grid pre-scan that both
/// brackets the peak and falls back to the grid argmax if f is not unimodal.
RateMaximum maximize_rate(double (*f)(double), double tol = 1e-9);

/// 2^(-(M-2) * C(p) * T), the per-length 1-odd-cycle error bound.
double cycle_error_bound(int m, double p, int t);

/// lim (1/N) W_N^I for K = eta*N.
double asymptotic_partition_rate(double eta);
/// Group-testing counterpart: the binary entropy H(eta).
double asymptotic_gt_rate(double eta);

}  // namespace pmac
