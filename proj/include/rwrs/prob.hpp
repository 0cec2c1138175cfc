#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rwrs/params.hpp"
#include "rwrs/rng.hpp"

namespace rwrs {

enum class Method { exact_dp, exact_sum, closed_form, monte_carlo };
const char* method_name(Method m);

struct TailEstimate {
  double value = 0;
  Method method = Method::exact_dp;
  int64_t trials = 0;  // monte carlo only
  int64_t hits = 0;
  double std_error = 0;
  double lo = 0, hi = 1;  // Wilson interval at z = 3
};

// Wilson score interval for hits out of trials.
std::pair<double, double> wilson_interval(int64_t hits, int64_t trials, double z);
TailEstimate mc_estimate(int64_t hits, int64_t trials);

// Pr(Y > p_bar n) for Y ~ Bin(n, p), summed at 60 significant digits.
Real psi_bin(int64_t n, const Rational& p, const Rational& p_bar);

struct ChernoffResult {
  Real bound;
  bool premise_ok = false;  // t p_bar >= p
};
ChernoffResult chernoff_bound(int64_t n, const Rational& p, const Rational& p_bar, const Rational& t);

struct Moments {
  Rational expectation;
  Rational variance;
};
// Hitting time of +-L from n: E = L^2 - n^2, Var = (2/3)(L^2 - n^2)(L^2 + n^2 - 1).
Moments gambler_moments(int64_t L, int64_t n);

// Law of next(w, L, 0) from the survival chain on {-L+1, ..., L-1}.
struct NextDistribution {
  int64_t L = 1;
  std::vector<double> tail;  // tail[N] = Pr(next > N)
  std::vector<double> hit;   // hit[s] = Pr(next = s)
};
NextDistribution next_distribution(int64_t L, int64_t N_max);
double next_tail_exact(int64_t L, int64_t N);   // Pr(next > N)
double next_below_exact(int64_t L, int64_t N);  // Pr(next < N)

// Two-sided exact binomial p-value style check: is hits out of n consistent with p at
// the normal z level? Normal approximation when n p (1 - p) >= 25, exact tail sums otherwise.
bool binomial_consistent(int64_t hits, int64_t n, double p, double z);

// next_tail_exact against the empirical tail of `trials` samples of next(w, L, 0) for N in [L, 20 L^2].
struct AgreementReport {
  int64_t L = 0;
  int64_t checked = 0;
  int64_t violations = 0;
  double worst_z = 0;  // largest |hits - n p| / sqrt(n p (1 - p)) seen
  int64_t worst_N = 0;
  double mean_rel_error = 0;  // |sum_N Pr(next > N) - L^2| / L^2 from the DP
};
AgreementReport dp_mc_agreement(Rng& rng, int64_t L, int64_t trials, double z);

// Stated bounds: exp(-N / (27 L^2)) and N exp(-L^2 / N).
double next_tail_bound(int64_t L, int64_t N);
bool next_tail_premise(int64_t L, int64_t N);  // L >= 1000 and N > 80 L^2
double next_below_bound(int64_t L, int64_t N);
// 2 L (1 - 1/L)^(n - 1)
double local_time_bound(int64_t L, int64_t n);

int64_t sample_next(Rng& rng, int64_t L);

// Pr(some site gets more than threshold visits before the walk hits +-L).
TailEstimate local_time_tail_mc(Rng& rng, int64_t L, int64_t threshold, int64_t trials);
// Pr(sum_{i <= delta N} X_i > sqrt(delta) sum_{i <= N} X_i) for i.i.d. X_i ~ next(w, L, 0).
TailEstimate prefix_sum_tail_mc(Rng& rng, int64_t L, int64_t N, double delta, int64_t trials);

// The next-tail bound instantiated at each level's upper bounds: premise (L' >= 1000, N > 80 L'^2)
// and the exact exponent, checked on the schedule's integers without sampling.
struct TailInstance {
  std::string name;  // "eq1".."eq4"
  int m = 0;
  BigInt L_prime, N;
  bool premise_ok = false;
  Rational exponent;  // N / (27 L'^2)
  Rational stated;    // the exponent as stated
  bool holds = false; // premise_ok and exponent == stated
};
std::vector<TailInstance> corollary_instances(const ScaleParams& p);

// One row of the bound suite.
struct BoundCheck {
  std::string lemma;
  std::string point;
  bool premise_ok = true;
  double bound = 0;
  double oracle = 0;
  Method method = Method::exact_dp;
  double lo = 0, hi = 0;
  bool pass = true;
};

struct SuiteConfig {
  std::vector<int64_t> chernoff_n{1, 2, 5, 10, 20, 50, 100, 200, 500, 1000};
  std::vector<int64_t> dp_L{2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14, 15, 16,
                            17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30};
  std::vector<int64_t> local_L{5, 10};
  std::vector<int64_t> local_thresholds{50, 100, 200};
  int64_t mc_trials = 100000;
  int64_t prefix_trials = 100000;
  uint64_t seed = 1;
  double chernoff_exponent_scale = 1;  // values above 1 inject a wrong constant
};
std::vector<BoundCheck> run_bound_suite(const SuiteConfig& cfg);

}  // namespace rwrs
