#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rwrs {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;  // runtime precision

// Sets the default working precision of Real for one scope.
struct PrecisionScope {
  unsigned saved;
  explicit PrecisionScope(unsigned digits) : saved(Real::default_precision()) { Real::default_precision(digits); }
  ~PrecisionScope() { Real::default_precision(saved); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;
};

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Mode { paper, desk };

struct LevelParams {
  BigInt L, M_upper, M_lower, R_upper, R_lower;
  Rational beta;
};

// Raw real value of a rounded parameter and whether the rounding stayed in [raw/2, 2 raw].
struct RoundingCheck {
  std::string name;
  int m = 0;
  Real raw;
  BigInt rounded;
  bool within = false;
};

struct ConditionCheck {
  std::string name;
  int m = 0;
  bool holds = false;
  std::string detail;
};

struct ScaleParams {
  Mode mode = Mode::desk;
  BigInt A = 0, B = 0;
  int k = 0;
  Rational alpha;
  std::vector<LevelParams> level;  // level[m - 1]
  std::vector<BigInt> N;           // N_0..N_k
  std::vector<BigInt> branching;   // branching[m] = B_m for m >= 2
  std::vector<RoundingCheck> rounding;
  std::vector<std::string> warnings;
  unsigned digits10 = 0;  // working precision of paper-mode logarithms

  const LevelParams& at(int m) const { return level.at(m - 1); }
  BigInt scale(int m) const;  // L_1 ... L_m
};

// Exact-rational parse of "3", "-2/7", "0.125", "1e-3", "2.5E4".
Rational parse_rational(const std::string& text);
std::string decimal(const Rational& q, int digits = 12);
std::string decimal(const Real& x, int digits = 12);

// floor(M_lower / (beta * M_upper_prev * R_upper * (m^2 + 1)))
BigInt branching_number(const BigInt& M_lower, const Rational& beta, const BigInt& M_upper_prev,
                        const BigInt& R_upper, int m);

ScaleParams paper_params(const BigInt& A, const BigInt& B, int k, bool strict = false);

struct DeskInput {
  int k = 0;
  Rational alpha;
  std::vector<LevelParams> level;
  std::vector<BigInt> N;  // optional; defaults to 1
};
ScaleParams desk_params(const DeskInput& in);

std::vector<BigInt> branching_numbers(const ScaleParams& p);  // B_2..B_k
BigInt lambda_size(const ScaleParams& p, int m);

struct LambdaBound {
  Real recursive;                  // bound on ln|Lambda_m| from the recursion
  std::optional<Real> closed_form; // ln-bound 10^6 A^(1/32) B_2...B_m, paper mode
};
LambdaBound lambda_count_bound(const ScaleParams& p, int m);

// Conditions 1-4 as used for sinuosity (alpha/m^2 and alpha^2/(8 m^4) substitutions).
std::vector<ConditionCheck> check_conditions(const ScaleParams& p);

// Two-sided B_m bound L_m / ((ln A + B) m)^13 < B_m < L_m, paper mode.
std::vector<ConditionCheck> check_branching_bounds(const ScaleParams& p);

// Parameter requirements (1)-(10) for given (p, theta, epsilon).
struct Feasibility {
  Rational p, theta, epsilon;
  BigInt A, B;
  BigInt k_min;       // 20 A, requirements (8) and (9)
  Rational delta_max; // 10^-3 A^-4, requirement (10)
  Real ln_N0;         // ln M_upper_k at k = k_min, from ln L_1...L_k
  std::vector<ConditionCheck> requirements;
};
Feasibility feasibility(const Rational& p, const Rational& theta, const Rational& epsilon);

// Machine-word view of desk parameters for walk-level work.
struct LevelBounds {
  int64_t L = 1, M_upper = 1, M_lower = 1, R_upper = 1, R_lower = 1;
  int64_t beta_num = 1, beta_den = 1;
  int64_t branching = 0;  // B_m, m >= 2
};
struct DeskView {
  int k = 0;
  std::vector<LevelBounds> level;  // level[m - 1]
  Rational alpha;
  const LevelBounds& at(int m) const { return level.at(m - 1); }
  std::vector<int64_t> L() const;
  int64_t L_total() const;
};
DeskView desk_view(const ScaleParams& p);

// Key-value config (INI syntax). Keys: mode, k, alpha, L, M_upper, M_lower,
// R_upper, R_lower, beta, N (comma lists), or mode = paper with A, B, k, strict.
ScaleParams params_from_config_text(const std::string& text);
ScaleParams params_from_config_file(const std::string& path);

}  // namespace rwrs
