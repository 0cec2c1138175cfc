#include "rwrs/params.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace rwrs {

namespace {

namespace mp = boost::multiprecision;

// Sets the default mpfr precision for the current scope.
Real to_real(const BigInt& z) { return Real(z); }
Real to_real(const Rational& q) { return Real(q); }

BigInt floor_to_int(const Real& x) {
  BigInt z;
  mpfr_get_z(z.backend().data(), x.backend().data(), MPFR_RNDD);
  return z;
}

BigInt round_to_int(const Real& x) { return floor_to_int(x + Real(0.5)); }

Rational to_rational(const Real& x) {
  Rational q;
  mpfr_get_q(q.backend().data(), x.backend().data());
  return q;
}

BigInt ceil_rational(const Rational& q) {
  BigInt n = mp::numerator(q), d = mp::denominator(q);
  BigInt f = n / d;
  if (f * d < n) f += 1;
  return f;
}

BigInt floor_rational(const Rational& q) {
  BigInt n = mp::numerator(q), d = mp::denominator(q);
  BigInt f = n / d;
  if (f * d > n) f -= 1;
  return f;
}

// lhs > rhs, demanding a margin well above the working precision.
bool certified_greater(const Real& lhs, const Real& rhs, unsigned digits) {
  Real scale = mp::max(Real(1), mp::max(mp::abs(lhs), mp::abs(rhs)));
  Real eps = mp::pow(Real(10), -static_cast<int>(digits) + 10) * scale;
  return lhs - rhs > eps;
}

std::string fmt_real(const Real& x) { return x.str(12, std::ios_base::scientific); }

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  boost::split(parts, s, boost::is_any_of(","));
  for (auto& p : parts) boost::trim(p);
  parts.erase(std::remove_if(parts.begin(), parts.end(), [](const std::string& p) { return p.empty(); }),
              parts.end());
  return parts;
}

BigInt parse_int(const std::string& s) {
  Rational q = parse_rational(s);
  if (mp::denominator(q) != 1) throw InvalidParams("expected an integer, got '" + s + "'");
  return mp::numerator(q);
}

}  // namespace

BigInt ScaleParams::scale(int m) const {
  BigInt s = 1;
  for (int r = 1; r <= m; ++r) s *= at(r).L;
  return s;
}

// Base-10 only: the string constructor reads a leading 0 as octal and 0x as hex.
static BigInt decimal_int(std::string s) {
  boost::trim(s);
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) neg = s[0] == '-', s.erase(0, 1);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InvalidParams("bad integer '" + s + "'");
  s.erase(0, std::min(s.find_first_not_of('0'), s.size() - 1));
  BigInt z(s);
  return neg ? BigInt(-z) : z;
}

Rational parse_rational(const std::string& text) {
  std::string s = boost::trim_copy(text);
  if (s.empty()) throw InvalidParams("empty number");
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      BigInt n = decimal_int(s.substr(0, slash));
      BigInt d = decimal_int(s.substr(slash + 1));
      if (d == 0) throw InvalidParams("zero denominator in '" + s + "'");
      return Rational(n, d);
    }
    size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
    std::string digits;
    int frac = 0;
    bool dot = false;
    for (; pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'); ++pos) {
      if (s[pos] == '.') {
        if (dot) throw InvalidParams("bad number '" + s + "'");
        dot = true;
      } else {
        digits += s[pos];
        if (dot) ++frac;
      }
    }
    if (digits.empty()) throw InvalidParams("bad number '" + s + "'");
    long exp10 = 0;
    if (pos < s.size()) {
      if (s[pos] != 'e' && s[pos] != 'E') throw InvalidParams("bad number '" + s + "'");
      exp10 = std::stol(s.substr(pos + 1));
    }
    exp10 -= frac;
    BigInt mant = decimal_int(digits);
    if (neg) mant = -mant;
    BigInt p = mp::pow(BigInt(10), static_cast<unsigned>(std::labs(exp10)));
    return exp10 >= 0 ? Rational(mant * p) : Rational(mant, p);
  } catch (const InvalidParams&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidParams("bad number '" + s + "'");
  }
}

std::string decimal(const Rational& q, int digits) {
  PrecisionScope scope(std::max(50, digits + 10));
  return Real(q).str(digits, std::ios_base::scientific);
}

std::string decimal(const Real& x, int digits) { return x.str(digits, std::ios_base::scientific); }

BigInt branching_number(const BigInt& M_lower, const Rational& beta, const BigInt& M_upper_prev,
                        const BigInt& R_upper, int m) {
  Rational denom = beta * Rational(M_upper_prev * R_upper * (m * m + 1));
  if (denom <= 0) throw InvalidParams("branching denominator must be positive");
  return floor_rational(Rational(M_lower) / denom);
}

ScaleParams paper_params(const BigInt& A, const BigInt& B, int k, bool strict) {
  ScaleParams p;
  p.mode = Mode::paper;
  p.A = A;
  p.B = B;
  p.k = k;
  std::vector<std::string> range;
  if (A < 1000) range.push_back("A >= 1000");
  if (B < 250) range.push_back("B >= 250");
  if (k < 2) range.push_back("k >= 2");
  if (A < 1 || B < 0 || k < 1) throw InvalidParams("paper mode needs A >= 1, B >= 0, k >= 1");
  for (auto& r : range) {
    if (strict) throw InvalidParams("paper parameters outside admissible range: " + r);
    p.warnings.push_back("outside admissible range: " + r);
  }
  if (BigInt(k) < 20 * A) p.warnings.push_back("k < 20A: below the regime of the sinuosity probability bound");
  if (B > 1000000) throw InvalidParams("B too large to evaluate L_m = A m^B");

  // working precision: enough decimal digits to round (L_1...L_k)^2 * 4000 ln(..) exactly
  double log10_scale = 0;
  for (int m = 1; m <= k; ++m)
    log10_scale += std::log10(A.convert_to<double>()) + B.convert_to<double>() * std::log10(double(m));
  p.digits10 = static_cast<unsigned>(2 * log10_scale) + 80;
  PrecisionScope scope(p.digits10);

  p.alpha = Rational(1, mp::pow(BigInt(10) * A, 4));
  const Real ln10A = mp::log(to_real(BigInt(10) * A));
  auto ln_m2_over_alpha = [&](int m) { return mp::log(Real(m * m)) + 4 * ln10A; };
  unsigned Bu = B.convert_to<unsigned>();

  BigInt prod = 1;
  for (int m = 1; m <= k; ++m) {
    LevelParams lv;
    lv.L = A * mp::pow(BigInt(m), Bu);
    prod *= lv.L;
    const Real q = ln_m2_over_alpha(m);
    const Real P2 = to_real(BigInt(prod * prod));
    const Real L2 = to_real(BigInt(lv.L * lv.L));
    auto emit = [&](const char* name, const Real& raw, BigInt& out) {
      out = round_to_int(raw);
      Real r = to_real(out);
      p.rounding.push_back({name, m, raw, out, r >= raw / 2 && r <= raw * 2});
    };
    emit("M_upper", P2 * 2000 * q, lv.M_upper);
    emit("M_lower", P2 / (2 * mp::log(P2) + 4 * q), lv.M_lower);
    emit("R_upper", L2 * 4000 * q, lv.R_upper);
    emit("R_lower", L2 / (2 * mp::log(L2) + 16 * q), lv.R_lower);
    // item (6) on the rounded R values; -2 ln(alpha) = 8 ln(10A)
    Real inner = mp::log(Real(200) * Real(m) * Real(m) * Real(m) * Real(m)) + mp::log(to_real(lv.R_upper)) +
                 mp::log(to_real(lv.L)) + 8 * ln10A - mp::log(to_real(lv.R_lower));
    Real beta = 10 * (2 * to_real(lv.L) / to_real(lv.R_lower)) * inner;
    lv.beta = to_rational(beta);
    p.level.push_back(lv);
  }

  p.N.assign(k + 1, 0);
  {
    const Real lnP = mp::log(to_real(prod));
    Real raw = to_real(BigInt(prod * prod)) / (10 * lnP);
    p.N[0] = round_to_int(raw);
  }
  for (int m = 1; m <= k; ++m) {
    BigInt tail = 1;
    for (int r = m + 1; r <= k; ++r) tail *= p.at(r).L;
    Real lnT = tail == 1 ? Real(0) : mp::log(to_real(tail));
    Real raw = to_real(BigInt(tail * tail)) / (10 * lnT + ln_m2_over_alpha(m));
    p.N[m] = round_to_int(raw);
    if (p.N[m] < 1) {
      p.warnings.push_back("N_" + std::to_string(m) + " rounds to 0 (raw " + fmt_real(raw) +
                           "); set to 1 since len_k = 1 always");
      p.N[m] = 1;
    }
  }

  p.branching.assign(k + 1, 0);
  for (int m = 2; m <= k; ++m)
    p.branching[m] = branching_number(p.at(m).M_lower, p.at(m).beta, p.at(m - 1).M_upper, p.at(m).R_upper, m);
  return p;
}

ScaleParams desk_params(const DeskInput& in) {
  ScaleParams p;
  p.mode = Mode::desk;
  p.k = in.k;
  p.alpha = in.alpha;
  if (in.k < 1) throw InvalidParams("k >= 1 violated");
  if (static_cast<int>(in.level.size()) != in.k)
    throw InvalidParams("expected " + std::to_string(in.k) + " levels, got " + std::to_string(in.level.size()));
  if (in.alpha < 0 || in.alpha >= 1) throw InvalidParams("0 <= alpha < 1 violated");
  for (int m = 1; m <= in.k; ++m) {
    const LevelParams& lv = in.level[m - 1];
    std::string at = " at m=" + std::to_string(m);
    if (lv.L < 1) throw InvalidParams("L_m >= 1 violated" + at);
    if (lv.M_lower < 1) throw InvalidParams("M_lower_m >= 1 violated" + at);
    if (lv.R_lower < 1) throw InvalidParams("R_lower_m >= 1 violated" + at);
    if (lv.M_lower > lv.M_upper) throw InvalidParams("M_lower_m <= M_upper_m violated" + at);
    if (lv.R_lower > lv.R_upper) throw InvalidParams("R_lower_m <= R_upper_m violated" + at);
    if (lv.beta <= 0) throw InvalidParams("beta_m > 0 violated" + at);
  }
  p.level = in.level;
  if (in.N.empty()) {
    p.N.assign(in.k + 1, 1);
  } else {
    if (static_cast<int>(in.N.size()) != in.k + 1) throw InvalidParams("N needs k+1 entries N_0..N_k");
    for (const auto& n : in.N)
      if (n < 1) throw InvalidParams("N_m >= 1 violated");
    p.N = in.N;
  }
  p.branching.assign(in.k + 1, 0);
  for (int m = 2; m <= in.k; ++m) {
    const LevelParams& lv = p.at(m);
    BigInt b = branching_number(lv.M_lower, lv.beta, p.at(m - 1).M_upper, lv.R_upper, m);
    if (b < 1) {
      Rational need = lv.beta * Rational(p.at(m - 1).M_upper * lv.R_upper * (m * m + 1));
      throw InvalidParams("B_" + std::to_string(m) + " = floor(M_lower_m / (beta_m M_upper_{m-1} R_upper_m (m^2+1))) = " +
                          b.str() + " < 1; raise M_lower_" + std::to_string(m) + " to at least " +
                          ceil_rational(need).str());
    }
    p.branching[m] = b;
  }
  return p;
}

std::vector<BigInt> branching_numbers(const ScaleParams& p) {
  std::vector<BigInt> out;
  for (int m = 2; m <= p.k; ++m)
    out.push_back(branching_number(p.at(m).M_lower, p.at(m).beta, p.at(m - 1).M_upper, p.at(m).R_upper, m));
  return out;
}

BigInt lambda_size(const ScaleParams& p, int m) {
  if (m < 1) throw std::out_of_range("lambda_size needs m >= 1");
  BigInt s = 1;
  for (int r = 2; r <= m; ++r) s *= p.branching.at(r);
  return s;
}

LambdaBound lambda_count_bound(const ScaleParams& p, int m) {
  if (m < 2 || m > p.k) throw std::out_of_range("lambda_count_bound needs 2 <= m <= k");
  PrecisionScope scope(std::max(60u, p.digits10));
  LambdaBound out;
  Real b = 0;  // ln|Lambda_1| = 0
  for (int r = 2; r <= m; ++r) b = to_real(p.branching[r]) * (3 * mp::log(to_real(p.at(r).M_upper)) + b);
  out.recursive = b;
  if (p.mode == Mode::paper) {
    Real a = mp::pow(to_real(p.A), Real(1) / 32);
    out.closed_form = Real(1000000) * a * to_real(lambda_size(p, m));
  }
  return out;
}

std::vector<ConditionCheck> check_conditions(const ScaleParams& p) {
  const unsigned digits = std::max(60u, p.digits10);
  PrecisionScope scope(digits);
  std::vector<ConditionCheck> out;
  const bool alpha_pos = p.alpha > 0;
  const Real ln_alpha = alpha_pos ? mp::log(to_real(p.alpha)) : Real(0);
  auto add = [&](std::string name, int m, bool holds, const std::string& detail) {
    out.push_back({std::move(name), m, holds, detail});
  };
  // ln(a') > ln(c) - y
  auto log_check = [&](const std::string& name, int m, const Real& ln_a, const Real& ln_c, const Real& y) {
    Real rhs = ln_c - y;
    bool ok = alpha_pos && certified_greater(ln_a, rhs, digits);
    add(name, m, ok, "ln lhs = " + (alpha_pos ? fmt_real(ln_a) : std::string("-inf")) + ", ln rhs = " + fmt_real(rhs));
  };

  BigInt prod = 1;
  for (int m = 1; m <= p.k; ++m) {
    const LevelParams& lv = p.at(m);
    prod *= lv.L;
    const BigInt L2 = lv.L * lv.L, P2 = prod * prod;
    add("C1 L_m >= 1000", m, lv.L >= 1000, "L_m = " + lv.L.str());
    add("C1 R_upper > 1280 L_m^2", m, lv.R_upper > 1280 * L2, "");
    add("C1 M_upper > 1280 (L_1..L_m)^2", m, lv.M_upper > 1280 * P2, "");

    const Real m4 = Real(m) * m * m * m;
    const Real rL2 = to_real(L2), rP2 = to_real(P2);
    const Real Ru = to_real(lv.R_upper), Rl = to_real(lv.R_lower);
    const Real Mu = to_real(lv.M_upper), Ml = to_real(lv.M_lower);
    const Real beta = to_real(lv.beta), L = to_real(lv.L);
    // Condition 2 with alpha^2 / (8 m^4)
    const Real ln_a2 = 2 * ln_alpha - mp::log(8 * m4);
    log_check("C2 redUpper", m, ln_a2, mp::log(Real(4)), Ru / (432 * rL2));
    log_check("C2 redLower", m, ln_a2, mp::log(2 * Rl), rL2 / Rl);
    log_check("C2 local", m, ln_a2, mp::log(8 * L * Ru / Rl), beta * Rl / L);
    // Condition 3 with alpha / m^2
    const Real ln_a1 = ln_alpha - mp::log(Real(m) * m);
    log_check("C3 upper", m, ln_a1, mp::log(Real(4)), Mu / (432 * rP2));
    log_check("C3 lower", m, ln_a1, mp::log(2 * Ml), rP2 / Ml);
    // alpha / m^2 > N_{m-1} exp(-(L_m...L_k)^2 / N_{m-1})
    BigInt tail = 1;
    for (int r = m; r <= p.k; ++r) tail *= p.at(r).L;
    const Real Nprev = to_real(p.N[m - 1]);
    log_check("N_{m-1} bound", m, ln_a1, mp::log(Nprev), to_real(BigInt(tail * tail)) / Nprev);
    if (m <= p.k - 1) {
      // Condition 4 with alpha / m^2
      const Real a = alpha_pos ? to_real(p.alpha) / (Real(m) * m) : Real(0);
      const Real Nm = to_real(p.N[m]), N0 = to_real(p.N[0]);
      log_check("C4 (1)", m, ln_a1, mp::log(Real(2)), Nprev * mp::pow(a, 4) / (64 * Ru));
      log_check("C4 (2)", m, ln_a1, mp::log(Real(5)), Nm * mp::pow(a * a * Rl / Ru, 2) / 256);
      log_check("C4 (3)", m, ln_a1, Real(0), N0 * a * a / (4 * Mu));
      log_check("C4 (4)", m, ln_a1, mp::log(Real(5) / Nprev), Real(0));
    }
  }
  return out;
}

std::vector<ConditionCheck> check_branching_bounds(const ScaleParams& p) {
  const unsigned digits = std::max(60u, p.digits10);
  PrecisionScope scope(digits);
  std::vector<ConditionCheck> out;
  const Real lnA_B = mp::log(to_real(p.A)) + to_real(p.B);
  for (int m = 2; m <= p.k; ++m) {
    const BigInt& Bm = p.branching[m];
    const BigInt& L = p.at(m).L;
    bool upper = Bm < L;
    bool lower = false;
    std::string detail = "B_m = " + fmt_real(to_real(Bm)) + ", L_m = " + fmt_real(to_real(L));
    if (Bm > 0) {
      Real lhs = mp::log(to_real(Bm)) + 13 * mp::log(lnA_B * m);
      lower = certified_greater(lhs, mp::log(to_real(L)), digits);
      detail += ", ln B_m - ln(L_m/((lnA+B)m)^13) = " + fmt_real(lhs - mp::log(to_real(L)));
    }
    out.push_back({"L_m/((ln A+B)m)^13 < B_m", m, lower, detail});
    out.push_back({"B_m < L_m", m, upper, detail});
  }
  return out;
}

Feasibility feasibility(const Rational& prob, const Rational& theta, const Rational& epsilon) {
  if (prob <= 0) throw InvalidParams("p > 0 violated");
  if (epsilon <= 0) throw InvalidParams("epsilon > 0 violated");
  if (theta >= Rational(1, 2)) throw InvalidParams("theta < 1/2 violated");
  Feasibility f;
  f.p = prob;
  f.theta = theta;
  f.epsilon = epsilon;
  // (1) B >= 250, (2) B > 400 / (1/2 - theta)
  f.B = mp::max(BigInt(250), floor_rational(Rational(400) / (Rational(1, 2) - theta)) + 1);
  const unsigned digits = 120;
  PrecisionScope scope(digits);
  // (3) A >= (B/32)^32
  BigInt a3 = ceil_rational(Rational(mp::pow(f.B, 32), mp::pow(BigInt(32), 32)));
  // (4) A > 10^(-3/4) p^(-1/4)
  BigInt a4 = floor_to_int(mp::pow(Real(10), Real(-0.75)) * mp::pow(to_real(prob), Real(-0.25))) + 1;
  // (5) A >= 20000 B
  BigInt a5 = 20000 * f.B;
  // (6) A > (10^6 / eps)^(32/31)
  BigInt a6 = floor_to_int(mp::pow(Real(1000000) / to_real(epsilon), Real(32) / 31)) + 1;
  // (7) A >= 2^200
  BigInt a7 = mp::pow(BigInt(2), 200);
  f.A = mp::max(mp::max(mp::max(a3, a4), mp::max(a5, a6)), a7);
  const Real rA = to_real(f.A), rB = to_real(f.B);
  f.k_min = 20 * f.A;
  f.delta_max = Rational(BigInt(1), 1000 * mp::pow(f.A, 4));
  auto req = [&](const char* name, bool ok, std::string detail = "") { f.requirements.push_back({name, 0, ok, detail}); };
  req("(1) B >= 250", f.B >= 250);
  req("(2) B > 400/(1/2-theta)", Rational(f.B) > Rational(400) / (Rational(1, 2) - theta));
  req("(3) A >= (B/32)^32", Rational(f.A) >= Rational(mp::pow(f.B, 32), mp::pow(BigInt(32), 32)));
  req("(4) A > 10^(-3/4) p^(-1/4)",
      certified_greater(rA, mp::pow(Real(10), Real(-0.75)) * mp::pow(to_real(prob), Real(-0.25)), digits));
  req("(5) A >= 20000 B", f.A >= 20000 * f.B);
  req("(6) A > (10^6/eps)^(32/31)",
      certified_greater(rA, mp::pow(Real(1000000) / to_real(epsilon), Real(32) / 31), digits));
  req("(7) A >= 2^200", f.A >= a7);
  req("(8) k >= 20A", true, "k_min = 20A = " + f.k_min.str());
  req("(9) k >= k_0", true, "k_0 = 20A suffices");
  req("(10) delta < 10^-3 A^-4", true, "delta_max = " + decimal(f.delta_max));
  // ln M_upper_k at k = 20A: 2 ln(L_1...L_k) + ln(2000 ln(k^2/alpha))
  const Real k = to_real(f.k_min);
  const Real ln_prod = k * mp::log(rA) + rB * mp::lgamma(k + 1);
  const Real ln_q = 2 * mp::log(k) + 4 * mp::log(10 * rA);
  f.ln_N0 = 2 * ln_prod + mp::log(2000 * ln_q);
  return f;
}

std::vector<int64_t> DeskView::L() const {
  std::vector<int64_t> out;
  for (const auto& lv : level) out.push_back(lv.L);
  return out;
}

int64_t DeskView::L_total() const {
  int64_t s = 1;
  for (const auto& lv : level) s *= lv.L;
  return s;
}

DeskView desk_view(const ScaleParams& p) {
  auto fit = [](const BigInt& z, const char* what) {
    if (z > std::numeric_limits<int64_t>::max() || z < std::numeric_limits<int64_t>::min())
      throw InvalidParams(std::string(what) + " does not fit a 64-bit integer; walks run only at desk scale");
    return z.convert_to<int64_t>();
  };
  DeskView v;
  v.k = p.k;
  v.alpha = p.alpha;
  BigInt total = 1;
  for (int m = 1; m <= p.k; ++m) {
    const LevelParams& lv = p.at(m);
    LevelBounds b;
    b.L = fit(lv.L, "L_m");
    total *= lv.L;
    fit(total * total, "(L_1...L_k)^2");
    b.M_upper = fit(lv.M_upper, "M_upper");
    b.M_lower = fit(lv.M_lower, "M_lower");
    b.R_upper = fit(lv.R_upper, "R_upper");
    b.R_lower = fit(lv.R_lower, "R_lower");
    b.beta_num = fit(mp::numerator(lv.beta), "beta numerator");
    b.beta_den = fit(mp::denominator(lv.beta), "beta denominator");
    if (m >= 2) b.branching = fit(p.branching.at(m), "B_m");
    v.level.push_back(b);
  }
  return v;
}

ScaleParams params_from_config_text(const std::string& text) {
  std::stringstream cleaned;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    cleaned << line << "\n";
  }
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(cleaned, tree);
  } catch (const std::exception& e) {
    throw InvalidParams(std::string("config parse error: ") + e.what());
  }
  // a [params] section is allowed but not required
  const boost::property_tree::ptree& t = tree.get_child_optional("params") ? tree.get_child("params") : tree;
  auto get = [&](const char* key) -> std::optional<std::string> {
    auto v = t.get_optional<std::string>(key);
    if (v) return boost::trim_copy(*v);
    return std::nullopt;
  };
  std::string mode = get("mode").value_or("desk");
  auto need = [&](const char* key) {
    auto v = get(key);
    if (!v) throw InvalidParams(std::string("missing config key '") + key + "'");
    return *v;
  };
  if (mode == "paper") {
    bool strict = get("strict").value_or("false") == "true";
    return paper_params(parse_int(need("A")), parse_int(need("B")), parse_int(need("k")).convert_to<int>(), strict);
  }
  if (mode != "desk") throw InvalidParams("mode must be paper or desk");
  DeskInput d;
  d.k = parse_int(need("k")).convert_to<int>();
  d.alpha = parse_rational(need("alpha"));
  auto list = [&](const char* key) {
    auto parts = split_list(need(key));
    if (static_cast<int>(parts.size()) != d.k)
      throw InvalidParams(std::string("key '") + key + "' needs k = " + std::to_string(d.k) + " entries");
    return parts;
  };
  auto L = list("L"), Mu = list("M_upper"), Ml = list("M_lower"), Ru = list("R_upper"), Rl = list("R_lower"),
       beta = list("beta");
  for (int i = 0; i < d.k; ++i) {
    LevelParams lv;
    lv.L = parse_int(L[i]);
    lv.M_upper = parse_int(Mu[i]);
    lv.M_lower = parse_int(Ml[i]);
    lv.R_upper = parse_int(Ru[i]);
    lv.R_lower = parse_int(Rl[i]);
    lv.beta = parse_rational(beta[i]);
    d.level.push_back(lv);
  }
  if (auto n = get("N")) {
    for (const auto& s : split_list(*n)) d.N.push_back(parse_int(s));
  }
  return desk_params(d);
}

ScaleParams params_from_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidParams("cannot open config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return params_from_config_text(ss.str());
}

}  // namespace rwrs
