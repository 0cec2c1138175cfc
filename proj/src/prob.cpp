#include "rwrs/prob.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rwrs {

namespace {

namespace mp = boost::multiprecision;

BigInt floor_q(const Rational& q) {
  BigInt n = mp::numerator(q), d = mp::denominator(q);
  BigInt f = n / d;
  if (f * d > n) f -= 1;
  return f;
}

std::string point(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << ' ';
    os << k << '=' << v;
    first = false;
  }
  return os.str();
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::exact_dp: return "exact-dp";
    case Method::exact_sum: return "exact-sum";
    case Method::closed_form: return "closed-form";
    case Method::monte_carlo: return "monte-carlo";
  }
  return "?";
}

std::pair<double, double> wilson_interval(int64_t hits, int64_t trials, double z) {
  if (trials <= 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials), p = hits / n, z2 = z * z;
  const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

TailEstimate mc_estimate(int64_t hits, int64_t trials) {
  TailEstimate e;
  e.method = Method::monte_carlo;
  e.trials = trials;
  e.hits = hits;
  e.value = trials > 0 ? static_cast<double>(hits) / trials : 0.0;
  e.std_error = trials > 0 ? std::sqrt(e.value * (1 - e.value) / trials) : 0.0;
  std::tie(e.lo, e.hi) = wilson_interval(hits, trials, 3.0);
  return e;
}

Real psi_bin(int64_t n, const Rational& p, const Rational& p_bar) {
  if (n < 0) throw std::invalid_argument("n >= 0 required");
  if (p < 0 || p > 1 || p_bar < 0 || p_bar > 1) throw std::invalid_argument("p and p_bar must lie in [0,1]");
  PrecisionScope scope(60);
  // smallest k with k > p_bar n
  const int64_t k0 = (floor_q(p_bar * Rational(n)) + 1).convert_to<int64_t>();
  if (k0 > n) return Real(0);
  const Real rp(p), rq = Real(1) - rp;
  if (p == 0) return Real(0);
  if (p == 1) return Real(1);
  // term_k = C(n,k) p^k q^(n-k), advanced by ratio (n-k)/(k+1) * p/q
  Real term = mp::pow(rq, n);
  for (int64_t k = 0; k < k0; ++k) term *= Real(n - k) / Real(k + 1) * rp / rq;
  Real sum = 0;
  for (int64_t k = k0; k <= n; ++k) {
    sum += term;
    if (k < n) term *= Real(n - k) / Real(k + 1) * rp / rq;
  }
  return sum;
}

ChernoffResult chernoff_bound(int64_t n, const Rational& p, const Rational& p_bar, const Rational& t) {
  if (t <= 0 || t >= 1) throw std::invalid_argument("0 < t < 1 required");
  PrecisionScope scope(60);
  ChernoffResult r;
  r.premise_ok = t * p_bar >= p;
  const Rational e = Rational(n) * (1 - t) * (1 - t) * p_bar * p_bar;
  r.bound = mp::exp(-Real(e));
  return r;
}

Moments gambler_moments(int64_t L, int64_t n) {
  if (L < 0 || n < -L || n > L) throw std::invalid_argument("need -L <= n <= L");
  const BigInt L2 = BigInt(L) * L, n2 = BigInt(n) * n;
  Moments m;
  m.expectation = Rational(L2 - n2);
  m.variance = Rational(2, 3) * Rational(L2 - n2) * Rational(L2 + n2 - 1);
  if (L2 == n2) m.variance = 0;
  return m;
}

NextDistribution next_distribution(int64_t L, int64_t N_max) {
  if (L < 1) throw std::invalid_argument("L >= 1 required");
  if (N_max < 0) throw std::invalid_argument("N >= 0 required");
  NextDistribution d;
  d.L = L;
  d.tail.assign(N_max + 1, 0.0);
  d.hit.assign(N_max + 1, 0.0);
  // index x + L for x in [-L, L]; the two ends absorb
  const int64_t W = 2 * L + 1;
  std::vector<double> cur(W, 0.0), nxt(W, 0.0);
  cur[L] = 1.0;
  d.tail[0] = 1.0;
  for (int64_t s = 1; s <= N_max; ++s) {
    std::fill(nxt.begin(), nxt.end(), 0.0);
    // only one parity class is occupied at each step
    for (int64_t i = 1 + ((s - 1 + L + 1) & 1); i < W - 1; i += 2) {
      const double h = cur[i] * 0.5;
      nxt[i - 1] += h;
      nxt[i + 1] += h;
    }
    d.hit[s] = nxt[0] + nxt[W - 1];
    nxt[0] = nxt[W - 1] = 0.0;
    double alive = 0;
    for (int64_t i = 1; i < W - 1; ++i) alive += nxt[i];
    d.tail[s] = alive;
    std::swap(cur, nxt);
  }
  return d;
}

double next_tail_exact(int64_t L, int64_t N) { return next_distribution(L, N).tail[N]; }

double next_below_exact(int64_t L, int64_t N) {
  if (N <= 0) return 0.0;
  const NextDistribution d = next_distribution(L, N - 1);
  double s = 0;
  for (int64_t t = 1; t < N; ++t) s += d.hit[t];
  return s;
}

double next_tail_bound(int64_t L, int64_t N) {
  return std::exp(-static_cast<double>(N) / (27.0 * static_cast<double>(L) * static_cast<double>(L)));
}

bool next_tail_premise(int64_t L, int64_t N) { return L >= 1000 && N > 80 * L * L; }

double next_below_bound(int64_t L, int64_t N) {
  return static_cast<double>(N) * std::exp(-static_cast<double>(L) * static_cast<double>(L) / static_cast<double>(N));
}

double local_time_bound(int64_t L, int64_t n) {
  return 2.0 * static_cast<double>(L) * std::pow(1.0 - 1.0 / static_cast<double>(L), static_cast<double>(n - 1));
}

bool binomial_consistent(int64_t hits, int64_t n, double p, double z) {
  if (n <= 0) return hits == 0;
  if (p <= 0) return hits == 0;
  if (p >= 1) return hits == n;
  const double mean = n * p, var = n * p * (1 - p);
  if (var >= 25) return std::fabs(hits - mean) <= z * std::sqrt(var);
  // exact one-sided tail on the side of the observation, against the normal two-sided level
  const double level = std::erfc(z / std::sqrt(2.0)) / 2;
  auto log_pmf = [&](int64_t k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) + k * std::log(p) +
           (n - k) * std::log1p(-p);
  };
  double tail = 0;
  if (hits >= mean) {
    for (int64_t k = hits; k <= n; ++k) {
      const double t = std::exp(log_pmf(k));
      tail += t;
      if (k > mean + 1 && t < 1e-18 * tail) break;
    }
  } else {
    for (int64_t k = hits; k >= 0; --k) {
      const double t = std::exp(log_pmf(k));
      tail += t;
      if (k < mean - 1 && t < 1e-18 * tail) break;
    }
  }
  return tail >= level;
}

AgreementReport dp_mc_agreement(Rng& rng, int64_t L, int64_t trials, double z) {
  if (L < 1 || trials < 1) throw std::invalid_argument("L >= 1 and trials >= 1 required");
  AgreementReport r;
  r.L = L;
  const int64_t N_hi = 20 * L * L;
  const NextDistribution d = next_distribution(L, N_hi);
  std::vector<int64_t> count(N_hi + 2, 0);  // count[s] = samples equal to s, with s > N_hi pooled at N_hi + 1
  for (int64_t i = 0; i < trials; ++i) ++count[std::min(sample_next(rng, L), N_hi + 1)];
  int64_t above = trials;  // samples with next > N, starting from N = 0
  for (int64_t N = 0; N <= N_hi; ++N) {
    above -= count[N];
    if (N < L) continue;
    const double p = d.tail[N];
    ++r.checked;
    if (!binomial_consistent(above, trials, p, z)) ++r.violations;
    const double var = trials * p * (1 - p);
    if (var > 0) {
      const double zz = std::fabs(above - trials * p) / std::sqrt(var);
      if (zz > r.worst_z) r.worst_z = zz, r.worst_N = N;
    }
  }
  const NextDistribution full = next_distribution(L, 200 * L * L);
  long double mean = 0;
  for (double t : full.tail) mean += t;
  r.mean_rel_error = static_cast<double>(std::fabs(mean - static_cast<long double>(L * L)) / (L * L));
  return r;
}

int64_t sample_next(Rng& rng, int64_t L) {
  if (L < 1) throw std::invalid_argument("L >= 1 required");
  int64_t x = 0, s = 0;
  for (;;) {
    uint64_t bits = rng();
    for (int b = 0; b < 64; ++b) {
      x += (bits >> b) & 1 ? 1 : -1;
      ++s;
      if (x == L || x == -L) return s;
    }
  }
}

TailEstimate local_time_tail_mc(Rng& rng, int64_t L, int64_t threshold, int64_t trials) {
  if (trials < 1) throw std::invalid_argument("trials >= 1 required");
  if (L < 1) throw std::invalid_argument("L >= 1 required");
  int64_t hits = 0;
  std::vector<int64_t> visits(2 * L + 1);
  for (int64_t r = 0; r < trials; ++r) {
    std::fill(visits.begin(), visits.end(), 0);
    int64_t x = 0;
    bool over = ++visits[L] > threshold;
    while (!over) {
      uint64_t bits = rng();
      for (int b = 0; b < 64 && !over; ++b) {
        x += (bits >> b) & 1 ? 1 : -1;
        if (x == L || x == -L) goto done;
        over = ++visits[x + L] > threshold;
      }
    }
  done:
    if (over) ++hits;
  }
  return mc_estimate(hits, trials);
}

TailEstimate prefix_sum_tail_mc(Rng& rng, int64_t L, int64_t N, double delta, int64_t trials) {
  if (trials < 1) throw std::invalid_argument("trials >= 1 required");
  if (N < 1 || L < 1) throw std::invalid_argument("L, N >= 1 required");
  if (!(delta > 0 && delta < 0.5)) throw std::invalid_argument("0 < delta < 1/2 required");
  const double dN = delta * static_cast<double>(N);
  const int64_t head = std::llround(dN);
  if (std::fabs(dN - static_cast<double>(head)) > 1e-9) throw std::invalid_argument("delta N must be an integer");
  const double root = std::sqrt(delta);
  int64_t hits = 0;
  for (int64_t r = 0; r < trials; ++r) {
    int64_t first = 0, total = 0;
    for (int64_t i = 1; i <= N; ++i) {
      const int64_t x = sample_next(rng, L);
      total += x;
      if (i <= head) first += x;
    }
    if (static_cast<double>(first) > root * static_cast<double>(total)) ++hits;
  }
  return mc_estimate(hits, trials);
}

std::vector<BoundCheck> run_bound_suite(const SuiteConfig& cfg) {
  std::vector<BoundCheck> rows;
  // Chernoff bound on a grid with the tightest admissible t = p / p_bar
  for (int64_t n : cfg.chernoff_n) {
    for (int ip = 0; ip < 10; ++ip) {
      for (int ib = 1; ib <= 10; ++ib) {
        const Rational p(2 * ip + 1, 20), pb(ib, 10);
        BoundCheck row;
        row.lemma = "chernoff";
        row.point = point({{"n", std::to_string(n)}, {"p", decimal(p, 3)}, {"p_bar", decimal(pb, 3)}});
        row.method = Method::exact_sum;
        const Rational t = p / pb;
        row.premise_ok = t < 1;
        const Real psi = psi_bin(n, p, pb);
        row.oracle = row.lo = row.hi = psi.convert_to<double>();
        if (row.premise_ok) {
          ChernoffResult c = chernoff_bound(n, p, pb, t);
          Real bound = mp::exp(mp::log(c.bound) * Real(cfg.chernoff_exponent_scale));
          row.bound = bound.convert_to<double>();
          row.pass = psi < bound;
        }
        rows.push_back(row);
      }
    }
  }
  for (int64_t L : cfg.dp_L) {
    const int64_t top = 200 * L * L;
    const NextDistribution d = next_distribution(L, top);
    // Pr(next < N) <= N exp(-L^2 / N), no premise
    double below = 0;
    for (int64_t N = 1; N <= 20 * L * L; ++N) {
      below += d.hit[N - 1];
      if (N < L) continue;
      BoundCheck row;
      row.lemma = "next_below";
      row.point = point({{"L", std::to_string(L)}, {"N", std::to_string(N)}});
      row.oracle = row.lo = row.hi = below;
      row.bound = next_below_bound(L, N);
      row.pass = below <= row.bound;
      rows.push_back(row);
    }
    // Pr(next > N) < exp(-N / (27 L^2)); premise L >= 1000 never holds at DP scale
    for (int64_t f : {81, 100, 150, 200}) {
      const int64_t N = f * L * L;
      BoundCheck row;
      row.lemma = "next_tail";
      row.point = point({{"L", std::to_string(L)}, {"N", std::to_string(N)}});
      row.premise_ok = next_tail_premise(L, N);
      row.oracle = row.lo = row.hi = d.tail[N];
      row.bound = next_tail_bound(L, N);
      row.pass = !row.premise_ok || row.oracle < row.bound;
      rows.push_back(row);
    }
    // E[next] = L^2 from the summed tails
    BoundCheck row;
    row.lemma = "gambler_mean";
    row.point = point({{"L", std::to_string(L)}});
    double s = 0;
    for (double v : d.tail) s += v;
    row.oracle = row.lo = row.hi = s;
    row.bound = static_cast<double>(L * L);
    row.pass = std::fabs(s - row.bound) / row.bound < 1e-10;
    rows.push_back(row);
  }
  for (int64_t L : cfg.local_L) {
    for (int64_t thr : cfg.local_thresholds) {
      Rng r = make_rng(cfg.seed, 1000 + 10 * L + thr);
      TailEstimate e = local_time_tail_mc(r, L, thr, cfg.mc_trials);
      BoundCheck row;
      row.lemma = "local_time";
      row.point = point({{"L", std::to_string(L)}, {"threshold", std::to_string(thr)}});
      row.method = Method::monte_carlo;
      row.oracle = e.value;
      row.lo = e.lo;
      row.hi = e.hi;
      row.bound = local_time_bound(L, thr);
      row.pass = e.value - 3 * e.std_error <= row.bound;
      rows.push_back(row);
    }
  }
  if (cfg.prefix_trials > 0) {
    Rng r = make_rng(cfg.seed, 2000);
    TailEstimate e = prefix_sum_tail_mc(r, 5, 100, 0.04, cfg.prefix_trials);
    BoundCheck row;
    row.lemma = "prefix_sum";
    row.point = point({{"L", "5"}, {"N", "100"}, {"delta", "0.04"}});
    row.method = Method::monte_carlo;
    row.oracle = e.value;
    row.lo = e.lo;
    row.hi = e.hi;
    row.bound = 5.0 / 100.0;
    row.pass = e.value - 3 * e.std_error <= row.bound;
    rows.push_back(row);
  }
  return rows;
}

std::vector<TailInstance> corollary_instances(const ScaleParams& p) {
  std::vector<TailInstance> out;
  BigInt prod = 1;
  auto add = [&](const char* name, int m, const BigInt& Lp, const Rational& N, const Rational& stated) {
    TailInstance t;
    t.name = name;
    t.m = m;
    t.L_prime = Lp;
    t.N = floor_q(N);
    t.premise_ok = Lp >= 1000 && N > Rational(80 * Lp * Lp);
    t.exponent = N / Rational(27 * Lp * Lp);
    t.stated = stated;
    t.holds = t.premise_ok && t.exponent == t.stated;
    out.push_back(std::move(t));
  };
  for (int m = 1; m <= p.k; ++m) {
    const LevelParams& lv = p.at(m);
    prod *= lv.L;
    const Rational Ru(lv.R_upper), Mu(lv.M_upper);
    const BigInt L2 = lv.L * lv.L, P2 = prod * prod;
    // next(w, 2L, 0) > R/4 and next(w, 2 L_1...L_m, 0) > M/4
    add("eq1", m, 2 * lv.L, Ru / 4, Ru / Rational(432 * L2));
    add("eq2", m, 2 * prod, Mu / 4, Mu / Rational(432 * P2));
    // 0 in redUpper and 0 in upper: next(w, L, 0) > R and next(w, L_1...L_m, 0) > M
    add("eq3", m, lv.L, Ru, Ru / Rational(27 * L2));
    add("eq4", m, prod, Mu, Mu / Rational(27 * P2));
  }
  return out;
}

}  // namespace rwrs
