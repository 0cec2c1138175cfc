#include "rwrs/test_engine.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace rwrs {

namespace {

namespace mp = boost::multiprecision;

void check_pair(const TestPair& p, int64_t N) {
  if (p.t < 0 || p.t >= N) throw std::invalid_argument("test time offset outside [0, N)");
  if (p.delta <= -N || p.delta >= N) throw std::invalid_argument("test scenery offset outside (-N, N)");
}

// Machine-word ratio for the hot density comparisons.
struct Ratio {
  int64_t num = 0, den = 1;
  explicit Ratio(const Rational& q) {
    const BigInt& n = mp::numerator(q);
    const BigInt& d = mp::denominator(q);
    const BigInt lim = std::numeric_limits<int64_t>::max();
    if (n > lim || d > lim || n < 0) throw std::invalid_argument("alpha must be a nonnegative ratio of 64-bit integers");
    num = n.convert_to<int64_t>();
    den = d.convert_to<int64_t>();
  }
  // count < ratio * size
  bool above(int64_t count, int64_t size) const {
    return static_cast<__int128>(count) * den < static_cast<__int128>(num) * size;
  }
};

std::vector<int64_t> prefix_of(const std::vector<int64_t>& sorted, int64_t N) {
  std::vector<int64_t> p(N + 1, 0);
  for (int64_t t : sorted)
    if (t >= 0 && t < N) p[t + 1] += 1;
  for (int64_t t = 0; t < N; ++t) p[t + 1] += p[t];
  return p;
}

std::pair<int64_t, int64_t> ground_range(const Walk& w, Interval I) {
  const auto& x = w.trace();
  auto [lo, hi] = std::minmax_element(x.begin() + I.begin, x.begin() + I.end);
  return {*lo, *hi};
}

struct Candidate {
  int64_t index = 0;
  int64_t position = 0;
  int64_t lo = 0, hi = 0;
  TestNode node;
};

// Greedy left-to-right scan: earliest right end first, skipping overlaps.
std::vector<const Candidate*> disjoint_scan(std::vector<const Candidate*> pool) {
  std::stable_sort(pool.begin(), pool.end(), [](const Candidate* a, const Candidate* b) { return a->hi < b->hi; });
  std::vector<const Candidate*> out;
  int64_t last = std::numeric_limits<int64_t>::min();
  for (const Candidate* c : pool) {
    if (!out.empty() && c->lo <= last) continue;
    out.push_back(c);
    last = c->hi;
  }
  return out;
}

class Builder {
 public:
  explicit Builder(const FinderContext& ctx) : ctx_(ctx), h_(ctx.hierarchy()) {}

  FinderFailure why = FinderFailure::none;
  std::string detail;

  bool build(int m, int64_t j, const Rational& alpha, TestNode& node) {
    node.level = m;
    node.index = j;
    const Interval I = h_.interval(m, j);
    const int64_t i_m = h_.embed(m, 0, j);
    const Ratio relaxed(alpha * Rational(m * m + 1, m * m));
    const auto& pos = h_.level(m - 1).trace();
    const int64_t Bm = ctx_.params().at(m).branching;

    // J without its first index, whose offset t would be 0
    std::vector<Candidate> cands;
    for (int64_t i = I.begin + 1; i < I.end; ++i) {
      const Interval sub = h_.interval(m - 1, i, 0);
      if (!relaxed.above(ctx_.bad_in(sub), sub.size())) continue;
      Candidate c;
      c.index = i;
      c.position = pos[i];
      if (m - 1 == 1) {
        c.node.level = 1;
        c.node.index = i;
        const int64_t N = h_.ground().size();
        c.node.clean = ctx_.errors_in({sub.begin, std::min(sub.end + 1, N)}) == 0;
      } else if (!build(m - 1, i, alpha * Rational(m * m + 1, m * m), c.node)) {
        return false;
      }
      cands.push_back(std::move(c));
    }
    // one representative per reduced position: smallest index, clean ones first
    std::map<int64_t, size_t> rep;
    for (size_t c = 0; c < cands.size(); ++c) {
      auto it = rep.find(cands[c].position);
      if (it == rep.end())
        rep.emplace(cands[c].position, c);
      else if (!cands[it->second].node.clean && cands[c].node.clean)
        it->second = c;
    }
    if (static_cast<int64_t>(rep.size()) < 2 * Bm) {
      why = FinderFailure::too_few_positions;
      detail = "level " + std::to_string(m) + " index " + std::to_string(j) + ": " + std::to_string(rep.size()) +
               " distinct reduced positions, need 2 B_m = " + std::to_string(2 * Bm);
      return false;
    }
    std::vector<const Candidate*> all, clean;
    for (auto& [p, c] : rep) {
      Candidate& cand = cands[c];
      std::tie(cand.lo, cand.hi) = ground_range(h_.ground(), h_.interval(m - 1, cand.index, 0));
      all.push_back(&cand);
      if (cand.node.clean) clean.push_back(&cand);
    }
    std::vector<const Candidate*> chosen = disjoint_scan(clean);
    if (static_cast<int64_t>(chosen.size()) < Bm) chosen = disjoint_scan(all);
    if (static_cast<int64_t>(chosen.size()) < Bm) {
      why = FinderFailure::too_few_disjoint;
      detail = "level " + std::to_string(m) + " index " + std::to_string(j) + ": " + std::to_string(chosen.size()) +
               " disjoint scenery intervals, need B_m = " + std::to_string(Bm);
      return false;
    }
    chosen.resize(Bm);
    std::sort(chosen.begin(), chosen.end(), [](const Candidate* a, const Candidate* b) { return a->index < b->index; });
    node.clean = true;
    node.children.clear();
    for (const Candidate* c : chosen) {
      TestNode child = c->node;
      const int64_t start = h_.embed(m - 1, 0, c->index);
      child.t = start - i_m;
      child.delta_count = ctx_.plus_in({i_m, start}) - ctx_.minus_in({i_m, start});
      node.clean = node.clean && child.clean;
      node.children.push_back(std::move(child));
    }
    return true;
  }

 private:
  const FinderContext& ctx_;
  const Hierarchy& h_;
};

void flatten_into(const TestNode& node, int64_t t0, int64_t d0, std::vector<TestPair>& out) {
  if (node.children.empty()) {
    out.push_back({t0, d0});
    return;
  }
  for (const TestNode& c : node.children) flatten_into(c, t0 + c.t, d0 + 2 * c.delta_count, out);
}

bool lambda_node(const TestNode& node, const DeskView& params, int m) {
  if (node.level != m) return false;
  if (m == 1) return node.children.empty();
  const int64_t M = params.at(m).M_upper;
  if (static_cast<int64_t>(node.children.size()) != params.at(m).branching) return false;
  std::set<int64_t> ts;
  for (const TestNode& c : node.children) {
    if (c.t < 1 || c.t > M || c.delta_count < -M || c.delta_count > M) return false;
    if (!ts.insert(c.t).second) return false;
    if (!lambda_node(c, params, m - 1)) return false;
  }
  return true;
}

BigInt falling_factorial(const BigInt& M, const BigInt& B) {
  if (B > M) return 0;
  BigInt r = 1;
  for (BigInt i = 0; i < B; ++i) r *= M - i;
  return r;
}

}  // namespace

TimeRange tested_range(const Walk& walk_prime, int64_t L1, int64_t t) {
  return {t, walk_prime.next_crossing(L1, t)};
}

bool passes_test(const Record& record_prime, const Scenery& scenery, const Test& test, int64_t L1) {
  const int64_t N = record_prime.size();
  const Walk w = record_prime.walk();
  const auto& x = w.trace();
  for (const TestPair& p : test.pairs) {
    check_pair(p, N);
    const TimeRange r = tested_range(w, L1, p.t);
    for (int64_t t = r.first; t <= std::min(r.last, N - 1); ++t) {
      const int64_t site = x[t] + p.delta;
      if (!scenery.covers(site)) throw std::out_of_range("scenery window does not cover tested site");
      if (scenery.color(site) != record_prime.colors[t]) return false;
    }
  }
  return true;
}

int64_t reconstructed_size(const Test& test, const Walk& walk_prime, int64_t L1) {
  const int64_t N = walk_prime.size();
  const auto& x = walk_prime.trace();
  std::vector<Interval> blocks;
  for (const TestPair& p : test.pairs) {
    check_pair(p, N);
    const TimeRange r = tested_range(walk_prime, L1, p.t);
    auto [lo, hi] = std::minmax_element(x.begin() + r.first, x.begin() + r.last + 1);
    blocks.push_back({*lo + p.delta, *hi + p.delta + 1});
  }
  return blocks_size(merge_blocks(std::move(blocks)));
}

PartialScenery apply_test(const Record& record_prime, const Test& test, int64_t L1) {
  const int64_t N = record_prime.size();
  const Walk w = record_prime.walk();
  const auto& x = w.trace();
  PartialScenery out;
  for (size_t i = 0; i < test.pairs.size(); ++i) {
    const TestPair& p = test.pairs[i];
    check_pair(p, N);
    const TimeRange r = tested_range(w, L1, p.t);
    for (int64_t t = r.first; t <= std::min(r.last, N - 1); ++t) {
      const int64_t site = x[t] + p.delta;
      const uint32_t color = record_prime.colors[t];
      auto [it, fresh] = out.assignments.emplace(site, color);
      if (fresh)
        out.provenance.emplace(site, SceneryWrite{i, t});
      else if (it->second != color)
        out.conflicts.push_back({site, it->second, color, SceneryWrite{i, t}});
    }
  }
  return out;
}

std::optional<BigInt> lambda_raw_bound(const ScaleParams& params, int m, const BigInt& cap) {
  if (m < 1 || m > params.k) throw std::out_of_range("level out of range");
  BigInt U = 1;
  for (int r = 2; r <= m; ++r) {
    const BigInt& M = params.at(r).M_upper;
    const BigInt& B = params.branching.at(r);
    if (B > 64) return std::nullopt;  // exponent alone puts the count far beyond any enumerable cap
    const unsigned b = B.convert_to<unsigned>();
    BigInt next = falling_factorial(M, B);
    if (next > cap) return std::nullopt;
    next *= mp::pow(BigInt(2 * M + 1), b);
    if (next > cap) return std::nullopt;
    for (unsigned i = 0; i < b; ++i) {
      next *= U;
      if (next > cap) return std::nullopt;
    }
    U = next;
  }
  return U;
}

std::vector<Test> enumerate_tests(const ScaleParams& params, int m, const BigInt& cap) {
  if (m < 1 || m > params.k) throw std::out_of_range("level out of range");
  if (!lambda_raw_bound(params, m, cap)) {
    std::string bound = m >= 2 ? decimal(lambda_count_bound(params, m).recursive) : std::string("0");
    throw EnumerationRefused("enumeration of Lambda_" + std::to_string(m) + " exceeds cap " + cap.str() +
                             "; ln-bound on its size is " + bound);
  }
  std::vector<Test> level{Test{{{0, 0}}}};
  for (int r = 2; r <= m; ++r) {
    const int64_t M = params.at(r).M_upper.convert_to<int64_t>();
    const int64_t B = params.branching.at(r).convert_to<int64_t>();
    std::set<Test> out;
    std::vector<int64_t> used;
    std::vector<TestPair> acc;
    std::function<void(int64_t)> rec = [&](int64_t jdx) {
      if (jdx == B) {
        out.insert(Test{acc});
        return;
      }
      for (int64_t t = 1; t <= M; ++t) {
        if (std::find(used.begin(), used.end(), t) != used.end()) continue;
        used.push_back(t);
        for (int64_t d = -M; d <= M; ++d) {
          for (const Test& sub : level) {
            const size_t mark = acc.size();
            for (const TestPair& p : sub.pairs) acc.push_back({p.t + t, p.delta + 2 * d});
            rec(jdx + 1);
            acc.resize(mark);
          }
        }
        used.pop_back();
      }
    };
    rec(0);
    level.assign(out.begin(), out.end());
  }
  return level;
}

Test flatten(const TestNode& root) {
  Test t;
  flatten_into(root, 0, 0, t.pairs);
  return t;
}

bool in_lambda(const TestNode& root, const DeskView& params) { return lambda_node(root, params, root.level); }

FinderContext::FinderContext(const Hierarchy& h, const DeskView& params, const BadSetReport& report,
                             const ErrorSet& errors)
    : h_(h), params_(params) {
  const int64_t N = h.ground().size();
  if (report.ground_len() != N) throw std::invalid_argument("bad set report belongs to another walk");
  std::vector<int64_t> marks(N + 1, 0);
  for (const Interval& I : report.union_blocks())
    for (int64_t t = I.begin; t < I.end; ++t) marks[t + 1] = 1;
  for (int64_t t : errors.E) {
    if (t < 0 || t >= N) throw std::out_of_range("error index outside the walk");
    marks[t + 1] = 1;
  }
  bad_ = std::move(marks);
  for (int64_t t = 0; t < N; ++t) bad_[t + 1] += bad_[t];
  e_ = prefix_of(errors.E, N);
  plus_ = prefix_of(errors.E_plus, N);
  minus_ = prefix_of(errors.E_minus, N);
  const int64_t len1 = h.level_length(1);
  level1_starts_.resize(len1 + 1);
  for (int64_t j = 0; j <= len1; ++j) level1_starts_[j] = h.embed(1, 0, j);
}

int64_t FinderContext::level1_index_at(int64_t s) const {
  auto it = std::lower_bound(level1_starts_.begin(), level1_starts_.end() - 1, s);
  if (it == level1_starts_.end() - 1 || *it != s) return -1;
  return it - level1_starts_.begin();
}

const char* failure_name(FinderFailure f) {
  switch (f) {
    case FinderFailure::none: return "none";
    case FinderFailure::premise_violated: return "premise_violated";
    case FinderFailure::too_few_positions: return "too_few_positions";
    case FinderFailure::too_few_disjoint: return "too_few_disjoint";
  }
  return "?";
}

Rational relaxation_product(int m) {
  Rational p = 1;
  for (int r = 2; r <= m; ++r) p *= Rational(r * r + 1, r * r);
  return p;
}

FinderResult find_satisfied_test(const FinderContext& ctx, int m, int64_t j, const Rational& alpha) {
  const Hierarchy& h = ctx.hierarchy();
  if (m < 2 || m > h.k()) throw std::out_of_range("finder needs 2 <= m <= k");
  if (j < 0 || j >= h.level_length(m)) throw std::out_of_range("interval index out of range");
  FinderResult res;
  auto premise = [&](std::string why) {
    res.reason = FinderFailure::premise_violated;
    res.detail = std::move(why);
    return res;
  };
  if (alpha < 0) return premise("alpha < 0");
  if (alpha * relaxation_product(m) >= 1) return premise("alpha >= 1 / prod_{r=2}^m (1 + 1/r^2)");
  const Interval I0 = h.interval(m, j, 0);
  if (!Ratio(alpha).above(ctx.bad_in(I0), I0.size()))
    return premise("|I^0 cap (bad u E)| = " + std::to_string(ctx.bad_in(I0)) + " is not below alpha |I^0| with |I^0| = " +
                   std::to_string(I0.size()));
  Builder b(ctx);
  if (!b.build(m, j, alpha, res.tree)) {
    res.reason = b.why;
    res.detail = b.detail;
    return res;
  }
  res.ok = true;
  res.test = flatten(res.tree);
  return res;
}

bool PropertyReport::all_pass() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.pass; });
}

const ClauseResult& PropertyReport::clause(const std::string& name) const {
  for (const auto& c : clauses)
    if (c.name == name) return c;
  throw std::out_of_range("no clause " + name);
}

PropertyReport verify_test_properties(const FinderContext& ctx, const Test& test, const Rational& alpha, int m,
                                      int64_t j) {
  const Hierarchy& h = ctx.hierarchy();
  const DeskView& params = ctx.params();
  const int64_t i0 = h.embed(m, 0, j);
  const Rational relaxed = relaxation_product(m) * alpha;
  const LevelBounds& b1 = params.at(1);
  PropertyReport rep;
  ClauseResult start{"interval_start", true, ""}, c1{"delta_prefix", true, ""}, c2{"error_density", true, ""},
      c3{"m_bounds", true, ""}, dis{"disjoint", true, ""}, size{"size", true, ""}, ef{"error_free", true, ""};
  auto fail = [](ClauseResult& c, size_t i, const std::string& what) {
    if (c.pass) c.detail = "pair " + std::to_string(i) + ": " + what;
    c.pass = false;
  };
  std::vector<Interval> ranges;
  for (size_t i = 0; i < test.pairs.size(); ++i) {
    const TestPair& p = test.pairs[i];
    const int64_t s = i0 + p.t;
    const int64_t idx = s >= 0 && s < h.ground().size() ? ctx.level1_index_at(s) : -1;
    if (idx < 0) {
      fail(start, i, "time " + std::to_string(s) + " does not start a level-1 interval");
      continue;
    }
    const Interval I = h.interval(1, idx, 0);
    const int64_t want = 2 * (ctx.plus_in({i0, s}) - ctx.minus_in({i0, s}));
    if (p.delta != want) fail(c1, i, "delta " + std::to_string(p.delta) + " != " + std::to_string(want));
    const int64_t errs = ctx.errors_in(I);
    if (!(Rational(errs) < relaxed * Rational(I.size())))
      fail(c2, i, std::to_string(errs) + " errors in an interval of size " + std::to_string(I.size()));
    if (I.size() < b1.M_lower || I.size() > b1.M_upper) fail(c3, i, "|I'| = " + std::to_string(I.size()));
    if (errs > 0) rep.error_free = false;
    auto [lo, hi] = ground_range(h.ground(), I);
    ranges.push_back({lo, hi + 1});
  }
  std::vector<Interval> sorted = ranges;
  std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) { return a.begin < b.begin; });
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].begin < sorted[i - 1].end) {
      dis.pass = false;
      dis.detail = "scenery intervals overlap at site " + std::to_string(sorted[i].begin);
      break;
    }
  const int64_t visited = blocks_size(merge_blocks(ranges));
  const int64_t need = h.L(1) * static_cast<int64_t>(test.size());
  size.pass = visited >= need;
  size.detail = std::to_string(visited) + " sites, need L_1 |lambda| = " + std::to_string(need);
  rep.error_free_forced = relaxed * Rational(b1.M_upper) < 1;
  ef.pass = !rep.error_free_forced || rep.error_free;
  ef.detail = std::string(rep.error_free_forced ? "forced" : "not forced") + (rep.error_free ? ", error free" : ", errors present");
  rep.clauses = {start, c1, c2, c3, dis, size, ef};
  return rep;
}

}  // namespace rwrs
