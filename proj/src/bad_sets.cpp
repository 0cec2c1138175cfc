#include "rwrs/bad_sets.hpp"

#include <algorithm>
#include <cstdlib>

namespace rwrs {

const char* classifier_name(Classifier c) {
  switch (c) {
    case Classifier::upper: return "upper";
    case Classifier::redUpper: return "redUpper";
    case Classifier::lower: return "lower";
    case Classifier::redLower: return "redLower";
    case Classifier::length: return "length";
    case Classifier::redLength: return "redLength";
    case Classifier::local: return "local";
    case Classifier::all: return "all";
  }
  return "?";
}

namespace {

// MLT over [b, e) of a walk's times, with a caller-owned scratch buffer.
int64_t max_visits(const std::vector<int64_t>& x, int64_t b, int64_t e, std::vector<int64_t>& scratch) {
  if (e <= b) return 0;
  const int64_t r = e - b;
  const int64_t base = x[b] - r;
  if (static_cast<int64_t>(scratch.size()) < 2 * r + 1) scratch.assign(2 * r + 1, 0);
  int64_t best = 0;
  for (int64_t t = b; t < e; ++t) best = std::max(best, ++scratch[x[t] - base]);
  for (int64_t t = b; t < e; ++t) scratch[x[t] - base] = 0;
  return best;
}

std::vector<int64_t> set_union(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
  std::vector<int64_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

int64_t mlt(const Hierarchy& h, int m, int64_t j) {
  if (m < 1 || m > h.k()) throw std::out_of_range("level out of range");
  Interval I = h.interval(m, j);
  std::vector<int64_t> scratch;
  return max_visits(h.level(m - 1).trace(), I.begin, I.end, scratch);
}

LevelBadSets classify_level(const Hierarchy& h, const DeskView& params, int m) {
  if (m < 1 || m > h.k() || m > params.k) throw std::out_of_range("level out of range");
  const LevelBounds& b = params.at(m);
  LevelBadSets out;
  out.m = m;
  out.len = h.level_length(m);
  out.mlt.resize(out.len);
  const auto& x = h.level(m - 1).trace();
  std::vector<int64_t> scratch;
  auto put = [&](Classifier c, int64_t j) { out.bad[static_cast<int>(c)].push_back(j); };
  for (int64_t j = 0; j < out.len; ++j) {
    const Interval red = h.interval(m, j);
    const Interval ground = h.interval(m, j, 0);
    const int64_t g = ground.size(), r = red.size();
    const int64_t v = max_visits(x, red.begin, red.end, scratch);
    out.mlt[j] = v;
    const bool upper = g > b.M_upper, lower = g < b.M_lower;
    const bool red_upper = r > b.R_upper, red_lower = r < b.R_lower;
    // MLT > (beta/2)|I|  <=>  2 MLT den > num |I|
    const bool local = static_cast<__int128>(2) * v * b.beta_den > static_cast<__int128>(b.beta_num) * r;
    if (upper) put(Classifier::upper, j);
    if (lower) put(Classifier::lower, j);
    if (red_upper) put(Classifier::redUpper, j);
    if (red_lower) put(Classifier::redLower, j);
    if (upper || lower) put(Classifier::length, j);
    if (red_upper || red_lower) put(Classifier::redLength, j);
    if (local) put(Classifier::local, j);
    if (upper || lower || red_upper || red_lower || local) put(Classifier::all, j);
  }
  for (int c = 0; c < classifier_count; ++c) {
    int64_t s = 0;
    for (int64_t j : out.bad[c]) s += h.interval(m, j, 0).size();
    out.lifted_size[c] = s;
  }
  return out;
}

std::vector<Interval> merge_blocks(std::vector<Interval> blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](const Interval& a, const Interval& b) { return a.begin < b.begin || (a.begin == b.begin && a.end < b.end); });
  std::vector<Interval> out;
  for (const Interval& I : blocks) {
    if (I.size() <= 0) continue;
    if (!out.empty() && I.begin <= out.back().end)
      out.back().end = std::max(out.back().end, I.end);
    else
      out.push_back(I);
  }
  return out;
}

std::vector<Interval> lift(const Hierarchy& h, int m, int m_prime, const std::vector<int64_t>& index_set) {
  if (m_prime > m) throw std::out_of_range("lift needs m' <= m");
  std::vector<Interval> blocks;
  blocks.reserve(index_set.size());
  for (int64_t j : index_set) blocks.push_back(h.interval(m, j, m_prime));
  return merge_blocks(std::move(blocks));
}

std::vector<int64_t> expand(const std::vector<Interval>& blocks) {
  std::vector<int64_t> out;
  for (const Interval& I : blocks)
    for (int64_t t = I.begin; t < I.end; ++t) out.push_back(t);
  return out;
}

int64_t blocks_size(const std::vector<Interval>& blocks) {
  int64_t s = 0;
  for (const Interval& I : blocks) s += I.size();
  return s;
}

std::vector<int64_t> complement(const std::vector<int64_t>& sorted_set, int64_t len) {
  std::vector<int64_t> out;
  size_t i = 0;
  for (int64_t t = 0; t < len; ++t) {
    while (i < sorted_set.size() && sorted_set[i] < t) ++i;
    if (i < sorted_set.size() && sorted_set[i] == t) continue;
    out.push_back(t);
  }
  return out;
}

BadSetReport::BadSetReport(const Hierarchy& h, const DeskView& params) : ground_len_(h.ground().size()) {
  if (params.k != h.k()) throw std::invalid_argument("parameter depth does not match the hierarchy");
  std::vector<Interval> all;
  for (int m = 1; m <= h.k(); ++m) {
    levels_.push_back(classify_level(h, params, m));
    lifted_all_.push_back(lift(h, m, 0, levels_.back()[Classifier::all]));
    all.insert(all.end(), lifted_all_.back().begin(), lifted_all_.back().end());
  }
  union_ = merge_blocks(std::move(all));
  union_size_ = blocks_size(union_);
  // the union laws hold by construction; keep a cheap guard against regressions
  for (const auto& lv : levels_) {
    if (lv[Classifier::length] != set_union(lv[Classifier::upper], lv[Classifier::lower]) ||
        lv[Classifier::redLength] != set_union(lv[Classifier::redUpper], lv[Classifier::redLower]))
      throw std::logic_error("bad set union law violated");
  }
}

bool BadSetReport::is_bad(int m, int64_t j, Classifier c) const {
  const auto& s = bad(m, c);
  return std::binary_search(s.begin(), s.end(), j);
}

bool in_stopped_class(const Walk& w, int64_t L_total) {
  const auto& x = w.trace();
  const int64_t n = w.size();
  if (std::llabs(x[n]) != L_total) return false;
  for (int64_t t = 0; t < n; ++t)
    if (std::llabs(x[t]) >= L_total) return false;
  return true;
}

SinuosityReport is_sinuous(const BadSetReport& report, const DeskView& params) {
  SinuosityReport s;
  s.union_size = report.union_size();
  s.len = report.ground_len();
  s.threshold = Rational(10) * params.alpha * Rational(s.len);
  s.sinuous = Rational(s.union_size) < s.threshold;
  for (int m = 1; m <= report.k(); ++m) s.lifted_per_level.push_back(report.level(m).lifted_size[static_cast<int>(Classifier::all)]);
  return s;
}

SinuosityReport is_sinuous(const Hierarchy& h, const DeskView& params) {
  if (!in_stopped_class(h.ground(), params.L_total()))
    throw NotStopped("walk is not stopped at the first hit of +-L_1...L_k");
  return is_sinuous(BadSetReport(h, params), params);
}

}  // namespace rwrs
