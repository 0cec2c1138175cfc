#include "naive_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace naive {

namespace {

std::vector<int64_t> positions(const std::vector<int>& steps) {
  std::vector<int64_t> x{0};
  for (int s : steps) x.push_back(x.back() + s);
  return x;
}

// Crossing times i(0) = 0 < i(1) < ... of scale L, read straight off the definition.
std::vector<int64_t> crossings(const std::vector<int>& steps, int64_t L) {
  const std::vector<int64_t> x = positions(steps);
  const int64_t n = static_cast<int64_t>(steps.size());
  std::vector<int64_t> idx{0};
  int64_t i = 0;
  while (i < n) {
    int64_t j = i + 1;
    while (j <= n && std::llabs(x[j] - x[i]) != L) ++j;
    if (j > n) throw std::runtime_error("walk is not reducible");
    idx.push_back(j);
    i = j;
  }
  return idx;
}

std::vector<int> reduced(const std::vector<int>& steps, const std::vector<int64_t>& idx, int64_t L) {
  const std::vector<int64_t> x = positions(steps);
  std::vector<int> out;
  for (size_t j = 0; j + 1 < idx.size(); ++j) out.push_back(static_cast<int>((x[idx[j + 1]] - x[idx[j]]) / L));
  return out;
}

}  // namespace

Result classify(const std::vector<int>& steps, const std::vector<Bounds>& bounds) {
  const int k = static_cast<int>(bounds.size());
  // walks[m] = red(w, L_1...L_m); ground[m][j] = ground time of level-m index j
  std::vector<std::vector<int>> walks{steps};
  std::vector<std::vector<int64_t>> up(k + 1), ground(k + 1);
  for (int64_t t = 0; t <= static_cast<int64_t>(steps.size()); ++t) ground[0].push_back(t);
  for (int m = 1; m <= k; ++m) {
    up[m] = crossings(walks[m - 1], bounds[m - 1].L);
    walks.push_back(reduced(walks[m - 1], up[m], bounds[m - 1].L));
    for (int64_t i : up[m]) ground[m].push_back(ground[m - 1][i]);
  }

  Result r;
  for (int m = 1; m <= k; ++m) {
    const Bounds& b = bounds[m - 1];
    const std::vector<int64_t> x = positions(walks[m - 1]);
    Level lv;
    lv.len = static_cast<int64_t>(walks[m].size());
    for (int64_t j = 0; j < lv.len; ++j) {
      const int64_t red_begin = up[m][j], red_end = up[m][j + 1];
      const int64_t g_begin = ground[m][j], g_end = ground[m][j + 1];
      const int64_t red_size = red_end - red_begin, g_size = g_end - g_begin;
      std::map<int64_t, int64_t> visits;
      int64_t mlt = 0;
      for (int64_t t = red_begin; t < red_end; ++t) mlt = std::max(mlt, ++visits[x[t]]);
      bool flag[kinds] = {};
      flag[0] = g_size > b.M_upper;
      flag[1] = red_size > b.R_upper;
      flag[2] = g_size < b.M_lower;
      flag[3] = red_size < b.R_lower;
      flag[4] = flag[0] || flag[2];
      flag[5] = flag[1] || flag[3];
      // MLT > (beta / 2) |I| in exact integers
      flag[6] = 2 * mlt * b.beta_den > b.beta_num * red_size;
      flag[7] = flag[4] || flag[5] || flag[6];
      for (int c = 0; c < kinds; ++c) {
        if (!flag[c]) continue;
        lv.bad[c].insert(j);
        lv.lifted[c] += g_size;
      }
      if (flag[7])
        for (int64_t t = g_begin; t < g_end; ++t) r.union_times.insert(t);
    }
    r.levels.push_back(std::move(lv));
  }
  return r;
}

}  // namespace naive
