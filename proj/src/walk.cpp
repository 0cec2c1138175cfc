#include "rwrs/walk.hpp"

#include <algorithm>
#include <cstdlib>

namespace rwrs {

Walk::Walk(std::vector<int8_t> steps) : steps_(std::move(steps)) {
  trace_.resize(steps_.size() + 1);
  trace_[0] = 0;
  int64_t x = 0;
  for (size_t t = 0; t < steps_.size(); ++t) {
    int8_t s = steps_[t];
    if (s != 1 && s != -1) throw std::invalid_argument("walk step must be +1 or -1");
    x += s;
    trace_[t + 1] = x;
  }
}

Walk Walk::from_text(std::string_view text) {
  std::vector<int8_t> steps;
  steps.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    unsigned char c = text[i];
    if (c == '+') {
      steps.push_back(1);
    } else if (c == '-') {
      steps.push_back(-1);
    } else if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
               static_cast<unsigned char>(text[i + 2]) == 0x92) {
      steps.push_back(-1);  // U+2212
      i += 2;
    } else if (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
      continue;
    } else {
      throw std::invalid_argument(std::string("bad walk character '") + static_cast<char>(c) + "'");
    }
  }
  return Walk(std::move(steps));
}

std::string Walk::to_text() const {
  std::string s(steps_.size(), '+');
  for (size_t t = 0; t < steps_.size(); ++t)
    if (steps_[t] < 0) s[t] = '-';
  return s;
}

int64_t Walk::position(int64_t t) const {
  if (t < 0 || t > size()) throw std::out_of_range("time index out of range");
  return trace_[t];
}

int64_t Walk::next_crossing(int64_t L, int64_t i) const {
  if (L < 1) throw std::invalid_argument("scale must be positive");
  if (i < 0 || i >= size()) throw std::out_of_range("time index out of range");
  const int64_t n = size();
  const int64_t hi = trace_[i] + L, lo = trace_[i] - L;
  const int64_t* x = trace_.data();
  for (int64_t j = i + 1; j <= n; ++j)
    if (x[j] == hi || x[j] == lo) return j;
  return n;
}

ReducedEmbedding reduced_embedding(const Walk& walk, int64_t L) {
  if (L < 1) throw std::invalid_argument("scale must be positive");
  const int64_t n = walk.size();
  if (walk.end_position() % L != 0) throw NotReducible("scale does not divide the end position");
  ReducedEmbedding emb;
  emb.L = L;
  emb.indices.push_back(0);
  if (L == 1) {
    emb.indices.resize(n + 1);
    for (int64_t t = 0; t <= n; ++t) emb.indices[t] = t;
    return emb;
  }
  const auto& x = walk.trace();
  int64_t i = 0;
  while (i < n) {
    int64_t j = walk.next_crossing(L, i);
    if (std::llabs(x[j] - x[i]) != L) throw NotReducible("crossing chain stalls before the end of the walk");
    emb.indices.push_back(j);
    i = j;
  }
  return emb;
}

Walk reduce_walk(const Walk& walk, const ReducedEmbedding& emb) {
  const auto& x = walk.trace();
  std::vector<int8_t> steps(emb.indices.size() - 1);
  for (size_t j = 0; j + 1 < emb.indices.size(); ++j)
    steps[j] = static_cast<int8_t>((x[emb.indices[j + 1]] - x[emb.indices[j]]) / emb.L);
  return Walk(std::move(steps));
}

Walk reduce_walk(const Walk& walk, int64_t L) {
  if (L == 1) {
    reduced_embedding(walk, 1);  // validation only
    return walk;
  }
  return reduce_walk(walk, reduced_embedding(walk, L));
}

std::optional<Walk> sample_stopped_walk(Rng& rng, int64_t L_total, int64_t max_steps) {
  if (L_total < 1) throw std::invalid_argument("L_total must be positive");
  if (max_steps < L_total) throw std::invalid_argument("max_steps must be at least L_total");
  std::vector<int8_t> steps;
  steps.reserve(static_cast<size_t>(std::min<int64_t>(max_steps, 2 * L_total * L_total + 64)));
  int64_t x = 0, n = 0;
  while (n < max_steps) {
    uint64_t bits = rng();
    for (int b = 0; b < 64 && n < max_steps; ++b, ++n) {
      int8_t s = (bits >> b) & 1 ? 1 : -1;
      steps.push_back(s);
      x += s;
      if (x == L_total || x == -L_total) return Walk(std::move(steps));
    }
  }
  return std::nullopt;
}

Hierarchy::Hierarchy(std::shared_ptr<const Walk> ground, std::vector<int64_t> L) : L_(std::move(L)) {
  const int k = static_cast<int>(L_.size());
  scale_.assign(k + 1, 1);
  levels_.resize(k + 1);
  up_.resize(k + 1);
  levels_[0] = std::move(ground);
  for (int m = 1; m <= k; ++m) {
    if (L_[m - 1] < 1) throw std::invalid_argument("scales must be positive");
    scale_[m] = scale_[m - 1] * L_[m - 1];
    if (L_[m - 1] == 1) {
      levels_[m] = levels_[m - 1];
      continue;
    }
    ReducedEmbedding emb = reduced_embedding(*levels_[m - 1], L_[m - 1]);
    levels_[m] = std::make_shared<const Walk>(reduce_walk(*levels_[m - 1], emb));
    up_[m] = std::move(emb.indices);
  }
}

int64_t Hierarchy::embed(int m, int m_prime, int64_t j) const {
  for (int r = m; r > m_prime; --r) j = up(r, j);
  return j;
}

Interval Hierarchy::interval(int m, int64_t j, int m_prime) const {
  if (m < 0 || m > k() || m_prime < 0 || m_prime > m) throw std::out_of_range("level out of range");
  if (j < 0 || j >= level_length(m)) throw std::out_of_range("interval index out of range");
  if (m_prime == m) return {j, j + 1};
  return {embed(m, m_prime, j), embed(m, m_prime, j + 1)};
}

}  // namespace rwrs
