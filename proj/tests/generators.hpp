#pragma once

// Random clusters and finite subcomplexes for tests and the acceptance run.

#include <algorithm>
#include <random>
#include <vector>

#include "lm/complex.hpp"
#include "oracle.hpp"

namespace gen {

inline lm::GNormal randomG(std::mt19937& rng, std::size_t maxLetters = 4, std::size_t maxSub = 3) {
  return lm::normalize(oracle::randomSWord(rng, maxLetters, maxSub));
}

inline lm::Cluster randomCluster(std::mt19937& rng, std::size_t n, bool based) {
  return lm::Cluster{based ? randomG(rng) : lm::GNormal{}, oracle::randomParams(rng, n)};
}

// A cluster sharing the corner `mask` of c: some of its special blocks in
// expanded form, plus fresh independent parameters.
inline lm::Cluster overlapping(std::mt19937& rng, const lm::Cluster& c) {
  const std::uint32_t mask = rng() % (1u << c.dim());
  lm::Cluster d = lm::flipAt(c, mask);
  std::vector<lm::YWord> params;
  for (std::size_t i = 0; i < d.dim();) {
    std::size_t j = i;
    while (j + 1 < d.dim() && (rng() & 1) && lm::consecutiveLeaves(d.params[j].back().sub, d.params[j + 1].front().sub) &&
           d.params[j].back().exp == -d.params[j + 1].front().exp)
      ++j;
    if (rng() % 3 != 0) {
      lm::YWord block;
      for (std::size_t k = i; k <= j; ++k) block.insert(block.end(), d.params[k].begin(), d.params[k].end());
      if (rng() & 1) block = lm::expandAt(block, rng() % block.size());
      params.push_back(block);
    }
    i = j + 1;
  }
  for (int extra = rng() % 2; extra > 0; --extra) {
    auto s = oracle::randomSpecial(rng);
    bool ok = true;
    for (const auto& t : params)
      if (!lm::independent(s, t)) ok = false;
    if (ok) params.push_back(s);
  }
  while (params.size() > 3) params.pop_back();
  std::sort(params.begin(), params.end(), [](const lm::YWord& a, const lm::YWord& b) { return lm::lexLess(a.front().sub, b.front().sub); });
  return lm::Cluster{d.basepoint, params};
}

inline std::size_t maxSubscript(const lm::Cluster& c) {
  std::size_t m = 0;
  for (const auto& l : c.basepoint.y) m = std::max(m, l.sub.size());
  for (const auto& p : c.params)
    for (const auto& l : p) m = std::max(m, l.sub.size());
  return m;
}

// A connected union of 2 to 4 clusters, each meeting an earlier one: either
// an overlapping cluster or fresh parameters at a corner.
inline std::vector<lm::Cluster> randomSubcomplex(std::mt19937& rng, std::size_t maxSub = 5) {
  while (true) {
    std::vector<lm::Cluster> Y;
    Y.push_back(lm::Cluster{randomG(rng, 3, 3), oracle::randomParams(rng, 1 + rng() % 3)});
    const int extra = 1 + rng() % 3;
    for (int k = 0; k < extra; ++k) {
      const lm::Cluster src = Y[rng() % Y.size()];
      if (rng() % 2) {
        auto c = overlapping(rng, src);
        if (c.dim() > 0) Y.push_back(c);
      } else {
        Y.push_back(lm::Cluster{lm::groupElement(src, rng() % (1u << src.dim())), oracle::randomParams(rng, 1 + rng() % 2)});
      }
    }
    if (std::all_of(Y.begin(), Y.end(), [&](const lm::Cluster& c) { return maxSubscript(c) <= maxSub; })) return Y;
  }
}

}  // namespace gen
