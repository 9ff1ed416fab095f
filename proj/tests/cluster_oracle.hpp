#pragma once

// Brute-force references built on the library's vertex and edge primitives:
// graphs by enumerating vertices, loops by reading words letter by letter.

#include <set>

#include "lm/complex.hpp"
#include "oracle.hpp"

namespace oracle {

// Common vertices of two clusters, and the 1-cells among them.
struct GraphMeet {
  std::set<lm::CosetVertex> vertices;
  std::set<std::pair<lm::CosetVertex, lm::CosetVertex>> edges;
};

inline GraphMeet bruteMeet(const lm::Cluster& a, const lm::Cluster& b) {
  GraphMeet m;
  auto va = lm::vertexSet(a), vb = lm::vertexSet(b);
  for (const auto& v : va)
    if (vb.count(v)) m.vertices.insert(v);
  for (const auto& u : m.vertices)
    for (const auto& v : m.vertices)
      if (u < v && lm::isOneCell(u, v)) m.edges.insert({u, v});
  return m;
}

inline GraphMeet graphOf(const lm::Cluster& c) {
  GraphMeet m;
  auto g = lm::buildCluster(c);
  m.vertices.insert(g.vertices.begin(), g.vertices.end());
  for (auto [x, y] : g.edges) {
    auto u = g.vertices[x], v = g.vertices[y];
    if (v < u) std::swap(u, v);
    m.edges.insert({u, v});
  }
  return m;
}

// Cosets visited by the suffixes of a word read from the right, one per unit
// y-letter; a loop at F when the word lies in F.
inline std::vector<lm::CosetVertex> suffixPath(const lm::SWord& w) {
  std::vector<lm::CosetVertex> out{lm::CosetVertex{}};
  lm::SWord suffix;
  const auto& L = w.letters();
  for (std::size_t i = L.size(); i-- > 0;) {
    if (L[i].kind == lm::Gen::x) {
      suffix = lm::SWord::x(L[i].sub, L[i].exp) * suffix;
      continue;
    }
    const int sg = L[i].exp > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(L[i].exp); ++k) {
      suffix = lm::SWord::y(L[i].sub, sg) * suffix;
      out.push_back(lm::vertexOf(suffix));
    }
  }
  return out;
}

// A loop at F: walk out along w, back along a rewritten copy of w.
inline std::vector<lm::CosetVertex> randomLoop(std::mt19937& rng, std::size_t maxEdges = 12) {
  while (true) {
    lm::SWord w;
    std::uniform_int_distribution<int> n(1, 4);
    for (int k = n(rng); k > 0; --k) w.push({lm::Gen::y, randomWord(rng, 3, true), (rng() & 1) ? 1 : -1});
    lm::SWord w2 = w;
    std::uniform_int_distribution<int> subs(0, 3);
    for (int k = subs(rng); k > 0; --k) randomSubstitution(w2, rng);
    std::vector<lm::Letter> all = w2.inverse().letters();
    all.insert(all.end(), w.letters().begin(), w.letters().end());
    lm::SWord loopWord;
    for (const auto& l : all) loopWord.push(l);
    auto p = suffixPath(loopWord);
    if (p.size() - 1 <= maxEdges && p.size() >= 2) return p;
  }
}

}  // namespace oracle
