#include "lm/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace lm {

namespace {

SWord product(const std::vector<SpecialForm>& params, std::uint32_t mask) {
  SWord w;
  for (std::size_t i = 0; i < params.size(); ++i)
    if (mask >> i & 1u) w.append(toSWord(params[i]));
  return w;
}

SpecialForm concatRange(const std::vector<SpecialForm>& p, std::size_t i, std::size_t j) {
  return concat(std::vector<SpecialForm>(p.begin() + static_cast<std::ptrdiff_t>(i), p.begin() + static_cast<std::ptrdiff_t>(j) + 1));
}

bool consecutivePair(const SpecialForm& a, const SpecialForm& b) { return consecutiveLeaves(a.back().sub, b.front().sub); }
bool alternatingPair(const SpecialForm& a, const SpecialForm& b) { return a.back().exp == -b.front().exp; }

// Intervals [i, j] whose product is a special form.
std::vector<std::pair<std::size_t, std::size_t>> specialIntervals(const std::vector<SpecialForm>& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.emplace_back(i, i);
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (!consecutivePair(p[j - 1], p[j]) || !alternatingPair(p[j - 1], p[j])) break;
      out.emplace_back(i, j);
    }
  }
  return out;
}

std::uint32_t fullMask(std::size_t n) { return n >= 32 ? ~0u : (1u << n) - 1; }

std::optional<std::uint32_t> maskOf(const Cluster& c, const CosetVertex& v) {
  for (std::uint32_t m = 0; m <= fullMask(c.dim()); ++m) {
    if (clusterVertex(c, m) == v) return m;
    if (m == fullMask(c.dim())) break;
  }
  return std::nullopt;
}

}  // namespace

CosetVertex vertexOf(const SWord& w) { return normalize(w).y; }
CosetVertex vertexOf(const GNormal& g) { return normalize(toSWord(g)).y; }

bool isOneCell(const CosetVertex& u, const CosetVertex& v) {
  return isSpecial(normalize(toSWord(u) * toSWord(v).inverse()).y);
}

void validateCluster(const Cluster& c) {
  if (c.dim() > 20) throw std::invalid_argument("cluster dimension too large");
  for (const auto& p : c.params)
    if (!isSpecial(p)) throw std::invalid_argument("cluster parameter is not a special form");
  if (!listChecks(c.params).sorted) throw std::invalid_argument("cluster parameters are not sorted and pairwise independent");
}

GNormal groupElement(const Cluster& c, std::uint32_t mask) {
  return normalize(product(c.params, mask) * toSWord(c.basepoint));
}

CosetVertex clusterVertex(const Cluster& c, std::uint32_t mask) { return groupElement(c, mask).y; }

std::vector<CosetVertex> clusterVertices(const Cluster& c) {
  // The pipeline asks for the same few clusters many times over.
  thread_local std::map<std::pair<GNormal, std::vector<SpecialForm>>, std::vector<CosetVertex>> memo;
  auto key = std::make_pair(c.basepoint, c.params);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  if (memo.size() > 4096) memo.clear();
  std::vector<CosetVertex> out;
  for (std::uint32_t m = 0;; ++m) {
    out.push_back(clusterVertex(c, m));
    if (m == fullMask(c.dim())) break;
  }
  memo.emplace(std::move(key), out);
  return out;
}

std::set<CosetVertex> vertexSet(const Cluster& c) {
  auto v = clusterVertices(c);
  return {v.begin(), v.end()};
}

bool sameCluster(const Cluster& a, const Cluster& b) { return vertexSet(a) == vertexSet(b); }

ClusterGraph buildCluster(const Cluster& c) {
  validateCluster(c);
  ClusterGraph g;
  g.vertices = clusterVertices(c);
  if (std::set<CosetVertex>(g.vertices.begin(), g.vertices.end()).size() != g.vertices.size())
    throw ConsistencyError("cluster vertices are not distinct");
  for (std::uint32_t a = 0; a < g.vertices.size(); ++a)
    for (std::uint32_t b = a + 1; b < g.vertices.size(); ++b)
      if (isOneCell(g.vertices[a], g.vertices[b])) g.edges.emplace_back(a, b);
  return g;
}

Cluster flipAt(const Cluster& c, std::uint32_t mask) {
  Cluster out{groupElement(c, mask), c.params};
  for (std::size_t i = 0; i < c.dim(); ++i)
    if (mask >> i & 1u) out.params[i] = inverseForm(c.params[i]);
  return out;
}

Cluster rebase(const Cluster& c, const GNormal& tau) {
  const GNormal f = normalize(toSWord(c.basepoint) * toSWord(tau).inverse());
  if (!f.y.empty()) throw std::invalid_argument("rebase target is not in the base coset");
  Cluster out{normalize(toSWord(tau)), {}};
  for (const auto& p : c.params) out.params.push_back(minimalForm(actF(p, f.f)));
  return out;
}

bool isProper(const Cluster& c) {
  for (std::size_t i = 0; i + 1 < c.dim(); ++i)
    if (consecutivePair(c.params[i], c.params[i + 1]) && !alternatingPair(c.params[i], c.params[i + 1])) return false;
  return true;
}

bool isBalanced(const Cluster& c) {
  for (std::size_t i = 0; i + 1 < c.dim(); ++i)
    if (!alternatingPair(c.params[i], c.params[i + 1])) return false;
  return true;
}

std::pair<Cluster, Cluster> balancedParametrizations(const Cluster& c) {
  std::uint32_t mask = 0;
  int lastSign = 0;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const auto& p = c.params[i];
    bool flip = i == 0 ? specialType(p) != 1 : p.front().exp != -lastSign;
    if (flip) mask |= 1u << i;
    lastSign = flip ? -p.back().exp : p.back().exp;
  }
  Cluster first = flipAt(c, mask);
  Cluster second = flipAt(first, fullMask(c.dim()));
  return {first, second};
}

std::vector<std::vector<std::size_t>> aDelta(const Cluster& c) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    out.push_back({i});
    for (std::size_t j = i + 1; j < c.dim() && consecutivePair(c.params[j - 1], c.params[j]); ++j) {
      std::vector<std::size_t> block;
      for (std::size_t k = i; k <= j; ++k) block.push_back(k);
      out.push_back(block);
    }
  }
  return out;
}

std::optional<Cluster> intersectClusters(const Cluster& a, const Cluster& b) {
  validateCluster(a);
  validateCluster(b);
  const auto va = clusterVertices(a);
  const auto vb = clusterVertices(b);
  std::optional<std::pair<std::uint32_t, std::uint32_t>> common;
  for (std::uint32_t i = 0; i < va.size() && !common; ++i)
    for (std::uint32_t j = 0; j < vb.size() && !common; ++j)
      if (va[i] == vb[j]) common = {{i, j}};
  if (!common) return std::nullopt;

  // Both based at the same group element.
  const Cluster d1 = flipAt(a, common->first);
  const Cluster d2 = rebase(flipAt(b, common->second), d1.basepoint);

  // Edges at the base vertex shared by both: intervals with equivalent products.
  std::set<SpecialForm> keys2;
  for (auto [i, j] : specialIntervals(d2.params)) keys2.insert(minimalForm(concatRange(d2.params, i, j)));
  std::vector<std::pair<std::size_t, std::size_t>> shared;
  for (auto [i, j] : specialIntervals(d1.params))
    if (keys2.count(minimalForm(concatRange(d1.params, i, j)))) shared.emplace_back(i, j);

  // Minimal shared blocks; they are pairwise disjoint.
  std::vector<std::pair<std::size_t, std::size_t>> minimal;
  for (auto c : shared) {
    bool isMin = true;
    for (auto d : shared)
      if (d != c && c.first <= d.first && d.second <= c.second) isMin = false;
    if (isMin) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end());
  for (std::size_t k = 0; k + 1 < minimal.size(); ++k)
    if (minimal[k].second >= minimal[k + 1].first) throw ConsistencyError("minimal shared blocks overlap");

  Cluster out{d1.basepoint, {}};
  for (auto [i, j] : minimal) out.params.push_back(concatRange(d1.params, i, j));
  return out;
}

std::string toString(SubclusterType t) {
  switch (t) {
    case SubclusterType::Face: return "face";
    case SubclusterType::Diagonal: return "diagonal";
    case SubclusterType::DiagonalOfFace: return "diagonal-of-face";
  }
  return "?";
}

SubclusterType subclusterType(const Cluster& sub, const Cluster& parent) {
  validateCluster(sub);
  validateCluster(parent);
  const auto vs = vertexSet(sub);
  const auto vp = vertexSet(parent);
  if (!std::includes(vp.begin(), vp.end(), vs.begin(), vs.end())) throw std::invalid_argument("not a subcluster");
  auto m = maskOf(parent, vertexOf(sub.basepoint));
  if (!m) throw ConsistencyError("base vertex of subcluster missing from parent");
  const Cluster d = rebase(flipAt(parent, *m), sub.basepoint);

  std::map<SpecialForm, std::pair<std::size_t, std::size_t>> blocks;
  for (auto [i, j] : specialIntervals(d.params)) blocks[minimalForm(concatRange(d.params, i, j))] = {i, j};
  bool singletons = true;
  std::size_t covered = 0;
  for (const auto& p : sub.params) {
    auto it = blocks.find(minimalForm(p));
    if (it == blocks.end()) throw std::invalid_argument("subcluster parameter is not a block of the parent");
    auto [i, j] = it->second;
    if (i != j) singletons = false;
    covered += j - i + 1;
  }
  if (singletons) return SubclusterType::Face;
  if (covered == parent.dim()) return SubclusterType::Diagonal;
  return SubclusterType::DiagonalOfFace;
}

Cluster actG(const Cluster& c, const GNormal& g) {
  return Cluster{normalize(toSWord(c.basepoint) * toSWord(g)), c.params};
}

OrbitInvariant clusterOrbitInvariant(const Cluster& c) {
  validateCluster(c);
  OrbitInvariant inv;
  if (c.dim() == 0) return inv;
  const Cluster b = balancedParametrizations(c).first;
  inv.type = specialType(b.params.front());
  for (const auto& p : b.params) inv.parity.push_back(specialParity(p));
  inv.consecutive = consecutivePattern(b.params);
  return inv;
}

std::optional<GNormal> findClusterMap(const Cluster& a, const Cluster& b) {
  if (a.dim() != b.dim() || clusterOrbitInvariant(a) != clusterOrbitInvariant(b)) return std::nullopt;
  if (a.dim() == 0) return normalize(toSWord(a.basepoint).inverse() * toSWord(b.basepoint));
  const Cluster ba = balancedParametrizations(a).first;
  const Cluster bb = balancedParametrizations(b).first;
  auto f = findCarrier(ba.params, bb.params);
  if (!f) return std::nullopt;
  return normalize(toSWord(ba.basepoint).inverse() * SWord::fromTreePair(*f) * toSWord(bb.basepoint));
}

// ---- filled clusters ----

std::vector<std::size_t> CellComplexPiece::fVector() const {
  std::vector<std::size_t> f(param.dim() + 1, 0);
  for (const auto& c : cells) ++f[static_cast<std::size_t>(c.dim)];
  return f;
}

long CellComplexPiece::euler() const {
  long e = 0;
  for (const auto& c : cells) e += c.dim % 2 == 0 ? 1 : -1;
  return e;
}

bool CellComplexPiece::incidenceConsistent() const {
  for (const auto& c : cells) {
    std::map<std::size_t, int> count;
    for (auto f : c.facets)
      for (auto g : cells[f].facets) ++count[g];
    for (auto [g, k] : count)
      if (k != 2) return false;
    for (auto f : c.facets)
      if (cells[f].dim != c.dim - 1) return false;
  }
  return true;
}

namespace {

bool isFaceOf(const Cell& t, const Cell& s) {
  for (std::size_t i = 0; i < s.pos.size(); ++i)
    if (t.pos[i] != s.pos[i] && s.pos[i] != 2) return false;
  for (std::size_t k = 0; k < s.cmp.size(); ++k)
    if (t.cmp[k] != s.cmp[k] && t.cmp[k] != 0) return false;
  return true;
}

// Nonempty iff some assignment of levels 1..n to the free coordinates
// satisfies every comparison.
bool feasible(const std::vector<std::int8_t>& pos, const std::vector<std::int8_t>& cmp, const std::vector<std::size_t>& cmpIndex) {
  const std::size_t n = pos.size();
  std::vector<std::size_t> freeIdx;
  for (std::size_t i = 0; i < n; ++i)
    if (pos[i] == 2) freeIdx.push_back(i);
  std::vector<int> val(n);
  const int top = static_cast<int>(n) + 1;
  for (std::size_t i = 0; i < n; ++i) val[i] = pos[i] == 1 ? top : 0;
  std::function<bool(std::size_t)> go = [&](std::size_t k) {
    if (k == freeIdx.size()) {
      for (std::size_t c = 0; c < cmp.size(); ++c) {
        const int a = val[cmpIndex[c]], b = val[cmpIndex[c] + 1];
        const int r = a < b ? -1 : (a == b ? 0 : 1);
        if (r != cmp[c]) return false;
      }
      return true;
    }
    for (int l = 1; l < top; ++l) {
      val[freeIdx[k]] = l;
      if (go(k + 1)) return true;
    }
    return false;
  };
  return go(0);
}

int cellDim(const std::vector<std::int8_t>& pos, const std::vector<std::int8_t>& cmp, const std::vector<std::size_t>& cmpIndex) {
  std::vector<std::size_t> parent(pos.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t c = 0; c < cmp.size(); ++c) {
    const std::size_t i = cmpIndex[c];
    if (cmp[c] == 0 && pos[i] == 2 && pos[i + 1] == 2) parent[find(i)] = find(i + 1);
  }
  int d = 0;
  for (std::size_t i = 0; i < pos.size(); ++i)
    if (pos[i] == 2 && find(i) == i) ++d;
  return d;
}

}  // namespace

CellComplexPiece enumerateCells(const Cluster& c, std::size_t maxDim) {
  validateCluster(c);
  if (c.dim() > maxDim) throw std::length_error("cluster dimension exceeds the enumeration bound");
  CellComplexPiece piece;
  piece.param = isProper(c) ? c : balancedParametrizations(c).first;
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (consecutivePair(piece.param.params[i], piece.param.params[i + 1])) piece.cmpIndex.push_back(i);
  piece.cornerVertex = clusterVertices(piece.param);

  const std::size_t m = piece.cmpIndex.size();
  std::size_t total = 1;
  for (std::size_t k = 0; k < n + m; ++k) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::int8_t> pos(n), cmp(m);
    std::size_t x = code;
    for (std::size_t i = 0; i < n; ++i, x /= 3) pos[i] = static_cast<std::int8_t>(x % 3);
    for (std::size_t k = 0; k < m; ++k, x /= 3) cmp[k] = static_cast<std::int8_t>(static_cast<int>(x % 3) - 1);
    if (!feasible(pos, cmp, piece.cmpIndex)) continue;
    piece.cells.push_back(Cell{pos, cmp, cellDim(pos, cmp, piece.cmpIndex), {}, {}});
  }
  for (auto& s : piece.cells) {
    for (std::size_t t = 0; t < piece.cells.size(); ++t) {
      const Cell& tc = piece.cells[t];
      if (!isFaceOf(tc, s)) continue;
      if (tc.dim == s.dim - 1) s.facets.push_back(t);
      if (tc.dim == 0) {
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (tc.pos[i] == 1) mask |= 1u << i;
        s.corners.push_back(mask);
      }
    }
    std::sort(s.corners.begin(), s.corners.end());
  }
  return piece;
}

// ---- links ----

LinkCheck linkFlagCheck(const std::vector<Cluster>& piece, const CosetVertex& v) {
  for (const auto& c : piece) validateCluster(c);
  for (std::size_t i = 0; i < piece.size(); ++i)
    for (std::size_t j = i + 1; j < piece.size(); ++j) {
      auto meet = intersectClusters(piece[i], piece[j]);
      if (!meet) continue;
      if (subclusterType(*meet, piece[i]) != SubclusterType::Face || subclusterType(*meet, piece[j]) != SubclusterType::Face)
        throw std::invalid_argument("clusters do not meet in a common face");
    }

  // Link vertices are the far ends of cube edges at v; each cluster through v
  // contributes the simplex of its edge directions.
  std::vector<std::set<CosetVertex>> simplices;
  for (const auto& c : piece) {
    const auto vs = clusterVertices(c);
    auto it = std::find(vs.begin(), vs.end(), v);
    if (it == vs.end()) continue;
    const auto m = static_cast<std::uint32_t>(it - vs.begin());
    std::set<CosetVertex> s;
    for (std::size_t i = 0; i < c.dim(); ++i) s.insert(vs[m ^ (1u << i)]);
    simplices.push_back(s);
  }
  std::vector<CosetVertex> verts;
  for (const auto& s : simplices) verts.insert(verts.end(), s.begin(), s.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  auto inSimplex = [&](const std::vector<CosetVertex>& q) {
    for (const auto& s : simplices)
      if (std::all_of(q.begin(), q.end(), [&](const CosetVertex& x) { return s.count(x) > 0; })) return true;
    return false;
  };
  const std::size_t k = verts.size();
  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) adj[a][b] = adj[b][a] = inSimplex({verts[a], verts[b]});

  // Smallest clique not spanned by a simplex; cliques grow by increasing index.
  LinkCheck out;
  std::vector<std::size_t> clique;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    for (std::size_t x = from; x < k; ++x) {
      if (!std::all_of(clique.begin(), clique.end(), [&](std::size_t y) { return adj[x][y]; })) continue;
      clique.push_back(x);
      std::vector<CosetVertex> q;
      for (auto y : clique) q.push_back(verts[y]);
      if (!inSimplex(q)) {
        if (out.flag || q.size() < out.witness.size()) {
          out.flag = false;
          out.witness = q;
        }
      } else {
        grow(x + 1);
      }
      clique.pop_back();
    }
  };
  grow(0);
  return out;
}

// ---- loops ----

std::string toString(HomotopyKind k) {
  switch (k) {
    case HomotopyKind::diagonal: return "diagonal";
    case HomotopyKind::expand: return "expand";
    case HomotopyKind::contract: return "contract";
    case HomotopyKind::commute: return "commute";
    case HomotopyKind::cancel: return "cancel";
  }
  return "?";
}

namespace {

SpecialForm single(const ULetter& u) { return SpecialForm{{u.sub, u.sign}}; }

// Vertices along the engine word, from the end of the word back to its start.
std::vector<CosetVertex> enginePath(const Engine& e) {
  std::vector<CosetVertex> out{CosetVertex{}};
  const auto& t = e.tokens();
  for (std::size_t i = t.size(); i-- > 0;)
    if (std::holds_alternative<ULetter>(t[i])) out.push_back(vertexOf(e.suffixWord(i)));
  return out;
}

}  // namespace

LoopCertificate contractLoop(const std::vector<CosetVertex>& loop, bool verifyPaths) {
  if (loop.size() < 1 || !loop.front().empty() || !loop.back().empty())
    throw std::invalid_argument("loop must start and end at the base vertex F");
  for (std::size_t i = 0; i + 1 < loop.size(); ++i)
    if (!isOneCell(loop[i], loop[i + 1])) throw std::invalid_argument("consecutive loop vertices are not joined by a 1-cell");

  LoopCertificate cert;
  cert.loop = loop;
  std::vector<CosetVertex> path = loop;

  // Edge i goes from F·g_i to F·sigma_i·g_i.
  SWord g;
  std::vector<SpecialForm> sigmas;
  std::size_t offset = 0;
  for (std::size_t i = 0; i + 1 < loop.size(); ++i) {
    const GNormal q = normalize(toSWord(loop[i + 1]) * g.inverse());
    const SpecialForm sigma = q.y;
    if (!isSpecial(sigma)) throw ConsistencyError("edge quotient is not special");
    if (sigma.size() > 1) {
      HomotopyStep st{HomotopyKind::diagonal, offset, 2, {}, Cluster{normalize(g), {}}};
      for (const auto& l : sigma) st.witness.params.push_back(SpecialForm{l});
      SWord w = g;
      st.replacement.push_back(vertexOf(w));
      for (std::size_t k = sigma.size(); k-- > 0;) {
        w = SWord::y(sigma[k].sub, sigma[k].exp) * w;
        st.replacement.push_back(vertexOf(w));
      }
      path.erase(path.begin() + static_cast<std::ptrdiff_t>(offset), path.begin() + static_cast<std::ptrdiff_t>(offset) + 2);
      path.insert(path.begin() + static_cast<std::ptrdiff_t>(offset), st.replacement.begin(), st.replacement.end());
      cert.steps.push_back(std::move(st));
    }
    offset += sigma.size();
    g = toSWord(sigma) * g;
    sigmas.push_back(sigma);
  }
  if (!normalize(g).y.empty()) throw ConsistencyError("loop word is not in F");

  Engine e;
  for (std::size_t i = sigmas.size(); i-- > 0;)
    for (const auto& l : sigmas[i]) e.appendY(l.sub, l.exp);
  if (enginePath(e) != path) throw ConsistencyError("engine word does not trace the loop");

  // Number of letters strictly after token i, which is the path index of the
  // vertex just before that letter is traversed.
  auto lettersAfter = [](const Engine& en, std::size_t i) {
    std::size_t k = 0;
    for (std::size_t j = i + 1; j < en.tokens().size(); ++j)
      if (std::holds_alternative<ULetter>(en.tokens()[j])) ++k;
    return k;
  };
  auto nextLetter = [](const Engine& en, std::size_t i) {
    ++i;
    while (i < en.tokens().size() && !std::holds_alternative<ULetter>(en.tokens()[i])) ++i;
    return i;
  };

  std::vector<CosetVertex> tracked = path;
  std::size_t checked = cert.steps.size();
  auto applyPending = [&]() {
    for (; checked < cert.steps.size(); ++checked) {
      const auto& st = cert.steps[checked];
      tracked.erase(tracked.begin() + static_cast<std::ptrdiff_t>(st.start),
                    tracked.begin() + static_cast<std::ptrdiff_t>(st.start + st.oldLen));
      tracked.insert(tracked.begin() + static_cast<std::ptrdiff_t>(st.start), st.replacement.begin(), st.replacement.end());
    }
  };

  e.setObserver([&](const Engine& en, const Move& mv) {
    if (verifyPaths) {
      applyPending();
      if (tracked != enginePath(en)) throw ConsistencyError("certificate path diverged from the engine");
    }
    const std::size_t i = mv.pos;
    HomotopyStep st{HomotopyKind::cancel, lettersAfter(en, i), 0, {}, Cluster{}};
    switch (mv.kind) {
      case MoveKind::expand: {
        const ULetter u = en.letter(i);
        const SWord rest = en.suffixWord(i + 1);
        st.kind = HomotopyKind::expand;
        st.oldLen = 2;
        st.witness.basepoint = normalize(rest);
        SWord w = rest;
        st.replacement.push_back(vertexOf(w));
        auto pieces = expansionPieces(u.sub, u.sign);
        for (const auto& p : pieces) st.witness.params.push_back(single(p));
        for (std::size_t k = 3; k-- > 0;) {
          w = SWord::y(pieces[k].sub, pieces[k].sign) * w;
          st.replacement.push_back(vertexOf(w));
        }
        break;
      }
      case MoveKind::contract: {
        const std::size_t b = nextLetter(en, i), c = nextLetter(en, b);
        const SWord rest = en.suffixWord(c + 1);
        st.kind = HomotopyKind::contract;
        st.start = lettersAfter(en, c);
        st.oldLen = 4;
        st.witness.basepoint = normalize(rest);
        st.witness.params = {single(en.letter(i)), single(en.letter(b)), single(en.letter(c))};
        st.replacement = {vertexOf(rest), vertexOf(en.suffixWord(i))};
        break;
      }
      case MoveKind::commute: {
        const std::size_t b = nextLetter(en, i);
        const SWord rest = en.suffixWord(b + 1);
        st.kind = HomotopyKind::commute;
        st.start = lettersAfter(en, b);
        st.oldLen = 3;
        st.witness.basepoint = normalize(rest);
        st.witness.params = {single(en.letter(i)), single(en.letter(b))};
        if (lexLess(st.witness.params[1].front().sub, st.witness.params[0].front().sub))
          std::swap(st.witness.params[0], st.witness.params[1]);
        const ULetter a = en.letter(i);
        st.replacement = {vertexOf(rest), vertexOf(SWord::y(a.sub, a.sign) * rest), vertexOf(en.suffixWord(i))};
        break;
      }
      case MoveKind::cancel: {
        const std::size_t b = nextLetter(en, i);
        const SWord rest = en.suffixWord(b + 1);
        st.kind = HomotopyKind::cancel;
        st.start = lettersAfter(en, b);
        st.oldLen = 3;
        st.witness.basepoint = normalize(rest);
        st.witness.params = {single(en.letter(b))};
        st.replacement = {vertexOf(rest)};
        break;
      }
    }
    cert.steps.push_back(std::move(st));
  });

  e.normalizeAll();
  if (!e.tokens().empty() || !e.yWord().empty()) throw ConsistencyError("loop word did not reduce to F");
  if (verifyPaths) {
    applyPending();
    if (tracked != enginePath(e)) throw ConsistencyError("certificate path diverged from the engine");
  }
  return cert;
}

CertificateCheck checkCertificate(const LoopCertificate& cert) {
  CertificateCheck r;
  auto fail = [&](std::size_t k, const std::string& why) {
    r.ok = false;
    r.failedStep = k;
    r.reason = why;
    return r;
  };
  std::vector<CosetVertex> path = cert.loop;
  if (path.empty() || !path.front().empty() || !path.back().empty()) return fail(0, "loop is not based at F");
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!isOneCell(path[i], path[i + 1])) return fail(0, "loop has a non-edge");
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const auto& st = cert.steps[k];
    if (st.oldLen == 0 || st.start + st.oldLen > path.size()) return fail(k, "segment out of range");
    if (st.replacement.empty()) return fail(k, "empty replacement");
    if (st.replacement.front() != path[st.start] || st.replacement.back() != path[st.start + st.oldLen - 1])
      return fail(k, "replacement does not keep the segment endpoints");
    try {
      validateCluster(st.witness);
    } catch (const std::invalid_argument&) {
      return fail(k, "witness is not a cluster");
    }
    if (st.kind != HomotopyKind::diagonal && st.witness.dim() > 3) return fail(k, "witness cluster too large");
    const auto vs = vertexSet(st.witness);
    for (std::size_t i = st.start; i < st.start + st.oldLen; ++i)
      if (!vs.count(path[i])) return fail(k, "old segment leaves the witness cluster");
    for (const auto& v : st.replacement)
      if (!vs.count(v)) return fail(k, "replacement leaves the witness cluster");
    for (std::size_t i = 0; i + 1 < st.replacement.size(); ++i)
      if (!isOneCell(st.replacement[i], st.replacement[i + 1])) return fail(k, "replacement has a non-edge");
    path.erase(path.begin() + static_cast<std::ptrdiff_t>(st.start), path.begin() + static_cast<std::ptrdiff_t>(st.start + st.oldLen));
    path.insert(path.begin() + static_cast<std::ptrdiff_t>(st.start), st.replacement.begin(), st.replacement.end());
  }
  if (path.size() != 1 || !path.front().empty()) return fail(cert.steps.size(), "final path is not the trivial loop");
  return r;
}

}  // namespace lm
