#include "lm/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "lm/calculus.hpp"
#include "lm/rewrite.hpp"

namespace lm {

namespace {

// a·b^-1 for vertices read as group elements.
GNormal quotient(const SWord& a, const SWord& b) { return normalize(a * b.inverse()); }
GNormal quotient(const CosetVertex& a, const CosetVertex& b) { return quotient(toSWord(a), toSWord(b)); }

bool clean(const ConeSet& piece, const ConeSet& s) { return piece.subsetOf(s) || piece.nullIntersect(s); }

std::vector<SpecialForm> lettersOf(const SpecialForm& s) {
  std::vector<SpecialForm> out;
  for (const auto& l : s) out.push_back({l});
  return out;
}

SpecialForm expandLetter(const YLetter& l) {
  SpecialForm out;
  for (const auto& p : expansionPieces(l.sub, l.exp)) out.push_back({p.sub, p.sign});
  return out;
}

// Disjoint-set forest over indices.
struct Dsu {
  std::vector<std::size_t> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(std::size_t a, std::size_t b) { p[find(a)] = find(b); }
};

std::vector<OneCell> cellsAt(const CellSystem& s, const CosetVertex& u) {
  std::vector<OneCell> out;
  for (const auto& e : s.U)
    if (incident(e, u)) out.push_back(e);
  return out;
}

}  // namespace

OneCell makeCell(const CosetVertex& u, const CosetVertex& v) {
  if (u == v) throw std::invalid_argument("a 1-cell needs two distinct vertices");
  if (!isOneCell(u, v)) throw std::invalid_argument("vertices are not joined by a 1-cell");
  return u < v ? OneCell{u, v} : OneCell{v, u};
}

bool incident(const OneCell& e, const CosetVertex& u) { return e.a == u || e.b == u; }

CosetVertex otherEnd(const OneCell& e, const CosetVertex& u) {
  if (e.a == u) return e.b;
  if (e.b == u) return e.a;
  throw std::invalid_argument("vertex is not an endpoint of the cell");
}

SpecialForm paramAt(const OneCell& e, const CosetVertex& u) {
  const GNormal q = quotient(otherEnd(e, u), u);
  if (!isSpecial(q.y)) throw ConsistencyError("cell parameter is not a special form");
  return q.y;
}

OneCell cellOf(const ParamCell& p) {
  if (!isSpecial(p.lambda)) throw std::invalid_argument("cell parameter is not a special form");
  return makeCell(vertexOf(p.tau), vertexOf(toSWord(p.lambda) * toSWord(p.tau)));
}

bool nullIntersect(const ConeSet& a, const GNormal& g) {
  for (const auto& c : a.cones()) {
    if (!g.f.pointwiseFixesCone(c)) return false;
    for (const auto& l : g.y)
      if (!incompatible(l.sub, c)) return false;
  }
  return true;
}

std::optional<OneCell> transportCell(const OneCell& e, const CosetVertex& from, const CosetVertex& to) {
  const SpecialForm lambda = paramAt(e, from);
  const ConeSet supp = suppY(lambda);
  const GNormal g = quotient(to, from);  // f·nu
  if (!supp.nullIntersect(suppY(g.y))) return std::nullopt;
  const SWord tau3 = SWord::fromTreePair(g.f.inverse()) * toSWord(to);
  if (!nullIntersect(supp, quotient(tau3, toSWord(from)))) throw ConsistencyError("transported basepoint moves the parameter support");
  return makeCell(to, vertexOf(toSWord(lambda) * tau3));
}

std::vector<OneCell> transportsTo(const OneCell& e, const CosetVertex& to) {
  std::vector<OneCell> out;
  for (const auto& from : {e.a, e.b})
    if (auto t = transportCell(e, from, to); t && std::find(out.begin(), out.end(), *t) == out.end()) out.push_back(*t);
  if (out.size() > 1) throw ConsistencyError("two distinct equivalent cells at one vertex");
  return out;
}

std::optional<AssociatedPairs> equivalentCells(const OneCell& e1, const OneCell& e2) {
  std::optional<AssociatedPairs> found;
  for (const auto& w : {e2.a, e2.b}) {
    auto t = transportCell(e1, e1.a, w);
    if (!t || *t != e2) continue;
    if (found) throw ConsistencyError("associated pairs are not unique");
    found = AssociatedPairs{{e1.a, w}, {e1.b, otherEnd(e2, w)}};
  }
  return found;
}

std::optional<AssociatedPairs> equivalentCells(const ParamCell& e1, const ParamCell& e2) {
  return equivalentCells(cellOf(e1), cellOf(e2));
}

CellVertexCheck disparateCellVertex(const OneCell& e, const CosetVertex& u) {
  bool contained = true;
  for (const auto& side : {e.a, e.b})
    if (!suppY(paramAt(e, side)).subsetOf(suppY(quotient(u, side).y))) contained = false;
  CellVertexCheck out;
  if (contained) {
    out.relation = CellVertexRelation::disparate;
    return out;
  }
  for (const auto& side : {e.a, e.b}) {
    if (auto t = transportCell(e, side, u)) {
      out.relation = CellVertexRelation::equivalentCellAt;
      out.cell = t;
      out.pairedWith = side;
      return out;
    }
  }
  return out;
}

bool disparatePair(const OneCell& e1, const OneCell& e2, const CosetVertex& u) {
  if (!incident(e1, u) || !incident(e2, u)) throw std::invalid_argument("cells must share the vertex");
  if (e1 == e2) return false;
  return cancellationFree(paramAt(e1, u), paramAt(e2, u));
}

bool orthogonal(const OneCell& e1, const OneCell& e2, const CosetVertex& u) {
  if (!incident(e1, u) || !incident(e2, u)) throw std::invalid_argument("cells must share the vertex");
  return suppY(paramAt(e1, u)).nullIntersect(suppY(paramAt(e2, u)));
}

// ---- expansions ----

void validateDecomposition(const SpecialForm& lambda, const std::vector<SpecialForm>& decomposition) {
  if (decomposition.empty()) throw std::invalid_argument("empty decomposition");
  for (const auto& p : decomposition)
    if (!isSpecial(p)) throw std::invalid_argument("decomposition piece is not a special form");
  if (!listChecks(decomposition).sorted) throw std::invalid_argument("decomposition is not sorted and pairwise independent");
  if (!quotient(toSWord(concat(decomposition)), toSWord(lambda)).y.empty())
    throw std::invalid_argument("decomposition does not multiply to the parameter");
}

std::vector<OneCell> expandCell(const ParamCell& e, const std::vector<SpecialForm>& decomposition, Side side) {
  validateDecomposition(e.lambda, decomposition);
  const SWord tau = toSWord(e.tau);
  std::vector<OneCell> out;
  if (side == Side::base) {
    const CosetVertex base = vertexOf(e.tau);
    for (const auto& nu : decomposition) out.push_back(makeCell(base, vertexOf(toSWord(nu) * tau)));
    return out;
  }
  const CosetVertex top = vertexOf(toSWord(concat(decomposition)) * tau);
  for (std::size_t k = 0; k < decomposition.size(); ++k) {
    SWord rest;
    for (std::size_t l = 0; l < decomposition.size(); ++l)
      if (l != k) rest.append(toSWord(decomposition[l]));
    out.push_back(makeCell(top, vertexOf(rest * tau)));
  }
  return out;
}

std::vector<OneCell> expandAt(const OneCell& e, const CosetVertex& u, const std::vector<SpecialForm>& decomposition) {
  return expandCell(ParamCell{paramAt(e, u), GNormal{TreePair(), u}}, decomposition, Side::base);
}

std::vector<OneCell> opExpandAt(const OneCell& e, const CosetVertex& u, const std::vector<SpecialForm>& decomposition) {
  return expandCell(ParamCell{paramAt(e, u), GNormal{TreePair(), u}}, decomposition, Side::far);
}

DecoupleResult decouple(const std::vector<OneCell>& cells, const CosetVertex& u, std::size_t maxDepth) {
  for (const auto& e : cells)
    if (!incident(e, u)) throw std::invalid_argument("cell is not incident to the vertex");
  const std::size_t n = cells.size();

  // Refine letters until any two from different cells are equal or cannot
  // meet in a common expansion.
  std::vector<SpecialForm> L;
  for (const auto& e : cells) L.push_back(paramAt(e, u));
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < n && !again; ++i)
      for (std::size_t j = i + 1; j < n && !again; ++j)
        for (std::size_t p = 0; p < L[i].size() && !again; ++p)
          for (std::size_t q = 0; q < L[j].size() && !again; ++q) {
            const auto& a = L[i][p];
            const auto& b = L[j][q];
            if (a == b || !lettersOverlap(a.sub, a.exp, b.sub, b.exp)) continue;
            const bool first = a.sub.size() <= b.sub.size();
            auto& list = first ? L[i] : L[j];
            const std::size_t at = first ? p : q;
            if (list[at].sub.size() >= maxDepth) throw NonConvergence("decoupling exceeded the depth bound");
            list = lm::expandAt(list, at);
            again = true;
          }
  }

  std::vector<std::vector<SpecialForm>> P;
  for (const auto& l : L) P.push_back(lettersOf(l));
  auto compatibleAll = [&](const std::vector<std::vector<SpecialForm>>& Q) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (const auto& a : Q[i])
          for (const auto& b : Q[j])
            if (minimalForm(a) != minimalForm(b) && !cancellationFree(a, b)) return false;
    return true;
  };

  // Coarsen: merge a neighbouring pair wherever it occurs, if that keeps the
  // pieces compatible.
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < n && !again; ++i)
      for (std::size_t k = 0; k + 1 < P[i].size() && !again; ++k) {
        const SpecialForm x = P[i][k], y = P[i][k + 1];
        auto Q = P;
        for (auto& list : Q)
          for (std::size_t m = 0; m + 1 < list.size(); ++m)
            if (list[m] == x && list[m + 1] == y) {
              list[m] = concat({x, y});
              list.erase(list.begin() + static_cast<std::ptrdiff_t>(m) + 1);
            }
        if (compatibleAll(Q)) {
          P = std::move(Q);
          again = true;
        }
      }
  }

  DecoupleResult out;
  out.pieces = P;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& c : expandAt(cells[i], u, P[i])) out.cells.insert(c);
  for (auto a = out.cells.begin(); a != out.cells.end(); ++a)
    for (auto b = std::next(a); b != out.cells.end(); ++b)
      if (!disparatePair(*a, *b, u)) throw ConsistencyError("decoupled cells are still coupled");
  return out;
}

// ---- systems ----

CellSystem skeletonSystem(const std::vector<Cluster>& clusters) {
  CellSystem s;
  for (const auto& c : clusters) {
    const auto g = buildCluster(c);
    s.V.insert(g.vertices.begin(), g.vertices.end());
    for (auto [i, j] : g.edges) s.U.insert(makeCell(g.vertices[i], g.vertices[j]));
  }
  return s;
}

bool isSystem(const CellSystem& s) {
  for (const auto& e : s.U)
    for (const auto& end : {e.a, e.b}) {
      bool ok = false;
      for (const auto& v : s.V)
        if (transportCell(e, end, v)) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
  return true;
}

bool isBalanced(const CellSystem& s) {
  for (const auto& e : s.U) {
    if (!s.V.count(e.a) && !s.V.count(e.b)) continue;
    for (const auto& v : s.V) {
      if (disparateCellVertex(e, v).relation == CellVertexRelation::disparate) continue;
      auto t = transportsTo(e, v);
      if (t.empty() || !s.U.count(t.front())) return false;
    }
  }
  return true;
}

CouplingGraph couplingGraph(const CellSystem& s, const CosetVertex& u) {
  CouplingGraph g;
  g.cells = cellsAt(s, u);
  Dsu d(g.cells.size());
  for (std::size_t i = 0; i < g.cells.size(); ++i)
    for (std::size_t j = i + 1; j < g.cells.size(); ++j)
      if (!disparatePair(g.cells[i], g.cells[j], u)) {
        g.edges.emplace_back(i, j);
        d.join(i, j);
      }
  std::map<std::size_t, std::vector<std::size_t>> comp;
  for (std::size_t i = 0; i < g.cells.size(); ++i) comp[d.find(i)].push_back(i);
  for (auto& [root, members] : comp) g.components.push_back(members);
  std::sort(g.components.begin(), g.components.end());
  return g;
}

bool isFree(const CellSystem& s) {
  if (!isBalanced(s)) return false;
  for (const auto& v : s.V)
    if (!couplingGraph(s, v).edges.empty()) return false;
  return true;
}

bool refines(const CellSystem& before, const CellSystem& after, const std::vector<ExpansionRecord>& records) {
  if (before.V != after.V) return false;
  for (const auto& e : before.U) {
    if (after.U.count(e)) continue;
    bool witnessed = false;
    for (const auto& r : records) {
      if (r.parent != e || !before.V.count(r.at) || !incident(e, r.at) || r.pieces.size() < 2) continue;
      std::vector<OneCell> offs;
      try {
        offs = expandAt(e, r.at, r.pieces);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (std::all_of(offs.begin(), offs.end(), [&](const OneCell& o) { return after.U.count(o) > 0; })) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

namespace {

// Pieces of paramAt(e, u) such that every offspring, seen from either of its
// endpoints, is contained in or disjoint from the percolating support
// relative to each vertex of V.
std::vector<SpecialForm> separatingPieces(const OneCell& e, const CosetVertex& u, const std::set<CosetVertex>& V,
                                          std::size_t maxDepth) {
  const SWord base = toSWord(u);
  std::vector<std::pair<SWord, ConeSet>> near;
  for (const auto& w : V) near.emplace_back(toSWord(w), suppY(quotient(w, u).y));

  auto isClean = [&](const SpecialForm& piece) {
    const ConeSet cones = suppY(piece);
    const SWord top = toSWord(piece) * base;
    for (const auto& [w, s] : near) {
      if (!clean(cones, s)) return false;
      if (!clean(cones, suppY(quotient(w, top).y))) return false;
    }
    return true;
  };

  std::vector<SpecialForm> pieces;
  std::function<void(const YLetter&)> refine = [&](const YLetter& l) {
    if (isClean({l})) {
      pieces.push_back({l});
      return;
    }
    if (l.sub.size() >= maxDepth) throw NonConvergence("separation exceeded the depth bound");
    for (const auto& c : expandLetter(l)) refine(c);
  };
  for (const auto& l : paramAt(e, u)) refine(l);

  std::vector<SpecialForm> merged;
  for (const auto& p : pieces) {
    if (!merged.empty()) {
      SpecialForm m = concat({merged.back(), p});
      if (isClean(m)) {
        merged.back() = m;
        continue;
      }
    }
    merged.push_back(p);
  }
  return merged;
}

std::vector<SpecialForm> piecesAt(const std::vector<OneCell>& cells, const CosetVertex& u) {
  std::vector<SpecialForm> out;
  for (const auto& c : cells) out.push_back(paramAt(c, u));
  std::sort(out.begin(), out.end(), [](const SpecialForm& a, const SpecialForm& b) { return lexLess(a.front().sub, b.front().sub); });
  return out;
}

}  // namespace

SeparationResult separationProcedure(const CellSystem& s, std::size_t maxDepth) {
  SeparationResult out;
  out.afterProcedureA.V = s.V;
  for (const auto& e : s.U) {
    const CosetVertex u = s.V.count(e.a) || !s.V.count(e.b) ? e.a : e.b;
    const CosetVertex v = otherEnd(e, u);
    auto pieces = separatingPieces(e, u, s.V, maxDepth);
    if (pieces.size() < 2) {
      out.afterProcedureA.U.insert(e);
      continue;
    }
    const auto near = expandAt(e, u, pieces);
    const auto far = opExpandAt(e, u, pieces);
    out.afterProcedureA.U.insert(near.begin(), near.end());
    out.afterProcedureA.U.insert(far.begin(), far.end());
    if (s.V.count(u)) out.records.push_back({e, u, pieces});
    if (s.V.count(v)) out.records.push_back({e, v, piecesAt(far, v)});
  }

  out.system = out.afterProcedureA;
  for (const auto& e : out.afterProcedureA.U)
    for (const auto& v : s.V)
      for (const auto& t : transportsTo(e, v)) out.system.U.insert(t);
  return out;
}

DecouplingResult equivariantDecoupling(const CellSystem& s, std::size_t maxDepth) {
  if (!isBalanced(s)) throw std::invalid_argument("equivariant decoupling needs a balanced system");

  std::map<CosetVertex, CouplingGraph> graphs;
  std::map<std::pair<CosetVertex, OneCell>, std::size_t> compOf;
  for (const auto& v : s.V) {
    auto g = couplingGraph(s, v);
    for (std::size_t k = 0; k < g.components.size(); ++k)
      for (auto i : g.components[k]) compOf[{v, g.cells[i]}] = k;
    graphs.emplace(v, std::move(g));
  }

  std::set<std::pair<CosetVertex, std::size_t>> done;
  std::map<OneCell, std::set<OneCell>> replaced;
  DecouplingResult out;
  for (const auto& [v, g] : graphs) {
    for (std::size_t k = 0; k < g.components.size(); ++k) {
      if (g.components[k].size() < 2 || done.count({v, k})) continue;
      std::vector<OneCell> K;
      for (auto i : g.components[k]) K.push_back(g.cells[i]);
      const auto dec = decouple(K, v, maxDepth);

      for (std::size_t i = 0; i < K.size(); ++i) {
        const OneCell& e = K[i];
        const CosetVertex x = otherEnd(e, v);
        const auto nearFamily = expandAt(e, v, dec.pieces[i]);
        const auto farFamily = opExpandAt(e, v, dec.pieces[i]);
        for (const auto& w : s.V) {
          for (const auto& from : {v, x}) {
            auto t = transportCell(e, from, w);
            if (!t || !s.U.count(*t)) continue;
            const auto& family = from == v ? nearFamily : farFamily;
            std::vector<OneCell> moved;
            for (const auto& o : family) {
              auto m = transportCell(o, from, w);
              if (!m) throw ConsistencyError("offspring does not follow its parent's equivalence");
              moved.push_back(*m);
            }
            done.insert({w, compOf.at({w, *t})});
            if (moved.size() < 2) continue;
            replaced[*t].insert(moved.begin(), moved.end());
            out.records.push_back({*t, w, piecesAt(moved, w)});
          }
        }
      }
    }
  }

  out.system.V = s.V;
  for (const auto& e : s.U) {
    auto it = replaced.find(e);
    if (it == replaced.end()) out.system.U.insert(e);
    else out.system.U.insert(it->second.begin(), it->second.end());
  }
  return out;
}

// ---- cubulation ----

bool ClusterCubeComplex::flag() const {
  return std::all_of(flagReport.begin(), flagReport.end(), [](const auto& kv) { return kv.second.flag; });
}

ClusterCubeComplex cubulate(const CellSystem& s) {
  if (!isFree(s)) throw std::invalid_argument("cubulation needs a free system");

  std::vector<Cluster> found;
  std::vector<std::set<CosetVertex>> vsets;
  std::set<std::set<CosetVertex>> seen;
  auto add = [&](Cluster c) {
    auto vs = vertexSet(c);
    if (seen.insert(vs).second) {
      found.push_back(std::move(c));
      vsets.push_back(std::move(vs));
    }
  };
  for (const auto& v : s.V) {
    std::set<SpecialForm> params;
    for (const auto& e : s.U)
      for (const auto& t : transportsTo(e, v)) params.insert(paramAt(t, v));
    std::vector<SpecialForm> P(params.begin(), params.end());
    std::sort(P.begin(), P.end(), [](const SpecialForm& a, const SpecialForm& b) { return lexLess(a.front().sub, b.front().sub); });
    const GNormal base{TreePair(), v};
    if (P.empty()) {
      add(Cluster{base, {}});
      continue;
    }
    // Maximal sets of pairwise independent parameters.
    const std::size_t n = P.size();
    std::vector<std::vector<bool>> ind(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) ind[i][j] = ind[j][i] = independent(P[i], P[j]);
    std::vector<std::size_t> R;
    std::function<void(std::vector<std::size_t>, std::vector<std::size_t>)> bk = [&](std::vector<std::size_t> Pc, std::vector<std::size_t> X) {
      if (Pc.empty() && X.empty()) {
        Cluster c{base, {}};
        for (auto i : R) c.params.push_back(P[i]);
        add(std::move(c));
        return;
      }
      while (!Pc.empty()) {
        const std::size_t x = Pc.front();
        std::vector<std::size_t> P2, X2;
        for (auto y : Pc)
          if (y != x && ind[x][y]) P2.push_back(y);
        for (auto y : X)
          if (ind[x][y]) X2.push_back(y);
        R.push_back(x);
        bk(P2, X2);
        R.pop_back();
        Pc.erase(Pc.begin());
        X.push_back(x);
      }
    };
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    bk(all, {});
  }

  ClusterCubeComplex out;
  std::vector<const std::set<CosetVertex>*> kept;
  for (std::size_t i = 0; i < found.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < found.size() && maximal; ++j)
      if (i != j && vsets[i].size() < vsets[j].size() && std::includes(vsets[j].begin(), vsets[j].end(), vsets[i].begin(), vsets[i].end()))
        maximal = false;
    if (maximal) {
      out.clusters.push_back(found[i]);
      kept.push_back(&vsets[i]);
    }
  }

  for (std::size_t i = 0; i < out.clusters.size(); ++i)
    for (std::size_t j = i + 1; j < out.clusters.size(); ++j) {
      if (std::none_of(kept[i]->begin(), kept[i]->end(), [&](const CosetVertex& v) { return kept[j]->count(v) > 0; })) continue;
      auto meet = intersectClusters(out.clusters[i], out.clusters[j]);
      if (!meet) continue;
      if (subclusterType(*meet, out.clusters[i]) != SubclusterType::Face || subclusterType(*meet, out.clusters[j]) != SubclusterType::Face)
        out.facial = false;
    }
  if (!out.facial) throw ConsistencyError("cubulation produced clusters meeting outside a common face");

  std::map<CosetVertex, std::vector<Cluster>> star;
  for (std::size_t i = 0; i < out.clusters.size(); ++i)
    for (const auto& v : *kept[i]) star[v].push_back(out.clusters[i]);
  for (const auto& [v, piece] : star) out.flagReport[v] = linkFlagCheck(piece, v);
  if (!out.flag()) throw ConsistencyError("cubulation produced a link that is not flag");
  return out;
}

bool coveredBy(const Cluster& c, const ClusterCubeComplex& k) {
  const auto vs = vertexSet(c);
  for (const auto& p : k.clusters) {
    const auto vp = vertexSet(p);
    if (!std::includes(vp.begin(), vp.end(), vs.begin(), vs.end())) continue;
    try {
      subclusterType(c, p);
      return true;
    } catch (const std::invalid_argument&) {
    }
  }
  return false;
}

EnvelopeResult envelope(const std::vector<Cluster>& Y, std::size_t maxIters, std::size_t maxDepth) {
  EnvelopeResult out;
  if (Y.empty()) {
    out.contained = true;
    return out;
  }
  CellSystem sys = skeletonSystem(Y);
  for (std::size_t it = 0; it < maxIters; ++it) {
    EnvelopeRound round;
    const auto sep = separationProcedure(sys, maxDepth);
    round.balancedAfterSeparation = isBalanced(sep.system);
    if (!round.balancedAfterSeparation) {
      out.rounds.push_back(round);
      sys = sep.system;
      continue;
    }
    const auto dec = equivariantDecoupling(sep.system, maxDepth);
    round.freeAfterDecoupling = isFree(dec.system);
    out.rounds.push_back(round);
    if (round.freeAfterDecoupling) {
      out.complex = cubulate(dec.system);
      out.contained = std::all_of(Y.begin(), Y.end(), [&](const Cluster& c) { return coveredBy(c, out.complex); });
      return out;
    }
    sys = dec.system;
  }
  out.status = EnvelopeStatus::nonConvergence;
  return out;
}

}  // namespace lm
