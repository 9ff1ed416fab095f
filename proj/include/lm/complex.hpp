#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lm/rewrite.hpp"
#include "lm/special.hpp"
#include "lm/word.hpp"

namespace lm {

// A right coset F·g, named by the Y-part of the normal form of g.
using CosetVertex = YWord;

CosetVertex vertexOf(const SWord& w);
CosetVertex vertexOf(const GNormal& g);
bool isOneCell(const CosetVertex& u, const CosetVertex& v);

// Vertices are F·(prod_{i in A} params_i)·basepoint for subsets A, indexed by
// bitmask (bit i set when params[i] is used).
struct Cluster {
  GNormal basepoint;
  std::vector<SpecialForm> params;
  std::size_t dim() const { return params.size(); }
  bool operator==(const Cluster&) const = default;
};

// Throws std::invalid_argument unless the params are special, sorted and
// pairwise independent.
void validateCluster(const Cluster& c);

GNormal groupElement(const Cluster& c, std::uint32_t mask);
CosetVertex clusterVertex(const Cluster& c, std::uint32_t mask);
std::vector<CosetVertex> clusterVertices(const Cluster& c);
std::set<CosetVertex> vertexSet(const Cluster& c);
// Clusters are equal as subgraphs of X iff their vertex sets agree.
bool sameCluster(const Cluster& a, const Cluster& b);

struct ClusterGraph {
  std::vector<CosetVertex> vertices;  // by mask
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};
ClusterGraph buildCluster(const Cluster& c);

// Same cluster, based at the corner `mask` with those params inverted.
Cluster flipAt(const Cluster& c, std::uint32_t mask);
// Same cluster based at tau, which must lie in the coset of the basepoint.
Cluster rebase(const Cluster& c, const GNormal& tau);

bool isProper(const Cluster& c);
bool isBalanced(const Cluster& c);
// First: the type 1 basepoint. Second: the opposite corner.
std::pair<Cluster, Cluster> balancedParametrizations(const Cluster& c);

// Intervals of parameter indices (0-based) whose parameters are consecutive;
// singletons included.
std::vector<std::vector<std::size_t>> aDelta(const Cluster& c);

std::optional<Cluster> intersectClusters(const Cluster& a, const Cluster& b);

enum class SubclusterType { Face, Diagonal, DiagonalOfFace };
std::string toString(SubclusterType t);
SubclusterType subclusterType(const Cluster& sub, const Cluster& parent);

// G acts on the right through the basepoint.
Cluster actG(const Cluster& c, const GNormal& g);

struct OrbitInvariant {
  int type = 1;
  std::vector<int> parity;
  std::vector<bool> consecutive;
  auto operator<=>(const OrbitInvariant&) const = default;
};
OrbitInvariant clusterOrbitInvariant(const Cluster& c);
// g with actG(a, g) equal to b, when the invariants agree.
std::optional<GNormal> findClusterMap(const Cluster& a, const Cluster& b);

// ---- filled clusters ----

// A cell of the filled cube: each coordinate is 0, 1 or free (2); each
// comparison between neighbouring coordinates i, i+1 with {i,i+1} in A_Delta
// is -1 (<), 0 (=) or +1 (>).
struct Cell {
  std::vector<std::int8_t> pos;
  std::vector<std::int8_t> cmp;
  int dim = 0;
  std::vector<std::size_t> facets;
  std::vector<std::uint32_t> corners;
};

struct CellComplexPiece {
  Cluster param;  // the proper parametrization used for coordinates
  std::vector<std::size_t> cmpIndex;  // comparison k compares z_i and z_{i+1}, i = cmpIndex[k]
  std::vector<Cell> cells;
  std::vector<CosetVertex> cornerVertex;  // by mask

  std::vector<std::size_t> fVector() const;
  long euler() const;
  std::size_t totalFaces() const { return cells.size(); }
  // Every codimension 2 face of a cell lies in exactly two of its facets.
  bool incidenceConsistent() const;
};

CellComplexPiece enumerateCells(const Cluster& c, std::size_t maxDim = 4);

// ---- links ----

struct LinkCheck {
  bool flag = true;
  std::vector<CosetVertex> witness;  // far ends of edges at v spanning an empty simplex
};

// The clusters must meet pairwise in common faces.
LinkCheck linkFlagCheck(const std::vector<Cluster>& piece, const CosetVertex& v);

// ---- loops ----

enum class HomotopyKind { diagonal, expand, contract, commute, cancel };
std::string toString(HomotopyKind k);

// Replace path[start, start+oldLen) by `replacement`, inside the witness cluster.
struct HomotopyStep {
  HomotopyKind kind;
  std::size_t start;
  std::size_t oldLen;
  std::vector<CosetVertex> replacement;
  Cluster witness;
};

struct LoopCertificate {
  std::vector<CosetVertex> loop;
  std::vector<HomotopyStep> steps;
};

// loop[0] and loop.back() are the base vertex F; neighbours are joined by
// 1-cells. With verifyPaths the full path is recomputed after each move.
LoopCertificate contractLoop(const std::vector<CosetVertex>& loop, bool verifyPaths = false);

struct CertificateCheck {
  bool ok = true;
  std::size_t failedStep = 0;
  std::string reason;
};
CertificateCheck checkCertificate(const LoopCertificate& cert);

}  // namespace lm
