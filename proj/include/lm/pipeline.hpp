#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lm/binseq.hpp"
#include "lm/complex.hpp"
#include "lm/special.hpp"
#include "lm/word.hpp"

namespace lm {

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An unoriented 1-cell of X, endpoints stored in container order (a < b).
struct OneCell {
  CosetVertex a;
  CosetVertex b;
  auto operator<=>(const OneCell&) const = default;
};

// Throws std::invalid_argument unless u != v are joined by a 1-cell.
OneCell makeCell(const CosetVertex& u, const CosetVertex& v);
bool incident(const OneCell& e, const CosetVertex& u);
CosetVertex otherEnd(const OneCell& e, const CosetVertex& u);
// The minimal special form lambda with e = {F(lambda u), F u}.
SpecialForm paramAt(const OneCell& e, const CosetVertex& u);

// The cell {F(lambda tau), F tau}.
struct ParamCell {
  SpecialForm lambda;
  GNormal tau;
};
OneCell cellOf(const ParamCell& p);

// Does g fix every cone of a pointwise?
bool nullIntersect(const ConeSet& a, const GNormal& g);

// The cell at `to` equivalent to e with associated pair (from, to), if the
// support test allows it. `from` must be an endpoint of e.
std::optional<OneCell> transportCell(const OneCell& e, const CosetVertex& from, const CosetVertex& to);
// All distinct transports of e to `to`.
std::vector<OneCell> transportsTo(const OneCell& e, const CosetVertex& to);

struct AssociatedPairs {
  std::pair<CosetVertex, CosetVertex> first;   // (endpoint of e1, endpoint of e2)
  std::pair<CosetVertex, CosetVertex> second;
};
std::optional<AssociatedPairs> equivalentCells(const OneCell& e1, const OneCell& e2);
std::optional<AssociatedPairs> equivalentCells(const ParamCell& e1, const ParamCell& e2);

enum class CellVertexRelation { disparate, equivalentCellAt, neither };
struct CellVertexCheck {
  CellVertexRelation relation = CellVertexRelation::neither;
  std::optional<OneCell> cell;          // the equivalent cell at u
  std::optional<CosetVertex> pairedWith;  // endpoint of e associated with u
};
CellVertexCheck disparateCellVertex(const OneCell& e, const CosetVertex& u);

// Both cells must be incident to u.
bool disparatePair(const OneCell& e1, const OneCell& e2, const CosetVertex& u);
bool orthogonal(const OneCell& e1, const OneCell& e2, const CosetVertex& u);

// ---- expansions ----

enum class Side { base, far };

// Throws std::invalid_argument unless the list is sorted, pairwise
// independent, special, and multiplies to a form equivalent to lambda.
void validateDecomposition(const SpecialForm& lambda, const std::vector<SpecialForm>& decomposition);

// base: the cells {F(nu_i tau), F tau}. far: the facial cells of the same
// cluster at the opposite corner F(lambda tau).
std::vector<OneCell> expandCell(const ParamCell& e, const std::vector<SpecialForm>& decomposition, Side side);
// Offsprings at u for a decomposition of paramAt(e, u).
std::vector<OneCell> expandAt(const OneCell& e, const CosetVertex& u, const std::vector<SpecialForm>& decomposition);
// The matching op-expansion, at the other endpoint of e.
std::vector<OneCell> opExpandAt(const OneCell& e, const CosetVertex& u, const std::vector<SpecialForm>& decomposition);

struct DecoupleResult {
  std::vector<std::vector<SpecialForm>> pieces;  // decomposition of each input at u
  std::set<OneCell> cells;
};
// Expansions at u after which distinct output cells are pairwise disparate.
DecoupleResult decouple(const std::vector<OneCell>& cells, const CosetVertex& u, std::size_t maxDepth = 40);

// ---- systems ----

struct CellSystem {
  std::set<OneCell> U;
  std::set<CosetVertex> V;
  bool operator==(const CellSystem&) const = default;
};

CellSystem skeletonSystem(const std::vector<Cluster>& clusters);

bool isSystem(const CellSystem& s);
bool isBalanced(const CellSystem& s);
bool isFree(const CellSystem& s);

struct CouplingGraph {
  std::vector<OneCell> cells;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> components;
};
CouplingGraph couplingGraph(const CellSystem& s, const CosetVertex& u);

// parent was replaced by the cells of the expansion at `at` with these pieces.
struct ExpansionRecord {
  OneCell parent;
  CosetVertex at;
  std::vector<SpecialForm> pieces;
};
// Checks before <= after in the system order, using the records as witnesses.
bool refines(const CellSystem& before, const CellSystem& after, const std::vector<ExpansionRecord>& records);

struct SeparationResult {
  CellSystem afterProcedureA;
  CellSystem system;  // the equivariant closure
  std::vector<ExpansionRecord> records;
};
// Splits every cell of U so that each offspring is, for every vertex of V,
// either disparate from it or equivalent to a cell there; then closes up.
SeparationResult separationProcedure(const CellSystem& s, std::size_t maxDepth = 40);

struct DecouplingResult {
  CellSystem system;
  std::vector<ExpansionRecord> records;
};
// Throws std::invalid_argument on an unbalanced system.
DecouplingResult equivariantDecoupling(const CellSystem& s, std::size_t maxDepth = 40);

// ---- cubulation ----

struct ClusterCubeComplex {
  std::vector<Cluster> clusters;  // maximal under vertex inclusion
  bool facial = true;
  std::map<CosetVertex, LinkCheck> flagReport;
  bool flag() const;
};

// Throws std::invalid_argument on a system that is not free, ConsistencyError
// when an intersection is not facial or a link is not flag.
ClusterCubeComplex cubulate(const CellSystem& s);

enum class EnvelopeStatus { converged, nonConvergence };

struct EnvelopeRound {
  bool balancedAfterSeparation = false;
  bool freeAfterDecoupling = false;
};

struct EnvelopeResult {
  EnvelopeStatus status = EnvelopeStatus::converged;
  std::vector<EnvelopeRound> rounds;
  ClusterCubeComplex complex;
  bool contained = false;  // every input cluster is a subcluster of an output cluster
};

EnvelopeResult envelope(const std::vector<Cluster>& Y, std::size_t maxIters = 8, std::size_t maxDepth = 40);

// Is c a (facial or diagonal) subcluster of some member of the complex?
bool coveredBy(const Cluster& c, const ClusterCubeComplex& k);

}  // namespace lm
