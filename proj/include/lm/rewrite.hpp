#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "lm/binseq.hpp"
#include "lm/thompson.hpp"
#include "lm/word.hpp"

namespace lm {

struct ULetter {
  BinaryWord sub;
  int sign;
  bool operator==(const ULetter&) const = default;
};

// A token of a word: a unit y-letter or a pending element of F.
using Token = std::variant<ULetter, TreePair>;

enum class MoveKind { expand, contract, commute, cancel };

// A substitution that changes the vertex path of the word. pos is the index
// of the first letter involved (the triple's first letter for contract).
struct Move {
  MoveKind kind;
  std::size_t pos;
};

class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Word h·t_0·t_1···t_{n-1} over unit y-letters and F-tokens, rewritten by
// permissible substitutions. Rearranging moves (y_t f = f y_{t.f}) are silent;
// the others are reported to the observer before they are applied.
class Engine {
 public:
  using Observer = std::function<void(const Engine&, const Move&)>;

  explicit Engine(std::size_t stepCap = 2'000'000) : stepCap_(stepCap) {}

  void setObserver(Observer o) { observer_ = std::move(o); }
  void load(const SWord& w);
  void appendF(const TreePair& f) { tokens_.emplace_back(f); }
  void appendY(const BinaryWord& s, int sign) { tokens_.emplace_back(ULetter{s, sign}); }

  const TreePair& prefix() const { return h_; }
  const std::vector<Token>& tokens() const { return tokens_; }
  const ULetter& letter(std::size_t i) const { return std::get<ULetter>(tokens_[i]); }
  SWord suffixWord(std::size_t from) const;

  void pushAllF();
  void fixOrder();
  void sortLex();
  void cancelAdjacent();
  bool removeCancellations();
  bool contractOnce();
  void normalizeAll();

  // Letters merged into exponents, in the current order.
  YWord yWord() const;
  GNormal result() const;

 private:
  bool isLetter(std::size_t i) const { return std::holds_alternative<ULetter>(tokens_[i]); }
  void notify(MoveKind k, std::size_t pos);
  void tick();
  void pushLeft(std::size_t t);
  void expandAt(std::size_t i);
  void commute(std::size_t i);
  void cancelPair(std::size_t i);

  TreePair h_;
  std::vector<Token> tokens_;
  Observer observer_;
  std::size_t steps_ = 0;
  std::size_t stepCap_;
};

struct StandardForm {
  TreePair f;
  YWord y;
  bool operator==(const StandardForm&) const = default;
};

// Neighbouring pair y_s^outer ... y_u^inner with u = s·gap (gap nonempty).
bool pairPotentialCancellation(int outerSign, const BinaryWord& gap, int innerSign);
bool pairPotentialCancellation(const BinaryWord& s, int t, const BinaryWord& u, int v);

bool isStandard(const YWord& y);
bool hasPotentialCancellation(const YWord& y);

struct ContractionMatch {
  BinaryWord pivot;
  int pattern;  // 1: y_{s0} y_{s10}^-1 y_{s11}; 2: y_{s00}^-1 y_{s01} y_{s1}^-1
  bool operator==(const ContractionMatch&) const = default;
};
std::optional<ContractionMatch> hasPotentialContraction(const YWord& y);

bool isNormal(const GNormal& n);

StandardForm toStandardForm(const SWord& w);
StandardForm removePotentialCancellations(const StandardForm& sf);
GNormal normalize(const SWord& w);
GNormal multiply(const GNormal& a, const GNormal& b);
GNormal invertNormal(const GNormal& n);
bool equalWords(const SWord& a, const SWord& b);

// Expansion pieces of y_s^sign and the F-element in front of them.
std::vector<ULetter> expansionPieces(const BinaryWord& s, int sign);
TreePair expansionPrefix(const BinaryWord& s, int sign);

}  // namespace lm
