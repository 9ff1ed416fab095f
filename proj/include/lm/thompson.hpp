#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lm/binseq.hpp"

namespace lm {

// Element of Thompson's group F as a reduced tree pair. Leaves are stored
// left to right; domain leaf i maps to range leaf i by prefix replacement.
// Products act on the right: (f * g) first applies f, then g.
class TreePair {
 public:
  TreePair();  // identity
  TreePair(std::vector<BinaryWord> domain, std::vector<BinaryWord> range);

  static TreePair identity() { return TreePair(); }

  const std::vector<BinaryWord>& domain() const { return dom_; }
  const std::vector<BinaryWord>& range() const { return ran_; }
  std::size_t leafCount() const { return dom_.size(); }
  bool isIdentity() const { return dom_.size() == 1; }

  TreePair operator*(const TreePair& g) const;
  TreePair inverse() const { return TreePair(ran_, dom_, Reduced{}); }
  TreePair pow(int e) const;

  std::optional<BinaryWord> actOnWord(const BinaryWord& t) const;
  RationalSeq actOnSeq(const RationalSeq& xi) const;
  bool pointwiseFixesCone(const BinaryWord& s) const;
  // Closure of the moved set, as cones.
  ConeSet support() const;

  // "(d1,d2,...->r1,r2,...)", or "id".
  std::string toString() const;
  static std::optional<TreePair> parse(const std::string& text);

  bool operator==(const TreePair&) const = default;
  auto operator<=>(const TreePair&) const = default;

 private:
  struct Reduced {};
  TreePair(std::vector<BinaryWord> d, std::vector<BinaryWord> r, Reduced) : dom_(std::move(d)), ran_(std::move(r)) {}
  void reduce();
  std::vector<BinaryWord> dom_;
  std::vector<BinaryWord> ran_;
};

TreePair xGen(const BinaryWord& s);

// Complete prefix code check used on construction.
bool isCompletePrefixCode(const std::vector<BinaryWord>& leaves);

// A word in the generators x_s (pairs of subscript and exponent) equal to f.
std::vector<std::pair<BinaryWord, int>> xWordOf(const TreePair& f);

}  // namespace lm
