#pragma once

#include <string>
#include <vector>

#include "lm/binseq.hpp"
#include "lm/thompson.hpp"

namespace lm {

enum class Gen { x, y };

struct Letter {
  Gen kind;
  BinaryWord sub;
  int exp;
  bool operator==(const Letter&) const = default;
};

// Word in the generators x_s, y_s. Adjacent letters with the same generator
// are merged and zero exponents dropped on insertion.
class SWord {
 public:
  SWord() = default;
  explicit SWord(const std::vector<Letter>& letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  SWord& push(const Letter& l);
  SWord& append(const SWord& w);
  SWord operator*(const SWord& w) const { return SWord(*this).append(w); }
  SWord inverse() const;

  static SWord x(const BinaryWord& s, int e = 1) { return SWord().push({Gen::x, s, e}); }
  static SWord y(const BinaryWord& s, int e = 1) { return SWord().push({Gen::y, s, e}); }
  static SWord fromTreePair(const TreePair& f);

  bool operator==(const SWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

struct YLetter {
  BinaryWord sub;
  int exp;
  bool operator==(const YLetter&) const = default;
  auto operator<=>(const YLetter&) const = default;
};
using YWord = std::vector<YLetter>;

// Normal form f·y_{s1}^{t1}...y_{sn}^{tn}.
struct GNormal {
  TreePair f;
  YWord y;
  bool operator==(const GNormal&) const = default;
  auto operator<=>(const GNormal&) const = default;
  bool isIdentity() const { return f.isIdentity() && y.empty(); }
};

SWord toSWord(const YWord& y);
SWord toSWord(const GNormal& g);

}  // namespace lm
