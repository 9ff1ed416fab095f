#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lm {

// Finite word over {0,1}. Ordering via operator<=> is plain string order and
// is only meant for containers; the group-theoretic order is lexCompare.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::string bits);

  static std::optional<BinaryWord> parse(std::string_view text);

  const std::string& str() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  char operator[](std::size_t i) const { return bits_[i]; }

  BinaryWord operator+(const BinaryWord& o) const { return BinaryWord(bits_ + o.bits_, Unchecked{}); }
  BinaryWord operator+(std::string_view tail) const;
  BinaryWord child(int bit) const;
  BinaryWord prefix(std::size_t n) const { return BinaryWord(bits_.substr(0, n), Unchecked{}); }
  BinaryWord dropPrefix(std::size_t n) const { return BinaryWord(bits_.substr(n), Unchecked{}); }
  BinaryWord parent() const { return prefix(bits_.empty() ? 0 : bits_.size() - 1); }

  bool isPrefixOf(const BinaryWord& t) const;
  bool isProperPrefixOf(const BinaryWord& t) const { return size() < t.size() && isPrefixOf(t); }
  bool isConstant() const;

  bool operator==(const BinaryWord&) const = default;
  auto operator<=>(const BinaryWord&) const = default;

 private:
  struct Unchecked {};
  BinaryWord(std::string bits, Unchecked) : bits_(std::move(bits)) {}
  std::string bits_;
};

std::strong_ordering lexCompare(const BinaryWord& s, const BinaryWord& t);
inline bool lexLess(const BinaryWord& s, const BinaryWord& t) { return lexCompare(s, t) < 0; }

enum class Compat { prefixOfFirst, prefixOfSecond, equal, incompatible };
// prefixOfSecond: s is a proper prefix of t. prefixOfFirst: t is a proper prefix of s.
Compat compatible(const BinaryWord& s, const BinaryWord& t);
inline bool incompatible(const BinaryWord& s, const BinaryWord& t) {
  return compatible(s, t) == Compat::incompatible;
}

// Eventually periodic infinite sequence pre·period^∞, always canonical.
class RationalSeq {
 public:
  RationalSeq(std::string pre, std::string period);

  // Accepts "bits(bits+)".
  static std::optional<RationalSeq> parse(std::string_view text);

  const std::string& preperiod() const { return pre_; }
  const std::string& period() const { return period_; }

  char digit(std::size_t i) const;
  BinaryWord prefix(std::size_t n) const;
  bool startsWith(const BinaryWord& w) const;
  RationalSeq shift(std::size_t n) const;
  RationalSeq prepend(const BinaryWord& w) const;

  std::string toString() const;

  bool operator==(const RationalSeq&) const = default;
  auto operator<=>(const RationalSeq&) const = default;

 private:
  std::string pre_;
  std::string period_;
};

// Finite union of cones, stored as a sorted antichain with siblings merged.
class ConeSet {
 public:
  ConeSet() = default;
  explicit ConeSet(std::vector<BinaryWord> cones);
  static ConeSet cone(const BinaryWord& s) { return ConeSet({s}); }

  const std::vector<BinaryWord>& cones() const { return cones_; }
  bool empty() const { return cones_.empty(); }

  ConeSet unite(const ConeSet& o) const;
  ConeSet intersect(const ConeSet& o) const;
  bool subsetOf(const ConeSet& o) const;
  // With these sets a null intersection is an empty one.
  bool nullIntersect(const ConeSet& o) const { return intersect(o).empty(); }
  bool containsPoint(const RationalSeq& xi) const;

  std::string toString() const;

  bool operator==(const ConeSet&) const = default;

 private:
  std::vector<BinaryWord> cones_;
};

}  // namespace lm
