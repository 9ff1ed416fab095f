#include "lm/binseq.hpp"

#include <algorithm>
#include <stdexcept>

namespace lm {

namespace {

bool allBits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

std::string primitiveRoot(const std::string& p) {
  const std::size_t n = p.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = p[i] == p[i - d];
    if (ok) return p.substr(0, d);
  }
  return p;
}

}  // namespace

BinaryWord::BinaryWord(std::string bits) : bits_(std::move(bits)) {
  if (!allBits(bits_)) throw std::invalid_argument("BinaryWord: non-binary character");
}

std::optional<BinaryWord> BinaryWord::parse(std::string_view text) {
  if (!allBits(text)) return std::nullopt;
  return BinaryWord(std::string(text), Unchecked{});
}

BinaryWord BinaryWord::operator+(std::string_view tail) const {
  return *this + BinaryWord(std::string(tail));
}

BinaryWord BinaryWord::child(int bit) const {
  return BinaryWord(bits_ + (bit ? '1' : '0'), Unchecked{});
}

bool BinaryWord::isPrefixOf(const BinaryWord& t) const {
  return size() <= t.size() && std::equal(bits_.begin(), bits_.end(), t.bits_.begin());
}

bool BinaryWord::isConstant() const {
  return std::all_of(bits_.begin(), bits_.end(), [&](char c) { return c == bits_.front(); });
}

std::strong_ordering lexCompare(const BinaryWord& s, const BinaryWord& t) {
  const std::size_t n = std::min(s.size(), t.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] != t[i]) return s[i] < t[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  // Proper extensions are smaller.
  if (s.size() == t.size()) return std::strong_ordering::equal;
  return s.size() > t.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

Compat compatible(const BinaryWord& s, const BinaryWord& t) {
  if (s == t) return Compat::equal;
  if (s.isPrefixOf(t)) return Compat::prefixOfSecond;
  if (t.isPrefixOf(s)) return Compat::prefixOfFirst;
  return Compat::incompatible;
}

RationalSeq::RationalSeq(std::string pre, std::string period)
    : pre_(std::move(pre)), period_(std::move(period)) {
  if (period_.empty() || !allBits(pre_) || !allBits(period_))
    throw std::invalid_argument("RationalSeq: bad preperiod or period");
  period_ = primitiveRoot(period_);
  while (!pre_.empty() && pre_.back() == period_.back()) {
    pre_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

std::optional<RationalSeq> RationalSeq::parse(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.size() < open + 3 || text.back() != ')') return std::nullopt;
  const auto pre = text.substr(0, open);
  const auto per = text.substr(open + 1, text.size() - open - 2);
  if (per.empty() || !allBits(pre) || !allBits(per)) return std::nullopt;
  return RationalSeq(std::string(pre), std::string(per));
}

char RationalSeq::digit(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return period_[(i - pre_.size()) % period_.size()];
}

BinaryWord RationalSeq::prefix(std::size_t n) const {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(digit(i));
  return BinaryWord(std::move(out));
}

bool RationalSeq::startsWith(const BinaryWord& w) const {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (digit(i) != w[i]) return false;
  return true;
}

RationalSeq RationalSeq::shift(std::size_t n) const {
  if (n <= pre_.size()) return RationalSeq(pre_.substr(n), period_);
  const std::size_t r = (n - pre_.size()) % period_.size();
  return RationalSeq("", period_.substr(r) + period_.substr(0, r));
}

RationalSeq RationalSeq::prepend(const BinaryWord& w) const {
  return RationalSeq(w.str() + pre_, period_);
}

std::string RationalSeq::toString() const { return pre_ + "(" + period_ + ")"; }

ConeSet::ConeSet(std::vector<BinaryWord> cones) {
  // Drop cones contained in others, then merge siblings until stable.
  std::sort(cones.begin(), cones.end(), [](const BinaryWord& a, const BinaryWord& b) {
    return a.size() < b.size() || (a.size() == b.size() && a < b);
  });
  std::vector<BinaryWord> kept;
  for (auto& c : cones) {
    bool covered = std::any_of(kept.begin(), kept.end(), [&](const BinaryWord& k) { return k.isPrefixOf(c); });
    if (!covered) kept.push_back(std::move(c));
  }
  bool merged = true;
  while (merged) {
    merged = false;
    std::sort(kept.begin(), kept.end());
    for (std::size_t i = 0; i + 1 < kept.size(); ++i) {
      const auto& a = kept[i];
      const auto& b = kept[i + 1];
      if (!a.empty() && a.size() == b.size() && a.parent() == b.parent() && a != b) {
        BinaryWord p = a.parent();
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i), kept.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        std::erase_if(kept, [&](const BinaryWord& k) { return p.isPrefixOf(k); });
        kept.push_back(p);
        merged = true;
        break;
      }
    }
  }
  std::sort(kept.begin(), kept.end(), lexLess);
  cones_ = std::move(kept);
}

ConeSet ConeSet::unite(const ConeSet& o) const {
  auto all = cones_;
  all.insert(all.end(), o.cones_.begin(), o.cones_.end());
  return ConeSet(std::move(all));
}

ConeSet ConeSet::intersect(const ConeSet& o) const {
  std::vector<BinaryWord> out;
  for (const auto& a : cones_)
    for (const auto& b : o.cones_) {
      if (a.isPrefixOf(b)) out.push_back(b);
      else if (b.isPrefixOf(a)) out.push_back(a);
    }
  return ConeSet(std::move(out));
}

bool ConeSet::subsetOf(const ConeSet& o) const { return intersect(o) == *this; }

bool ConeSet::containsPoint(const RationalSeq& xi) const {
  return std::any_of(cones_.begin(), cones_.end(), [&](const BinaryWord& c) { return xi.startsWith(c); });
}

std::string ConeSet::toString() const {
  if (cones_.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    if (i) out += ", ";
    out += "cone(" + cones_[i].str() + ")";
  }
  return out + "}";
}

}  // namespace lm
