#include "lm/thompson.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace lm {

namespace {

bool consumeSubtree(const std::vector<BinaryWord>& leaves, std::size_t& i, const BinaryWord& node) {
  if (i >= leaves.size()) return false;
  if (leaves[i] == node) {
    ++i;
    return true;
  }
  if (!node.isProperPrefixOf(leaves[i])) return false;
  return consumeSubtree(leaves, i, node.child(0)) && consumeSubtree(leaves, i, node.child(1));
}

bool isSiblingPair(const BinaryWord& a, const BinaryWord& b) {
  return !a.empty() && a.size() == b.size() && a.str().back() == '0' && b.str().back() == '1' &&
         a.parent() == b.parent();
}

}  // namespace

bool isCompletePrefixCode(const std::vector<BinaryWord>& leaves) {
  std::size_t i = 0;
  return consumeSubtree(leaves, i, BinaryWord()) && i == leaves.size();
}

TreePair::TreePair() : dom_{BinaryWord()}, ran_{BinaryWord()} {}

TreePair::TreePair(std::vector<BinaryWord> domain, std::vector<BinaryWord> range)
    : dom_(std::move(domain)), ran_(std::move(range)) {
  if (dom_.size() != ran_.size() || !isCompletePrefixCode(dom_) || !isCompletePrefixCode(ran_))
    throw std::invalid_argument("TreePair: leaves do not form matching complete prefix codes");
  reduce();
}

void TreePair::reduce() {
  std::vector<BinaryWord> d, r;
  d.reserve(dom_.size());
  r.reserve(ran_.size());
  for (std::size_t i = 0; i < dom_.size(); ++i) {
    d.push_back(std::move(dom_[i]));
    r.push_back(std::move(ran_[i]));
    while (d.size() >= 2 && isSiblingPair(d[d.size() - 2], d.back()) && isSiblingPair(r[r.size() - 2], r.back())) {
      d.pop_back();
      r.pop_back();
      d.back() = d.back().parent();
      r.back() = r.back().parent();
    }
  }
  dom_ = std::move(d);
  ran_ = std::move(r);
}

TreePair TreePair::operator*(const TreePair& g) const {
  std::vector<BinaryWord> d, r;
  std::size_t i = 0, j = 0;
  const auto& fr = ran_;
  const auto& gd = g.dom_;
  while (i < fr.size() && j < gd.size()) {
    const auto& a = fr[i];
    const auto& b = gd[j];
    if (a == b) {
      d.push_back(dom_[i]);
      r.push_back(g.ran_[j]);
      ++i;
      ++j;
    } else if (a.isPrefixOf(b)) {
      d.push_back(dom_[i] + b.dropPrefix(a.size()));
      r.push_back(g.ran_[j]);
      ++j;
      if (j == gd.size() || !a.isPrefixOf(gd[j])) ++i;
    } else {
      d.push_back(dom_[i]);
      r.push_back(g.ran_[j] + a.dropPrefix(b.size()));
      ++i;
      if (i == fr.size() || !b.isPrefixOf(fr[i])) ++j;
    }
  }
  TreePair out(std::move(d), std::move(r), Reduced{});
  out.reduce();
  return out;
}

TreePair TreePair::pow(int e) const {
  TreePair base = e < 0 ? inverse() : *this;
  TreePair acc;
  for (int k = 0; k < std::abs(e); ++k) acc = acc * base;
  return acc;
}

std::optional<BinaryWord> TreePair::actOnWord(const BinaryWord& t) const {
  for (std::size_t i = 0; i < dom_.size(); ++i) {
    if (dom_[i].isPrefixOf(t)) return ran_[i] + t.dropPrefix(dom_[i].size());
    if (t.isProperPrefixOf(dom_[i])) return std::nullopt;
  }
  return std::nullopt;
}

RationalSeq TreePair::actOnSeq(const RationalSeq& xi) const {
  for (std::size_t i = 0; i < dom_.size(); ++i)
    if (xi.startsWith(dom_[i])) return xi.shift(dom_[i].size()).prepend(ran_[i]);
  throw std::logic_error("TreePair::actOnSeq: incomplete prefix code");
}

bool TreePair::pointwiseFixesCone(const BinaryWord& s) const {
  for (std::size_t i = 0; i < dom_.size(); ++i) {
    if (dom_[i].isPrefixOf(s)) return dom_[i] == ran_[i];
    if (s.isProperPrefixOf(dom_[i]) && dom_[i] != ran_[i]) return false;
  }
  return true;
}

ConeSet TreePair::support() const {
  std::vector<BinaryWord> moved;
  for (std::size_t i = 0; i < dom_.size(); ++i)
    if (dom_[i] != ran_[i]) moved.push_back(dom_[i]);
  return ConeSet(std::move(moved));
}

std::string TreePair::toString() const {
  if (isIdentity()) return "id";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dom_.size(); ++i) os << (i ? "," : "") << dom_[i].str();
  os << "->";
  for (std::size_t i = 0; i < ran_.size(); ++i) os << (i ? "," : "") << ran_[i].str();
  os << ')';
  return os.str();
}

std::optional<TreePair> TreePair::parse(const std::string& text) {
  if (text == "id") return TreePair();
  if (text.size() < 4 || text.front() != '(' || text.back() != ')') return std::nullopt;
  const auto arrow = text.find("->");
  if (arrow == std::string::npos) return std::nullopt;
  auto split = [](const std::string& s) {
    std::vector<BinaryWord> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) {
      auto w = BinaryWord::parse(cur);
      if (!w) return std::vector<BinaryWord>{};
      out.push_back(*w);
    }
    return out;
  };
  auto d = split(text.substr(1, arrow - 1));
  auto r = split(text.substr(arrow + 2, text.size() - arrow - 3));
  if (d.empty() || d.size() != r.size() || !isCompletePrefixCode(d) || !isCompletePrefixCode(r)) return std::nullopt;
  return TreePair(std::move(d), std::move(r));
}

TreePair xGen(const BinaryWord& s) {
  std::vector<std::pair<BinaryWord, BinaryWord>> leaves;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto side = s.prefix(i).child(s[i] == '0' ? 1 : 0);
    leaves.emplace_back(side, side);
  }
  leaves.emplace_back(s + "00", s + "0");
  leaves.emplace_back(s + "01", s + "10");
  leaves.emplace_back(s + "1", s + "11");
  std::sort(leaves.begin(), leaves.end());
  std::vector<BinaryWord> d, r;
  for (auto& [a, b] : leaves) {
    d.push_back(a);
    r.push_back(b);
  }
  return TreePair(std::move(d), std::move(r));
}

namespace {

// Rotations x_s carrying the tree with the given leaves onto the right vine.
std::vector<BinaryWord> toVine(std::vector<BinaryWord> leaves) {
  std::vector<BinaryWord> rotations;
  BinaryWord spine;
  auto isLeaf = [&](const BinaryWord& w) { return std::find(leaves.begin(), leaves.end(), w) != leaves.end(); };
  while (!isLeaf(spine)) {
    if (isLeaf(spine.child(0))) {
      spine = spine.child(1);
      continue;
    }
    const TreePair x = xGen(spine);
    for (auto& l : leaves) l = *x.actOnWord(l);
    rotations.push_back(spine);
  }
  return rotations;
}

}  // namespace

std::vector<std::pair<BinaryWord, int>> xWordOf(const TreePair& f) {
  std::vector<std::pair<BinaryWord, int>> word;
  if (f.isIdentity()) return word;
  for (auto& s : toVine(f.domain())) word.emplace_back(s, 1);
  auto back = toVine(f.range());
  for (auto it = back.rbegin(); it != back.rend(); ++it) word.emplace_back(*it, -1);
  return word;
}

}  // namespace lm
