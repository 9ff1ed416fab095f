#include "lm/special.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "lm/rewrite.hpp"

namespace lm {

namespace {

int sgn(int e) { return e > 0 ? 1 : -1; }

std::size_t commonPrefix(const BinaryWord& a, const BinaryWord& b) {
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  return k;
}

bool allChar(const std::string& s, std::size_t from, char c) {
  for (std::size_t i = from; i < s.size(); ++i)
    if (s[i] != c) return false;
  return true;
}

// Cones of the complement lying left of s, left to right.
std::vector<BinaryWord> leftCones(const BinaryWord& s) {
  std::vector<BinaryWord> out;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k] == '1') out.push_back(s.prefix(k) + "0");
  return out;
}

std::vector<BinaryWord> rightCones(const BinaryWord& s) {
  std::vector<BinaryWord> out;
  for (std::size_t k = s.size(); k-- > 0;)
    if (s[k] == '0') out.push_back(s.prefix(k) + "1");
  return out;
}

// Cones strictly between incompatible a <lex b.
std::vector<BinaryWord> gapCones(const BinaryWord& a, const BinaryWord& b) {
  const std::size_t w = commonPrefix(a, b);
  std::vector<BinaryWord> out;
  for (std::size_t k = a.size(); k-- > w + 1;)
    if (a[k] == '0') out.push_back(a.prefix(k) + "1");
  for (std::size_t k = w + 1; k < b.size(); ++k)
    if (b[k] == '1') out.push_back(b.prefix(k) + "0");
  return out;
}

// Split cones until both gaps have the same number of pieces.
bool balance(std::vector<BinaryWord>& x, std::vector<BinaryWord>& y) {
  if (x.empty() != y.empty()) return false;
  while (x.size() != y.size()) {
    auto& small = x.size() < y.size() ? x : y;
    BinaryWord c = small.back();
    small.pop_back();
    small.push_back(c + "0");
    small.push_back(c + "1");
  }
  return true;
}

std::vector<std::string> children(int sign) {
  if (sign > 0) return {"0", "10", "11"};
  return {"00", "01", "1"};
}

int childSign(int sign, std::size_t idx) {
  static const int plus[] = {1, -1, 1};
  static const int minus[] = {-1, 1, -1};
  return sign > 0 ? plus[idx] : minus[idx];
}

}  // namespace

bool consecutiveLeaves(const BinaryWord& a, const BinaryWord& b) {
  const std::size_t w = commonPrefix(a, b);
  if (w >= a.size() || w >= b.size()) return false;
  if (a[w] != '0' || b[w] != '1') return false;
  return allChar(a.str(), w + 1, '1') && allChar(b.str(), w + 1, '0');
}

bool isSpecial(const YWord& y) {
  if (y.empty()) return false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (std::abs(y[i].exp) != 1 || y[i].sub.isConstant()) return false;
    if (i > 0 && (y[i].exp != -y[i - 1].exp || !consecutiveLeaves(y[i - 1].sub, y[i].sub))) return false;
  }
  return true;
}

int specialType(const SpecialForm& s) { return s.front().exp < 0 ? 1 : 2; }
int specialParity(const SpecialForm& s) { return static_cast<int>(s.size() % 2); }

SpecialForm expandAt(const SpecialForm& s, std::size_t i) {
  if (i >= s.size()) throw std::out_of_range("expansion index");
  SpecialForm out(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
  for (const auto& p : expansionPieces(s[i].sub, sgn(s[i].exp))) out.push_back({p.sub, p.sign});
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(i) + 1, s.end());
  return out;
}

bool contractibleAt(const SpecialForm& s, std::size_t i) {
  if (i + 2 >= s.size()) return false;
  const auto& a = s[i];
  if (a.sub.empty()) return false;
  for (int sign : {1, -1}) {
    const std::size_t cut = sign > 0 ? 1 : 2;
    if (a.sub.size() < cut) continue;
    const BinaryWord base = a.sub.prefix(a.sub.size() - cut);
    auto pieces = expansionPieces(base, sign);
    if (base.isConstant()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < 3 && ok; ++k) ok = s[i + k].sub == pieces[k].sub && s[i + k].exp == pieces[k].sign;
    if (ok) return true;
  }
  return false;
}

SpecialForm contractAt(const SpecialForm& s, std::size_t i) {
  if (!contractibleAt(s, i)) throw std::invalid_argument("no contractible triple at index");
  const int sign = s[i].exp;  // + pattern starts with +, - pattern with -
  const BinaryWord base = s[i].sub.prefix(s[i].sub.size() - (sign > 0 ? 1 : 2));
  SpecialForm out(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
  out.push_back({base, sign});
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(i) + 3, s.end());
  return out;
}

SpecialForm minimalForm(const SpecialForm& s) {
  SpecialForm cur = s;
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i + 2 < cur.size(); ++i) {
      if (contractibleAt(cur, i)) {
        cur = contractAt(cur, i);
        again = true;
        break;
      }
    }
  }
  return cur;
}

SpecialForm inverseForm(const SpecialForm& s) {
  SpecialForm out = s;
  for (auto& l : out) l.exp = -l.exp;
  return out;
}

bool independent(const SpecialForm& a, const SpecialForm& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (!incompatible(x.sub, y.sub)) return false;
  return true;
}

ListChecks listChecks(const std::vector<SpecialForm>& list) {
  ListChecks c{true, true, true};
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j)
      if (!independent(list[i], list[j])) c.sorted = false;
  for (std::size_t i = 0; i + 1 < list.size(); ++i) {
    const auto& a = list[i].back();
    const auto& b = list[i + 1].front();
    if (!lexLess(a.sub, b.sub)) c.sorted = false;
    if (!consecutiveLeaves(a.sub, b.sub)) c.consecutive = false;
    if (a.exp != -b.exp) c.alternating = false;
  }
  if (!c.sorted) c.consecutive = false;
  return c;
}

std::vector<bool> consecutivePattern(const std::vector<SpecialForm>& list) {
  std::vector<bool> out;
  for (std::size_t i = 0; i + 1 < list.size(); ++i) out.push_back(consecutiveLeaves(list[i].back().sub, list[i + 1].front().sub));
  return out;
}

bool productIsSpecial(const std::vector<SpecialForm>& list) {
  for (const auto& s : list)
    if (!isSpecial(s)) throw std::invalid_argument("list member is not a special form");
  auto c = listChecks(list);
  if (!c.sorted) throw std::invalid_argument("list is not sorted and pairwise independent");
  return c.consecutive && c.alternating;
}

SpecialForm concat(const std::vector<SpecialForm>& list) {
  SpecialForm out;
  for (const auto& s : list) out.insert(out.end(), s.begin(), s.end());
  return out;
}

SpecialForm actF(const SpecialForm& s, const TreePair& f) {
  SpecialForm cur = s;
  for (std::size_t i = 0; i < cur.size();) {
    if (f.actOnWord(cur[i].sub)) {
      ++i;
    } else {
      cur = expandAt(cur, i);
    }
  }
  for (auto& l : cur) l.sub = *f.actOnWord(l.sub);
  return cur;
}

bool stabilizesCoset(const TreePair& f, const SpecialForm& s) {
  return normalize(toSWord(s) * SWord::fromTreePair(f)).y == normalize(toSWord(s)).y;
}

std::optional<TreePair> findCarrier(const std::vector<SpecialForm>& from, const std::vector<SpecialForm>& to) {
  if (from.size() != to.size() || from.empty()) return std::nullopt;
  if (!listChecks(from).sorted || !listChecks(to).sorted) return std::nullopt;
  if (consecutivePattern(from) != consecutivePattern(to)) return std::nullopt;
  std::vector<SpecialForm> a = from, b = to;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!isSpecial(a[i]) || !isSpecial(b[i])) return std::nullopt;
    if (specialType(a[i]) != specialType(b[i]) || specialParity(a[i]) != specialParity(b[i])) return std::nullopt;
    while (a[i].size() < b[i].size()) a[i] = expandAt(a[i], 0);
    while (b[i].size() < a[i].size()) b[i] = expandAt(b[i], 0);
  }
  std::vector<BinaryWord> dom, ran;
  auto addGap = [&](std::vector<BinaryWord> x, std::vector<BinaryWord> y) {
    if (!balance(x, y)) return false;
    dom.insert(dom.end(), x.begin(), x.end());
    ran.insert(ran.end(), y.begin(), y.end());
    return true;
  };
  if (!addGap(leftCones(a.front().front().sub), leftCones(b.front().front().sub))) return std::nullopt;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0 && !addGap(gapCones(a[i - 1].back().sub, a[i].front().sub), gapCones(b[i - 1].back().sub, b[i].front().sub)))
      return std::nullopt;
    for (std::size_t k = 0; k < a[i].size(); ++k) {
      dom.push_back(a[i][k].sub);
      ran.push_back(b[i][k].sub);
    }
  }
  if (!addGap(rightCones(a.back().back().sub), rightCones(b.back().back().sub))) return std::nullopt;
  return TreePair(dom, ran);
}

bool lettersOverlap(const BinaryWord& s, int t, const BinaryWord& u, int v) {
  if (incompatible(s, u)) return false;
  // State: the walker that is behind, the bits by which the other is ahead,
  // and both signs. Walkers descend through expansion children.
  using State = std::tuple<int, std::string, int, int>;  // behind (0 = first), extra, sign0, sign1
  std::set<State> seen;
  std::vector<State> stack;
  if (s.size() <= u.size()) stack.emplace_back(0, u.dropPrefix(s.size()).str(), t, v);
  else stack.emplace_back(1, s.dropPrefix(u.size()).str(), t, v);
  while (!stack.empty()) {
    auto [behind, extra, s0, s1] = stack.back();
    stack.pop_back();
    if (!seen.insert({behind, extra, s0, s1}).second) continue;
    if (extra.empty() && s0 == s1) return true;
    std::vector<int> movers;
    if (extra.empty()) movers = {0, 1};
    else movers = {behind};
    for (int m : movers) {
      const int sign = m == 0 ? s0 : s1;
      auto ch = children(sign);
      for (std::size_t k = 0; k < ch.size(); ++k) {
        const std::string& c = ch[k];
        int n0 = s0, n1 = s1;
        (m == 0 ? n0 : n1) = childSign(sign, k);
        if (extra.size() >= c.size()) {
          if (extra.compare(0, c.size(), c) != 0) continue;
          stack.emplace_back(m, extra.substr(c.size()), n0, n1);
        } else {
          if (c.compare(0, extra.size(), extra) != 0) continue;
          stack.emplace_back(1 - m, c.substr(extra.size()), n0, n1);
        }
      }
    }
  }
  return false;
}

bool cancellationFree(const YWord& a, const YWord& b) {
  if (!isSpecial(a) || !isSpecial(b)) throw std::invalid_argument("cancellation-freeness needs cosets in Gamma");
  const auto ma = minimalForm(a), mb = minimalForm(b);
  for (const auto& p : ma)
    for (const auto& q : mb)
      if (lettersOverlap(p.sub, p.exp, q.sub, q.exp)) return false;
  return true;
}

}  // namespace lm
