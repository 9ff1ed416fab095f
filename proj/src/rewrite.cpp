#include "lm/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

namespace lm {

namespace {

// Outer symbol eats as much of the pending buffer as its rules allow.
void reduceBuffer(int& sign, std::string& buf) {
  std::size_t i = 0;
  while (i < buf.size()) {
    if (sign > 0) {
      if (buf[i] == '1') {
        i += 1;
      } else if (i + 1 < buf.size()) {
        if (buf[i + 1] == '1') sign = -1;
        i += 2;
      } else {
        break;
      }
    } else {
      if (buf[i] == '0') {
        i += 1;
      } else if (i + 1 < buf.size()) {
        if (buf[i + 1] == '0') sign = 1;
        i += 2;
      } else {
        break;
      }
    }
  }
  buf.erase(0, i);
}

struct Emission {
  const char* chunk;
  int next;
};

std::vector<Emission> emissions(int sign) {
  if (sign > 0) return {{"0", 1}, {"10", -1}, {"11", 1}};
  return {{"00", -1}, {"01", 1}, {"1", -1}};
}

TreePair requireF(const Token& t) { return std::get<TreePair>(t); }

}  // namespace

std::vector<ULetter> expansionPieces(const BinaryWord& s, int sign) {
  if (sign > 0) return {{s + "0", 1}, {s + "10", -1}, {s + "11", 1}};
  return {{s + "00", -1}, {s + "01", 1}, {s + "1", -1}};
}

TreePair expansionPrefix(const BinaryWord& s, int sign) {
  return sign > 0 ? xGen(s) : xGen(s).inverse();
}

bool pairPotentialCancellation(int outerSign, const BinaryWord& gap, int innerSign) {
  using State = std::tuple<int, std::string, int>;
  std::set<State> seen;
  std::vector<State> stack;
  int o = outerSign;
  std::string buf = gap.str();
  reduceBuffer(o, buf);
  stack.emplace_back(o, buf, innerSign);
  while (!stack.empty()) {
    auto [a, b, c] = stack.back();
    stack.pop_back();
    if (!seen.insert({a, b, c}).second) continue;
    if (b.empty() && a == -c) return true;
    for (const auto& e : emissions(c)) {
      int na = a;
      std::string nb = b + e.chunk;
      reduceBuffer(na, nb);
      stack.emplace_back(na, nb, e.next);
    }
  }
  return false;
}

bool pairPotentialCancellation(const BinaryWord& s, int t, const BinaryWord& u, int v) {
  if (!s.isProperPrefixOf(u)) throw std::invalid_argument("outer subscript must be a proper prefix of the inner one");
  return pairPotentialCancellation(t, u.dropPrefix(s.size()), v);
}

bool isStandard(const YWord& y) {
  for (std::size_t j = 0; j < y.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (y[i].sub.isProperPrefixOf(y[j].sub)) return false;
  return true;
}

bool hasPotentialCancellation(const YWord& y) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    const int si = y[i].exp > 0 ? 1 : -1;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (i == j) continue;
      const int sj = y[j].exp > 0 ? 1 : -1;
      if (y[i].sub == y[j].sub) {
        if (si != sj) return true;
        continue;
      }
      if (!y[i].sub.isProperPrefixOf(y[j].sub)) continue;
      bool between = false;
      for (const auto& l : y) {
        if (y[i].sub.isProperPrefixOf(l.sub) && l.sub.isProperPrefixOf(y[j].sub)) {
          between = true;
          break;
        }
      }
      if (!between && pairPotentialCancellation(si, y[j].sub.dropPrefix(y[i].sub.size()), sj)) return true;
    }
  }
  return false;
}

std::optional<ContractionMatch> hasPotentialContraction(const YWord& y) {
  std::set<BinaryWord> pos, neg, any;
  for (const auto& l : y) {
    (l.exp > 0 ? pos : neg).insert(l.sub);
    any.insert(l.sub);
  }
  for (const auto& l : y) {
    const auto& w = l.sub;
    if (w.empty() || w[w.size() - 1] != '0') continue;
    const BinaryWord s = w.parent();
    if (pos.count(s + "0") && neg.count(s + "10") && pos.count(s + "11") && !any.count(s + "1"))
      return ContractionMatch{s, 1};
    if (w.size() >= 2 && w[w.size() - 2] == '0') {
      const BinaryWord s2 = w.prefix(w.size() - 2);
      if (neg.count(s2 + "00") && pos.count(s2 + "01") && neg.count(s2 + "1") && !any.count(s2 + "0"))
        return ContractionMatch{s2, 2};
    }
  }
  return std::nullopt;
}

bool isNormal(const GNormal& n) {
  for (std::size_t i = 0; i < n.y.size(); ++i) {
    if (n.y[i].exp == 0 || n.y[i].sub.isConstant()) return false;
    if (i > 0 && !lexLess(n.y[i - 1].sub, n.y[i].sub)) return false;
  }
  return !hasPotentialCancellation(n.y) && !hasPotentialContraction(n.y);
}

// ---- Engine ----

void Engine::load(const SWord& w) {
  for (const auto& l : w.letters()) {
    if (l.kind == Gen::x) {
      tokens_.emplace_back(xGen(l.sub).pow(l.exp));
      continue;
    }
    if (l.sub.isConstant()) throw std::invalid_argument("y-letter with constant subscript: " + l.sub.str());
    for (int k = 0; k < std::abs(l.exp); ++k) tokens_.emplace_back(ULetter{l.sub, l.exp > 0 ? 1 : -1});
  }
}

SWord Engine::suffixWord(std::size_t from) const {
  SWord out;
  for (std::size_t i = from; i < tokens_.size(); ++i) {
    if (isLetter(i)) {
      const auto& u = letter(i);
      out.push({Gen::y, u.sub, u.sign});
    } else {
      out.append(SWord::fromTreePair(requireF(tokens_[i])));
    }
  }
  return out;
}

void Engine::notify(MoveKind k, std::size_t pos) {
  if (observer_) observer_(*this, Move{k, pos});
}

void Engine::tick() {
  if (++steps_ > stepCap_) throw ConsistencyError("rewriting step cap exceeded");
}

void Engine::expandAt(std::size_t i) {
  const ULetter u = letter(i);
  notify(MoveKind::expand, i);
  auto pieces = expansionPieces(u.sub, u.sign);
  tokens_[i] = expansionPrefix(u.sub, u.sign);
  tokens_.insert(tokens_.begin() + static_cast<std::ptrdiff_t>(i) + 1, pieces.begin(), pieces.end());
}

void Engine::commute(std::size_t i) {
  if (!isLetter(i) || !isLetter(i + 1) || !incompatible(letter(i).sub, letter(i + 1).sub))
    throw ConsistencyError("commuting letters with compatible subscripts");
  notify(MoveKind::commute, i);
  std::swap(tokens_[i], tokens_[i + 1]);
}

void Engine::cancelPair(std::size_t i) {
  notify(MoveKind::cancel, i);
  tokens_.erase(tokens_.begin() + static_cast<std::ptrdiff_t>(i), tokens_.begin() + static_cast<std::ptrdiff_t>(i) + 2);
}

void Engine::pushLeft(std::size_t t) {
  while (true) {
    tick();
    const TreePair f = requireF(tokens_[t]);
    if (f.isIdentity()) {
      tokens_.erase(tokens_.begin() + static_cast<std::ptrdiff_t>(t));
      // Expansion prefixes left behind by this push are still pending.
      while (t > 0 && isLetter(t - 1)) --t;
      if (t == 0) return;
      --t;
      continue;
    }
    if (t == 0) {
      h_ = h_ * f;
      tokens_.erase(tokens_.begin());
      return;
    }
    if (!isLetter(t - 1)) {
      tokens_[t - 1] = requireF(tokens_[t - 1]) * f;
      tokens_.erase(tokens_.begin() + static_cast<std::ptrdiff_t>(t));
      --t;
      continue;
    }
    const ULetter u = letter(t - 1);
    if (auto img = f.actOnWord(u.sub)) {
      tokens_[t - 1] = f;
      tokens_[t] = ULetter{*img, u.sign};
      --t;
      continue;
    }
    expandAt(t - 1);
    t += 3;
  }
}

void Engine::pushAllF() {
  for (std::size_t t = 0; t < tokens_.size();) {
    if (isLetter(t)) {
      ++t;
      continue;
    }
    // Everything before t is letters; after the push the letter count there
    // may grow, so rescan from the start of the unprocessed tail.
    const std::size_t rest = tokens_.size() - t - 1;
    pushLeft(t);
    t = tokens_.size() - rest;
  }
}

void Engine::fixOrder() {
  while (true) {
    tick();
    bool found = false;
    for (std::size_t j = 0; j < tokens_.size() && !found; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (letter(i).sub.isProperPrefixOf(letter(j).sub)) {
          expandAt(i);
          pushLeft(i);
          found = true;
          break;
        }
      }
    }
    if (!found) return;
  }
}

void Engine::sortLex() {
  for (std::size_t j = 1; j < tokens_.size(); ++j) {
    for (std::size_t k = j; k > 0 && lexLess(letter(k).sub, letter(k - 1).sub); --k) {
      tick();
      commute(k - 1);
    }
  }
}

void Engine::cancelAdjacent() {
  std::size_t i = 0;
  while (i + 1 < tokens_.size()) {
    const auto& a = letter(i);
    const auto& b = letter(i + 1);
    if (a.sub == b.sub && a.sign == -b.sign) {
      cancelPair(i);
      if (i > 0) --i;
    } else {
      ++i;
    }
  }
}

bool Engine::removeCancellations() {
  bool changed = false;
  std::size_t p = 0;
  while (p < tokens_.size()) {
    tick();
    const ULetter cur = letter(p);
    std::ptrdiff_t opp = -1;
    bool same = false;
    for (std::size_t q = 0; q < p; ++q) {
      const auto& d = letter(q);
      if (d.sub == cur.sub) {
        if (d.sign != cur.sign) opp = static_cast<std::ptrdiff_t>(q);
        else same = true;
      } else if (d.sub.isProperPrefixOf(cur.sub)) {
        throw ConsistencyError("prefix letter ahead of insertion point");
      }
    }
    if (opp >= 0) {
      for (std::size_t k = p; k > static_cast<std::size_t>(opp) + 1; --k) commute(k - 1);
      cancelPair(static_cast<std::size_t>(opp));
      --p;
      changed = true;
      continue;
    }
    if (same) {
      ++p;
      continue;
    }
    bool flagged = false;
    for (std::size_t q = 0; q < p && !flagged; ++q) {
      const auto& d = letter(q);
      if (!cur.sub.isProperPrefixOf(d.sub)) continue;
      bool topLevel = true;
      for (std::size_t r = 0; r < p; ++r) {
        const auto& e = letter(r);
        if (cur.sub.isProperPrefixOf(e.sub) && e.sub.isProperPrefixOf(d.sub)) {
          topLevel = false;
          break;
        }
      }
      if (topLevel && pairPotentialCancellation(cur.sign, d.sub.dropPrefix(cur.sub.size()), d.sign)) flagged = true;
    }
    if (!flagged) {
      ++p;
      continue;
    }
    const std::size_t rest = tokens_.size() - p - 1;
    expandAt(p);
    pushLeft(p);
    p = tokens_.size() - rest - 3;
    changed = true;
  }
  return changed;
}

bool Engine::contractOnce() {
  sortLex();
  const YWord y = yWord();
  auto m = hasPotentialContraction(y);
  if (!m) return false;
  const BinaryWord& s = m->pivot;
  std::vector<ULetter> pat = m->pattern == 1 ? expansionPieces(s, 1) : expansionPieces(s, -1);
  // Last copies: the others are relabelled by the pushed prefix.
  auto lastOf = [&](const BinaryWord& w) {
    std::size_t idx = tokens_.size();
    for (std::size_t i = 0; i < tokens_.size(); ++i)
      if (letter(i).sub == w) idx = i;
    return idx;
  };
  std::size_t a = lastOf(pat[0].sub);
  std::size_t b = lastOf(pat[1].sub);
  const std::size_t c = lastOf(pat[2].sub);
  if (!(a < b && b < c && c < tokens_.size())) throw ConsistencyError("contraction triple out of order");
  while (a + 1 < b) {
    tick();
    commute(a);
    ++a;
  }
  while (b + 1 < c) {
    tick();
    commute(b);
    commute(a);
    ++a;
    ++b;
  }
  notify(MoveKind::contract, a);
  const int sign = m->pattern == 1 ? 1 : -1;
  tokens_[a] = expansionPrefix(s, sign).inverse();
  tokens_[a + 1] = ULetter{s, sign};
  tokens_.erase(tokens_.begin() + static_cast<std::ptrdiff_t>(a) + 2);
  pushLeft(a);
  return true;
}

void Engine::normalizeAll() {
  pushAllF();
  fixOrder();
  sortLex();
  cancelAdjacent();
  while (true) {
    tick();
    removeCancellations();
    sortLex();
    cancelAdjacent();
    if (!contractOnce()) break;
  }
}

YWord Engine::yWord() const {
  YWord out;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (!isLetter(i)) throw ConsistencyError("pending F-token in Y-part");
    const auto& u = letter(i);
    if (!out.empty() && out.back().sub == u.sub) {
      out.back().exp += u.sign;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back({u.sub, u.sign});
    }
  }
  return out;
}

GNormal Engine::result() const { return GNormal{h_, yWord()}; }

// ---- public entry points ----

StandardForm toStandardForm(const SWord& w) {
  Engine e;
  e.load(w);
  e.pushAllF();
  e.fixOrder();
  e.sortLex();
  return {e.prefix(), e.yWord()};
}

StandardForm removePotentialCancellations(const StandardForm& sf) {
  if (!isStandard(sf.y)) throw std::invalid_argument("input is not a standard form");
  Engine e;
  e.appendF(sf.f);
  for (const auto& l : sf.y)
    for (int k = 0; k < std::abs(l.exp); ++k) e.appendY(l.sub, l.exp > 0 ? 1 : -1);
  e.pushAllF();
  e.sortLex();
  e.cancelAdjacent();
  e.removeCancellations();
  e.sortLex();
  return {e.prefix(), e.yWord()};
}

GNormal normalize(const SWord& w) {
  Engine e;
  e.load(w);
  e.normalizeAll();
  return e.result();
}

GNormal multiply(const GNormal& a, const GNormal& b) {
  Engine e;
  e.appendF(a.f);
  for (const auto& l : a.y)
    for (int k = 0; k < std::abs(l.exp); ++k) e.appendY(l.sub, l.exp > 0 ? 1 : -1);
  e.appendF(b.f);
  for (const auto& l : b.y)
    for (int k = 0; k < std::abs(l.exp); ++k) e.appendY(l.sub, l.exp > 0 ? 1 : -1);
  e.normalizeAll();
  return e.result();
}

GNormal invertNormal(const GNormal& n) {
  Engine e;
  for (auto it = n.y.rbegin(); it != n.y.rend(); ++it)
    for (int k = 0; k < std::abs(it->exp); ++k) e.appendY(it->sub, it->exp > 0 ? -1 : 1);
  e.appendF(n.f.inverse());
  e.normalizeAll();
  return e.result();
}

bool equalWords(const SWord& a, const SWord& b) { return normalize(a) == normalize(b); }

}  // namespace lm
