#include "lm/calculus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace lm {

namespace {

std::size_t phase(const RationalSeq& r, std::size_t pos) {
  const std::size_t p = r.preperiod().size();
  return pos < p ? pos : p + (pos - p) % r.period().size();
}

// One step of the y^sign machine reading r at pos; returns the emitted chunk.
std::string machineStep(int& sign, const RationalSeq& r, std::size_t& pos) {
  const char c0 = r.digit(pos);
  if (sign > 0) {
    if (c0 == '1') {
      pos += 1;
      return "11";
    }
    const char c1 = r.digit(pos + 1);
    pos += 2;
    if (c1 == '0') return "0";
    sign = -1;
    return "10";
  }
  if (c0 == '0') {
    pos += 1;
    return "00";
  }
  const char c1 = r.digit(pos + 1);
  pos += 2;
  if (c1 == '1') return "1";
  sign = 1;
  return "01";
}

// Greedy consumption of a pending buffer by a symbol of the given sign.
void consume(int& sign, std::string& buf) {
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

// Can symbol A (sign a) with the given gap become adjacent, with opposite
// sign, to symbol B (sign b) reading the stream r?
bool pairCancels(int a, std::string gap, int b, const RationalSeq& r) {
  std::set<std::tuple<int, std::string, int, std::size_t>> seen;
  consume(a, gap);
  std::size_t pos = 0;
  while (true) {
    if (gap.empty() && a == -b) return true;
    if (!seen.emplace(a, gap, b, phase(r, pos)).second) return false;
    gap += machineStep(b, r, pos);
    consume(a, gap);
  }
}

}  // namespace

RationalSeq evalLetter(int sign, const RationalSeq& eta) {
  std::string out;
  std::map<std::pair<int, std::size_t>, std::size_t> seen;
  const std::size_t pre = eta.preperiod().size();
  std::size_t pos = 0;
  while (true) {
    if (pos >= pre) {
      auto key = std::make_pair(sign, phase(eta, pos));
      auto it = seen.find(key);
      if (it != seen.end()) return RationalSeq(out.substr(0, it->second), out.substr(it->second));
      seen.emplace(key, out.size());
    }
    out += machineStep(sign, eta, pos);
  }
}

RationalSeq evaluate(const SWord& w, const RationalSeq& xi) {
  RationalSeq cur = xi;
  for (const auto& l : w.letters()) {
    if (l.kind == Gen::x) {
      cur = xGen(l.sub).pow(l.exp).actOnSeq(cur);
    } else if (cur.startsWith(l.sub)) {
      RationalSeq tail = cur.shift(l.sub.size());
      for (int k = 0; k < std::abs(l.exp); ++k) tail = evalLetter(l.exp > 0 ? 1 : -1, tail);
      cur = tail.prepend(l.sub);
    }
  }
  return cur;
}

RationalSeq evaluate(const YWord& y, const RationalSeq& xi) { return evaluate(toSWord(y), xi); }

RationalSeq evaluate(const GNormal& g, const RationalSeq& xi) { return evaluate(g.y, g.f.actOnSeq(xi)); }

std::size_t CalcString::symbolCount() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const CalcEntry& e) { return e.symbol; }));
}

std::string CalcString::toString() const {
  std::string out;
  bool inDigits = false;
  for (const auto& e : entries) {
    if (e.symbol) {
      if (!out.empty()) out += ' ';
      out += e.sign > 0 ? "y" : "y^-1";
      inDigits = false;
    } else {
      if (!inDigits && !out.empty()) out += ' ';
      out += e.digit;
      inDigits = true;
    }
  }
  if (!out.empty()) out += ' ';
  return out + tail.toString();
}

CalcString calcString(const YWord& lambda, const RationalSeq& xi) {
  // (position, order key, sign); letters acting first sit to the right.
  std::vector<std::tuple<std::size_t, std::size_t, int>> symbols;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const auto& l = lambda[i];
    if (!xi.startsWith(l.sub)) continue;
    for (int k = 0; k < std::abs(l.exp); ++k) symbols.emplace_back(l.sub.size(), lambda.size() - i, l.exp > 0 ? 1 : -1);
  }
  std::stable_sort(symbols.begin(), symbols.end(), [](const auto& a, const auto& b) {
    return std::get<0>(a) < std::get<0>(b) || (std::get<0>(a) == std::get<0>(b) && std::get<1>(a) < std::get<1>(b));
  });
  CalcString c;
  std::size_t pos = 0;
  for (const auto& [p, order, sign] : symbols) {
    for (; pos < p; ++pos) c.entries.push_back({false, xi.digit(pos), 0});
    c.entries.push_back({true, 0, sign});
  }
  c.tail = xi.shift(pos);
  return c;
}

ExponentResult exponent(const CalcString& c) {
  // Split into symbols with the digit gaps that follow them.
  std::vector<int> signs;
  std::vector<std::string> gapAfter;
  for (const auto& e : c.entries) {
    if (e.symbol) {
      signs.push_back(e.sign);
      gapAfter.emplace_back();
    } else if (!gapAfter.empty()) {
      gapAfter.back() += e.digit;
    }
  }
  ExponentResult res;
  res.exponent = static_cast<int>(signs.size());
  if (signs.empty()) return res;
  // stream[j]: what symbol j reads, built from the right.
  std::vector<RationalSeq> stream(signs.size(), c.tail);
  const std::size_t k = signs.size();
  stream[k - 1] = c.tail.prepend(BinaryWord(gapAfter[k - 1]));
  for (std::size_t j = k - 1; j-- > 0;) {
    stream[j] = evalLetter(signs[j + 1], stream[j + 1]).prepend(BinaryWord(gapAfter[j]));
  }
  for (std::size_t j = 0; j + 1 < k; ++j) {
    if (pairCancels(signs[j], gapAfter[j], signs[j + 1], stream[j + 1])) {
      res.potentialCancellation = true;
      return res;
    }
  }
  return res;
}

ConeSet suppY(const YWord& y) {
  std::vector<BinaryWord> cones;
  for (const auto& l : y) cones.push_back(l.sub);
  return ConeSet(std::move(cones));
}

ConeSet suppY(const GNormal& g) { return suppY(g.y); }

}  // namespace lm
