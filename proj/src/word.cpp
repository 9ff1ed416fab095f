#include "lm/word.hpp"

#include <algorithm>

namespace lm {

SWord::SWord(const std::vector<Letter>& letters) {
  for (const auto& l : letters) push(l);
}

SWord& SWord::push(const Letter& l) {
  if (l.exp == 0) return *this;
  if (!letters_.empty() && letters_.back().kind == l.kind && letters_.back().sub == l.sub) {
    letters_.back().exp += l.exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return *this;
  }
  letters_.push_back(l);
  return *this;
}

SWord& SWord::append(const SWord& w) {
  for (const auto& l : w.letters_) push(l);
  return *this;
}

SWord SWord::inverse() const {
  SWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push({it->kind, it->sub, -it->exp});
  return out;
}

SWord SWord::fromTreePair(const TreePair& f) {
  SWord out;
  for (const auto& [s, e] : xWordOf(f)) out.push({Gen::x, s, e});
  return out;
}

SWord toSWord(const YWord& y) {
  SWord out;
  for (const auto& l : y) out.push({Gen::y, l.sub, l.exp});
  return out;
}

SWord toSWord(const GNormal& g) { return SWord::fromTreePair(g.f).append(toSWord(g.y)); }

}  // namespace lm
