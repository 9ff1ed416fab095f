#pragma once

#include <string>
#include <vector>

#include "lm/binseq.hpp"
#include "lm/word.hpp"

namespace lm {

// y (sign +1) or y^-1 (sign -1) applied to a whole sequence.
RationalSeq evalLetter(int sign, const RationalSeq& eta);

// Right action: letters act left to right.
RationalSeq evaluate(const SWord& w, const RationalSeq& xi);
RationalSeq evaluate(const GNormal& g, const RationalSeq& xi);
RationalSeq evaluate(const YWord& y, const RationalSeq& xi);

struct CalcEntry {
  bool symbol;
  char digit;  // '0' or '1' when !symbol
  int sign;    // +1 or -1 when symbol
  bool operator==(const CalcEntry&) const = default;
};

struct CalcString {
  std::vector<CalcEntry> entries;
  RationalSeq tail{"", "0"};

  std::size_t symbolCount() const;
  // Digit runs, "y" and "y^-1" tokens and the tail, separated by spaces.
  std::string toString() const;
};

CalcString calcString(const YWord& lambda, const RationalSeq& xi);

struct ExponentResult {
  bool potentialCancellation = false;
  int exponent = 0;
};

// Runs the substitutions on the concrete calculation and reports whether
// some adjacent pair of symbols can become y y^-1 or y^-1 y.
ExponentResult exponent(const CalcString& c);

ConeSet suppY(const YWord& y);
ConeSet suppY(const GNormal& g);

}  // namespace lm
