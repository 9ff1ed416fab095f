#pragma once

#include <optional>
#include <vector>

#include "lm/binseq.hpp"
#include "lm/thompson.hpp"
#include "lm/word.hpp"

namespace lm {

// Special forms are Y-words with unit exponents; these helpers take YWord.
using SpecialForm = YWord;

// a = w01^i and b = w10^j: no leaf of any tree fits between them.
bool consecutiveLeaves(const BinaryWord& a, const BinaryWord& b);

bool isSpecial(const YWord& y);
int specialType(const SpecialForm& s);    // 1 if the first sign is negative, else 2
int specialParity(const SpecialForm& s);  // length mod 2

SpecialForm expandAt(const SpecialForm& s, std::size_t i);
SpecialForm contractAt(const SpecialForm& s, std::size_t i);
bool contractibleAt(const SpecialForm& s, std::size_t i);
SpecialForm minimalForm(const SpecialForm& s);

// Inverse element written as a special form (signs flipped).
SpecialForm inverseForm(const SpecialForm& s);

bool independent(const SpecialForm& a, const SpecialForm& b);

struct ListChecks {
  bool sorted = false;
  bool consecutive = false;
  bool alternating = false;
};
ListChecks listChecks(const std::vector<SpecialForm>& list);
// Pairwise consecutiveness of neighbours in a sorted list.
std::vector<bool> consecutivePattern(const std::vector<SpecialForm>& list);
bool productIsSpecial(const std::vector<SpecialForm>& list);
SpecialForm concat(const std::vector<SpecialForm>& list);

// Expands until f acts on every subscript, then maps them.
SpecialForm actF(const SpecialForm& s, const TreePair& f);
bool stabilizesCoset(const TreePair& f, const SpecialForm& s);

// f in F with F(from_i)·f = F(to_i) for every i, when one exists.
std::optional<TreePair> findCarrier(const std::vector<SpecialForm>& from, const std::vector<SpecialForm>& to);

// Do some expansions of the two letters share a letter?
bool lettersOverlap(const BinaryWord& s, int t, const BinaryWord& u, int v);
bool cancellationFree(const YWord& a, const YWord& b);

}  // namespace lm
