#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lm/binseq.hpp"
#include "lm/complex.hpp"
#include "lm/pipeline.hpp"
#include "lm/word.hpp"

namespace lm {

// Malformed text. pos is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& what);
  std::size_t pos() const { return pos_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t pos_;
  std::string detail_;
};

// Well-formed text naming something outside the domain, e.g. y[11].
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// word := ws* (term ws*)* ; term := ("x"|"y") "[" bits "]" ("^" int)?
SWord parseWord(std::string_view text);
// Terms separated by single spaces, "^1" dropped. The empty word renders as "".
std::string renderWord(const SWord& w);

// A word with y-letters only.
YWord parseYWord(std::string_view text);
std::string renderYWord(const YWord& y);

RationalSeq parseRational(std::string_view text);

// "identity", or the tree pair followed by the Y-part; either may be absent.
std::string renderNormal(const GNormal& g);

// Vertex names: "F" for the trivial coset, otherwise the Y-word.
std::string renderVertex(const CosetVertex& v);
CosetVertex parseVertex(std::string_view text);

// One cluster per line: base word, then parameters, separated by '|'.
// Blank lines and lines starting with '#' are skipped.
std::string renderClusterLine(const Cluster& c);
Cluster parseClusterLine(std::string_view line);
std::string exportComplex(const std::vector<Cluster>& clusters);
std::vector<Cluster> importComplex(std::string_view text);

// One vertex per line.
std::vector<CosetVertex> importVertexList(std::string_view text);
std::string exportVertexList(const std::vector<CosetVertex>& vs);

std::string exportCertificate(const LoopCertificate& cert);

}  // namespace lm
