#include "lm/cli.hpp"

#include <cctype>
#include <sstream>

#include "lm/rewrite.hpp"

namespace lm {

ParseError::ParseError(std::size_t pos, const std::string& what)
    : std::runtime_error("parse error at " + std::to_string(pos) + ": " + what), pos_(pos), detail_(what) {}

namespace {

bool isWs(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

class Scanner {
 public:
  Scanner(std::string_view text, std::size_t offset) : s_(text), off_(offset) {}

  void skipWs() {
    while (i_ < s_.size() && isWs(s_[i_])) ++i_;
  }
  bool done() const { return i_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[i_]; }
  std::size_t pos() const { return off_ + i_; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  std::string bits() {
    std::string out;
    while (peek() == '0' || peek() == '1') out += s_[i_++];
    return out;
  }
  int integer() {
    const std::size_t start = pos();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[i_++] - '0');
      if (v > 1000000) throw ParseError(start, "exponent out of range");
    }
    return static_cast<int>(neg ? -v : v);
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos(), what); }

 private:
  std::string_view s_;
  std::size_t off_;
  std::size_t i_ = 0;
};

SWord parseWordAt(std::string_view text, std::size_t offset) {
  Scanner sc(text, offset);
  SWord w;
  sc.skipWs();
  while (!sc.done()) {
    const std::size_t start = sc.pos();
    const char g = sc.peek();
    if (g != 'x' && g != 'y') sc.fail("expected 'x' or 'y'");
    sc.expect(g);
    sc.expect('[');
    const BinaryWord sub(sc.bits());
    sc.expect(']');
    int e = 1;
    if (sc.peek() == '^') {
      sc.expect('^');
      e = sc.integer();
    }
    if (g == 'y' && sub.isConstant())
      throw DomainError("y[" + sub.str() + "] at " + std::to_string(start) + ": y subscripts must be nonconstant");
    w.push({g == 'x' ? Gen::x : Gen::y, sub, e});
    sc.skipWs();
  }
  return w;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && isWs(s[a])) ++a;
  while (b > a && isWs(s[b - 1])) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string_view> contentLines(std::string_view text, std::vector<std::size_t>& offsets) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    const auto t = trim(line);
    if (!t.empty() && t.front() != '#') {
      out.push_back(line);
      offsets.push_back(start);
    }
    start = end + 1;
  }
  return out;
}

}  // namespace

SWord parseWord(std::string_view text) { return parseWordAt(text, 0); }

std::string renderWord(const SWord& w) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += (l.kind == Gen::x ? "x[" : "y[") + l.sub.str() + "]";
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

YWord parseYWord(std::string_view text) {
  YWord y;
  const SWord w = parseWord(text);
  for (const auto& l : w.letters()) {
    if (l.kind != Gen::y) throw DomainError("expected a word in the y generators only");
    // Unit letters, so y[10]^2 becomes y[10] y[10].
    for (int k = 0; k < std::abs(l.exp); ++k) y.push_back({l.sub, l.exp > 0 ? 1 : -1});
  }
  return y;
}

std::string renderYWord(const YWord& y) { return renderWord(toSWord(y)); }

RationalSeq parseRational(std::string_view text) {
  const auto t = trim(text);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] != '0' && t[i] != '1' && t[i] != '(' && t[i] != ')') throw ParseError(i, "unexpected character in rational sequence");
  auto r = RationalSeq::parse(t);
  if (!r) throw ParseError(t.find('(') == std::string::npos ? t.size() : t.find('('), "expected bits(bits+)");
  return *r;
}

std::string renderNormal(const GNormal& g) {
  if (g.isIdentity()) return "identity";
  std::string out = g.f.isIdentity() ? "" : g.f.toString();
  if (!g.y.empty()) out += (out.empty() ? "" : " ") + renderYWord(g.y);
  return out;
}

std::string renderVertex(const CosetVertex& v) { return v.empty() ? "F" : renderYWord(v); }

CosetVertex parseVertex(std::string_view text) {
  const auto t = trim(text);
  if (t == "F") return {};
  return vertexOf(parseWord(t));
}

std::string renderClusterLine(const Cluster& c) {
  std::string out = c.basepoint.isIdentity() ? "F" : renderWord(toSWord(c.basepoint));
  for (const auto& p : c.params) out += " | " + renderYWord(p);
  return out;
}

Cluster parseClusterLine(std::string_view line) {
  std::vector<std::pair<std::string_view, std::size_t>> fields;
  std::size_t start = 0;
  while (true) {
    const auto bar = line.find('|', start);
    fields.push_back({line.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start), start});
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  Cluster c;
  const auto base = trim(fields[0].first);
  c.basepoint = base == "F" ? GNormal{} : normalize(parseWordAt(fields[0].first, fields[0].second));
  for (std::size_t i = 1; i < fields.size(); ++i) {
    YWord p;
    const SWord w = parseWordAt(fields[i].first, fields[i].second);
    for (const auto& l : w.letters()) {
      if (l.kind != Gen::y) throw DomainError("cluster parameters must be y-words");
      for (int k = 0; k < std::abs(l.exp); ++k) p.push_back({l.sub, l.exp > 0 ? 1 : -1});
    }
    if (p.empty()) throw ParseError(fields[i].second, "empty parameter");
    c.params.push_back(std::move(p));
  }
  validateCluster(c);
  return c;
}

std::string exportComplex(const std::vector<Cluster>& clusters) {
  std::string out;
  for (const auto& c : clusters) out += renderClusterLine(c) + "\n";
  return out;
}

std::vector<Cluster> importComplex(std::string_view text) {
  std::vector<std::size_t> offsets;
  const auto lines = contentLines(text, offsets);
  std::vector<Cluster> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      out.push_back(parseClusterLine(lines[i]));
    } catch (const ParseError& e) {
      throw ParseError(offsets[i] + e.pos(), e.detail() + " (line " + std::to_string(i + 1) + ")");
    }
  }
  return out;
}

std::vector<CosetVertex> importVertexList(std::string_view text) {
  std::vector<std::size_t> offsets;
  const auto lines = contentLines(text, offsets);
  std::vector<CosetVertex> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      out.push_back(parseVertex(lines[i]));
    } catch (const ParseError& e) {
      throw ParseError(offsets[i] + e.pos(), e.detail() + " (line " + std::to_string(i + 1) + ")");
    }
  }
  return out;
}

std::string exportVertexList(const std::vector<CosetVertex>& vs) {
  std::string out;
  for (const auto& v : vs) out += renderVertex(v) + "\n";
  return out;
}

std::string exportCertificate(const LoopCertificate& cert) {
  std::ostringstream os;
  os << "loop " << cert.loop.size() << "\n";
  for (const auto& v : cert.loop) os << "  " << renderVertex(v) << "\n";
  os << "steps " << cert.steps.size() << "\n";
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const auto& s = cert.steps[k];
    os << "step " << k << " " << toString(s.kind) << " at " << s.start << " replaces " << s.oldLen << " by";
    for (const auto& v : s.replacement) os << " [" << renderVertex(v) << "]";
    os << "\n  in " << renderClusterLine(s.witness) << "\n";
  }
  return os.str();
}

}  // namespace lm
