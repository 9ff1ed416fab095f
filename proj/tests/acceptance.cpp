// One line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cluster_oracle.hpp"
#include "generators.hpp"
#include "lm/calculus.hpp"
#include "lm/cli.hpp"
#include "lm/complex.hpp"
#include "lm/pipeline.hpp"
#include "lm/rewrite.hpp"
#include "lm/special.hpp"
#include "oracle.hpp"

using namespace lm;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

BinaryWord W(const std::string& s) { return BinaryWord(s); }
SWord x(const BinaryWord& s, int e = 1) { return SWord::x(s, e); }
SWord y(const BinaryWord& s, int e = 1) { return SWord::y(s, e); }

// Every eventually periodic sequence with preperiod <= 6 and period <= 3.
std::vector<RationalSeq> allPoints() {
  std::set<RationalSeq> pts;
  for (const auto& pre : oracle::allWords(6, false))
    for (const auto& per : oracle::allWords(3, false))
      if (!per.empty()) pts.insert(RationalSeq(pre.str(), per.str()));
  return {pts.begin(), pts.end()};
}

// The fixed corpus for criteria 3 and 4.
std::vector<SWord> corpus() {
  std::mt19937 rng(2024);
  std::vector<SWord> out;
  for (int i = 0; i < 1000; ++i) out.push_back(oracle::randomSWord(rng, 8, 4));
  return out;
}

Verdict relations() {
  const auto pts = allPoints();
  const auto words = oracle::allWords(4, false);
  std::size_t instances = 0, bad = 0;
  std::string first;
  auto check = [&](const SWord& a, const SWord& b, const std::string& name) {
    ++instances;
    for (const auto& xi : pts)
      if (evaluate(a, xi) != evaluate(b, xi)) {
        if (!bad++) first = name + " at " + xi.toString();
        return;
      }
  };
  for (const auto& s : words) {
    check(x(s, 2), x(s + "0") * x(s) * x(s + "1"), "(2) s=" + s.str());
    for (const auto& t : words) {
      const auto img = xGen(s).actOnWord(t);
      if (img) {
        check(x(t) * x(s), x(s) * x(*img), "(1) s=" + s.str() + " t=" + t.str());
        if (!t.isConstant() && !img->isConstant()) check(y(t) * x(s), x(s) * y(*img), "(3) s=" + s.str() + " t=" + t.str());
      }
      if (!s.isConstant() && !t.isConstant() && incompatible(s, t)) check(y(s) * y(t), y(t) * y(s), "(4) s=" + s.str() + " t=" + t.str());
    }
    if (!s.isConstant()) check(y(s), x(s) * y(s + "0") * y(s + "10", -1) * y(s + "11"), "(5) s=" + s.str());
  }
  return {bad == 0, std::to_string(instances) + " instances on " + std::to_string(pts.size()) + " points" + (bad ? ", first failure " + first : "")};
}

Verdict calcExample() {
  const auto c = calcString(parseYWord("y[100]^-1 y[10]"), parseRational("1001(1)"));
  const auto e = exponent(c);
  const bool ok = c.toString() == "10 y 0 y^-1 (1)" && e.exponent == 2 && !e.potentialCancellation;
  return {ok, "\"" + c.toString() + "\", exponent " + std::to_string(e.exponent) + (e.potentialCancellation ? ", potential cancellation" : ", no potential cancellation")};
}

Verdict confluence(const std::vector<SWord>& ws) {
  std::mt19937 rng(7);
  std::size_t bad = 0, subs = 0;
  for (const auto& w : ws) {
    const GNormal n = normalize(w);
    if (normalize(toSWord(n)) != n) ++bad;
    SWord v = w;
    const int want = 1 + rng() % 5;
    for (int k = 0, done = 0; k < 60 && done < want; ++k)
      if (oracle::randomSubstitution(v, rng)) ++done, ++subs;
    if (normalize(v) != n) ++bad;
  }
  return {bad == 0, std::to_string(ws.size()) + " words, " + std::to_string(subs) + " substitutions, " + std::to_string(bad) + " mismatches"};
}

Verdict oracleAgreement(const std::vector<SWord>& ws) {
  std::mt19937 rng(8);
  std::size_t bad = 0, checks = 0;
  for (const auto& w : ws) {
    const SWord rendered = parseWord(renderWord(toSWord(normalize(w))));
    for (int k = 0; k < 20; ++k) {
      const auto xi = oracle::randomSeq(rng);
      ++checks;
      const auto got = evaluate(rendered, xi);
      if (evaluate(w, xi) != got) {
        ++bad;
        continue;
      }
      // The prefix oracle shares no code with evaluate.
      const std::string want = oracle::evalPrefix(w, oracle::unroll(xi, 96));
      if (oracle::unroll(got, want.size()) != want) ++bad;
    }
  }
  return {bad == 0, std::to_string(checks) + " evaluations, " + std::to_string(bad) + " disagreements"};
}

Verdict inverses(const std::vector<SWord>& ws) {
  std::size_t bad = 0;
  std::string first;
  for (const std::string s : {"10", "01", "100"}) {
    const BinaryWord b = W(s);
    const auto s0 = b + "0", s1 = b + "1";
    struct Case {
      SWord word;   // y_u^v y_s^t
      SWord image;  // its inverse after expanding y_s^-t
    };
    // y_{s0}^{+-1} y_s and the mirror pair y_{s1}^{+-1} y_s^-1, inverses written out by hand.
    const std::vector<Case> cases{
        {y(s0) * y(b), x(b, -1) * y(b + "00", -1) * y(b + "01") * y(s1, -1) * y(s0, -1)},
        {y(s0, -1) * y(b), x(b, -1) * y(b + "00", -1) * y(b + "01") * y(s1, -1) * y(s0)},
        {y(s1) * y(b, -1), x(b) * y(s0) * y(b + "10", -1) * y(b + "11") * y(s1, -1)},
        {y(s1, -1) * y(b, -1), x(b) * y(s0) * y(b + "10", -1) * y(b + "11") * y(s1)},
    };
    for (std::size_t k = 0; k < cases.size(); ++k) {
      const auto& c = cases[k];
      const GNormal n = normalize(c.word);
      const StandardForm sf = toStandardForm(c.image);
      const bool ok = invertNormal(n) == normalize(c.image) && isStandard(sf.y) && !hasPotentialCancellation(sf.y) &&
                      normalize(c.word * c.image).isIdentity();
      if (!ok && !bad++) first = "case " + std::to_string(k + 1) + " at s=" + s;
    }
  }
  std::size_t idBad = 0;
  for (const auto& w : ws)
    if (!normalize(w * w.inverse()).isIdentity() || !normalize(w * toSWord(invertNormal(normalize(w)))).isIdentity()) ++idBad;
  return {bad == 0 && idBad == 0, "12 symbolic cases" + (bad ? " (failed: " + first + ")" : std::string()) + ", w w^-1 trivial on " +
                                        std::to_string(ws.size() - idBad) + "/" + std::to_string(ws.size())};
}

Verdict pairAutomaton() {
  std::size_t pairs = 0, bad = 0;
  const auto words = oracle::allWords(5, true);
  for (const auto& s : words)
    for (const auto& u : words) {
      if (!s.isProperPrefixOf(u)) continue;
      const std::string gap = u.str().substr(s.size());
      for (int t : {1, -1})
        for (int v : {1, -1}) {
          ++pairs;
          if (pairPotentialCancellation(s, t, u, v) != oracle::bruteForcePairCancels(t, gap, v, 8)) ++bad;
        }
    }
  return {bad == 0 && pairs > 0, std::to_string(pairs) + " neighbouring pairs, " + std::to_string(bad) + " disagreements"};
}

Verdict specialCalculus() {
  std::mt19937 rng(9);
  auto expandRandomly = [&](YWord s, int steps) {
    for (int k = 0; k < steps; ++k) s = expandAt(s, rng() % s.size());
    return s;
  };
  std::size_t bad = 0;
  for (int i = 0; i < 500; ++i) {
    const auto m = minimalForm(expandRandomly(oracle::randomSpecial(rng), 3));
    if (minimalForm(m) != m) ++bad;
  }
  std::size_t agree = 0;
  for (int i = 0; i < 500; ++i) {
    const auto s = oracle::randomSpecial(rng);
    const auto a = expandRandomly(s, 2);
    const auto b = (i % 2) ? expandRandomly(s, 2) : expandRandomly(oracle::randomSpecial(rng), 1);
    // Same coset iff a b^-1 lies in F.
    const bool cosets = minimalForm(a) == minimalForm(b);
    if (cosets == normalize(toSWord(a) * toSWord(b).inverse()).y.empty()) ++agree;
  }
  std::map<std::pair<int, int>, std::vector<YWord>> byClass;
  for (int i = 0; i < 400; ++i) {
    auto s = oracle::randomSpecial(rng);
    byClass[{specialType(s), specialParity(s)}].push_back(s);
  }
  std::size_t carriers = 0;
  for (auto& [key, forms] : byClass)
    for (std::size_t k = 0; k + 1 < forms.size() && k < 25; ++k) {
      const auto f = findCarrier({forms[k]}, {forms[k + 1]});
      if (f && minimalForm(actF(forms[k], *f)) == minimalForm(forms[k + 1])) ++carriers;
      else ++bad;
    }
  // Different classes are never carried to each other.
  std::vector<YWord> reps;
  for (auto& [key, forms] : byClass) reps.push_back(forms.front());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (i != j && findCarrier({reps[i]}, {reps[j]})) ++bad;
  return {bad == 0 && agree == 500 && byClass.size() == 4,
          "minimal forms idempotent, coset test agrees " + std::to_string(agree) + "/500, " + std::to_string(byClass.size()) + " orbit classes, " +
              std::to_string(carriers) + " carriers found"};
}

Verdict clusterCombinatorics() {
  auto Y1 = [](const char* s, int e) { return YWord{{W(s), e}}; };
  const Cluster consecutive{GNormal{}, {Y1("01", 1), Y1("10", -1)}};
  const Cluster plain{GNormal{}, {Y1("01", 1), Y1("110", 1)}};
  const Cluster cube{GNormal{}, {Y1("01", 1), Y1("100", -1), Y1("101", 1)}};
  const auto a = enumerateCells(consecutive), b = enumerateCells(plain), c = enumerateCells(cube);
  bool ok = a.fVector() == std::vector<std::size_t>{4, 5, 2} && b.fVector() == std::vector<std::size_t>{4, 4, 1} && c.fVector()[0] == 8 &&
            c.fVector()[1] == 17 && c.euler() == 1;
  std::mt19937 rng(10);
  std::size_t euler = 0, threePow = 0, diagFree = 0;
  for (int it = 0; it < 150; ++it) {
    const Cluster k = gen::randomCluster(rng, 1 + it % 3, it % 2);
    const auto piece = enumerateCells(k);
    if (piece.euler() == 1) ++euler;
    if (aDelta(k).size() == k.dim()) {
      ++diagFree;
      std::size_t p = 1;
      for (std::size_t i = 0; i < k.dim(); ++i) p *= 3;
      if (piece.totalFaces() == p) ++threePow;
    }
  }
  ok = ok && euler == 150 && threePow == diagFree && diagFree > 0;
  std::ostringstream os;
  os << "f-vectors (4,5,2) (4,4,1), 3-cluster " << c.fVector()[0] << " vertices " << c.fVector()[1] << " edges chi " << c.euler() << "; chi=1 on "
     << euler << "/150; 3^n faces on " << threePow << "/" << diagFree << " diagonal-free";
  return {ok, os.str()};
}

// Special forms over nonconstant subscripts of length <= depth, at most len letters.
std::vector<YWord> smallSpecialForms(std::size_t depth, std::size_t len) {
  std::vector<YWord> out;
  const auto words = oracle::allWords(depth, true);
  std::function<void(YWord)> grow = [&](YWord s) {
    out.push_back(s);
    if (s.size() == len) return;
    for (const auto& w : words)
      if (consecutiveLeaves(s.back().sub, w)) {
        auto t = s;
        t.push_back({w, -s.back().exp});
        grow(t);
      }
  };
  for (const auto& w : words)
    for (int e : {1, -1}) grow({{w, e}});
  return out;
}

Verdict orbitCounts() {
  const auto forms = smallSpecialForms(4, 2);
  std::vector<std::size_t> counts;
  bool mapsOk = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::map<OrbitInvariant, Cluster> seen;
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (idx.size() == n) {
        Cluster c{GNormal{}, {}};
        for (auto i : idx) c.params.push_back(forms[i]);
        std::sort(c.params.begin(), c.params.end(), [](const YWord& a, const YWord& b) { return lexLess(a.front().sub, b.front().sub); });
        auto [pos, fresh] = seen.emplace(clusterOrbitInvariant(c), c);
        // Spot check that equal invariants are one orbit.
        if (!fresh && seen.size() % 3 == 0 && idx.front() % 97 == 0) {
          auto g = findClusterMap(pos->second, c);
          if (!g || !sameCluster(actG(pos->second, *g), c)) mapsOk = false;
        }
        return;
      }
      for (std::size_t i = from; i < forms.size(); ++i) {
        bool ok = true;
        for (auto j : idx)
          if (!independent(forms[i], forms[j])) ok = false;
        if (!ok) continue;
        idx.push_back(i);
        rec(i + 1);
        idx.pop_back();
      }
    };
    rec(0);
    counts.push_back(seen.size());
  }
  const bool ok = counts == std::vector<std::size_t>{2, 8, 32} && mapsOk;
  return {ok, std::to_string(forms.size()) + " small special forms; invariants realized: " + std::to_string(counts[0]) + ", " + std::to_string(counts[1]) +
                  ", " + std::to_string(counts[2]) + (mapsOk ? "" : "; an orbit map failed")};
}

Verdict intersections() {
  std::mt19937 rng(11);
  std::size_t bad = 0, nonempty = 0;
  for (int it = 0; it < 200; ++it) {
    const Cluster a = gen::randomCluster(rng, 1 + it % 3, it % 2);
    const Cluster b = gen::overlapping(rng, a);
    const auto meet = oracle::bruteMeet(a, b);
    const auto got = intersectClusters(a, b);
    if (got.has_value() != !meet.vertices.empty()) {
      ++bad;
      continue;
    }
    if (!got) continue;
    ++nonempty;
    const auto g = oracle::graphOf(*got);
    try {
      validateCluster(*got);
      buildCluster(*got);
    } catch (const std::exception&) {
      ++bad;
      continue;
    }
    if (g.vertices != meet.vertices || g.edges != meet.edges) ++bad;
  }
  return {bad == 0 && nonempty > 0, std::to_string(nonempty) + " nonempty meets of 200 pairs, " + std::to_string(bad) + " mismatches"};
}

Verdict pipeline() {
  std::mt19937 rng(12);
  std::size_t ok = 0;
  std::string first;
  for (int it = 0; it < 50; ++it) {
    const auto Y = gen::randomSubcomplex(rng, 5);
    try {
      const auto env = envelope(Y, 8);
      const bool good = env.status == EnvelopeStatus::converged && !env.rounds.empty() && env.rounds.back().balancedAfterSeparation &&
                        env.rounds.back().freeAfterDecoupling && env.complex.facial && env.complex.flag() && env.contained;
      if (good) ++ok;
      else if (first.empty()) first = "instance " + std::to_string(it);
    } catch (const std::exception& e) {
      if (first.empty()) first = "instance " + std::to_string(it) + ": " + e.what();
    }
  }
  return {ok == 50, std::to_string(ok) + "/50 subcomplexes enveloped" + (first.empty() ? "" : ", first failure " + first)};
}

Verdict loops() {
  std::mt19937 rng(13);
  std::size_t ok = 0, moves = 0;
  for (int it = 0; it < 100; ++it) {
    const auto loop = oracle::randomLoop(rng, 12);
    const auto cert = contractLoop(loop, true);
    moves += cert.steps.size();
    if (checkCertificate(cert).ok) ++ok;
  }
  return {ok == 100, std::to_string(ok) + "/100 certificates verified, " + std::to_string(moves) + " moves"};
}

}  // namespace

int main() {
  const auto ws = corpus();
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"relation soundness", relations},
      {"calculation example", calcExample},
      {"normal form confluence and idempotence", [&] { return confluence(ws); }},
      {"oracle agreement", [&] { return oracleAgreement(ws); }},
      {"inverse normal forms", [&] { return inverses(ws); }},
      {"pair-cancellation automaton", pairAutomaton},
      {"special-form calculus", specialCalculus},
      {"cluster combinatorics", clusterCombinatorics},
      {"orbit counts", orbitCounts},
      {"cluster intersection", intersections},
      {"pipeline end-to-end", pipeline},
      {"loop contraction", loops},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.pass) ++failures;
    std::printf("%s %2zu %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures;
}
