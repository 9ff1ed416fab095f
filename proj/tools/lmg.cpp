#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "lm/calculus.hpp"
#include "lm/cli.hpp"
#include "lm/complex.hpp"
#include "lm/pipeline.hpp"
#include "lm/rewrite.hpp"
#include "lm/special.hpp"

using namespace lm;
using nlohmann::json;

namespace {

enum Exit { ok = 0, parseFailure = 1, domainFailure = 2, consistencyFailure = 3 };

struct Options {
  std::size_t maxDim = 4;
  std::size_t maxIters = 8;
  std::uint32_t seed = 1;
  bool cells = false;
  bool asJson = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RationalSeq randomPoint(std::mt19937& rng) {
  auto bits = [&](std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += (rng() & 1) ? '1' : '0';
    return s;
  };
  return RationalSeq(bits(rng() % 7), bits(1 + rng() % 3));
}

Cluster clusterFromArgs(const std::string& base, const std::vector<std::string>& params, std::size_t maxDim) {
  std::string line = base.empty() ? "F" : base;
  for (const auto& p : params) line += " | " + p;
  Cluster c = parseClusterLine(line);
  if (c.dim() > maxDim) throw DomainError("cluster dimension " + std::to_string(c.dim()) + " exceeds --max-dim");
  return c;
}

int cmdNormalize(const std::string& w) {
  std::cout << renderNormal(normalize(parseWord(w))) << "\n";
  return ok;
}

int cmdEqual(const std::string& a, const std::string& b, const Options& o) {
  const SWord wa = parseWord(a), wb = parseWord(b);
  const bool same = normalize(wa) == normalize(wb);
  if (same) {
    // Cross-check the symbolic answer on sample points.
    std::mt19937 rng(o.seed);
    for (int k = 0; k < 20; ++k) {
      const auto xi = randomPoint(rng);
      if (evaluate(wa, xi) != evaluate(wb, xi)) {
        std::cerr << "normal forms agree but the words differ at " << xi.toString() << "\n";
        return consistencyFailure;
      }
    }
  }
  std::cout << (same ? "equal" : "distinct") << "\n";
  return ok;
}

int cmdEval(const std::string& w, const std::string& r) {
  std::cout << evaluate(parseWord(w), parseRational(r)).toString() << "\n";
  return ok;
}

int cmdCalc(const std::string& w, const std::string& r) {
  const auto c = calcString(parseYWord(w), parseRational(r));
  const auto e = exponent(c);
  std::cout << c.toString() << "\n";
  std::cout << "potential-cancellation " << (e.potentialCancellation ? "yes" : "no") << "\n";
  if (!e.potentialCancellation) std::cout << "exponent " << e.exponent << "\n";
  return ok;
}

int cmdSupport(const std::string& w) {
  const auto g = normalize(parseWord(w));
  std::cout << "supp_Y " << suppY(g).toString() << "\n";
  std::cout << "supp_F " << g.f.support().toString() << "\n";
  return ok;
}

int cmdSpecial(const std::string& w) {
  const auto y = parseYWord(w);
  const bool s = isSpecial(y);
  std::cout << "special " << (s ? "yes" : "no") << "\n";
  if (s) {
    std::cout << "type " << specialType(y) << "\n";
    std::cout << "parity " << specialParity(y) << "\n";
    std::cout << "minimal " << renderYWord(minimalForm(y)) << "\n";
  }
  return ok;
}

int cmdCluster(const std::string& base, const std::vector<std::string>& params, const Options& o) {
  const Cluster c = clusterFromArgs(base, params, o.maxDim);
  const auto g = buildCluster(c);
  std::cout << "vertices " << g.vertices.size() << "\n";
  for (std::size_t m = 0; m < g.vertices.size(); ++m) std::cout << "  " << m << " " << renderVertex(g.vertices[m]) << "\n";
  std::cout << "edges " << g.edges.size() << "\n";
  for (auto [a, b] : g.edges) std::cout << "  " << a << " " << b << "\n";
  if (o.cells) {
    const auto piece = enumerateCells(c, o.maxDim);
    std::cout << "f-vector";
    for (auto n : piece.fVector()) std::cout << " " << n;
    std::cout << "\neuler " << piece.euler() << "\n";
  }
  return ok;
}

int cmdIntersect(const std::string& a, const std::string& b, const Options& o) {
  const Cluster ca = parseClusterLine(a), cb = parseClusterLine(b);
  if (ca.dim() > o.maxDim || cb.dim() > o.maxDim) throw DomainError("cluster dimension exceeds --max-dim");
  const auto m = intersectClusters(ca, cb);
  if (!m) {
    std::cout << "empty\n";
    return ok;
  }
  std::cout << renderClusterLine(*m) << "\n";
  std::cout << "in-first " << toString(subclusterType(*m, ca)) << "\n";
  std::cout << "in-second " << toString(subclusterType(*m, cb)) << "\n";
  return ok;
}

int cmdCubulate(const std::string& path, const Options& o) {
  const auto Y = importComplex(readFile(path));
  for (const auto& c : Y)
    if (c.dim() > o.maxDim) throw DomainError("cluster dimension exceeds --max-dim");
  const auto env = envelope(Y, o.maxIters);
  const bool converged = env.status == EnvelopeStatus::converged;
  if (o.asJson) {
    json j;
    j["status"] = converged ? "converged" : "non-convergence";
    j["rounds"] = json::array();
    for (const auto& r : env.rounds) j["rounds"].push_back({{"balanced", r.balancedAfterSeparation}, {"free", r.freeAfterDecoupling}});
    j["clusters"] = json::array();
    for (const auto& c : env.complex.clusters) j["clusters"].push_back(renderClusterLine(c));
    j["facial"] = env.complex.facial;
    j["flag"] = json::object();
    for (const auto& [v, chk] : env.complex.flagReport) j["flag"][renderVertex(v)] = chk.flag;
    j["contained"] = env.contained;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "status " << (converged ? "converged" : "non-convergence") << "\n";
    std::cout << "rounds " << env.rounds.size() << "\n";
    std::cout << "clusters " << env.complex.clusters.size() << "\n";
    std::cout << exportComplex(env.complex.clusters);
    std::cout << "facial " << (env.complex.facial ? "yes" : "no") << "\n";
    for (const auto& [v, chk] : env.complex.flagReport) std::cout << "flag " << (chk.flag ? "pass " : "fail ") << renderVertex(v) << "\n";
    std::cout << "contained " << (env.contained ? "yes" : "no") << "\n";
  }
  if (!converged) {
    std::cerr << "no free system within " << o.maxIters << " rounds\n";
    return consistencyFailure;
  }
  return env.contained && env.complex.flag() ? ok : consistencyFailure;
}

int cmdContractLoop(const std::string& path, const Options& o) {
  const auto loop = importVertexList(readFile(path));
  const auto cert = contractLoop(loop);
  const auto chk = checkCertificate(cert);
  if (o.asJson) {
    json j;
    for (const auto& v : cert.loop) j["loop"].push_back(renderVertex(v));
    j["steps"] = json::array();
    for (const auto& s : cert.steps) {
      json r = json::array();
      for (const auto& v : s.replacement) r.push_back(renderVertex(v));
      j["steps"].push_back({{"kind", toString(s.kind)}, {"start", s.start}, {"oldLen", s.oldLen}, {"replacement", r}, {"witness", renderClusterLine(s.witness)}});
    }
    j["check"] = chk.ok ? "ok" : chk.reason;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << exportCertificate(cert);
    if (chk.ok)
      std::cout << "check ok\n";
    else
      std::cout << "check failed at step " << chk.failedStep << ": " << chk.reason << "\n";
  }
  return chk.ok ? ok : consistencyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms, clusters and cubulation for the group G generated by x_s and y_s"};
  Options o;
  app.add_option("--max-dim", o.maxDim, "Largest cluster dimension accepted")->capture_default_str();
  app.add_option("--max-iters", o.maxIters, "Round cap for cubulate")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for sampled cross-checks")->capture_default_str();
  app.require_subcommand(1);

  std::string w1, w2, r, base, path;
  std::vector<std::string> params;
  std::function<int()> run;

  auto* normalizeCmd = app.add_subcommand("normalize", "Print the normal form of a word")->fallthrough();
  normalizeCmd->add_option("word", w1)->required();
  normalizeCmd->callback([&] { run = [&] { return cmdNormalize(w1); }; });

  auto* equalCmd = app.add_subcommand("equal", "Decide whether two words are equal")->fallthrough();
  equalCmd->add_option("a", w1)->required();
  equalCmd->add_option("b", w2)->required();
  equalCmd->callback([&] { run = [&] { return cmdEqual(w1, w2, o); }; });

  auto* evalCmd = app.add_subcommand("eval", "Apply a word to a rational sequence")->fallthrough();
  evalCmd->add_option("word", w1)->required();
  evalCmd->add_option("rational", r)->required();
  evalCmd->callback([&] { run = [&] { return cmdEval(w1, r); }; });

  auto* calcCmd = app.add_subcommand("calc", "Calculation string of a y-word at a rational sequence")->fallthrough();
  calcCmd->add_option("yword", w1)->required();
  calcCmd->add_option("rational", r)->required();
  calcCmd->callback([&] { run = [&] { return cmdCalc(w1, r); }; });

  auto* supportCmd = app.add_subcommand("support", "Supports of a word's normal form")->fallthrough();
  supportCmd->add_option("word", w1)->required();
  supportCmd->callback([&] { run = [&] { return cmdSupport(w1); }; });

  auto* specialCmd = app.add_subcommand("special", "Special-form data of a y-word")->fallthrough();
  specialCmd->add_option("yword", w1)->required();
  specialCmd->callback([&] { run = [&] { return cmdSpecial(w1); }; });

  auto* clusterCmd = app.add_subcommand("cluster", "Vertices and edges of a cluster")->fallthrough();
  clusterCmd->add_option("base", base)->required();
  clusterCmd->add_option("params", params);
  clusterCmd->add_flag("--cells", o.cells, "Also enumerate the cells of the filling");
  clusterCmd->callback([&] { run = [&] { return cmdCluster(base, params, o); }; });

  auto* intersectCmd = app.add_subcommand("intersect", "Intersect two clusters given as 'base | p1 | p2'")->fallthrough();
  intersectCmd->add_option("a", w1)->required();
  intersectCmd->add_option("b", w2)->required();
  intersectCmd->callback([&] { run = [&] { return cmdIntersect(w1, w2, o); }; });

  auto* cubulateCmd = app.add_subcommand("cubulate", "Cluster-cube complex containing the clusters of a file")->fallthrough();
  cubulateCmd->add_option("file", path)->required();
  cubulateCmd->add_flag("--json", o.asJson);
  cubulateCmd->callback([&] { run = [&] { return cmdCubulate(path, o); }; });

  auto* loopCmd = app.add_subcommand("contract-loop", "Homotopy certificate for a loop at F")->fallthrough();
  loopCmd->add_option("file", path)->required();
  loopCmd->add_flag("--json", o.asJson);
  loopCmd->callback([&] { run = [&] { return cmdContractLoop(path, o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return parseFailure;
  }

  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return parseFailure;
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
    return parseFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return domainFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return consistencyFailure;
  }
}
