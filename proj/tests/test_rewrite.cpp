#include <gtest/gtest.h>

#include <random>

#include "lm/calculus.hpp"
#include "lm/rewrite.hpp"
#include "oracle.hpp"

using namespace lm;

namespace {
BinaryWord W(const char* s) { return BinaryWord(s); }
SWord y(const char* s, int e = 1) { return SWord::y(W(s), e); }
SWord x(const char* s, int e = 1) { return SWord::x(W(s), e); }

void expectSameElement(const SWord& a, const SWord& b, std::mt19937& rng, int samples = 20) {
  for (int k = 0; k < samples; ++k) {
    auto xi = oracle::randomSeq(rng);
    ASSERT_EQ(evaluate(a, xi), evaluate(b, xi)) << "at " << xi.toString();
  }
}
}  // namespace

TEST(PairAutomaton, Examples) {
  EXPECT_FALSE(pairPotentialCancellation(W("10"), 1, W("100"), -1));
  EXPECT_TRUE(pairPotentialCancellation(W("10"), 1, W("101"), -1));
  EXPECT_FALSE(pairPotentialCancellation(W("10"), 1, W("100"), 1));
  EXPECT_THROW(pairPotentialCancellation(W("10"), 1, W("01"), 1), std::invalid_argument);
  EXPECT_THROW(pairPotentialCancellation(W("10"), 1, W("10"), 1), std::invalid_argument);
}

TEST(PairAutomaton, MatchesBruteForce) {
  for (const auto& gap : oracle::allWords(5, false)) {
    if (gap.empty()) continue;
    for (int a : {1, -1})
      for (int b : {1, -1})
        ASSERT_EQ(pairPotentialCancellation(a, gap, b), oracle::bruteForcePairCancels(a, gap.str(), b))
            << a << " " << gap.str() << " " << b;
  }
}

TEST(StandardFormTest, Examples) {
  auto a = toStandardForm(x("") * y("10"));
  EXPECT_EQ(a.f, xGen(W("")));
  EXPECT_EQ(a.y, (YWord{{W("10"), 1}}));

  auto b = toStandardForm(y("10") * x("1"));
  EXPECT_EQ(b.f, xGen(W("10")) * xGen(W("1")));
  EXPECT_EQ(b.y, (YWord{{W("10"), 1}, {W("1100"), -1}, {W("1101"), 1}}));

  auto c = toStandardForm(y("01") * y("011"));
  EXPECT_EQ(c.f, xGen(W("01")));
  EXPECT_EQ(c.y, (YWord{{W("010"), 1}, {W("0110"), -1}, {W("0111"), 1}, {W("011"), 1}}));
}

TEST(StandardFormTest, RandomWordsAreStandardAndEqual) {
  std::mt19937 rng(31);
  for (int i = 0; i < 300; ++i) {
    auto w = oracle::randomSWord(rng);
    auto sf = toStandardForm(w);
    EXPECT_TRUE(isStandard(sf.y));
    expectSameElement(w, SWord::fromTreePair(sf.f) * toSWord(sf.y), rng, 5);
    auto clean = removePotentialCancellations(sf);
    EXPECT_TRUE(isStandard(clean.y));
    EXPECT_FALSE(hasPotentialCancellation(clean.y));
    expectSameElement(w, SWord::fromTreePair(clean.f) * toSWord(clean.y), rng, 5);
  }
}

TEST(CancellationRemoval, Examples) {
  auto e = removePotentialCancellations(toStandardForm(y("10") * y("10", -1)));
  EXPECT_TRUE(e.y.empty());
  EXPECT_TRUE(e.f.isIdentity());
  auto keep = toStandardForm(y("100", -1) * y("10"));
  EXPECT_EQ(removePotentialCancellations(keep), keep);
  auto flagged = toStandardForm(y("101", -1) * y("10"));
  EXPECT_TRUE(hasPotentialCancellation(flagged.y));
  auto fixed = removePotentialCancellations(flagged);
  EXPECT_FALSE(fixed.y.empty());
  EXPECT_FALSE(hasPotentialCancellation(fixed.y));
  std::mt19937 rng(1);
  expectSameElement(y("101", -1) * y("10"), SWord::fromTreePair(fixed.f) * toSWord(fixed.y), rng);
}

TEST(ContractionSearch, Examples) {
  YWord p1{{W("100"), 1}, {W("1010"), -1}, {W("1011"), 1}};
  EXPECT_EQ(hasPotentialContraction(p1), (ContractionMatch{W("10"), 1}));
  YWord blocked = p1;
  blocked.push_back({W("101"), 1});
  EXPECT_FALSE(hasPotentialContraction(blocked));
  YWord p2{{W("1000"), -1}, {W("1001"), 1}, {W("101"), -1}};
  EXPECT_EQ(hasPotentialContraction(p2), (ContractionMatch{W("10"), 2}));
}

TEST(Normalize, Examples) {
  EXPECT_TRUE(normalize(y("10") * y("10", -1)).isIdentity());
  EXPECT_TRUE(normalize(SWord()).isIdentity());
  auto a = normalize(y("100", -1) * y("10"));
  EXPECT_TRUE(a.f.isIdentity());
  EXPECT_EQ(a.y, (YWord{{W("100"), -1}, {W("10"), 1}}));
  auto b = normalize(y("10") * x("1"));
  EXPECT_EQ(b.f, xGen(W("10")) * xGen(W("1")));
  EXPECT_EQ(b.y, (YWord{{W("10"), 1}, {W("1100"), -1}, {W("1101"), 1}}));
  auto c = normalize(y("100") * y("1010", -1) * y("1011"));
  EXPECT_EQ(c.f, xGen(W("10")).inverse());
  EXPECT_EQ(c.y, (YWord{{W("10"), 1}}));
}

TEST(Normalize, EqualWords) {
  EXPECT_TRUE(equalWords(y("10") * x("1"), x("10") * x("1") * y("10") * y("1100", -1) * y("1101")));
  EXPECT_FALSE(equalWords(y("10"), y("01")));
  auto xi = *RationalSeq::parse("1001(1)");
  EXPECT_NE(evaluate(y("10"), xi), evaluate(y("01"), xi));
}

TEST(Normalize, InverseCases) {
  GNormal n{TreePair(), {{W("100"), 1}, {W("10"), 1}}};
  auto inv = invertNormal(n);
  EXPECT_EQ(inv.f, xGen(W("10")).inverse());
  EXPECT_EQ(inv.y, (YWord{{W("1000"), -1}, {W("1001"), 1}, {W("100"), -1}, {W("101"), -1}}));
  EXPECT_TRUE(invertNormal(GNormal{}).isIdentity());
  auto one = invertNormal(GNormal{TreePair(), {{W("10"), 1}}});
  EXPECT_EQ(one.y, (YWord{{W("10"), -1}}));
}

TEST(Normalize, RandomProperties) {
  std::mt19937 rng(41);
  for (int i = 0; i < 400; ++i) {
    auto w = oracle::randomSWord(rng);
    auto n = normalize(w);
    ASSERT_TRUE(isNormal(n));
    EXPECT_EQ(normalize(toSWord(n)), n);
    expectSameElement(w, toSWord(n), rng, 8);
    auto inv = invertNormal(n);
    EXPECT_TRUE(normalize(toSWord(n) * toSWord(inv)).isIdentity());
    EXPECT_EQ(invertNormal(inv), n);
    EXPECT_EQ(inv, normalize(w.inverse()));
  }
}

TEST(Normalize, Confluence) {
  std::mt19937 rng(43);
  for (int i = 0; i < 400; ++i) {
    auto w = oracle::randomSWord(rng);
    auto v = w;
    for (int k = 0, done = 0; k < 40 && done < 5; ++k)
      if (oracle::randomSubstitution(v, rng)) ++done;
    EXPECT_EQ(normalize(w), normalize(v));
  }
}

TEST(Normalize, CalculationsOfNormalFormsHaveNoCancellation) {
  std::mt19937 rng(47);
  for (int i = 0; i < 200; ++i) {
    auto n = normalize(oracle::randomSWord(rng));
    for (int k = 0; k < 10; ++k) {
      // Aim the sample inside the support half the time.
      auto xi = oracle::randomSeq(rng);
      if (!n.y.empty() && (k & 1)) xi = xi.prepend(n.y[k % n.y.size()].sub);
      EXPECT_FALSE(exponent(calcString(n.y, xi)).potentialCancellation);
    }
  }
}

TEST(Normalize, RejectsConstantSubscripts) { EXPECT_THROW(normalize(y("11")), std::invalid_argument); }
