#include <gtest/gtest.h>

#include <random>

#include "lm/thompson.hpp"
#include "lm/word.hpp"
#include "oracle.hpp"

using namespace lm;

namespace {
BinaryWord W(const char* s) { return BinaryWord(s); }

TreePair randomF(std::mt19937& rng, int letters = 4) {
  std::uniform_int_distribution<int> e(0, 1);
  TreePair f;
  for (int i = 0; i < letters; ++i) {
    auto g = xGen(oracle::randomWord(rng, 3, false));
    f = f * (e(rng) ? g : g.inverse());
  }
  return f;
}
}  // namespace

TEST(TreePairTest, GeneratorAction) {
  EXPECT_EQ(xGen(W("")).actOnWord(W("00")), W("0"));
  EXPECT_EQ(xGen(W("1")).actOnWord(W("100")), W("10"));
  EXPECT_FALSE(xGen(W("")).actOnWord(W("0")).has_value());
  EXPECT_EQ(xGen(W("1")).actOnWord(W("1010")), W("1100"));
  EXPECT_FALSE(xGen(W("1")).actOnWord(W("10")).has_value());
  EXPECT_EQ(TreePair().actOnWord(W("0110")), W("0110"));
}

TEST(TreePairTest, SequenceAction) {
  EXPECT_EQ(xGen(W("")).actOnSeq(*RationalSeq::parse("00(1)")), *RationalSeq::parse("0(1)"));
  EXPECT_EQ(xGen(W("")).actOnSeq(*RationalSeq::parse("(0)")), *RationalSeq::parse("(0)"));
  EXPECT_EQ(xGen(W("1")).actOnSeq(*RationalSeq::parse("1011(0)")), *RationalSeq::parse("1101(0)"));
}

TEST(TreePairTest, Relations) {
  EXPECT_TRUE((xGen(W("")) * xGen(W("")).inverse()).isIdentity());
  EXPECT_EQ(xGen(W("")) * xGen(W("")), xGen(W("0")) * xGen(W("")) * xGen(W("1")));
  EXPECT_EQ(xGen(W("11")) * xGen(W("")), xGen(W("")) * xGen(W("111")));
}

TEST(TreePairTest, RelationsExhaustive) {
  for (const auto& s : oracle::allWords(4, false)) {
    EXPECT_EQ(xGen(s) * xGen(s), xGen(s + "0") * xGen(s) * xGen(s + "1"));
    for (const auto& t : oracle::allWords(4, false)) {
      auto img = xGen(s).actOnWord(t);
      if (!img) continue;
      EXPECT_EQ(xGen(t) * xGen(s), xGen(s) * xGen(*img)) << s.str() << " " << t.str();
    }
  }
}

TEST(TreePairTest, PointwiseFixes) {
  EXPECT_TRUE(xGen(W("1")).pointwiseFixesCone(W("0")));
  EXPECT_FALSE(xGen(W("1")).pointwiseFixesCone(W("10")));
  EXPECT_TRUE(TreePair().pointwiseFixesCone(W("")));
  EXPECT_FALSE(xGen(W("1")).pointwiseFixesCone(W("")));
}

TEST(TreePairTest, RightActionAgreesWithCaseRules) {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::pair<BinaryWord, int>> gens;
    TreePair f;
    SWord w;
    for (int k = 0; k < 4; ++k) {
      auto s = oracle::randomWord(rng, 3, false);
      int e = (rng() & 1) ? 1 : -1;
      f = f * xGen(s).pow(e);
      w.push({Gen::x, s, e});
    }
    for (int k = 0; k < 10; ++k) {
      auto xi = oracle::randomSeq(rng);
      auto expect = oracle::evalPrefix(w, oracle::unroll(xi, 200));
      auto got = oracle::unroll(f.actOnSeq(xi), expect.size());
      ASSERT_EQ(got, expect);
    }
  }
}

TEST(TreePairTest, ReductionAndInverse) {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto f = randomF(rng), g = randomF(rng), h = randomF(rng);
    EXPECT_TRUE((f * f.inverse()).isIdentity());
    EXPECT_EQ((f * g) * h, f * (g * h));
    // Unreduced input reduces to the same canonical pair.
    std::vector<BinaryWord> d, r;
    for (std::size_t k = 0; k < f.leafCount(); ++k) {
      d.push_back(f.domain()[k] + "0");
      d.push_back(f.domain()[k] + "1");
      r.push_back(f.range()[k] + "0");
      r.push_back(f.range()[k] + "1");
    }
    EXPECT_EQ(TreePair(d, r), f);
    EXPECT_EQ(TreePair::parse(f.toString()), f);
  }
}

TEST(TreePairTest, XWordRoundTrip) {
  std::mt19937 rng(9);
  for (int i = 0; i < 300; ++i) {
    auto f = randomF(rng, 6);
    TreePair back;
    for (const auto& [s, e] : xWordOf(f)) back = back * xGen(s).pow(e);
    EXPECT_EQ(back, f);
  }
}
