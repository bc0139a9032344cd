#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dlga/codec.hpp"
#include "dlga/fsa.hpp"
#include "dlga/verify.hpp"
#include "test_support.hpp"

namespace dlga {
namespace {

class CodecTest : public ::testing::Test {
 protected:
  Codec c5{Group(test::q5())};
  Codec c3{Group(test::q3())};

  std::string raw(const Codec& c, const GroupElement& g) { return c.to_string(c.encode(g), true); }
};

TEST_F(CodecTest, EncodeExamples) {
  const Group& g = c5.group();
  EXPECT_EQ(raw(c5, g.identity()), "###");
  EXPECT_EQ(raw(c5, g.element_of(Generator{GenKind::Type1, 0, -1, 3, false})), "x#3##");
  EXPECT_EQ(raw(c5, GroupElement{{0, 0}, Decomposition{{{}, {}, {3}}}}), "###3");
  EXPECT_EQ(raw(c5, GroupElement{{-2, 1}, Decomposition{{{0, 1}, {}, {}}}}), "yy#x01##");
  EXPECT_EQ(c5.to_string(c5.encode(g.identity())), "# # #");
}

TEST_F(CodecTest, DecodeExamples) {
  const Group& g = c5.group();
  EXPECT_EQ(c5.decode(c5.parse("###")), g.identity());
  EXPECT_EQ(c5.decode(c5.parse("x#3##")), g.element_of(Generator{GenKind::Type1, 0, -1, 3, false}));
  EXPECT_EQ(c5.decode(c5.parse("x # 3 # #")), c5.decode(c5.parse("x#3##")));
}

TEST_F(CodecTest, MalformedStrings) {
  for (const char* bad : {"x#30##", "", "##", "####", "x#y#", "xy###", "##0", "3###", "x#3#", "###x"}) {
    SCOPED_TRACE(bad);
    SymbolString w;
    try {
      w = c5.parse(bad);
    } catch (const ParseError&) {
      continue;
    }
    EXPECT_THROW(c5.decode(w), MalformedString);
    EXPECT_FALSE(accepts(c5.nf_automaton(), w));
  }
}

TEST_F(CodecTest, AutomatonExamples) {
  const Automaton nf = c5.nf_automaton();
  EXPECT_TRUE(nf.deterministic());
  EXPECT_TRUE(accepts(nf, c5.parse("###")));
  EXPECT_TRUE(accepts(nf, c5.parse("x#3##")));
  EXPECT_FALSE(accepts(nf, c5.parse("x#30##")));
  EXPECT_FALSE(accepts(nf, SymbolString{}));
  EXPECT_TRUE(equivalent(nf, minimize(concat(c5.prefix_automaton(), c5.suffix_automaton()))));
}

TEST_F(CodecTest, ShortestNormalFormIsIdentity) {
  const auto words = enumerate(c3.nf_automaton(), 3);
  ASSERT_EQ(words.size(), 1u);
  EXPECT_EQ(c3.to_string(words[0], true), "###");
}

// Every accepted string decodes and re-encodes to itself, and every string
// that decodes is accepted.
TEST_F(CodecTest, AcceptedStringsMatchDecodableStrings) {
  const Automaton nf = c3.nf_automaton();
  const std::size_t n = c3.alphabet().tokens()->size();
  std::size_t decodable = 0;
  std::vector<SymbolString> frontier{{}};
  for (std::size_t len = 1; len <= 6; ++len) {
    std::vector<SymbolString> next;
    for (const auto& w : frontier) {
      for (Symbol s = 0; s < n; ++s) {
        SymbolString v = w;
        v.push_back(s);
        bool ok = true;
        try {
          ASSERT_EQ(c3.encode(c3.decode(v)), v);
        } catch (const MalformedString&) {
          ok = false;
        }
        decodable += ok ? 1 : 0;
        ASSERT_EQ(ok, accepts(nf, v)) << c3.to_string(v, true);
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  EXPECT_EQ(enumerate(nf, 6).size(), decodable);
}

TEST_F(CodecTest, BijectionOnBallAndRandomElements) {
  const Group& g = c3.group();
  const Ball b = g.ball(4);
  std::set<SymbolString> seen;
  for (const auto& e : b.elements) {
    const SymbolString w = c3.encode(e);
    ASSERT_EQ(c3.decode(w), e);
    ASSERT_TRUE(seen.insert(w).second);
  }
  std::mt19937_64 rng(5);
  for (int k = 0; k < 1000; ++k) {
    const GroupElement e = random_element(c5.group(), rng, 4, 5);
    ASSERT_EQ(c5.decode(c5.encode(e)), e);
  }
}

TEST_F(CodecTest, EncodeDecodeOnAcceptedStrings) {
  for (const auto& w : enumerate(c3.nf_automaton(), 8)) ASSERT_EQ(c3.encode(c3.decode(w)), w);
}

TEST_F(CodecTest, LengthBoundOnBall) {
  const Group& g = c3.group();
  const Ball& b = g.ball(4);
  for (const auto& e : b.elements) {
    const auto len = static_cast<std::int64_t>(c3.encode(e).size());
    ASSERT_LE(len, 2 * g.tree_distance(e).dT + 2 * g.rank() - 2);
  }
}

TEST_F(CodecTest, LargeModulusUsesSpacedTokens) {
  const Codec c11(Group(GroupParams::validate(11, 3, std::vector<std::int64_t>{1, 2})));
  const GroupElement e{{1, 0}, Decomposition{{{10}, {}, {}}}};
  EXPECT_EQ(c11.to_string(c11.encode(e)), "x # 10 # #");
  EXPECT_EQ(c11.decode(c11.parse("x # 10 # #")), e);
}

}  // namespace
}  // namespace dlga
