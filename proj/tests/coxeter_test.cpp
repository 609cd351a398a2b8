#include <set>

#include <gtest/gtest.h>

#include "gtl/coxeter_group.hpp"
#include "oracles.hpp"

using namespace gtl;

namespace {

Word w(std::initializer_list<int> one_based) {
  Word r;
  for (int g : one_based) r.push_back(g - 1);
  return r;
}

std::size_t count_fc(const CoxeterGroup& g, int bound) {
  return g.enumerate(bound, EnumFilter::fully_commutative).size();
}

}  // namespace

TEST(Graph, ParseFormat) {
  CoxeterGraph g = parse_graph("# B3 by hand\nrank 3\nedge 1 2 3\nedge 2 3 4\n");
  EXPECT_EQ(g, preset("B3"));
  EXPECT_EQ(g.bond(0, 2), 2);
  EXPECT_EQ(parse_graph(to_string(g)), g);
  EXPECT_EQ(parse_graph("preset D4\n"), preset("D4"));
  CoxeterGraph inf = parse_graph("rank 2\nedge 1 2 inf");
  EXPECT_EQ(inf.bond(0, 1), kInf);
  EXPECT_THROW(parse_graph("rank 3\nedge 1 2 2\n"), ParseError);
  EXPECT_THROW(parse_graph("rank 3\nedge 1 2 3\nedge 2 1 4\n"), ParseError);
  EXPECT_THROW(parse_graph("rank 3\nedge 1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("edge 1 2 3\n"), ParseError);
  EXPECT_THROW(parse_graph("rank 3\nedge 1 4 3\n"), ParseError);
  EXPECT_THROW(parse_graph("rank 3\nbogus\n"), ParseError);
  EXPECT_THROW(preset("X9"), ParseError);
}

TEST(Graph, Presets) {
  CoxeterGraph d4 = preset("D4");
  EXPECT_EQ(d4.bond(1, 0), 3);
  EXPECT_EQ(d4.bond(1, 2), 3);
  EXPECT_EQ(d4.bond(1, 3), 3);
  EXPECT_EQ(d4.bond(0, 2), 2);
  EXPECT_EQ(preset("H3").bond(0, 1), 5);
  EXPECT_EQ(preset("I2(7)").bond(0, 1), 7);
  EXPECT_EQ(preset("I2(inf)").bond(0, 1), kInf);
  EXPECT_EQ(preset("~A2").bond(2, 0), 3);
  EXPECT_EQ(preset("~A1").bond(0, 1), kInf);
  EXPECT_EQ(preset("~C3").bond(2, 3), 4);
  EXPECT_EQ(preset("E6").bond(1, 3), 3);
  EXPECT_TRUE(preset("A4").is_type_a());
  EXPECT_FALSE(preset("B3").is_type_a());
}

TEST(Words, NormalFormExamples) {
  CoxeterGroup a3(preset("A3"));
  Element x = a3.normal_form(w({2, 1, 2}));
  EXPECT_EQ(a3.format(x), "1 2 1");
  EXPECT_EQ(a3.length(x), 3);
  Element y = a3.normal_form(w({3, 1}));
  EXPECT_EQ(a3.format(y), "1 3");
  EXPECT_EQ(a3.normal_form(w({1, 1})), a3.identity());
  EXPECT_EQ(a3.format(a3.identity()), "e");
  EXPECT_FALSE(a3.is_reduced(w({1, 2, 1, 2})));
  EXPECT_TRUE(a3.is_reduced(w({1, 2, 1})));
  EXPECT_EQ(a3.reduced_words(x).size(), 2u);
  EXPECT_EQ(parse_word("e", 3), Word{});
  EXPECT_EQ(parse_word("3 1", 3), w({3, 1}));
  EXPECT_THROW(parse_word("4", 3), ParseError);
  EXPECT_THROW(parse_word("", 3), ParseError);
}

TEST(Words, InfiniteBondNeverBraids) {
  CoxeterGroup g(preset("I2(inf)"));
  Element x = g.normal_form(w({1, 2, 1, 2, 1, 2, 1}));
  EXPECT_EQ(g.length(x), 7);
  EXPECT_EQ(g.reduced_words(x).size(), 1u);
  EXPECT_TRUE(g.is_fully_commutative(x));
}

TEST(Words, AgreesWithRootAction) {
  for (const char* name : {"A3", "B3", "D4", "A4"}) {
    CoxeterGraph gr = preset(name);
    CoxeterGroup g(gr);
    oracle::RootAction act(gr);
    auto ball = act.ball(100);
    auto elems = g.enumerate(100);
    ASSERT_EQ(elems.size(), ball.size()) << name;
    std::set<oracle::Matrix> images;
    for (Element e : elems) {
      auto m = act.of_word(g.word(e));
      images.insert(m);
      EXPECT_EQ(ball.at(m), g.length(e)) << name;
      for (Gen s = 0; s < g.rank(); ++s) {
        EXPECT_EQ(act.of_word(g.word(g.mul_left(s, e))), act.left(s, m));
        bool desc = g.has_descent(e, s, Side::left);
        EXPECT_EQ(desc, ball.at(act.left(s, m)) < ball.at(m));
      }
    }
    EXPECT_EQ(images.size(), elems.size());
  }
}

TEST(Words, GroupOrders) {
  EXPECT_EQ(CoxeterGroup(preset("H3")).enumerate(100).size(), 120u);
  EXPECT_EQ(CoxeterGroup(preset("I2(7)")).enumerate(100).size(), 14u);
  EXPECT_EQ(CoxeterGroup(preset("D4")).enumerate(100).size(), 192u);
}

TEST(Words, EnumerationOrder) {
  CoxeterGroup g(preset("A2"));
  std::vector<std::string> got;
  for (Element e : g.enumerate(3)) got.push_back(g.format(e));
  EXPECT_EQ(got, (std::vector<std::string>{"e", "1", "2", "1 2", "2 1", "1 2 1"}));
}

TEST(FullyCommutative, CountsAgainstPermutations) {
  for (int n : {2, 3, 4}) {
    CoxeterGroup g(preset("A" + std::to_string(n)));
    std::size_t fc = 0;
    for (Element e : g.enumerate(100)) {
      auto p = oracle::permutation(g.word(e), n);
      EXPECT_EQ(oracle::inversions(p), g.length(e));
      EXPECT_EQ(oracle::avoids_321(p), g.is_fully_commutative(e));
      fc += g.is_fully_commutative(e);
    }
    EXPECT_EQ(fc, count_fc(g, 100));
  }
  EXPECT_EQ(count_fc(CoxeterGroup(preset("A3")), 100), 14u);
  EXPECT_EQ(count_fc(CoxeterGroup(preset("A4")), 100), 42u);
  EXPECT_EQ(count_fc(CoxeterGroup(preset("B3")), 100), 24u);
  EXPECT_EQ(count_fc(CoxeterGroup(preset("D4")), 100), 48u);
  EXPECT_EQ(count_fc(CoxeterGroup(preset("H3")), 100), 44u);
  EXPECT_EQ(count_fc(CoxeterGroup(preset("I2(6)")), 100), 11u);
}

TEST(FullyCommutative, Classify) {
  CoxeterGroup a3(preset("A3"));
  EXPECT_EQ(a3.classify(a3.normal_form(w({1, 3}))), Classification::fully_commutative);
  EXPECT_EQ(a3.classify(a3.normal_form(w({1, 2, 1}))), Classification::weakly_complex);
  Element w0 = a3.enumerate(100).back();
  EXPECT_EQ(a3.length(w0), 6);
  EXPECT_EQ(a3.classify(w0), Classification::complex_other);
}

TEST(FullyCommutative, DecomposePrefix) {
  CoxeterGroup a3(preset("A3"));
  FcPrefix d = a3.decompose_fc_prefix(a3.normal_form(w({3, 2, 1})), 0);
  EXPECT_EQ(a3.format(d.w1), "3");
  EXPECT_EQ(a3.format(d.w2), "2 1");
  EXPECT_EQ(a3.format(d.w3), "e");
  EXPECT_EQ(d.t, 1);
  EXPECT_THROW(a3.decompose_fc_prefix(a3.normal_form(w({2})), 1), PreconditionError);

  // w = w1 w2 w3 reduced and s w2 is the longest element of the pair
  for (const char* name : {"A4", "B3", "D4", "H3"}) {
    CoxeterGroup g(preset(name));
    for (Element e : g.enumerate(100, EnumFilter::fully_commutative)) {
      for (Gen s = 0; s < g.rank(); ++s) {
        if (g.has_descent(e, s, Side::left) || g.is_fully_commutative(g.mul_left(s, e))) continue;
        FcPrefix p = g.decompose_fc_prefix(e, s);
        EXPECT_EQ(g.mul(g.mul(p.w1, p.w2), p.w3), e);
        EXPECT_EQ(g.length(p.w1) + g.length(p.w2) + g.length(p.w3), g.length(e));
        EXPECT_EQ(g.length(p.w2), g.graph().bond(s, p.t) - 1);
        for (Gen u : g.word(p.w1)) EXPECT_TRUE(g.graph().commute(u, s) && u != s);
      }
    }
  }
}

TEST(Cosets, Decompose) {
  CoxeterGroup a3(preset("A3"));
  auto d = a3.coset_decompose(a3.normal_form(w({2, 1, 3, 2})), 0b011, Side::left);
  EXPECT_EQ(a3.format(d.parabolic), "2 1");
  EXPECT_EQ(a3.format(d.minimal), "3 2");
  for (const char* name : {"B3", "D4"}) {
    CoxeterGroup g(preset(name));
    for (Element e : g.enumerate(100))
      for (auto [s, t] : g.graph().noncommuting_pairs()) {
        GenMask I = (1u << s) | (1u << t);
        auto l = g.coset_decompose(e, I, Side::left);
        EXPECT_EQ(g.mul(l.parabolic, l.minimal), e);
        EXPECT_EQ(g.length(l.parabolic) + g.length(l.minimal), g.length(e));
        EXPECT_EQ(g.descent_mask(l.minimal, Side::left) & I, 0u);
        auto r = g.coset_decompose(e, I, Side::right);
        EXPECT_EQ(g.mul(r.minimal, r.parabolic), e);
        EXPECT_EQ(g.descent_mask(r.minimal, Side::right) & I, 0u);
      }
  }
}

TEST(Bruhat, SubwordOracle) {
  for (const char* name : {"A3", "B3", "I2(5)"}) {
    CoxeterGroup g(preset(name));
    auto elems = g.enumerate(100);
    for (Element x : elems) {
      const Word& u = g.word(x);
      std::set<std::uint32_t> below;
      for (std::uint32_t mask = 0; mask < (1u << u.size()); ++mask) {
        Word sub;
        for (std::size_t i = 0; i < u.size(); ++i)
          if ((mask >> i) & 1u) sub.push_back(u[i]);
        below.insert(g.normal_form(sub).id);
      }
      for (Element y : elems) EXPECT_EQ(g.bruhat_leq(y, x), below.count(y.id) == 1) << name;
    }
  }
}

TEST(Words, ClosureCapIsHard) {
  CoxeterGroup g(preset("A4"), 10);
  EXPECT_THROW(g.enumerate(100), CapExceeded);
  EXPECT_THROW(CoxeterGroup(preset("~A2")).enumerate(12, EnumFilter::all, 50), CapExceeded);
}

TEST(Words, InverseAndDescents) {
  CoxeterGroup g(preset("D4"));
  for (Element e : g.enumerate(100)) {
    Element i = g.inverse(e);
    EXPECT_EQ(g.inverse(i), e);
    EXPECT_EQ(g.descent_mask(e, Side::left), g.descent_mask(i, Side::right));
    EXPECT_EQ(g.mul(e, i), g.identity());
  }
}
