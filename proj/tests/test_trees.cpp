#include <gtest/gtest.h>

#include <set>

#include "butterfly/chain.hpp"
#include "butterfly/counting.hpp"
#include "butterfly/tree.hpp"
#include "oracles.hpp"

using namespace butterfly;

namespace {
VertexId V(std::vector<std::size_t> p) { return VertexId(std::move(p)); }

const char* kExampleTree = "(())((()(()))(()))(()())()";
}  // namespace

TEST(ParseTree, Examples) {
  const auto empty = parse_tree("");
  EXPECT_EQ(empty.edge_count(), 0u);
  EXPECT_TRUE(empty.is_trivial());

  EXPECT_EQ(parse_tree("()").edge_count(), 1u);

  const auto t = parse_tree("(())()");
  ASSERT_EQ(t.child_count(), 2u);
  EXPECT_EQ(t.child(0).child_count(), 1u);
  EXPECT_TRUE(t.child(1).is_trivial());
}

TEST(ParseTree, ErrorsCarryOffset) {
  for (const auto& [text, offset] : std::vector<std::pair<std::string, std::size_t>>{
           {"(", 1}, {")", 0}, {"(()", 3}, {"())", 2}, {"(x)", 1}}) {
    try {
      parse_tree(text);
      ADD_FAILURE() << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.offset(), offset) << text;
    }
  }
}

TEST(ParseTree, RoundTripUpToTen) {
  for (std::size_t n = 0; n <= 10; ++n) {
    for_each_tree(n, [&](const PlaneTree& t) { ASSERT_EQ(parse_tree(to_string(t)), t); });
  }
}

TEST(ParseTree, JsonRoundTrip) {
  const auto t = parse_tree(kExampleTree);
  EXPECT_EQ(to_json(parse_tree("(())()")).dump(), "[[[]],[]]");
  EXPECT_EQ(tree_from_json(to_json(t)), t);
}

TEST(EnumerateTrees, MatchesBalancedStringOracle) {
  for (std::size_t n = 0; n <= 9; ++n) {
    std::vector<std::string> got;
    for_each_tree_string(n, [&](const std::string& s) { got.push_back(s); });
    EXPECT_EQ(got, oracle::balanced(n)) << n;
  }
}

TEST(EnumerateTrees, Counts) {
  EXPECT_EQ(enumerate_trees(0).size(), 1u);
  EXPECT_EQ(enumerate_trees(3).size(), 5u);
  EXPECT_EQ(enumerate_trees(10).size(), 16796u);
  const auto c = oracle::catalans(12);
  for (std::size_t n = 0; n <= 12; ++n) {
    std::size_t count = 0;
    for_each_tree_string(n, [&](const std::string&) { ++count; });
    EXPECT_EQ(c[n], count);
    EXPECT_EQ(Integer(n + 1) * c[n], oracle::binomial(2 * n, n));
  }
}

TEST(EnumerateTrees, CapacityGuard) {
  EXPECT_THROW(enumerate_trees(4, 3), CapacityError);
}

TEST(RlPreorder, Examples) {
  const auto single = rl_preorder_labels(PlaneTree{});
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single.at(VertexId::root()), 0u);

  const auto two = rl_preorder_labels(parse_tree("()()"));
  EXPECT_EQ(two.at(VertexId::root()), 0u);
  EXPECT_EQ(two.at(V({1})), 1u);
  EXPECT_EQ(two.at(V({0})), 2u);
}

TEST(RlPreorder, ExampleLabels) {
  const auto t = parse_tree(kExampleTree);
  const std::map<VertexId, std::size_t> drawn = {
      {V({}), 0},        {V({3}), 1},       {V({2}), 2},    {V({2, 1}), 3}, {V({2, 0}), 4},
      {V({1}), 5},       {V({1, 1}), 6},    {V({1, 1, 0}), 7}, {V({1, 0}), 8}, {V({1, 0, 1}), 9},
      {V({1, 0, 1, 0}), 10}, {V({1, 0, 0}), 11}, {V({0}), 12}, {V({0, 0}), 13}};
  EXPECT_EQ(rl_preorder_labels(t), drawn);
  EXPECT_EQ(distinguish_by_label(t, 10).distinguished, V({1, 0, 1, 0}));
}

TEST(RlPreorder, MatchesMirrorOracle) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const auto& s : oracle::balanced(n)) {
      const auto t = parse_tree(s);
      const auto shape = oracle::shape(s);
      const auto expected = oracle::rl_labels(s);
      for (std::size_t v = 0; v < shape.path.size(); ++v) {
        ASSERT_EQ(rl_label(t, V(shape.path[v])), expected[v]) << s;
      }
    }
  }
}

TEST(DistinguishByLabel, Examples) {
  const auto t = parse_tree("(())(()())");
  EXPECT_EQ(distinguish_by_label(t, 0).distinguished, VertexId::root());
  // label n: leftmost-deepest vertex in right-to-left order is visited last
  EXPECT_EQ(distinguish_by_label(t, 5).distinguished, V({0, 0}));
  EXPECT_THROW(distinguish_by_label(t, 6), DomainError);
}

TEST(EdgeEvents, Examples) {
  using enum Visit;
  const std::vector<EdgeEvent> single = {{V({0}), First, true}, {V({0}), Second, true}};
  EXPECT_EQ(lr_preorder_events(parse_tree("()")), single);

  const std::vector<EdgeEvent> path = {
      {V({0}), First, false}, {V({0, 0}), First, true}, {V({0, 0}), Second, true}, {V({0}), Second, false}};
  EXPECT_EQ(lr_preorder_events(parse_tree("(())")), path);

  const std::vector<EdgeEvent> cherry = {
      {V({0}), First, true}, {V({0}), Second, true}, {V({1}), First, true}, {V({1}), Second, true}};
  EXPECT_EQ(lr_preorder_events(parse_tree("()()")), cherry);
}

TEST(ClassifyEdges, Examples) {
  EXPECT_EQ(classify_edges(parse_tree("()")).at(V({0})), EdgeKind::External);
  const auto path = classify_edges(parse_tree("(())"));
  EXPECT_EQ(path.at(V({0})), EdgeKind::Internal);
  EXPECT_EQ(path.at(V({0, 0})), EdgeKind::External);
  for (const auto& [v, kind] : classify_edges(parse_tree("()()"))) EXPECT_EQ(kind, EdgeKind::External);
}

TEST(Leaves, NarayanaAndHalf) {
  for (std::size_t n = 1; n <= 9; ++n) {
    std::map<std::size_t, std::size_t> by_leaves;
    std::size_t total = 0;
    for_each_tree(n, [&](const PlaneTree& t) {
      ++by_leaves[leaf_count(t)];
      total += leaf_count(t);
    });
    for (std::size_t i = 1; i <= n; ++i) EXPECT_EQ(narayana(n, i), by_leaves[i]) << n << "," << i;
    EXPECT_EQ(Integer(2 * total), Integer(n + 1) * oracle::catalans(n)[n]);
  }
  for (const auto& s : oracle::balanced(6)) EXPECT_EQ(leaf_count(parse_tree(s)), oracle::leaves(s));
}

TEST(DoublyRooted, TextFormAndValidation) {
  const auto d = parse_doubly_rooted(std::string(kExampleTree) + "@1/0");
  EXPECT_EQ(d.distinguished, V({1, 0}));
  EXPECT_EQ(to_string(d), std::string(kExampleTree) + "@1/0");
  EXPECT_EQ(to_string(DoublyRootedTree(parse_tree("()"), VertexId::root())), "()@ε");
  EXPECT_THROW(parse_doubly_rooted("()@1"), DomainError);
  EXPECT_THROW(parse_doubly_rooted("()"), ParseError);
}

TEST(DoublyRooted, CountIsCentralBinomial) {
  for (std::size_t n = 0; n <= 9; ++n) {
    std::size_t count = 0;
    for_each_doubly_rooted(n, [&](const DoublyRootedTree&) { ++count; });
    EXPECT_EQ(oracle::binomial(2 * n, n), count);
  }
}

TEST(Chains, SmallExamples) {
  EXPECT_EQ(enumerate_chains(PlaneTree{}).size(), 1u);
  EXPECT_EQ(enumerate_chains(parse_tree("(())")).size(), 7u);
  EXPECT_EQ(enumerate_chains(parse_tree("()()")).size(), 5u);
  std::size_t total = 0;
  for_each_tree(3, [&](const PlaneTree& t) { total += enumerate_chains(t).size(); });
  EXPECT_EQ(total, 51u);
}

TEST(Chains, MatchSubsetOracle) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& s : oracle::balanced(n)) {
      const auto chains = enumerate_chains(parse_tree(s));
      std::set<std::string> distinct;
      std::size_t total = 0;
      for (const auto& c : chains) {
        distinct.insert(to_string(c));
        total += c.size();
      }
      const auto [count, size] = oracle::chains(s);
      ASSERT_EQ(chains.size(), count) << s;
      ASSERT_EQ(distinct.size(), count) << s;
      ASSERT_EQ(total, size) << s;
      EXPECT_GE(count, 2 * n + 1);
      EXPECT_LE(count, (std::size_t{1} << (n + 1)) - 1);
    }
  }
}

TEST(Chains, TextFormAndValidation) {
  const auto c = make_chain(parse_tree("(())()"), {V({0, 0}), VertexId::root()});
  EXPECT_EQ(c.members.front(), VertexId::root());
  EXPECT_EQ(to_string(c), "(())();ε,0/0");
  EXPECT_EQ(parse_chain(to_string(c)), c);
  EXPECT_THROW(make_chain(parse_tree("()()"), {V({0}), V({1})}), DomainError);
  EXPECT_THROW(make_chain(parse_tree("()"), {}), DomainError);

  const auto colored = make_chain(parse_tree("(())"), {VertexId::root(), V({0, 0})}, std::vector<std::size_t>{1});
  EXPECT_EQ(parse_chain(to_string(colored)), colored);
}
