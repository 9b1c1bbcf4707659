#include <gtest/gtest.h>

#include <set>

#include "butterfly/bijections.hpp"
#include "butterfly/counting.hpp"
#include "butterfly/series.hpp"
#include "oracles.hpp"

using namespace butterfly;

namespace {
VertexId V(std::vector<std::size_t> p) { return VertexId(std::move(p)); }

const char* kExampleTree = "(())((()(()))(()))(()())()";
const char* kExamplePath = "UUDDDDDUDUUDUUDDDUUUUDUUDD";

DoublyRootedTree example_drt() { return DoublyRootedTree(parse_tree(kExampleTree), V({1, 0})); }

// Leaf colors of the worked example, leaves in preorder.
LeafColoredTree example_leaf_colored() {
  LeafColoredTree t{parse_tree(kExampleTree), {}, V({1, 0})};
  const LeafColor R = LeafColor::Red, B = LeafColor::Blue;
  t.leaf_colors = {{V({0, 0}), B}, {V({1, 0, 0}), B}, {V({1, 0, 1, 0}), R}, {V({1, 1, 0}), B},
                   {V({2, 0}), B}, {V({2, 1}), R},    {V({3}), B}};
  return t;
}
}  // namespace

TEST(Butterfly, Examples) {
  const auto root = butterfly_decompose(DoublyRootedTree(parse_tree("(())()"), VertexId::root()));
  EXPECT_TRUE(root.butterflies.empty());
  EXPECT_EQ(to_string(root.tail), "(())()");

  const auto edge = butterfly_decompose(DoublyRootedTree(parse_tree("()"), V({0})));
  ASSERT_EQ(edge.butterflies.size(), 1u);
  EXPECT_TRUE(edge.butterflies[0].left.is_trivial());
  EXPECT_TRUE(edge.butterflies[0].right.is_trivial());
  EXPECT_TRUE(edge.tail.is_trivial());
  EXPECT_EQ(butterfly_compose(edge), DoublyRootedTree(parse_tree("()"), V({0})));
  EXPECT_EQ(butterfly_compose(root).distinguished, VertexId::root());
}

TEST(Butterfly, Example) {
  const auto d = butterfly_decompose(example_drt());
  ASSERT_EQ(d.butterflies.size(), 2u);
  EXPECT_EQ(to_string(d.butterflies[0].left), "(())");
  EXPECT_EQ(to_string(d.butterflies[0].right), "(()())()");
  EXPECT_EQ(to_string(d.butterflies[1].left), "");
  EXPECT_EQ(to_string(d.butterflies[1].right), "(())");
  EXPECT_EQ(to_string(d.tail), "()(())");
  EXPECT_EQ(d.edge_count(), 13u);
  EXPECT_EQ(butterfly_compose(d), example_drt());
}

TEST(Statistics, Examples) {
  EXPECT_EQ(stem_size(DoublyRootedTree(parse_tree("()"), VertexId::root())), 0u);
  EXPECT_EQ(prefix_edge_count(DoublyRootedTree(parse_tree("()"), VertexId::root())), 0u);
  EXPECT_EQ(stem_size(DoublyRootedTree(parse_tree("()"), V({0}))), 1u);
  EXPECT_EQ(prefix_edge_count(DoublyRootedTree(parse_tree("()"), V({0}))), 1u);

  // The drawn vertex has 8 thick prefix edges; label 10 has 10.
  EXPECT_EQ(prefix_edge_count(example_drt()), 8u);
  const auto t = parse_tree(kExampleTree);
  EXPECT_EQ(prefix_edge_count(distinguish_by_label(t, 10)), 10u);
}

TEST(Statistics, PrefixEdgesEqualLabelOracle) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& s : oracle::balanced(n)) {
      const auto t = parse_tree(s);
      const auto shape = oracle::shape(s);
      const auto labels = oracle::rl_labels(s);
      for (std::size_t v = 0; v < shape.path.size(); ++v) {
        const DoublyRootedTree d(t, V(shape.path[v]));
        ASSERT_EQ(prefix_edge_count(d), labels[v]) << s;
        ASSERT_EQ(stem_size(d), shape.depth[v]) << s;
      }
    }
  }
}

TEST(Glove, Examples) {
  EXPECT_EQ(to_string(glove_tree_to_dyck(PlaneTree{})), "");
  EXPECT_EQ(to_string(glove_tree_to_dyck(parse_tree("()"))), "UD");
  EXPECT_EQ(to_string(glove_tree_to_dyck(parse_tree("(())()"))), "UUDDUD");
  EXPECT_EQ(glove_dyck_to_tree(parse_path("UUDDUD")), parse_tree("(())()"));
  EXPECT_THROW(glove_dyck_to_tree(parse_path("DU")), DomainError);
}

TEST(Glove, IsTheParenthesisReading) {
  for (const auto& s : oracle::balanced(7)) {
    std::string w = s;
    for (char& c : w) c = c == '(' ? 'U' : 'D';
    ASSERT_EQ(to_string(glove_tree_to_dyck(parse_tree(s))), w);
  }
}

TEST(DrtFreeDyck, Examples) {
  const auto t = parse_tree("(())()");
  EXPECT_EQ(drt_to_free_dyck(DoublyRootedTree(t, VertexId::root())), glove_tree_to_dyck(t));
  EXPECT_EQ(to_string(drt_to_free_dyck(DoublyRootedTree(parse_tree("()"), V({0})))), "DU");
  EXPECT_EQ(to_string(drt_to_free_dyck(example_drt())), kExamplePath);

  EXPECT_EQ(free_dyck_to_drt(parse_path("UDUD")).distinguished, VertexId::root());
  EXPECT_EQ(free_dyck_to_drt(parse_path("DU")), DoublyRootedTree(parse_tree("()"), V({0})));
  EXPECT_EQ(stem_size(free_dyck_to_drt(parse_path("DUDU"))), 2u);
  EXPECT_EQ(free_dyck_to_drt(parse_path(kExamplePath)), example_drt());
  EXPECT_THROW(free_dyck_to_drt(parse_path("UUD")), DomainError);
  EXPECT_THROW(free_dyck_to_drt(parse_path("HDU")), DomainError);
}

TEST(DrtFreeDyck, BijectiveWithStatistics) {
  for (std::size_t n = 0; n <= 8; ++n) {
    std::set<std::string> images;
    for_each_doubly_rooted(n, [&](const DoublyRootedTree& d) {
      const auto p = drt_to_free_dyck(d);
      const std::string w = to_string(p);
      ASSERT_EQ(oracle::height(w), 0);
      ASSERT_EQ(p.semilength(), n);
      ASSERT_EQ(free_dyck_to_drt(p), d);
      ASSERT_EQ(oracle::blocks(w), stem_size(d));
      ASSERT_EQ(oracle::flaws(w), prefix_edge_count(d));
      images.insert(w);
    });
    EXPECT_EQ(oracle::binomial(2 * n, n), images.size());
  }
}

TEST(DrtFreeDyck, LabelGivesFlaws) {
  for (std::size_t n = 0; n <= 8; ++n) {
    for_each_tree(n, [&](const PlaneTree& t) {
      for (std::size_t m = 0; m <= n; ++m) {
        ASSERT_EQ(oracle::flaws(to_string(drt_to_free_dyck(distinguish_by_label(t, m)))), m);
      }
    });
  }
}

TEST(DrtFreeDyck, StemSizeSeries) {
  // [x^n] x^k C^k C^{k+1} doubly rooted trees have stem size k
  const Series c = named_series("C", 10);
  for (std::size_t n = 0; n <= 8; ++n) {
    std::map<std::size_t, std::size_t> by_stem;
    for (const auto& s : oracle::balanced(n))
      for (auto d : oracle::shape(s).depth) ++by_stem[d];
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ((c.pow(2 * k + 1).shifted(k))[n], by_stem[k]);
  }
}

TEST(Bicolored, Examples) {
  const auto white = KColoredTree{parse_tree("(())()"), 2, {kWhite, kWhite}};
  EXPECT_EQ(bicolored_to_free_dyck(white), glove_tree_to_dyck(white.tree));
  EXPECT_EQ(to_string(bicolored_to_free_dyck(KColoredTree{parse_tree("()"), 2, {kBlack}})), "DU");
  EXPECT_EQ(to_string(bicolored_to_free_dyck(KColoredTree{parse_tree("()()"), 2, {kBlack, kWhite}})), "DUUD");
  EXPECT_EQ(free_dyck_to_bicolored(parse_path("DUUD")), (KColoredTree{parse_tree("()()"), 2, {kBlack, kWhite}}));
  EXPECT_THROW(bicolored_to_free_dyck(KColoredTree{parse_tree("()"), 3, {0}}), DomainError);
}

TEST(Bicolored, CountAndRoundTrip) {
  for (std::size_t n = 0; n <= 7; ++n) {
    std::size_t count = 0;
    for_each_k_colored(n, 2, [&](const KColoredTree& t) {
      ++count;
      ASSERT_EQ(free_dyck_to_bicolored(bicolored_to_free_dyck(t)), t);
      ASSERT_EQ(drt_to_bicolored(bicolored_to_drt(t)), t);
    });
    EXPECT_EQ(oracle::binomial(2 * n, n), count);
  }
}

TEST(DrtBicolored, Examples) {
  const auto root = drt_to_bicolored(DoublyRootedTree(parse_tree("(())()"), VertexId::root()));
  EXPECT_EQ(root.root_child_colors, (std::vector<std::size_t>{kBlack, kBlack}));
  EXPECT_EQ(drt_to_bicolored(DoublyRootedTree(parse_tree("()"), V({0}))),
            (KColoredTree{parse_tree("()"), 2, {kWhite}}));
}

TEST(DrtBicolored, PathRouteAgreesUpToColorSwap) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for_each_doubly_rooted(n, [&](const DoublyRootedTree& d) {
      auto via_path = free_dyck_to_bicolored(drt_to_free_dyck(d));
      for (auto& c : via_path.root_child_colors) c = 1 - c;
      ASSERT_EQ(via_path, drt_to_bicolored(d)) << to_string(d);
    });
  }
}

TEST(LeafColored, Examples) {
  const auto blue = LeafColoredTree{parse_tree("()"), {{V({0}), LeafColor::Blue}}, std::nullopt};
  const auto red = LeafColoredTree{parse_tree("()"), {{V({0}), LeafColor::Red}}, std::nullopt};
  const auto path = LeafColoredTree{parse_tree("(())"), {{V({0, 0}), LeafColor::Blue}}, std::nullopt};
  EXPECT_EQ(to_string(leafcolored_to_schroder(blue)), "H");
  EXPECT_EQ(to_string(leafcolored_to_schroder(red)), "UD");
  EXPECT_EQ(to_string(leafcolored_to_schroder(path)), "UHD");
  EXPECT_EQ(schroder_to_leafcolored(parse_path("UHD")), path);
  EXPECT_EQ(to_string(path), "(());B");
  EXPECT_EQ(parse_leaf_colored("(());B"), path);

  const auto uncolored = LeafColoredTree{parse_tree("()"), {}, std::nullopt};
  EXPECT_THROW(leafcolored_to_schroder(uncolored), DomainError);
}

TEST(LeafColored, DoublyRootedExamples) {
  auto root = LeafColoredTree{parse_tree("(())()"), {{V({0, 0}), LeafColor::Red}, {V({1}), LeafColor::Blue}}, VertexId::root()};
  auto plain = root;
  plain.distinguished.reset();
  EXPECT_EQ(leafcolored_drt_to_free_schroder(root), leafcolored_to_schroder(plain));

  const auto edge = LeafColoredTree{parse_tree("()"), {}, V({0})};
  EXPECT_EQ(to_string(leafcolored_drt_to_free_schroder(edge)), "DU");
  EXPECT_EQ(free_schroder_to_leafcolored_drt(parse_path("DU")), edge);

  const auto colored = LeafColoredTree{parse_tree("()"), {{V({0}), LeafColor::Red}}, V({0})};
  EXPECT_THROW(leafcolored_drt_to_free_schroder(colored), DomainError);
}

TEST(LeafColored, Example) {
  const auto t = example_leaf_colored();
  EXPECT_EQ(to_string(t), std::string(kExampleTree) + ";BBRBBRB@1/0");
  const auto p = leafcolored_drt_to_free_schroder(t);
  EXPECT_EQ(to_string(p), "UHDDDHDUUHUDDHUUHUUDD");
  EXPECT_EQ(free_schroder_to_leafcolored_drt(p), t);
  EXPECT_EQ(flaws(p), 8u);
  EXPECT_EQ(flaw_blocks(p), 2u);
}

TEST(LeafColored, RoundTripsAndStatistics) {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::set<std::string> images;
    for_each_leaf_colored(n, [&](const LeafColoredTree& t) {
      const auto p = leafcolored_to_schroder(t);
      ASSERT_TRUE(oracle::nonnegative(to_string(p)));
      ASSERT_EQ(schroder_to_leafcolored(p), t);
      images.insert(to_string(p));
    });
    EXPECT_EQ(schroder_number(n), images.size());

    images.clear();
    for_each_leaf_colored_drt(n, [&](const LeafColoredTree& t) {
      const auto p = leafcolored_drt_to_free_schroder(t);
      const auto w = to_string(p);
      ASSERT_EQ(free_schroder_to_leafcolored_drt(p), t);
      const DoublyRootedTree d(t.tree, *t.distinguished);
      ASSERT_EQ(oracle::blocks(w), stem_size(d));
      ASSERT_EQ(oracle::flaws(w), prefix_edge_count(d));
      images.insert(w);
    });
    EXPECT_EQ(oracle::free_paths("UDH", n).size(), images.size());
  }
}

TEST(Chains, TricoloredExamples) {
  const auto t = parse_tree("(())()");
  const auto root = chain_to_tricolored(make_chain(t, {VertexId::root()}));
  EXPECT_EQ(root.root_child_colors, (std::vector<std::size_t>{kRed, kRed}));

  const auto edge = parse_tree("()");
  EXPECT_EQ(chain_to_tricolored(make_chain(edge, {V({0})})), (KColoredTree{edge, 3, {kBlack}}));
  EXPECT_EQ(chain_to_tricolored(make_chain(edge, {VertexId::root(), V({0})})), (KColoredTree{edge, 3, {kWhite}}));
  EXPECT_EQ(tricolored_to_chain(KColoredTree{edge, 3, {kWhite}}), make_chain(edge, {VertexId::root(), V({0})}));
}

TEST(Chains, TricoloredBijection) {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::size_t chains = 0, trees = 0;
    for_each_chain(n, [&](const Chain& c) {
      ++chains;
      const auto t = chain_to_tricolored(c);
      ASSERT_EQ(tricolored_to_chain(t), c);
      const auto whites = std::count(t.root_child_colors.begin(), t.root_child_colors.end(), kWhite);
      ASSERT_EQ(static_cast<std::size_t>(whites) + 1, c.size());
    });
    for_each_k_colored(n, 3, [&](const KColoredTree& t) {
      ++trees;
      ASSERT_EQ(chain_to_tricolored(tricolored_to_chain(t)), t);
    });
    EXPECT_EQ(chains, trees);
    EXPECT_EQ(chains_count(n), chains);
  }
  std::size_t n2 = 0;
  for_each_k_colored(2, 3, [&](const KColoredTree&) { ++n2; });
  EXPECT_EQ(n2, 12u);
}

TEST(Chains, ColoredExamples) {
  std::size_t chains = 0, trees = 0;
  for_each_colored_chain(1, 2, [&](const Chain&) { ++chains; });
  for_each_k_colored(1, 4, [&](const KColoredTree&) { ++trees; });
  EXPECT_EQ(chains, 4u);
  EXPECT_EQ(trees, 4u);

  // t = 1 is the tricolored map
  for_each_chain(4, [&](const Chain& c) {
    Chain colored = c;
    colored.colors = std::vector<std::size_t>(c.size() - 1, 0);
    ASSERT_EQ(colored_chain_to_kcolored(colored, 1), chain_to_tricolored(c));
  });

  const auto t = parse_tree("()");
  EXPECT_THROW(colored_chain_to_kcolored(make_chain(t, {V({0})}), 2), DomainError);
  EXPECT_THROW(colored_chain_to_kcolored(make_chain(t, {VertexId::root(), V({0})}, std::vector<std::size_t>{2}), 2),
               DomainError);
}

TEST(Chains, ColoredBijection) {
  for (std::size_t t = 1; t <= 3; ++t) {
    const Series c = named_series("C", 6);
    const Series gf = c / (Series::constant(1, 6) - Integer(t + 1) * (c * c).shifted(1));
    for (std::size_t n = 0; n <= (t == 3 ? 4u : 5u); ++n) {
      std::size_t chains = 0, trees = 0;
      for_each_colored_chain(n, t, [&](const Chain& ch) {
        ++chains;
        ASSERT_EQ(kcolored_to_colored_chain(colored_chain_to_kcolored(ch, t)), ch);
      });
      for_each_k_colored(n, t + 2, [&](const KColoredTree& k) {
        ++trees;
        ASSERT_EQ(colored_chain_to_kcolored(kcolored_to_colored_chain(k), t), k);
      });
      EXPECT_EQ(chains, trees);
      EXPECT_EQ(gf[n], chains) << "t=" << t << " n=" << n;
      // 1 / (1 - k x C) with k = t + 2
      const Series alt = Series::constant(1, 6) / (Series::constant(1, 6) - Integer(t + 2) * c.shifted(1));
      EXPECT_EQ(alt[n], chains);
    }
  }
}

// Fully colored trees with the label-m vertex distinguished (its color dropped) cover every
// m-flaw free Schroder path once per unit of weight.
TEST(LeafColored, WeightedRealization) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      std::map<std::string, std::size_t> hits;
      for_each_leaf_colored(n, [&](const LeafColoredTree& t) {
        LeafColoredTree d = t;
        d.distinguished = distinguish_by_label(t.tree, m).distinguished;
        d.leaf_colors.erase(*d.distinguished);
        ++hits[to_string(leafcolored_drt_to_free_schroder(d))];
      });
      for (const auto& w : oracle::free_paths("UDH", n)) {
        if (oracle::flaws(w) != m) continue;
        ASSERT_EQ(hits[w], w.back() == 'U' ? 2u : 1u) << w;
      }
    }
  }
}
