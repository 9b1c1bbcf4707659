#pragma once

// Exhaustive certification of the bijections, involutions and counting identities at a
// given size. Every check enumerates its domain, so sizes are bounded by Limits.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "butterfly/bijections.hpp"
#include "butterfly/chain.hpp"
#include "butterfly/colored.hpp"
#include "butterfly/core.hpp"
#include "butterfly/counting.hpp"
#include "butterfly/involutions.hpp"
#include "butterfly/lattice_path.hpp"
#include "butterfly/series.hpp"
#include "butterfly/tree.hpp"

namespace butterfly {

struct CheckResult {
  std::string target;
  std::size_t n = 0;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::pair<std::string, std::string>> facts;
  std::optional<std::string> counterexample;

  bool passed() const noexcept { return failures == 0; }

  void fail(std::string what) {
    ++failures;
    if (!counterexample) counterexample = std::move(what);
  }

  // Records an equality as a fact and as a failure when it does not hold.
  template <typename A, typename B>
  void expect_equal(const std::string& label, const A& actual, const B& expected) {
    const Integer a(actual), e(expected);
    facts.emplace_back(label, a.str());
    if (a != e) fail(label + ": got " + a.str() + ", expected " + e.str());
  }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool passed = true;
};

inline const std::vector<std::string>& bijection_names() {
  static const std::vector<std::string> names = {
      "butterfly",           "glove",           "drt-free-dyck",    "bicolored-free-dyck",   "drt-bicolored",
      "leafcolored-schroder", "lc-drt-free-schroder", "chain-tricolored", "colored-chain-kcolored"};
  return names;
}

inline const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {"eq9", "eq10", "eq12", "cf", "cf-refined",
                                                 "schroder-cf", "narayana", "leaf-half"};
  return names;
}

namespace detail {
// Runs a two-sided round-trip certification.
//   forward domain: for_each_a(f) yields A; to_b: A -> B; to_a: B -> A
//   backward domain: for_each_b(f) yields B
template <typename A, typename B, typename EachA, typename EachB, typename ToB, typename ToA, typename ShowA,
          typename ShowB>
void certify_pair(CheckResult& r, EachA each_a, EachB each_b, ToB to_b, ToA to_a, ShowA show_a, ShowB show_b) {
  std::set<std::string> images;
  std::size_t domain = 0;
  each_a([&](const A& a) {
    ++domain;
    ++r.checked;
    const B b = to_b(a);
    images.insert(show_b(b));
    const A back = to_a(b);
    if (!(back == a)) r.fail("forward round trip: " + show_a(a) + " -> " + show_b(b) + " -> " + show_a(back));
  });
  std::size_t codomain = 0;
  each_b([&](const B& b) {
    ++codomain;
    const A a = to_a(b);
    const B back = to_b(a);
    if (!(back == b)) r.fail("backward round trip: " + show_b(b) + " -> " + show_a(a) + " -> " + show_b(back));
  });
  r.facts.emplace_back("domain", std::to_string(domain));
  r.facts.emplace_back("codomain", std::to_string(codomain));
  r.facts.emplace_back("distinct_images", std::to_string(images.size()));
  if (images.size() != domain) r.fail("map is not injective");
  if (domain != codomain) r.fail("domain and codomain sizes differ");
}

inline KColoredTree swap_black_white(KColoredTree t) {
  for (auto& c : t.root_child_colors) c = c == kBlack ? kWhite : kBlack;
  return t;
}

inline std::size_t weight(const LatticePath& p) { return !p.empty() && p.back() == Step::Up ? 2 : 1; }
}  // namespace detail

inline CheckResult verify_bijection(const std::string& name, std::size_t n, std::size_t colors = 2,
                                    const Limits& limits = Limits::from_env()) {
  CheckResult r{"bijection " + name, n, 0, 0, {}, std::nullopt};
  const auto show_tree = [](const PlaneTree& t) { return to_string(t); };
  const auto show_drt = [](const DoublyRootedTree& d) { return to_string(d); };
  const auto show_path = [](const LatticePath& p) { return to_string(p); };
  const auto show_k = [](const KColoredTree& t) { return to_string(t); };
  const auto show_lc = [](const LeafColoredTree& t) { return to_string(t); };
  const auto show_chain = [](const Chain& c) { return to_string(c); };
  const auto each_drt = [&](auto f) { for_each_doubly_rooted(n, f, limits.trees); };
  const auto each_free_dyck = [&](auto f) { for_each_path(Alphabet::Dyck, n, PathConstraint::Free, f, limits.paths); };

  if (name == "butterfly") {
    std::set<std::string> seen;
    each_drt([&](const DoublyRootedTree& d) {
      ++r.checked;
      const auto bd = butterfly_decompose(d);
      if (bd.butterflies.size() != d.stem_size()) r.fail("butterfly count differs from stem size: " + to_string(d));
      if (bd.edge_count() != n) r.fail("edge weight not preserved: " + to_string(d));
      const auto back = butterfly_compose(bd);
      if (!(back == d)) r.fail("compose(decompose(d)) != d for " + to_string(d));
      if (!(butterfly_decompose(back) == bd)) r.fail("decompose(compose(x)) != x for " + to_string(d));
      std::string key;
      for (const auto& b : bd.butterflies) key += to_string(b.left) + "|" + to_string(b.right) + ";";
      seen.insert(key + to_string(bd.tail));
    });
    r.facts.emplace_back("distinct_images", std::to_string(seen.size()));
    if (seen.size() != r.checked) r.fail("decomposition is not injective");
  } else if (name == "glove") {
    detail::certify_pair<PlaneTree, LatticePath>(
        r, [&](auto f) { for_each_tree(n, f, limits.trees); },
        [&](auto f) { for_each_path(Alphabet::Dyck, n, PathConstraint::NonNegative, f, limits.paths); },
        glove_tree_to_dyck, glove_dyck_to_tree, show_tree, show_path);
  } else if (name == "drt-free-dyck") {
    detail::certify_pair<DoublyRootedTree, LatticePath>(r, each_drt, each_free_dyck, drt_to_free_dyck,
                                                        free_dyck_to_drt, show_drt, show_path);
    r.expect_equal("binomial(2n,n)", r.checked, central_binomial(n));
  } else if (name == "bicolored-free-dyck") {
    detail::certify_pair<KColoredTree, LatticePath>(
        r, [&](auto f) { for_each_k_colored(n, 2, f, limits.trees); }, each_free_dyck, bicolored_to_free_dyck,
        free_dyck_to_bicolored, show_k, show_path);
    r.expect_equal("binomial(2n,n)", r.checked, central_binomial(n));
  } else if (name == "drt-bicolored") {
    detail::certify_pair<DoublyRootedTree, KColoredTree>(
        r, each_drt, [&](auto f) { for_each_k_colored(n, 2, f, limits.trees); }, drt_to_bicolored, bicolored_to_drt,
        show_drt, show_k);
    std::size_t commuting = 0;
    each_drt([&](const DoublyRootedTree& d) {
      const auto via_path = free_dyck_to_bicolored(drt_to_free_dyck(d));
      if (detail::swap_black_white(via_path) == drt_to_bicolored(d)) {
        ++commuting;
      } else {
        r.fail("direct map and path route disagree on " + to_string(d));
      }
    });
    r.facts.emplace_back("commutes_with_path_route_up_to_color_swap", std::to_string(commuting));
  } else if (name == "leafcolored-schroder") {
    detail::certify_pair<LeafColoredTree, LatticePath>(
        r, [&](auto f) { for_each_leaf_colored(n, f, limits.paths); },
        [&](auto f) { for_each_path(Alphabet::Schroder, n, PathConstraint::NonNegative, f, limits.paths); },
        leafcolored_to_schroder, schroder_to_leafcolored, show_lc, show_path);
    r.expect_equal("schroder_number", r.checked, schroder_number(n));
  } else if (name == "lc-drt-free-schroder") {
    detail::certify_pair<LeafColoredTree, LatticePath>(
        r, [&](auto f) { for_each_leaf_colored_drt(n, f, limits.paths); },
        [&](auto f) { for_each_path(Alphabet::Schroder, n, PathConstraint::Free, f, limits.paths); },
        leafcolored_drt_to_free_schroder, free_schroder_to_leafcolored_drt, show_lc, show_path);
    r.expect_equal("free_schroder_count", r.checked, free_schroder_count(n));
  } else if (name == "chain-tricolored") {
    detail::certify_pair<Chain, KColoredTree>(
        r, [&](auto f) { for_each_chain(n, f, limits.chains); },
        [&](auto f) { for_each_k_colored(n, 3, f, limits.chains); }, chain_to_tricolored, tricolored_to_chain,
        show_chain, show_k);
    for_each_chain(n, [&](const Chain& c) {
      const auto t = chain_to_tricolored(c);
      const auto whites = static_cast<std::size_t>(std::count(t.root_child_colors.begin(), t.root_child_colors.end(), kWhite));
      if (whites + 1 != c.size()) r.fail("chain of size " + std::to_string(c.size()) + " gave " + std::to_string(whites) + " white subtrees");
    }, limits.chains);
    r.expect_equal("chains_count", r.checked, chains_count(n));
  } else if (name == "colored-chain-kcolored") {
    const std::size_t t = colors;
    detail::certify_pair<Chain, KColoredTree>(
        r, [&](auto f) { for_each_colored_chain(n, t, f, limits.chains); },
        [&](auto f) { for_each_k_colored(n, t + 2, f, limits.chains); },
        [t](const Chain& c) { return colored_chain_to_kcolored(c, t); }, kcolored_to_colored_chain, show_chain,
        show_k);
    // [x^n] C / (1 - (k-1) x C^2) with k = t + 2
    const Series c = named_series("C", n + 1);
    const Series one = Series::constant(1, n + 1);
    const Series gf = c / (one - Integer(t + 1) * (c * c).shifted(1));
    r.expect_equal("series_count", r.checked, gf[n]);
    r.facts.emplace_back("t", std::to_string(t));
  } else {
    throw DomainError("unknown bijection '" + name + "'");
  }
  return r;
}

inline CheckResult verify_involution(const std::string& kind, std::size_t n, const Limits& limits = Limits::from_env()) {
  if (n == 0) throw DomainError("involutions are defined for n >= 1");
  CheckResult r{"involution " + kind, n, 0, 0, {}, std::nullopt};
  std::size_t fixed = 0, excluded = 0;
  Integer signed_sum = 0;
  if (kind == "dyck") {
    for_each_path(Alphabet::Dyck, n, PathConstraint::Free, [&](const LatticePath& p) {
      ++r.checked;
      const auto q = dyck_flip(p);
      if (q == p) ++fixed;
      if (!(dyck_flip(q) == p)) r.fail("not an involution at " + to_string(p));
      if (is_odd(p) == is_odd(q)) r.fail("parity preserved at " + to_string(p));
      signed_sum += is_odd(p) ? -1 : 1;
    }, limits.paths);
    r.expect_equal("fixed_points", fixed, 0);
    r.expect_equal("signed_sum_exhaustive", signed_sum, 0);
    r.expect_equal("identity_value", signed_block_sum_dyck(n), 0);
  } else if (kind == "schroder") {
    for_each_path(Alphabet::Schroder, n, PathConstraint::Free, [&](const LatticePath& p) {
      signed_sum += is_odd(p) ? -1 : 1;
      if (p.count(Step::Up) == 0) {
        ++excluded;
        if (p.count(Step::Horiz) != n) r.fail("path without up steps is not H^n: " + to_string(p));
        return;
      }
      ++r.checked;
      const auto q = schroder_flip(p);
      if (q == p) ++fixed;
      if (q.count(Step::Up) == 0) r.fail("image lost its up steps at " + to_string(p));
      if (!(schroder_flip(q) == p)) r.fail("not an involution at " + to_string(p));
      if (is_odd(p) == is_odd(q)) r.fail("parity preserved at " + to_string(p));
    }, limits.paths);
    r.expect_equal("fixed_points", fixed, 0);
    r.expect_equal("unmatched_paths", excluded, 1);
    r.expect_equal("signed_sum_exhaustive", signed_sum, 1);
    r.expect_equal("identity_value", signed_block_sum_schroder(n), 1);
  } else {
    throw DomainError("unknown involution '" + kind + "'");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Exhaustive distributions

// Free Dyck paths of semilength n by (flaws, flaw blocks).
inline std::map<std::pair<std::size_t, std::size_t>, std::size_t> dyck_flaw_block_distribution(
    std::size_t n, const Limits& limits = Limits::from_env()) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for_each_path(Alphabet::Dyck, n, PathConstraint::Free,
                [&](const LatticePath& p) { ++out[{flaws(p), flaw_blocks(p)}]; }, limits.paths);
  return out;
}

// Doubly rooted trees with n edges by (prefix edges, stem size).
inline std::map<std::pair<std::size_t, std::size_t>, std::size_t> drt_prefix_stem_distribution(
    std::size_t n, const Limits& limits = Limits::from_env()) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for_each_doubly_rooted(n, [&](const DoublyRootedTree& d) { ++out[{prefix_edge_count(d), stem_size(d)}]; },
                         limits.trees);
  return out;
}

// Free Schroder paths of semilength n: total weight by (flaws, flaw blocks).
inline std::map<std::pair<std::size_t, std::size_t>, std::size_t> schroder_weight_distribution(
    std::size_t n, const Limits& limits = Limits::from_env()) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for_each_path(Alphabet::Schroder, n, PathConstraint::Free,
                [&](const LatticePath& p) { out[{flaws(p), flaw_blocks(p)}] += detail::weight(p); }, limits.paths);
  return out;
}

inline std::map<std::size_t, std::size_t> marginal_first(const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& joint) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& [key, count] : joint) out[key.first] += count;
  return out;
}

// ---------------------------------------------------------------------------
// Identities

inline CheckResult verify_identity(const std::string& name, std::size_t n, const Limits& limits = Limits::from_env()) {
  CheckResult r{"identity " + name, n, 0, 0, {}, std::nullopt};
  if (name == "eq9") {
    const auto [lhs, rhs] = leaf_colored_drt_identity(n);
    r.expect_equal("lhs_minus_rhs", lhs - rhs, 0);
    std::size_t trees = 0;
    for_each_leaf_colored_drt(n, [&](const LeafColoredTree&) { ++trees; }, limits.paths);
    r.checked = trees;
    r.expect_equal("leaf_colored_drt_count", trees, lhs);
    std::size_t paths = 0;
    for_each_path(Alphabet::Schroder, n, PathConstraint::Free, [&](const LatticePath&) { ++paths; }, limits.paths);
    r.expect_equal("free_schroder_paths", paths, rhs);
  } else if (name == "eq10") {
    r.expect_equal("identity_value", signed_block_sum_dyck(n), 0);
    if (n > limits.paths) {
      r.facts.emplace_back("exhaustive", "skipped above " + std::to_string(limits.paths));
      return r;
    }
    r.expect_equal("signed_sum_exhaustive", signed_block_sum_exhaustive(Alphabet::Dyck, n), 0);
    r.checked = static_cast<std::size_t>(central_binomial(n));
    // block-count distribution: [x^{n-i}] C^{2i+1}
    const auto joint = dyck_flaw_block_distribution(n, limits);
    std::map<std::size_t, std::size_t> by_blocks;
    for (const auto& [key, count] : joint) by_blocks[key.second] += count;
    for (std::size_t i = 0; i <= n; ++i) r.expect_equal("blocks_" + std::to_string(i), by_blocks[i], coeff_C_pow(n - i, 2 * i + 1));
  } else if (name == "eq12") {
    r.expect_equal("identity_value", signed_block_sum_schroder(n), 1);
    if (n > limits.paths) {
      r.facts.emplace_back("exhaustive", "skipped above " + std::to_string(limits.paths));
      return r;
    }
    r.expect_equal("signed_sum_exhaustive", signed_block_sum_exhaustive(Alphabet::Schroder, n), 1);
    std::map<std::size_t, std::size_t> by_blocks;
    for_each_path(Alphabet::Schroder, n, PathConstraint::Free, [&](const LatticePath& p) {
      ++r.checked;
      ++by_blocks[flaw_blocks(p)];
    }, limits.paths);
    for (std::size_t i = 0; i <= n; ++i) r.expect_equal("blocks_" + std::to_string(i), by_blocks[i], a_nk(n - i, 2 * i + 1));
  } else if (name == "cf") {
    const auto by_flaws = marginal_first(dyck_flaw_block_distribution(n, limits));
    for (std::size_t m = 0; m <= n; ++m) {
      r.expect_equal("flaws_" + std::to_string(m), by_flaws.contains(m) ? by_flaws.at(m) : 0, catalan(n));
    }
    // Distinguishing the vertex labelled m in right-to-left preorder gives exactly m flaws,
    // and over all trees this hits every m-flaw path once.
    for (std::size_t m = 0; m <= n; ++m) {
      std::set<std::string> images;
      for_each_tree(n, [&](const PlaneTree& t) {
        ++r.checked;
        const auto p = drt_to_free_dyck(distinguish_by_label(t, m));
        if (flaws(p) != m) r.fail("label " + std::to_string(m) + " on " + to_string(t) + " gave " + to_string(p));
        images.insert(to_string(p));
      }, limits.trees);
      if (images.size() != by_flaws.at(m)) r.fail("labelled trees do not cover the " + std::to_string(m) + "-flaw paths");
    }
  } else if (name == "cf-refined") {
    const auto paths = dyck_flaw_block_distribution(n, limits);
    const auto trees = drt_prefix_stem_distribution(n, limits);
    if (paths != trees) r.fail("(flaws, blocks) and (prefix edges, stem) distributions differ");
    const Series c = named_series("C", n + 2);
    for (std::size_t m = 0; m <= n; ++m) {
      for (std::size_t k = 0; k <= m; ++k) {
        const std::size_t count = paths.contains({m, k}) ? paths.at({m, k}) : 0;
        ++r.checked;
        // [x^m] x^k C^k * [x^{n-m}] C^{k+1}
        const Integer series_value = (c.pow(k).shifted(k))[m] * c.pow(k + 1)[n - m];
        if (series_value != count) r.fail("series count mismatch at m = " + std::to_string(m) + ", k = " + std::to_string(k));
        if (k > 0 && flaw_block_count_dyck(n, m, k) != count) {
          r.fail("closed form mismatch at m = " + std::to_string(m) + ", k = " + std::to_string(k));
        }
      }
    }
    for_each_doubly_rooted(n, [&](const DoublyRootedTree& d) {
      const auto p = drt_to_free_dyck(d);
      if (flaw_blocks(p) != stem_size(d) || flaws(p) != prefix_edge_count(d)) {
        r.fail("statistics not transferred for " + to_string(d));
      }
    }, limits.trees);
    r.expect_equal("returns_check", [&] {
      Integer bad = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t count = paths.contains({n, k}) ? paths.at({n, k}) : 0;
        if (dyck_returns_count(n, k) != count) ++bad;
      }
      return bad;
    }(), 0);
  } else if (name == "schroder-cf") {
    const auto joint = schroder_weight_distribution(n, limits);
    const auto totals = marginal_first(joint);
    for (std::size_t m = 0; m <= n; ++m) {
      r.expect_equal("weight_" + std::to_string(m), totals.contains(m) ? totals.at(m) : 0, schroder_number(n));
    }
    const Series s = named_series("S", n + 2);
    for (std::size_t m = 1; m <= n; ++m) {
      for (std::size_t k = 1; k <= m; ++k) {
        ++r.checked;
        const std::size_t w = joint.contains({m, k}) ? joint.at({m, k}) : 0;
        if (flaw_block_weight_schroder(n, m, k) != w) {
          r.fail("closed form mismatch at m = " + std::to_string(m) + ", k = " + std::to_string(k));
        }
        const Integer series_value = s.pow(k)[m - k] * (s.pow(k + 1) + s.pow(k))[n - m];
        if (series_value != w) r.fail("series form mismatch at m = " + std::to_string(m) + ", k = " + std::to_string(k));
      }
    }
    // Statistic transfer on leaf-colored doubly rooted trees.
    for_each_leaf_colored_drt(n, [&](const LeafColoredTree& t) {
      const auto p = leafcolored_drt_to_free_schroder(t);
      const DoublyRootedTree d(t.tree, *t.distinguished);
      if (flaw_blocks(p) != stem_size(d) || flaws(p) != prefix_edge_count(d)) {
        r.fail("statistics not transferred for " + to_string(t));
      }
    }, limits.paths);
    // Fully leaf-colored trees with the vertex labelled m distinguished (its color dropped)
    // hit every m-flaw path with multiplicity equal to its weight.
    for (std::size_t m = 0; m <= n; ++m) {
      std::map<std::string, std::size_t> hits;
      for_each_leaf_colored(n, [&](const LeafColoredTree& t) {
        LeafColoredTree d = t;
        d.distinguished = rl_preorder(t.tree)[m];
        d.leaf_colors.erase(*d.distinguished);
        const auto p = leafcolored_drt_to_free_schroder(d);
        if (flaws(p) != m) r.fail("label " + std::to_string(m) + " on " + to_string(t) + " gave " + to_string(p));
        ++hits[to_string(p)];
      }, limits.paths);
      for_each_path(Alphabet::Schroder, n, PathConstraint::Free, [&](const LatticePath& p) {
        if (flaws(p) != m) return;
        const auto it = hits.find(to_string(p));
        const std::size_t got = it == hits.end() ? 0 : it->second;
        if (got != detail::weight(p)) r.fail("multiplicity " + std::to_string(got) + " for " + to_string(p));
      }, limits.paths);
    }
  } else if (name == "narayana") {
    if (n == 0) throw DomainError("narayana identity needs n >= 1");
    std::map<std::size_t, std::size_t> by_leaves;
    for_each_tree(n, [&](const PlaneTree& t) {
      ++r.checked;
      ++by_leaves[leaf_count(t)];
    }, limits.trees);
    for (std::size_t i = 1; i <= n; ++i) r.expect_equal("leaves_" + std::to_string(i), by_leaves[i], narayana(n, i));
  } else if (name == "leaf-half") {
    if (n == 0) throw DomainError("leaf-half identity needs n >= 1");
    std::size_t leaves = 0;
    for_each_tree(n, [&](const PlaneTree& t) {
      ++r.checked;
      leaves += leaf_count(t);
    }, limits.trees);
    r.expect_equal("total_leaves", leaves, to_integer_exact(Rational(Integer(n + 1) * catalan(n), 2)));
    // Half of the free Dyck paths end with an up step.
    std::size_t ending_up = 0;
    for_each_path(Alphabet::Dyck, n, PathConstraint::Free,
                  [&](const LatticePath& p) { ending_up += p.back() == Step::Up ? 1 : 0; }, limits.paths);
    r.expect_equal("free_dyck_ending_up", ending_up, central_binomial(n) / 2);
  } else {
    throw DomainError("unknown identity '" + name + "'");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Tables

inline Table chung_feller_table(std::size_t n, const Limits& limits = Limits::from_env()) {
  Table t{{"m", "count", "catalan", "match"}, {}};
  const auto by_flaws = marginal_first(dyck_flaw_block_distribution(n, limits));
  const Integer c = catalan(n);
  for (std::size_t m = 0; m <= n; ++m) {
    const std::size_t count = by_flaws.contains(m) ? by_flaws.at(m) : 0;
    const bool ok = c == count;
    t.passed = t.passed && ok;
    t.rows.push_back({std::to_string(m), std::to_string(count), c.str(), ok ? "yes" : "no"});
  }
  return t;
}

inline Table flaw_blocks_table(std::size_t n, const Limits& limits = Limits::from_env()) {
  Table t{{"m", "k", "paths", "trees", "formula", "match"}, {}};
  const auto paths = dyck_flaw_block_distribution(n, limits);
  const auto trees = drt_prefix_stem_distribution(n, limits);
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = 1; k <= m; ++k) {
      const std::size_t p = paths.contains({m, k}) ? paths.at({m, k}) : 0;
      const std::size_t d = trees.contains({m, k}) ? trees.at({m, k}) : 0;
      const Integer f = flaw_block_count_dyck(n, m, k);
      const bool ok = p == d && f == p;
      t.passed = t.passed && ok;
      t.rows.push_back({std::to_string(m), std::to_string(k), std::to_string(p), std::to_string(d), f.str(), ok ? "yes" : "no"});
    }
  }
  return t;
}

inline Table schroder_cf_table(std::size_t n, const Limits& limits = Limits::from_env()) {
  Table t{{"m", "weighted_total", "schroder_number", "match"}, {}};
  const auto totals = marginal_first(schroder_weight_distribution(n, limits));
  const Integer r = schroder_number(n);
  for (std::size_t m = 0; m <= n; ++m) {
    const std::size_t w = totals.contains(m) ? totals.at(m) : 0;
    const bool ok = r == w;
    t.passed = t.passed && ok;
    t.rows.push_back({std::to_string(m), std::to_string(w), r.str(), ok ? "yes" : "no"});
  }
  return t;
}

inline Table returns_table(std::size_t n, const Limits& limits = Limits::from_env()) {
  Table t{{"k", "count", "formula", "match"}, {}};
  std::map<std::size_t, std::size_t> by_returns;
  for_each_path(Alphabet::Dyck, n, PathConstraint::NonNegative,
                [&](const LatticePath& p) { ++by_returns[decompose(p).size()]; }, limits.paths);
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t count = by_returns[k];
    const Integer f = dyck_returns_count(n, k);
    const bool ok = f == count;
    t.passed = t.passed && ok;
    t.rows.push_back({std::to_string(k), std::to_string(count), f.str(), ok ? "yes" : "no"});
  }
  return t;
}

// ---------------------------------------------------------------------------
// Chain reports

// Brute-force chain statistics for n-edge trees: count, total size, and count by size.
struct ChainCensus {
  std::size_t count = 0;
  std::size_t total_size = 0;
  std::map<std::size_t, std::size_t> by_size;
};

inline ChainCensus chain_census(std::size_t n, const Limits& limits = Limits::from_env()) {
  ChainCensus out;
  for_each_chain(n, [&](const Chain& c) {
    ++out.count;
    out.total_size += c.size();
    ++out.by_size[c.size()];
  }, limits.chains);
  return out;
}

inline Table chains_table(const std::string& report, std::size_t n, const Limits& limits = Limits::from_env()) {
  Table t;
  const auto census = [&](std::size_t size) -> std::optional<ChainCensus> {
    if (size > limits.chains) return std::nullopt;
    return chain_census(size, limits);
  };
  if (report == "count" || report == "total-size") {
    const bool count = report == "count";
    t.columns = {"n", count ? "H_n" : "R_n", "brute_force", "match"};
    const Series s = named_series(count ? "chains" : "chain_size_total", n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      const auto brute = census(i);
      std::string b = "", match = "n/a";
      if (brute) {
        const std::size_t v = count ? brute->count : brute->total_size;
        b = std::to_string(v);
        match = s[i] == v ? "yes" : "no";
        t.passed = t.passed && s[i] == v;
      }
      t.rows.push_back({std::to_string(i), s[i].str(), b, match});
    }
  } else if (report == "size-dist") {
    t.columns = {"k", "count", "brute_force", "match"};
    const auto brute = census(n);
    for (std::size_t k = 1; k <= n + 1; ++k) {
      const Integer v = chains_of_size(n, k);
      std::string b = "", match = "n/a";
      if (brute) {
        const std::size_t bv = brute->by_size.contains(k) ? brute->by_size.at(k) : 0;
        b = std::to_string(bv);
        match = v == bv ? "yes" : "no";
        t.passed = t.passed && v == bv;
      }
      t.rows.push_back({std::to_string(k), v.str(), b, match});
    }
  } else if (report == "average") {
    t.columns = {"n", "H_n", "R_n", "average_num", "average_den", "average_decimal"};
    const Series h = named_series("chains", n + 1);
    const Series r = named_series("chain_size_total", n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
      const Rational avg(r[i], h[i]);
      t.rows.push_back({std::to_string(i), h[i].str(), r[i].str(), boost::multiprecision::numerator(avg).str(),
                        boost::multiprecision::denominator(avg).str(), format_decimal(avg)});
    }
  } else if (report == "asymptotic") {
    t.columns = {"n", "H_ratio", "R_ratio", "average_decimal", "limit_decimal"};
    for (std::size_t i = 1; i <= n; ++i) {
      const auto a = asymptotic_report(i);
      t.rows.push_back({std::to_string(i), format_decimal(a.chains_ratio), format_decimal(a.size_ratio),
                        format_decimal(a.average), format_decimal(a.limit)});
    }
  } else {
    throw DomainError("unknown chains report '" + report + "'");
  }
  return t;
}

}  // namespace butterfly
