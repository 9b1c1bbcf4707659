#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "butterfly/core.hpp"
#include "butterfly/tree.hpp"

namespace butterfly {

// Color indices of bicolored (k = 2) and tricolored (k = 3) trees.
inline constexpr std::size_t kBlack = 0;
inline constexpr std::size_t kWhite = 1;
inline constexpr std::size_t kRed = 2;

// Plane tree whose root children each carry one of k colors. Deeper vertices are uncolored.
struct KColoredTree {
  PlaneTree tree;
  std::size_t k = 2;
  std::vector<std::size_t> root_child_colors;

  void validate() const {
    if (k == 0) throw DomainError("k-colored tree needs k >= 1");
    if (root_child_colors.size() != tree.child_count()) {
      throw DomainError("one color per root child required: got " + std::to_string(root_child_colors.size()) +
                        " for " + std::to_string(tree.child_count()) + " children");
    }
    for (std::size_t c : root_child_colors) {
      if (c >= k) throw DomainError("color " + std::to_string(c) + " out of range for k = " + std::to_string(k));
    }
  }

  friend bool operator==(const KColoredTree&, const KColoredTree&) = default;
};

// "TREE;c0,c1,..." with one decimal color per root child.
inline std::string to_string(const KColoredTree& t) {
  std::string out = to_string(t.tree) + ";";
  for (std::size_t i = 0; i < t.root_child_colors.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(t.root_child_colors[i]);
  }
  return out;
}

inline KColoredTree parse_k_colored(std::string_view text, std::size_t k) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("missing ';' before color list", text.size());
  KColoredTree out{parse_tree(text.substr(0, semi)), k, {}};
  std::size_t value = 0;
  bool have_digit = false;
  for (std::size_t i = semi + 1; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      if (have_digit) {
        out.root_child_colors.push_back(value);
      } else if (i != text.size() || i != semi + 1) {
        throw ParseError("empty color entry", i);
      }
      value = 0;
      have_digit = false;
    } else if (text[i] >= '0' && text[i] <= '9') {
      value = value * 10 + static_cast<std::size_t>(text[i] - '0');
      have_digit = true;
    } else {
      throw ParseError("unexpected character in color list", i);
    }
  }
  out.validate();
  return out;
}

// All n-edge trees with every root-child coloring, colorings in lexicographic order.
template <typename F>
void for_each_k_colored(std::size_t n, std::size_t k, F&& f, std::size_t max_n = Limits::from_env().trees) {
  if (k == 0) throw DomainError("k-colored tree needs k >= 1");
  for_each_tree(n, [&](const PlaneTree& t) {
    std::vector<std::size_t> colors(t.child_count(), 0);
    while (true) {
      f(KColoredTree{t, k, colors});
      std::size_t i = colors.size();
      while (i > 0 && colors[i - 1] + 1 == k) colors[--i] = 0;
      if (i == 0) break;
      ++colors[i - 1];
    }
  }, max_n);
}

// ---------------------------------------------------------------------------

enum class LeafColor { Red, Blue };

// Plane tree with red/blue leaves, optionally doubly rooted. The distinguished vertex is
// never colored, even when it is a leaf.
struct LeafColoredTree {
  PlaneTree tree;
  std::map<VertexId, LeafColor> leaf_colors;
  std::optional<VertexId> distinguished;

  void validate() const {
    if (distinguished && !tree.contains(*distinguished)) {
      throw DomainError("distinguished vertex " + distinguished->to_string() + " is not in the tree");
    }
    for (const auto& [v, color] : leaf_colors) {
      if (!tree.contains(v) || !tree.is_leaf(v)) throw DomainError("color on non-leaf vertex " + v.to_string());
      if (distinguished && v == *distinguished) throw DomainError("distinguished vertex must not be colored");
    }
    for_each_vertex(tree, [&](const VertexId& v, const PlaneTree& sub) {
      if (v.is_root() || !sub.is_trivial()) return;
      if (distinguished && v == *distinguished) return;
      if (!leaf_colors.contains(v)) throw DomainError("leaf " + v.to_string() + " has no color");
    });
  }

  friend bool operator==(const LeafColoredTree&, const LeafColoredTree&) = default;
};

// "TREE;letters[@path]": one of R, B per leaf in preorder, '-' for an uncolored distinguished leaf.
inline std::string to_string(const LeafColoredTree& t) {
  std::string out = to_string(t.tree) + ";";
  for_each_vertex(t.tree, [&](const VertexId& v, const PlaneTree& sub) {
    if (v.is_root() || !sub.is_trivial()) return;
    auto it = t.leaf_colors.find(v);
    out += it == t.leaf_colors.end() ? '-' : (it->second == LeafColor::Red ? 'R' : 'B');
  });
  if (t.distinguished) out += "@" + t.distinguished->to_string();
  return out;
}

inline LeafColoredTree parse_leaf_colored(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("missing ';' before leaf colors", text.size());
  LeafColoredTree out;
  out.tree = parse_tree(text.substr(0, semi));
  std::string_view rest = text.substr(semi + 1);
  if (const auto at = rest.find('@'); at != std::string_view::npos) {
    out.distinguished = VertexId::parse(rest.substr(at + 1));
    rest = rest.substr(0, at);
  }
  std::size_t pos = 0;
  for_each_vertex(out.tree, [&](const VertexId& v, const PlaneTree& sub) {
    if (v.is_root() || !sub.is_trivial()) return;
    if (pos >= rest.size()) throw ParseError("too few leaf colors", semi + 1 + pos);
    const char ch = rest[pos];
    if (ch == 'R') {
      out.leaf_colors.emplace(v, LeafColor::Red);
    } else if (ch == 'B') {
      out.leaf_colors.emplace(v, LeafColor::Blue);
    } else if (ch != '-') {
      throw ParseError("leaf color must be R, B or -", semi + 1 + pos);
    }
    ++pos;
  });
  if (pos != rest.size()) throw ParseError("too many leaf colors", semi + 1 + pos);
  out.validate();
  return out;
}

namespace detail {
// Calls f with every red/blue assignment to `leaves`.
template <typename F>
void for_each_leaf_assignment(const PlaneTree& tree, const std::vector<VertexId>& leaves,
                              const std::optional<VertexId>& distinguished, F& f) {
  const std::size_t count = leaves.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << count); ++mask) {
    LeafColoredTree t{tree, {}, distinguished};
    for (std::size_t i = 0; i < count; ++i) {
      t.leaf_colors.emplace(leaves[i], ((mask >> (count - 1 - i)) & 1U) ? LeafColor::Blue : LeafColor::Red);
    }
    f(t);
  }
}
}  // namespace detail

// Every n-edge plane tree with every leaf coloring (no distinguished vertex).
template <typename F>
void for_each_leaf_colored(std::size_t n, F&& f, std::size_t max_n = Limits::from_env().trees) {
  for_each_tree(n, [&](const PlaneTree& t) {
    std::vector<VertexId> leaves;
    for_each_vertex(t, [&](const VertexId& v, const PlaneTree& sub) {
      if (!v.is_root() && sub.is_trivial()) leaves.push_back(v);
    });
    detail::for_each_leaf_assignment(t, leaves, std::nullopt, f);
  }, max_n);
}

// Every n-edge leaf-colored doubly rooted tree.
template <typename F>
void for_each_leaf_colored_drt(std::size_t n, F&& f, std::size_t max_n = Limits::from_env().trees) {
  for_each_tree(n, [&](const PlaneTree& t) {
    const auto all = vertices(t);
    for (const auto& w : all) {
      std::vector<VertexId> leaves;
      for (const auto& v : all) {
        if (v != w && !v.is_root() && t.at(v).is_trivial()) leaves.push_back(v);
      }
      detail::for_each_leaf_assignment(t, leaves, std::optional<VertexId>(w), f);
    }
  }, max_n);
}

}  // namespace butterfly
