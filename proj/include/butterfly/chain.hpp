#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "butterfly/core.hpp"
#include "butterfly/tree.hpp"

namespace butterfly {

// Nonempty set of pairwise comparable vertices of a plane tree, stored root-first.
//
// A t-colored chain carries one color in [0, t) for every member except the deepest one;
// the deepest member plays the role of the distinguished vertex and is left uncolored.
struct Chain {
  PlaneTree tree;
  std::vector<VertexId> members;
  std::optional<std::vector<std::size_t>> colors;

  std::size_t size() const noexcept { return members.size(); }
  const VertexId& deepest() const { return members.back(); }

  void validate() const {
    if (members.empty()) throw DomainError("a chain needs at least one member");
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (!tree.contains(members[i])) throw DomainError("chain member " + members[i].to_string() + " not in tree");
      if (i > 0 && !members[i - 1].is_strict_ancestor_of(members[i])) {
        throw DomainError("chain members must be pairwise comparable and listed root-first");
      }
    }
    if (colors && colors->size() + 1 != members.size()) {
      throw DomainError("a colored chain needs one color per member above the deepest");
    }
  }

  friend bool operator==(const Chain&, const Chain&) = default;
};

// Sorts members root-first and validates; accepts any order of a comparable set.
inline Chain make_chain(PlaneTree tree, std::vector<VertexId> members,
                        std::optional<std::vector<std::size_t>> colors = std::nullopt) {
  std::sort(members.begin(), members.end(),
            [](const VertexId& a, const VertexId& b) { return a.depth() < b.depth(); });
  Chain c{std::move(tree), std::move(members), std::move(colors)};
  c.validate();
  return c;
}

// "TREE;m1,m2,..." with slash-delimited member paths (root = "ε"); colored members carry ":c".
inline std::string to_string(const Chain& c) {
  std::string out = to_string(c.tree) + ";";
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    if (i != 0) out += ',';
    out += c.members[i].to_string();
    if (c.colors && i + 1 < c.members.size()) out += ":" + std::to_string((*c.colors)[i]);
  }
  return out;
}

inline Chain parse_chain(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("missing ';' before chain members", text.size());
  PlaneTree tree = parse_tree(text.substr(0, semi));
  std::vector<VertexId> members;
  std::vector<std::size_t> colors;
  std::size_t start = semi + 1;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    if (item.empty()) throw ParseError("empty chain member", start);
    if (const auto colon = item.find(':'); colon != std::string_view::npos) {
      members.push_back(VertexId::parse(item.substr(0, colon)));
      colors.push_back(std::stoul(std::string(item.substr(colon + 1))));
    } else {
      members.push_back(VertexId::parse(item));
    }
    start = end + 1;
  }
  if (colors.empty()) return make_chain(std::move(tree), std::move(members));
  return make_chain(std::move(tree), std::move(members), std::move(colors));
}

// All nonempty chains of `tree`: grouped by deepest member in preorder, then by the subset of
// strict ancestors taken as a binary counter.
inline std::vector<Chain> enumerate_chains(const PlaneTree& tree) {
  std::vector<Chain> out;
  for (const auto& w : vertices(tree)) {
    const std::size_t d = w.depth();
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
      Chain c{tree, {}, std::nullopt};
      for (std::size_t level = 0; level < d; ++level) {
        if ((mask >> (d - 1 - level)) & 1U) c.members.push_back(w.prefix(level));
      }
      c.members.push_back(w);
      out.push_back(std::move(c));
    }
  }
  return out;
}

template <typename F>
void for_each_chain(std::size_t n, F&& f, std::size_t max_n = Limits::from_env().chains) {
  check_capacity(n, max_n, "chain enumeration");
  for_each_tree(n, [&](const PlaneTree& t) {
    for (auto& c : enumerate_chains(t)) f(std::move(c));
  }, max_n);
}

// Every n-edge chain with every coloring of its non-deepest members by t colors.
template <typename F>
void for_each_colored_chain(std::size_t n, std::size_t t, F&& f, std::size_t max_n = Limits::from_env().chains) {
  if (t == 0) throw DomainError("colored chains need t >= 1");
  for_each_chain(n, [&](Chain c) {
    std::vector<std::size_t> colors(c.size() - 1, 0);
    while (true) {
      Chain colored = c;
      colored.colors = colors;
      f(std::move(colored));
      std::size_t i = colors.size();
      while (i > 0 && colors[i - 1] + 1 == t) colors[--i] = 0;
      if (i == 0) break;
      ++colors[i - 1];
    }
  }, max_n);
}

}  // namespace butterfly
