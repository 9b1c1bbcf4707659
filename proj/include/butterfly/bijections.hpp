#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "butterfly/chain.hpp"
#include "butterfly/colored.hpp"
#include "butterfly/core.hpp"
#include "butterfly/lattice_path.hpp"
#include "butterfly/tree.hpp"

namespace butterfly {

// ---------------------------------------------------------------------------
// Butterfly decomposition

// A stem vertex v_i with its descendants left (L_i) and right (R_i) of the stem, plus the
// stem edge below v_i.
struct Butterfly {
  PlaneTree left;
  PlaneTree right;

  std::size_t weight() const noexcept { return left.edge_count() + right.edge_count() + 1; }

  friend bool operator==(const Butterfly&, const Butterfly&) = default;
};

struct ButterflyDecomposition {
  std::vector<Butterfly> butterflies;  // from the root down the stem
  PlaneTree tail;                      // subtree at the distinguished vertex

  std::size_t edge_count() const noexcept {
    std::size_t n = tail.edge_count();
    for (const auto& b : butterflies) n += b.weight();
    return n;
  }

  friend bool operator==(const ButterflyDecomposition&, const ButterflyDecomposition&) = default;
};

inline ButterflyDecomposition butterfly_decompose(const DoublyRootedTree& drt) {
  ButterflyDecomposition out;
  out.butterflies.reserve(drt.stem_size());
  const PlaneTree* node = &drt.tree;
  for (std::size_t index : drt.distinguished.path) {
    const auto& kids = node->children();
    const auto split = kids.begin() + static_cast<std::ptrdiff_t>(index);
    out.butterflies.push_back({PlaneTree(std::vector<PlaneTree>(kids.begin(), split)),
                               PlaneTree(std::vector<PlaneTree>(split + 1, kids.end()))});
    node = &kids[index];
  }
  out.tail = *node;
  return out;
}

inline DoublyRootedTree butterfly_compose(const ButterflyDecomposition& d) {
  PlaneTree node = d.tail;
  std::vector<std::size_t> path(d.butterflies.size());
  for (std::size_t i = d.butterflies.size(); i-- > 0;) {
    const auto& b = d.butterflies[i];
    std::vector<PlaneTree> kids = b.left.children();
    path[i] = kids.size();
    kids.push_back(std::move(node));
    kids.insert(kids.end(), b.right.children().begin(), b.right.children().end());
    node = PlaneTree(std::move(kids));
  }
  return DoublyRootedTree(std::move(node), VertexId(std::move(path)));
}

// Number of edges on the path from the root to the distinguished vertex.
inline std::size_t stem_size(const DoublyRootedTree& drt) { return drt.distinguished.depth(); }

// Edges whose lower endpoint has right-to-left preorder label at most that of the
// distinguished vertex: the stem plus everything to its right.
inline std::size_t prefix_edge_count(const DoublyRootedTree& drt) {
  const auto order = rl_preorder(drt.tree);
  std::size_t count = 0;
  for (std::size_t label = 1; label < order.size(); ++label) {
    ++count;
    if (order[label] == drt.distinguished) return count;
  }
  return 0;  // distinguished is the root
}

// ---------------------------------------------------------------------------
// Glove bijection: plane trees and Dyck paths

namespace detail {
inline void glove_into(const PlaneTree& t, LatticePath& out) {
  for (const auto& c : t.children()) {
    out.push_back(Step::Up);
    glove_into(c, out);
    out.push_back(Step::Down);
  }
}

inline LatticePath planted_glove(const PlaneTree& t) {
  LatticePath out(Alphabet::Dyck);
  out.push_back(Step::Up);
  glove_into(t, out);
  out.push_back(Step::Down);
  return out;
}

// Inverse of glove_into on an arbitrary nonnegative step range without H.
inline PlaneTree unglove(const std::vector<Step>& steps, std::size_t begin, std::size_t end) {
  std::vector<std::vector<PlaneTree>> stack(1);
  for (std::size_t i = begin; i < end; ++i) {
    if (steps[i] == Step::Up) {
      stack.emplace_back();
    } else if (steps[i] == Step::Down) {
      if (stack.size() == 1) throw DomainError("path dips below its base line");
      PlaneTree node(std::move(stack.back()));
      stack.pop_back();
      stack.back().push_back(std::move(node));
    } else {
      throw DomainError("horizontal step in a Dyck path");
    }
  }
  if (stack.size() != 1) throw DomainError("path does not return to its base line");
  return PlaneTree(std::move(stack.front()));
}

// Tree whose planted glove image is the elevated path `p` (U X D -> tree of X).
inline PlaneTree unglove_elevated(const LatticePath& p) {
  return unglove(p.steps(), 1, p.size() - 1);
}

inline void require_dyck_alphabet(const LatticePath& p) {
  if (p.alphabet() != Alphabet::Dyck || p.count(Step::Horiz) != 0) {
    throw DomainError("expected a Dyck-alphabet path, got " + to_string(p));
  }
}
}  // namespace detail

inline LatticePath glove_tree_to_dyck(const PlaneTree& tree) {
  LatticePath out(Alphabet::Dyck);
  detail::glove_into(tree, out);
  return out;
}

inline PlaneTree glove_dyck_to_tree(const LatticePath& path) {
  detail::require_dyck_alphabet(path);
  return detail::unglove(path.steps(), 0, path.size());
}

// ---------------------------------------------------------------------------
// Doubly rooted trees and free Dyck paths

// P_1 Q_1 ... P_k Q_k P_{k+1}: P_i = glove(L_i), P_{k+1} = glove(T'), Q_i = reflected glove of R_i planted.
inline LatticePath drt_to_free_dyck(const DoublyRootedTree& drt) {
  const auto d = butterfly_decompose(drt);
  LatticePath out(Alphabet::Dyck);
  for (const auto& b : d.butterflies) {
    out += glove_tree_to_dyck(b.left);
    out += reflect(detail::planted_glove(b.right));
  }
  out += glove_tree_to_dyck(d.tail);
  return out;
}

inline DoublyRootedTree free_dyck_to_drt(const LatticePath& path) {
  detail::require_dyck_alphabet(path);
  ButterflyDecomposition d;
  std::vector<PlaneTree> pending;  // root children gathered since the last flaw block
  for (const auto& seg : decompose(path)) {
    if (seg.kind == SegmentKind::Positive) {
      pending.push_back(detail::unglove_elevated(seg.path));
    } else {
      d.butterflies.push_back({PlaneTree(std::move(pending)), detail::unglove_elevated(reflect(seg.path))});
      pending.clear();
    }
  }
  d.tail = PlaneTree(std::move(pending));
  return butterfly_compose(d);
}

// ---------------------------------------------------------------------------
// Root-colored trees

namespace detail {
inline void require_k(const KColoredTree& t, std::size_t k) {
  if (t.k != k) throw DomainError("expected a " + std::to_string(k) + "-colored tree, got k = " + std::to_string(t.k));
  t.validate();
}

// Root children L_1 T_1 L_2 T_2 ... L_k T_k T', where L_i and T' contribute their own root
// children in `side_color` and each T_i (R_i with v_i as the child) gets stem_colors[i].
inline KColoredTree assemble_root_colored(const ButterflyDecomposition& d, std::size_t k, std::size_t side_color,
                                          const std::vector<std::size_t>& stem_colors) {
  std::vector<PlaneTree> kids;
  std::vector<std::size_t> colors;
  for (std::size_t i = 0; i < d.butterflies.size(); ++i) {
    for (const auto& c : d.butterflies[i].left.children()) {
      kids.push_back(c);
      colors.push_back(side_color);
    }
    kids.push_back(d.butterflies[i].right);
    colors.push_back(stem_colors[i]);
  }
  for (const auto& c : d.tail.children()) {
    kids.push_back(c);
    colors.push_back(side_color);
  }
  return KColoredTree{PlaneTree(std::move(kids)), k, std::move(colors)};
}

// Inverse of assemble_root_colored; returns the decomposition and the stem colors in order.
inline std::pair<ButterflyDecomposition, std::vector<std::size_t>> split_root_colored(const KColoredTree& t,
                                                                                     std::size_t side_color) {
  ButterflyDecomposition d;
  std::vector<std::size_t> stem_colors;
  std::vector<PlaneTree> pending;
  for (std::size_t i = 0; i < t.tree.child_count(); ++i) {
    if (t.root_child_colors[i] == side_color) {
      pending.push_back(t.tree.child(i));
    } else {
      d.butterflies.push_back({PlaneTree(std::move(pending)), t.tree.child(i)});
      stem_colors.push_back(t.root_child_colors[i]);
      pending.clear();
    }
  }
  d.tail = PlaneTree(std::move(pending));
  return {std::move(d), std::move(stem_colors)};
}
}  // namespace detail

// Each planted root subtree becomes one irreducible segment: white above the axis, black below.
inline LatticePath bicolored_to_free_dyck(const KColoredTree& t) {
  detail::require_k(t, 2);
  LatticePath out(Alphabet::Dyck);
  for (std::size_t i = 0; i < t.tree.child_count(); ++i) {
    const auto seg = detail::planted_glove(t.tree.child(i));
    out += t.root_child_colors[i] == kBlack ? reflect(seg) : seg;
  }
  return out;
}

inline KColoredTree free_dyck_to_bicolored(const LatticePath& path) {
  detail::require_dyck_alphabet(path);
  std::vector<PlaneTree> kids;
  std::vector<std::size_t> colors;
  for (const auto& seg : decompose(path)) {
    const bool black = seg.kind == SegmentKind::Negative;
    kids.push_back(detail::unglove_elevated(black ? reflect(seg.path) : seg.path));
    colors.push_back(black ? kBlack : kWhite);
  }
  return KColoredTree{PlaneTree(std::move(kids)), 2, std::move(colors)};
}

// Direct map: L_i and T' root children black, the planted R_i white.
inline KColoredTree drt_to_bicolored(const DoublyRootedTree& drt) {
  const auto d = butterfly_decompose(drt);
  return detail::assemble_root_colored(d, 2, kBlack, std::vector<std::size_t>(d.butterflies.size(), kWhite));
}

inline DoublyRootedTree bicolored_to_drt(const KColoredTree& t) {
  detail::require_k(t, 2);
  return butterfly_compose(detail::split_root_colored(t, kBlack).first);
}

// ---------------------------------------------------------------------------
// Leaf-colored trees and Schroder paths

namespace detail {
using ColorList = std::vector<std::pair<VertexId, LeafColor>>;

// Internal edge -> U ... D, red leaf edge -> UD, blue leaf edge -> H, for children [first, last)
// of `node`, which sits at vertex `at`.
inline void encode_leaf_colored_range(const PlaneTree& node, VertexId& at, std::size_t first, std::size_t last,
                                      const std::map<VertexId, LeafColor>& colors, LatticePath& out) {
  for (std::size_t i = first; i < last; ++i) {
    at.path.push_back(i);
    const auto& c = node.child(i);
    if (c.is_trivial()) {
      const auto it = colors.find(at);
      if (it == colors.end()) throw DomainError("leaf " + at.to_string() + " has no color");
      if (it->second == LeafColor::Red) {
        out.push_back(Step::Up);
        out.push_back(Step::Down);
      } else {
        out.push_back(Step::Horiz);
      }
    } else {
      out.push_back(Step::Up);
      encode_leaf_colored_range(c, at, 0, c.child_count(), colors, out);
      out.push_back(Step::Down);
    }
    at.path.pop_back();
  }
}

inline void encode_leaf_colored(const PlaneTree& node, VertexId& at, const std::map<VertexId, LeafColor>& colors,
                                LatticePath& out) {
  encode_leaf_colored_range(node, at, 0, node.child_count(), colors, out);
}

struct ColoredForest {
  std::vector<PlaneTree> roots;  // children of an implicit root
  ColorList colors;              // leaf ids relative to that implicit root
};

// Decodes steps[pos, ...) until an unmatched D or the end; pos is left on the D.
inline ColoredForest decode_leaf_colored(const std::vector<Step>& steps, std::size_t& pos) {
  ColoredForest out;
  while (pos < steps.size() && steps[pos] != Step::Down) {
    const std::size_t index = out.roots.size();
    if (steps[pos] == Step::Horiz) {
      out.roots.emplace_back();
      out.colors.emplace_back(VertexId({index}), LeafColor::Blue);
      ++pos;
    } else if (pos + 1 < steps.size() && steps[pos + 1] == Step::Down) {
      out.roots.emplace_back();
      out.colors.emplace_back(VertexId({index}), LeafColor::Red);
      pos += 2;
    } else {
      ++pos;
      ColoredForest inner = decode_leaf_colored(steps, pos);
      if (pos >= steps.size()) throw DomainError("path does not return to its base line");
      ++pos;
      out.roots.emplace_back(std::move(inner.roots));
      for (auto& [v, color] : inner.colors) {
        v.path.insert(v.path.begin(), index);
        out.colors.emplace_back(std::move(v), color);
      }
    }
  }
  return out;
}

inline ColoredForest decode_leaf_colored_path(const LatticePath& p) {
  std::size_t pos = 0;
  ColoredForest out = decode_leaf_colored(p.steps(), pos);
  if (pos != p.size()) throw DomainError("path dips below its base line: " + to_string(p));
  return out;
}

// Forest of an elevated path U X D.
inline ColoredForest decode_leaf_colored_elevated(const LatticePath& p) {
  std::vector<Step> inner(p.steps().begin() + 1, p.steps().end() - 1);
  return decode_leaf_colored_path(LatticePath(std::move(inner), Alphabet::Schroder));
}

inline void shift_root_index(ColorList& colors, std::size_t offset) {
  for (auto& entry : colors) entry.first.path.front() += offset;
}
}  // namespace detail

inline LatticePath leafcolored_to_schroder(const LeafColoredTree& t) {
  if (t.distinguished) throw DomainError("expected a leaf-colored tree without a distinguished vertex");
  t.validate();
  LatticePath out(Alphabet::Schroder);
  VertexId at;
  detail::encode_leaf_colored(t.tree, at, t.leaf_colors, out);
  return out;
}

inline LeafColoredTree schroder_to_leafcolored(const LatticePath& path) {
  if (!path.is_free() || path.min_height() < 0) {
    throw DomainError("expected a nonnegative Schroder path, got " + to_string(path));
  }
  auto forest = detail::decode_leaf_colored_path(path);
  LeafColoredTree out{PlaneTree(std::move(forest.roots)), {}, std::nullopt};
  for (auto& [v, color] : forest.colors) out.leaf_colors.emplace(std::move(v), color);
  return out;
}

// Butterfly decomposition with the leaf-colored encoding: L_i and T' give nonnegative
// pieces, each planted R_i gives a reflected elevated piece whose planted edge is internal.
inline LatticePath leafcolored_drt_to_free_schroder(const LeafColoredTree& t) {
  if (!t.distinguished) throw DomainError("expected a leaf-colored doubly rooted tree");
  t.validate();
  LatticePath out(Alphabet::Schroder);
  VertexId at;
  const PlaneTree* node = &t.tree;
  for (std::size_t index : t.distinguished->path) {
    detail::encode_leaf_colored_range(*node, at, 0, index, t.leaf_colors, out);
    LatticePath q(Alphabet::Schroder);
    q.push_back(Step::Up);
    detail::encode_leaf_colored_range(*node, at, index + 1, node->child_count(), t.leaf_colors, q);
    q.push_back(Step::Down);
    out += reflect(q);
    node = &node->child(index);
    at.path.push_back(index);
  }
  detail::encode_leaf_colored(*node, at, t.leaf_colors, out);
  return out;
}

inline LeafColoredTree free_schroder_to_leafcolored_drt(const LatticePath& path) {
  struct Piece {
    detail::ColoredForest left;
    detail::ColoredForest right;
  };
  std::vector<Piece> pieces;
  LatticePath pending(Alphabet::Schroder);
  for (const auto& seg : decompose(path)) {
    if (seg.kind == SegmentKind::Negative) {
      pieces.push_back({detail::decode_leaf_colored_path(pending), detail::decode_leaf_colored_elevated(reflect(seg.path))});
      pending = LatticePath(Alphabet::Schroder);
    } else {
      pending += seg.path;
    }
  }
  detail::ColoredForest node = detail::decode_leaf_colored_path(pending);
  PlaneTree subtree(std::move(node.roots));
  detail::ColorList colors = std::move(node.colors);
  std::vector<std::size_t> stem(pieces.size());
  for (std::size_t i = pieces.size(); i-- > 0;) {
    auto& piece = pieces[i];
    const std::size_t a = piece.left.roots.size();
    stem[i] = a;
    for (auto& entry : colors) entry.first.path.insert(entry.first.path.begin(), a);
    detail::shift_root_index(piece.right.colors, a + 1);
    std::vector<PlaneTree> kids = std::move(piece.left.roots);
    kids.push_back(std::move(subtree));
    for (auto& r : piece.right.roots) kids.push_back(std::move(r));
    subtree = PlaneTree(std::move(kids));
    colors.insert(colors.end(), piece.left.colors.begin(), piece.left.colors.end());
    colors.insert(colors.end(), piece.right.colors.begin(), piece.right.colors.end());
  }
  LeafColoredTree out{std::move(subtree), {}, VertexId(std::move(stem))};
  for (auto& [v, color] : colors) out.leaf_colors.emplace(std::move(v), color);
  return out;
}

// ---------------------------------------------------------------------------
// Chains and k-colored trees

namespace detail {
// Stem classes for a chain: 0 (black) for stem vertices outside the chain, otherwise
// 1 + the member's color (white classes).
inline std::vector<std::size_t> stem_classes(const Chain& c) {
  const VertexId& w = c.deepest();
  std::vector<std::size_t> classes(w.depth(), 0);
  for (std::size_t m = 0; m + 1 < c.members.size(); ++m) {
    classes[c.members[m].depth()] = 1 + (c.colors ? (*c.colors)[m] : 0);
  }
  return classes;
}

inline Chain chain_from_stem_classes(const DoublyRootedTree& drt, const std::vector<std::size_t>& classes,
                                     bool colored) {
  Chain out{drt.tree, {}, std::nullopt};
  std::vector<std::size_t> colors;
  for (std::size_t level = 0; level < classes.size(); ++level) {
    if (classes[level] == 0) continue;
    out.members.push_back(drt.distinguished.prefix(level));
    colors.push_back(classes[level] - 1);
  }
  out.members.push_back(drt.distinguished);
  if (colored) out.colors = std::move(colors);
  return out;
}
}  // namespace detail

// Butterfly decomposition along the stem to the deepest chain member: L_i and T' root
// children red, the planted R_i white when v_i is in the chain and black otherwise.
inline KColoredTree chain_to_tricolored(const Chain& c) {
  c.validate();
  if (c.colors) throw DomainError("chain_to_tricolored takes an uncolored chain");
  const auto d = butterfly_decompose(DoublyRootedTree(c.tree, c.deepest()));
  return detail::assemble_root_colored(d, 3, kRed, detail::stem_classes(c));
}

inline Chain tricolored_to_chain(const KColoredTree& t) {
  detail::require_k(t, 3);
  auto [d, classes] = detail::split_root_colored(t, kRed);
  return detail::chain_from_stem_classes(butterfly_compose(d), classes, false);
}

// Chain whose non-deepest members carry colors in [0, t) to a (t + 2)-colored tree. Color 0 is
// black, 1..t are the white classes, t + 1 is red; t = 1 is chain_to_tricolored.
inline KColoredTree colored_chain_to_kcolored(const Chain& c, std::size_t t) {
  c.validate();
  if (t == 0) throw DomainError("colored chains need t >= 1");
  if (!c.colors) throw DomainError("chain is not colored");
  for (std::size_t color : *c.colors) {
    if (color >= t) throw DomainError("chain color " + std::to_string(color) + " out of range for t = " + std::to_string(t));
  }
  const auto d = butterfly_decompose(DoublyRootedTree(c.tree, c.deepest()));
  return detail::assemble_root_colored(d, t + 2, t + 1, detail::stem_classes(c));
}

inline Chain kcolored_to_colored_chain(const KColoredTree& t) {
  if (t.k < 3) throw DomainError("colored chains correspond to k-colored trees with k >= 3");
  t.validate();
  auto [d, classes] = detail::split_root_colored(t, t.k - 1);
  return detail::chain_from_stem_classes(butterfly_compose(d), classes, true);
}

}  // namespace butterfly
