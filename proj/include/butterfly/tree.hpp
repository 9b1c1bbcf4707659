#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "butterfly/core.hpp"

namespace butterfly {

// Address of a vertex as the sequence of 0-based child indices from the root.
// The root has the empty path; u is a strict ancestor of v iff u.path is a strict prefix of v.path.
struct VertexId {
  std::vector<std::size_t> path;

  VertexId() = default;
  explicit VertexId(std::vector<std::size_t> p) : path(std::move(p)) {}

  static VertexId root() { return VertexId{}; }

  std::size_t depth() const noexcept { return path.size(); }
  bool is_root() const noexcept { return path.empty(); }

  VertexId child(std::size_t index) const {
    VertexId out = *this;
    out.path.push_back(index);
    return out;
  }

  VertexId parent() const {
    if (is_root()) throw DomainError("the root has no parent");
    VertexId out = *this;
    out.path.pop_back();
    return out;
  }

  // Ancestor at the given depth (prefix of that length).
  VertexId prefix(std::size_t length) const {
    if (length > path.size()) throw DomainError("prefix longer than vertex depth");
    return VertexId{std::vector<std::size_t>(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(length))};
  }

  bool is_strict_ancestor_of(const VertexId& other) const {
    return path.size() < other.path.size() && std::equal(path.begin(), path.end(), other.path.begin());
  }

  bool comparable_with(const VertexId& other) const {
    return *this == other || is_strict_ancestor_of(other) || other.is_strict_ancestor_of(*this);
  }

  // "ε" for the root, otherwise slash-delimited indices such as "1/0/2".
  std::string to_string() const {
    if (path.empty()) return "ε";
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i != 0) out += '/';
      out += std::to_string(path[i]);
    }
    return out;
  }

  static VertexId parse(std::string_view text) {
    if (text == "ε" || text.empty()) return VertexId{};
    VertexId out;
    std::size_t value = 0;
    bool have_digit = false;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == '/') {
        if (!have_digit) throw ParseError("empty component in vertex path", i);
        out.path.push_back(value);
        value = 0;
        have_digit = false;
      } else if (text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        have_digit = true;
      } else {
        throw ParseError("unexpected character in vertex path", i);
      }
    }
    return out;
  }

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

// Rooted ordered tree. Children are kept left to right.
class PlaneTree {
 public:
  PlaneTree() = default;

  explicit PlaneTree(std::vector<PlaneTree> children) : children_(std::move(children)) {
    for (const auto& c : children_) edges_ += c.edges_ + 1;
  }

  const std::vector<PlaneTree>& children() const noexcept { return children_; }
  std::size_t child_count() const noexcept { return children_.size(); }
  const PlaneTree& child(std::size_t i) const { return children_.at(i); }

  std::size_t edge_count() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return edges_ + 1; }
  bool is_trivial() const noexcept { return children_.empty(); }

  bool contains(const VertexId& v) const {
    const PlaneTree* node = this;
    for (std::size_t index : v.path) {
      if (index >= node->children_.size()) return false;
      node = &node->children_[index];
    }
    return true;
  }

  const PlaneTree& at(const VertexId& v) const {
    const PlaneTree* node = this;
    for (std::size_t index : v.path) {
      if (index >= node->children_.size()) {
        throw DomainError("vertex " + v.to_string() + " does not exist in tree");
      }
      node = &node->children_[index];
    }
    return *node;
  }

  // Non-root vertex with no children. The single-vertex tree has no leaves.
  bool is_leaf(const VertexId& v) const { return !v.is_root() && at(v).is_trivial(); }

  std::size_t depth() const {
    std::size_t d = 0;
    for (const auto& c : children_) d = std::max(d, c.depth() + 1);
    return d;
  }

  friend bool operator==(const PlaneTree& a, const PlaneTree& b) { return a.children_ == b.children_; }

 private:
  std::vector<PlaneTree> children_;
  std::size_t edges_ = 0;
};

// Tree with a single root edge above `tree`.
inline PlaneTree planted(PlaneTree tree) {
  std::vector<PlaneTree> kids;
  kids.push_back(std::move(tree));
  return PlaneTree(std::move(kids));
}

// ---------------------------------------------------------------------------
// Text and JSON forms

namespace detail {
inline void serialize_into(const PlaneTree& t, std::string& out) {
  for (const auto& c : t.children()) {
    out += '(';
    serialize_into(c, out);
    out += ')';
  }
}
}  // namespace detail

// Balanced parentheses, children left to right; the single vertex is "".
inline std::string to_string(const PlaneTree& tree) {
  std::string out;
  out.reserve(2 * tree.edge_count());
  detail::serialize_into(tree, out);
  return out;
}

inline PlaneTree parse_tree(std::string_view text) {
  std::vector<std::vector<PlaneTree>> stack(1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '(') {
      stack.emplace_back();
    } else if (ch == ')') {
      if (stack.size() == 1) throw ParseError("unmatched ')'", i);
      PlaneTree node(std::move(stack.back()));
      stack.pop_back();
      stack.back().push_back(std::move(node));
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", i);
    }
  }
  if (stack.size() != 1) throw ParseError("unclosed '('", text.size());
  return PlaneTree(std::move(stack.front()));
}

// Nested arrays of child lists: the single vertex is [], one edge is [[]].
inline nlohmann::json to_json(const PlaneTree& tree) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : tree.children()) out.push_back(to_json(c));
  return out;
}

inline PlaneTree tree_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("tree JSON must be a nested array");
  std::vector<PlaneTree> kids;
  kids.reserve(j.size());
  for (const auto& c : j) kids.push_back(tree_from_json(c));
  return PlaneTree(std::move(kids));
}

// ---------------------------------------------------------------------------
// Traversals

namespace detail {
template <typename F>
void visit_preorder(const PlaneTree& t, VertexId& at, F& f) {
  f(at, t);
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    at.path.push_back(i);
    visit_preorder(t.child(i), at, f);
    at.path.pop_back();
  }
}

template <typename F>
void visit_rl_preorder(const PlaneTree& t, VertexId& at, F& f) {
  f(at, t);
  for (std::size_t i = t.child_count(); i-- > 0;) {
    at.path.push_back(i);
    visit_rl_preorder(t.child(i), at, f);
    at.path.pop_back();
  }
}
}  // namespace detail

// Calls f(VertexId, const PlaneTree& subtree) in left-to-right preorder.
template <typename F>
void for_each_vertex(const PlaneTree& tree, F&& f) {
  VertexId at;
  detail::visit_preorder(tree, at, f);
}

inline std::vector<VertexId> vertices(const PlaneTree& tree) {
  std::vector<VertexId> out;
  out.reserve(tree.vertex_count());
  for_each_vertex(tree, [&](const VertexId& v, const PlaneTree&) { out.push_back(v); });
  return out;
}

inline std::size_t leaf_count(const PlaneTree& tree) {
  std::size_t leaves = 0;
  for_each_vertex(tree, [&](const VertexId& v, const PlaneTree& sub) {
    if (!v.is_root() && sub.is_trivial()) ++leaves;
  });
  return leaves;
}

// Vertices in right-to-left preorder: the root, then the subtrees from the last child to the first.
// The position of a vertex in this list is its label.
inline std::vector<VertexId> rl_preorder(const PlaneTree& tree) {
  std::vector<VertexId> out;
  out.reserve(tree.vertex_count());
  VertexId at;
  auto collect = [&](const VertexId& v, const PlaneTree&) { out.push_back(v); };
  detail::visit_rl_preorder(tree, at, collect);
  return out;
}

inline std::map<VertexId, std::size_t> rl_preorder_labels(const PlaneTree& tree) {
  std::map<VertexId, std::size_t> labels;
  const auto order = rl_preorder(tree);
  for (std::size_t i = 0; i < order.size(); ++i) labels.emplace(order[i], i);
  return labels;
}

inline std::size_t rl_label(const PlaneTree& tree, const VertexId& v) {
  if (!tree.contains(v)) throw DomainError("vertex " + v.to_string() + " does not exist in tree");
  const auto order = rl_preorder(tree);
  return static_cast<std::size_t>(std::find(order.begin(), order.end(), v) - order.begin());
}

enum class Visit { First, Second };

struct EdgeEvent {
  VertexId child;  // the edge is identified by its lower endpoint
  Visit visit;
  bool leaf;       // the lower endpoint is a leaf (external edge)

  friend bool operator==(const EdgeEvent&, const EdgeEvent&) = default;
};

namespace detail {
inline void collect_events(const PlaneTree& t, VertexId& at, std::vector<EdgeEvent>& out) {
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    at.path.push_back(i);
    const bool leaf = t.child(i).is_trivial();
    out.push_back({at, Visit::First, leaf});
    collect_events(t.child(i), at, out);
    out.push_back({at, Visit::Second, leaf});
    at.path.pop_back();
  }
}
}  // namespace detail

// Left-to-right preorder walk as edge visits; each edge is entered once and left once.
inline std::vector<EdgeEvent> lr_preorder_events(const PlaneTree& tree) {
  std::vector<EdgeEvent> out;
  out.reserve(2 * tree.edge_count());
  VertexId at;
  detail::collect_events(tree, at, out);
  return out;
}

enum class EdgeKind { Internal, External };

inline std::map<VertexId, EdgeKind> classify_edges(const PlaneTree& tree) {
  std::map<VertexId, EdgeKind> out;
  for_each_vertex(tree, [&](const VertexId& v, const PlaneTree& sub) {
    if (!v.is_root()) out.emplace(v, sub.is_trivial() ? EdgeKind::External : EdgeKind::Internal);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive generation

namespace detail {
template <typename F>
void balanced_strings(std::string& buf, std::size_t open_left, std::size_t depth, F& f) {
  if (open_left == 0 && depth == 0) {
    f(std::as_const(buf));
    return;
  }
  if (open_left > 0) {
    buf.push_back('(');
    balanced_strings(buf, open_left - 1, depth + 1, f);
    buf.pop_back();
  }
  if (depth > 0) {
    buf.push_back(')');
    balanced_strings(buf, open_left, depth - 1, f);
    buf.pop_back();
  }
}
}  // namespace detail

// Streams the serializations of all n-edge trees in lexicographic order with '(' < ')'.
template <typename F>
void for_each_tree_string(std::size_t n, F&& f, std::size_t max_n = Limits::from_env().trees) {
  check_capacity(n, max_n, "tree enumeration");
  std::string buf;
  buf.reserve(2 * n);
  detail::balanced_strings(buf, n, 0, f);
}

template <typename F>
void for_each_tree(std::size_t n, F&& f, std::size_t max_n = Limits::from_env().trees) {
  for_each_tree_string(n, [&](const std::string& s) { f(parse_tree(s)); }, max_n);
}

inline std::vector<PlaneTree> enumerate_trees(std::size_t n, std::size_t max_n = Limits::from_env().trees) {
  std::vector<PlaneTree> out;
  for_each_tree(n, [&](PlaneTree t) { out.push_back(std::move(t)); }, max_n);
  return out;
}

// ---------------------------------------------------------------------------
// Doubly rooted trees

struct DoublyRootedTree {
  PlaneTree tree;
  VertexId distinguished;

  DoublyRootedTree() = default;
  DoublyRootedTree(PlaneTree t, VertexId w) : tree(std::move(t)), distinguished(std::move(w)) {
    if (!tree.contains(distinguished)) {
      throw DomainError("distinguished vertex " + distinguished.to_string() + " is not in the tree");
    }
  }

  std::size_t stem_size() const noexcept { return distinguished.depth(); }

  friend bool operator==(const DoublyRootedTree&, const DoublyRootedTree&) = default;
};

// "TREE@path", e.g. "(()())@0".
inline std::string to_string(const DoublyRootedTree& d) {
  return to_string(d.tree) + "@" + d.distinguished.to_string();
}

inline DoublyRootedTree parse_doubly_rooted(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) throw ParseError("missing '@' before distinguished vertex", text.size());
  return DoublyRootedTree(parse_tree(text.substr(0, at)), VertexId::parse(text.substr(at + 1)));
}

inline DoublyRootedTree distinguish_by_label(const PlaneTree& tree, std::size_t label) {
  if (label > tree.edge_count()) {
    throw DomainError("label " + std::to_string(label) + " exceeds edge count " +
                      std::to_string(tree.edge_count()));
  }
  return DoublyRootedTree(tree, rl_preorder(tree)[label]);
}

// Every n-edge doubly rooted tree: trees in enumeration order, vertices in preorder.
template <typename F>
void for_each_doubly_rooted(std::size_t n, F&& f, std::size_t max_n = Limits::from_env().trees) {
  for_each_tree(n, [&](const PlaneTree& t) {
    for (auto& v : vertices(t)) f(DoublyRootedTree(t, std::move(v)));
  }, max_n);
}

}  // namespace butterfly
