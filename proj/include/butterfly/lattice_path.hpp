#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "butterfly/core.hpp"

namespace butterfly {

// Up = (1, 1), Down = (1, -1), Horiz = (2, 0).
enum class Step : char { Up = 'U', Down = 'D', Horiz = 'H' };

enum class Alphabet { Dyck, Schroder };

inline int rise(Step s) noexcept { return s == Step::Up ? 1 : (s == Step::Down ? -1 : 0); }
inline std::size_t advance(Step s) noexcept { return s == Step::Horiz ? 2 : 1; }

inline Step reflect(Step s) noexcept {
  return s == Step::Up ? Step::Down : (s == Step::Down ? Step::Up : Step::Horiz);
}

class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(Alphabet alphabet) : alphabet_(alphabet) {}

  LatticePath(std::vector<Step> steps, Alphabet alphabet) : steps_(std::move(steps)), alphabet_(alphabet) {
    if (alphabet_ == Alphabet::Dyck && std::find(steps_.begin(), steps_.end(), Step::Horiz) != steps_.end()) {
      throw DomainError("horizontal step in a Dyck-alphabet path");
    }
  }

  const std::vector<Step>& steps() const noexcept { return steps_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_.at(i); }
  Step back() const { return steps_.back(); }

  std::size_t count(Step s) const { return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), s)); }

  // Horizontal extent; a path of semilength n spans 2n.
  std::size_t extent() const {
    std::size_t x = 0;
    for (Step s : steps_) x += advance(s);
    return x;
  }
  std::size_t semilength() const { return extent() / 2; }

  // Height after each step.
  std::vector<int> height_profile() const {
    std::vector<int> out;
    out.reserve(steps_.size());
    int h = 0;
    for (Step s : steps_) out.push_back(h += rise(s));
    return out;
  }

  int final_height() const {
    int h = 0;
    for (Step s : steps_) h += rise(s);
    return h;
  }

  int min_height() const {
    int h = 0, lo = 0;
    for (Step s : steps_) lo = std::min(lo, h += rise(s));
    return lo;
  }

  bool is_free() const { return final_height() == 0; }

  void push_back(Step s) {
    if (alphabet_ == Alphabet::Dyck && s == Step::Horiz) throw DomainError("horizontal step in a Dyck-alphabet path");
    steps_.push_back(s);
  }

  void pop_back() { steps_.pop_back(); }

  LatticePath& operator+=(const LatticePath& other) {
    if (alphabet_ == Alphabet::Dyck && other.alphabet_ == Alphabet::Schroder) {
      if (other.count(Step::Horiz) != 0) throw DomainError("horizontal step in a Dyck-alphabet path");
    }
    steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
    return *this;
  }

  friend LatticePath operator+(LatticePath a, const LatticePath& b) { return a += b; }

  // Paths compare by steps only; the alphabet is a typing hint, not part of identity.
  friend bool operator==(const LatticePath& a, const LatticePath& b) { return a.steps_ == b.steps_; }

 private:
  std::vector<Step> steps_;
  Alphabet alphabet_ = Alphabet::Dyck;
};

inline std::string to_string(const LatticePath& p) {
  std::string out;
  out.reserve(p.size());
  for (Step s : p.steps()) out += static_cast<char>(s);
  return out;
}

// Alphabet is Schroder if requested or if the text contains 'H', otherwise Dyck.
inline LatticePath parse_path(std::string_view text, std::optional<Alphabet> alphabet = std::nullopt) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  bool has_horiz = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(Step::Up); break;
      case 'D': steps.push_back(Step::Down); break;
      case 'H': steps.push_back(Step::Horiz); has_horiz = true; break;
      default: throw ParseError(std::string("step must be U, D or H, got '") + text[i] + "'", i);
    }
  }
  if (has_horiz && alphabet == Alphabet::Dyck) {
    throw ParseError("horizontal step in a Dyck-alphabet path", text.find('H'));
  }
  return LatticePath(std::move(steps), alphabet.value_or(has_horiz ? Alphabet::Schroder : Alphabet::Dyck));
}

inline nlohmann::json to_json(const LatticePath& p) {
  return {{"alphabet", p.alphabet() == Alphabet::Dyck ? "dyck" : "schroder"}, {"steps", to_string(p)}};
}

inline LatticePath path_from_json(const nlohmann::json& j) {
  const std::string alphabet = j.at("alphabet").get<std::string>();
  if (alphabet != "dyck" && alphabet != "schroder") throw DomainError("unknown alphabet " + alphabet);
  return parse_path(j.at("steps").get<std::string>(), alphabet == "dyck" ? Alphabet::Dyck : Alphabet::Schroder);
}

inline LatticePath reflect(const LatticePath& p) {
  std::vector<Step> steps;
  steps.reserve(p.size());
  for (Step s : p.steps()) steps.push_back(reflect(s));
  return LatticePath(std::move(steps), p.alphabet());
}

// ---------------------------------------------------------------------------
// Irreducible segment decomposition

enum class SegmentKind {
  Positive,  // elevated: strictly above the axis between its endpoints
  Negative,  // negative elevated: a flaw block
  AxisHoriz  // one horizontal step on the axis
};

struct Segment {
  SegmentKind kind;
  LatticePath path;

  friend bool operator==(const Segment&, const Segment&) = default;
};

using SegmentDecomposition = std::vector<Segment>;

inline SegmentDecomposition decompose(const LatticePath& path) {
  if (!path.is_free()) throw DomainError("decomposition requires a free path, got " + to_string(path));
  SegmentDecomposition out;
  int h = 0;
  for (Step s : path.steps()) {
    if (h == 0) {
      if (s == Step::Horiz) {
        out.push_back({SegmentKind::AxisHoriz, LatticePath({s}, path.alphabet())});
        continue;
      }
      out.push_back({s == Step::Up ? SegmentKind::Positive : SegmentKind::Negative, LatticePath(path.alphabet())});
    }
    out.back().path.push_back(s);
    h += rise(s);
  }
  return out;
}

inline LatticePath recompose(const SegmentDecomposition& d, Alphabet alphabet) {
  LatticePath out(alphabet);
  for (const auto& seg : d) out += seg.path;
  return out;
}

inline std::size_t flaw_blocks(const LatticePath& path) {
  std::size_t blocks = 0;
  for (const auto& seg : decompose(path)) blocks += seg.kind == SegmentKind::Negative ? 1 : 0;
  return blocks;
}

// Up and Horiz steps inside flaw blocks.
inline std::size_t flaws(const LatticePath& path) {
  std::size_t count = 0;
  for (const auto& seg : decompose(path)) {
    if (seg.kind == SegmentKind::Negative) count += seg.path.count(Step::Up) + seg.path.count(Step::Horiz);
  }
  return count;
}

enum class PathTag { Free, Dyck, Schroder, Elevated, NegativeElevated };

inline std::set<PathTag> classify(const LatticePath& path) {
  std::set<PathTag> tags;
  if (!path.is_free()) return tags;
  tags.insert(PathTag::Free);
  if (path.min_height() >= 0) tags.insert(path.alphabet() == Alphabet::Dyck ? PathTag::Dyck : PathTag::Schroder);
  const auto segments = decompose(path);
  if (segments.size() == 1 && segments.front().kind == SegmentKind::Positive) tags.insert(PathTag::Elevated);
  if (segments.size() == 1 && segments.front().kind == SegmentKind::Negative) tags.insert(PathTag::NegativeElevated);
  return tags;
}

// ---------------------------------------------------------------------------
// Exhaustive generation

enum class PathConstraint { Free, NonNegative };

namespace detail {
template <typename F>
void extend_paths(LatticePath& buf, std::size_t extent_left, int h, bool nonneg, F& f) {
  if (extent_left == 0) {
    if (h == 0) f(std::as_const(buf));
    return;
  }
  // A path can still close only if |h| steps fit in what remains.
  if (static_cast<std::size_t>(std::abs(h)) > extent_left) return;
  const bool horiz = buf.alphabet() == Alphabet::Schroder;
  for (Step s : {Step::Up, Step::Down, Step::Horiz}) {
    if (s == Step::Horiz && (!horiz || extent_left < 2)) continue;
    const int next = h + rise(s);
    if (nonneg && next < 0) continue;
    buf.push_back(s);
    extend_paths(buf, extent_left - advance(s), next, nonneg, f);
    buf.pop_back();
  }
}
}  // namespace detail

// Streams all paths of semilength n in lexicographic order with U < D < H.
template <typename F>
void for_each_path(Alphabet alphabet, std::size_t n, PathConstraint constraint, F&& f,
                   std::size_t max_n = Limits::from_env().paths) {
  check_capacity(n, max_n, "path enumeration");
  LatticePath buf(alphabet);
  detail::extend_paths(buf, 2 * n, 0, constraint == PathConstraint::NonNegative, f);
}

inline std::vector<LatticePath> enumerate_paths(Alphabet alphabet, std::size_t n, PathConstraint constraint,
                                                std::size_t max_n = Limits::from_env().paths) {
  std::vector<LatticePath> out;
  for_each_path(alphabet, n, constraint, [&](const LatticePath& p) { out.push_back(p); }, max_n);
  return out;
}

}  // namespace butterfly
