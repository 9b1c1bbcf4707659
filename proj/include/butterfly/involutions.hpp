#pragma once

#include <cstddef>

#include "butterfly/core.hpp"
#include "butterfly/counting.hpp"
#include "butterfly/lattice_path.hpp"

namespace butterfly {

// Parity of a free path is the parity of its flaw-block count.
inline bool is_odd(const LatticePath& path) { return flaw_blocks(path) % 2 == 1; }

// Reflects the final irreducible segment of a nonempty free Dyck path.
inline LatticePath dyck_flip(const LatticePath& path) {
  if (path.count(Step::Horiz) != 0) throw DomainError("dyck_flip takes a Dyck-alphabet path");
  if (path.empty()) throw DomainError("dyck_flip needs semilength >= 1");
  auto segments = decompose(path);
  auto& last = segments.back();
  last.path = reflect(last.path);
  last.kind = last.kind == SegmentKind::Positive ? SegmentKind::Negative : SegmentKind::Positive;
  return recompose(segments, path.alphabet());
}

// Reflects the last segment that is not a horizontal step on the axis; the trailing run of
// axis H steps stays in place.
inline LatticePath schroder_flip(const LatticePath& path) {
  if (path.count(Step::Up) == 0) throw DomainError("schroder_flip needs at least one up step");
  auto segments = decompose(path);
  for (std::size_t i = segments.size(); i-- > 0;) {
    auto& seg = segments[i];
    if (seg.kind == SegmentKind::AxisHoriz) continue;
    seg.path = reflect(seg.path);
    seg.kind = seg.kind == SegmentKind::Positive ? SegmentKind::Negative : SegmentKind::Positive;
    break;
  }
  return recompose(segments, Alphabet::Schroder);
}

// Sum of (-1)^blocks over all free paths of semilength n, by enumeration.
inline Integer signed_block_sum_exhaustive(Alphabet alphabet, std::size_t n) {
  Integer sum = 0;
  for_each_path(alphabet, n, PathConstraint::Free, [&](const LatticePath& p) { sum += is_odd(p) ? -1 : 1; });
  return sum;
}

}  // namespace butterfly
