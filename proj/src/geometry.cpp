#include "msquant/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace msq::geom {

Turn orientation(Point2 a, Point2 b, Point2 c) {
  const double v = cross(b - a, c - a);
  if (v > 0.0) return Turn::CCW;
  if (v < 0.0) return Turn::CW;
  return Turn::Collinear;
}

bool is_valid_chain(const HullChain& chain) {
  const auto& v = chain.vertices;
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (!(v[k - 1].x1 < v[k].x1)) return false;
  }
  const Turn want = chain.side == Side::Upper ? Turn::CW : Turn::CCW;
  for (std::size_t k = 2; k < v.size(); ++k) {
    if (orientation(v[k - 2], v[k - 1], v[k]) != want) return false;
  }
  return true;
}

namespace {

// Turn the stack must make at its top when points arrive in the given
// direction: appending walks the upper chain clockwise, prepending walks it
// counterclockwise, and the lower chain mirrors both.
constexpr Turn required_turn(Side side, Insertion dir) {
  if (dir == Insertion::Append) return side == Side::Upper ? Turn::CW : Turn::CCW;
  return side == Side::Upper ? Turn::CCW : Turn::CW;
}

// Pushes `idx` onto a chain stack of indices into `pts`; returns the number of
// vertices popped.
template <typename Index>
std::size_t push_chain(std::vector<Index>& stack, std::span<const Point2> pts, Index idx, Turn want,
                       std::size_t* tests) {
  std::size_t popped = 0;
  while (stack.size() >= 2) {
    if (tests) ++*tests;
    const Point2 b = pts[stack[stack.size() - 2]];
    const Point2 c = pts[stack.back()];
    if (orientation(b, c, pts[idx]) == want) break;
    stack.pop_back();
    ++popped;
  }
  stack.push_back(idx);
  return popped;
}

void push_points(std::vector<Point2>& stack, Point2 p, Turn want) {
  while (stack.size() >= 2 && orientation(stack[stack.size() - 2], stack.back(), p) != want) {
    stack.pop_back();
  }
  stack.push_back(p);
}

}  // namespace

void IncrementalHull::insert(Point2 p) {
  if (!std::isfinite(p.x1) || !std::isfinite(p.x2)) {
    throw std::invalid_argument("incremental hull: non-finite point");
  }
  if (!upper_.empty()) {
    const double last = upper_.back().x1;
    const bool ordered = dir_ == Insertion::Append ? p.x1 > last : p.x1 < last;
    if (!ordered) throw std::invalid_argument("incremental hull: points not strictly monotone in x1");
  }
  push_points(upper_, p, required_turn(Side::Upper, dir_));
  push_points(lower_, p, required_turn(Side::Lower, dir_));
  ++inserted_;
}

HullChain IncrementalHull::upper() const {
  HullChain c{Side::Upper, upper_};
  if (dir_ == Insertion::Prepend) std::reverse(c.vertices.begin(), c.vertices.end());
  return c;
}

HullChain IncrementalHull::lower() const {
  HullChain c{Side::Lower, lower_};
  if (dir_ == Insertion::Prepend) std::reverse(c.vertices.begin(), c.vertices.end());
  return c;
}

std::optional<Point2> IncrementalHull::upper_neighbor() const {
  if (upper_.size() < 2) return std::nullopt;
  return upper_[upper_.size() - 2];
}

std::optional<Point2> IncrementalHull::lower_neighbor() const {
  if (lower_.size() < 2) return std::nullopt;
  return lower_[lower_.size() - 2];
}

std::pair<HullChain, HullChain> incremental_hull(std::span<const Point2> points) {
  IncrementalHull hull(Insertion::Append);
  for (const Point2& p : points) hull.insert(p);
  return {hull.upper(), hull.lower()};
}

std::size_t CandidateSet::size_bound() const {
  if (p_size == 0 || q_size == 0) return 0;
  return std::min(2 * p_size + q_size, p_size + 2 * q_size) - 2;
}

namespace {

void require_sorted(std::span<const Point2> pts, const char* name) {
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (!std::isfinite(pts[k].x1) || !std::isfinite(pts[k].x2)) {
      throw std::invalid_argument(std::string("constrained minkowski: non-finite point in ") + name);
    }
    if (k > 0 && !(pts[k - 1].x1 < pts[k].x1)) {
      throw std::invalid_argument(std::string("constrained minkowski: ") + name +
                                  " not strictly increasing in x1");
    }
  }
}

// Normal cone of a sweep point A[i] relative to the suffix A[i..]: bounded by
// the directions towards its upper and lower suffix-hull neighbours.
struct SuffixCone {
  Point2 up{};
  Point2 low{};
  bool bounded = false;
};

std::vector<SuffixCone> suffix_cones(std::span<const Point2> A) {
  std::vector<SuffixCone> cones(A.size());
  IncrementalHull hull(Insertion::Prepend);
  for (std::size_t k = A.size(); k-- > 0;) {
    hull.insert(A[k]);
    const auto up = hull.upper_neighbor();
    const auto low = hull.lower_neighbor();
    if (up && low) cones[k] = {*up - A[k], *low - A[k], true};
  }
  return cones;
}

// Sweeps `A` left to right against the admissible part of `B`. The flag
// `swapped` says whether A is the caller's Q.
void sweep(std::span<const Point2> A, std::span<const Point2> B, bool swapped, CandidateSet& out,
           SweepStats& st) {
  using Index = std::uint32_t;
  const std::vector<SuffixCone> cones = suffix_cones(A);

  // Hull of the live admissible B points. Both stacks hold indices with the
  // leftmost (most recently admitted) vertex on top, shared by the two chains.
  std::vector<Index> up;
  std::vector<Index> low;
  const Turn up_turn = required_turn(Side::Upper, Insertion::Prepend);
  const Turn low_turn = required_turn(Side::Lower, Insertion::Prepend);

  std::size_t next_b = B.size();
  std::size_t peak_chain = 0;

  auto emit = [&](std::size_t ai, Index bi) {
    const Index a = static_cast<Index>(ai);
    Candidate c{A[ai] + B[bi], swapped ? bi : a, swapped ? a : bi};
    if (swapped) c.point = B[bi] + A[ai];
    out.points.push_back(c);
  };

  for (std::size_t i = 0; i < A.size(); ++i) {
    while (next_b > 0 && B[next_b - 1].x1 + A[i].x1 > 0.0) {
      --next_b;
      const Index bi = static_cast<Index>(next_b);
      st.deletions += push_chain(up, B, bi, up_turn, &st.orientation_tests);
      st.deletions += push_chain(low, B, bi, low_turn, &st.orientation_tests);
    }
    if (up.empty()) continue;
    peak_chain = std::max(peak_chain, up.size() + low.size());

    const SuffixCone& cone = cones[i];
    const std::size_t top_up = up.size() - 1;
    const std::size_t top_low = low.size() - 1;

    // Walk away from the shared leftmost vertex while the incoming edge of the
    // next vertex still falls inside the cone. Ties are kept.
    std::size_t arc_up = top_up;
    while (arc_up > 0) {
      if (cone.bounded) {
        ++st.orientation_tests;
        const Point2 edge = B[up[arc_up - 1]] - B[up[arc_up]];
        if (cross(cone.up, edge) < 0.0) break;
      }
      --arc_up;
    }
    std::size_t arc_low = top_low;
    while (arc_low > 0) {
      if (cone.bounded) {
        ++st.orientation_tests;
        const Point2 edge = B[low[arc_low - 1]] - B[low[arc_low]];
        if (cross(cone.low, edge) > 0.0) break;
      }
      --arc_low;
    }

    for (std::size_t m = arc_up; m <= top_up; ++m) emit(i, up[m]);
    for (std::size_t m = arc_low; m < top_low; ++m) {
      if (low[m] != up[arc_up]) emit(i, low[m]);
    }

    // Everything strictly inside the arc is dominated for every later sweep
    // point; only the two arc ends survive.
    const bool drop_leftmost = arc_up < top_up && arc_low < top_low;
    if (drop_leftmost) {
      st.deletions += (top_up - arc_up) + (top_low - arc_low) - 1;
      up.resize(arc_up + 1);
      low.resize(arc_low + 1);
      const Index ku = up.back();
      const Index kl = low.back();
      if (ku != kl) {
        // Restore the shared leftmost vertex across the closing chord.
        if (B[ku].x1 < B[kl].x1) {
          st.deletions += push_chain(low, B, ku, low_turn, &st.orientation_tests);
        } else {
          st.deletions += push_chain(up, B, kl, up_turn, &st.orientation_tests);
        }
      }
    } else if (arc_up < top_up) {
      const Index leftmost = up.back();
      st.deletions += top_up - arc_up - 1;
      up.resize(arc_up + 1);
      up.push_back(leftmost);
    } else if (arc_low < top_low) {
      const Index leftmost = low.back();
      st.deletions += top_low - arc_low - 1;
      low.resize(arc_low + 1);
      low.push_back(leftmost);
    }
  }

  const std::size_t working = A.size() + B.size() + cones.size() * 2 + peak_chain;
  st.peak_live_points = std::max(st.peak_live_points, working + out.points.size());
}

}  // namespace

CandidateSet constrained_minkowski_candidates(std::span<const Point2> P, std::span<const Point2> Q,
                                              SweepStats* stats) {
  require_sorted(P, "P");
  require_sorted(Q, "Q");
  if (P.size() > UINT32_MAX || Q.size() > UINT32_MAX) {
    throw std::invalid_argument("constrained minkowski: input too large");
  }
  CandidateSet out;
  out.p_size = P.size();
  out.q_size = Q.size();
  SweepStats local;
  SweepStats& st = stats ? *stats : local;
  st = SweepStats{};
  out.points.reserve(out.size_bound());
  if (P.size() <= Q.size()) {
    sweep(P, Q, false, out, st);
  } else {
    sweep(Q, P, true, out, st);
  }
  return out;
}

}  // namespace msq::geom
