#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace msq::geom {

struct Point2 {
  double x1 = 0.0;
  double x2 = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
  friend bool operator==(Point2 a, Point2 b) = default;
};

enum class Turn { CCW, CW, Collinear };

/// Sign of (b - a) x (c - a); Collinear only on an exact zero.
Turn orientation(Point2 a, Point2 b, Point2 c);

/// Cross product of two direction vectors.
inline double cross(Point2 u, Point2 v) { return u.x1 * v.x2 - u.x2 * v.x1; }

enum class Side { Upper, Lower };

struct HullChain {
  Side side = Side::Upper;
  std::vector<Point2> vertices;  // strictly increasing in x1
};

/// Checks the chain invariants: strictly increasing x1, and strict right turns
/// (upper) or strict left turns (lower) at every interior vertex.
bool is_valid_chain(const HullChain& chain);

enum class Insertion { Append, Prepend };

/// Convex hull maintained under insertion of points that are strictly
/// monotone in x1 (increasing for Append, decreasing for Prepend).
/// Amortized O(1) per insertion; collinear points are dropped from chains.
class IncrementalHull {
 public:
  explicit IncrementalHull(Insertion direction = Insertion::Append) : dir_(direction) {}

  /// Throws std::invalid_argument if `p` breaks the monotone insertion order.
  void insert(Point2 p);

  std::size_t size() const { return inserted_; }
  bool empty() const { return inserted_ == 0; }

  /// Chains ordered by increasing x1.
  HullChain upper() const;
  HullChain lower() const;

  /// Neighbour of the most recently inserted point on the upper/lower chain;
  /// empty while fewer than two points have been inserted.
  std::optional<Point2> upper_neighbor() const;
  std::optional<Point2> lower_neighbor() const;

 private:
  Insertion dir_;
  std::size_t inserted_ = 0;
  // Stacks with the newest point on top. Stored in insertion order.
  std::vector<Point2> upper_;
  std::vector<Point2> lower_;
};

/// Final chains of the hull of `points`, which must be strictly increasing in x1.
std::pair<HullChain, HullChain> incremental_hull(std::span<const Point2> points);

/// One element of the candidate set: the sum P[p_index] + Q[q_index].
struct Candidate {
  Point2 point;
  std::uint32_t p_index = 0;
  std::uint32_t q_index = 0;
};

struct CandidateSet {
  std::vector<Candidate> points;
  std::size_t p_size = 0;
  std::size_t q_size = 0;

  /// min{2|P| + |Q|, |P| + 2|Q|} - 2 (zero if either side is empty).
  std::size_t size_bound() const;
};

/// Work counters filled by constrained_minkowski_candidates.
struct SweepStats {
  std::size_t orientation_tests = 0;
  std::size_t deletions = 0;       // hull pops plus pruned arc interiors
  std::size_t peak_live_points = 0;
};

/// Superset R of the vertices of conv((P + Q)+), where (P + Q)+ keeps the
/// sums with positive first coordinate, and R consists of such sums only.
///
/// P and Q must be strictly increasing in x1. Runs in O(|P| + |Q|) and
/// returns at most min{2|P| + |Q|, |P| + 2|Q|} - 2 points. The smaller side
/// is swept; for each of its points the admissible part of the other side is
/// kept as a pruned incremental hull, and the arc of that hull whose normal
/// cones meet the sweep point's normal cone contributes candidates. Interior
/// arc vertices can never pair with a later sweep point into a vertex, so
/// they are removed permanently.
CandidateSet constrained_minkowski_candidates(std::span<const Point2> P,
                                              std::span<const Point2> Q,
                                              SweepStats* stats = nullptr);

}  // namespace msq::geom
