#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "msquant/geometry.hpp"
#include "msquant/model.hpp"

namespace msq::testing {

using geom::Point2;

inline double cross3(Point2 a, Point2 b, Point2 c) {
  return (b.x1 - a.x1) * (c.x2 - a.x2) - (b.x2 - a.x2) * (c.x1 - a.x1);
}

inline std::vector<Point2> unique_points(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
    return a.x1 < b.x1 || (a.x1 == b.x1 && a.x2 < b.x2);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

using PointSet = std::set<std::pair<double, double>>;

inline PointSet to_set(const std::vector<Point2>& pts) {
  PointSet s;
  for (const auto& p : pts) s.emplace(p.x1, p.x2);
  return s;
}

/// Strict hull vertices by the all-pairs half-plane test, O(k^3). A directed
/// pair (a, b) is a hull edge when no point lies strictly to its right and
/// every point on its supporting line lies within the closed segment.
inline PointSet brute_force_hull_vertices(const std::vector<Point2>& input) {
  const auto pts = unique_points(input);
  PointSet out;
  if (pts.size() <= 2) {
    for (const auto& p : pts) out.emplace(p.x1, p.x2);
    return out;
  }
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = 0; b < pts.size(); ++b) {
      if (a == b) continue;
      bool edge = true;
      for (std::size_t c = 0; c < pts.size() && edge; ++c) {
        if (c == a || c == b) continue;
        const double v = cross3(pts[a], pts[b], pts[c]);
        if (v < 0.0) {
          edge = false;
        } else if (v == 0.0) {
          const double t = (pts[c].x1 - pts[a].x1) * (pts[b].x1 - pts[a].x1) +
                           (pts[c].x2 - pts[a].x2) * (pts[b].x2 - pts[a].x2);
          const double len = (pts[b].x1 - pts[a].x1) * (pts[b].x1 - pts[a].x1) +
                             (pts[b].x2 - pts[a].x2) * (pts[b].x2 - pts[a].x2);
          if (t < 0.0 || t > len) edge = false;
        }
      }
      if (edge) {
        out.emplace(pts[a].x1, pts[a].x2);
        out.emplace(pts[b].x1, pts[b].x2);
      }
    }
  }
  return out;
}

/// Strict hull vertices by Andrew's monotone chain after a full sort,
/// O(k log k). Used where the cubic test is too slow.
inline PointSet sorted_hull_vertices(const std::vector<Point2>& input) {
  const auto pts = unique_points(input);
  if (pts.size() <= 2) return to_set(pts);
  std::vector<Point2> lower, upper;
  for (const auto& p : pts) {
    while (lower.size() >= 2 && cross3(lower[lower.size() - 2], lower.back(), p) <= 0.0) {
      lower.pop_back();
    }
    lower.push_back(p);
    while (upper.size() >= 2 && cross3(upper[upper.size() - 2], upper.back(), p) >= 0.0) {
      upper.pop_back();
    }
    upper.push_back(p);
  }
  PointSet out = to_set(lower);
  for (const auto& p : upper) out.emplace(p.x1, p.x2);
  return out;
}

/// All sums p + q with positive first coordinate.
inline std::vector<Point2> constrained_sums(const std::vector<Point2>& P,
                                            const std::vector<Point2>& Q) {
  std::vector<Point2> out;
  for (const auto& p : P) {
    for (const auto& q : Q) {
      const Point2 s = p + q;
      if (s.x1 > 0.0) out.push_back(s);
    }
  }
  return out;
}

/// sup over theta of (theta - theta0) s - ell (psi(theta) - psi(theta0)) by
/// golden-section search on a bracket wide enough for the test ranges; the
/// objective is concave in theta.
inline double loglik_sup_search(Family family, double theta0, double ell, double s) {
  auto psi = [family](double t) {
    switch (family) {
      case Family::Gaussian: return 0.5 * t * t;
      case Family::Poisson: return std::exp(t);
      case Family::Bernoulli: return t > 0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
    }
    return 0.0;
  };
  auto f = [&](double t) { return (t - theta0) * s - ell * (psi(t) - psi(theta0)); };
  double lo = -60.0, hi = 60.0;
  if (family == Family::Gaussian) {
    lo = std::min(theta0, s / ell) - 10.0;
    hi = std::max(theta0, s / ell) + 10.0;
  } else if (family == Family::Poisson) {
    hi = 20.0;
  }
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 400 && b - a > 1e-13; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  // Boundary data (Poisson s = 0, Bernoulli s in {0, ell}) has its supremum
  // at theta -> -inf or +inf; the bracket ends approach it within 1e-20.
  return std::max({f(0.5 * (a + b)), f(lo), f(hi)});
}

/// Random feasible (ell, s) for `family` with ell in (0, n].
inline std::pair<double, double> random_feasible(Family family, double n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double ell = n * (1.0 - u01(rng));
  double s = 0.0;
  switch (family) {
    case Family::Gaussian: s = (2.0 * u01(rng) - 1.0) * 3.0 * std::sqrt(n) * 2.0; break;
    case Family::Poisson: s = u01(rng) * 3.0 * ell; break;
    case Family::Bernoulli: s = u01(rng) * ell; break;
  }
  return {ell, s};
}

/// Standard-normal series of length n.
inline std::vector<double> gaussian_series(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<double> y(n);
  for (auto& v : y) v = nd(rng);
  return y;
}

inline std::vector<double> poisson_series(std::size_t n, double mean, std::mt19937_64& rng) {
  std::poisson_distribution<int> pd(mean);
  std::vector<double> y(n);
  for (auto& v : y) v = pd(rng);
  return y;
}

inline std::vector<double> bernoulli_series(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution bd(p);
  std::vector<double> y(n);
  for (auto& v : y) v = bd(rng) ? 1.0 : 0.0;
  return y;
}

}  // namespace msq::testing
