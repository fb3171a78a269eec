#pragma once

// Independent reference computations for the test suite.  Everything here is
// deliberately brute force and shares no code with the library paths it
// checks: membership by exhaustive two-squares scan, pair statistics by
// plain double loops over the full point set, integrals by trapezoid sums of
// pointwise covariance evaluations.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "arw/lattice.hpp"

namespace oracle {

inline bool two_squares_member(long long m) {
  for (long long a = 0; a * a <= m; ++a) {
    const long long rest = m - a * a;
    const auto b = static_cast<long long>(std::llround(std::sqrt(
        static_cast<double>(rest))));
    for (long long bb = std::max(0LL, b - 2); bb <= b + 2; ++bb) {
      if (bb * bb == rest) return true;
    }
  }
  return false;
}

inline std::vector<arw::LatticePoint> enumerate_points(long long m) {
  std::vector<arw::LatticePoint> pts;
  const auto r = static_cast<long long>(std::ceil(std::sqrt(
      static_cast<double>(m))));
  for (long long x = -r; x <= r; ++x) {
    for (long long y = -r; y <= r; ++y) {
      if (x * x + y * y == m) pts.push_back({x, y});
    }
  }
  return pts;
}

inline double min_pair_distance(const std::vector<arw::LatticePoint>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      const double dx = static_cast<double>(pts[i].x - pts[j].x);
      const double dy = static_cast<double>(pts[i].y - pts[j].y);
      best = std::min(best, std::hypot(dx, dy));
    }
  }
  return best;
}

inline double angle_of(arw::LatticePoint p) {
  double a = std::atan2(static_cast<double>(p.y), static_cast<double>(p.x));
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  return a;
}

// Closed arcs anchored at each point; O(N^2) direct count.
inline long long arc_max_occupancy(const std::vector<arw::LatticePoint>& pts,
                                   long long m, double arc_length) {
  const double radius = std::sqrt(static_cast<double>(m));
  const double theta = arc_length / radius;
  long long best = 0;
  for (const auto& anchor : pts) {
    const double a0 = angle_of(anchor);
    long long count = 0;
    for (const auto& p : pts) {
      double delta = angle_of(p) - a0;
      if (delta < 0.0) delta += 2.0 * std::numbers::pi;
      if (delta <= theta || theta >= 2.0 * std::numbers::pi) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

// Ordered pairs with <mu - mu', v> != 0, floating inner product.
inline std::vector<arw::PointPair> pair_set_A(
    const std::vector<arw::LatticePoint>& pts, double vx, double vy) {
  std::vector<arw::PointPair> pairs;
  for (const auto& mu : pts) {
    for (const auto& nu : pts) {
      const double d = static_cast<double>(mu.x - nu.x) * vx +
                       static_cast<double>(mu.y - nu.y) * vy;
      if (d != 0.0) pairs.emplace_back(mu, nu);
    }
  }
  return pairs;
}

inline double rational_pair_sum(const std::vector<arw::LatticePoint>& pts,
                                long long q, long long p) {
  double sum = 0.0;
  for (const auto& mu : pts) {
    for (const auto& nu : pts) {
      const long long k = (mu.x - nu.x) * q + (mu.y - nu.y) * p;
      if (k == 0) continue;
      sum += 1.0 / static_cast<double>(k * k);
    }
  }
  return sum;
}

inline double min_pair_sum(const std::vector<arw::LatticePoint>& pts,
                           double ax, double ay) {
  double sum = 0.0;
  for (const auto& mu : pts) {
    for (const auto& nu : pts) {
      const double d = static_cast<double>(mu.x - nu.x) * ax +
                       static_cast<double>(mu.y - nu.y) * ay;
      if (d == 0.0) continue;
      sum += std::min(1.0, 1.0 / (d * d));
    }
  }
  return sum;
}

// ----------------------------------------------------------------------------
// 2-D composite trapezoid of int_0^L int_0^L g(t1 - t2) dt1 dt2 on an
// (n+1) x (n+1) node grid, reduced over the diagonals: with 1-D weights
// w_i = h * u_i, u_i = 1/2 at the ends and 1 inside,
//     sum_{i,j} w_i w_j g((i-j) h) = sum_t c_t g(t h),
//     c_0 = h^2 (n - 1/2),  c_t = h^2 (n - |t|) for 0 < |t| < n,
//     c_{+-n} = h^2 / 4.
// (Group pairs by offset t = i - j and count the half-weight boundary hits.)
// ----------------------------------------------------------------------------
inline double trapezoid_2d_lag(const std::function<double(double)>& g,
                               double L, long long n) {
  const double h = L / static_cast<double>(n);
  double total = 0.0;
  for (long long t = -n; t <= n; ++t) {
    double c;
    if (t == 0) {
      c = h * h * (static_cast<double>(n) - 0.5);
    } else if (std::llabs(t) == n) {
      c = h * h * 0.25;
    } else {
      c = h * h * static_cast<double>(n - std::llabs(t));
    }
    total += c * g(static_cast<double>(t) * h);
  }
  return total;
}

// Literal double-loop version, used to validate the reduction above on
// small grids.
inline double trapezoid_2d_direct(const std::function<double(double)>& g,
                                  double L, long long n) {
  const double h = L / static_cast<double>(n);
  double total = 0.0;
  for (long long i = 0; i <= n; ++i) {
    const double wi = (i == 0 || i == n) ? 0.5 * h : h;
    for (long long j = 0; j <= n; ++j) {
      const double wj = (j == 0 || j == n) ? 0.5 * h : h;
      total += wi * wj * g(static_cast<double>(i - j) * h);
    }
  }
  return total;
}

}  // namespace oracle
