#include "arw/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace arw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

long long isqrt_floor(long long v) {
  if (v < 0) return -1;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

void require_positive(long long m) {
  if (m < 1) {
    throw std::invalid_argument("m must be >= 1, got " + std::to_string(m));
  }
}

}  // namespace

TwoSquaresClass classify_sum_of_two_squares(long long m) {
  require_positive(m);
  TwoSquaresClass out;
  out.is_member = true;
  long long rest = m;
  for (long long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out.factors.emplace_back(p, e);
    if (p % 4 == 3 && e % 2 == 1) out.is_member = false;
  }
  if (rest > 1) {
    out.factors.emplace_back(rest, 1);
    if (rest % 4 == 3) out.is_member = false;
  }
  return out;
}

long long count_representations(long long m) {
  const auto cls = classify_sum_of_two_squares(m);
  if (!cls.is_member) {
    throw std::domain_error("m = " + std::to_string(m) +
                            " is not representable as a sum of two squares");
  }
  long long n = 4;
  for (const auto& [p, e] : cls.factors) {
    if (p % 4 == 1) n *= (e + 1);
  }
  return n;
}

double point_angle(LatticePoint p) {
  double a = std::atan2(static_cast<double>(p.y), static_cast<double>(p.x));
  if (a < 0.0) a += kTwoPi;
  return a;
}

EnergyLevel enumerate_lattice_points(long long m) {
  const auto cls = classify_sum_of_two_squares(m);
  if (!cls.is_member) {
    throw std::domain_error("m = " + std::to_string(m) +
                            " is not representable as a sum of two squares");
  }
  EnergyLevel level;
  level.m = m;
  level.factors = cls.factors;
  const long long root = isqrt_floor(m);
  for (long long x = 0; x <= root; ++x) {
    const long long y2 = m - x * x;
    const long long y = isqrt_floor(y2);
    if (y * y != y2) continue;
    // (x, y) is a first-quadrant representative; emit its sign images once.
    level.points.push_back({x, y});
    if (x > 0) level.points.push_back({-x, y});
    if (y > 0) level.points.push_back({x, -y});
    if (x > 0 && y > 0) level.points.push_back({-x, -y});
  }
  std::sort(level.points.begin(), level.points.end(),
            [](LatticePoint a, LatticePoint b) {
              return point_angle(a) < point_angle(b);
            });
  level.n_points = static_cast<long long>(level.points.size());

  // Cross-check against the divisor formula; a mismatch means the scan or
  // the factorization is broken.
  long long formula = 4;
  for (const auto& [p, e] : cls.factors) {
    if (p % 4 == 1) formula *= (e + 1);
  }
  if (level.n_points != formula) {
    throw std::logic_error("representation count mismatch for m = " +
                           std::to_string(m));
  }
  return level;
}

std::vector<LatticePoint> antipodal_half_set(const EnergyLevel& level) {
  std::vector<LatticePoint> half;
  half.reserve(level.points.size() / 2);
  for (const auto& p : level.points) {
    if (p.y > 0 || (p.y == 0 && p.x > 0)) half.push_back(p);
  }
  return half;
}

double min_pair_distance(const EnergyLevel& level) {
  const auto& pts = level.points;
  if (pts.size() < 2) {
    throw std::invalid_argument("min_pair_distance needs at least two points");
  }
  // Points are angle-sorted and chord length grows with angular separation,
  // so the minimum is attained by an angularly adjacent pair (wrapping).
  double best2 = std::numeric_limits<double>::infinity();
  const size_t n = pts.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % n];
    const double dx = static_cast<double>(a.x - b.x);
    const double dy = static_cast<double>(a.y - b.y);
    best2 = std::min(best2, dx * dx + dy * dy);
  }
  return std::sqrt(best2);
}

long long arc_max_occupancy(const EnergyLevel& level, double arc_length) {
  if (!(arc_length > 0.0)) {
    throw std::invalid_argument("arc length must be positive");
  }
  const auto n = static_cast<long long>(level.points.size());
  const double radius = std::sqrt(static_cast<double>(level.m));
  if (arc_length >= kTwoPi * radius) return n;
  const double theta = arc_length / radius;

  std::vector<double> ang(2 * n);
  for (long long i = 0; i < n; ++i) {
    ang[i] = point_angle(level.points[i]);
    ang[i + n] = ang[i] + kTwoPi;
  }
  // Closed arcs: a window may be slid until its left edge touches a point,
  // so scanning windows anchored at each point finds the maximum.
  long long best = 1;
  long long j = 0;
  for (long long i = 0; i < n; ++i) {
    if (j < i) j = i;
    while (j + 1 < i + n && ang[j + 1] <= ang[i] + theta) ++j;
    best = std::max(best, j - i + 1);
  }
  return best;
}

NearOrthogonalArc near_orthogonal_arc(const EnergyLevel& level, LatticePoint B,
                                      Vec2 beta, double c) {
  if (!(c > 0.0 && c < 0.5)) {
    throw std::invalid_argument("c must satisfy 0 < c < 1/2");
  }
  const double blen = std::hypot(beta.x, beta.y);
  if (blen == 0.0) {
    throw std::invalid_argument("beta must be a nonzero vector");
  }
  const Vec2 bhat{beta.x / blen, beta.y / blen};
  if (std::find(level.points.begin(), level.points.end(), B) ==
      level.points.end()) {
    throw std::invalid_argument("B is not a lattice point of this level");
  }

  const double radius = std::sqrt(static_cast<double>(level.m));
  const double phi_b = point_angle(B);
  const double psi = std::atan2(bhat.y, bhat.x);

  NearOrthogonalArc arc;
  // A chord between circle angles phi_b and phi' has direction angle
  // (phi_b + phi')/2 + pi/2 (mod pi); near-orthogonality to beta pins
  // (phi_b + phi')/2 within arcsin(c) of psi (mod pi), i.e. phi' within
  // 2*arcsin(c) of 2*psi - phi_b.  arcsin(c) <= c/sqrt(1-c^2) gives the
  // certified cover below.
  double center = std::fmod(2.0 * psi - phi_b, kTwoPi);
  if (center < 0.0) center += kTwoPi;
  arc.center_angle = center;
  arc.length = 4.0 * c * radius / std::sqrt(1.0 - c * c);

  const double half_width = 0.5 * arc.length / radius;  // angular half-width
  for (const auto& p : level.points) {
    if (p == B) continue;
    const double dx = static_cast<double>(B.x - p.x);
    const double dy = static_cast<double>(B.y - p.y);
    const double along = dx * bhat.x + dy * bhat.y;
    const double chord = std::hypot(dx, dy);
    if (std::abs(along) > c * chord) continue;
    arc.points.push_back(p);
    double delta = std::abs(point_angle(p) - center);
    delta = std::min(delta, kTwoPi - delta);
    if (delta > half_width + 1e-12) {
      throw std::logic_error("near-orthogonal point escaped the covering arc");
    }
  }
  return arc;
}

std::vector<PointPair> pair_set_A(const EnergyLevel& level, Vec2 v) {
  if (v.x == 0.0 && v.y == 0.0) {
    throw std::invalid_argument("pair_set_A requires a nonzero vector");
  }
  std::vector<PointPair> pairs;
  for (const auto& mu : level.points) {
    for (const auto& nu : level.points) {
      const double d = static_cast<double>(mu.x - nu.x) * v.x +
                       static_cast<double>(mu.y - nu.y) * v.y;
      if (d != 0.0) pairs.emplace_back(mu, nu);
    }
  }
  return pairs;
}

std::vector<PointPair> pair_set_A(const EnergyLevel& level, long long q,
                                  long long p) {
  if (q == 0 && p == 0) {
    throw std::invalid_argument("pair_set_A requires a nonzero vector");
  }
  std::vector<PointPair> pairs;
  for (const auto& mu : level.points) {
    for (const auto& nu : level.points) {
      const long long d = (mu.x - nu.x) * q + (mu.y - nu.y) * p;
      if (d != 0) pairs.emplace_back(mu, nu);
    }
  }
  return pairs;
}

std::vector<PointPair> pair_set_A(const EnergyLevel& level,
                                  const Direction& dir) {
  if (dir.is_rational()) return pair_set_A(level, dir.q(), dir.p());
  return pair_set_A(level, dir.alpha());
}

double rational_pair_sum(const EnergyLevel& level, long long q, long long p) {
  if (q == 0 && p == 0) {
    throw std::invalid_argument("rational_pair_sum requires (q, p) != 0");
  }
  if (std::gcd(std::llabs(q), std::llabs(p)) != 1) {
    throw std::invalid_argument("rational_pair_sum requires gcd(p, q) = 1");
  }
  if (std::llabs(q) > (1LL << 40) || std::llabs(p) > (1LL << 40)) {
    throw std::invalid_argument("slope components too large");
  }
  double sum = 0.0;
  for (const auto& mu : level.points) {
    for (const auto& nu : level.points) {
      const long long k = (mu.x - nu.x) * q + (mu.y - nu.y) * p;
      if (k == 0) continue;
      const double kd = static_cast<double>(k);
      sum += 1.0 / (kd * kd);
    }
  }
  return sum;
}

double min_pair_sum(const EnergyLevel& level, const Direction& dir) {
  const Vec2 alpha = dir.alpha();
  const bool rational = dir.is_rational();
  const double scale = dir.rational_scale();
  double sum = 0.0;
  for (const auto& mu : level.points) {
    for (const auto& nu : level.points) {
      double d = 0.0;
      if (rational) {
        const long long k = (mu.x - nu.x) * dir.q() + (mu.y - nu.y) * dir.p();
        if (k == 0) continue;
        d = static_cast<double>(k) * scale;
      } else {
        d = static_cast<double>(mu.x - nu.x) * alpha.x +
            static_cast<double>(mu.y - nu.y) * alpha.y;
        if (d == 0.0) continue;
      }
      sum += std::min(1.0, 1.0 / (d * d));
    }
  }
  return sum;
}

PairSumReport range_decomposition(const EnergyLevel& level,
                                  const Direction& dir, double a, double c) {
  const double radius = std::sqrt(static_cast<double>(level.m));
  if (!(a > 0.0 && a <= 2.0 * radius)) {
    throw std::invalid_argument("a must lie in (0, 2*sqrt(m)]");
  }
  if (!(c > 0.0 && c < 0.5)) {
    throw std::invalid_argument("c must satisfy 0 < c < 1/2");
  }
  PairSumReport rep;
  rep.a = a;
  rep.c = c;
  const Vec2 alpha = dir.alpha();
  const bool rational = dir.is_rational();
  const double scale = dir.rational_scale();
  const double a2 = a * a;
  const double c2 = c * c;
  for (const auto& mu : level.points) {
    for (const auto& nu : level.points) {
      const long long dx = mu.x - nu.x;
      const long long dy = mu.y - nu.y;
      double d = 0.0;
      if (rational) {
        const long long k = dx * dir.q() + dy * dir.p();
        if (k == 0) continue;
        d = static_cast<double>(k) * scale;
      } else {
        d = static_cast<double>(dx) * alpha.x + static_cast<double>(dy) * alpha.y;
        if (d == 0.0) continue;
      }
      const double d2 = d * d;
      const double gap2 = static_cast<double>(dx * dx + dy * dy);
      rep.total += std::min(1.0, 1.0 / d2);
      // Closed comparisons on all three ranges: boundary pairs may land in
      // two ranges, which only strengthens the upper bound.
      const bool small_gap = gap2 <= a2;
      const bool near_orth = d2 <= c2 * gap2;
      if (small_gap) rep.range_small_gap += 1.0;
      if (near_orth) rep.range_near_orthogonal += 1.0;
      if (gap2 >= a2 && d2 >= c2 * gap2) rep.range_far += 1.0 / d2;
    }
  }
  return rep;
}

std::pair<double, double> optimal_range_parameters(double J, double l,
                                                   long long n_points,
                                                   long long m) {
  if (!(J > 0.0) || !(l > 0.0) || n_points < 1 || m < 1) {
    throw std::invalid_argument("optimal_range_parameters needs positive J, l, N, m");
  }
  const double a = std::pow(J / l, 0.2) *
                   std::pow(static_cast<double>(n_points), 0.2) *
                   std::pow(static_cast<double>(m), 0.2);
  const double c = a / std::sqrt(static_cast<double>(m));
  return {a, c};
}

CensusResult census_S(long long X) {
  if (X < 2) throw std::invalid_argument("census requires X >= 2");
  CensusResult res;
  for (long long m = 1; m <= X; ++m) {
    if (classify_sum_of_two_squares(m).is_member) ++res.count;
  }
  res.ratio = static_cast<double>(res.count) *
              std::sqrt(std::log(static_cast<double>(X))) /
              static_cast<double>(X);
  return res;
}

DensityScan density_one_check(long long X, double epsilon) {
  if (X < 2) throw std::invalid_argument("density scan requires X >= 2");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  DensityScan scan;
  long long members = 0;
  for (long long m = 1; m <= X; ++m) {
    if (!classify_sum_of_two_squares(m).is_member) continue;
    ++members;
    const auto level = enumerate_lattice_points(m);
    const double threshold =
        std::pow(static_cast<double>(m), 0.5 * (1.0 - epsilon));
    if (min_pair_distance(level) <= threshold) {
      ++scan.failing;
      scan.failing_m.push_back(m);
    }
  }
  scan.fraction =
      static_cast<double>(scan.failing) / static_cast<double>(members);
  return scan;
}

}  // namespace arw
