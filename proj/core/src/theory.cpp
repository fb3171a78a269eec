#include "arw/theory.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace arw {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double zero_density_constant(long long m) {
  // Validates membership as a side effect.
  count_representations(m);
  return std::numbers::sqrt2 * std::sqrt(static_cast<double>(m));
}

double expected_intersections(long long m, double L) {
  if (!(L >= 0.0)) throw std::invalid_argument("segment length must be >= 0");
  return zero_density_constant(m) * L;
}

double sinc_pair_integral(double d, double L) {
  if (!(L >= 0.0)) throw std::invalid_argument("segment length must be >= 0");
  if (d == 0.0) return L * L;
  const double x = kPi * L * d;
  if (std::abs(x) < 1e-4) {
    return L * L * (1.0 - x * x / 3.0);
  }
  const double s = std::sin(x) / (kPi * d);
  return s * s;
}

SecondMomentReport second_moment_closed_form(const EnergyLevel& level,
                                             const Direction& dir, double L) {
  if (!(L >= 0.0)) throw std::invalid_argument("segment length must be >= 0");
  const auto& pts = level.points;
  const auto n = static_cast<long long>(pts.size());
  const double m = static_cast<double>(level.m);
  const Vec2 alpha = dir.alpha();
  const bool rational = dir.is_rational();
  const double scale = dir.rational_scale();

  // Per-point frequencies d_mu = <mu, alpha>.
  std::vector<double> d(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    if (rational) {
      d[i] = static_cast<double>(pts[i].x * dir.q() + pts[i].y * dir.p()) *
             scale;
    } else {
      d[i] = static_cast<double>(pts[i].x) * alpha.x +
             static_cast<double>(pts[i].y) * alpha.y;
    }
  }

  SecondMomentReport rep;
  double sum_w1 = 0.0;
  double sum_w12 = 0.0;
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = 0; j < pts.size(); ++j) {
      bool zero_mode;
      double dd;
      if (rational) {
        const long long k = (pts[i].x - pts[j].x) * dir.q() +
                            (pts[i].y - pts[j].y) * dir.p();
        zero_mode = (k == 0);
        dd = static_cast<double>(k) * scale;
      } else {
        dd = d[i] - d[j];
        zero_mode = (dd == 0.0);
      }
      const double s = zero_mode ? L * L : sinc_pair_integral(dd, L);
      if (i == j) {
        rep.diagonal_part += s;
      } else if (zero_mode) {
        rep.perpendicular_part += s;
        ++rep.perpendicular_pair_count;
      } else {
        rep.a_alpha_part += s;
      }
      const double w1 = d[i] * d[j] / m;
      sum_w1 += w1 * s;
      sum_w12 += w1 * w1 * s;
    }
  }
  const double inv_n2 = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  rep.diagonal_part *= inv_n2;
  rep.perpendicular_part *= inv_n2;
  rep.a_alpha_part *= inv_n2;
  rep.term_r = rep.diagonal_part + rep.perpendicular_part + rep.a_alpha_part;
  rep.term_r1 = sum_w1 * inv_n2;
  rep.term_r2 = rep.term_r1;
  rep.term_r12 = sum_w12 * inv_n2;
  rep.pair_sum_bound = rep.term_r;
  // Undo the 2 pi normalizations: (r1/sqrt m)^2 = (2 pi)^2 (r1/(2 pi sqrt m))^2
  // and (r12/m)^2 = (4 pi^2)^2 (r12/(4 pi^2 m))^2.
  const double four_pi2 = 4.0 * kPi * kPi;
  rep.r2_total = rep.term_r + four_pi2 * (rep.term_r1 + rep.term_r2) +
                 four_pi2 * four_pi2 * rep.term_r12;
  return rep;
}

double bound_rational_value(long long m, long long n_points) {
  return static_cast<double>(m) / static_cast<double>(n_points);
}

double bound_irrational_value(long long m, long long n_points) {
  const double lg = std::log(static_cast<double>(m));
  return static_cast<double>(m) *
         std::pow(lg / static_cast<double>(n_points), 0.8);
}

VarianceBound variance_bound(const EnergyLevel& level, const Direction& dir,
                             BoundKind kind, double epsilon) {
  VarianceBound b;
  b.kind = kind;
  switch (kind) {
    case BoundKind::RationalSlope: {
      if (!dir.is_rational()) {
        throw std::invalid_argument(
            "RationalSlope bound requires a rational direction");
      }
      b.value = bound_rational_value(level.m, level.n_points);
      b.hypothesis_note = "rational slope " + dir.describe() +
                          "; bound shape m/N with C = 1";
      break;
    }
    case BoundKind::IrrationalUnconditional: {
      b.value = bound_irrational_value(level.m, level.n_points);
      b.hypothesis_note =
          "unconditional bound shape m*(log m / N)^(4/5) with C = 1";
      break;
    }
    case BoundKind::ConjecturalOrGapped: {
      if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("epsilon must lie in (0, 1)");
      }
      b.value = bound_rational_value(level.m, level.n_points);
      const double gap = min_pair_distance(level);
      const double threshold =
          std::pow(static_cast<double>(level.m), 0.5 * (1.0 - epsilon));
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "bound shape m/N with C = 1; valid under a spectral "
                    "correlation hypothesis, or via the gap condition: "
                    "min gap %.6g %s m^((1-%.3g)/2) = %.6g",
                    gap, gap > threshold ? ">" : "<=", epsilon, threshold);
      b.hypothesis_note = buf;
      break;
    }
  }
  return b;
}

}  // namespace arw
