#include "arw/wave.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "arw/rng.hpp"

namespace arw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

// <mu, alpha> with exact integer arithmetic on the rational route, so that
// perpendicular pairs produce frequency exactly 0.
double segment_frequency(LatticePoint mu, const Direction& dir) {
  if (dir.is_rational()) {
    const long long k = mu.x * dir.q() + mu.y * dir.p();
    return static_cast<double>(k) * dir.rational_scale();
  }
  const Vec2 alpha = dir.alpha();
  return static_cast<double>(mu.x) * alpha.x +
         static_cast<double>(mu.y) * alpha.y;
}

}  // namespace

WaveSample sample_wave(const EnergyLevel& level, std::uint64_t seed) {
  if (level.points.size() < 2) {
    throw std::invalid_argument("sample_wave needs a populated energy level");
  }
  WaveSample sample;
  sample.level = level;
  sample.half_set = antipodal_half_set(level);
  sample.seed = seed;
  sample.coefficients.reserve(sample.half_set.size());
  SplitMix64 rng(seed);
  for (size_t k = 0; k < sample.half_set.size(); ++k) {
    const auto [z_re, z_im] = gaussian_pair(rng);
    // Re and Im parts are N(0, 1/2): E |a_mu|^2 = 1.
    sample.coefficients.emplace_back(z_re * kInvSqrt2, z_im * kInvSqrt2);
  }
  return sample;
}

double evaluate_field(const WaveSample& sample, Vec2 x) {
  double sum = 0.0;
  for (size_t k = 0; k < sample.half_set.size(); ++k) {
    const auto& mu = sample.half_set[k];
    const double phase =
        kTwoPi * (static_cast<double>(mu.x) * x.x + static_cast<double>(mu.y) * x.y);
    sum += sample.coefficients[k].real() * std::cos(phase) -
           sample.coefficients[k].imag() * std::sin(phase);
  }
  return 2.0 / std::sqrt(static_cast<double>(sample.level.n_points)) * sum;
}

double LineRestriction::value(double t) const {
  double sum = 0.0;
  for (size_t k = 0; k < amp.size(); ++k) {
    sum += amp[k] * std::cos(kTwoPi * freq[k] * t + phase[k]);
  }
  return sum;
}

double LineRestriction::derivative(double t) const {
  double sum = 0.0;
  for (size_t k = 0; k < amp.size(); ++k) {
    sum += amp[k] * freq[k] * std::sin(kTwoPi * freq[k] * t + phase[k]);
  }
  return -kTwoPi * sum;
}

double LineRestriction::max_frequency() const {
  double m = 0.0;
  for (double f : freq) m = std::max(m, std::abs(f));
  return m;
}

double LineRestriction::derivative_bound() const {
  double s = 0.0;
  for (size_t k = 0; k < amp.size(); ++k) s += std::abs(amp[k] * freq[k]);
  return kTwoPi * s;
}

LineRestriction restrict_to_segment(const WaveSample& sample,
                                    const Segment& segment) {
  if (!(segment.length >= 0.0)) {
    throw std::invalid_argument("segment length must be nonnegative");
  }
  LineRestriction f;
  f.length = segment.length;
  const size_t n = sample.half_set.size();
  f.amp.reserve(n);
  f.freq.reserve(n);
  f.phase.reserve(n);
  const double scale =
      2.0 / std::sqrt(static_cast<double>(sample.level.n_points));
  for (size_t k = 0; k < n; ++k) {
    const auto& mu = sample.half_set[k];
    const auto a = sample.coefficients[k];
    // Re a cos(theta) - Im a sin(theta) = |a| cos(theta + arg a).
    f.amp.push_back(scale * std::abs(a));
    f.freq.push_back(segment_frequency(mu, segment.direction));
    const double offset_phase =
        kTwoPi * (static_cast<double>(mu.x) * segment.offset.x +
                  static_cast<double>(mu.y) * segment.offset.y);
    f.phase.push_back(offset_phase + std::arg(a));
  }
  return f;
}

SegmentValue evaluate_along_segment(const WaveSample& sample,
                                    const Segment& segment, double t) {
  const LineRestriction f = restrict_to_segment(sample, segment);
  return SegmentValue{f.value(t), f.derivative(t)};
}

namespace {

// Bisection on a bracketing interval; returns the root location.
double bisect_root(const LineRestriction& f, double a, double b, double fa,
                   double tol) {
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    const double fm = f.value(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// Zero scan on one cell [a, b] with endpoint values fa, fb, appending roots
// strictly inside (a, b); endpoint zeros are handled by the caller.
void scan_cell(const LineRestriction& f, double a, double b, double fa,
               double fb, double tol, double delta_sus, NodalCount& out) {
  if (fa == 0.0 || fb == 0.0) return;
  if ((fa > 0.0) != (fb > 0.0)) {
    out.roots.push_back(bisect_root(f, a, b, fa, tol));
    return;
  }
  // No sign change.  If an endpoint is suspiciously close to zero the cell
  // may hide a zero pair; subdivide 8x and look again.  Without a sign
  // change in the refinement the count stays untouched and the cell is only
  // reported.
  if (std::min(std::abs(fa), std::abs(fb)) >= delta_sus) return;
  bool found = false;
  double prev_t = a;
  double prev_v = fa;
  for (int j = 1; j <= 8; ++j) {
    const double t = a + (b - a) * static_cast<double>(j) / 8.0;
    const double v = (j == 8) ? fb : f.value(t);
    if (v == 0.0 && j != 8) {
      out.roots.push_back(t);
      found = true;
    } else if (prev_v != 0.0 && v != 0.0 && (prev_v > 0.0) != (v > 0.0)) {
      out.roots.push_back(bisect_root(f, prev_t, t, prev_v, tol));
      found = true;
    }
    prev_t = t;
    prev_v = v;
  }
  if (!found) ++out.suspicious_cells;
}

}  // namespace

NodalCount count_zeros(const LineRestriction& f, int oversampling) {
  if (oversampling < 1) {
    throw std::invalid_argument("oversampling factor must be >= 1");
  }
  NodalCount out;
  const double L = f.length;
  if (L == 0.0) {
    if (f.value(0.0) == 0.0) {
      out.roots.push_back(0.0);
      out.count = 1;
    }
    return out;
  }
  const double fmax = f.max_frequency();
  if (fmax == 0.0) {
    // Constant function; a zero constant is degenerate, flag it instead of
    // claiming a count.
    if (f.value(0.0) == 0.0) ++out.suspicious_cells;
    return out;
  }
  const double h = 1.0 / (static_cast<double>(oversampling) * fmax);
  const auto cells = static_cast<long long>(std::ceil(L / h));
  const double tol = 1e-13 * std::max(1.0, L);
  const double delta_sus = 1e-6 * std::sqrt(f.derivative_bound());

  double prev_t = 0.0;
  double prev_v = f.value(0.0);
  if (prev_v == 0.0) out.roots.push_back(0.0);
  for (long long i = 1; i <= cells; ++i) {
    const double t = L * static_cast<double>(i) / static_cast<double>(cells);
    const double v = f.value(t);
    scan_cell(f, prev_t, t, prev_v, v, tol, delta_sus, out);
    if (v == 0.0) out.roots.push_back(t);
    prev_t = t;
    prev_v = v;
  }
  out.count = static_cast<long long>(out.roots.size());
  return out;
}

NodalCount count_nodal_intersections(const WaveSample& sample,
                                     const Segment& segment,
                                     int oversampling) {
  return count_zeros(restrict_to_segment(sample, segment), oversampling);
}

CovarianceValues covariance_exact(const EnergyLevel& level,
                                  const Direction& dir, double tau) {
  double r = 0.0;
  double r1 = 0.0;
  double r12 = 0.0;
  for (const auto& mu : level.points) {
    const double d = segment_frequency(mu, dir);
    const double arg = kTwoPi * tau * d;
    const double c = std::cos(arg);
    r += c;
    r1 += d * std::sin(arg);
    r12 += d * d * c;
  }
  const double inv_n = 1.0 / static_cast<double>(level.n_points);
  CovarianceValues cov;
  cov.r = r * inv_n;
  cov.r1 = -kTwoPi * r1 * inv_n;
  cov.r2 = -cov.r1;
  cov.r12 = kTwoPi * kTwoPi * r12 * inv_n;
  return cov;
}

}  // namespace arw
