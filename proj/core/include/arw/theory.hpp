#pragma once

#include <string>

#include "arw/direction.hpp"
#include "arw/lattice.hpp"

namespace arw {

// ============================================================================
// Closed-form first/second moment data for the zero count Z of the restricted
// process f(t) = F(t * alpha), t in [0, L].
//
// First moment: the process is stationary unit-variance Gaussian with second
// spectral moment 4 pi^2 * 2m... more usefully, the zero density is constant
//     K1 = sqrt(2) * sqrt(m),  E[Z] = sqrt(2m) * L,
// independent of the direction.
//
// Second moment: with the lag tau = t1 - t2 and pairwise frequencies
// D = <mu - mu', alpha>,
//     int_0^L int_0^L r(t1-t2)^2 dt1 dt2
//         = (1/N^2) sum_{(mu,mu') in E^2} |int_0^L e^{2 pi i D t} dt|^2,
// an exact identity (expand r as the pair sum and integrate mode by mode).
// The single-mode factor is sinc_pair_integral below.  The same expansion
// weighted by (d_mu d_mu' / m) resp. (d_mu^2 d_mu'^2 / m^2) evaluates the
// normalized derivative integrals, each bounded by the unweighted pair sum
// since the weights have modulus <= 1.
// ============================================================================

// sqrt(2m) * L; L = 0 gives 0 (degenerate segment).
double expected_intersections(long long m, double L);

// K1 = sqrt(2) * sqrt(m).
double zero_density_constant(long long m);

// |int_0^L e^{2 pi i d t} dt|^2 = sin^2(pi L d) / (pi d)^2, with the d = 0
// value L^2 and a Taylor branch L^2 (1 - (pi L d)^2 / 3) when |pi L d| is
// below 1e-4 to dodge 0/0 cancellation.
double sinc_pair_integral(double d, double L);

struct SecondMomentReport {
  // Splits of the unweighted pair sum (1/N^2) sum sinc_pair:
  double diagonal_part = 0.0;        // mu = mu': L^2 / N
  double perpendicular_part = 0.0;   // mu != mu', <mu - mu', alpha> = 0
  double a_alpha_part = 0.0;         // the rest (pairs in A_alpha)
  long long perpendicular_pair_count = 0;  // <= N for any direction

  double term_r = 0.0;    // int int r^2 = diagonal + perpendicular + A_alpha
  double term_r1 = 0.0;   // int int (r1 / (2 pi sqrt m))^2
  double term_r2 = 0.0;   // = term_r1 (r2 = -r1)
  double term_r12 = 0.0;  // int int (r12 / (4 pi^2 m))^2
  double pair_sum_bound = 0.0;  // the unweighted pair sum, >= each term

  // int int (r^2 + (r1/sqrt m)^2 + (r2/sqrt m)^2 + (r12/m)^2), the
  // second-moment functional whose m-multiple bounds the variance.
  double r2_total = 0.0;
};
SecondMomentReport second_moment_closed_form(const EnergyLevel& level,
                                             const Direction& dir, double L);

// Variance bound shapes (constant C = 1, reported as shapes, not estimates):
//   RationalSlope:            m / N_m          (rational direction required)
//   IrrationalUnconditional:  m (log m / N_m)^(4/5)
//   ConjecturalOrGapped:      m / N_m          (under a spectral-correlation
//                             hypothesis, or when the minimal pair gap
//                             exceeds (sqrt m)^(1-epsilon))
enum class BoundKind { RationalSlope, IrrationalUnconditional, ConjecturalOrGapped };

struct VarianceBound {
  BoundKind kind = BoundKind::RationalSlope;
  double value = 0.0;
  std::string hypothesis_note;
};
VarianceBound variance_bound(const EnergyLevel& level, const Direction& dir,
                             BoundKind kind, double epsilon = 0.3);

// Raw bound values (no direction consistency check), used by reporting paths
// that tabulate both shapes side by side.
double bound_rational_value(long long m, long long n_points);
double bound_irrational_value(long long m, long long n_points);

}  // namespace arw
