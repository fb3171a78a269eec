#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "arw/direction.hpp"
#include "arw/lattice.hpp"

namespace arw {

// ============================================================================
// Random toral eigenfunctions
//     F(x) = (1/sqrt(N)) sum_{mu in E_m} a_mu exp(2 pi i <mu, x>),
// with a_mu complex standard Gaussian subject to a_{-mu} = conj(a_mu), so F
// is real with E F = 0, E F^2 = 1.  Coefficients are stored on the
// antipodal half set only (one per {mu, -mu} pair); the conjugate constraint
// is then structural and the field reads
//     F(x) = (2/sqrt(N)) sum_half [Re a_mu cos(2 pi <mu,x>)
//                                  - Im a_mu sin(2 pi <mu,x>)].
// Restricted to a straight segment x = offset + t*alpha the field becomes a
// finite trigonometric sum in t with frequencies d_mu = <mu, alpha>, which
// is what the zero counter works on.
// ============================================================================

struct Segment {
  Direction direction;
  double length = 1.0;
  Vec2 offset{0.0, 0.0};
};

struct WaveSample {
  EnergyLevel level;
  std::vector<LatticePoint> half_set;             // angle-sorted, [0, pi)
  std::vector<std::complex<double>> coefficients; // a_mu per half_set entry
  std::uint64_t seed = 0;
};

// Draws Re a_mu, Im a_mu ~ N(0, 1/2) independently per half-set point, in
// half-set order, from a splitmix64 stream seeded with `seed`.  E |a_mu|^2
// = 1.  Deterministic per (m, seed).
WaveSample sample_wave(const EnergyLevel& level, std::uint64_t seed);

double evaluate_field(const WaveSample& sample, Vec2 x);

// f(t) = F(offset + t*alpha) flattened to amplitude/frequency/phase triples:
// f(t) = sum_k amp[k] cos(2 pi freq[k] t + phase[k]).
struct LineRestriction {
  std::vector<double> amp;
  std::vector<double> freq;   // d_mu = <mu, alpha>
  std::vector<double> phase;
  double length = 0.0;

  double value(double t) const;
  double derivative(double t) const;
  double max_frequency() const;      // max |freq|, <= sqrt(m)
  double derivative_bound() const;   // 2 pi sum |amp * freq| >= sup |f'|
};

LineRestriction restrict_to_segment(const WaveSample& sample,
                                    const Segment& segment);

struct SegmentValue {
  double f = 0.0;
  double fprime = 0.0;  // exact analytic derivative, not a difference
};
SegmentValue evaluate_along_segment(const WaveSample& sample,
                                    const Segment& segment, double t);

// Zero count of f on the closed interval [0, L].  Uniform scan at step
// h = 1 / (oversampling * max |d_mu|), bisection refinement of each sign
// change down to width 1e-13 * max(1, L).  Cells without a sign change but
// with an endpoint value suspiciously close to zero are subdivided 8x and
// recounted; if the subdivision still shows no sign change the cell is only
// recorded in `suspicious_cells` (a count is never changed without a sign
// change).  Zeros landing exactly on grid nodes (t = 0 and t = L included)
// are counted once.
struct NodalCount {
  long long count = 0;
  std::vector<double> roots;
  long long suspicious_cells = 0;
};
NodalCount count_zeros(const LineRestriction& f, int oversampling = 64);
NodalCount count_nodal_intersections(const WaveSample& sample,
                                     const Segment& segment,
                                     int oversampling = 64);

// Covariance data of the restricted process f(t) = F(offset + t*alpha) at
// lag tau = t1 - t2:
//   r   = (1/N) sum cos(2 pi tau d_mu)
//   r1  = dr/dt1 = -(2 pi/N) sum d_mu sin(2 pi tau d_mu)
//   r2  = dr/dt2 = -r1
//   r12 = d2r/dt1 dt2 = (4 pi^2/N) sum d_mu^2 cos(2 pi tau d_mu)
struct CovarianceValues {
  double r = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double r12 = 0.0;
};
CovarianceValues covariance_exact(const EnergyLevel& level,
                                  const Direction& dir, double tau);

}  // namespace arw
