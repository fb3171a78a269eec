#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arw/direction.hpp"

namespace arw {

// ============================================================================
// Lattice points on circles x^2 + y^2 = m.
//
// m is representable as a sum of two squares iff every prime = 3 (mod 4)
// divides m to an even power.  The set of representable m is called S here;
// for m in S the circle of radius sqrt(m) carries
//     N_m = r2(m) = 4 * prod (a_i + 1)
// integer points, the product running over primes p_i = 1 (mod 4) with
// p_i^(a_i) || m.  Everything downstream (wave sampling, pair sums, arc
// statistics) is built on these point sets, so exactness matters: membership
// and representation counts come from trial-division factorization (desk
// scale is m <= 1e8), enumeration scans x in [0, sqrt(m)] testing m - x^2
// for squareness, and all pair tests against rational directions stay in
// integer arithmetic.
// ============================================================================

struct LatticePoint {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// (prime, exponent) pairs, primes ascending.
using Factorization = std::vector<std::pair<long long, int>>;

struct TwoSquaresClass {
  bool is_member = false;   // m in S?
  Factorization factors;    // full factorization of m (empty for m = 1)
};

// Total function on m >= 1: factorizes and applies the parity rule on
// primes = 3 (mod 4).  m = 0 is rejected (not a circle).
TwoSquaresClass classify_sum_of_two_squares(long long m);

// N_m from the divisor formula.  Throws if m is not representable.
long long count_representations(long long m);

struct EnergyLevel {
  long long m = 0;
  std::vector<LatticePoint> points;  // all of E_m, sorted by angle in [0,2pi)
  long long n_points = 0;            // == points.size() == N_m
  Factorization factors;
};

// Full point set E_m, sorted by angle in [0, 2pi).  Throws "not
// representable" for m outside S.
EnergyLevel enumerate_lattice_points(long long m);

// Angle of a nonzero point in [0, 2pi).
double point_angle(LatticePoint p);

// One representative from each antipodal pair {mu, -mu}: the one whose angle
// lies in [0, pi), i.e. y > 0 or (y == 0 and x > 0).  Exactly N_m/2 points.
std::vector<LatticePoint> antipodal_half_set(const EnergyLevel& level);

// min over distinct mu, mu' of |mu - mu'|.  Requires at least two points.
double min_pair_distance(const EnergyLevel& level);

// Maximum number of points of E_m on any closed circular arc of the given
// length (angular width arc_length / sqrt(m)).  arc_length >= full circle
// returns N_m.
long long arc_max_occupancy(const EnergyLevel& level, double arc_length);

// Points B' != B whose chord B - B' is nearly orthogonal to beta:
//   |<B - B', beta>| <= c * |B - B'|,  0 < c < 1/2.
// All such B' lie on one closed arc; the returned arc (center angle, arc
// length 4*c*sqrt(m)/sqrt(1-c^2)) is a certified cover of them.
struct NearOrthogonalArc {
  double center_angle = 0.0;
  double length = 0.0;
  std::vector<LatticePoint> points;
};
NearOrthogonalArc near_orthogonal_arc(const EnergyLevel& level, LatticePoint B,
                                      Vec2 beta, double c);

// Ordered pairs (mu, mu') in E_m^2 with <mu - mu', v> != 0.  The diagonal is
// excluded automatically.  The zero test is exact: integer arithmetic for
// the (q, p) overload, literal 0.0 comparison for the floating overload (no
// tolerance snapping).
using PointPair = std::pair<LatticePoint, LatticePoint>;
std::vector<PointPair> pair_set_A(const EnergyLevel& level, Vec2 v);
std::vector<PointPair> pair_set_A(const EnergyLevel& level, long long q,
                                  long long p);
std::vector<PointPair> pair_set_A(const EnergyLevel& level,
                                  const Direction& dir);

// sum over A_(q,p) of 1 / <mu - mu', (q,p)>^2, exact integer inner products;
// requires gcd(p, q) = 1, (q, p) != 0.  Bounded by (2 pi^2 / 3) * N_m: for
// each mu and each integer value k != 0 of the inner product there are at
// most 2 partners mu' (a circle meets a line in at most 2 points), so the
// sum is <= N * 2 * 2 * sum_{k>=1} 1/k^2 = (2 pi^2 / 3) * N.
double rational_pair_sum(const EnergyLevel& level, long long q, long long p);

// sum over A_alpha of min(1, 1 / <mu - mu', alpha>^2) for a unit direction
// alpha of either kind.
double min_pair_sum(const EnergyLevel& level, const Direction& dir);

// Three-range split of the A_alpha sum.  Over ordered pairs in A_alpha:
//   range_small_gap:        #{ |mu - mu'| <= a }
//   range_near_orthogonal:  #{ |<mu - mu', alpha>| <= c |mu - mu'| }
//   range_far:              sum 1/<mu - mu', alpha>^2 over the rest
// total is the plain min-weighted sum; ranges overlap at their boundaries,
// so total <= sum of the three parts.  range_far <= N^2 / (a^2 c^2).
struct PairSumReport {
  double total = 0.0;
  double range_small_gap = 0.0;
  double range_near_orthogonal = 0.0;
  double range_far = 0.0;
  double a = 0.0;
  double c = 0.0;
};
PairSumReport range_decomposition(const EnergyLevel& level,
                                  const Direction& dir, double a, double c);

// The balancing choice a = c * sqrt(m) = (J/l)^(1/5) N^(1/5) m^(1/5) given a
// target pair-count budget J and arc occupancy l.  Returns (a, c).
std::pair<double, double> optimal_range_parameters(double J, double l,
                                                   long long n_points,
                                                   long long m);

// |S(X)| together with the normalized ratio count * sqrt(log X) / X (log
// natural), which tends to the Landau-Ramanujan constant from above.
struct CensusResult {
  long long count = 0;
  double ratio = 0.0;
};
CensusResult census_S(long long X);

// Scan of the minimal-gap property: counts m in S(X) whose minimal pair
// distance is <= (sqrt m)^(1 - epsilon).  Such m become rare as X grows;
// fraction = failing / |S(X)|.
struct DensityScan {
  long long failing = 0;
  double fraction = 0.0;
  std::vector<long long> failing_m;
};
DensityScan density_one_check(long long X, double epsilon);

}  // namespace arw
