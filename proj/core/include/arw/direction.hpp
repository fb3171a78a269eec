#pragma once

#include <cstdint>
#include <string>

namespace arw {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

// Direction of a straight segment on the torus.  Two flavours:
//   - rational slope p/q: the direction is collinear with the integer
//     vector (q, p), so inner products <mu, (q,p)> stay in exact integer
//     arithmetic (q > 0 after normalization, gcd(|p|, q) = 1);
//   - free angle theta: direction (cos theta, sin theta), no exactness.
// The unit vector alpha() is what analytic formulas consume in both cases.
class Direction {
 public:
  enum class Kind { RationalSlope, Angle };

  static Direction rational(long long p, long long q);
  static Direction angle(double theta);

  // Parses the CLI/config grammar: "p/q" or "theta:<radians>".
  static Direction parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::RationalSlope; }
  long long p() const { return p_; }
  long long q() const { return q_; }
  double theta() const { return theta_; }
  Vec2 alpha() const { return alpha_; }

  // 1 / |(q,p)|, the factor turning integer inner products into <mu, alpha>.
  double rational_scale() const { return rational_scale_; }

  // Round-trippable echo for config/metadata output ("p/q" or "theta:<x>").
  std::string describe() const;

 private:
  Direction() = default;

  Kind kind_ = Kind::Angle;
  long long p_ = 0;
  long long q_ = 1;
  double theta_ = 0.0;
  Vec2 alpha_{1.0, 0.0};
  double rational_scale_ = 1.0;
};

}  // namespace arw
