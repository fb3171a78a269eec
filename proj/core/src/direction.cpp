#include "arw/direction.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace arw {

Direction Direction::rational(long long p, long long q) {
  if (q == 0) {
    throw std::invalid_argument(
        "rational slope requires q != 0; use theta:<radians> for vertical "
        "directions");
  }
  long long g = std::gcd(std::llabs(p), std::llabs(q));
  p /= g;
  q /= g;
  if (q < 0) {  // slope is p/q; fix the representative so q > 0
    p = -p;
    q = -q;
  }
  Direction d;
  d.kind_ = Kind::RationalSlope;
  d.p_ = p;
  d.q_ = q;
  double len = std::hypot(static_cast<double>(q), static_cast<double>(p));
  d.rational_scale_ = 1.0 / len;
  d.alpha_ = Vec2{static_cast<double>(q) / len, static_cast<double>(p) / len};
  d.theta_ = std::atan2(d.alpha_.y, d.alpha_.x);
  return d;
}

Direction Direction::angle(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("direction angle must be finite");
  }
  Direction d;
  d.kind_ = Kind::Angle;
  d.theta_ = theta;
  d.alpha_ = Vec2{std::cos(theta), std::sin(theta)};
  return d;
}

Direction Direction::parse(const std::string& text) {
  if (text.rfind("theta:", 0) == 0) {
    const std::string body = text.substr(6);
    size_t used = 0;
    double theta = 0.0;
    try {
      theta = std::stod(body, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad direction '" + text +
                                  "': expected theta:<radians>");
    }
    if (used != body.size()) {
      throw std::invalid_argument("bad direction '" + text +
                                  "': trailing characters after the angle");
    }
    return angle(theta);
  }
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    throw std::invalid_argument("bad direction '" + text +
                                "': expected p/q or theta:<radians>");
  }
  long long p = 0;
  long long q = 0;
  try {
    size_t used_p = 0;
    size_t used_q = 0;
    const std::string ps = text.substr(0, slash);
    const std::string qs = text.substr(slash + 1);
    p = std::stoll(ps, &used_p);
    q = std::stoll(qs, &used_q);
    if (used_p != ps.size() || used_q != qs.size()) {
      throw std::invalid_argument("trailing characters");
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad direction '" + text +
                                "': expected integers p/q");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("bad direction '" + text +
                                "': integer out of range");
  }
  return rational(p, q);
}

std::string Direction::describe() const {
  if (kind_ == Kind::RationalSlope) {
    return std::to_string(p_) + "/" + std::to_string(q_);
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "theta:%.17g", theta_);
  return buf;
}

}  // namespace arw
