#include "dfmsyn/plant.hpp"

#include <cmath>
#include <stdexcept>

namespace dfmsyn {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// c and s with c = cosh(sqrt(D)), s = sinh(sqrt(D))/sqrt(D) for D > 0,
// the circular analogues for D < 0, and their common limit near D = 0.
void trig_pair(double D, double& c, double& s) {
  constexpr double kSeriesCut = 1e-12;
  if (D > kSeriesCut) {
    const double w = std::sqrt(D);
    c = std::cosh(w);
    s = std::sinh(w) / w;
  } else if (D < -kSeriesCut) {
    const double w = std::sqrt(-D);
    c = std::cos(w);
    s = std::sin(w) / w;
  } else {
    c = 1.0 + D / 2.0 + D * D / 24.0;
    s = 1.0 + D / 6.0 + D * D / 120.0;
  }
}

}  // namespace

Mat2 expm_2x2(const Mat2& A, double t) {
  const double mu = 0.5 * A.trace();
  // B = A - mu*I is trace-free, so B^2 = -det(B)*I and the exponential
  // reduces to e^{mu t} (c*I + s*t*B) with D = (mu^2 - det A) t^2
  const double D = (mu * mu - A.det()) * t * t;
  double c, s;
  trig_pair(D, c, s);
  const double e = std::exp(mu * t);
  const double st = s * t;
  return {e * (c + st * (A.a - mu)), e * (st * A.b),
          e * (st * A.c), e * (c + st * (A.d - mu))};
}

Plant::Plant(const Mat2& A0, const Mat2& A1, Vec2 c)
    : matrix_(std::make_pair(A0, A1)), c_(c) {
  if (c_.x == 0.0 && c_.y == 0.0)
    throw std::invalid_argument("plant: sensor vector c must be nonzero");
  if (A0.det() == 0.0 || A1.det() == 0.0)
    throw std::invalid_argument("plant: mode matrices must be nonsingular");
  alpha1_ = (c_.y == 0.0) ? M_PI_2 : std::atan(-c_.x / c_.y);
  if (alpha1_ < 0.0) alpha1_ += M_PI;
  const double probe = dot(c_, beta(alpha1_ + M_PI_2));
  sign_first_half_ = probe > 0.0 ? 1 : -1;
}

Plant::Plant(HomogeneousMap f0, HomogeneousMap f1, Vec2 c)
    : f0_(std::move(f0)), f1_(std::move(f1)), c_(c) {
  if (c_.x == 0.0 && c_.y == 0.0)
    throw std::invalid_argument("plant: sensor vector c must be nonzero");
  alpha1_ = (c_.y == 0.0) ? M_PI_2 : std::atan(-c_.x / c_.y);
  if (alpha1_ < 0.0) alpha1_ += M_PI;
  const double probe = dot(c_, beta(alpha1_ + M_PI_2));
  sign_first_half_ = probe > 0.0 ? 1 : -1;
}

const Mat2& Plant::mode_matrix(int u) const {
  if (!matrix_) throw std::logic_error("plant: generic modes have no matrix");
  return u == 0 ? matrix_->first : matrix_->second;
}

Vec2 Plant::apply(int u, const Vec2& x) const {
  if (matrix_) return (u == 0 ? matrix_->first : matrix_->second) * x;
  return u == 0 ? f0_(x) : f1_(x);
}

double Plant::canonical_angle(double theta) const {
  double r = theta - kTwoPi * std::floor((theta - alpha1_) / kTwoPi);
  while (r < alpha1_) r += kTwoPi;
  while (r >= alpha1_ + kTwoPi) r -= kTwoPi;
  return r;
}

int Plant::sensor(const Vec2& x) const {
  const double theta = canonical_angle(std::atan2(x.y, x.x));
  return theta < alpha1_ + M_PI ? sign_first_half_ : -sign_first_half_;
}

StepResult Plant::step(const Vec2& x, int u) const {
  const double r = x.norm();
  if (r == 0.0) throw std::domain_error("plant step: zero state");
  const Vec2 xn = apply(u, x);
  return {xn, sensor(x), std::log10(xn.norm() / r)};
}

double Plant::angle_step(double theta, int u) const {
  const Vec2 v = apply(u, beta(theta));
  return canonical_angle(std::atan2(v.y, v.x));
}

double Plant::norm_bound() const {
  if (matrix_)
    return std::max(sigma_max(matrix_->first), sigma_max(matrix_->second));
  constexpr int kSweep = 8192;
  double m = 0.0;
  for (int u = 0; u < 2; ++u) {
    for (int i = 0; i < kSweep; ++i) {
      const double theta = alpha1_ + kTwoPi * i / kSweep;
      m = std::max(m, apply(u, beta(theta)).norm());
    }
  }
  return m;
}

Mat2 HarmonicPair::mode0() const {
  return expm_2x2(Mat2{0.0, 1.0, -1.0, 0.0}, Ts);
}

Mat2 HarmonicPair::mode1() const {
  return expm_2x2(Mat2{0.0, 1.0, k0, 0.0}, Ts);
}

Plant HarmonicPair::plant() const {
  if (k0 == -1.0)
    throw std::invalid_argument("harmonic pair: k0 = -1 makes both modes identical");
  if (!(Ts > 0.0)) throw std::invalid_argument("harmonic pair: Ts must be positive");
  return Plant(mode0(), mode1(), Vec2{1.0, 0.0});
}

}  // namespace dfmsyn
