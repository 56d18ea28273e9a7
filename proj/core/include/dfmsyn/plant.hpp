#pragma once

#include <functional>
#include <optional>

#include "dfmsyn/linalg.hpp"

namespace dfmsyn {

/// Closed-form matrix exponential e^{A t} of a 2x2 matrix, split by the
/// sign of the eigenvalue discriminant (complex pair / distinct real /
/// repeated real), each case expressed through trace and determinant.
Mat2 expm_2x2(const Mat2& A, double t);

struct StepResult {
  Vec2 x_next;
  int y = 0;       // sensor output in {-1, +1}
  double v = 0.0;  // log10(|x_next| / |x|)
};

/// Switched second-order homogeneous plant with a binary sign sensor.
/// Modes are either a pair of 2x2 matrices (exact geometry downstream) or
/// a pair of user-supplied degree-1 homogeneous maps (sampled geometry).
/// The sensor boundary convention matches the half-open partition
/// intervals: a state with c'x = 0 reads the sign of the half circle that
/// starts at its direction.
class Plant {
 public:
  using HomogeneousMap = std::function<Vec2(Vec2)>;

  Plant(const Mat2& A0, const Mat2& A1, Vec2 c);
  Plant(HomogeneousMap f0, HomogeneousMap f1, Vec2 c);

  bool is_matrix() const { return matrix_.has_value(); }
  const Mat2& mode_matrix(int u) const;
  Vec2 apply(int u, const Vec2& x) const;

  const Vec2& c() const { return c_; }
  /// Sensor zero direction in [0, pi) (the partition anchor alpha_1).
  double alpha1() const { return alpha1_; }
  /// sign(c'beta(.)) on the open half (alpha1, alpha1 + pi).
  int sign_first_half() const { return sign_first_half_; }

  /// Sensor output for state x under the half-open boundary convention.
  int sensor(const Vec2& x) const;

  /// One plant step: x' = f_u(x), y = sensor(x), v = log10(|x'|/|x|).
  /// Throws std::domain_error for x == 0.
  StepResult step(const Vec2& x, int u) const;

  /// Direction update theta -> atan2(f_u2(beta), f_u1(beta)), wrapped
  /// into [alpha1, alpha1 + 2*pi).
  double angle_step(double theta, int u) const;

  /// M = max over modes and unit directions of |f_u(beta(theta))|;
  /// v(t) <= log10(M) on every step.
  double norm_bound() const;

  double canonical_angle(double theta) const;

 private:
  std::optional<std::pair<Mat2, Mat2>> matrix_;
  HomogeneousMap f0_, f1_;
  Vec2 c_;
  double alpha1_;
  int sign_first_half_;
};

/// The paper-style harmonic oscillator pair: A(0) = [[0,1],[-1,0]] and
/// A(1) = [[0,1],[k0,0]], sampled with period Ts, sensor c = [1,0].
struct HarmonicPair {
  double k0 = -3.0;
  double Ts = M_PI / 5.0;

  Mat2 mode0() const;  // e^{A(0) Ts}
  Mat2 mode1() const;  // e^{A(1) Ts}
  Plant plant() const;
};

}  // namespace dfmsyn
