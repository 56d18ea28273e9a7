#pragma once

#include <optional>
#include <vector>

#include "dfmsyn/linalg.hpp"

namespace dfmsyn {

/// Boundary classification tolerance (radians). An angle within this
/// distance of a partition boundary is treated as lying on the boundary.
inline constexpr double kAngleTol = 1e-12;

/// Partition of the unit circle into 2n half-open intervals
/// I_i = [alpha_i, alpha_{i+1}), i = 1..2n, anchored so that the sensor
/// zero set {theta : c'beta(theta) = 0} coincides with the boundaries
/// alpha_1 and alpha_{n+1} = alpha_1 + pi.
///
/// Indices are 1-based throughout: boundaries run 1..2n+1 and intervals
/// 1..2n, wrapping modulo 2n.
class Partition {
 public:
  Partition(int n, std::vector<double> alpha, int sign_first_half);

  int n() const { return n_; }
  int size() const { return 2 * n_; }  // number of intervals

  /// Boundary angle alpha_i, i in 1..2n+1.
  double boundary(int i) const { return alpha_[static_cast<size_t>(i - 1)]; }

  /// Boundary angle for i >= 1 with periodic extension
  /// (alpha_{i+2n} = alpha_i + 2*pi).
  double boundary_unwrapped(int i) const;

  /// Width of interval i, i in 1..2n.
  double interval_width(int i) const { return boundary(i + 1) - boundary(i); }

  /// Wraps an interval index into 1..2n.
  int wrap_index(int i) const;

  /// sign(c'beta(.)) on the open first half (alpha_1, alpha_{n+1}).
  int sign_first_half() const { return sign_first_half_; }

  /// True when interval i (1..2n) lies in the first half [alpha_1, alpha_{n+1}).
  bool in_first_half(int i) const { return i <= n_; }

  /// Canonicalizes an angle into [alpha_1, alpha_1 + 2*pi).
  double canonical(double theta) const;

  /// Index (1..2n) of the interval containing the canonicalized angle,
  /// after snapping angles within kAngleTol of a boundary onto it.
  int locate(double theta) const;

 private:
  int n_;
  std::vector<double> alpha_;  // alpha_[i-1] = alpha_i, i = 1..2n+1
  int sign_first_half_;
};

/// Contiguous run of partition intervals, the state atom of the
/// abstraction. `start_index` is 1-based; `span` counts intervals
/// counterclockwise with indices wrapping modulo 2n. span == 2n is the
/// full circle, canonicalized to start_index == 1.
struct Arc {
  int start_index = 1;
  int span = 1;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Angle in radians; canonical range is [alpha_1, alpha_1 + 2*pi).
struct Direction {
  double theta = 0.0;
};

/// Raw angular interval: counterclockwise from `start`, `length` in (0, 2*pi].
struct RawArc {
  double start = 0.0;
  double length = 0.0;
};

struct RefineResult {
  std::optional<Arc> arc;      // empty intersection -> nullopt
  bool disconnected = false;   // true intersection had two components
};

/// Builds the sensor-anchored partition for sensor vector c. Without
/// custom angles this is the uniform partition alpha_i = alpha_1 + (i-1)*pi/n
/// with alpha_1 = atan(-c1/c2) normalized into [0, pi) (pi/2 when c2 == 0).
/// Custom angles must be strictly increasing, satisfy the pi / 2*pi anchors,
/// and keep sign(c'beta(.)) constant on every interval.
Partition build_partition(Vec2 c, int n,
                          const std::vector<double>* custom_angles = nullptr);

/// The half circle on which the sensor reads y: Arc(1, n) when
/// y == sign_first_half, Arc(n+1, n) otherwise.
Arc half_circle(const Partition& p, int y);

/// Minimal arc covering the set intersection of q with a half circle h.
/// A disconnected intersection (possible only when q is longer than pi)
/// is covered by the shorter of the two minimal covering arcs, ties broken
/// toward the smaller start index, and flagged in the result.
RefineResult refine(const Partition& p, const Arc& q, const Arc& h);

/// Image of q's angle set under theta -> angle(A*beta(theta)). Exact for
/// nonsingular A: the map is a circle homeomorphism, orientation-preserving
/// iff det(A) > 0. Throws std::invalid_argument for singular A.
RawArc image_arc(const Partition& p, const Arc& q, const Mat2& A);

/// Smallest arc whose intervals cover the raw interval; endpoints within
/// kAngleTol of a boundary are snapped onto it before classification.
/// Returns the full circle when the covered range reaches all 2n intervals.
Arc cover(const Partition& p, const RawArc& raw);

/// Angular length of an arc (sum of spanned interval widths).
double arc_length(const Partition& p, const Arc& q);

/// Half-open membership test, with boundary snapping consistent with cover.
bool arc_contains(const Partition& p, const Arc& q, double theta);

/// Direction-map angle: atan2((A beta)_2, (A beta)_1), canonicalized.
double map_direction(const Partition& p, const Mat2& A, double theta);

}  // namespace dfmsyn
