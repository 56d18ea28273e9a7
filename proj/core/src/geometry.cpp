#include "dfmsyn/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dfmsyn {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double positive_mod_2pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

double sigma_max(const Mat2& m) {
  const Vec2 a1 = m.col(0);
  const Vec2 a2 = m.col(1);
  const double mm = 0.5 * (dot(a1, a1) + dot(a2, a2));
  const double pp = 0.5 * (dot(a1, a1) - dot(a2, a2));
  const double ss = dot(a1, a2);
  return std::sqrt(mm + std::hypot(pp, ss));
}

Partition::Partition(int n, std::vector<double> alpha, int sign_first_half)
    : n_(n), alpha_(std::move(alpha)), sign_first_half_(sign_first_half) {
  if (n_ < 1) throw std::invalid_argument("partition: n must be positive");
  if (alpha_.size() != static_cast<size_t>(2 * n_ + 1))
    throw std::invalid_argument("partition: need 2n+1 boundary angles");
}

double Partition::boundary_unwrapped(int i) const {
  const int m = 2 * n_;
  const int turns = (i - 1) / m;
  const int rem = (i - 1) % m;
  return alpha_[static_cast<size_t>(rem)] + turns * kTwoPi;
}

int Partition::wrap_index(int i) const {
  const int m = 2 * n_;
  int r = (i - 1) % m;
  if (r < 0) r += m;
  return r + 1;
}

double Partition::canonical(double theta) const {
  const double a1 = alpha_[0];
  double r = theta - kTwoPi * std::floor((theta - a1) / kTwoPi);
  while (r < a1) r += kTwoPi;
  while (r >= a1 + kTwoPi) r -= kTwoPi;
  return r;
}

int Partition::locate(double theta) const {
  const double u = canonical(theta) - alpha_[0];
  auto off = [&](int i) { return boundary_unwrapped(i) - alpha_[0]; };
  int lo = 1, hi = 2 * n_ + 1;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    if (off(mid) <= u) lo = mid; else hi = mid;
  }
  // lo is the interval with off(lo) <= u < off(lo+1); an angle within
  // tolerance of the upper boundary belongs to the next interval
  if (off(lo + 1) - u <= kAngleTol) return wrap_index(lo + 1);
  return lo;
}

Partition build_partition(Vec2 c, int n, const std::vector<double>* custom_angles) {
  if (c.x == 0.0 && c.y == 0.0)
    throw std::invalid_argument("build_partition: sensor vector c must be nonzero");
  if (n < 1) throw std::invalid_argument("build_partition: n must be positive");

  double a1;
  if (c.y == 0.0) {
    a1 = M_PI_2;
  } else {
    a1 = std::atan(-c.x / c.y);
    if (a1 < 0.0) a1 += M_PI;
  }

  std::vector<double> alpha(static_cast<size_t>(2 * n + 1));
  if (custom_angles == nullptr) {
    // anchors alpha_{n+1} = alpha_1 + pi and alpha_{2n+1} = alpha_1 + 2*pi are
    // kept exact; the second half mirrors the first
    for (int i = 0; i <= n; ++i)
      alpha[static_cast<size_t>(i)] = a1 + (i * M_PI) / n;
    for (int i = 1; i <= n; ++i)
      alpha[static_cast<size_t>(n + i)] = a1 + M_PI + (i * M_PI) / n;
  } else {
    if (custom_angles->size() != alpha.size())
      throw std::invalid_argument("build_partition: custom angle list must have 2n+1 entries");
    alpha = *custom_angles;
    for (size_t i = 0; i + 1 < alpha.size(); ++i)
      if (!(alpha[i] < alpha[i + 1]))
        throw std::invalid_argument("build_partition: custom angles must be strictly increasing");
    if (alpha[0] < 0.0 || alpha[0] >= M_PI)
      throw std::invalid_argument("build_partition: alpha_1 must lie in [0, pi)");
    if (std::abs(alpha[static_cast<size_t>(n)] - alpha[0] - M_PI) > kAngleTol)
      throw std::invalid_argument("build_partition: alpha_{n+1} must equal alpha_1 + pi");
    if (std::abs(alpha[static_cast<size_t>(2 * n)] - alpha[0] - kTwoPi) > kAngleTol)
      throw std::invalid_argument("build_partition: alpha_{2n+1} must equal alpha_1 + 2*pi");
  }

  const int s1 = sign_of(dot(c, beta(alpha[1])));
  if (s1 == 0)
    throw std::invalid_argument("build_partition: sensor sign undefined at alpha_2");

  // every interval must read a constant sensor sign, i.e. the sign zeros
  // {alpha_1, alpha_1 + pi} may only occur at the half anchors
  for (int i = 1; i <= 2 * n; ++i) {
    const double mid = 0.5 * (alpha[static_cast<size_t>(i - 1)] + alpha[static_cast<size_t>(i)]);
    const int s = sign_of(dot(c, beta(mid)));
    const int expected = (i <= n) ? s1 : -s1;
    if (s != expected)
      throw std::invalid_argument("build_partition: sensor sign not constant per interval");
  }

  return Partition(n, std::move(alpha), s1);
}

Arc half_circle(const Partition& p, int y) {
  if (y == p.sign_first_half()) return Arc{1, p.n()};
  return Arc{p.n() + 1, p.n()};
}

double arc_length(const Partition& p, const Arc& q) {
  if (q.span == p.size()) return kTwoPi;
  return p.boundary_unwrapped(q.start_index + q.span) - p.boundary(q.start_index);
}

bool arc_contains(const Partition& p, const Arc& q, double theta) {
  if (q.span == p.size()) return true;
  const int loc = p.locate(theta);  // interval index after boundary snapping
  const int rel = (loc - q.start_index + p.size()) % p.size();
  return rel < q.span;
}

RefineResult refine(const Partition& p, const Arc& q, const Arc& h) {
  const int m = p.size();
  if (q.span == m) return {h, false};
  if (h.span == m) return {q, false};

  std::vector<char> in_q(static_cast<size_t>(m + 1), 0);
  std::vector<char> in_h(static_cast<size_t>(m + 1), 0);
  for (int k = 0; k < q.span; ++k) in_q[static_cast<size_t>(p.wrap_index(q.start_index + k))] = 1;
  for (int k = 0; k < h.span; ++k) in_h[static_cast<size_t>(p.wrap_index(h.start_index + k))] = 1;

  auto in_both = [&](int i) { return in_q[static_cast<size_t>(i)] && in_h[static_cast<size_t>(i)]; };

  struct Run { int start; int len; };
  std::vector<Run> runs;
  for (int i = 1; i <= m; ++i) {
    if (in_both(i) && !in_both(p.wrap_index(i - 1))) {
      int len = 1;
      while (in_both(p.wrap_index(i + len))) ++len;
      runs.push_back({i, len});
    }
  }
  if (runs.empty()) {
    bool any = false;
    for (int i = 1; i <= m && !any; ++i) any = in_both(i);
    if (!any) return {std::nullopt, false};
    // every interval is in both; only possible when q or h is the full circle
    return {Arc{1, m}, false};
  }
  if (runs.size() == 1) return {Arc{runs[0].start, runs[0].len}, false};
  if (runs.size() != 2)
    throw std::logic_error("refine: intersection of two arcs has more than two components");

  auto span_between = [&](int start, int last) {
    return (last - start + m) % m + 1;
  };
  const int end0 = p.wrap_index(runs[0].start + runs[0].len - 1);
  const int end1 = p.wrap_index(runs[1].start + runs[1].len - 1);
  const Arc cand0{runs[0].start, span_between(runs[0].start, end1)};
  const Arc cand1{runs[1].start, span_between(runs[1].start, end0)};
  const double len0 = arc_length(p, cand0);
  const double len1 = arc_length(p, cand1);
  Arc shorter = cand0;
  if (len1 < len0 - kAngleTol ||
      (std::abs(len1 - len0) <= kAngleTol && cand1.start_index < cand0.start_index)) {
    shorter = cand1;
  }
  return {shorter, true};
}

double map_direction(const Partition& p, const Mat2& A, double theta) {
  const Vec2 v = A * beta(theta);
  return p.canonical(std::atan2(v.y, v.x));
}

RawArc image_arc(const Partition& p, const Arc& q, const Mat2& A) {
  const double det = A.det();
  if (det == 0.0) throw std::invalid_argument("image_arc: singular matrix");

  const double theta_s = p.boundary(q.start_index);
  const double gs = map_direction(p, A, theta_s);
  if (q.span == p.size()) return {gs, kTwoPi};

  const double len_q = arc_length(p, q);
  const double theta_e = theta_s + len_q;
  const double ge = map_direction(p, A, theta_e);

  double start, d;
  if (det > 0.0) {
    start = gs;
    d = positive_mod_2pi(ge - gs);
  } else {
    start = ge;
    d = positive_mod_2pi(gs - ge);
  }
  // an arc shorter than pi maps to one shorter than pi (antipodal
  // equivariance), which disambiguates a zero residue
  if (d == 0.0) d = len_q >= M_PI ? kTwoPi : kAngleTol;
  return {start, d};
}

Arc cover(const Partition& p, const RawArc& raw) {
  if (!(raw.length > 0.0) || raw.length > kTwoPi + kAngleTol)
    throw std::invalid_argument("cover: raw length must lie in (0, 2*pi]");
  const int m = p.size();
  const double L = std::min(raw.length, kTwoPi);
  if (L >= kTwoPi - kAngleTol) return Arc{1, m};

  const double a1 = p.boundary(1);
  auto off = [&](int i) { return p.boundary_unwrapped(i) - a1; };

  double us = p.canonical(raw.start) - a1;  // [0, 2*pi)
  // snap the start onto a boundary when within tolerance
  {
    int lo = 1, hi = 2 * m + 1;
    while (hi - lo > 1) {
      const int mid = (lo + hi) / 2;
      if (off(mid) <= us) lo = mid; else hi = mid;
    }
    if (us - off(lo) <= kAngleTol) us = off(lo);
    else if (off(lo + 1) - us <= kAngleTol) us = off(lo + 1);
    if (us >= kTwoPi) us -= kTwoPi;
  }

  int is;
  {
    int lo = 1, hi = m + 1;
    while (hi - lo > 1) {
      const int mid = (lo + hi) / 2;
      if (off(mid) <= us) lo = mid; else hi = mid;
    }
    is = lo;
  }

  double ue = us + L;
  {
    int lo = 1, hi = 2 * m + 1;
    while (hi - lo > 1) {
      const int mid = (lo + hi) / 2;
      if (off(mid) <= ue) lo = mid; else hi = mid;
    }
    if (ue - off(lo) <= kAngleTol) ue = off(lo);
    else if (off(lo + 1) - ue <= kAngleTol) ue = off(lo + 1);
  }

  // exclusive end: the last covered interval is the one containing ue-
  int last;
  {
    int lo = 1, hi = 2 * m + 1;
    while (hi - lo > 1) {
      const int mid = (lo + hi) / 2;
      if (off(mid) < ue) lo = mid; else hi = mid;
    }
    last = lo;  // off(last) < ue <= off(last+1)
  }

  const int span = last - is + 1;
  if (span >= m) return Arc{1, m};
  return Arc{p.wrap_index(is), span};
}

}  // namespace dfmsyn
