// Copyright 2026 The cxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cxlab/holography.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "cxlab/linalg.hpp"

namespace cxlab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kPanelDecades = 12;

// h(r) = r^{2(d−2)} f(r) = r^{2d−4} − μ r^{d−1} + r^{2d−2}/l².
struct Warp {
  explicit Warp(const BlackHoleSpec& s)
      : d(static_cast<int>(s.d())), mu(s.mu()), inv_l2(1.0 / (s.l_ads() * s.l_ads())) {}

  double h(double r) const {
    return std::pow(r, 2 * d - 4) - mu * std::pow(r, d - 1) + std::pow(r, 2 * d - 2) * inv_l2;
  }
  double h2(double r) const {
    return (2 * d - 4) * (2 * d - 5) * std::pow(r, 2 * d - 6) -
           mu * (d - 1) * (d - 2) * std::pow(r, d - 3) +
           (2 * d - 2) * (2 * d - 3) * std::pow(r, 2 * d - 4) * inv_l2;
  }
  double f(double r) const { return h(r) / std::pow(r, 2 * d - 4); }

  // (r^n − s^n)/(r − s) without cancellation.
  static double divided_power(int n, double r, double s) {
    double total = 0.0, rk = 1.0;
    for (int k = 0; k < n; ++k) {
      total += rk * std::pow(s, n - 1 - k);
      rk *= r;
    }
    return total;
  }
  // (h(r) − h(s))/(r − s).
  double q(double r, double s) const {
    return divided_power(2 * d - 4, r, s) - mu * divided_power(d - 1, r, s) +
           divided_power(2 * d - 2, r, s) * inv_l2;
  }

  int d;
  double mu;
  double inv_l2;
};

template <class F>
double bracketed_root(F fn, double lo, double hi, const char* what) {
  const double flo = fn(lo), fhi = fn(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0) == (fhi < 0)) throw NumericError(std::string(what) + ": root is not bracketed");
  std::uintmax_t iters = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      fn, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52), iters);
  if (iters >= 200) throw NumericError(std::string(what) + ": root finding did not converge");
  return 0.5 * (a + b);
}

// Adaptive Gauss-Kronrod with the error budget checked over a whole sum of
// panels rather than panel by panel.
class Quadrature {
 public:
  explicit Quadrature(double tol) : tol_(tol) {}

  template <class F>
  double operator()(F fn, double a, double b) {
    if (!(b > a)) return 0.0;
    // Always integrate over [0, 1]: the library's error estimate does not
    // rescale with the panel width, which stalls refinement on tiny panels.
    const double width = b - a;
    auto unit = [&](double s) { return width * fn(a + width * s); };
    double error = 0.0, l1 = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        unit, 0.0, 1.0, 12, tol_, &error, &l1);
    if (!std::isfinite(v)) throw NumericError("interior_volume: non-finite integrand");
    error_ += error;
    l1_ += l1;
    return v;
  }

  // ∫_0^U with panels refined geometrically towards 0.
  template <class F>
  double from_zero(F fn, double upper) {
    double total = 0.0, hi = upper;
    for (int j = 0; j < kPanelDecades; ++j) {
      const double lo = hi * 0.1;
      total += (*this)(fn, lo, hi);
      hi = lo;
    }
    return total + (*this)(fn, 0.0, hi);
  }

  void check() const {
    if (error_ > 1e-6 * l1_) throw NumericError("interior_volume: quadrature did not converge");
  }

 private:
  double tol_;
  double error_ = 0.0;
  double l1_ = 0.0;
};

void check_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string("BlackHoleSpec: ") + name + " must be positive");
  }
}

}  // namespace

BlackHoleSpec::BlackHoleSpec(unsigned d, double mu, double l_ads, double g_newton)
    : d_(d), mu_(mu), l_(l_ads), g_(g_newton) {
  if (d < 4) throw std::invalid_argument("BlackHoleSpec: d must be at least 4");
  check_positive(mu, "mu");
  check_positive(l_ads, "l_ads");
  check_positive(g_newton, "G");
}

BlackHoleSpec BlackHoleSpec::from_mu(unsigned d, double mu, double l_ads, double g_newton) {
  return {d, mu, l_ads, g_newton};
}

BlackHoleSpec BlackHoleSpec::from_mass(unsigned d, double mass, double l_ads, double g_newton) {
  check_positive(mass, "mass");
  check_positive(g_newton, "G");
  if (d < 4) throw std::invalid_argument("BlackHoleSpec: d must be at least 4");
  const double half = 0.5 * (d - 1.0);
  const double omega = 2.0 * std::pow(kPi, half) / std::tgamma(half);
  return {d, 16.0 * kPi * g_newton * mass / ((d - 2.0) * omega), l_ads, g_newton};
}

double BlackHoleSpec::omega() const {
  const double half = 0.5 * (d_ - 1.0);
  return 2.0 * std::pow(kPi, half) / std::tgamma(half);
}

double BlackHoleSpec::mass() const { return (d_ - 2.0) * omega() * mu_ / (16.0 * kPi * g_); }

double blackening(const BlackHoleSpec& spec, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("blackening: r must be positive");
  const double l = spec.l_ads();
  return 1.0 - spec.mu() / std::pow(r, static_cast<int>(spec.d()) - 3) + r * r / (l * l);
}

double blackening_derivative(const BlackHoleSpec& spec, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("blackening_derivative: r must be positive");
  const int d = static_cast<int>(spec.d());
  const double l = spec.l_ads();
  return (d - 3) * spec.mu() / std::pow(r, d - 2) + 2.0 * r / (l * l);
}

double horizon(const BlackHoleSpec& spec) {
  const int d = static_cast<int>(spec.d());
  const double mu = spec.mu(), l2 = spec.l_ads() * spec.l_ads();
  // r^{d−3} + r^{d−1}/l² − μ is increasing and each term alone reaches μ by `hi`.
  auto g = [&](double r) { return std::pow(r, d - 3) + std::pow(r, d - 1) / l2 - mu; };
  const double hi = std::max(std::pow(mu, 1.0 / (d - 3)), std::pow(mu * l2, 1.0 / (d - 1)));
  return bracketed_root(g, 0.0, hi, "horizon");
}

double hawking_temperature(const BlackHoleSpec& spec) {
  return blackening_derivative(spec, horizon(spec)) / (4.0 * kPi);
}

double bekenstein_entropy(const BlackHoleSpec& spec) {
  return spec.omega() * std::pow(horizon(spec), static_cast<int>(spec.d()) - 2) /
         (4.0 * spec.g_newton());
}

CriticalSurface critical_surface(const BlackHoleSpec& spec) {
  const int d = static_cast<int>(spec.d());
  const double mu = spec.mu(), l2 = spec.l_ads() * spec.l_ads();
  const double rh = horizon(spec);
  // Stationarity of r^{2d−4}|f|, divided by r^{d−2}.
  auto p = [&](double r) {
    return (2 * d - 4) * std::pow(r, d - 3) - mu * (d - 1) + (2 * d - 2) * std::pow(r, d - 1) / l2;
  };
  const double rm = bracketed_root(p, 0.0, rh, "critical_surface");
  const Warp w(spec);
  const double hm = w.h(rm);
  if (!(hm < 0.0)) throw NumericError("critical_surface: maximiser is not inside the horizon");
  const double ec = std::sqrt(-hm);
  return {rm, ec, spec.omega() * ec};
}

double critical_radius_estimate(const BlackHoleSpec& spec) {
  return std::pow((spec.d() - 3.0) * spec.mu() / 2.0, 1.0 / (spec.d() - 1.0));
}

double default_cutoff(const BlackHoleSpec& spec) {
  return 1e3 * std::max(horizon(spec), spec.l_ads());
}

VolumeCurvePoint interior_volume(const BlackHoleSpec& spec, double e, double r_cut,
                                 double tolerance) {
  const CriticalSurface cs = critical_surface(spec);
  const double rh = horizon(spec);
  if (!(e >= 0.0) || !(e < cs.e_c)) {
    throw std::invalid_argument("interior_volume: E must lie in [0, E_c)");
  }
  if (r_cut <= 0.0) r_cut = default_cutoff(spec);
  if (!(r_cut > rh)) throw std::invalid_argument("interior_volume: r_cut must exceed r_h");
  if (e == 0.0) return {0.0, rh, 0.0, 0.0};

  const Warp w(spec);
  const int n = 2 * w.d - 4;
  const double e2 = e * e;
  auto big_f = [&](double r) { return e2 + w.h(r); };
  const double rt = bracketed_root(big_f, cs.r_m, rh, "interior_volume");

  // r = r_turn + u² removes the inverse square root at the turning point.
  const double u_max = std::sqrt(rh - rt);
  auto vol = [&](double u) {
    const double r = rt + u * u;
    return 2.0 * std::pow(r, n) / std::sqrt(w.q(r, rt));
  };
  Quadrature quad_v(tolerance), quad_t(tolerance);
  const double volume = 2.0 * quad_v.from_zero(vol, u_max);
  quad_v.check();

  // dt/dr = −E / (f √F), principal value across r_h.
  const double delta = 0.5 * std::min(rh - rt, r_cut - rh);
  auto inside = [&](double u) {
    const double r = rt + u * u;
    return -2.0 * e / (w.f(r) * std::sqrt(w.q(r, rt)));
  };
  double t_r = quad_t.from_zero(inside, std::sqrt(rh - delta - rt));

  // f = (r − r_h) Q(r, r_h) / r^n, so the symmetric pair g(r_h+x) + g(r_h−x)
  // is −(E/x)[A(r_h+x) − A(r_h−x)] with A smooth at the horizon.
  auto a_fn = [&](double r) { return std::pow(r, n) / (w.q(r, rh) * std::sqrt(big_f(r))); };
  auto window = [&](double x) { return -(e / x) * (a_fn(rh + x) - a_fn(rh - x)); };
  t_r += quad_t(window, 0.0, delta);

  auto outside = [&](double r) { return -e / (w.f(r) * std::sqrt(big_f(r))); };
  double lo = rh + delta, width = delta;
  while (lo < r_cut) {
    const double hi = std::min(r_cut, lo + width);
    t_r += quad_t(outside, lo, hi);
    lo = hi;
    width *= 2.0;
  }
  quad_t.check();
  return {e, rt, volume, 2.0 * t_r};
}

std::vector<VolumeCurvePoint> volume_curve(const BlackHoleSpec& spec, std::size_t points,
                                           double min_gap) {
  if (points < 2) throw std::invalid_argument("volume_curve: need at least 2 points");
  if (!(min_gap > 0.0 && min_gap < 0.1)) {
    throw std::invalid_argument("volume_curve: min_gap must lie in (0, 0.1)");
  }
  const double ec = critical_surface(spec).e_c;
  const double r_cut = default_cutoff(spec);
  const double span = std::log10(min_gap) + 1.0;
  std::vector<VolumeCurvePoint> curve;
  curve.reserve(points);
  for (std::size_t j = 0; j < points; ++j) {
    const double gap = std::pow(10.0, -1.0 + span * static_cast<double>(j) / (points - 1.0));
    curve.push_back(interior_volume(spec, ec * (1.0 - gap), r_cut));
  }
  return curve;
}

double late_time_slope(const BlackHoleSpec& spec, const std::vector<VolumeCurvePoint>& curve) {
  const double ec = critical_surface(spec).e_c;
  double min_gap = 1.0;
  for (const auto& p : curve) min_gap = std::min(min_gap, 1.0 - p.e / ec);
  std::vector<const VolumeCurvePoint*> chosen;
  for (const auto& p : curve) {
    if (1.0 - p.e / ec <= 10.0 * min_gap * (1.0 + 1e-6)) chosen.push_back(&p);
  }
  if (chosen.size() < 2) throw std::invalid_argument("late_time_slope: fewer than 2 points in the last decade");
  const double omega = spec.omega();
  double mx = 0, my = 0;
  for (auto* p : chosen) {
    mx += p->boundary_time_sum;
    my += omega * p->interior_volume_per_sphere;
  }
  mx /= chosen.size();
  my /= chosen.size();
  double sxy = 0, sxx = 0;
  for (auto* p : chosen) {
    const double dx = p->boundary_time_sum - mx;
    sxy += dx * (omega * p->interior_volume_per_sphere - my);
    sxx += dx * dx;
  }
  if (!(sxx > 0.0)) throw NumericError("late_time_slope: boundary times do not vary");
  return sxy / sxx;
}

double log_divergence_coefficient(const BlackHoleSpec& spec) {
  const Warp w(spec);
  const double rm = critical_surface(spec).r_m;
  return -std::pow(rm, 2 * w.d - 4) / std::sqrt(0.5 * w.h2(rm));
}

CvRate cv_rate(const BlackHoleSpec& spec) {
  const double dc_dt = critical_surface(spec).v_d / (spec.l_ads() * spec.g_newton());
  const double st = bekenstein_entropy(spec) * hawking_temperature(spec);
  return {dc_dt, st, dc_dt / st};
}

WdwRate wdw_action_rate(const BlackHoleSpec& spec) {
  const int d = static_cast<int>(spec.d());
  const double omega = spec.omega(), g = spec.g_newton(), l2 = spec.l_ads() * spec.l_ads();
  const double rh = horizon(spec), m = spec.mass();
  const double bulk = -std::pow(rh, d - 1) * omega / (8.0 * kPi * g * l2);
  auto bracket = [&](double r) {
    return -((d - 1.0) / (d - 2.0)) * m +
           std::pow(r, d - 3) * omega / (8.0 * kPi * g) * ((d - 2.0) + (d - 1.0) * r * r / l2);
  };
  const double boundary = bracket(rh) - bracket(0.0);
  return {bulk, boundary, bulk + boundary};
}

LloydCheck lloyd_bound(const BlackHoleSpec& spec, double hbar) {
  if (!(hbar > 0.0)) throw std::invalid_argument("lloyd_bound: hbar must be positive");
  const double bound = 2.0 * spec.mass() / (kPi * hbar);
  const double ca = wdw_action_rate(spec).total / (kPi * hbar);
  return {bound, ca, ca / bound};
}

}  // namespace cxlab
