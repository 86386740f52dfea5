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

#pragma once

#include <cstddef>
#include <vector>

namespace cxlab {

/// Neutral static AdS-Schwarzschild black hole in d bulk dimensions with
/// f(r) = 1 − μ/r^{d−3} + r²/l².
class BlackHoleSpec {
 public:
  static BlackHoleSpec from_mu(unsigned d, double mu, double l_ads = 1.0, double g_newton = 1.0);
  static BlackHoleSpec from_mass(unsigned d, double mass, double l_ads = 1.0,
                                 double g_newton = 1.0);

  unsigned d() const { return d_; }
  double mu() const { return mu_; }
  double l_ads() const { return l_; }
  double g_newton() const { return g_; }
  /// Volume of the unit (d−2)-sphere, 2π^{(d−1)/2} / Γ((d−1)/2).
  double omega() const;
  /// M = (d−2) Ω μ / (16πG).
  double mass() const;

 private:
  BlackHoleSpec(unsigned d, double mu, double l_ads, double g_newton);

  unsigned d_;
  double mu_;
  double l_;
  double g_;
};

/// Throws std::invalid_argument for r <= 0.
double blackening(const BlackHoleSpec& spec, double r);
double blackening_derivative(const BlackHoleSpec& spec, double r);

/// Unique positive root of f. Throws NumericError if bracketing fails.
double horizon(const BlackHoleSpec& spec);
/// f′(r_h) / 4π.
double hawking_temperature(const BlackHoleSpec& spec);
/// Ω r_h^{d−2} / 4G.
double bekenstein_entropy(const BlackHoleSpec& spec);

struct CriticalSurface {
  double r_m;       // maximiser of r^{d−2}√|f(r)| inside the horizon
  double e_c;       // r_m^{d−2}√|f(r_m)|, the per-unit-sphere critical energy
  double v_d;       // Ω · e_c, the late-time volume growth rate
};

CriticalSurface critical_surface(const BlackHoleSpec& spec);

/// ((d−3)μ/2)^{1/(d−1)}, a high-temperature estimate for r_m that is only
/// reported for comparison.
double critical_radius_estimate(const BlackHoleSpec& spec);

struct VolumeCurvePoint {
  double e;
  double r_turn;
  double interior_volume_per_sphere;
  double boundary_time_sum;
};

/// Default cutoff radius 10³·max(r_h, l).
double default_cutoff(const BlackHoleSpec& spec);

/// Maximal slice with conserved energy E ∈ [0, E_c). Volume is
/// 2∫_{r_turn}^{r_h} r^{2(d−2)} / √(E² + r^{2(d−2)} f) dr; the boundary time
/// t_l + t_r = 2 t_r uses the principal value across the horizon pole.
/// r_cut <= 0 selects default_cutoff. Throws std::invalid_argument if E is
/// out of range and NumericError if a quadrature fails.
VolumeCurvePoint interior_volume(const BlackHoleSpec& spec, double e, double r_cut = 0.0,
                                 double tolerance = 1e-11);

/// E_j = E_c (1 − δ_j) with δ_j geometric from 1e−1 down to min_gap.
std::vector<VolumeCurvePoint> volume_curve(const BlackHoleSpec& spec, std::size_t points,
                                           double min_gap = 1e-10);

/// Least-squares slope of Ω·V against t_l + t_r over the points whose gap
/// E_c − E lies within a factor 10 of the smallest gap.
double late_time_slope(const BlackHoleSpec& spec, const std::vector<VolumeCurvePoint>& curve);

/// Coefficient a in V(E) ≈ a·ln(E_c − E) + const near E_c.
double log_divergence_coefficient(const BlackHoleSpec& spec);

struct CvRate {
  double dc_dt;      // V_d / (l G)
  double s_times_t;
  double ratio;
};

CvRate cv_rate(const BlackHoleSpec& spec);

struct WdwRate {
  double bulk;
  double boundary;
  double total;
};

/// Late-time rate of the Wheeler-DeWitt patch action.
WdwRate wdw_action_rate(const BlackHoleSpec& spec);

struct LloydCheck {
  double bound;       // 2M / (πℏ)
  double ca_rate;     // dA/dt / (πℏ)
  double saturation;  // ca_rate / bound
};

LloydCheck lloyd_bound(const BlackHoleSpec& spec, double hbar = 1.0);

}  // namespace cxlab
