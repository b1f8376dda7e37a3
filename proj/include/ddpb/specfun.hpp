#ifndef DDPB_SPECFUN_HPP
#define DDPB_SPECFUN_HPP

#include <span>
#include <utility>
#include <Eigen/Dense>

namespace ddpb::specfun {

using Vec3 = Eigen::Vector3d;

// Degree/order pair for a real spherical harmonic; flat index p = l^2 + l + m.
struct HarmonicIndex {
  int l = 0;
  int m = 0;
};

inline int flat_index(int l, int m) { return l * l + l + m; }
inline int flat_index(HarmonicIndex idx) { return flat_index(idx.l, idx.m); }
inline int n_modes(int lmax) { return (lmax + 1) * (lmax + 1); }

// Real orthonormal spherical harmonics on the area-4pi sphere, without the
// Condon-Shortley phase: Y_00 = 1/(2 sqrt(pi)), Y_1^{+1} ~ +x, Y_1^{-1} ~ +y.
// Writes all (lmax+1)^2 values in flat-index order. |s| must be 1 within 1e-12.
void sph_harm_all(int lmax, const Vec3& s, std::span<double> y);

// Values plus surface-gradient components: grad_S Y = dth * theta_hat +
// dphi_sin * phi_hat, with dphi_sin = (1/sin th) dY/dphi evaluated through a
// pole-safe recurrence. The local frame at the poles uses phi = 0.
void sph_harm_grad_all(int lmax, const Vec3& s, std::span<double> y,
                       std::span<double> dth, std::span<double> dphi_sin);

double sph_harm(HarmonicIndex idx, const Vec3& s);

// Legendre polynomial L_k(t) and derivative on [-1,1].
std::pair<double, double> legendre(int k, double t);

// Tables L_k, L_k', L_k'', L_k''' for k = 0..kmax at one point.
void legendre_all(int kmax, double t, std::span<double> p, std::span<double> dp,
                  std::span<double> d2p, std::span<double> d3p);

// Modified spherical Bessel functions.
// Conventions used throughout: i_l(x) = sqrt(pi/(2x)) I_{l+1/2}(x), so
// i_0(x) = sinh(x)/x; second kind seeded by k_0(x) = exp(-x)/x (no pi/2
// factor) with upward recurrence. Derivatives are w.r.t. the argument.
// Wronskian under these conventions: i_l(x) k_l'(x) - i_l'(x) k_l(x) = -1/x^2.

// (value, derivative); x in [0, ~700). x = 0 returns the analytic limits
// i_0 = 1, i_{l>0} = 0 (derivative limit likewise). Larger x overflows the
// unscaled value; use the scaled variants for ratios.
std::pair<double, double> bessel_i(int l, double x);

// (value, derivative) for x > 0; throws std::domain_error for x <= 0.
std::pair<double, double> bessel_k(int l, double x);

// exp(-x)-scaled i_l and derivative d/dx[i_l](x) * exp(-x); stable for any
// x >= 0. Fills l = 0..lmax.
void bessel_i_scaled_all(int lmax, double x, std::span<double> val,
                         std::span<double> deriv);

// exp(+x)-scaled k_l and derivative, x > 0.
void bessel_k_scaled_all(int lmax, double x, std::span<double> val,
                         std::span<double> deriv);

// i_l(x_num)/i_l(x_den) for 0 <= x_num <= x_den; never overflows.
double bessel_i_ratio(int l, double x_num, double x_den);

// k_l(x_num)/k_l(x_den) for x_num >= x_den > 0 (decaying direction).
double bessel_k_ratio(int l, double x_num, double x_den);

// i_l(kappa r)/i_l(kappa) for r in [0,1]; degenerates to r^l as kappa -> 0.
double hsp_radial_ratio(int l, double kappa_scaled, double r);

// x * i_l'(x)/i_l(x), with the analytic limit l as x -> 0. Multiplying by
// 1/R turns it into the physical log-derivative of i_l(kappa r) at r = R.
double bessel_i_logderiv(int l, double x);

// Radial basis index: Legendre degree i >= 1 on the annulus [delta, 1].
struct RadialBasisIndex {
  int i = 1;
  double delta = 0.0;
};

// rho_i(r) = (1-r) L_i'(2(r-delta)/(1-delta) - 1); vanishes at r = 1.
// (value, derivative); r must lie in [delta, 1].
std::pair<double, double> radial_basis(RadialBasisIndex idx, double r);

// Per-sphere radial basis table helper: values/derivatives of rho_1..rho_n.
class RadialBasis {
 public:
  RadialBasis(int n, double delta);

  int size() const { return n_; }
  double delta() const { return delta_; }

  // val/der spans of length n; entry i-1 holds rho_i.
  void eval(double r, std::span<double> val, std::span<double> der) const;
  // Second derivatives as well (used by manufactured-solution oracles).
  void eval2(double r, std::span<double> val, std::span<double> der,
             std::span<double> der2) const;

 private:
  int n_;
  double delta_;
};

}  // namespace ddpb::specfun

#endif
