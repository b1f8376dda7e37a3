#include "ddpb/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ddpb::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_unit(const Vec3& s) {
  if (std::abs(s.norm() - 1.0) > 1e-12)
    throw std::domain_error("sph_harm: direction vector is not unit length");
}

// Normalized associated Legendre A_l^m = N_lm P_l^m(cos th) with the
// Condon-Shortley phase kept internally; N_lm = sqrt((2l+1)/(4pi) (l-m)!/(l+m)!).
// Stable (m,m) -> (m+1,m) -> upward-l recurrence.
void assoc_legendre_norm(int lmax, double cth, double sth, std::vector<double>& a) {
  // storage: a[l*(l+1)/2 + m] packed for m >= 0
  a.assign((lmax + 1) * (lmax + 2) / 2, 0.0);
  auto idx = [](int l, int m) { return l * (l + 1) / 2 + m; };
  a[idx(0, 0)] = std::sqrt(1.0 / (4.0 * kPi));
  for (int m = 1; m <= lmax; ++m)
    a[idx(m, m)] = -a[idx(m - 1, m - 1)] * sth *
                   std::sqrt((2.0 * m + 1.0) / (2.0 * m));
  for (int m = 0; m < lmax; ++m)
    a[idx(m + 1, m)] = a[idx(m, m)] * cth * std::sqrt(2.0 * m + 3.0);
  for (int m = 0; m <= lmax; ++m)
    for (int l = m + 2; l <= lmax; ++l) {
      const double alm = std::sqrt((4.0 * l * l - 1.0) /
                                   (double(l) * l - double(m) * m));
      const double blm = -std::sqrt(((2.0 * l + 1.0) * (l - 1.0 + m) * (l - 1.0 - m)) /
                                    ((2.0 * l - 3.0) * (double(l) * l - double(m) * m)));
      a[idx(l, m)] = alm * cth * a[idx(l - 1, m)] + blm * a[idx(l - 2, m)];
    }
}

struct Angles {
  double cth, sth, cph, sph;
};

Angles angles_of(const Vec3& s) {
  Angles g;
  g.cth = std::clamp(s.z(), -1.0, 1.0);
  g.sth = std::hypot(s.x(), s.y());
  if (g.sth > 1e-300) {
    g.cph = s.x() / g.sth;
    g.sph = s.y() / g.sth;
  } else {  // pole: fix the frame at phi = 0
    g.cph = 1.0;
    g.sph = 0.0;
  }
  return g;
}

}  // namespace

void sph_harm_all(int lmax, const Vec3& s, std::span<double> y) {
  check_unit(s);
  const Angles g = angles_of(s);
  static thread_local std::vector<double> a;
  assoc_legendre_norm(lmax, g.cth, g.sth, a);
  auto idx = [](int l, int m) { return l * (l + 1) / 2 + m; };
  const double sqrt2 = std::sqrt(2.0);
  double cm = 1.0, sm = 0.0;  // cos(m phi), sin(m phi)
  for (int m = 0; m <= lmax; ++m) {
    if (m > 0) {
      const double c = cm * g.cph - sm * g.sph;
      sm = sm * g.cph + cm * g.sph;
      cm = c;
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;  // strip CS phase
    for (int l = m; l <= lmax; ++l) {
      const double alm = a[idx(l, m)];
      if (m == 0) {
        y[flat_index(l, 0)] = alm;
      } else {
        y[flat_index(l, m)] = sign * sqrt2 * alm * cm;
        y[flat_index(l, -m)] = sign * sqrt2 * alm * sm;
      }
    }
  }
}

void sph_harm_grad_all(int lmax, const Vec3& s, std::span<double> y,
                       std::span<double> dth, std::span<double> dphi_sin) {
  check_unit(s);
  const Angles g = angles_of(s);
  static thread_local std::vector<double> a;
  assoc_legendre_norm(lmax, g.cth, g.sth, a);
  auto idx = [](int l, int m) { return l * (l + 1) / 2 + m; };
  auto at = [&](int l, int m) -> double {
    return (m > l || m < 0) ? 0.0 : a[idx(l, m)];
  };

  const double sqrt2 = std::sqrt(2.0);
  double cm = 1.0, sm = 0.0;
  for (int m = 0; m <= lmax; ++m) {
    if (m > 0) {
      const double c = cm * g.cph - sm * g.sph;
      sm = sm * g.cph + cm * g.sph;
      cm = c;
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    for (int l = m; l <= lmax; ++l) {
      const double alm = a[idx(l, m)];
      // d/dth of the normalized CS-phase function
      double da;
      if (m == 0) {
        da = std::sqrt(double(l) * (l + 1.0)) * at(l, 1);
      } else {
        da = 0.5 * (std::sqrt((l - m) * (l + m + 1.0)) * at(l, m + 1) -
                    std::sqrt((l + m) * (l - m + 1.0)) * at(l, m - 1));
      }
      // m A_l^m / sin th, computed without dividing by sin th
      double ms = 0.0;
      if (m >= 1) {
        ms = -0.5 * std::sqrt((2.0 * l + 1.0) / (2.0 * l - 1.0)) *
             (std::sqrt((l - m) * (l - m - 1.0)) * at(l - 1, m + 1) +
              std::sqrt((l + m) * (l + m - 1.0)) * at(l - 1, m - 1));
      }
      if (m == 0) {
        y[flat_index(l, 0)] = alm;
        dth[flat_index(l, 0)] = da;
        dphi_sin[flat_index(l, 0)] = 0.0;
      } else {
        const double f = sign * sqrt2;
        y[flat_index(l, m)] = f * alm * cm;
        y[flat_index(l, -m)] = f * alm * sm;
        dth[flat_index(l, m)] = f * da * cm;
        dth[flat_index(l, -m)] = f * da * sm;
        dphi_sin[flat_index(l, m)] = -f * ms * sm;
        dphi_sin[flat_index(l, -m)] = f * ms * cm;
      }
    }
  }
}

double sph_harm(HarmonicIndex idx, const Vec3& s) {
  if (idx.l < 0 || std::abs(idx.m) > idx.l)
    throw std::domain_error("sph_harm: |m| must not exceed l");
  std::vector<double> y(n_modes(idx.l));
  sph_harm_all(idx.l, s, y);
  return y[flat_index(idx)];
}

std::pair<double, double> legendre(int k, double t) {
  if (t < -1.0 - 1e-12 || t > 1.0 + 1e-12)
    throw std::domain_error("legendre: t outside [-1,1]");
  double pm1 = 1.0, p = t, dm1 = 0.0, d = 1.0;
  if (k == 0) return {1.0, 0.0};
  for (int j = 1; j < k; ++j) {
    const double pj = ((2.0 * j + 1.0) * t * p - j * pm1) / (j + 1.0);
    const double dj = dm1 + (2.0 * j + 1.0) * p;
    pm1 = p;
    p = pj;
    dm1 = d;
    d = dj;
  }
  return {p, d};
}

void legendre_all(int kmax, double t, std::span<double> p, std::span<double> dp,
                  std::span<double> d2p, std::span<double> d3p) {
  p[0] = 1.0;
  dp[0] = 0.0;
  d2p[0] = 0.0;
  d3p[0] = 0.0;
  if (kmax == 0) return;
  p[1] = t;
  dp[1] = 1.0;
  d2p[1] = 0.0;
  d3p[1] = 0.0;
  for (int k = 1; k < kmax; ++k) {
    p[k + 1] = ((2.0 * k + 1.0) * t * p[k] - k * p[k - 1]) / (k + 1.0);
    dp[k + 1] = dp[k - 1] + (2.0 * k + 1.0) * p[k];
    d2p[k + 1] = d2p[k - 1] + (2.0 * k + 1.0) * dp[k];
    d3p[k + 1] = d3p[k - 1] + (2.0 * k + 1.0) * d2p[k];
  }
}

namespace {

// Series for i_l(x), unscaled; converges quickly for x <= 2.
double bessel_i_series(int l, double x) {
  double lead = 1.0;
  for (int j = 1; j <= l; ++j) lead *= x / (2.0 * j + 1.0);
  // lead = x^l/(2l+1)!!
  double term = 1.0, sum = 1.0;
  const double x2 = 0.5 * x * x;
  for (int k = 1; k < 60; ++k) {
    term *= x2 / (k * (2.0 * l + 2.0 * k + 1.0));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return lead * sum;
}

}  // namespace

void bessel_i_scaled_all(int lmax, double x, std::span<double> val,
                         std::span<double> deriv) {
  if (x < 0.0) throw std::domain_error("bessel_i: x must be nonnegative");
  if (x == 0.0) {
    for (int l = 0; l <= lmax; ++l) val[l] = (l == 0) ? 1.0 : 0.0;
    for (int l = 0; l <= lmax; ++l)
      deriv[l] = (l == 1) ? 1.0 / 3.0 : 0.0;
    return;
  }
  if (x <= 2.0) {
    const double sc = std::exp(-x);
    for (int l = 0; l <= lmax; ++l) val[l] = sc * bessel_i_series(l, x);
    // pad one extra for the derivative relation
    const double next = sc * bessel_i_series(lmax + 1, x);
    deriv[0] = (lmax >= 1) ? val[1] : sc * bessel_i_series(1, x);
    for (int l = 1; l <= lmax; ++l) {
      const double ilp1 = (l + 1 <= lmax) ? val[l + 1] : next;
      // i_l' = i_{l+1} + l/x i_l  (equivalent down-relation, stable here)
      deriv[l] = ilp1 + (l / x) * val[l];
    }
    return;
  }
  // Miller downward recurrence, normalized against the closed-form i_0.
  // The start index must clear the turning point l ~ x before the minimal
  // solution dominates going down.
  const int lstart = lmax + 20 + int(std::ceil(x));
  std::vector<double> f(lstart + 2, 0.0);
  f[lstart + 1] = 0.0;
  f[lstart] = 1e-280;
  for (int l = lstart; l >= 1; --l) {
    f[l - 1] = f[l + 1] + (2.0 * l + 1.0) / x * f[l];
    if (std::abs(f[l - 1]) > 1e260) {
      for (int j = l - 1; j <= lstart + 1; ++j) f[j] *= 1e-260;
    }
  }
  const double i0s = (1.0 - std::exp(-2.0 * x)) / (2.0 * x);  // e^{-x} i_0
  const double scale = i0s / f[0];
  for (int l = 0; l <= lmax; ++l) val[l] = f[l] * scale;
  deriv[0] = val[1 <= lmax ? 1 : 0];
  if (lmax < 1) deriv[0] = f[1] * scale;
  for (int l = 1; l <= lmax; ++l)
    deriv[l] = val[l - 1] - (l + 1.0) / x * val[l];
}

void bessel_k_scaled_all(int lmax, double x, std::span<double> val,
                         std::span<double> deriv) {
  if (x <= 0.0) throw std::domain_error("bessel_k: x must be positive");
  std::vector<double> k(std::max(lmax + 1, 2));
  k[0] = 1.0 / x;
  if (lmax >= 1) k[1] = 1.0 / x + 1.0 / (x * x);
  for (int l = 1; l < lmax; ++l)
    k[l + 1] = k[l - 1] + (2.0 * l + 1.0) / x * k[l];
  for (int l = 0; l <= lmax; ++l) val[l] = k[l];
  deriv[0] = -(1.0 / x + 1.0 / (x * x));
  for (int l = 1; l <= lmax; ++l)
    deriv[l] = -k[l - 1] - (l + 1.0) / x * k[l];
}

std::pair<double, double> bessel_i(int l, double x) {
  if (x > 700.0)
    throw std::overflow_error(
        "bessel_i: argument too large for unscaled evaluation; use the "
        "scaled/ratio interface");
  std::vector<double> v(l + 1), d(l + 1);
  bessel_i_scaled_all(l, x, v, d);
  const double ex = std::exp(x);
  return {v[l] * ex, d[l] * ex};
}

std::pair<double, double> bessel_k(int l, double x) {
  if (x <= 0.0) throw std::domain_error("bessel_k: x must be positive");
  std::vector<double> v(l + 1), d(l + 1);
  bessel_k_scaled_all(l, x, v, d);
  const double ex = std::exp(-x);
  return {v[l] * ex, d[l] * ex};
}

double bessel_i_ratio(int l, double x_num, double x_den) {
  if (x_num < 0.0 || x_den < 0.0)
    throw std::domain_error("bessel_i_ratio: arguments must be nonnegative");
  if (x_den == 0.0) return (l == 0) ? 1.0 : (x_num == 0.0 ? 1.0 : 0.0);
  if (x_den < 1e-6) {
    // leading-order series: (xn/xd)^l (1 + (xn^2-xd^2)/(2(2l+3)) + ...)
    const double r = x_num / x_den;
    double p = 1.0;
    for (int j = 0; j < l; ++j) p *= r;
    return p * (1.0 + (x_num * x_num - x_den * x_den) / (2.0 * (2.0 * l + 3.0)));
  }
  std::vector<double> vn(l + 1), vd(l + 1), tmp(l + 1);
  bessel_i_scaled_all(l, x_num, vn, tmp);
  bessel_i_scaled_all(l, x_den, vd, tmp);
  return vn[l] / vd[l] * std::exp(x_num - x_den);
}

double bessel_k_ratio(int l, double x_num, double x_den) {
  if (x_num <= 0.0 || x_den <= 0.0)
    throw std::domain_error("bessel_k_ratio: arguments must be positive");
  std::vector<double> vn(l + 1), vd(l + 1), tmp(l + 1);
  bessel_k_scaled_all(l, x_num, vn, tmp);
  bessel_k_scaled_all(l, x_den, vd, tmp);
  return vn[l] / vd[l] * std::exp(x_den - x_num);
}

double hsp_radial_ratio(int l, double kappa_scaled, double r) {
  if (kappa_scaled < 1e-8) {
    double p = 1.0;
    for (int j = 0; j < l; ++j) p *= r;
    return p;
  }
  return bessel_i_ratio(l, kappa_scaled * r, kappa_scaled);
}

double bessel_i_logderiv(int l, double x) {
  if (x < 1e-4) return l + x * x / (2.0 * l + 3.0);
  std::vector<double> v(l + 1), d(l + 1);
  bessel_i_scaled_all(l, x, v, d);
  return x * d[l] / v[l];
}

std::pair<double, double> radial_basis(RadialBasisIndex idx, double r) {
  RadialBasis basis(idx.i, idx.delta);
  std::vector<double> v(idx.i), d(idx.i);
  basis.eval(r, v, d);
  return {v[idx.i - 1], d[idx.i - 1]};
}

RadialBasis::RadialBasis(int n, double delta) : n_(n), delta_(delta) {
  if (n < 1) throw std::domain_error("RadialBasis: need at least one function");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("RadialBasis: delta must lie in (0,1)");
}

void RadialBasis::eval(double r, std::span<double> val, std::span<double> der) const {
  static thread_local std::vector<double> d2;
  d2.resize(n_);
  eval2(r, val, der, d2);
}

void RadialBasis::eval2(double r, std::span<double> val, std::span<double> der,
                        std::span<double> der2) const {
  if (r < delta_ - 1e-12 || r > 1.0 + 1e-12)
    throw std::domain_error("radial_basis: r outside [delta, 1]");
  const double sc = 2.0 / (1.0 - delta_);
  const double t = std::clamp(sc * (r - delta_) - 1.0, -1.0, 1.0);
  static thread_local std::vector<double> p, dp, d2p, d3p;
  p.resize(n_ + 1);
  dp.resize(n_ + 1);
  d2p.resize(n_ + 1);
  d3p.resize(n_ + 1);
  legendre_all(n_, t, p, dp, d2p, d3p);
  const double omr = 1.0 - r;
  for (int i = 1; i <= n_; ++i) {
    val[i - 1] = omr * dp[i];
    der[i - 1] = -dp[i] + omr * d2p[i] * sc;
    der2[i - 1] = -2.0 * d2p[i] * sc + omr * d3p[i] * sc * sc;
  }
}

}  // namespace ddpb::specfun
