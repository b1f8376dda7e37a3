#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ddpb/quad.hpp"
#include "ddpb/specfun.hpp"

using namespace ddpb;
using specfun::Vec3;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Independent series oracle for i_l(x), kept separate from the library path.
double i_series_oracle(int l, double x) {
  double lead = 1.0;
  for (int j = 1; j <= l; ++j) lead *= x / (2.0 * j + 1.0);
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= 0.5 * x * x / (k * (2.0 * l + 2.0 * k + 1.0));
    sum += term;
    if (term < 1e-20 * sum) break;
  }
  return lead * sum;
}

Vec3 random_unit(std::mt19937& rng) {
  std::normal_distribution<double> g;
  Vec3 v(g(rng), g(rng), g(rng));
  return v.normalized();
}

}  // namespace

TEST_CASE("spherical harmonics: closed-form anchor values") {
  Vec3 z(0, 0, 1);
  CHECK(specfun::sph_harm({0, 0}, Vec3(0.6, 0.8, 0.0)) ==
        doctest::Approx(1.0 / (2.0 * std::sqrt(kPi))).epsilon(1e-12));
  CHECK(specfun::sph_harm({1, 0}, z) ==
        doctest::Approx(std::sqrt(3.0 / (4.0 * kPi))).epsilon(1e-12));
  // sign convention: Y_1^{+1} positive along +x, Y_1^{-1} along +y
  CHECK(specfun::sph_harm({1, 1}, Vec3(1, 0, 0)) ==
        doctest::Approx(std::sqrt(3.0 / (4.0 * kPi))).epsilon(1e-12));
  CHECK(specfun::sph_harm({1, -1}, Vec3(0, 1, 0)) ==
        doctest::Approx(std::sqrt(3.0 / (4.0 * kPi))).epsilon(1e-12));
}

TEST_CASE("spherical harmonics: domain errors") {
  CHECK_THROWS_AS(specfun::sph_harm({1, 0}, Vec3(0, 0, 1.001)), std::domain_error);
  CHECK_THROWS_AS(specfun::sph_harm({1, 2}, Vec3(0, 0, 1)), std::domain_error);
}

TEST_CASE("Y_{1,0} x Y_{1,1} integrates to zero on the 26-point rule") {
  const auto& rule = quad::lebedev(26);
  double acc = 0.0;
  for (int n = 0; n < rule.size(); ++n)
    acc += rule.weights[n] * specfun::sph_harm({1, 0}, rule.points[n]) *
           specfun::sph_harm({1, 1}, rule.points[n]);
  CHECK(std::abs(acc) < 1e-12);
}

TEST_CASE("Lebedev orthonormality across every supported rule") {
  for (int npts : quad::lebedev_supported()) {
    const auto& rule = quad::lebedev(npts);
    const int lmax = rule.order / 2;  // all pairs l + l' <= order
    const int nlm = specfun::n_modes(lmax);
    Eigen::MatrixXd y(rule.size(), nlm);
    std::vector<double> buf(nlm);
    for (int n = 0; n < rule.size(); ++n) {
      specfun::sph_harm_all(lmax, rule.points[n], buf);
      for (int p = 0; p < nlm; ++p) y(n, p) = buf[p];
    }
    Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(rule.weights.data(), rule.size());
    Eigen::MatrixXd gram = y.transpose() * w.asDiagonal() * y;
    const double err = (gram - Eigen::MatrixXd::Identity(nlm, nlm)).cwiseAbs().maxCoeff();
    INFO("rule ", npts, " order ", rule.order, " max deviation ", err);
    CHECK(err < 1e-10);
  }
}

TEST_CASE("surface-gradient identity sum w grad_S Y . grad_S Y' = l(l+1) delta") {
  const auto& rule = quad::lebedev(86);
  const int lmax = 6;  // integrand degree <= 2 lmax + 2 <= rule order
  const int nlm = specfun::n_modes(lmax);
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(nlm, nlm);
  std::vector<double> y(nlm), dth(nlm), dph(nlm);
  for (int n = 0; n < rule.size(); ++n) {
    specfun::sph_harm_grad_all(lmax, rule.points[n], y, dth, dph);
    for (int p = 0; p < nlm; ++p)
      for (int q = 0; q < nlm; ++q)
        gram(p, q) += rule.weights[n] * (dth[p] * dth[q] + dph[p] * dph[q]);
  }
  for (int l = 0; l <= lmax; ++l)
    for (int m = -l; m <= l; ++m) {
      const int p = specfun::flat_index(l, m);
      for (int q = 0; q < nlm; ++q) {
        const double expect = (p == q) ? l * (l + 1.0) : 0.0;
        CHECK(gram(p, q) == doctest::Approx(expect).epsilon(1e-9).scale(1.0));
      }
    }
}

TEST_CASE("surface gradient matches finite differences in theta/phi") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uth(0.2, kPi - 0.2), uph(0.0, 2.0 * kPi);
  const int lmax = 8;
  const int nlm = specfun::n_modes(lmax);
  std::vector<double> y(nlm), dth(nlm), dph(nlm), yp(nlm), ym(nlm);
  auto dir = [](double th, double ph) {
    return Vec3(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
  };
  for (int trial = 0; trial < 10; ++trial) {
    const double th = uth(rng), ph = uph(rng), h = 1e-6;
    specfun::sph_harm_grad_all(lmax, dir(th, ph), y, dth, dph);
    specfun::sph_harm_all(lmax, dir(th + h, ph), yp);
    specfun::sph_harm_all(lmax, dir(th - h, ph), ym);
    for (int p = 0; p < nlm; ++p) {
      const double fd = (yp[p] - ym[p]) / (2.0 * h);
      CHECK(dth[p] == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
    }
    specfun::sph_harm_all(lmax, dir(th, ph + h), yp);
    specfun::sph_harm_all(lmax, dir(th, ph - h), ym);
    for (int p = 0; p < nlm; ++p) {
      const double fd = (yp[p] - ym[p]) / (2.0 * h) / std::sin(th);
      CHECK(dph[p] == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
    }
  }
}

TEST_CASE("modified spherical Bessel i: closed forms and series oracle") {
  auto [i0, di0] = specfun::bessel_i(0, 1.0);
  CHECK(i0 == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
  auto [i1, di1] = specfun::bessel_i(1, 1.0);
  CHECK(i1 == doctest::Approx(std::cosh(1.0) - std::sinh(1.0)).epsilon(1e-13));
  (void)di0;
  (void)di1;

  // ratio i_5(R/2)/i_5(R) against the independent series, monotone in l
  const double R = 2.0;
  double prev = 0.0;
  for (int l = 0; l <= 8; ++l) {
    const double ratio = specfun::bessel_i_ratio(l, 0.5 * R, R);
    const double oracle = i_series_oracle(l, 0.5 * R) / i_series_oracle(l, R);
    CHECK(ratio == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(ratio > 0.0);
    CHECK(ratio < 1.0);
    if (l > 0) CHECK(ratio < prev);  // decreasing toward (1/2)^l behavior
    prev = ratio;
  }
  for (int l = 0; l <= 10; ++l) {
    for (double x : {0.3, 1.0, 4.0, 15.0, 60.0}) {
      std::vector<double> v(l + 1), d(l + 1);
      specfun::bessel_i_scaled_all(l, x, v, d);
      CHECK(v[l] == doctest::Approx(i_series_oracle(l, x) * std::exp(-x)).epsilon(1e-11));
    }
  }
}

TEST_CASE("modified spherical Bessel k: convention and ratios") {
  auto [k0, dk0] = specfun::bessel_k(0, 1.0);
  CHECK(k0 == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(dk0 < 0.0);
  CHECK(specfun::bessel_k_ratio(0, 2.0, 1.0) ==
        doctest::Approx(std::exp(-1.0) / 2.0).epsilon(1e-14));
  CHECK_THROWS_AS(specfun::bessel_k(0, 0.0), std::domain_error);
  CHECK_THROWS_AS(specfun::bessel_k(2, -1.0), std::domain_error);
}

TEST_CASE("Bessel Wronskian, derivative signs, C_ik positivity") {
  for (double x : {0.25, 0.5, 1.0, 3.0, 10.0, 40.0}) {
    for (int l = 0; l <= 6; ++l) {
      auto [i, di] = specfun::bessel_i(l, x);
      auto [k, dk] = specfun::bessel_k(l, x);
      CHECK(di > 0.0);
      CHECK(dk < 0.0);
      CHECK(i * dk - di * k == doctest::Approx(-1.0 / (x * x)).epsilon(1e-10));
      const double cik = 1.0 / (di / i - dk / k);
      CHECK(cik > 0.0);
    }
  }
}

TEST_CASE("Bessel derivatives agree with central differences") {
  const double h = 1e-6;
  for (double x : {0.5, 1.3, 7.0}) {
    for (int l = 0; l <= 8; ++l) {
      auto [i, di] = specfun::bessel_i(l, x);
      auto [ip, dp_] = specfun::bessel_i(l, x + h);
      auto [im, dm_] = specfun::bessel_i(l, x - h);
      (void)i;
      (void)dp_;
      (void)dm_;
      CHECK(di == doctest::Approx((ip - im) / (2 * h)).epsilon(1e-5));
      auto [k, dk] = specfun::bessel_k(l, x);
      auto [kp, t1] = specfun::bessel_k(l, x + h);
      auto [km, t2] = specfun::bessel_k(l, x - h);
      (void)k;
      (void)t1;
      (void)t2;
      CHECK(dk == doctest::Approx((kp - km) / (2 * h)).epsilon(1e-5));
    }
  }
}

TEST_CASE("Bessel overflow guard and x=0 limits") {
  CHECK_THROWS_AS(specfun::bessel_i(0, 800.0), std::overflow_error);
  std::vector<double> v(4), d(4);
  specfun::bessel_i_scaled_all(3, 0.0, v, d);
  CHECK(v[0] == 1.0);
  CHECK(v[1] == 0.0);
  CHECK(v[3] == 0.0);
  // scaled ratio path stays finite far beyond the overflow threshold
  const double r = specfun::bessel_i_ratio(3, 900.0, 1000.0);
  CHECK(std::isfinite(r));
  CHECK(r > 0.0);
  CHECK(r < 1.0);
  CHECK(specfun::hsp_radial_ratio(2, 0.0, 0.5) == doctest::Approx(0.25));
  CHECK(specfun::bessel_i_logderiv(4, 1e-9) == doctest::Approx(4.0));
}

TEST_CASE("Legendre polynomials") {
  auto [l2, d2] = specfun::legendre(2, 0.5);
  CHECK(l2 == doctest::Approx(-0.125).epsilon(1e-14));
  CHECK(d2 == doctest::Approx(1.5).epsilon(1e-14));
  for (int k = 0; k <= 20; ++k) {
    auto [v, d] = specfun::legendre(k, 1.0);
    (void)d;
    CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  }
  // orthogonality of L_3 and L_4 under LGL(12)
  auto rule = quad::lgl(12);
  double acc = 0.0;
  for (int m = 0; m < rule.size(); ++m) {
    auto [a, da] = specfun::legendre(3, rule.nodes[m]);
    auto [b, db] = specfun::legendre(4, rule.nodes[m]);
    (void)da;
    (void)db;
    acc += rule.weights[m] * a * b;
  }
  CHECK(std::abs(acc) < 1e-12);
}

TEST_CASE("radial basis") {
  const double delta = 0.3;
  specfun::RadialBasis basis(6, delta);
  std::vector<double> v(6), d(6);
  basis.eval(1.0, v, d);
  for (int i = 0; i < 6; ++i) CHECK(v[i] == 0.0);
  basis.eval(delta, v, d);
  CHECK(v[0] == doctest::Approx(1.0 - delta).epsilon(1e-14));  // L_1' = 1

  // derivative at midpoint vs central difference
  const double r = 0.5 * (delta + 1.0), h = 1e-6;
  std::vector<double> vp(6), vm(6), tmp(6);
  basis.eval(r, v, d);
  basis.eval(r + h, vp, tmp);
  basis.eval(r - h, vm, tmp);
  for (int i = 0; i < 6; ++i)
    CHECK(d[i] == doctest::Approx((vp[i] - vm[i]) / (2 * h)).epsilon(1e-8));

  CHECK_THROWS_AS(basis.eval(0.1, v, d), std::domain_error);
  CHECK_THROWS_AS(basis.eval(1.2, v, d), std::domain_error);
  CHECK_THROWS_AS(specfun::RadialBasis(0, 0.5), std::domain_error);
}

TEST_CASE("second radial derivative consistent with finite differences") {
  specfun::RadialBasis basis(8, 0.25);
  std::vector<double> v(8), d(8), d2(8), vp(8), vm(8), t(8);
  const double r = 0.6, h = 1e-5;
  basis.eval2(r, v, d, d2);
  basis.eval(r + h, vp, t);
  basis.eval(r - h, vm, t);
  for (int i = 0; i < 8; ++i) {
    const double fd = (vp[i] - 2.0 * v[i] + vm[i]) / (h * h);
    CHECK(d2[i] == doctest::Approx(fd).epsilon(1e-4).scale(1.0));
  }
}

TEST_CASE("pure functions are usable from sampled random directions") {
  std::mt19937 rng(123);
  for (int t = 0; t < 20; ++t) {
    Vec3 s = random_unit(rng);
    std::vector<double> y(specfun::n_modes(10));
    specfun::sph_harm_all(10, s, y);
    for (double v : y) CHECK(std::isfinite(v));
  }
}
