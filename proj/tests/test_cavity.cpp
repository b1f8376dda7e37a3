#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ddpb/cavity.hpp"
#include "ddpb/quad.hpp"

using namespace ddpb;
using cavity::Atom;
using cavity::CavityParams;
using cavity::Vec3;

namespace {

cavity::CavityModel one_atom_companion() {
  CavityParams p;
  p.r_p = 0.3;
  p.a = 0.2;
  p.r_0 = 1.5;
  p.eps_s = 10.0;
  p.kappa = 1.0;
  p.beta = 1.0;
  return cavity::build_cavity({{Vec3(0, 0, 0), 1.0, 0.5}}, p);
}

}  // namespace

TEST_CASE("build_cavity: radii, ratios, neighbors") {
  auto model = one_atom_companion();
  CHECK(model.radius[0] == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(model.delta[0] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(model.neighbors[0].empty());

  CavityParams p;
  p.r_p = 0.5;
  p.r_0 = 0.0;
  auto far = cavity::build_cavity(
      {{Vec3(0, 0, 0), 0.0, 1.5}, {Vec3(10, 0, 0), 0.0, 1.5}}, p);
  CHECK(far.neighbors[0].empty());
  CHECK(far.neighbors[1].empty());

  auto close = cavity::build_cavity(
      {{Vec3(0, 0, 0), 0.0, 1.5}, {Vec3(1, 0, 0), 0.0, 1.5}}, p);
  CHECK(close.neighbors[0] == std::vector<int>{1});
  CHECK(close.neighbors[1] == std::vector<int>{0});
}

TEST_CASE("build_cavity: rejects bad input") {
  CavityParams p;
  p.r_p = 1.0;
  CHECK_THROWS_AS(cavity::build_cavity({}, p), std::invalid_argument);
  CHECK_THROWS_AS(
      cavity::build_cavity({{Vec3(0, 0, 0), 0.0, -1.0}}, p), std::invalid_argument);
  CHECK_THROWS_AS(
      cavity::build_cavity({{Vec3(0, 0, 0), 0.0, 1.0}, {Vec3(0, 0, 0), 0.0, 1.0}}, p),
      std::invalid_argument);
}

TEST_CASE("f_sas: single atom and overlapping pair") {
  CavityParams p;
  p.r_p = 1.4;
  p.a = 0.0;
  p.r_0 = 0.0;
  auto m1 = cavity::build_cavity({{Vec3(0, 0, 0), 0.0, 2.0}}, p);
  CHECK(cavity::f_sas(m1, Vec3(3.4, 0, 0)) == doctest::Approx(0.0).scale(1.0));
  CHECK(cavity::f_sas(m1, Vec3(0, 5.4, 0)) == doctest::Approx(2.0).epsilon(1e-14));

  auto m2 = cavity::build_cavity(
      {{Vec3(0, 0, 0), 0.0, 2.0}, {Vec3(3, 0, 0), 0.0, 2.0}}, p);
  const Vec3 lens(1.5, 0, 0);
  // min over the two per-ball signed distances = minus the larger depth
  CHECK(cavity::f_sas(m2, lens) ==
        doctest::Approx(-std::max(3.4 - 1.5, 3.4 - 1.5)).epsilon(1e-14));
}

TEST_CASE("switching function") {
  CHECK(cavity::switching_xi(0.0) == 0.0);
  CHECK(cavity::switching_xi(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cavity::switching_xi(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(cavity::switching_xi_deriv(0.0) == 0.0);
  CHECK(cavity::switching_xi_deriv(1.0) == doctest::Approx(0.0).scale(1.0));

  const double h = 1e-6;
  const double fd =
      (cavity::switching_xi(0.25 + h) - cavity::switching_xi(0.25 - h)) / (2 * h);
  CHECK(cavity::switching_xi_deriv(0.25) == doctest::Approx(fd).epsilon(1e-8));

  CHECK_THROWS_AS(cavity::switching_xi(-0.01), std::domain_error);
  CHECK_THROWS_AS(cavity::switching_xi(1.01), std::domain_error);

  double prev = -1.0;
  for (int i = 0; i <= 100; ++i) {
    const double v = cavity::switching_xi(i / 100.0);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("permittivity and ion exclusion anchor values") {
  auto model = one_atom_companion();
  const auto& p = model.params;

  CHECK(cavity::permittivity(model, Vec3(0, 0, 0)) == doctest::Approx(1.0));
  CHECK(cavity::ion_exclusion(model, Vec3(0, 0, 0)) == doctest::Approx(0.0));

  // place the sample where f_sas hits mid-layer; |x| = f + r_1 + r_p + a
  const Vec3 x_eps(0.0, 0.0, (-p.a - 0.5 * p.r_p) + 1.0);
  CHECK(cavity::permittivity(model, x_eps) ==
        doctest::Approx(0.5 * (1.0 + p.eps_s)).epsilon(1e-12));

  const Vec3 x_lam(0.0, 0.0, (-0.5 * p.r_p) + 1.0);
  CHECK(cavity::ion_exclusion(model, x_lam) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("epsilon is 1 and lambda is 0 on every vdW ball") {
  CavityParams p;
  p.r_p = 1.0;
  p.a = 0.5;
  p.r_0 = 2.0;
  p.eps_s = 80.0;
  auto model = cavity::build_cavity(
      {{Vec3(0, 0, 0), 0.3, 1.2}, {Vec3(2.0, 0.5, -0.3), -0.3, 1.6}}, p);
  std::mt19937 rng(11);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < model.size(); ++i)
    for (int t = 0; t < 200; ++t) {
      Vec3 dir(g(rng), g(rng), g(rng));
      dir.normalize();
      const Vec3 x = model.atoms[i].center + u(rng) * model.atoms[i].vdw_radius * dir;
      CHECK(cavity::permittivity(model, x) == 1.0);
      CHECK(cavity::ion_exclusion(model, x) == 0.0);
    }
}

TEST_CASE("epsilon/lambda continuity along random rays") {
  CavityParams p;
  p.r_p = 1.2;
  p.a = 0.4;
  p.r_0 = 1.0;
  p.eps_s = 78.54;
  auto model = cavity::build_cavity(
      {{Vec3(0, 0, 0), 0.2, 1.5}, {Vec3(2.2, 0, 0), -0.2, 1.1}}, p);

  const double xi_slope_max = 30.0 / 16.0;  // max of 30 t^2 (1-t)^2
  const double step = 1e-4;
  const double eps_bound = xi_slope_max * (p.eps_s - 1.0) / p.r_p * step * 1.05;
  const double lam_bound = xi_slope_max / p.r_p * step * 1.05;

  std::mt19937 rng(5);
  std::normal_distribution<double> g;
  for (int t = 0; t < 20; ++t) {
    Vec3 dir(g(rng), g(rng), g(rng));
    dir.normalize();
    double prev_e = cavity::permittivity(model, Vec3(0, 0, 0));
    double prev_l = cavity::ion_exclusion(model, Vec3(0, 0, 0));
    for (int k = 1; k < 600; ++k) {
      const Vec3 x = k * step * dir;
      const double e = cavity::permittivity(model, x);
      const double l = cavity::ion_exclusion(model, x);
      CHECK(std::abs(e - prev_e) <= eps_bound);
      CHECK(std::abs(l - prev_l) <= lam_bound);
      prev_e = e;
      prev_l = l;
    }
  }
}

TEST_CASE("monotone profiles along outward rays of a single atom") {
  auto model = one_atom_companion();
  double prev_e = 0.0, prev_l = -1.0;
  for (int k = 0; k <= 300; ++k) {
    const Vec3 x(0, 0, 0.01 * k);
    const double e = cavity::permittivity(model, x);
    const double l = cavity::ion_exclusion(model, x);
    if (k > 0) {
      CHECK(e >= prev_e);
      CHECK(l >= prev_l);
    }
    prev_e = e;
    prev_l = l;
  }
}

TEST_CASE("partition weights") {
  CavityParams p;
  p.r_p = 0.5;
  p.r_0 = 0.0;

  auto iso = cavity::build_cavity({{Vec3(0, 0, 0), 0.0, 1.5}}, p);
  auto w = cavity::partition_weights(iso, 0, Vec3(2.0, 0, 0));
  CHECK(w.chi_e == 1.0);
  CHECK(w.omega.empty());

  auto two = cavity::build_cavity(
      {{Vec3(0, 0, 0), 0.0, 1.5}, {Vec3(2.5, 0, 0), 0.0, 1.5}}, p);
  auto w2 = cavity::partition_weights(two, 0, Vec3(2.0, 0, 0));
  REQUIRE(w2.omega.size() == 1);
  CHECK(w2.omega[0].first == 1);
  CHECK(w2.omega[0].second == 1.0);
  CHECK(w2.chi_e == 0.0);

  auto three = cavity::build_cavity({{Vec3(0, 0, 0), 0.0, 1.5},
                                     {Vec3(2.5, 0, 0), 0.0, 1.5},
                                     {Vec3(2.5, 0.5, 0), 0.0, 1.5}},
                                    p);
  auto w3 = cavity::partition_weights(three, 0, Vec3(2.0, 0, 0));
  REQUIRE(w3.omega.size() == 2);
  CHECK(w3.omega[0].second == doctest::Approx(0.5));
  CHECK(w3.omega[1].second == doctest::Approx(0.5));

  CHECK_THROWS_AS(cavity::partition_weights(two, 0, Vec3(1.0, 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("partition of unity at all Lebedev images") {
  CavityParams p;
  p.r_p = 1.0;
  p.a = 0.2;
  p.r_0 = 1.3;
  auto model = cavity::build_cavity({{Vec3(0, 0, 0), 0.0, 1.2},
                                     {Vec3(2.0, 0.3, 0), 0.0, 1.5},
                                     {Vec3(-1.0, 1.8, 0.4), 0.0, 1.0}},
                                    p);
  const auto& rule = quad::lebedev(110);
  for (int j = 0; j < model.size(); ++j)
    for (int n = 0; n < rule.size(); ++n) {
      const Vec3 x = model.atoms[j].center + model.radius[j] * rule.points[n];
      auto w = cavity::partition_weights(model, j, x);
      double total = w.chi_e;
      for (auto& [k, v] : w.omega) {
        total += v;
        CHECK(v >= 0.0);
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
    }
}
