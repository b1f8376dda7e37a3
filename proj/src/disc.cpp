#include "ddpb/disc.hpp"

#include <cmath>
#include <stdexcept>

#include "ddpb/specfun.hpp"

namespace ddpb::disc {

Discretization make_discretization(int lmax, int n_radial, int n_leb, int n_lgl) {
  if (lmax < 0) throw std::invalid_argument("make_discretization: lmax must be >= 0");
  if (n_radial < 1) throw std::invalid_argument("make_discretization: N must be >= 1");
  Discretization dd;
  dd.lmax = lmax;
  dd.n_radial = n_radial;
  dd.leb = &quad::lebedev_at_least(n_leb);
  dd.lgl = quad::lgl(n_lgl);

  const int nlm = dd.nlm();
  const int nn = dd.leb->size();
  dd.Y.resize(nn, nlm);
  dd.Gth.resize(nn, nlm);
  dd.Gph.resize(nn, nlm);
  dd.wleb.resize(nn);
  std::vector<double> y(nlm), dth(nlm), dph(nlm);
  for (int n = 0; n < nn; ++n) {
    specfun::sph_harm_grad_all(lmax, dd.leb->points[n], y, dth, dph);
    for (int p = 0; p < nlm; ++p) {
      dd.Y(n, p) = y[p];
      dd.Gth(n, p) = dth[p];
      dd.Gph(n, p) = dph[p];
    }
    dd.wleb(n) = dd.leb->weights[n];
  }
  return dd;
}

void local_frame(const Vec3& s, Vec3& th_hat, Vec3& ph_hat) {
  const double sth = std::hypot(s.x(), s.y());
  double cph = 1.0, sph = 0.0;
  if (sth > 1e-300) {
    cph = s.x() / sth;
    sph = s.y() / sth;
  }
  const double cth = std::clamp(s.z(), -1.0, 1.0);
  th_hat = Vec3(cth * cph, cth * sph, -sth);
  ph_hat = Vec3(-sph, cph, 0.0);
}

namespace {

void fill_radial(const Discretization& dd, SphereTables& t) {
  const int nm = dd.n_lgl();
  const int nr = dd.n_radial;
  const double half = 0.5 * (1.0 - t.delta);
  t.r.resize(nm);
  t.wrad.resize(nm);
  t.rho.resize(nm, nr);
  t.drho.resize(nm, nr);
  specfun::RadialBasis basis(nr, t.delta);
  std::vector<double> v(nr), d(nr);
  for (int m = 0; m < nm; ++m) {
    const double r = half * (dd.lgl.nodes[m] + 1.0) + t.delta;
    t.r(m) = r;
    t.wrad(m) = half * dd.lgl.weights[m] * r * r;
    basis.eval(r, v, d);
    for (int i = 0; i < nr; ++i) {
      t.rho(m, i) = v[i];
      t.drho(m, i) = d[i];
    }
  }
  t.rho_delta.resize(nr);
  t.drho_delta.resize(nr);
  t.rho_one.resize(nr);
  t.drho_one.resize(nr);
  basis.eval(t.delta, v, d);
  for (int i = 0; i < nr; ++i) {
    t.rho_delta(i) = v[i];
    t.drho_delta(i) = d[i];
  }
  basis.eval(1.0, v, d);
  for (int i = 0; i < nr; ++i) {
    t.rho_one(i) = v[i];
    t.drho_one(i) = d[i];
  }
}

}  // namespace

SphereTables make_sphere_tables(const Discretization& dd,
                                const cavity::CavityModel& model, int j) {
  SphereTables t;
  t.j = j;
  t.R = model.radius[j];
  t.delta = model.delta[j];
  t.kappa_scaled = model.params.kappa * t.R;
  fill_radial(dd, t);

  const int nm = dd.n_lgl();
  const int nn = dd.n_leb();
  const Vec3 c = model.atoms[j].center;
  const double beta = model.params.beta;

  t.eps.resize(nm, nn);
  t.lam.resize(nm, nn);
  t.psi0.resize(nm, nn);
  t.gpsi0_r.resize(nm, nn);
  t.gpsi0_th.resize(nm, nn);
  t.gpsi0_ph.resize(nm, nn);
  t.invmult.resize(nm, nn);

  for (int n = 0; n < nn; ++n) {
    const Vec3 s = dd.leb->points[n];
    Vec3 th_hat, ph_hat;
    local_frame(s, th_hat, ph_hat);
    for (int m = 0; m < nm; ++m) {
      const Vec3 x = c + t.R * t.r(m) * s;
      t.eps(m, n) = cavity::permittivity(model, x);
      t.lam(m, n) = cavity::ion_exclusion(model, x);
      double p0 = 0.0;
      Vec3 g0 = Vec3::Zero();
      for (const auto& atom : model.atoms) {
        const Vec3 dx = x - atom.center;
        const double dist = dx.norm();
        p0 += atom.charge / (beta * dist);
        g0 -= atom.charge / (beta * dist * dist * dist) * dx;
      }
      t.psi0(m, n) = p0;
      const Vec3 gu = t.R * g0;  // unit-ball gradient
      t.gpsi0_r(m, n) = gu.dot(s);
      t.gpsi0_th(m, n) = gu.dot(th_hat);
      t.gpsi0_ph(m, n) = gu.dot(ph_hat);
      t.invmult(m, n) = 1.0 / cavity::multiplicity(model, x);
    }
  }

  t.chi_e.resize(nn);
  t.omega.resize(nn);
  t.psi0_bnd.resize(nn);
  t.dnpsi0_bnd.resize(nn);
  for (int n = 0; n < nn; ++n) {
    const Vec3 s = dd.leb->points[n];
    const Vec3 x = c + t.R * s;
    auto w = cavity::partition_weights(model, j, x);
    t.chi_e(n) = w.chi_e;
    t.omega[n] = std::move(w.omega);
    double p0 = 0.0, dn = 0.0;
    for (const auto& atom : model.atoms) {
      const Vec3 dx = x - atom.center;
      const double dist = dx.norm();
      p0 += atom.charge / (beta * dist);
      dn -= atom.charge / (beta * dist * dist * dist) * dx.dot(s);
    }
    t.psi0_bnd(n) = p0;
    t.dnpsi0_bnd(n) = dn;
  }
  return t;
}

SphereTables make_sphere_tables_custom(
    const Discretization& dd, double R, double delta, double kappa,
    const std::function<double(double, const Vec3&)>& eps_field,
    const std::function<double(double, const Vec3&)>& lam_field,
    const std::function<double(double, const Vec3&)>& psi0_field,
    const std::function<Vec3(double, const Vec3&)>& grad_psi0_field) {
  SphereTables t;
  t.j = 0;
  t.R = R;
  t.delta = delta;
  t.kappa_scaled = kappa * R;
  fill_radial(dd, t);

  const int nm = dd.n_lgl();
  const int nn = dd.n_leb();
  t.eps.resize(nm, nn);
  t.lam.resize(nm, nn);
  t.psi0.resize(nm, nn);
  t.gpsi0_r.resize(nm, nn);
  t.gpsi0_th.resize(nm, nn);
  t.gpsi0_ph.resize(nm, nn);
  t.invmult = Eigen::MatrixXd::Ones(nm, nn);

  for (int n = 0; n < nn; ++n) {
    const Vec3 s = dd.leb->points[n];
    Vec3 th_hat, ph_hat;
    local_frame(s, th_hat, ph_hat);
    for (int m = 0; m < nm; ++m) {
      const double r = t.r(m);
      t.eps(m, n) = eps_field(r, s);
      t.lam(m, n) = lam_field(r, s);
      t.psi0(m, n) = psi0_field(r, s);
      const Vec3 g = grad_psi0_field(r, s);
      t.gpsi0_r(m, n) = g.dot(s);
      t.gpsi0_th(m, n) = g.dot(th_hat);
      t.gpsi0_ph(m, n) = g.dot(ph_hat);
    }
  }

  t.chi_e = Eigen::VectorXd::Ones(nn);
  t.omega.resize(nn);
  t.psi0_bnd.resize(nn);
  t.dnpsi0_bnd.resize(nn);
  for (int n = 0; n < nn; ++n) {
    const Vec3 s = dd.leb->points[n];
    t.psi0_bnd(n) = psi0_field(1.0, s);
    t.dnpsi0_bnd(n) = grad_psi0_field(1.0, s).dot(s) / R;
  }
  return t;
}

}  // namespace ddpb::disc
