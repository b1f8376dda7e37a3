#include "ddpb/ball.hpp"

#include <cmath>

#include "ddpb/specfun.hpp"

namespace ddpb::ball {

namespace {

std::vector<int> l_of_mode(int lmax) {
  std::vector<int> l(specfun::n_modes(lmax));
  for (int ll = 0; ll <= lmax; ++ll)
    for (int m = -ll; m <= ll; ++m) l[specfun::flat_index(ll, m)] = ll;
  return l;
}

}  // namespace

double sinh_ratio(double phi) {
  const double a = std::abs(phi);
  if (a > 700.0)
    throw std::overflow_error("sinh_ratio: potential magnitude exceeds 700");
  if (a < 1e-4) {
    const double p2 = phi * phi;
    return 1.0 + p2 / 6.0 * (1.0 + p2 / 20.0);
  }
  return std::sinh(phi) / phi;
}

double HspSolution::eval(double r, const Vec3& s) const {
  const int lmax = int(std::lround(std::sqrt(double(coeffs.size())))) - 1;
  std::vector<double> y(coeffs.size());
  specfun::sph_harm_all(lmax, s, y);
  double acc = 0.0;
  for (int l = 0; l <= lmax; ++l) {
    const double ratio = specfun::hsp_radial_ratio(l, kappa_scaled, r);
    for (int m = -l; m <= l; ++m) {
      const int p = specfun::flat_index(l, m);
      acc += coeffs(p) * ratio * y[p];
    }
  }
  return acc;
}

HspSolution hsp_solve(SphereCoeffs phi_e, double kappa_scaled) {
  if (kappa_scaled < 0.0)
    throw std::domain_error("hsp_solve: kappa_scaled must be nonnegative");
  return HspSolution{std::move(phi_e), kappa_scaled};
}

SphereCoeffs harmonic_lift(const disc::Discretization& dd,
                           const Eigen::VectorXd& boundary_values) {
  return dd.Y.transpose() * (dd.wleb.cwiseProduct(boundary_values));
}

double harmonic_eval(const SphereCoeffs& coeffs, double r, const Vec3& s) {
  const int lmax = int(std::lround(std::sqrt(double(coeffs.size())))) - 1;
  std::vector<double> y(coeffs.size());
  specfun::sph_harm_all(lmax, s, y);
  double acc = 0.0;
  double rl = 1.0;
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -l; m <= l; ++m) {
      const int p = specfun::flat_index(l, m);
      acc += coeffs(p) * rl * y[p];
    }
    rl *= r;
  }
  return acc;
}

SphereCoeffs dtn_term(const disc::Discretization& dd,
                      const disc::SphereTables& tab, const GalerkinCoeffs& w) {
  const int nlm = dd.nlm();
  const int nr = dd.n_radial;
  SphereCoeffs out = SphereCoeffs::Zero(nlm);
  const auto lp = l_of_mode(dd.lmax);
  for (int p = 0; p < nlm; ++p) {
    double gamma = 0.0;
    for (int i = 0; i < nr; ++i) gamma += w(p * nr + i) * tab.rho_delta(i);
    out(p) = gamma * lp[p] / tab.delta;
  }
  return out;
}

Eigen::MatrixXd assemble_constant(const LocalProblem& problem) {
  const auto& dd = *problem.dd;
  const auto& tab = *problem.tab;
  const int nlm = dd.nlm();
  const int nr = dd.n_radial;
  const int dim = nr * nlm;
  const auto lp = l_of_mode(dd.lmax);

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd scaled(dd.n_leb(), nlm);
  for (int m = 0; m < dd.n_lgl(); ++m) {
    const Eigen::VectorXd wq = dd.wleb.cwiseProduct(tab.eps.row(m).transpose());
    scaled = wq.asDiagonal() * dd.Y;
    Eigen::MatrixXd G = dd.Y.transpose() * scaled;
    scaled = wq.asDiagonal() * dd.Gth;
    Eigen::MatrixXd H = dd.Gth.transpose() * scaled;
    scaled = wq.asDiagonal() * dd.Gph;
    H.noalias() += dd.Gph.transpose() * scaled;

    const Eigen::VectorXd rho_m = tab.rho.row(m);
    const Eigen::VectorXd drho_m = tab.drho.row(m);
    const double r2 = tab.r(m) * tab.r(m);
    const Eigen::MatrixXd P1 = tab.wrad(m) * (drho_m * drho_m.transpose());
    const Eigen::MatrixXd P2 = (tab.wrad(m) / r2) * (rho_m * rho_m.transpose());
    for (int p = 0; p < nlm; ++p)
      for (int q = 0; q < nlm; ++q) {
        const double g = G(p, q), h = H(p, q);
        if (g == 0.0 && h == 0.0) continue;
        A.block(p * nr, q * nr, nr, nr).noalias() += g * P1 + h * P2;
      }
  }
  // DtN block: l * delta * rho_i(delta) rho_j(delta) on the mode diagonal
  for (int p = 0; p < nlm; ++p) {
    const double f = lp[p] * tab.delta;
    if (f == 0.0) continue;
    A.block(p * nr, p * nr, nr, nr).noalias() +=
        f * (tab.rho_delta * tab.rho_delta.transpose());
  }
  return A;
}

namespace {

// lambda * (kappa R)^2 eps_s * F(u_prev + psi0) at the quadrature nodes
Eigen::MatrixXd mass_coefficient(const LocalProblem& problem,
                                 const Eigen::MatrixXd& u_prev) {
  const auto& tab = *problem.tab;
  const double k2 = tab.kappa_scaled * tab.kappa_scaled * problem.eps_s;
  Eigen::MatrixXd c = tab.lam * k2;
  if (problem.model == Model::npb) {
    for (int m = 0; m < c.rows(); ++m)
      for (int n = 0; n < c.cols(); ++n)
        if (c(m, n) != 0.0)
          c(m, n) *= sinh_ratio(u_prev(m, n) + tab.psi0(m, n));
  }
  return c;
}

void add_mass(const disc::Discretization& dd, const disc::SphereTables& tab,
              const Eigen::MatrixXd& c, Eigen::MatrixXd& A) {
  const int nlm = dd.nlm();
  const int nr = dd.n_radial;
  Eigen::MatrixXd scaled(dd.n_leb(), nlm);
  for (int m = 0; m < dd.n_lgl(); ++m) {
    if ((c.row(m).array() == 0.0).all()) continue;
    const Eigen::VectorXd wq = dd.wleb.cwiseProduct(c.row(m).transpose());
    scaled = wq.asDiagonal() * dd.Y;
    const Eigen::MatrixXd G = dd.Y.transpose() * scaled;
    const Eigen::VectorXd rho_m = tab.rho.row(m);
    const Eigen::MatrixXd P = tab.wrad(m) * (rho_m * rho_m.transpose());
    for (int p = 0; p < nlm; ++p)
      for (int q = 0; q < nlm; ++q) {
        const double g = G(p, q);
        if (g == 0.0) continue;
        A.block(p * nr, q * nr, nr, nr).noalias() += g * P;
      }
  }
}

// Load vector: weak-form source with the lift corrections folded in.
Eigen::VectorXd assemble_load(const LocalProblem& problem, const Eigen::MatrixXd& c) {
  const auto& dd = *problem.dd;
  const auto& tab = *problem.tab;
  const int nlm = dd.nlm();
  const int nr = dd.n_radial;
  const int nn = dd.n_leb();
  const auto lp = l_of_mode(dd.lmax);

  Eigen::VectorXd F = Eigen::VectorXd::Zero(nr * nlm);
  Eigen::VectorXd rl(nlm), rlm1_l(nlm), rlm1(nlm);
  Eigen::VectorXd fieldA(nn), fieldB(nn), fieldCth(nn), fieldCph(nn);

  for (int m = 0; m < dd.n_lgl(); ++m) {
    const double r = tab.r(m);
    for (int p = 0; p < nlm; ++p) {
      const int l = lp[p];
      const double rp = std::pow(r, l);
      rl(p) = rp;
      rlm1(p) = (l == 0) ? 1.0 / r : rp / r;  // r^{l-1}
      rlm1_l(p) = l * rlm1(p);                // l r^{l-1}
    }
    // lift values and gradient pieces on this shell
    const Eigen::VectorXd u1 = dd.Y * problem.lift.cwiseProduct(rl);
    const Eigen::VectorXd du1r = dd.Y * problem.lift.cwiseProduct(rlm1_l);
    const Eigen::VectorXd t1th = dd.Gth * problem.lift.cwiseProduct(rlm1);
    const Eigen::VectorXd t1ph = dd.Gph * problem.lift.cwiseProduct(rlm1);

    for (int n = 0; n < nn; ++n) {
      const double em1 = tab.eps(m, n) - 1.0;
      fieldA(n) = -em1 * tab.gpsi0_r(m, n) - tab.eps(m, n) * du1r(n);
      fieldB(n) = -c(m, n) * (tab.psi0(m, n) + u1(n));
      fieldCth(n) = -em1 * tab.gpsi0_th(m, n) - tab.eps(m, n) * t1th(n);
      fieldCph(n) = -em1 * tab.gpsi0_ph(m, n) - tab.eps(m, n) * t1ph(n);
    }
    const Eigen::VectorXd projA = dd.Y.transpose() * dd.wleb.cwiseProduct(fieldA);
    const Eigen::VectorXd projB = dd.Y.transpose() * dd.wleb.cwiseProduct(fieldB);
    Eigen::VectorXd projC = dd.Gth.transpose() * dd.wleb.cwiseProduct(fieldCth);
    projC.noalias() += dd.Gph.transpose() * dd.wleb.cwiseProduct(fieldCph);

    const double wm = tab.wrad(m);
    for (int p = 0; p < nlm; ++p)
      for (int i = 0; i < nr; ++i)
        F(p * nr + i) += wm * (tab.drho(m, i) * projA(p) + tab.rho(m, i) * projB(p) +
                               tab.rho(m, i) / r * projC(p));
  }
  // DtN correction of the lift: -lift_p * l * delta^{l+1} * rho_i(delta)
  for (int p = 0; p < nlm; ++p) {
    const int l = lp[p];
    if (l == 0) continue;
    const double f = problem.lift(p) * l * std::pow(tab.delta, l + 1);
    for (int i = 0; i < nr; ++i) F(p * nr + i) -= f * tab.rho_delta(i);
  }
  return F;
}

}  // namespace

LocalSystem assemble_local_cached(const LocalProblem& problem,
                                  const Eigen::MatrixXd& constant_part,
                                  const GalerkinCoeffs& w_prev) {
  const Eigen::MatrixXd u_prev =
      eval_local_grid(*problem.dd, *problem.tab, w_prev, problem.lift);
  const Eigen::MatrixXd c = mass_coefficient(problem, u_prev);
  LocalSystem sys;
  sys.A = constant_part;
  add_mass(*problem.dd, *problem.tab, c, sys.A);
  sys.max_asym = (sys.A - sys.A.transpose()).cwiseAbs().maxCoeff();
  sys.A = 0.5 * (sys.A + sys.A.transpose()).eval();
  sys.F = assemble_load(problem, c);
  return sys;
}

LocalSystem assemble_local(const LocalProblem& problem, const GalerkinCoeffs& w_prev) {
  return assemble_local_cached(problem, assemble_constant(problem), w_prev);
}

Eigen::VectorXd assemble_rhs_from_field(
    const disc::Discretization& dd, const disc::SphereTables& tab,
    const std::function<double(double, const Vec3&)>& f) {
  const int nlm = dd.nlm();
  const int nr = dd.n_radial;
  Eigen::VectorXd F = Eigen::VectorXd::Zero(nr * nlm);
  Eigen::VectorXd vals(dd.n_leb());
  for (int m = 0; m < dd.n_lgl(); ++m) {
    for (int n = 0; n < dd.n_leb(); ++n) vals(n) = f(tab.r(m), dd.leb->points[n]);
    const Eigen::VectorXd proj = dd.Y.transpose() * dd.wleb.cwiseProduct(vals);
    for (int p = 0; p < nlm; ++p)
      for (int i = 0; i < nr; ++i)
        F(p * nr + i) += tab.wrad(m) * tab.rho(m, i) * proj(p);
  }
  return F;
}

GspResult gsp_solve(const LocalProblem& problem, const GalerkinCoeffs& init,
                    double omega, double tol, int max_iter) {
  if (!(omega > 0.0 && omega <= 1.0))
    throw std::invalid_argument("gsp_solve: damping must lie in (0,1]");
  if (!(tol > 0.0)) throw std::invalid_argument("gsp_solve: tol must be positive");

  const Eigen::MatrixXd constant_part = assemble_constant(problem);
  GspResult result;
  result.w = init;

  auto solve_once = [&](const GalerkinCoeffs& w_prev) {
    LocalSystem sys = assemble_local_cached(problem, constant_part, w_prev);
    result.max_asym = std::max(result.max_asym, sys.max_asym);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(sys.A);
    Eigen::VectorXd x = ldlt.solve(sys.F);
    if (x.hasNaN())
      throw FixedPointError(FixedPointError::Kind::divergence,
                            std::numeric_limits<double>::quiet_NaN(),
                            "gsp_solve: NaN in linear sub-solve");
    return x;
  };

  if (problem.model == Model::lpb) {
    result.w = solve_once(result.w);
    result.iterations = 1;
    result.residual = 0.0;
    return result;
  }

  for (int nu = 1; nu <= max_iter; ++nu) {
    Eigen::VectorXd aux;
    try {
      aux = solve_once(result.w);
    } catch (const std::overflow_error& e) {
      throw FixedPointError(FixedPointError::Kind::divergence,
                            std::numeric_limits<double>::quiet_NaN(), e.what());
    }
    const Eigen::VectorXd next = result.w + omega * (aux - result.w);
    const double dn = (next - result.w).norm();
    const double nn = next.norm();
    const double rel = (nn > 0.0) ? dn / nn : dn;
    result.w = next;
    result.iterations = nu;
    result.residual = rel;
    if (!std::isfinite(rel))
      throw FixedPointError(FixedPointError::Kind::divergence, rel,
                            "gsp_solve: iterate diverged");
    if (rel <= tol) return result;
  }
  throw FixedPointError(FixedPointError::Kind::max_iterations, result.residual,
                        "gsp_solve: fixed point did not converge");
}

double eval_local(const disc::Discretization& dd, const disc::SphereTables& tab,
                  const GalerkinCoeffs& w, const SphereCoeffs& lift, double r,
                  const Vec3& s) {
  const int nlm = dd.nlm();
  const int nr = dd.n_radial;
  const auto lp = l_of_mode(dd.lmax);
  static thread_local std::vector<double> y;
  y.resize(nlm);
  specfun::sph_harm_all(dd.lmax, s, y);

  double acc = 0.0;
  if (r >= tab.delta) {
    static thread_local std::vector<double> rv, rd;
    rv.resize(nr);
    rd.resize(nr);
    specfun::RadialBasis basis(nr, tab.delta);
    basis.eval(std::min(r, 1.0), rv, rd);
    for (int p = 0; p < nlm; ++p) {
      double radial = 0.0;
      for (int i = 0; i < nr; ++i) radial += w(p * nr + i) * rv[i];
      acc += (radial + lift(p) * std::pow(r, lp[p])) * y[p];
    }
  } else {
    const double q = r / tab.delta;
    for (int p = 0; p < nlm; ++p) {
      double gamma = 0.0;
      for (int i = 0; i < nr; ++i) gamma += w(p * nr + i) * tab.rho_delta(i);
      acc += (gamma * std::pow(q, lp[p]) + lift(p) * std::pow(r, lp[p])) * y[p];
    }
  }
  return acc;
}

Eigen::MatrixXd eval_local_grid(const disc::Discretization& dd,
                                const disc::SphereTables& tab,
                                const GalerkinCoeffs& w, const SphereCoeffs& lift) {
  const int nlm = dd.nlm();
  const int nr = dd.n_radial;
  const auto lp = l_of_mode(dd.lmax);
  Eigen::MatrixXd out(dd.n_lgl(), dd.n_leb());
  Eigen::VectorXd shell(nlm);
  for (int m = 0; m < dd.n_lgl(); ++m) {
    const double r = tab.r(m);
    for (int p = 0; p < nlm; ++p) {
      double radial = 0.0;
      for (int i = 0; i < nr; ++i) radial += w(p * nr + i) * tab.rho(m, i);
      shell(p) = radial + lift(p) * std::pow(r, lp[p]);
    }
    out.row(m) = (dd.Y * shell).transpose();
  }
  return out;
}

}  // namespace ddpb::ball
