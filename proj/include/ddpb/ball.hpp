#ifndef DDPB_BALL_HPP
#define DDPB_BALL_HPP

#include <stdexcept>
#include <string>
#include <Eigen/Dense>

#include "ddpb/disc.hpp"

namespace ddpb::ball {

using Vec3 = Eigen::Vector3d;

// Per-sphere coefficient vector over harmonic modes, length (lmax+1)^2.
using SphereCoeffs = Eigen::VectorXd;
// Galerkin coefficients over (radial, mode) pairs, flat index p*N + (i-1).
using GalerkinCoeffs = Eigen::VectorXd;

enum class Model { npb, lpb };

// F(phi) = sinh(phi)/phi, even, >= 1, F(0) = 1. Throws std::overflow_error
// for |phi| > 700 (a diverging potential).
double sinh_ratio(double phi);

// HSP solution in the unit ball: the boundary coefficients are the solution;
// interior values use i_l(kappa~ r)/i_l(kappa~), degenerating to r^l for
// kappa~ = 0.
struct HspSolution {
  SphereCoeffs coeffs;
  double kappa_scaled = 0.0;

  double eval(double r, const Vec3& s) const;
};

HspSolution hsp_solve(SphereCoeffs phi_e, double kappa_scaled);

// Projection of boundary samples at the Lebedev nodes onto harmonics:
// [phi]_lm = sum_n w_n phi(s_n) Y_lm(s_n).
SphereCoeffs harmonic_lift(const disc::Discretization& dd,
                           const Eigen::VectorXd& boundary_values);

// sum_lm c_lm r^l Y_lm(s), the interior harmonic extension of a lift.
double harmonic_eval(const SphereCoeffs& coeffs, double r, const Vec3& s);

// Dirichlet-to-Neumann contributions at r = delta: mode (l,m) gets
// gamma_lm * l/delta with gamma_lm = sum_i w[p,i] rho_i(delta).
SphereCoeffs dtn_term(const disc::Discretization& dd,
                      const disc::SphereTables& tab, const GalerkinCoeffs& w);

// Local GSP problem on the unit ball of one sphere: discretization tables,
// model choice, solvent permittivity, and the harmonic lift of the current
// Dirichlet data. eps~ = 1 and lam~ = 0 hold for r <= delta by construction
// of the cavity fields.
struct LocalProblem {
  const disc::Discretization* dd = nullptr;
  const disc::SphereTables* tab = nullptr;
  Model model = Model::npb;
  double eps_s = 1.0;
  SphereCoeffs lift;
};

// Constant part of the Galerkin matrix (stiffness + DtN block), cacheable
// across fixed-point iterations, dd sweeps, and outer iterations.
Eigen::MatrixXd assemble_constant(const LocalProblem& problem);

// Full system for one fixed-point step: A(w_prev) and the load vector F,
// with the lift corrections folded into F. The returned matrix is
// symmetrized; max_asym reports the pre-symmetrization deviation.
struct LocalSystem {
  Eigen::MatrixXd A;
  Eigen::VectorXd F;
  double max_asym = 0.0;
};

LocalSystem assemble_local(const LocalProblem& problem, const GalerkinCoeffs& w_prev);

// As assemble_local but reusing a cached constant block.
LocalSystem assemble_local_cached(const LocalProblem& problem,
                                  const Eigen::MatrixXd& constant_part,
                                  const GalerkinCoeffs& w_prev);

// Load vector for an explicit source f(r,s) with homogeneous boundary data
// and no lift corrections; test/oracle path.
Eigen::VectorXd assemble_rhs_from_field(
    const disc::Discretization& dd, const disc::SphereTables& tab,
    const std::function<double(double, const Vec3&)>& f);

struct FixedPointError : std::runtime_error {
  enum class Kind { divergence, max_iterations };
  Kind kind;
  double residual;
  FixedPointError(Kind k, double res, const std::string& what)
      : std::runtime_error(what), kind(k), residual(res) {}
};

struct GspResult {
  GalerkinCoeffs w;
  int iterations = 0;
  double residual = 0.0;   // last relative update
  double max_asym = 0.0;   // worst quadrature asymmetry seen
  std::vector<double> residual_history;
};

// Damped fixed point X <- X + omega (X_aux - X) on A(X_prev) X_aux = F.
// LPB problems are linear and solved in a single step. Throws
// FixedPointError on NaN/overflow (divergence) or iteration exhaustion.
GspResult gsp_solve(const LocalProblem& problem, const GalerkinCoeffs& init,
                    double omega, double tol, int max_iter);

// Value of w + lift at (r, s); r >= delta uses the Galerkin representation,
// r < delta the harmonic inner extension. Continuous at r = delta.
double eval_local(const disc::Discretization& dd, const disc::SphereTables& tab,
                  const GalerkinCoeffs& w, const SphereCoeffs& lift, double r,
                  const Vec3& s);

// Values of w + lift at every quadrature node (N_lgl x N_leb); the bulk
// evaluation used by the nonlinear factor.
Eigen::MatrixXd eval_local_grid(const disc::Discretization& dd,
                                const disc::SphereTables& tab,
                                const GalerkinCoeffs& w, const SphereCoeffs& lift);

}  // namespace ddpb::ball

#endif
