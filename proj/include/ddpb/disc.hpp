#ifndef DDPB_DISC_HPP
#define DDPB_DISC_HPP

#include <functional>
#include <vector>
#include <Eigen/Dense>

#include "ddpb/cavity.hpp"
#include "ddpb/quad.hpp"

namespace ddpb::disc {

using Vec3 = Eigen::Vector3d;

// Shared spectral tables: one Lebedev rule, one LGL rule, and the spherical
// harmonic values/surface gradients at every Lebedev node.
struct Discretization {
  int lmax = 0;
  int n_radial = 0;  // N, number of radial basis functions per mode
  const quad::LebedevRule* leb = nullptr;
  quad::LglRule lgl;

  Eigen::MatrixXd Y;    // N_leb x nlm, harmonic values
  Eigen::MatrixXd Gth;  // N_leb x nlm, d/dtheta
  Eigen::MatrixXd Gph;  // N_leb x nlm, (1/sin th) d/dphi
  Eigen::VectorXd wleb; // Lebedev weights as a vector

  int nlm() const { return (lmax + 1) * (lmax + 1); }
  int local_dim() const { return n_radial * nlm(); }
  int n_leb() const { return leb->size(); }
  int n_lgl() const { return lgl.size(); }
  // flat Galerkin index for mode p = l^2+l+m and radial function i (1-based)
  int flat(int p, int i) const { return p * n_radial + (i - 1); }
};

// n_leb is a request: the smallest supported Lebedev table with at least that
// many points is used.
Discretization make_discretization(int lmax, int n_radial, int n_leb, int n_lgl);

// Everything the local solvers need about one sphere, precomputed at the
// tensor quadrature nodes (radial index m, angular index n).
struct SphereTables {
  int j = 0;
  double R = 0.0;
  double delta = 0.0;
  double kappa_scaled = 0.0;  // kappa * R

  Eigen::VectorXd r;     // N_lgl mapped radial nodes in [delta, 1]
  Eigen::VectorXd wrad;  // (1-delta)/2 * w^lgl_m * r_m^2

  Eigen::MatrixXd rho;   // N_lgl x N basis values
  Eigen::MatrixXd drho;  // N_lgl x N basis derivatives
  Eigen::VectorXd rho_delta, drho_delta, rho_one, drho_one;  // length N

  // coefficient fields, N_lgl x N_leb
  Eigen::MatrixXd eps;      // pulled-back permittivity
  Eigen::MatrixXd lam;      // pulled-back ion exclusion
  Eigen::MatrixXd psi0;     // vacuum potential at nodes
  Eigen::MatrixXd gpsi0_r;  // unit-ball gradient of psi0, frame components
  Eigen::MatrixXd gpsi0_th;
  Eigen::MatrixXd gpsi0_ph;
  Eigen::MatrixXd invmult;  // 1 / #enclosing balls (overlap weight)

  // boundary data at the Lebedev images x_j + R_j s_n
  Eigen::VectorXd chi_e;       // external indicator
  std::vector<std::vector<std::pair<int, double>>> omega;  // neighbor weights
  Eigen::VectorXd psi0_bnd;    // psi0 at images
  Eigen::VectorXd dnpsi0_bnd;  // radial derivative of psi0 at images (physical)
};

SphereTables make_sphere_tables(const Discretization& dd,
                                const cavity::CavityModel& model, int j);

// Tables over [delta,1] x S^2 from caller-supplied fields; geometry-free
// entries (boundary weights, multiplicity) are set to the isolated-sphere
// values. Used by tests and by manufactured problems.
SphereTables make_sphere_tables_custom(
    const Discretization& dd, double R, double delta, double kappa,
    const std::function<double(double, const Vec3&)>& eps_field,
    const std::function<double(double, const Vec3&)>& lam_field,
    const std::function<double(double, const Vec3&)>& psi0_field,
    const std::function<Vec3(double, const Vec3&)>& grad_psi0_field);

// Local orthonormal frame vectors at a unit direction (theta-hat, phi-hat),
// matching the convention of specfun::sph_harm_grad_all.
void local_frame(const Vec3& s, Vec3& th_hat, Vec3& ph_hat);

}  // namespace ddpb::disc

#endif
