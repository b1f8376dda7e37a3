#ifndef DDPB_CAVITY_HPP
#define DDPB_CAVITY_HPP

#include <utility>
#include <vector>
#include <Eigen/Dense>

namespace ddpb::cavity {

using Vec3 = Eigen::Vector3d;

// One solute atom, atomic units internally.
struct Atom {
  Vec3 center = Vec3::Zero();
  double charge = 0.0;      // partial charge, e
  double vdw_radius = 0.0;  // a.u.
};

struct CavityParams {
  double r_p = 0.0;    // probe radius
  double a = 0.0;      // Stern layer length
  double r_0 = 0.0;    // nonlinear-regime width
  double eps_s = 1.0;  // solvent relative permittivity
  double kappa = 0.0;  // Debye-Hueckel constant, 1/a.u.
  double beta = 1.0;   // K_B T / e
};

// Enlarged-ball decomposition: R_i = r_i + r_p + a + r_0, delta_i = r_i/R_i.
struct CavityModel {
  std::vector<Atom> atoms;
  CavityParams params;
  std::vector<double> radius;               // R_i
  std::vector<double> delta;                // r_i / R_i
  std::vector<std::vector<int>> neighbors;  // {j : |x_i-x_j| < R_i+R_j}, sorted

  int size() const { return int(atoms.size()); }
};

CavityModel build_cavity(std::vector<Atom> atoms, const CavityParams& params);

// Approximate SAS signed distance: min_i(|x-x_i| - (r_i + r_p + a)).
// Negative inside the SAS cavity, exact Euclidean distance outside.
double f_sas(const CavityModel& model, const Vec3& x);

// Quintic switching polynomial t^3 (10 + 3t(-5 + 2t)) on [0,1]; hard domain
// error outside (callers branch on f_sas first).
double switching_xi(double t);
double switching_xi_deriv(double t);

double permittivity(const CavityModel& model, const Vec3& x);
double ion_exclusion(const CavityModel& model, const Vec3& x);

// Schwarz partition weights at a point on Gamma_j. omega lists (neighbor
// index, weight) for the spheres strictly containing x; chi_e is the
// external-boundary indicator. They sum to one.
struct PartitionWeights {
  std::vector<std::pair<int, double>> omega;
  double chi_e = 1.0;
};

PartitionWeights partition_weights(const CavityModel& model, int j, const Vec3& x);

// Number of enlarged balls containing x (boundary counted in); never less
// than 1 for points produced by per-sphere quadrature.
int multiplicity(const CavityModel& model, const Vec3& x);

}  // namespace ddpb::cavity

#endif
