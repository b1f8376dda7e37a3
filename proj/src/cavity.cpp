#include "ddpb/cavity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ddpb::cavity {

namespace {
// A point counts as strictly inside Omega_i only beyond this margin, so
// tangent spheres do not couple.
constexpr double kInteriorMargin = 1e-9;
}  // namespace

CavityModel build_cavity(std::vector<Atom> atoms, const CavityParams& params) {
  if (atoms.empty()) throw std::invalid_argument("build_cavity: no atoms");
  if (!(params.r_p > 0.0)) throw std::invalid_argument("build_cavity: r_p must be positive");
  if (params.a < 0.0 || params.r_0 < 0.0)
    throw std::invalid_argument("build_cavity: a and r_0 must be nonnegative");
  if (params.eps_s < 1.0) throw std::invalid_argument("build_cavity: eps_s must be >= 1");
  if (params.kappa < 0.0) throw std::invalid_argument("build_cavity: kappa must be nonnegative");
  if (!(params.beta > 0.0)) throw std::invalid_argument("build_cavity: beta must be positive");

  CavityModel model;
  model.params = params;
  const int m = int(atoms.size());
  for (int i = 0; i < m; ++i) {
    if (!(atoms[i].vdw_radius > 0.0))
      throw std::invalid_argument("build_cavity: non-positive vdW radius");
    for (int j = 0; j < i; ++j)
      if ((atoms[i].center - atoms[j].center).norm() < 1e-12)
        throw std::invalid_argument("build_cavity: coincident atom centers");
  }
  model.atoms = std::move(atoms);
  model.radius.resize(m);
  model.delta.resize(m);
  model.neighbors.assign(m, {});
  for (int i = 0; i < m; ++i) {
    model.radius[i] = model.atoms[i].vdw_radius + params.r_p + params.a + params.r_0;
    model.delta[i] = model.atoms[i].vdw_radius / model.radius[i];
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const double d = (model.atoms[i].center - model.atoms[j].center).norm();
      if (d < model.radius[i] + model.radius[j]) {
        model.neighbors[i].push_back(j);
        model.neighbors[j].push_back(i);
      }
    }
  return model;
}

double f_sas(const CavityModel& model, const Vec3& x) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < model.size(); ++i) {
    const double d = (x - model.atoms[i].center).norm() -
                     (model.atoms[i].vdw_radius + model.params.r_p + model.params.a);
    best = std::min(best, d);
  }
  return best;
}

double switching_xi(double t) {
  if (t < 0.0 || t > 1.0) throw std::domain_error("switching_xi: t outside [0,1]");
  return t * t * t * (10.0 + 3.0 * t * (-5.0 + 2.0 * t));
}

double switching_xi_deriv(double t) {
  if (t < 0.0 || t > 1.0) throw std::domain_error("switching_xi: t outside [0,1]");
  const double u = t * (1.0 - t);
  return 30.0 * u * u;
}

double permittivity(const CavityModel& model, const Vec3& x) {
  const double f = f_sas(model, x);
  const double rp = model.params.r_p, a = model.params.a;
  if (f <= -rp - a) return 1.0;
  if (f >= -a) return model.params.eps_s;
  return 1.0 + (model.params.eps_s - 1.0) * switching_xi((f + rp + a) / rp);
}

double ion_exclusion(const CavityModel& model, const Vec3& x) {
  const double f = f_sas(model, x);
  const double rp = model.params.r_p;
  if (f <= -rp) return 0.0;
  if (f >= 0.0) return 1.0;
  return switching_xi((f + rp) / rp);
}

PartitionWeights partition_weights(const CavityModel& model, int j, const Vec3& x) {
  const double r = (x - model.atoms[j].center).norm();
  if (std::abs(r - model.radius[j]) > 1e-9)
    throw std::invalid_argument("partition_weights: point is not on Gamma_j");
  PartitionWeights w;
  for (int k : model.neighbors[j]) {
    const double d = (x - model.atoms[k].center).norm();
    if (d < model.radius[k] - kInteriorMargin) w.omega.push_back({k, 0.0});
  }
  if (w.omega.empty()) {
    w.chi_e = 1.0;
    return w;
  }
  const double share = 1.0 / double(w.omega.size());
  for (auto& [k, v] : w.omega) v = share;
  w.chi_e = 0.0;
  return w;
}

int multiplicity(const CavityModel& model, const Vec3& x) {
  int count = 0;
  for (int i = 0; i < model.size(); ++i) {
    const double d = (x - model.atoms[i].center).norm();
    if (d <= model.radius[i] * (1.0 + 1e-12)) ++count;
  }
  return std::max(count, 1);
}

}  // namespace ddpb::cavity
