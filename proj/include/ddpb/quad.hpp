#ifndef DDPB_QUAD_HPP
#define DDPB_QUAD_HPP

#include <array>
#include <functional>
#include <vector>
#include <Eigen/Dense>

namespace ddpb::quad {

using Vec3 = Eigen::Vector3d;

// Lebedev rule on the unit sphere; weights sum to 4pi and the rule integrates
// spherical-harmonic products Y_l Y_l' exactly for l + l' <= order.
struct LebedevRule {
  std::vector<Vec3> points;
  std::vector<double> weights;
  int order = 0;

  int size() const { return int(points.size()); }
};

// Supported point counts in increasing order.
const std::vector<int>& lebedev_supported();

// Throws std::invalid_argument (listing the supported sizes) for unsupported
// n_points. Rules are built once and cached; returned reference is immutable.
const LebedevRule& lebedev(int n_points);

// Smallest supported rule with at least n points (n above the largest table
// is an error). Used when a requested count is not an exact table size.
const LebedevRule& lebedev_at_least(int n_points);

// Legendre-Gauss-Lobatto rule on [-1,1]; exact for degree <= 2n-3.
struct LglRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return int(nodes.size()); }
};

LglRule lgl(int n);

// ((1-delta)/2) sum_m sum_n w_m w_n r_m^2 h(r_m, s_n) with r_m the LGL node
// mapped onto [delta, 1]; approximates the integral of h over the spherical
// shell delta <= |x| <= 1.
double annulus_integrate(const std::function<double(double, const Vec3&)>& h,
                         double delta, const LebedevRule& leb, const LglRule& rule);

namespace detail {
// Raw Lebedev-Laikov table expansion: fills xyzw (n rows of x,y,z,w with
// weights summing to 1). Defined in lebedev_data.cpp.
int lebedev_fill(int n_points, std::vector<std::array<double, 4>>& xyzw);
}

}  // namespace ddpb::quad

#endif
