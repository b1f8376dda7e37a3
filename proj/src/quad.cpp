#include "ddpb/quad.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ddpb/specfun.hpp"

namespace ddpb::quad {

namespace {

constexpr double kFourPi = 4.0 * 3.14159265358979323846;

// point count -> exactly integrated harmonic order
const std::map<int, int>& order_table() {
  static const std::map<int, int> t = {
      {6, 3},    {14, 5},   {26, 7},   {38, 9},   {50, 11},
      {74, 13},  {86, 15},  {110, 17}, {146, 19}, {170, 21},
      {194, 23}, {230, 25}, {266, 27}, {302, 29}, {350, 31},
      {434, 35}, {590, 41}, {770, 47}, {974, 53}, {1202, 59}};
  return t;
}

}  // namespace

const std::vector<int>& lebedev_supported() {
  static const std::vector<int> v = [] {
    std::vector<int> out;
    for (auto& [n, p] : order_table()) out.push_back(n);
    return out;
  }();
  return v;
}

const LebedevRule& lebedev(int n_points) {
  auto it = order_table().find(n_points);
  if (it == order_table().end()) {
    std::ostringstream msg;
    msg << "lebedev: unsupported point count " << n_points << "; supported sizes:";
    for (int n : lebedev_supported()) msg << ' ' << n;
    throw std::invalid_argument(msg.str());
  }
  static std::map<int, LebedevRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto c = cache.find(n_points);
  if (c != cache.end()) return c->second;

  std::vector<std::array<double, 4>> xyzw;
  detail::lebedev_fill(n_points, xyzw);
  LebedevRule rule;
  rule.order = it->second;
  rule.points.reserve(xyzw.size());
  rule.weights.reserve(xyzw.size());
  for (auto& p : xyzw) {
    rule.points.emplace_back(p[0], p[1], p[2]);
    rule.weights.push_back(p[3] * kFourPi);
  }
  return cache.emplace(n_points, std::move(rule)).first->second;
}

const LebedevRule& lebedev_at_least(int n_points) {
  for (int n : lebedev_supported())
    if (n >= n_points) return lebedev(n);
  throw std::invalid_argument("lebedev_at_least: request exceeds largest table");
}

LglRule lgl(int n) {
  if (n < 2) throw std::invalid_argument("lgl: need at least 2 nodes");
  LglRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Interior nodes are the roots of L'_{n-1}; Newton from Chebyshev guesses.
  for (int i = 0; i < n; ++i) {
    double x = -std::cos(3.14159265358979323846 * i / (n - 1));
    if (i == 0 || i == n - 1) {
      rule.nodes[i] = (i == 0) ? -1.0 : 1.0;
      continue;
    }
    for (int it = 0; it < 100; ++it) {
      // Newton on f = L'_{n-1}: f' = L''_{n-1} from the Legendre ODE
      // (1-x^2) L'' = 2x L' - n(n-1) L.
      auto [p, dp] = specfun::legendre(n - 1, x);
      const double d2p = (2.0 * x * dp - double(n - 1) * n * p) / (1.0 - x * x);
      const double step = dp / d2p;
      x -= step;
      if (std::abs(step) < 1e-14) break;
    }
    rule.nodes[i] = x;
  }
  // de-skew: enforce exact symmetry about 0
  for (int i = 0; i < n / 2; ++i) {
    const double v = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
    rule.nodes[i] = -v;
    rule.nodes[n - 1 - i] = v;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  for (int i = 0; i < n; ++i) {
    auto [p, dp] = specfun::legendre(n - 1, rule.nodes[i]);
    rule.weights[i] = 2.0 / (double(n) * (n - 1) * p * p);
  }
  return rule;
}

double annulus_integrate(const std::function<double(double, const Vec3&)>& h,
                         double delta, const LebedevRule& leb, const LglRule& rule) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("annulus_integrate: delta must lie in (0,1)");
  const double half = 0.5 * (1.0 - delta);
  double total = 0.0;
  for (int m = 0; m < rule.size(); ++m) {
    const double r = half * (rule.nodes[m] + 1.0) + delta;
    double shell = 0.0;
    for (int n = 0; n < leb.size(); ++n)
      shell += leb.weights[n] * h(r, leb.points[n]);
    total += rule.weights[m] * r * r * shell;
  }
  return half * total;
}

}  // namespace ddpb::quad
