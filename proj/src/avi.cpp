#include "rlsort/avi.hpp"

#include <Eigen/Dense>
#include <random>
#include <stdexcept>

#include "rlsort/comparator.hpp"

namespace rlsort {

namespace {
double unit_draw(std::mt19937_64& rng) {
  double u;
  do {
    u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  } while (u == 0.0);  // open interval (0,1)
  return u;
}
}  // namespace

std::vector<StateVector> sample_states(const LearnConfig& cfg, int advance) {
  if (cfg.sample_dim < 2)
    throw std::invalid_argument("sample_dim must be >= 2");
  if (cfg.samples_per_iter < 1)
    throw std::invalid_argument("samples_per_iter must be >= 1");
  std::mt19937_64 rng(
      derive_seed(cfg.seed, {static_cast<std::uint64_t>(advance)}));
  std::vector<StateVector> out;
  out.reserve(cfg.samples_per_iter);
  for (int s = 0; s < cfg.samples_per_iter; ++s) {
    StateVector x(cfg.sample_dim);
    for (int k = 0; k < cfg.sample_dim; ++k) x(k) = unit_draw(rng);
    out.push_back(std::move(x));
  }
  return out;
}

double bellman_target(const StateVector& x, const ValueParams& vp) {
  ReliableComparator truth;
  const int d = static_cast<int>(x.size());
  const double r = reward(x, truth);
  const double v_here = value(x, vp, truth);
  double best_dv = 0.0;  // identity action
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (i == j) continue;
      const double dv = residual(x, i, j, vp, truth);
      if (dv > best_dv) best_dv = dv;
    }
  }
  return r + vp.gamma * (v_here + best_dv);
}

LearnResult avi_learn(const LearnConfig& cfg) {
  if (cfg.iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (cfg.gamma < 0.0 || cfg.gamma > 1.0)
    throw std::invalid_argument("gamma must lie in [0,1]");

  ReliableComparator truth;
  ValueParams vp;
  vp.theta.setZero();
  vp.gamma = cfg.gamma;

  LearnResult result;
  std::vector<StateVector> samples = sample_states(cfg, 0);
  Eigen::MatrixXd phi(cfg.samples_per_iter, 2);
  Eigen::VectorXd targets(cfg.samples_per_iter);

  for (int it = 0; it < cfg.iterations; ++it) {
    if (cfg.resample_each_iter && it > 0) samples = sample_states(cfg, it);
    for (int s = 0; s < cfg.samples_per_iter; ++s) {
      const FeatureVector f = features(samples[s], truth);
      phi(s, 0) = f.f1;
      phi(s, 1) = f.f2;
      targets(s) = bellman_target(samples[s], vp);
    }
    const auto qr = phi.colPivHouseholderQr();
    if (qr.rank() < 2)
      throw std::runtime_error(
          "value regression is singular (feature matrix rank deficient); "
          "increase samples_per_iter so unsorted samples are present");
    vp.theta = qr.solve(targets);
    result.residual_rms.push_back(
        std::sqrt((phi * vp.theta - targets).squaredNorm() /
                  static_cast<double>(cfg.samples_per_iter)));
  }
  result.params = vp;
  return result;
}

}  // namespace rlsort
