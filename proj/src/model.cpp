#include "model.hpp"

#include <cmath>

#include "errors.hpp"

namespace eitnoise {

using namespace comp;

void ModelParams::validate() const {
  if (!(excited_decay > 0.0))
    fail(ErrorCode::InvalidParams, "excited_decay must be positive");
  if (ground_pop_decay < 0.0 || ground_coh_decay < 0.0 || laser_hwhm < 0.0 || rabi < 0.0)
    fail(ErrorCode::InvalidParams, "rates and rabi must be nonnegative");
  if (!std::isfinite(rabi) || !std::isfinite(one_photon_detuning) ||
      !std::isfinite(two_photon_detuning) || !std::isfinite(excited_decay) ||
      !std::isfinite(ground_pop_decay) || !std::isfinite(ground_coh_decay) ||
      !std::isfinite(laser_hwhm))
    fail(ErrorCode::InvalidParams, "parameters must be finite");
}

void StateLabeling::validate() const {
  int mask = (1 << ground1_index) | (1 << ground2_index) | (1 << excited_index);
  if (mask != 0b111 || ground1_index < 0 || ground2_index < 0 || excited_index < 0 ||
      ground1_index > 2 || ground2_index > 2 || excited_index > 2)
    fail(ErrorCode::InvalidParams, "state labeling must be a permutation of {0,1,2}");
}

Vec8 density_matrix_to_vector(const Mat3& rho, const StateLabeling& labels) {
  labels.validate();
  const int g1 = labels.ground1_index, g2 = labels.ground2_index, e = labels.excited_index;
  Vec8 u;
  u[kPopG1] = rho(g1, g1);
  u[kPopG2] = rho(g2, g2);
  u[kCohEG1] = rho(e, g1);
  u[kCohG1E] = rho(g1, e);
  u[kCohEG2] = rho(e, g2);
  u[kCohG2E] = rho(g2, e);
  u[kCohG1G2] = rho(g1, g2);
  u[kCohG2G1] = rho(g2, g1);
  return u;
}

Mat3 vector_to_density_matrix(const Vec8& u, const StateLabeling& labels) {
  labels.validate();
  const int g1 = labels.ground1_index, g2 = labels.ground2_index, e = labels.excited_index;
  Mat3 rho = Mat3::Zero();
  rho(g1, g1) = u[kPopG1];
  rho(g2, g2) = u[kPopG2];
  rho(e, e) = Complex(1.0, 0.0) - u[kPopG1] - u[kPopG2];
  rho(e, g1) = u[kCohEG1];
  rho(g1, e) = u[kCohG1E];
  rho(e, g2) = u[kCohEG2];
  rho(g2, e) = u[kCohG2E];
  rho(g1, g2) = u[kCohG1G2];
  rho(g2, g1) = u[kCohG2G1];
  return rho;
}

GeneratorSet build_first_moment_generators(const ModelParams& params) {
  params.validate();

  GeneratorSet gen;
  gen.params = params;

  // Per-arm coupling in the rotating frame with the common laser phase
  // removed.  The total Rabi frequency splits evenly over both arms and
  // the Hamiltonian carries half the arm Rabi frequency, which makes the
  // power-broadened ground-coherence rate come out as
  // rabi^2/(2*(excited_decay + 2*laser_hwhm)).
  const double g = params.rabi / (2.0 * std::sqrt(2.0));
  const double gamma = params.excited_decay;
  const double gamma1 = params.ground_pop_decay;
  const double gamma2 = params.ground_coh_decay;
  const double delta = params.one_photon_detuning;
  const double raman = params.two_photon_detuning;
  const double opt_decay = gamma / 2.0;  // optical-coherence decay
  const Complex i(0.0, 1.0);

  Mat8& a = gen.drift;
  a.setZero();
  Vec8& b = gen.source;
  b.setZero();

  // populations; excited feeds Gamma/2 to each ground, the population
  // difference relaxes at gamma1 with the total conserved
  a(kPopG1, kPopG1) = -(gamma + gamma1) / 2.0;
  a(kPopG1, kPopG2) = (gamma1 - gamma) / 2.0;
  a(kPopG1, kCohEG1) = i * g;
  a(kPopG1, kCohG1E) = -i * g;
  b[kPopG1] = gamma / 2.0;

  a(kPopG2, kPopG1) = (gamma1 - gamma) / 2.0;
  a(kPopG2, kPopG2) = -(gamma + gamma1) / 2.0;
  a(kPopG2, kCohEG2) = i * g;
  a(kPopG2, kCohG2E) = -i * g;
  b[kPopG2] = gamma / 2.0;

  // optical coherences; rho_ee was eliminated through the trace
  a(kCohEG1, kPopG1) = 2.0 * i * g;
  a(kCohEG1, kPopG2) = i * g;
  a(kCohEG1, kCohEG1) = i * (delta - raman / 2.0) - opt_decay;
  a(kCohEG1, kCohG2G1) = i * g;
  b[kCohEG1] = -i * g;

  a(kCohG1E, kPopG1) = -2.0 * i * g;
  a(kCohG1E, kPopG2) = -i * g;
  a(kCohG1E, kCohG1E) = -i * (delta - raman / 2.0) - opt_decay;
  a(kCohG1E, kCohG1G2) = -i * g;
  b[kCohG1E] = i * g;

  a(kCohEG2, kPopG1) = i * g;
  a(kCohEG2, kPopG2) = 2.0 * i * g;
  a(kCohEG2, kCohEG2) = i * (delta + raman / 2.0) - opt_decay;
  a(kCohEG2, kCohG1G2) = i * g;
  b[kCohEG2] = -i * g;

  a(kCohG2E, kPopG1) = -i * g;
  a(kCohG2E, kPopG2) = -2.0 * i * g;
  a(kCohG2E, kCohG2E) = -i * (delta + raman / 2.0) - opt_decay;
  a(kCohG2E, kCohG2G1) = -i * g;
  b[kCohG2E] = i * g;

  // ground coherence
  a(kCohG1G2, kCohG1E) = -i * g;
  a(kCohG1G2, kCohEG2) = i * g;
  a(kCohG1G2, kCohG1G2) = i * raman - gamma2;

  a(kCohG2G1, kCohEG1) = i * g;
  a(kCohG2G1, kCohG2E) = -i * g;
  a(kCohG2G1, kCohG2G1) = -i * raman - gamma2;

  // Both fields carry the same laser phase, so only the optical
  // coherences wind: n = (0,0,+1,-1,+1,-1,0,0).
  gen.winding << 0, 0, 1, -1, 1, -1, 0, 0;
  gen.noise_coupling.setZero();
  for (int k = 0; k < 8; ++k) gen.noise_coupling(k, k) = gen.winding[k];

  return gen;
}

void build_second_moment_generators(GeneratorSet& gen) {
  const int n = 8, nn = 64;
  gen.lifted_drift = MatX::Zero(nn, nn);
  gen.lifted_noise = MatX::Zero(nn, nn);
  gen.cross_noise = MatX::Zero(nn, nn);

  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const int row = j * n + k;
      // Kronecker sum of the drift: d(u_j u_k) = sum_m A_jm u_m u_k + u_j A_km u_m
      for (int m = 0; m < n; ++m) {
        gen.lifted_drift(row, m * n + k) += gen.drift(j, m);
        gen.lifted_drift(row, j * n + m) += gen.drift(k, m);
      }
      gen.lifted_noise(row, row) = gen.winding[j] + gen.winding[k];
      gen.cross_noise(row, row) =
          gen.winding[j] * gen.winding[j] + gen.winding[k] * gen.winding[k];
    }
  }
  gen.lifted_built = true;
}

Mat8 GeneratorSet::averaged_drift() const {
  Mat8 a = drift;
  for (int k = 0; k < 8; ++k) a(k, k) -= params.laser_hwhm * winding[k] * winding[k];
  return a;
}

MatX GeneratorSet::averaged_lifted_drift() const {
  if (!lifted_built) fail(ErrorCode::Internal, "second-moment generators not built");
  MatX l = lifted_drift;
  for (int r = 0; r < 64; ++r) {
    const double w = lifted_noise(r, r).real();
    l(r, r) -= params.laser_hwhm * w * w;
  }
  return l;
}

VecX GeneratorSet::covariance_forcing(const Vec8& mean) const {
  VecX f = VecX::Zero(64);
  for (int j = 0; j < 8; ++j)
    for (int k = 0; k < 8; ++k)
      f[j * 8 + k] = 2.0 * params.laser_hwhm * winding[j] * winding[k] * mean[j] * mean[k];
  return f;
}

Eigen::Matrix<double, 8, 8> exchange_permutation() {
  Eigen::Matrix<double, 8, 8> p = Eigen::Matrix<double, 8, 8>::Zero();
  // g1 <-> g2 relabeling: swaps populations, the two optical coherence
  // pairs, and the ground-coherence orientation.
  constexpr std::array<int, 8> image = {kPopG2,   kPopG1,   kCohEG2,  kCohG2E,
                                        kCohEG1,  kCohG1E,  kCohG2G1, kCohG1G2};
  for (int k = 0; k < 8; ++k) p(image[static_cast<size_t>(k)], k) = 1.0;
  return p;
}

}  // namespace eitnoise
