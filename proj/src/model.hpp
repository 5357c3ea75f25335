#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace eitnoise {

using Complex = std::complex<double>;
using Vec8 = Eigen::Matrix<Complex, 8, 1>;
using Mat8 = Eigen::Matrix<Complex, 8, 8>;
using Mat3 = Eigen::Matrix<Complex, 3, 3>;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

// Component order of the density vector u.  The excited population is
// implicit through rho_ee = 1 - rho_g1g1 - rho_g2g2.
namespace comp {
inline constexpr int kPopG1 = 0;
inline constexpr int kPopG2 = 1;
inline constexpr int kCohEG1 = 2;   // rho_eg1
inline constexpr int kCohG1E = 3;   // rho_g1e = conj(rho_eg1)
inline constexpr int kCohEG2 = 4;   // rho_eg2
inline constexpr int kCohG2E = 5;
inline constexpr int kCohG1G2 = 6;  // ground coherence
inline constexpr int kCohG2G1 = 7;

// Index of the component holding the complex conjugate of component i.
inline constexpr int conjugate_index(int i) {
  constexpr std::array<int, 8> pair = {0, 1, 3, 2, 5, 4, 7, 6};
  return pair[static_cast<size_t>(i)];
}
}  // namespace comp

// All rates and detunings in rad/us.  `rabi` is the total Rabi frequency
// of the two equal-strength arms (rabi^2 = rabi1^2 + rabi2^2).
struct ModelParams {
  double rabi = 0.0;
  double one_photon_detuning = 0.0;  // common detuning of both fields
  double two_photon_detuning = 0.0;  // Raman detuning
  double excited_decay = 0.0;        // spontaneous decay, equal branching
  double ground_pop_decay = 0.0;     // relaxation of the population difference
  double ground_coh_decay = 0.0;     // ground-coherence decay
  double laser_hwhm = 0.0;           // Lorentzian laser half width (phase diffusion)

  // Throws InvalidParams on nonpositive excited decay or negative rates.
  void validate() const;
  // rabi < excited_decay/5; outside this the optical response is no longer
  // slaved to the ground-state dynamics and results need care.
  bool weak_drive_ok() const { return rabi < excited_decay / 5.0; }
};

// Assignment of the three physical levels to density-matrix indices.
// Default puts the excited state last, i.e. the state carrying the
// one-photon detuning.
struct StateLabeling {
  int ground1_index = 0;
  int ground2_index = 1;
  int excited_index = 2;

  void validate() const;  // must be a permutation of {0,1,2}
};

// Packs a 3x3 density matrix into the 8-component vector (trace dropped).
Vec8 density_matrix_to_vector(const Mat3& rho, const StateLabeling& labels = {});
// Reconstructs the 3x3 density matrix; rho_ee = 1 - populations.
Mat3 vector_to_density_matrix(const Vec8& u, const StateLabeling& labels = {});

// Generators of the stochastic Bloch dynamics
//     du/dt = (drift + i*phidot*noise_coupling) u + source
// with phidot the white phase-noise rate, plus their lifts acting on the
// vectorized second moment (row-major pairing (j,k) -> 8j+k).
struct GeneratorSet {
  ModelParams params;

  Mat8 drift;                    // A0: deterministic Bloch generator
  Vec8 source;                   // b:  affine pumping terms
  Mat8 noise_coupling;           // B:  diag of phase winding numbers
  Eigen::Matrix<double, 8, 1> winding;  // its diagonal, n_k in {-1,0,+1}

  bool lifted_built = false;
  MatX lifted_drift;   // 64x64 Kronecker sum drift(x)I + I(x)drift
  MatX lifted_noise;   // B1 = B(x)I + I(x)B (winding numbers add)
  MatX cross_noise;    // B2 = B^2(x)I + I(x)B^2

  // Phase-averaged generators: a Lorentzian laser of HWHM D adds a
  // dephasing D*n_k^2 to component k (and D*(n_j+n_k)^2 to pairs).
  Mat8 averaged_drift() const;
  MatX averaged_lifted_drift() const;

  // Forcing of the stationary covariance equation, built from the
  // stationary mean: F[(j,k)] = 2*D*n_j*n_k*mean_j*mean_k.  Vanishes at
  // D=0 and on pairs with a zero winding number.
  VecX covariance_forcing(const Vec8& mean) const;
};

// First-moment generators (drift, source, noise_coupling).
GeneratorSet build_first_moment_generators(const ModelParams& params);
// Fills the 64-dimensional lifts; first-moment part must be built.
void build_second_moment_generators(GeneratorSet& gen);

// Index permutation implementing the g1<->g2 exchange.  The drift obeys
// P * drift(-Delta) * P = drift(Delta).
Eigen::Matrix<double, 8, 8> exchange_permutation();

}  // namespace eitnoise
