#include "potevo/sim.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "potevo/potential.hpp"

namespace potevo {

namespace {

using Complex = std::complex<double>;

Complex phase_factor(double theta) { return Complex(std::cos(theta), std::sin(theta)); }

void check_dims(const StateVector& a, const StateVector& b) {
  if (a.n != b.n || a.amplitudes.size() != b.amplitudes.size())
    throw std::invalid_argument("state dimensions do not match");
}

// which: 1 = X, 2 = Y, 3 = Z.
void apply_pauli(Eigen::VectorXcd& amps, int qubit, int which) {
  const std::uint64_t len = static_cast<std::uint64_t>(amps.size());
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  for (std::uint64_t k = 0; k < len; ++k) {
    if (k & bit) continue;
    const auto lo = static_cast<Eigen::Index>(k);
    const auto hi = static_cast<Eigen::Index>(k | bit);
    switch (which) {
      case 1:
        std::swap(amps[lo], amps[hi]);
        break;
      case 2: {
        const Complex a = amps[lo];
        amps[lo] = Complex(0, -1) * amps[hi];
        amps[hi] = Complex(0, 1) * a;
        break;
      }
      default:
        amps[hi] = -amps[hi];
        break;
    }
  }
}

}  // namespace

NonDiagonalCircuit::NonDiagonalCircuit(std::uint64_t basis_index, double leaked_mass)
    : std::runtime_error("circuit is not diagonal: basis state " +
                         std::to_string(basis_index) + " leaks amplitude mass " +
                         std::to_string(leaked_mass)),
      basis_index_(basis_index),
      leaked_mass_(leaked_mass) {}

StateVector StateVector::basis(int n, std::uint64_t k) {
  if (n < 1) throw std::invalid_argument("qubit count must be >= 1");
  const auto len = Eigen::Index{1} << n;
  if (k >= static_cast<std::uint64_t>(len)) throw std::out_of_range("basis index out of range");
  StateVector state;
  state.n = n;
  state.amplitudes = Eigen::VectorXcd::Zero(len);
  state.amplitudes[static_cast<Eigen::Index>(k)] = 1.0;
  return state;
}

StateVector StateVector::uniform(int n) {
  if (n < 1) throw std::invalid_argument("qubit count must be >= 1");
  const auto len = Eigen::Index{1} << n;
  StateVector state;
  state.n = n;
  state.amplitudes =
      Eigen::VectorXcd::Constant(len, Complex(1.0 / std::sqrt(static_cast<double>(len)), 0.0));
  return state;
}

void apply_gate_inplace(StateVector& state, const Gate& g) {
  for (int q : gate_qubits(g)) {
    if (q < 0 || q >= state.n) throw std::out_of_range("gate qubit index out of range");
  }
  Eigen::VectorXcd& amps = state.amplitudes;
  const std::uint64_t len = static_cast<std::uint64_t>(amps.size());
  std::visit(
      [&](const auto& gate) {
        using T = std::decay_t<decltype(gate)>;
        if constexpr (std::is_same_v<T, GlobalPhase>) {
          amps *= phase_factor(gate.phi);
        } else if constexpr (std::is_same_v<T, Rz>) {
          const std::uint64_t bit = std::uint64_t{1} << gate.q;
          const Complex lo = phase_factor(-gate.theta / 2.0);
          const Complex hi = phase_factor(gate.theta / 2.0);
          for (std::uint64_t k = 0; k < len; ++k) {
            amps[static_cast<Eigen::Index>(k)] *= (k & bit) ? hi : lo;
          }
        } else if constexpr (std::is_same_v<T, Cnot>) {
          const std::uint64_t cbit = std::uint64_t{1} << gate.control;
          const std::uint64_t tbit = std::uint64_t{1} << gate.target;
          for (std::uint64_t k = 0; k < len; ++k) {
            if ((k & cbit) && !(k & tbit)) {
              std::swap(amps[static_cast<Eigen::Index>(k)],
                        amps[static_cast<Eigen::Index>(k | tbit)]);
            }
          }
        } else if constexpr (std::is_same_v<T, PhaseGate>) {
          const std::uint64_t bit = std::uint64_t{1} << gate.q;
          const Complex factor = phase_factor(gate.theta);
          for (std::uint64_t k = 0; k < len; ++k) {
            if (k & bit) amps[static_cast<Eigen::Index>(k)] *= factor;
          }
        } else if constexpr (std::is_same_v<T, CPhase>) {
          const std::uint64_t mask = (std::uint64_t{1} << gate.a) | (std::uint64_t{1} << gate.b);
          const Complex factor = phase_factor(gate.theta);
          for (std::uint64_t k = 0; k < len; ++k) {
            if ((k & mask) == mask) amps[static_cast<Eigen::Index>(k)] *= factor;
          }
        } else {
          const std::uint64_t mask = (std::uint64_t{1} << gate.a) | (std::uint64_t{1} << gate.b) |
                                     (std::uint64_t{1} << gate.c);
          const Complex factor = phase_factor(gate.theta);
          for (std::uint64_t k = 0; k < len; ++k) {
            if ((k & mask) == mask) amps[static_cast<Eigen::Index>(k)] *= factor;
          }
        }
      },
      g);
}

StateVector apply_gate(StateVector state, const Gate& g) {
  apply_gate_inplace(state, g);
  return state;
}

StateVector evolve(const StateVector& state, const Circuit& c) {
  if (state.n != c.n) throw std::invalid_argument("state and circuit dimensions do not match");
  StateVector result = state;
  for (const Gate& g : c.gates) apply_gate_inplace(result, g);
  return result;
}

DiagonalUnitary circuit_diagonal(const Circuit& c, double tol) {
  validate(c);
  const std::uint64_t len = std::uint64_t{1} << c.n;
  DiagonalUnitary diag;
  diag.n = c.n;
  diag.entries.resize(static_cast<Eigen::Index>(len));
  for (std::uint64_t k = 0; k < len; ++k) {
    const StateVector out = evolve(StateVector::basis(c.n, k), c);
    const auto idx = static_cast<Eigen::Index>(k);
    const double leaked = out.amplitudes.squaredNorm() - std::norm(out.amplitudes[idx]);
    if (std::sqrt(std::max(leaked, 0.0)) > tol) {
      throw NonDiagonalCircuit(k, std::sqrt(std::max(leaked, 0.0)));
    }
    diag.entries[idx] = out.amplitudes[idx];
  }
  return diag;
}

double fidelity_exact(const StateVector& a, const StateVector& b) {
  check_dims(a, b);
  return std::norm(a.amplitudes.dot(b.amplitudes));
}

SwapTestResult swap_test(const StateVector& a, const StateVector& b, std::uint64_t shots,
                         std::uint64_t seed) {
  check_dims(a, b);
  if (shots == 0) throw std::invalid_argument("swap test needs at least one shot");

  // Composite register: |anc> (x) |b> (x) |a>, index = anc*4^n + kb*2^n + ka.
  const int n = a.n;
  const std::uint64_t reg = std::uint64_t{1} << n;
  const std::uint64_t half = reg * reg;
  Eigen::VectorXcd joint(static_cast<Eigen::Index>(2 * half));
  for (std::uint64_t kb = 0; kb < reg; ++kb) {
    for (std::uint64_t ka = 0; ka < reg; ++ka) {
      const Complex amp = b.amplitudes[static_cast<Eigen::Index>(kb)] *
                          a.amplitudes[static_cast<Eigen::Index>(ka)];
      joint[static_cast<Eigen::Index>(kb * reg + ka)] = amp;
      joint[static_cast<Eigen::Index>(half + kb * reg + ka)] = 0.0;
    }
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // H on the ancilla.
  for (std::uint64_t k = 0; k < half; ++k) {
    const Complex lo = joint[static_cast<Eigen::Index>(k)];
    const Complex hi = joint[static_cast<Eigen::Index>(half + k)];
    joint[static_cast<Eigen::Index>(k)] = (lo + hi) * inv_sqrt2;
    joint[static_cast<Eigen::Index>(half + k)] = (lo - hi) * inv_sqrt2;
  }
  // Controlled SWAP of the two registers.
  for (std::uint64_t kb = 0; kb < reg; ++kb) {
    for (std::uint64_t ka = 0; ka < kb; ++ka) {
      std::swap(joint[static_cast<Eigen::Index>(half + kb * reg + ka)],
                joint[static_cast<Eigen::Index>(half + ka * reg + kb)]);
    }
  }
  // Second H, then P(ancilla = 0).
  double p0 = 0.0;
  for (std::uint64_t k = 0; k < half; ++k) {
    const Complex lo = joint[static_cast<Eigen::Index>(k)];
    const Complex hi = joint[static_cast<Eigen::Index>(half + k)];
    p0 += std::norm((lo + hi) * inv_sqrt2);
  }
  p0 = std::min(std::max(p0, 0.0), 1.0);

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution zero_outcome(p0);
  std::uint64_t zeros = 0;
  for (std::uint64_t s = 0; s < shots; ++s) {
    if (zero_outcome(rng)) ++zeros;
  }
  const double p0_hat = static_cast<double>(zeros) / static_cast<double>(shots);

  SwapTestResult result;
  result.estimate = 2.0 * p0_hat - 1.0;
  result.std_error = 2.0 * std::sqrt(p0_hat * (1.0 - p0_hat) / static_cast<double>(shots));
  result.shots = shots;
  return result;
}

ShotResult sample_counts(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shot count must be >= 1");
  const double norm = state.amplitudes.norm();
  if (std::abs(norm - 1.0) > 1e-9) throw std::invalid_argument("state is not normalized");

  std::vector<double> probs(static_cast<std::size_t>(state.amplitudes.size()));
  for (Eigen::Index k = 0; k < state.amplitudes.size(); ++k) {
    probs[static_cast<std::size_t>(k)] = std::norm(state.amplitudes[k]);
  }
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::uint64_t> dist(probs.begin(), probs.end());

  ShotResult result;
  result.shots = shots;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const std::uint64_t k = dist(rng);
    ++result.counts[state_index_label(k, state.n)];
  }
  return result;
}

NoisyFidelity evolve_noisy(const StateVector& state, const Circuit& c, const NoiseModel& noise,
                           std::uint64_t trajectories) {
  if (trajectories == 0) throw std::invalid_argument("trajectory count must be >= 1");
  for (double p : {noise.p1, noise.p2, noise.p3}) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("noise probability out of [0, 1]");
  }
  const StateVector ideal = evolve(state, c);

  std::mt19937_64 rng(noise.seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t traj = 0; traj < trajectories; ++traj) {
    StateVector current = state;
    for (const Gate& g : c.gates) {
      apply_gate_inplace(current, g);
      const std::vector<int> qs = gate_qubits(g);
      if (qs.empty()) continue;
      const double p = qs.size() == 1 ? noise.p1 : qs.size() == 2 ? noise.p2 : noise.p3;
      if (p <= 0.0 || uniform(rng) >= p) continue;
      // Uniform non-identity Pauli on the gate's qubits.
      const std::uint64_t options = (std::uint64_t{1} << (2 * qs.size())) - 1;
      std::uniform_int_distribution<std::uint64_t> pauli_dist(1, options);
      std::uint64_t code = pauli_dist(rng);
      for (int q : qs) {
        const int which = static_cast<int>(code & 3u);
        code >>= 2;
        if (which != 0) apply_pauli(current.amplitudes, q, which);
      }
    }
    const double f = fidelity_exact(ideal, current);
    sum += f;
    sum_sq += f * f;
  }

  NoisyFidelity result;
  const double m = static_cast<double>(trajectories);
  result.mean_fidelity = sum / m;
  const double variance = std::max(sum_sq / m - result.mean_fidelity * result.mean_fidelity, 0.0);
  result.std_error = std::sqrt(variance / m);
  result.trajectories = trajectories;
  return result;
}

}  // namespace potevo
