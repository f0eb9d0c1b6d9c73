#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "potevo/circuit.hpp"

namespace potevo {

struct StateVector {
  int n = 0;
  Eigen::VectorXcd amplitudes;

  static StateVector basis(int n, std::uint64_t k);
  static StateVector uniform(int n);
};

struct DiagonalUnitary {
  int n = 0;
  Eigen::VectorXcd entries;
};

// Depolarizing probability per 1-, 2- and 3-qubit gate.
struct NoiseModel {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
  std::uint64_t seed = 0;
};

struct ShotResult {
  std::map<std::string, std::uint64_t> counts;  // bitstring (msqb first) -> occurrences
  std::uint64_t shots = 0;
};

struct SwapTestResult {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t shots = 0;
};

struct NoisyFidelity {
  double mean_fidelity = 0.0;
  double std_error = 0.0;
  std::uint64_t trajectories = 0;
};

class NonDiagonalCircuit : public std::runtime_error {
 public:
  NonDiagonalCircuit(std::uint64_t basis_index, double leaked_mass);
  std::uint64_t basis_index() const { return basis_index_; }
  double leaked_mass() const { return leaked_mass_; }

 private:
  std::uint64_t basis_index_;
  double leaked_mass_;
};

void apply_gate_inplace(StateVector& state, const Gate& g);
StateVector apply_gate(StateVector state, const Gate& g);

StateVector evolve(const StateVector& state, const Circuit& c);

// Applies the circuit to every basis state; throws NonDiagonalCircuit if any
// off-diagonal amplitude mass exceeds tol.
DiagonalUnitary circuit_diagonal(const Circuit& c, double tol = 1e-9);

// |<a|b>|^2.
double fidelity_exact(const StateVector& a, const StateVector& b);

// Ancilla-H, controlled-SWAP, H, ancilla measurement; estimate = 2 P(0) - 1
// from seeded shots, with the binomial standard error.
SwapTestResult swap_test(const StateVector& a, const StateVector& b, std::uint64_t shots,
                         std::uint64_t seed);

ShotResult sample_counts(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

// Monte-Carlo trajectories: after each gate, with the arity's probability,
// a uniformly random non-identity Pauli hits the gate's qubits. Returns the
// mean fidelity against the noiseless evolution.
NoisyFidelity evolve_noisy(const StateVector& state, const Circuit& c, const NoiseModel& noise,
                           std::uint64_t trajectories);

}  // namespace potevo
