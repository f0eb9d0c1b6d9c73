#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace potevo {

// Scalar factor e^{i phi} on the whole register.
struct GlobalPhase {
  double phi;
};

// Rz(theta) = diag(e^{-i theta/2}, e^{+i theta/2}); Rz(2 theta) realizes e^{-i theta Z}.
struct Rz {
  int q;
  double theta;
};

struct Cnot {
  int control;
  int target;
};

// P(theta) = diag(1, e^{i theta}).
struct PhaseGate {
  int q;
  double theta;
};

// e^{i theta} on basis states with both qubits set.
struct CPhase {
  int a;
  int b;
  double theta;
};

// e^{i theta} on basis states with all three qubits set.
struct CCPhase {
  int a;
  int b;
  int c;
  double theta;
};

using Gate = std::variant<GlobalPhase, Rz, Cnot, PhaseGate, CPhase, CCPhase>;

// Qubit 0 is the lsqb: bit b of a basis index gives qubit b's state.
struct Circuit {
  int n = 0;
  std::vector<Gate> gates;
};

struct GateCounts {
  std::size_t global_phase = 0;
  std::size_t rz = 0;
  std::size_t cnot = 0;
  std::size_t phase = 0;
  std::size_t cphase = 0;
  std::size_t ccphase = 0;
  std::size_t total = 0;
};

// Qubit indices a gate acts on (empty for GlobalPhase).
std::vector<int> gate_qubits(const Gate& g);

// Throws on out-of-range or repeated qubit indices and non-finite angles.
void validate(const Circuit& c);

GateCounts count_gates(const Circuit& c);

// Repeatedly removes pairs of identical CNOTs separated only by gates that
// touch neither of the pair's qubits. Net unitary is unchanged.
Circuit cancel_adjacent_cnots(const Circuit& c);

// OpenQASM 2.0 text using rz/cx/p/cp; CCPhase is expanded into the standard
// cp+cx pattern and global phases are recorded as comment lines.
std::string export_qasm(const Circuit& c);

}  // namespace potevo
