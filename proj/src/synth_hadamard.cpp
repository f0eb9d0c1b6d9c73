#include "potevo/synth_hadamard.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace potevo {

std::string mask_to_string(std::uint64_t mask, int n) {
  if (n < 1 || n > 62) throw std::invalid_argument("qubit count out of range");
  if (mask >= (std::uint64_t{1} << n)) throw std::out_of_range("Z-mask out of range");
  std::string s(static_cast<std::size_t>(n), 'I');
  for (int b = 0; b < n; ++b) {
    if ((mask >> b) & 1u) s[static_cast<std::size_t>(n - 1 - b)] = 'Z';
  }
  return s;
}

namespace {

// Star ladder: every CNOT targets the mask's highest Z qubit. The star
// CNOTs commute with each other, so both halves use descending control
// order; Gray-adjacent masks then share their junction CNOT and the
// peephole pass can remove it.
void emit_mask_term(Circuit& circuit, std::uint64_t mask, double theta) {
  std::vector<int> qubits;
  for (int b = 0; b < circuit.n; ++b) {
    if ((mask >> b) & 1u) qubits.push_back(b);
  }
  const int target = qubits.back();
  std::vector<Cnot> ladder;
  for (auto it = qubits.rbegin() + 1; it != qubits.rend(); ++it) {
    ladder.push_back(Cnot{*it, target});
  }
  for (const Cnot& g : ladder) circuit.gates.push_back(g);
  circuit.gates.push_back(Rz{target, 2.0 * theta});
  for (const Cnot& g : ladder) circuit.gates.push_back(g);
}

}  // namespace

Circuit synthesize_exact(const WalshSpectrum& spectrum, double t, MaskOrdering ordering) {
  const std::uint64_t len = std::uint64_t{1} << spectrum.n;
  if (spectrum.coeffs.size() != static_cast<Eigen::Index>(len))
    throw std::invalid_argument("spectrum length does not match its qubit count");

  Circuit circuit;
  circuit.n = spectrum.n;
  circuit.gates.push_back(GlobalPhase{-spectrum.coeffs[0] * t});
  for (std::uint64_t i = 1; i < len; ++i) {
    const std::uint64_t mask = ordering == MaskOrdering::GrayCode ? (i ^ (i >> 1)) : i;
    if (mask == 0) continue;
    emit_mask_term(circuit, mask, spectrum.coeffs[static_cast<Eigen::Index>(mask)] * t);
  }
  return circuit;
}

std::uint64_t cnot_count_bound(int n) {
  if (n < 1) throw std::invalid_argument("qubit count must be >= 1");
  std::uint64_t total = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const int weight = std::popcount(mask);
    if (weight >= 2) total += 2u * static_cast<std::uint64_t>(weight - 1);
  }
  return total;
}

}  // namespace potevo
