#include "potevo/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace potevo {

namespace {

double gate_angle(const Gate& g) {
  return std::visit(
      [](const auto& gate) -> double {
        using T = std::decay_t<decltype(gate)>;
        if constexpr (std::is_same_v<T, GlobalPhase>) return gate.phi;
        else if constexpr (std::is_same_v<T, Cnot>) return 0.0;
        else return gate.theta;
      },
      g);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::vector<int> gate_qubits(const Gate& g) {
  return std::visit(
      [](const auto& gate) -> std::vector<int> {
        using T = std::decay_t<decltype(gate)>;
        if constexpr (std::is_same_v<T, GlobalPhase>) return {};
        else if constexpr (std::is_same_v<T, Rz>) return {gate.q};
        else if constexpr (std::is_same_v<T, Cnot>) return {gate.control, gate.target};
        else if constexpr (std::is_same_v<T, PhaseGate>) return {gate.q};
        else if constexpr (std::is_same_v<T, CPhase>) return {gate.a, gate.b};
        else return {gate.a, gate.b, gate.c};
      },
      g);
}

void validate(const Circuit& c) {
  if (c.n < 1) throw std::invalid_argument("circuit needs at least one qubit");
  for (const Gate& g : c.gates) {
    std::vector<int> qs = gate_qubits(g);
    for (int q : qs) {
      if (q < 0 || q >= c.n) throw std::out_of_range("gate qubit index out of range");
    }
    std::sort(qs.begin(), qs.end());
    if (std::adjacent_find(qs.begin(), qs.end()) != qs.end())
      throw std::invalid_argument("gate qubit indices must be distinct");
    if (!std::isfinite(gate_angle(g))) throw std::domain_error("gate angle must be finite");
  }
}

GateCounts count_gates(const Circuit& c) {
  GateCounts counts;
  for (const Gate& g : c.gates) {
    std::visit(
        [&](const auto& gate) {
          using T = std::decay_t<decltype(gate)>;
          if constexpr (std::is_same_v<T, GlobalPhase>) ++counts.global_phase;
          else if constexpr (std::is_same_v<T, Rz>) ++counts.rz;
          else if constexpr (std::is_same_v<T, Cnot>) ++counts.cnot;
          else if constexpr (std::is_same_v<T, PhaseGate>) ++counts.phase;
          else if constexpr (std::is_same_v<T, CPhase>) ++counts.cphase;
          else ++counts.ccphase;
        },
        g);
  }
  counts.total = counts.global_phase + counts.rz + counts.cnot + counts.phase +
                 counts.cphase + counts.ccphase;
  return counts;
}

Circuit cancel_adjacent_cnots(const Circuit& c) {
  std::vector<Gate> gates = c.gates;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gates.size() && !changed; ++i) {
      const auto* first = std::get_if<Cnot>(&gates[i]);
      if (!first) continue;
      for (std::size_t j = i + 1; j < gates.size(); ++j) {
        const std::vector<int> qs = gate_qubits(gates[j]);
        const bool touches = std::find(qs.begin(), qs.end(), first->control) != qs.end() ||
                             std::find(qs.begin(), qs.end(), first->target) != qs.end();
        if (!touches) continue;
        const auto* second = std::get_if<Cnot>(&gates[j]);
        if (second && second->control == first->control && second->target == first->target) {
          gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(j));
          gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
        }
        break;
      }
    }
  }
  return Circuit{c.n, std::move(gates)};
}

std::string export_qasm(const Circuit& c) {
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(c.n) + "];\n";
  double global_phase_total = 0.0;
  for (const Gate& g : c.gates) {
    std::visit(
        [&](const auto& gate) {
          using T = std::decay_t<decltype(gate)>;
          if constexpr (std::is_same_v<T, GlobalPhase>) {
            global_phase_total += gate.phi;
            out += "// global_phase " + fmt(gate.phi) + "\n";
          } else if constexpr (std::is_same_v<T, Rz>) {
            out += "rz(" + fmt(gate.theta) + ") q[" + std::to_string(gate.q) + "];\n";
          } else if constexpr (std::is_same_v<T, Cnot>) {
            out += "cx q[" + std::to_string(gate.control) + "],q[" +
                   std::to_string(gate.target) + "];\n";
          } else if constexpr (std::is_same_v<T, PhaseGate>) {
            out += "p(" + fmt(gate.theta) + ") q[" + std::to_string(gate.q) + "];\n";
          } else if constexpr (std::is_same_v<T, CPhase>) {
            out += "cp(" + fmt(gate.theta) + ") q[" + std::to_string(gate.a) + "],q[" +
                   std::to_string(gate.b) + "];\n";
          } else {
            // CCp via the textbook 5-gate cp/cx pattern.
            const std::string a = "q[" + std::to_string(gate.a) + "]";
            const std::string b = "q[" + std::to_string(gate.b) + "]";
            const std::string cc = "q[" + std::to_string(gate.c) + "]";
            const std::string half = fmt(gate.theta / 2.0);
            const std::string neg_half = fmt(-gate.theta / 2.0);
            out += "cp(" + half + ") " + b + "," + cc + ";\n";
            out += "cx " + a + "," + b + ";\n";
            out += "cp(" + neg_half + ") " + b + "," + cc + ";\n";
            out += "cx " + a + "," + b + ";\n";
            out += "cp(" + half + ") " + a + "," + cc + ";\n";
          }
        },
        g);
  }
  out += "// metadata {\"global_phase\": " + fmt(global_phase_total) + "}\n";
  return out;
}

}  // namespace potevo
