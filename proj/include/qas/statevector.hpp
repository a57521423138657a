#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qas/circuit.hpp"

namespace qas {

/// Dense amplitudes of a q-qubit register. Qubit 0 is the most significant
/// bit of the basis-state index.
struct StateVector {
    std::vector<std::complex<double>> amplitudes;
    int num_qubits = 0;

    static StateVector zero_state(int num_qubits);

    std::size_t dimension() const { return amplitudes.size(); }
    double norm() const;
};

/// Loads x / ||x|| into the amplitudes. Rejects zero vectors and length
/// mismatches.
StateVector amplitude_encode(std::span<const double> x, int num_qubits);

void apply_rotation(StateVector& state, GateType axis, int qubit, double angle);
void apply_cnot(StateVector& state, int control, int target);

/// Applies one descriptor, drawing the angle from `angle` for rotations.
void apply_gate(StateVector& state, const GateDescriptor& gate, double angle = 0.0);

/// Exact <Z> on one qubit: sum of |amp|^2 signed by the qubit's bit value.
double expectation_z(const StateVector& state, int qubit);

/// Runs all gates in layer order then gate order, consuming params in that
/// same order. Pure: the input state is not modified.
StateVector run_circuit(const Architecture& arch, std::span<const double> params,
                        const StateVector& input);

} // namespace qas
