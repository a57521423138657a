#include "qas/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace qas {

namespace {

void check_qubit(const StateVector& state, int qubit) {
    if (qubit < 0 || qubit >= state.num_qubits) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                " outside register of " + std::to_string(state.num_qubits));
    }
}

// Bit mask selecting the given qubit in a basis index (qubit 0 = MSB).
std::size_t qubit_mask(const StateVector& state, int qubit) {
    return std::size_t{1} << (state.num_qubits - 1 - qubit);
}

} // namespace

StateVector StateVector::zero_state(int num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("state needs at least one qubit");
    }
    StateVector s;
    s.num_qubits = num_qubits;
    s.amplitudes.assign(std::size_t{1} << num_qubits, {0.0, 0.0});
    s.amplitudes[0] = {1.0, 0.0};
    return s;
}

double StateVector::norm() const {
    double total = 0.0;
    for (const auto& a : amplitudes) total += std::norm(a);
    return std::sqrt(total);
}

StateVector amplitude_encode(std::span<const double> x, int num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (x.size() != dim) {
        throw std::invalid_argument("amplitude_encode: expected " + std::to_string(dim) +
                                    " entries, got " + std::to_string(x.size()));
    }
    double sq = 0.0;
    for (double v : x) sq += v * v;
    if (sq == 0.0) {
        throw std::invalid_argument("amplitude_encode: unencodable zero input");
    }
    const double inv = 1.0 / std::sqrt(sq);
    StateVector s;
    s.num_qubits = num_qubits;
    s.amplitudes.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        s.amplitudes[i] = {x[i] * inv, 0.0};
    }
    return s;
}

void apply_rotation(StateVector& state, GateType axis, int qubit, double angle) {
    check_qubit(state, qubit);
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("rotation angle must be finite");
    }
    const std::size_t mask = qubit_mask(state, qubit);
    const std::size_t dim = state.dimension();
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);

    switch (axis) {
        case GateType::Rx:
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & mask) continue;
                const auto a0 = state.amplitudes[i];
                const auto a1 = state.amplitudes[i | mask];
                state.amplitudes[i] = c * a0 + std::complex<double>(0.0, -s) * a1;
                state.amplitudes[i | mask] = std::complex<double>(0.0, -s) * a0 + c * a1;
            }
            break;
        case GateType::Ry:
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & mask) continue;
                const auto a0 = state.amplitudes[i];
                const auto a1 = state.amplitudes[i | mask];
                state.amplitudes[i] = c * a0 - s * a1;
                state.amplitudes[i | mask] = s * a0 + c * a1;
            }
            break;
        case GateType::Rz: {
            const std::complex<double> lo{c, -s};
            const std::complex<double> hi{c, s};
            for (std::size_t i = 0; i < dim; ++i) {
                state.amplitudes[i] *= (i & mask) ? hi : lo;
            }
            break;
        }
        default:
            throw std::invalid_argument("apply_rotation: axis must be Rx, Ry or Rz");
    }
}

void apply_cnot(StateVector& state, int control, int target) {
    check_qubit(state, control);
    check_qubit(state, target);
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    const std::size_t cmask = qubit_mask(state, control);
    const std::size_t tmask = qubit_mask(state, target);
    const std::size_t dim = state.dimension();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & cmask) && !(i & tmask)) {
            std::swap(state.amplitudes[i], state.amplitudes[i | tmask]);
        }
    }
}

void apply_gate(StateVector& state, const GateDescriptor& gate, double angle) {
    switch (gate.type) {
        case GateType::Rx:
        case GateType::Ry:
        case GateType::Rz:
            apply_rotation(state, gate.type, gate.begin, angle);
            break;
        case GateType::Cnot:
            apply_cnot(state, gate.begin, gate.end);
            break;
        case GateType::NoOp:
            break;
    }
}

double expectation_z(const StateVector& state, int qubit) {
    check_qubit(state, qubit);
    const std::size_t mask = qubit_mask(state, qubit);
    double value = 0.0;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        const double p = std::norm(state.amplitudes[i]);
        value += (i & mask) ? -p : p;
    }
    return value;
}

StateVector run_circuit(const Architecture& arch, std::span<const double> params,
                        const StateVector& input) {
    if (arch.num_qubits() != input.num_qubits) {
        throw std::invalid_argument("architecture acts on " + std::to_string(arch.num_qubits()) +
                                    " qubits but state has " + std::to_string(input.num_qubits));
    }
    if (static_cast<int>(params.size()) != arch.parameter_count()) {
        throw std::invalid_argument("expected " + std::to_string(arch.parameter_count()) +
                                    " parameters, got " + std::to_string(params.size()));
    }
    StateVector state = input;
    std::size_t next_param = 0;
    for (const Layer& layer : arch.layers()) {
        for (const GateDescriptor& g : layer.gates) {
            apply_gate(state, g, is_rotation(g.type) ? params[next_param++] : 0.0);
        }
    }
    return state;
}

} // namespace qas
