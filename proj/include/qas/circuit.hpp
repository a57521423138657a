#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qas {

enum class GateType { Rx, Ry, Rz, Cnot, NoOp };

bool is_rotation(GateType t);
std::string_view gate_type_name(GateType t);
GateType gate_type_from_name(std::string_view name);

/// One placed gate: begin qubit, end qubit, type. Single-qubit gates
/// (rotations and NoOp) have begin == end; CNOT has begin (control)
/// != end (target).
struct GateDescriptor {
    int begin = 0;
    int end = 0;
    GateType type = GateType::NoOp;

    bool operator==(const GateDescriptor&) const = default;
};

/// Throws std::invalid_argument if the descriptor violates its invariants
/// for a register of num_qubits qubits.
void validate_gate(const GateDescriptor& gate, int num_qubits);

struct Layer {
    std::vector<GateDescriptor> gates;

    bool operator==(const Layer&) const = default;
};

/// Ordered list of fixed-width layers over a q-qubit register. Value type;
/// append_layer returns a grown copy and never mutates its input.
class Architecture {
public:
    explicit Architecture(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    const std::vector<Layer>& layers() const { return layers_; }
    bool empty() const { return layers_.empty(); }

    /// Number of non-NoOp gates.
    int gate_count() const;
    /// Number of rotation gates, i.e. trainable angles.
    int parameter_count() const;
    /// All gates flattened in layer order then gate order.
    std::vector<GateDescriptor> flattened() const;
    /// flattened() re-encoded as action indices; the controller observation.
    std::vector<int> action_sequence() const;

    /// Appends a fully validated layer. Layer widths must agree across the
    /// architecture.
    void push_layer(Layer layer);

    bool operator==(const Architecture&) const = default;

private:
    int num_qubits_;
    std::vector<Layer> layers_;
};

/// Size of the flat action space: 4q + q(q-1).
int action_count(int num_qubits);

/// Flat action layout: [0,q) Rx(i), [q,2q) Ry(i), [2q,3q) Rz(i),
/// [3q,4q) NoOp(i), then CNOT pairs (B,E), B != E, in lexicographic order.
int encode_action(const GateDescriptor& gate, int num_qubits);
GateDescriptor decode_action(int action, int num_qubits);

/// Decodes L actions and appends them as one layer. Throws on capacity
/// overflow against max_layers.
Architecture append_layer(const Architecture& arch, std::span<const int> actions,
                          int max_layers);

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

/// Line-oriented architecture document: a `qubits q` header, then one gate
/// per line as `layer B E T [param]`. When params is nonempty it must match
/// parameter_count and every rotation line carries its angle.
std::string serialize_arch(const Architecture& arch, std::span<const double> params = {});

struct ParsedArchitecture {
    Architecture arch;
    std::vector<double> params; // empty when the document carries no angles
    bool has_params = false;
};

ParsedArchitecture parse_arch(std::string_view text);

} // namespace qas
