#include "qas/circuit.hpp"

#include <charconv>
#include <sstream>

namespace qas {

bool is_rotation(GateType t) {
    return t == GateType::Rx || t == GateType::Ry || t == GateType::Rz;
}

std::string_view gate_type_name(GateType t) {
    switch (t) {
        case GateType::Rx: return "Rx";
        case GateType::Ry: return "Ry";
        case GateType::Rz: return "Rz";
        case GateType::Cnot: return "CNOT";
        case GateType::NoOp: return "NoOp";
    }
    throw std::logic_error("gate_type_name: unreachable");
}

GateType gate_type_from_name(std::string_view name) {
    if (name == "Rx") return GateType::Rx;
    if (name == "Ry") return GateType::Ry;
    if (name == "Rz") return GateType::Rz;
    if (name == "CNOT") return GateType::Cnot;
    if (name == "NoOp") return GateType::NoOp;
    throw std::invalid_argument("unknown gate type token: " + std::string(name));
}

void validate_gate(const GateDescriptor& gate, int num_qubits) {
    if (gate.begin < 0 || gate.begin >= num_qubits || gate.end < 0 || gate.end >= num_qubits) {
        throw std::invalid_argument("gate qubits out of range for " +
                                    std::to_string(num_qubits) + "-qubit register");
    }
    if (gate.type == GateType::Cnot) {
        if (gate.begin == gate.end) {
            throw std::invalid_argument("CNOT requires distinct control and target qubits");
        }
    } else if (gate.begin != gate.end) {
        throw std::invalid_argument("single-qubit gate requires begin == end");
    }
}

Architecture::Architecture(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("architecture needs at least one qubit");
    }
}

int Architecture::gate_count() const {
    int count = 0;
    for (const Layer& layer : layers_) {
        for (const GateDescriptor& g : layer.gates) {
            if (g.type != GateType::NoOp) ++count;
        }
    }
    return count;
}

int Architecture::parameter_count() const {
    int count = 0;
    for (const Layer& layer : layers_) {
        for (const GateDescriptor& g : layer.gates) {
            if (is_rotation(g.type)) ++count;
        }
    }
    return count;
}

std::vector<GateDescriptor> Architecture::flattened() const {
    std::vector<GateDescriptor> out;
    for (const Layer& layer : layers_) {
        out.insert(out.end(), layer.gates.begin(), layer.gates.end());
    }
    return out;
}

std::vector<int> Architecture::action_sequence() const {
    std::vector<int> out;
    for (const Layer& layer : layers_) {
        for (const GateDescriptor& g : layer.gates) {
            out.push_back(encode_action(g, num_qubits_));
        }
    }
    return out;
}

void Architecture::push_layer(Layer layer) {
    for (const GateDescriptor& g : layer.gates) {
        validate_gate(g, num_qubits_);
    }
    if (!layers_.empty() && layer.gates.size() != layers_.front().gates.size()) {
        throw std::invalid_argument("layer width mismatch: expected " +
                                    std::to_string(layers_.front().gates.size()) + " gates");
    }
    layers_.push_back(std::move(layer));
}

int action_count(int num_qubits) {
    return 4 * num_qubits + num_qubits * (num_qubits - 1);
}

int encode_action(const GateDescriptor& gate, int num_qubits) {
    validate_gate(gate, num_qubits);
    const int q = num_qubits;
    switch (gate.type) {
        case GateType::Rx: return gate.begin;
        case GateType::Ry: return q + gate.begin;
        case GateType::Rz: return 2 * q + gate.begin;
        case GateType::NoOp: return 3 * q + gate.begin;
        case GateType::Cnot: {
            int offset = gate.end > gate.begin ? gate.end - 1 : gate.end;
            return 4 * q + gate.begin * (q - 1) + offset;
        }
    }
    throw std::logic_error("encode_action: unreachable");
}

GateDescriptor decode_action(int action, int num_qubits) {
    const int q = num_qubits;
    if (action < 0 || action >= action_count(q)) {
        throw std::out_of_range("action index " + std::to_string(action) +
                                " outside [0, " + std::to_string(action_count(q)) + ")");
    }
    if (action < q) return {action, action, GateType::Rx};
    if (action < 2 * q) return {action - q, action - q, GateType::Ry};
    if (action < 3 * q) return {action - 2 * q, action - 2 * q, GateType::Rz};
    if (action < 4 * q) return {action - 3 * q, action - 3 * q, GateType::NoOp};
    int pair = action - 4 * q;
    int control = pair / (q - 1);
    int rest = pair % (q - 1);
    int target = rest >= control ? rest + 1 : rest;
    return {control, target, GateType::Cnot};
}

Architecture append_layer(const Architecture& arch, std::span<const int> actions,
                          int max_layers) {
    if (static_cast<int>(arch.layers().size()) >= max_layers) {
        throw std::length_error("architecture already holds max_layers = " +
                                std::to_string(max_layers) + " layers");
    }
    Layer layer;
    layer.gates.reserve(actions.size());
    for (int a : actions) {
        layer.gates.push_back(decode_action(a, arch.num_qubits()));
    }
    Architecture grown = arch;
    grown.push_layer(std::move(layer));
    return grown;
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string serialize_arch(const Architecture& arch, std::span<const double> params) {
    if (!params.empty() && static_cast<int>(params.size()) != arch.parameter_count()) {
        throw std::invalid_argument("parameter vector length " + std::to_string(params.size()) +
                                    " does not match parameter count " +
                                    std::to_string(arch.parameter_count()));
    }
    std::ostringstream out;
    out.precision(17);
    out << "qubits " << arch.num_qubits() << "\n";
    std::size_t param_index = 0;
    for (std::size_t l = 0; l < arch.layers().size(); ++l) {
        for (const GateDescriptor& g : arch.layers()[l].gates) {
            out << l << " " << g.begin << " " << g.end << " " << gate_type_name(g.type);
            if (is_rotation(g.type) && !params.empty()) {
                out << " " << params[param_index++];
            }
            out << "\n";
        }
    }
    return out.str();
}

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> tokens;
    std::istringstream iss{std::string(line)};
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    return tokens;
}

int parse_int(const std::string& tok, int line, const char* field) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, std::string(field) + " is not an integer: '" + tok + "'");
    }
    return value;
}

double parse_double(const std::string& tok, int line, const char* field) {
    try {
        std::size_t pos = 0;
        double value = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, std::string(field) + " is not a number: '" + tok + "'");
    }
}

} // namespace

ParsedArchitecture parse_arch(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    int num_qubits = -1;

    std::vector<std::vector<GateDescriptor>> layers;
    std::vector<double> params;
    int rotation_count = 0;
    int param_lines = 0;

    while (std::getline(stream, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto tokens = split_tokens(line);
        if (tokens.empty()) continue;

        if (num_qubits < 0) {
            if (tokens.size() != 2 || tokens[0] != "qubits") {
                throw ParseError(line_no, "expected header 'qubits <q>'");
            }
            num_qubits = parse_int(tokens[1], line_no, "qubit count");
            if (num_qubits < 1) throw ParseError(line_no, "qubit count must be positive");
            continue;
        }

        if (tokens.size() != 4 && tokens.size() != 5) {
            throw ParseError(line_no, "expected 'layer B E T [param]'");
        }
        int layer_index = parse_int(tokens[0], line_no, "layer index");
        GateDescriptor gate;
        gate.begin = parse_int(tokens[1], line_no, "begin qubit");
        gate.end = parse_int(tokens[2], line_no, "end qubit");
        try {
            gate.type = gate_type_from_name(tokens[3]);
            validate_gate(gate, num_qubits);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }

        if (layer_index < 0 || layer_index > static_cast<int>(layers.size())) {
            throw ParseError(line_no, "layer index " + tokens[0] +
                                          " is not contiguous with previous layers");
        }
        if (layer_index == static_cast<int>(layers.size())) layers.emplace_back();

        if (tokens.size() == 5) {
            if (!is_rotation(gate.type)) {
                throw ParseError(line_no, "parameter given for non-rotation gate");
            }
            params.push_back(parse_double(tokens[4], line_no, "parameter"));
            ++param_lines;
        }
        if (is_rotation(gate.type)) ++rotation_count;
        layers[layer_index].push_back(gate);
    }

    if (num_qubits < 0) throw ParseError(line_no, "missing 'qubits' header");
    if (param_lines != 0 && param_lines != rotation_count) {
        throw ParseError(line_no, "document carries parameters for only some rotation gates");
    }

    ParsedArchitecture out{Architecture(num_qubits), std::move(params), param_lines > 0};
    for (auto& gates : layers) {
        try {
            out.arch.push_layer(Layer{std::move(gates)});
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return out;
}

} // namespace qas
