#include "ysup/circuit.hpp"

#include "ysup/error.hpp"

#include <algorithm>
#include <string>

namespace ysup {

void validate(const Instruction& instr, std::size_t num_qubits) {
    if (instr.qubits.size() != instr.kind.arity()) {
        throw Error(ErrorCode::ArityMismatch, std::string(instr.kind.mnemonic()) + " expects " +
                                                  std::to_string(instr.kind.arity()) + " operands, got " +
                                                  std::to_string(instr.qubits.size()));
    }
    for (std::size_t i = 0; i < instr.qubits.size(); ++i) {
        const std::size_t q = instr.qubits[i];
        if (q >= num_qubits) {
            throw Error(ErrorCode::OutOfRangeQubit,
                        "qubit q" + std::to_string(q) + " outside register of " + std::to_string(num_qubits));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (instr.qubits[j] == q) {
                throw Error(ErrorCode::DuplicateQubit, "qubit q" + std::to_string(q) + " repeated");
            }
        }
    }
}

Circuit::Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        throw Error(ErrorCode::InvalidArgument, "circuit needs at least one qubit");
    }
}

Circuit& Circuit::push_back(Instruction instr) {
    validate(instr, num_qubits_);
    ops_.push_back(std::move(instr));
    return *this;
}

Circuit& Circuit::push_back(GateKind kind, std::vector<std::size_t> qubits, LayerTag tag) {
    return push_back(Instruction{kind, std::move(qubits), tag});
}

Circuit append(const Circuit& circuit, Instruction instr) {
    Circuit out = circuit;
    out.push_back(std::move(instr));
    return out;
}

std::size_t depth(const Circuit& circuit) {
    std::vector<std::size_t> level(circuit.num_qubits(), 0);
    std::size_t result = 0;
    for (const auto& op : circuit.ops()) {
        std::size_t layer = 0;
        for (auto q : op.qubits) {
            layer = std::max(layer, level[q]);
        }
        ++layer;
        for (auto q : op.qubits) {
            level[q] = layer;
        }
        result = std::max(result, layer);
    }
    return result;
}

}  // namespace ysup
