#pragma once

#include "ysup/gate.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ysup {

struct Instruction {
    GateKind kind;
    std::vector<std::size_t> qubits;
    LayerTag tag = LayerTag::Untagged;

    friend bool operator==(const Instruction&, const Instruction&) = default;
};

/// Throws OutOfRangeQubit, DuplicateQubit or ArityMismatch.
void validate(const Instruction& instr, std::size_t num_qubits);

/// Ordered gate list over a fixed register. Index 0 is applied first.
/// The optional terminal measurement marker only affects export.
class Circuit {
public:
    /// Throws InvalidArgument when num_qubits == 0.
    explicit Circuit(std::size_t num_qubits);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::span<const Instruction> ops() const noexcept { return ops_; }
    std::size_t size() const noexcept { return ops_.size(); }
    bool empty() const noexcept { return ops_.empty(); }
    const Instruction& operator[](std::size_t i) const { return ops_[i]; }

    bool measure_all() const noexcept { return measure_all_; }
    void set_measure_all(bool value) noexcept { measure_all_ = value; }

    /// Validates and appends in place.
    Circuit& push_back(Instruction instr);
    Circuit& push_back(GateKind kind, std::vector<std::size_t> qubits, LayerTag tag = LayerTag::Untagged);

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    std::size_t num_qubits_;
    std::vector<Instruction> ops_;
    bool measure_all_ = false;
};

/// Value-semantics append: `circuit` is left untouched.
Circuit append(const Circuit& circuit, Instruction instr);

/// Greedy layered depth; an instruction occupies all of its operands.
std::size_t depth(const Circuit& circuit);

}  // namespace ysup
