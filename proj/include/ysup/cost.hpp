#pragma once

#include "ysup/circuit.hpp"

#include <cstddef>
#include <map>
#include <string>

namespace ysup {

struct CostReport {
    std::size_t num_qubits = 0;
    std::size_t total = 0;
    std::size_t depth = 0;
    std::size_t native_total = 0;
    std::size_t non_native_total = 0;
    /// Native gates outside OracleCore/DiffusionCore instructions.
    std::size_t wrapper_native_total = 0;
    /// Keyed by mnemonic ("sx", "rz", "mcz", ...).
    std::map<std::string, std::size_t> per_kind;
    /// Native gates per layer tag, keyed by the tag's text name.
    std::map<std::string, std::size_t> native_by_tag;

    std::size_t native_in(LayerTag tag) const;
};

CostReport report(const Circuit& circuit);

struct ComparisonReport {
    CostReport baseline;
    CostReport candidate;
    double wrapper_reduction_percent;
};

/// Throws ZeroBaseline when the baseline has no wrapper gates.
ComparisonReport compare(const Circuit& baseline, const Circuit& candidate);

/// Rewrites every MCZ into [H target, MCX, H target] with the last operand as
/// target; an arity-2 MCZ becomes [H, CNOT, H]. The new instructions keep the
/// MCZ's tag.
Circuit realize_mcz(const Circuit& circuit);

}  // namespace ysup
