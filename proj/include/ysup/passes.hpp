#pragma once

#include "ysup/circuit.hpp"

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ysup {

/// Three-gate native realization of H on one qubit, in time order:
/// RZ(first), SX, RZ(last). As a matrix this is RZ(last) * SX * RZ(first).
struct NativeHSequence {
    double first;
    double last;

    /// Reads the written sequence {RZ(left) SX RZ(right)} as the matrix
    /// product RZ(left) * SX * RZ(right), so RZ(right) comes first in time.
    static NativeHSequence from_written(double left, double right) { return {right, left}; }

    friend bool operator==(const NativeHSequence&, const NativeHSequence&) = default;
};

/// How decompose_h chooses a sequence per instruction tag.
///
/// SafeSymmetric: every H becomes {RZ(pi/2) SX RZ(pi/2)} = e^{-i pi/4} H, so
/// the circuit unitary is preserved up to global phase.
///
/// PaperFig1b: tag-directed. Superposition H uses {RZ(-pi/2) SX RZ(+pi/2)},
/// DiffusionFormer H uses {RZ(+pi/2) SX RZ(-pi/2)}, every other H uses the
/// symmetric sequence. Individually the asymmetric sequences realize Z*H and
/// H*Z (up to phase); the Z layers meet around the diagonal oracle and cancel.
/// Observed equivalence on builder Grover circuits with one iteration: the
/// full unitary is preserved up to global phase. With two or more iterations
/// the second former layer has no partner and the output distribution is
/// NOT preserved, so this mode is only meaningful for single-loop circuits.
/// Using the symmetric sequence for the superposition layer together with the
/// asymmetric former layer also breaks the distribution.
enum class DecomposeMode { SafeSymmetric, PaperFig1b };

NativeHSequence h_sequence(DecomposeMode mode, LayerTag tag);

/// Replaces every H by its native sequence on the same qubit with the same tag.
Circuit decompose_h(const Circuit& circuit, DecomposeMode mode = DecomposeMode::SafeSymmetric);

/// Moves superposition onto the Y axis: Superposition H -> SX,
/// DiffusionFormer H -> SXDG, DiffusionLatter H -> SX. Core H are kept.
/// Throws UntaggedH if any H carries no tag.
Circuit substitute_axis(const Circuit& circuit);

/// Every X becomes SX, SX (exact identity, no phase).
Circuit expand_x(const Circuit& circuit);

/// Peephole cancellation to a fixpoint. Pairs on the same qubit with no
/// intervening instruction on that qubit: (SX, SXDG), (SXDG, SX), (X, X) and
/// (H, H) vanish; RZ(a), RZ(b) merge into RZ(canonical(a + b)), dropped when
/// zero. Identity gates are removed. The merged RZ keeps the earlier tag.
Circuit cancel(const Circuit& circuit);

enum class Pass { DecomposeHSafe, DecomposeHPaper, SubstituteAxis, ExpandX, Cancel };

std::string_view pass_name(Pass pass) noexcept;
/// Throws UnknownPass.
Pass parse_pass(std::string_view name);
/// Comma-separated list, e.g. "substitute-axis,expand-x,cancel". Empty
/// string yields an empty list.
std::vector<Pass> parse_pass_list(std::string_view names);

Circuit apply_pass(const Circuit& circuit, Pass pass);

struct PassLogEntry {
    std::string pass;
    std::size_t before;
    std::size_t after;

    friend bool operator==(const PassLogEntry&, const PassLogEntry&) = default;
};

using PassLog = std::vector<PassLogEntry>;

std::pair<Circuit, PassLog> pipeline(const Circuit& circuit, std::span<const Pass> passes);

}  // namespace ysup
