#include "ysup/passes.hpp"

#include "ysup/error.hpp"

#include <cmath>
#include <numbers>
#include <optional>

namespace ysup {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
// Merged RZ angles this close to zero are treated as identity.
constexpr double kZeroAngle = 1e-12;

bool cancels(GateType a, GateType b) {
    return (a == GateType::SX && b == GateType::SXDG) || (a == GateType::SXDG && b == GateType::SX) ||
           (a == GateType::X && b == GateType::X) || (a == GateType::H && b == GateType::H);
}

Circuit empty_like(const Circuit& like) {
    Circuit out(like.num_qubits());
    out.set_measure_all(like.measure_all());
    return out;
}

// One left-to-right sweep with a per-qubit stack of surviving instructions.
// A single-qubit gate only interacts with the top of its qubit's stack, and
// removals expose the previous entry, so chains like X SX SXDG X collapse.
Circuit cancel_sweep(const Circuit& circuit) {
    std::vector<std::optional<Instruction>> kept;
    std::vector<std::vector<std::size_t>> stacks(circuit.num_qubits());

    for (const auto& op : circuit.ops()) {
        const GateType type = op.kind.type();
        if (type == GateType::I) {
            continue;
        }
        if (!op.kind.is_single_qubit()) {
            for (auto q : op.qubits) {
                stacks[q].push_back(kept.size());
            }
            kept.emplace_back(op);
            continue;
        }
        if (type == GateType::RZ && std::abs(canonical_angle(op.kind.theta())) <= kZeroAngle) {
            continue;
        }

        auto& stack = stacks[op.qubits[0]];
        if (!stack.empty()) {
            auto& top = kept[stack.back()];
            if (top->kind.is_single_qubit()) {
                const GateType top_type = top->kind.type();
                if (cancels(top_type, type)) {
                    top.reset();
                    stack.pop_back();
                    continue;
                }
                if (top_type == GateType::RZ && type == GateType::RZ) {
                    const double merged = canonical_angle(top->kind.theta() + op.kind.theta());
                    if (std::abs(merged) <= kZeroAngle) {
                        top.reset();
                        stack.pop_back();
                    } else {
                        top->kind = GateKind::rz(merged);
                    }
                    continue;
                }
            }
        }
        stack.push_back(kept.size());
        kept.emplace_back(op);
    }

    Circuit out = empty_like(circuit);
    for (auto& instr : kept) {
        if (instr) {
            out.push_back(std::move(*instr));
        }
    }
    return out;
}

void emit_sequence(Circuit& out, std::size_t qubit, LayerTag tag, NativeHSequence seq) {
    out.push_back(GateKind::rz(seq.first), {qubit}, tag);
    out.push_back(GateKind::sx(), {qubit}, tag);
    out.push_back(GateKind::rz(seq.last), {qubit}, tag);
}

}  // namespace

NativeHSequence h_sequence(DecomposeMode mode, LayerTag tag) {
    const auto symmetric = NativeHSequence::from_written(kHalfPi, kHalfPi);
    if (mode == DecomposeMode::SafeSymmetric) {
        return symmetric;
    }
    switch (tag) {
        case LayerTag::Superposition:
            return NativeHSequence::from_written(-kHalfPi, kHalfPi);
        case LayerTag::DiffusionFormer:
            return NativeHSequence::from_written(kHalfPi, -kHalfPi);
        default:
            return symmetric;
    }
}

Circuit decompose_h(const Circuit& circuit, DecomposeMode mode) {
    Circuit out = empty_like(circuit);
    for (const auto& op : circuit.ops()) {
        if (op.kind.type() == GateType::H) {
            emit_sequence(out, op.qubits[0], op.tag, h_sequence(mode, op.tag));
        } else {
            out.push_back(op);
        }
    }
    return out;
}

Circuit substitute_axis(const Circuit& circuit) {
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const auto& op = circuit[i];
        if (op.kind.type() == GateType::H && op.tag == LayerTag::Untagged) {
            throw Error(ErrorCode::UntaggedH, "instruction " + std::to_string(i) +
                                                  " is an untagged h; layer structure is required");
        }
    }
    Circuit out = empty_like(circuit);
    for (const auto& op : circuit.ops()) {
        Instruction next = op;
        if (op.kind.type() == GateType::H) {
            switch (op.tag) {
                case LayerTag::Superposition:
                case LayerTag::DiffusionLatter:
                    next.kind = GateKind::sx();
                    break;
                case LayerTag::DiffusionFormer:
                    next.kind = GateKind::sxdg();
                    break;
                default:
                    break;
            }
        }
        out.push_back(std::move(next));
    }
    return out;
}

Circuit expand_x(const Circuit& circuit) {
    Circuit out = empty_like(circuit);
    for (const auto& op : circuit.ops()) {
        if (op.kind.type() == GateType::X) {
            out.push_back(GateKind::sx(), op.qubits, op.tag);
            out.push_back(GateKind::sx(), op.qubits, op.tag);
        } else {
            out.push_back(op);
        }
    }
    return out;
}

Circuit cancel(const Circuit& circuit) {
    Circuit current = cancel_sweep(circuit);
    while (true) {
        Circuit next = cancel_sweep(current);
        if (next.size() == current.size()) {
            return next;
        }
        current = std::move(next);
    }
}

std::string_view pass_name(Pass pass) noexcept {
    switch (pass) {
        case Pass::DecomposeHSafe: return "decompose-h-safe";
        case Pass::DecomposeHPaper: return "decompose-h-paper";
        case Pass::SubstituteAxis: return "substitute-axis";
        case Pass::ExpandX: return "expand-x";
        case Pass::Cancel: return "cancel";
    }
    return "?";
}

Pass parse_pass(std::string_view name) {
    for (Pass p : {Pass::DecomposeHSafe, Pass::DecomposeHPaper, Pass::SubstituteAxis, Pass::ExpandX, Pass::Cancel}) {
        if (pass_name(p) == name) {
            return p;
        }
    }
    throw Error(ErrorCode::UnknownPass, "unknown pass '" + std::string(name) +
                                            "' (expected decompose-h-safe, decompose-h-paper, "
                                            "substitute-axis, expand-x or cancel)");
}

std::vector<Pass> parse_pass_list(std::string_view names) {
    std::vector<Pass> passes;
    if (names.empty()) {
        return passes;
    }
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = names.find(',', start);
        passes.push_back(parse_pass(names.substr(start, comma == std::string_view::npos ? names.npos : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return passes;
}

Circuit apply_pass(const Circuit& circuit, Pass pass) {
    switch (pass) {
        case Pass::DecomposeHSafe: return decompose_h(circuit, DecomposeMode::SafeSymmetric);
        case Pass::DecomposeHPaper: return decompose_h(circuit, DecomposeMode::PaperFig1b);
        case Pass::SubstituteAxis: return substitute_axis(circuit);
        case Pass::ExpandX: return expand_x(circuit);
        case Pass::Cancel: return cancel(circuit);
    }
    throw Error(ErrorCode::UnknownPass, "unknown pass");
}

std::pair<Circuit, PassLog> pipeline(const Circuit& circuit, std::span<const Pass> passes) {
    Circuit current = circuit;
    PassLog log;
    for (Pass pass : passes) {
        Circuit next = apply_pass(current, pass);
        log.push_back(PassLogEntry{std::string(pass_name(pass)), current.size(), next.size()});
        current = std::move(next);
    }
    return {std::move(current), std::move(log)};
}

}  // namespace ysup
