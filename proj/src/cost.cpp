#include "ysup/cost.hpp"

#include "ysup/error.hpp"

namespace ysup {

std::size_t CostReport::native_in(LayerTag tag) const {
    const auto it = native_by_tag.find(std::string(to_string(tag)));
    return it == native_by_tag.end() ? 0 : it->second;
}

CostReport report(const Circuit& circuit) {
    CostReport r;
    r.num_qubits = circuit.num_qubits();
    r.total = circuit.size();
    r.depth = depth(circuit);
    for (const auto& op : circuit.ops()) {
        ++r.per_kind[std::string(op.kind.mnemonic())];
        if (!op.kind.is_native()) {
            ++r.non_native_total;
            continue;
        }
        ++r.native_total;
        ++r.native_by_tag[std::string(to_string(op.tag))];
        if (!is_core(op.tag)) {
            ++r.wrapper_native_total;
        }
    }
    return r;
}

ComparisonReport compare(const Circuit& baseline, const Circuit& candidate) {
    ComparisonReport c{report(baseline), report(candidate), 0.0};
    if (c.baseline.wrapper_native_total == 0) {
        throw Error(ErrorCode::ZeroBaseline, "baseline circuit has no wrapper gates");
    }
    c.wrapper_reduction_percent = 100.0 * (1.0 - static_cast<double>(c.candidate.wrapper_native_total) /
                                                     static_cast<double>(c.baseline.wrapper_native_total));
    return c;
}

Circuit realize_mcz(const Circuit& circuit) {
    Circuit out(circuit.num_qubits());
    out.set_measure_all(circuit.measure_all());
    for (const auto& op : circuit.ops()) {
        if (op.kind.type() != GateType::MCZ) {
            out.push_back(op);
            continue;
        }
        const std::size_t target = op.qubits.back();
        const GateKind flip = op.kind.arity() == 2 ? GateKind::cnot() : GateKind::mcx(op.kind.arity());
        out.push_back(GateKind::h(), {target}, op.tag);
        out.push_back(flip, op.qubits, op.tag);
        out.push_back(GateKind::h(), {target}, op.tag);
    }
    return out;
}

}  // namespace ysup
