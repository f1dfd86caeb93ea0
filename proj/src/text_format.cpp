#include "ysup/text_format.hpp"

#include "ysup/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

namespace ysup {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

std::optional<GateKind> fixed_gate(std::string_view mnemonic) {
    if (mnemonic == "id") return GateKind::id();
    if (mnemonic == "x") return GateKind::x();
    if (mnemonic == "sx") return GateKind::sx();
    if (mnemonic == "sxdg") return GateKind::sxdg();
    if (mnemonic == "h") return GateKind::h();
    if (mnemonic == "z") return GateKind::z();
    if (mnemonic == "cx") return GateKind::cnot();
    return std::nullopt;
}

class LineParser {
public:
    LineParser(std::size_t line, std::size_t num_qubits) : line_(line), num_qubits_(num_qubits) {}

    Instruction parse(const std::vector<std::string_view>& tokens) const {
        const std::string_view mnemonic = tokens[0];
        if (!fixed_gate(mnemonic) && mnemonic != "rz" && !mnemonic.starts_with("rz(") && mnemonic != "mcz" && mnemonic != "mcx") {
            fail(ErrorCode::UnknownGate, "unknown gate '" + std::string(mnemonic) + "'");
        }
        std::size_t end = tokens.size();
        LayerTag tag = LayerTag::Untagged;
        if (end > 1 && tokens[end - 1].starts_with('@')) {
            const auto parsed = parse_tag(tokens[end - 1].substr(1));
            if (!parsed) {
                fail(ErrorCode::SyntaxError, "unknown tag '" + std::string(tokens[end - 1]) + "'");
            }
            tag = *parsed;
            --end;
        }
        std::vector<std::size_t> qubits;
        for (std::size_t i = 1; i < end; ++i) {
            qubits.push_back(parse_operand(tokens[i]));
        }
        if (qubits.empty()) {
            fail(ErrorCode::SyntaxError, "'" + std::string(mnemonic) + "' has no operands");
        }

        Instruction instr{gate_for(mnemonic, qubits.size()), std::move(qubits), tag};
        try {
            validate(instr, num_qubits_);
        } catch (const Error& e) {
            fail(ErrorCode::SyntaxError, e.what());
        }
        return instr;
    }

    [[noreturn]] void fail(ErrorCode code, const std::string& message) const { throw Error(code, message, line_); }

private:
    GateKind gate_for(std::string_view mnemonic, std::size_t operand_count) const {
        if (auto kind = fixed_gate(mnemonic)) {
            return *kind;
        }
        if (mnemonic == "rz") {
            fail(ErrorCode::SyntaxError, "rz needs an angle, e.g. rz(1.5)");
        }
        if (mnemonic.starts_with("rz(")) {
            if (!mnemonic.ends_with(')')) {
                fail(ErrorCode::SyntaxError, "unterminated rz angle");
            }
            double theta = 0.0;
            const auto body = mnemonic.substr(3, mnemonic.size() - 4);
            if (!parse_number(body, theta) || !std::isfinite(theta)) {
                fail(ErrorCode::SyntaxError, "bad rz angle '" + std::string(body) + "'");
            }
            return GateKind::rz(theta);
        }
        try {
            if (mnemonic == "mcz") return GateKind::mcz(operand_count);
            if (mnemonic == "mcx") return GateKind::mcx(operand_count);
        } catch (const Error& e) {
            fail(ErrorCode::SyntaxError, e.what());
        }
        fail(ErrorCode::UnknownGate, "unknown gate '" + std::string(mnemonic) + "'");
    }

    std::size_t parse_operand(std::string_view token) const {
        std::size_t q = 0;
        if (token.size() < 2 || token[0] != 'q' || token[1] == '+' || !parse_number(token.substr(1), q)) {
            fail(ErrorCode::SyntaxError, "bad operand '" + std::string(token) + "', expected q<index>");
        }
        if (q >= num_qubits_) {
            fail(ErrorCode::OutOfRangeQubit,
                 "qubit q" + std::to_string(q) + " outside register of " + std::to_string(num_qubits_));
        }
        return q;
    }

    std::size_t line_;
    std::size_t num_qubits_;
};

}  // namespace

std::optional<LayerTag> parse_tag(std::string_view name) {
    for (LayerTag tag : {LayerTag::Superposition, LayerTag::OracleCore, LayerTag::DiffusionFormer,
                         LayerTag::DiffusionX, LayerTag::DiffusionCore, LayerTag::DiffusionLatter}) {
        if (to_string(tag) == name) {
            return tag;
        }
    }
    return std::nullopt;
}

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    bool measured = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t newline = text.find('\n', pos);
        std::string_view line = text.substr(pos, newline == std::string_view::npos ? text.npos : newline - pos);
        pos = (newline == std::string_view::npos) ? text.size() + 1 : newline + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tokens = split_ws(line);
        if (tokens.empty()) {
            continue;
        }

        if (!circuit) {
            std::size_t n = 0;
            if (tokens[0] != "qubits") {
                throw Error(ErrorCode::MissingHeader, "expected 'qubits <n>' before any gate", line_no);
            }
            if (tokens.size() != 2 || !parse_number(tokens[1], n) || n == 0) {
                throw Error(ErrorCode::SyntaxError, "header must be 'qubits <n>' with n >= 1", line_no);
            }
            circuit.emplace(n);
            continue;
        }
        if (measured) {
            throw Error(ErrorCode::SyntaxError, "'measure all' must be the last statement", line_no);
        }
        if (tokens[0] == "qubits") {
            throw Error(ErrorCode::SyntaxError, "duplicate 'qubits' header", line_no);
        }
        if (tokens[0] == "measure") {
            if (tokens.size() != 2 || tokens[1] != "all") {
                throw Error(ErrorCode::SyntaxError, "only 'measure all' is supported", line_no);
            }
            measured = true;
            circuit->set_measure_all(true);
            continue;
        }
        circuit->push_back(LineParser(line_no, circuit->num_qubits()).parse(tokens));
    }
    if (!circuit) {
        throw Error(ErrorCode::MissingHeader, "no 'qubits <n>' header found");
    }
    return std::move(*circuit);
}

std::string format_angle(double theta) {
    if (theta == 0.0) {
        return "0";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", theta);
    return buf;
}

std::string emit_circuit(const Circuit& circuit) {
    std::string out = "qubits " + std::to_string(circuit.num_qubits()) + "\n";
    for (const auto& op : circuit.ops()) {
        out += op.kind.mnemonic();
        if (op.kind.type() == GateType::RZ) {
            out += "(" + format_angle(op.kind.theta()) + ")";
        }
        for (auto q : op.qubits) {
            out += " q" + std::to_string(q);
        }
        if (op.tag != LayerTag::Untagged) {
            out += " @";
            out += to_string(op.tag);
        }
        out += '\n';
    }
    if (circuit.measure_all()) {
        out += "measure all\n";
    }
    return out;
}

}  // namespace ysup
