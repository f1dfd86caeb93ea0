#pragma once

#include "ysup/circuit.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace ysup {

// Line-oriented circuit text, one statement per line, '#' starts a comment:
//
//   qubits 4
//   h q0 @superposition
//   rz(1.57079632679) q1
//   mcz q0 q1 q2 q3 @oraclecore
//   measure all
//
// Mnemonics: id x sx sxdg h z rz(<radians>) cx mcz mcx. Tags: @superposition
// @oraclecore @difformer @difx @difcore @diflatter. `measure all` may appear
// once, as the last statement.

/// Throws MissingHeader, SyntaxError, UnknownGate or OutOfRangeQubit, each
/// carrying the 1-based line number.
Circuit parse_circuit(std::string_view text);

/// Canonical text: header, one instruction per line, RZ angles with 12
/// significant digits, tags only when not Untagged, trailing newline.
std::string emit_circuit(const Circuit& circuit);

/// printf "%.12g", with negative zero printed as "0".
std::string format_angle(double theta);

/// Accepts the tag name without the leading '@'.
std::optional<LayerTag> parse_tag(std::string_view name);

}  // namespace ysup
