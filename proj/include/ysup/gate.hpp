#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>

namespace ysup {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

enum class GateType : std::uint8_t { I, X, SX, SXDG, RZ, H, Z, CNOT, MCZ, MCX };

/// Gate kind with its parameters. RZ carries an angle in radians; MCZ and MCX
/// carry their operand count. For MCX the last operand is the target.
class GateKind {
public:
    static GateKind id() { return GateKind(GateType::I, 0.0, 1); }
    static GateKind x() { return GateKind(GateType::X, 0.0, 1); }
    static GateKind sx() { return GateKind(GateType::SX, 0.0, 1); }
    static GateKind sxdg() { return GateKind(GateType::SXDG, 0.0, 1); }
    static GateKind h() { return GateKind(GateType::H, 0.0, 1); }
    static GateKind z() { return GateKind(GateType::Z, 0.0, 1); }
    static GateKind cnot() { return GateKind(GateType::CNOT, 0.0, 2); }
    /// Throws InvalidAngle for NaN or infinite angles.
    static GateKind rz(double theta);
    /// Throws ArityMismatch when arity < 2.
    static GateKind mcz(std::size_t arity);
    /// Throws ArityMismatch when arity < 3.
    static GateKind mcx(std::size_t arity);

    GateType type() const noexcept { return type_; }
    double theta() const noexcept { return theta_; }
    std::size_t arity() const noexcept { return arity_; }

    /// Member of the device basis {I, SX, X, RZ, CNOT}.
    bool is_native() const noexcept;
    bool is_single_qubit() const noexcept { return arity_ == 1; }

    /// Lower-case mnemonic used by the text format and cost tables.
    std::string_view mnemonic() const noexcept;

    friend bool operator==(const GateKind&, const GateKind&) = default;

private:
    GateKind(GateType type, double theta, std::size_t arity) : type_(type), theta_(theta), arity_(arity) {}

    GateType type_;
    double theta_;
    std::size_t arity_;
};

/// Maps an angle into (-pi, pi]. RZ(canonical_angle(t)) equals RZ(t) up to a
/// global sign.
double canonical_angle(double theta);

/// Structural role of an instruction inside a Grover circuit.
enum class LayerTag : std::uint8_t {
    Untagged,
    Superposition,
    OracleCore,
    DiffusionFormer,
    DiffusionX,
    DiffusionCore,
    DiffusionLatter,
};

std::string_view to_string(LayerTag tag) noexcept;
bool is_core(LayerTag tag) noexcept;

// Gate semantics. Local matrices index operand j by bit j of the row/column
// index, so for CNOT (control, target) the control is the low bit.

struct DenseAction {
    Matrix matrix;
};

/// Negate the amplitude when every operand reads 1.
struct PhaseFlipAllOnes {
    std::size_t arity;
};

/// Flip the last operand when every other operand reads 1.
struct FlipTargetIfControls {
    std::size_t arity;
};

using GateAction = std::variant<DenseAction, PhaseFlipAllOnes, FlipTargetIfControls>;

GateAction gate_action(const GateKind& kind);

/// Dense local unitary of size 2^arity. MCZ/MCX are expanded from their rules,
/// which limits them to arity <= 10 here.
Matrix gate_matrix(const GateKind& kind);

}  // namespace ysup
