#include "ysup/gate.hpp"

#include "ysup/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ysup {

GateKind GateKind::rz(double theta) {
    if (!std::isfinite(theta)) {
        throw Error(ErrorCode::InvalidAngle, "rz angle must be finite");
    }
    return GateKind(GateType::RZ, theta, 1);
}

GateKind GateKind::mcz(std::size_t arity) {
    if (arity < 2) {
        throw Error(ErrorCode::ArityMismatch, "mcz needs at least 2 operands, got " + std::to_string(arity));
    }
    return GateKind(GateType::MCZ, 0.0, arity);
}

GateKind GateKind::mcx(std::size_t arity) {
    if (arity < 3) {
        throw Error(ErrorCode::ArityMismatch, "mcx needs at least 3 operands, got " + std::to_string(arity));
    }
    return GateKind(GateType::MCX, 0.0, arity);
}

bool GateKind::is_native() const noexcept {
    switch (type_) {
        case GateType::I:
        case GateType::X:
        case GateType::SX:
        case GateType::RZ:
        case GateType::CNOT:
            return true;
        default:
            return false;
    }
}

std::string_view GateKind::mnemonic() const noexcept {
    switch (type_) {
        case GateType::I: return "id";
        case GateType::X: return "x";
        case GateType::SX: return "sx";
        case GateType::SXDG: return "sxdg";
        case GateType::RZ: return "rz";
        case GateType::H: return "h";
        case GateType::Z: return "z";
        case GateType::CNOT: return "cx";
        case GateType::MCZ: return "mcz";
        case GateType::MCX: return "mcx";
    }
    return "?";
}

double canonical_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double t = std::fmod(theta, two_pi);
    if (t <= -std::numbers::pi) {
        t += two_pi;
    } else if (t > std::numbers::pi) {
        t -= two_pi;
    }
    return t;
}

std::string_view to_string(LayerTag tag) noexcept {
    switch (tag) {
        case LayerTag::Untagged: return "untagged";
        case LayerTag::Superposition: return "superposition";
        case LayerTag::OracleCore: return "oraclecore";
        case LayerTag::DiffusionFormer: return "difformer";
        case LayerTag::DiffusionX: return "difx";
        case LayerTag::DiffusionCore: return "difcore";
        case LayerTag::DiffusionLatter: return "diflatter";
    }
    return "?";
}

bool is_core(LayerTag tag) noexcept {
    return tag == LayerTag::OracleCore || tag == LayerTag::DiffusionCore;
}

namespace {

Matrix two_by_two(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace

GateAction gate_action(const GateKind& kind) {
    const Complex one{1.0, 0.0};
    const Complex zero{0.0, 0.0};
    switch (kind.type()) {
        case GateType::I:
            return DenseAction{two_by_two(one, zero, zero, one)};
        case GateType::X:
            return DenseAction{two_by_two(zero, one, one, zero)};
        case GateType::SX: {
            // Principal square root of X: SX * SX == X with no rounding.
            const Complex p{0.5, 0.5};
            const Complex m{0.5, -0.5};
            return DenseAction{two_by_two(p, m, m, p)};
        }
        case GateType::SXDG: {
            const Complex p{0.5, 0.5};
            const Complex m{0.5, -0.5};
            return DenseAction{two_by_two(m, p, p, m)};
        }
        case GateType::RZ: {
            const double half = kind.theta() / 2.0;
            return DenseAction{two_by_two(std::polar(1.0, -half), zero, zero, std::polar(1.0, half))};
        }
        case GateType::H: {
            const Complex s{1.0 / std::numbers::sqrt2, 0.0};
            return DenseAction{two_by_two(s, s, s, -s)};
        }
        case GateType::Z:
            return DenseAction{two_by_two(one, zero, zero, -one)};
        case GateType::CNOT: {
            // Local index = control + 2 * target.
            Matrix m = Matrix::Zero(4, 4);
            m(0, 0) = one;
            m(2, 2) = one;
            m(3, 1) = one;
            m(1, 3) = one;
            return DenseAction{m};
        }
        case GateType::MCZ:
            return PhaseFlipAllOnes{kind.arity()};
        case GateType::MCX:
            return FlipTargetIfControls{kind.arity()};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown gate type");
}

Matrix gate_matrix(const GateKind& kind) {
    const GateAction action = gate_action(kind);
    if (const auto* dense = std::get_if<DenseAction>(&action)) {
        return dense->matrix;
    }
    const std::size_t arity = kind.arity();
    if (arity > 10) {
        throw Error(ErrorCode::SizeCapExceeded, "dense matrix for arity > 10 not supported");
    }
    const std::size_t dim = std::size_t{1} << arity;
    const std::size_t all = dim - 1;
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    if (std::holds_alternative<PhaseFlipAllOnes>(action)) {
        for (std::size_t i = 0; i < dim; ++i) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = (i == all) ? -1.0 : 1.0;
        }
    } else {
        const std::size_t target = std::size_t{1} << (arity - 1);
        const std::size_t controls = all & ~target;
        for (std::size_t col = 0; col < dim; ++col) {
            const std::size_t row = ((col & controls) == controls) ? (col ^ target) : col;
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
        }
    }
    return m;
}

}  // namespace ysup
