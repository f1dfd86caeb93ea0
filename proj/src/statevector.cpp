#include "ysup/statevector.hpp"

#include "ysup/error.hpp"

#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ysup {

namespace {

constexpr double kNormTolerance = 1e-12;

double squared_norm(std::span<const Complex> amps) {
    double sum = 0.0;
    for (const auto& a : amps) {
        sum += std::norm(a);
    }
    return sum;
}

void check_simulable(std::size_t num_qubits) {
    if (num_qubits > kMaxSimulatedQubits) {
        throw Error(ErrorCode::SizeCapExceeded, "statevector simulation is capped at " +
                                                    std::to_string(kMaxSimulatedQubits) + " qubits, got " +
                                                    std::to_string(num_qubits));
    }
}

std::uint64_t mask_of(std::span<const std::size_t> qubits) {
    std::uint64_t mask = 0;
    for (auto q : qubits) {
        mask |= std::uint64_t{1} << q;
    }
    return mask;
}

void apply_single(std::vector<Complex>& amps, std::size_t qubit, const Matrix& m) {
    const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
    const std::uint64_t stride = std::uint64_t{1} << qubit;
    const std::uint64_t dim = amps.size();
    for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
        for (std::uint64_t i = base; i < base + stride; ++i) {
            const Complex a0 = amps[i];
            const Complex a1 = amps[i + stride];
            amps[i] = m00 * a0 + m01 * a1;
            amps[i + stride] = m10 * a0 + m11 * a1;
        }
    }
}

void apply_controlled_flip(std::vector<Complex>& amps, std::uint64_t controls, std::uint64_t target) {
    const std::uint64_t dim = amps.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & controls) == controls && (i & target) == 0) {
            std::swap(amps[i], amps[i | target]);
        }
    }
}

void apply_phase_flip(std::vector<Complex>& amps, std::uint64_t mask) {
    const std::uint64_t dim = amps.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & mask) == mask) {
            amps[i] = -amps[i];
        }
    }
}

}  // namespace

Statevector Statevector::zero(std::size_t num_qubits) { return basis(num_qubits, 0); }

Statevector Statevector::basis(std::size_t num_qubits, std::uint64_t index) {
    check_simulable(num_qubits);
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (index >= dim) {
        throw Error(ErrorCode::InvalidArgument, "basis index out of range");
    }
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    amps[index] = Complex{1.0, 0.0};
    return Statevector(num_qubits, std::move(amps), true);
}

Statevector::Statevector(std::size_t num_qubits, std::vector<Complex> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
    check_simulable(num_qubits);
    if (amps_.size() != (std::size_t{1} << num_qubits)) {
        throw Error(ErrorCode::DimensionMismatch, "expected 2^" + std::to_string(num_qubits) + " amplitudes, got " +
                                                      std::to_string(amps_.size()));
    }
    if (std::abs(std::sqrt(squared_norm(amps_)) - 1.0) > kNormTolerance) {
        throw Error(ErrorCode::InvalidArgument, "statevector is not normalized");
    }
}

double Statevector::norm() const { return std::sqrt(squared_norm(amps_)); }

void Statevector::apply(const Instruction& instr) {
    validate(instr, num_qubits_);
    switch (instr.kind.type()) {
        case GateType::I:
            return;
        case GateType::CNOT:
            apply_controlled_flip(amps_, std::uint64_t{1} << instr.qubits[0], std::uint64_t{1} << instr.qubits[1]);
            return;
        case GateType::MCZ:
            apply_phase_flip(amps_, mask_of(instr.qubits));
            return;
        case GateType::MCX: {
            const std::span<const std::size_t> controls(instr.qubits.data(), instr.qubits.size() - 1);
            apply_controlled_flip(amps_, mask_of(controls), std::uint64_t{1} << instr.qubits.back());
            return;
        }
        default:
            apply_single(amps_, instr.qubits[0], gate_matrix(instr.kind));
            return;
    }
}

Statevector run(const Circuit& circuit) { return run(circuit, Statevector::zero(circuit.num_qubits())); }

Statevector run(const Circuit& circuit, const Statevector& initial) {
    check_simulable(circuit.num_qubits());
    if (initial.num_qubits() != circuit.num_qubits()) {
        throw Error(ErrorCode::DimensionMismatch, "initial state has " + std::to_string(initial.num_qubits()) +
                                                      " qubits, circuit has " +
                                                      std::to_string(circuit.num_qubits()));
    }
    Statevector state = initial;
    for (const auto& op : circuit.ops()) {
        state.apply(op);
    }
    return state;
}

namespace {

using SparseMatrix = Eigen::SparseMatrix<Complex>;
using Triplet = Eigen::Triplet<Complex>;

/// Embeds one instruction into the full register as a sparse 2^n x 2^n matrix.
SparseMatrix embed(const Instruction& instr, std::size_t num_qubits) {
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    const auto& qs = instr.qubits;
    const std::uint64_t operand_mask = mask_of(qs);
    std::vector<Triplet> triplets;
    triplets.reserve(dim * 2);

    const GateAction action = gate_action(instr.kind);
    if (const auto* dense = std::get_if<DenseAction>(&action)) {
        const Matrix& local = dense->matrix;
        const std::size_t local_dim = std::size_t{1} << qs.size();
        for (std::uint64_t col = 0; col < dim; ++col) {
            std::size_t local_col = 0;
            for (std::size_t j = 0; j < qs.size(); ++j) {
                local_col |= static_cast<std::size_t>((col >> qs[j]) & 1U) << j;
            }
            for (std::size_t local_row = 0; local_row < local_dim; ++local_row) {
                const Complex v = local(static_cast<Eigen::Index>(local_row), static_cast<Eigen::Index>(local_col));
                if (v == Complex{0.0, 0.0}) {
                    continue;
                }
                std::uint64_t row = col & ~operand_mask;
                for (std::size_t j = 0; j < qs.size(); ++j) {
                    row |= static_cast<std::uint64_t>((local_row >> j) & 1U) << qs[j];
                }
                triplets.emplace_back(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col), v);
            }
        }
    } else if (std::holds_alternative<PhaseFlipAllOnes>(action)) {
        for (std::uint64_t col = 0; col < dim; ++col) {
            const double sign = ((col & operand_mask) == operand_mask) ? -1.0 : 1.0;
            triplets.emplace_back(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col), Complex{sign, 0.0});
        }
    } else {
        const std::uint64_t target = std::uint64_t{1} << qs.back();
        const std::uint64_t controls = operand_mask & ~target;
        for (std::uint64_t col = 0; col < dim; ++col) {
            const std::uint64_t row = ((col & controls) == controls) ? (col ^ target) : col;
            triplets.emplace_back(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col), Complex{1.0, 0.0});
        }
    }
    SparseMatrix g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    g.setFromTriplets(triplets.begin(), triplets.end());
    return g;
}

}  // namespace

Matrix unitary(const Circuit& circuit) {
    const std::size_t n = circuit.num_qubits();
    if (n > kMaxUnitaryQubits) {
        throw Error(ErrorCode::SizeCapExceeded, "unitary extraction is capped at " +
                                                    std::to_string(kMaxUnitaryQubits) + " qubits, got " +
                                                    std::to_string(n));
    }
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
    Matrix u = Matrix::Identity(dim, dim);
    for (const auto& op : circuit.ops()) {
        if (op.kind.type() == GateType::I) {
            continue;
        }
        u = embed(op, n) * u;
    }
    return u;
}

EquivalenceReport equiv_global_phase(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "matrices differ in shape");
    }
    Eigen::Index best_row = 0;
    Eigen::Index best_col = 0;
    const double best = b.cwiseAbs().maxCoeff(&best_row, &best_col);
    if (b.size() == 0 || best == 0.0) {
        throw Error(ErrorCode::AllZeroMatrix, "reference matrix has no nonzero entry");
    }
    double phase = std::arg(a(best_row, best_col) / b(best_row, best_col));
    if (phase <= -std::numbers::pi) {
        phase += 2.0 * std::numbers::pi;
    }
    const Complex factor = std::polar(1.0, phase);
    const double residual = (a - factor * b).cwiseAbs().maxCoeff();
    return EquivalenceReport{residual <= tol, phase, residual};
}

BlochVector bloch(const Statevector& state) {
    if (state.num_qubits() != 1) {
        throw Error(ErrorCode::NotSingleQubit, "bloch vector needs a 1-qubit state, got " +
                                                   std::to_string(state.num_qubits()) + " qubits");
    }
    const Complex a = state[0];
    const Complex b = state[1];
    const Complex cross = std::conj(a) * b;
    return BlochVector{2.0 * cross.real(), 2.0 * cross.imag(), std::norm(a) - std::norm(b)};
}

}  // namespace ysup
