#pragma once

#include "ysup/circuit.hpp"
#include "ysup/gate.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ysup {

inline constexpr std::size_t kMaxSimulatedQubits = 20;
inline constexpr std::size_t kMaxUnitaryQubits = 10;

/// Dense pure state. Bit i of an amplitude index is the value of qubit i.
class Statevector {
public:
    /// |0...0>.
    static Statevector zero(std::size_t num_qubits);
    static Statevector basis(std::size_t num_qubits, std::uint64_t index);

    /// Throws DimensionMismatch when amps.size() != 2^num_qubits and
    /// InvalidArgument when the norm is off by more than 1e-12.
    Statevector(std::size_t num_qubits, std::vector<Complex> amps);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    Complex operator[](std::uint64_t index) const { return amps_[index]; }
    double norm() const;

    /// Applies one instruction in place using stride arithmetic.
    void apply(const Instruction& instr);

private:
    Statevector(std::size_t num_qubits, std::vector<Complex> amps, bool /*trusted*/)
        : num_qubits_(num_qubits), amps_(std::move(amps)) {}

    std::size_t num_qubits_;
    std::vector<Complex> amps_;
};

/// Runs `circuit` from |0...0>. Throws SizeCapExceeded above 20 qubits.
Statevector run(const Circuit& circuit);
/// Throws DimensionMismatch when the register sizes differ.
Statevector run(const Circuit& circuit, const Statevector& initial);

/// Full 2^n x 2^n unitary, column j being the image of basis state j. Built by
/// explicit embedding of each gate's local action, independent of run().
/// Throws SizeCapExceeded above 10 qubits.
Matrix unitary(const Circuit& circuit);

struct EquivalenceReport {
    bool equal;
    double phase;     ///< phi with A ~= e^{i phi} B, in (-pi, pi].
    double residual;  ///< max |A - e^{i phi} B| over entries.
};

/// Phase is read off the largest-magnitude entry of `b`.
/// Throws DimensionMismatch or AllZeroMatrix.
EquivalenceReport equiv_global_phase(const Matrix& a, const Matrix& b, double tol);

struct BlochVector {
    double x;
    double y;
    double z;
};

/// Throws NotSingleQubit for n != 1.
BlochVector bloch(const Statevector& state);

}  // namespace ysup
