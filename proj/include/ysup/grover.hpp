#pragma once

#include "ysup/circuit.hpp"
#include "ysup/distribution.hpp"

#include <cstddef>
#include <string>

namespace ysup {

/// Bloch-sphere axis the superposition states are prepared on: X uses H
/// (|+>, |->), Y uses SX (|-i>, |+i>).
enum class Axis { X, Y };

struct GroverSpec {
    std::size_t num_qubits = 2;
    /// Marked outcome, most significant qubit first (q0 is the last character).
    std::string marked;
    std::size_t iterations = 1;
    Axis axis = Axis::X;
    bool include_measure = false;
};

/// Throws TooFewQubits (n < 2), BadMarkedLength (length != n or non-binary
/// characters) or InvalidArgument (zero iterations).
void validate(const GroverSpec& spec);

/// Superposition layer, then `iterations` rounds of [phase oracle, diffusion].
/// The oracle conjugates an n-qubit MCZ with X on every qubit whose marked bit
/// is 0. The diffusion is former layer, X, MCZ, X, latter layer; on the X axis
/// both wrapper layers are H, on the Y axis former is SXDG and latter is SX.
Circuit build_grover(const GroverSpec& spec);

/// The superposition layer on its own.
Circuit build_superposition(std::size_t num_qubits, Axis axis);
/// One diffusion operator on its own.
Circuit build_diffusion(std::size_t num_qubits, Axis axis);

/// Closed form for one marked item: P(marked) = sin^2((2k+1) theta) with
/// theta = asin(2^{-n/2}); the rest is spread evenly over the other outcomes.
Distribution reference_distribution(const GroverSpec& spec);

/// floor(pi/4 * 2^{n/2}). Never applied implicitly by the builder.
std::size_t optimal_iterations(std::size_t num_qubits);

}  // namespace ysup
