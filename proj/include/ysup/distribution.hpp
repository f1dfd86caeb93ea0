#pragma once

#include "ysup/statevector.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace ysup {

/// Outcome string for a basis index: character i is qubit n-1-i, so q0 is
/// the rightmost character.
std::string to_bitstring(std::uint64_t index, std::size_t num_qubits);
/// Inverse of to_bitstring. Throws InvalidArgument on non-binary input.
std::uint64_t from_bitstring(std::string_view bits);

/// Outcome probabilities keyed by bitstring. Outcomes absent from the table
/// have probability 0.
class Distribution {
public:
    using Table = std::map<std::string, double>;

    explicit Distribution(std::size_t num_qubits) : num_qubits_(num_qubits) {}
    /// Throws InvalidArgument on malformed keys, probabilities outside [0, 1],
    /// or a non-empty table whose sum is off from 1 by more than 1e-9.
    Distribution(std::size_t num_qubits, Table table);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    const Table& table() const noexcept { return table_; }
    bool empty() const noexcept { return table_.empty(); }
    double operator[](const std::string& outcome) const;
    double total() const;

private:
    std::size_t num_qubits_;
    Table table_;
};

/// Exact |amplitude|^2 for every outcome with nonzero probability.
Distribution probabilities(const Statevector& state);

using Counts = std::map<std::string, std::uint64_t>;

/// Multinomial draw of `shots` outcomes. Uses std::mt19937_64 seeded with
/// `seed`; each shot maps the top 53 bits of one draw to u in [0, total) and
/// picks the first outcome, in ascending bitstring order, whose cumulative
/// probability exceeds u. Throws EmptyDistribution or InvalidArgument for
/// zero shots.
Counts sample(const Distribution& dist, std::uint64_t shots, std::uint64_t seed);

/// Empirical distribution of a counts table.
Distribution normalize(const Counts& counts, std::size_t num_qubits);

/// Total variation distance. Throws QubitCountMismatch.
double tvd(const Distribution& a, const Distribution& b);

}  // namespace ysup
