#include "ysup/distribution.hpp"

#include "ysup/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ysup {

std::string to_bitstring(std::uint64_t index, std::size_t num_qubits) {
    std::string bits(num_qubits, '0');
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if ((index >> q) & 1U) {
            bits[num_qubits - 1 - q] = '1';
        }
    }
    return bits;
}

std::uint64_t from_bitstring(std::string_view bits) {
    if (bits.empty() || bits.size() > 63) {
        throw Error(ErrorCode::InvalidArgument, "bitstring length must be in [1, 63]");
    }
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw Error(ErrorCode::InvalidArgument, "bitstring may only contain 0 and 1");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return index;
}

Distribution::Distribution(std::size_t num_qubits, Table table)
    : num_qubits_(num_qubits), table_(std::move(table)) {
    for (const auto& [outcome, p] : table_) {
        if (outcome.size() != num_qubits_ || outcome.find_first_not_of("01") != std::string::npos) {
            throw Error(ErrorCode::InvalidArgument, "outcome '" + outcome + "' is not a " +
                                                        std::to_string(num_qubits_) + "-bit string");
        }
        if (!(p >= 0.0 && p <= 1.0)) {
            throw Error(ErrorCode::InvalidArgument, "probability of '" + outcome + "' outside [0, 1]");
        }
    }
    if (!table_.empty() && std::abs(total() - 1.0) > 1e-9) {
        throw Error(ErrorCode::InvalidArgument, "probabilities sum to " + std::to_string(total()));
    }
}

double Distribution::operator[](const std::string& outcome) const {
    const auto it = table_.find(outcome);
    return it == table_.end() ? 0.0 : it->second;
}

double Distribution::total() const {
    double sum = 0.0;
    for (const auto& [outcome, p] : table_) {
        sum += p;
    }
    return sum;
}

Distribution probabilities(const Statevector& state) {
    Distribution::Table table;
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p > 0.0) {
            table.emplace(to_bitstring(i, state.num_qubits()), std::min(p, 1.0));
        }
    }
    return Distribution(state.num_qubits(), std::move(table));
}

Counts sample(const Distribution& dist, std::uint64_t shots, std::uint64_t seed) {
    if (dist.empty()) {
        throw Error(ErrorCode::EmptyDistribution, "cannot sample from an empty distribution");
    }
    if (shots == 0) {
        throw Error(ErrorCode::InvalidArgument, "shots must be at least 1");
    }
    std::vector<const std::string*> outcomes;
    std::vector<double> cumulative;
    double running = 0.0;
    for (const auto& [outcome, p] : dist.table()) {
        if (p <= 0.0) {
            continue;
        }
        running += p;
        outcomes.push_back(&outcome);
        cumulative.push_back(running);
    }
    if (outcomes.empty()) {
        throw Error(ErrorCode::EmptyDistribution, "distribution has no outcome with positive probability");
    }

    std::mt19937_64 engine(seed);
    Counts counts;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53 * running;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const auto pick = (it == cumulative.end()) ? cumulative.size() - 1
                                                   : static_cast<std::size_t>(it - cumulative.begin());
        ++counts[*outcomes[pick]];
    }
    return counts;
}

Distribution normalize(const Counts& counts, std::size_t num_qubits) {
    std::uint64_t shots = 0;
    for (const auto& [outcome, c] : counts) {
        shots += c;
    }
    Distribution::Table table;
    if (shots > 0) {
        for (const auto& [outcome, c] : counts) {
            table.emplace(outcome, static_cast<double>(c) / static_cast<double>(shots));
        }
    }
    return Distribution(num_qubits, std::move(table));
}

double tvd(const Distribution& a, const Distribution& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(ErrorCode::QubitCountMismatch, "distributions over " + std::to_string(a.num_qubits()) +
                                                       " and " + std::to_string(b.num_qubits()) + " qubits");
    }
    double sum = 0.0;
    for (const auto& [outcome, p] : a.table()) {
        sum += std::abs(p - b[outcome]);
    }
    for (const auto& [outcome, q] : b.table()) {
        if (!a.table().contains(outcome)) {
            sum += q;
        }
    }
    return std::min(1.0, 0.5 * sum);
}

}  // namespace ysup
