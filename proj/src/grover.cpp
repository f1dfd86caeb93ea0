#include "ysup/grover.hpp"

#include "ysup/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace ysup {

namespace {

std::vector<std::size_t> all_qubits(std::size_t n) {
    std::vector<std::size_t> qs(n);
    std::iota(qs.begin(), qs.end(), std::size_t{0});
    return qs;
}

void single_layer(Circuit& c, GateKind kind, LayerTag tag) {
    for (std::size_t q = 0; q < c.num_qubits(); ++q) {
        c.push_back(kind, {q}, tag);
    }
}

void add_superposition(Circuit& c, Axis axis) {
    single_layer(c, axis == Axis::X ? GateKind::h() : GateKind::sx(), LayerTag::Superposition);
}

void add_oracle(Circuit& c, const std::string& marked) {
    const std::size_t n = c.num_qubits();
    std::vector<std::size_t> zeros;
    for (std::size_t q = 0; q < n; ++q) {
        if (marked[n - 1 - q] == '0') {
            zeros.push_back(q);
        }
    }
    for (auto q : zeros) {
        c.push_back(GateKind::x(), {q}, LayerTag::OracleCore);
    }
    c.push_back(GateKind::mcz(n), all_qubits(n), LayerTag::OracleCore);
    for (auto q : zeros) {
        c.push_back(GateKind::x(), {q}, LayerTag::OracleCore);
    }
}

void add_diffusion(Circuit& c, Axis axis) {
    const std::size_t n = c.num_qubits();
    single_layer(c, axis == Axis::X ? GateKind::h() : GateKind::sxdg(), LayerTag::DiffusionFormer);
    single_layer(c, GateKind::x(), LayerTag::DiffusionX);
    c.push_back(GateKind::mcz(n), all_qubits(n), LayerTag::DiffusionCore);
    single_layer(c, GateKind::x(), LayerTag::DiffusionX);
    single_layer(c, axis == Axis::X ? GateKind::h() : GateKind::sx(), LayerTag::DiffusionLatter);
}

}  // namespace

void validate(const GroverSpec& spec) {
    if (spec.num_qubits < 2) {
        throw Error(ErrorCode::TooFewQubits, "grover search needs at least 2 qubits");
    }
    if (spec.marked.size() != spec.num_qubits || spec.marked.find_first_not_of("01") != std::string::npos) {
        throw Error(ErrorCode::BadMarkedLength, "marked outcome '" + spec.marked + "' is not a " +
                                                    std::to_string(spec.num_qubits) + "-bit string");
    }
    if (spec.iterations == 0) {
        throw Error(ErrorCode::InvalidArgument, "iterations must be at least 1");
    }
}

Circuit build_grover(const GroverSpec& spec) {
    validate(spec);
    Circuit c(spec.num_qubits);
    add_superposition(c, spec.axis);
    for (std::size_t k = 0; k < spec.iterations; ++k) {
        add_oracle(c, spec.marked);
        add_diffusion(c, spec.axis);
    }
    c.set_measure_all(spec.include_measure);
    return c;
}

Circuit build_superposition(std::size_t num_qubits, Axis axis) {
    Circuit c(num_qubits);
    add_superposition(c, axis);
    return c;
}

Circuit build_diffusion(std::size_t num_qubits, Axis axis) {
    if (num_qubits < 2) {
        throw Error(ErrorCode::TooFewQubits, "diffusion needs at least 2 qubits");
    }
    Circuit c(num_qubits);
    add_diffusion(c, axis);
    return c;
}

Distribution reference_distribution(const GroverSpec& spec) {
    validate(spec);
    const std::size_t n = spec.num_qubits;
    const double theta = std::asin(std::pow(2.0, -static_cast<double>(n) / 2.0));
    const double s = std::sin(static_cast<double>(2 * spec.iterations + 1) * theta);
    const double hit = s * s;
    const std::uint64_t dim = std::uint64_t{1} << n;
    const double miss = std::max(0.0, 1.0 - hit) / static_cast<double>(dim - 1);
    Distribution::Table table;
    for (std::uint64_t i = 0; i < dim; ++i) {
        auto bits = to_bitstring(i, n);
        table.emplace(bits, bits == spec.marked ? hit : miss);
    }
    return Distribution(n, std::move(table));
}

std::size_t optimal_iterations(std::size_t num_qubits) {
    return static_cast<std::size_t>(
        std::floor(std::numbers::pi / 4.0 * std::pow(2.0, static_cast<double>(num_qubits) / 2.0)));
}

}  // namespace ysup
