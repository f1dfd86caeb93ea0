#pragma once

// Test-only helpers: random circuit generators and an independent 2x2 matrix
// product used as an oracle for single-qubit identities.

#include "ysup/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace ysup::test_support {

using C = std::complex<double>;
using M2 = std::array<std::array<C, 2>, 2>;

inline M2 mul(const M2& a, const M2& b) {
    M2 r{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    return r;
}

// Written out by hand, not taken from the library.
inline M2 oracle_h() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{{C{s, 0}, C{s, 0}}, {C{s, 0}, C{-s, 0}}}};
}
inline M2 oracle_x() { return {{{C{0, 0}, C{1, 0}}, {C{1, 0}, C{0, 0}}}}; }
inline M2 oracle_sx() { return {{{C{0.5, 0.5}, C{0.5, -0.5}}, {C{0.5, -0.5}, C{0.5, 0.5}}}}; }
inline M2 oracle_rz(double t) { return {{{std::exp(C{0, -t / 2}), C{0, 0}}, {C{0, 0}, std::exp(C{0, t / 2})}}}; }

template <typename Matrix>
double max_dev(const Matrix& m, const M2& ref) {
    double d = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            d = std::max(d, std::abs(m(i, j) - ref[i][j]));
        }
    }
    return d;
}

/// Random circuit over {H, X, SX, SXDG, RZ(theta), CNOT, Z}.
inline Circuit random_clifford_rz_circuit(std::mt19937_64& rng, std::size_t n, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> kind_dist(0, n >= 2 ? 6 : 5);
    std::uniform_int_distribution<std::size_t> qubit_dist(0, n - 1);
    std::uniform_real_distribution<double> angle_dist(-2 * std::numbers::pi, 2 * std::numbers::pi);
    Circuit c(n);
    const std::size_t len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i) {
        const std::size_t q = qubit_dist(rng);
        switch (kind_dist(rng)) {
            case 0: c.push_back(GateKind::h(), {q}); break;
            case 1: c.push_back(GateKind::x(), {q}); break;
            case 2: c.push_back(GateKind::sx(), {q}); break;
            case 3: c.push_back(GateKind::sxdg(), {q}); break;
            case 4: c.push_back(GateKind::rz(angle_dist(rng)), {q}); break;
            case 5: c.push_back(GateKind::z(), {q}); break;
            default: {
                std::size_t t = qubit_dist(rng);
                while (t == q) {
                    t = qubit_dist(rng);
                }
                c.push_back(GateKind::cnot(), {q, t});
            }
        }
    }
    return c;
}

/// Random circuit over the whole vocabulary with random tags. RZ angles lie on
/// a 1e-9 rad grid.
inline Circuit random_full_circuit(std::mt19937_64& rng, std::size_t n, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> kind_dist(0, 9);
    std::uniform_int_distribution<int> tag_dist(0, 6);
    std::uniform_int_distribution<std::int64_t> angle_dist(-3141592653, 3141592653);
    Circuit c(n);
    c.set_measure_all(std::uniform_int_distribution<int>(0, 1)(rng) == 1);
    const std::size_t len = len_dist(rng);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = 0; i < len; ++i) {
        std::shuffle(order.begin(), order.end(), rng);
        const auto tag = static_cast<LayerTag>(tag_dist(rng));
        const int k = kind_dist(rng);
        if (k == 7 && n >= 2) {
            c.push_back(GateKind::cnot(), {order[0], order[1]}, tag);
        } else if (k == 8 && n >= 2) {
            const std::size_t arity = std::uniform_int_distribution<std::size_t>(2, n)(rng);
            c.push_back(GateKind::mcz(arity), {order.begin(), order.begin() + static_cast<long>(arity)}, tag);
        } else if (k == 9 && n >= 3) {
            const std::size_t arity = std::uniform_int_distribution<std::size_t>(3, n)(rng);
            c.push_back(GateKind::mcx(arity), {order.begin(), order.begin() + static_cast<long>(arity)}, tag);
        } else {
            const GateKind kinds[] = {GateKind::id(), GateKind::x(),  GateKind::sx(), GateKind::sxdg(),
                                      GateKind::h(),  GateKind::z(),
                                      GateKind::rz(static_cast<double>(angle_dist(rng)) * 1e-9)};
            c.push_back(kinds[k % 7], {order[0]}, tag);
        }
    }
    return c;
}

}  // namespace ysup::test_support
