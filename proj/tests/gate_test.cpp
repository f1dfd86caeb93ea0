#include "ysup/error.hpp"
#include "ysup/gate.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

using namespace ysup;
using namespace ysup::test_support;

namespace {

double unitarity_error(const Matrix& u) {
    const auto dim = u.rows();
    return (u * u.adjoint() - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(gate, sx_squared_is_x_exactly) {
    // Hand-rolled 2x2 product of the library's SX against the literal X.
    const Matrix sx = gate_matrix(GateKind::sx());
    M2 sx2{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) sx2[i][j] = sx(i, 0) * sx(0, j) + sx(i, 1) * sx(1, j);
    double d = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(sx2[i][j] - oracle_x()[i][j]));
    EXPECT_LE(d, 1e-15);
    EXPECT_LE(max_dev(gate_matrix(GateKind::sx()), oracle_sx()), 0.0);
}

TEST(gate, sx_and_sxdg_are_inverse) {
    const Matrix sx = gate_matrix(GateKind::sx());
    const Matrix sxdg = gate_matrix(GateKind::sxdg());
    EXPECT_LE((sx * sxdg - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LE((sxdg * sx - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(gate, rz_zero_is_identity) {
    EXPECT_EQ(gate_matrix(GateKind::rz(0.0)), gate_matrix(GateKind::id()));
}

TEST(gate, rz_convention) {
    const double t = 0.7;
    EXPECT_LE(max_dev(gate_matrix(GateKind::rz(t)), oracle_rz(t)), 1e-15);
}

TEST(gate, every_matrix_is_unitary) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    std::vector<GateKind> kinds = {GateKind::id(), GateKind::x(), GateKind::sx(),    GateKind::sxdg(),
                                   GateKind::h(),  GateKind::z(), GateKind::cnot(), GateKind::mcz(2),
                                   GateKind::mcz(4), GateKind::mcx(3), GateKind::mcx(5)};
    for (int i = 0; i < 20; ++i) kinds.push_back(GateKind::rz(angle(rng)));
    for (const auto& k : kinds) {
        EXPECT_LE(unitarity_error(gate_matrix(k)), 1e-14) << k.mnemonic();
    }
}

TEST(gate, cnot_control_is_first_operand) {
    // Local index = control + 2 * target: |c=1,t=0> (1) <-> |c=1,t=1> (3).
    const Matrix m = gate_matrix(GateKind::cnot());
    EXPECT_EQ(m(3, 1), Complex(1.0));
    EXPECT_EQ(m(1, 3), Complex(1.0));
    EXPECT_EQ(m(2, 2), Complex(1.0));
    EXPECT_EQ(m(0, 0), Complex(1.0));
}

TEST(gate, mcz_and_mcx_rules) {
    const Matrix z = gate_matrix(GateKind::mcz(3));
    for (int i = 0; i < 8; ++i) {
        EXPECT_EQ(z(i, i), Complex(i == 7 ? -1.0 : 1.0));
    }
    const Matrix x = gate_matrix(GateKind::mcx(3));
    // Controls are bits 0 and 1, target bit 2: 3 <-> 7.
    EXPECT_EQ(x(7, 3), Complex(1.0));
    EXPECT_EQ(x(3, 7), Complex(1.0));
    EXPECT_EQ(x(5, 5), Complex(1.0));
    EXPECT_TRUE(std::holds_alternative<PhaseFlipAllOnes>(gate_action(GateKind::mcz(5))));
    EXPECT_TRUE(std::holds_alternative<FlipTargetIfControls>(gate_action(GateKind::mcx(5))));
}

TEST(gate, invalid_parameters) {
    try {
        GateKind::rz(std::numeric_limits<double>::quiet_NaN());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidAngle);
    }
    EXPECT_THROW(GateKind::rz(std::numeric_limits<double>::infinity()), Error);
    try {
        GateKind::mcz(1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ArityMismatch);
    }
    EXPECT_THROW(GateKind::mcx(2), Error);
}

TEST(gate, native_classification) {
    EXPECT_TRUE(GateKind::id().is_native());
    EXPECT_TRUE(GateKind::x().is_native());
    EXPECT_TRUE(GateKind::sx().is_native());
    EXPECT_TRUE(GateKind::rz(1.0).is_native());
    EXPECT_TRUE(GateKind::cnot().is_native());
    EXPECT_FALSE(GateKind::h().is_native());
    EXPECT_FALSE(GateKind::z().is_native());
    EXPECT_FALSE(GateKind::sxdg().is_native());
    EXPECT_FALSE(GateKind::mcz(3).is_native());
    EXPECT_FALSE(GateKind::mcx(3).is_native());
}

TEST(gate, canonical_angle_range) {
    EXPECT_DOUBLE_EQ(canonical_angle(std::numbers::pi), std::numbers::pi);
    EXPECT_DOUBLE_EQ(canonical_angle(-std::numbers::pi), std::numbers::pi);
    EXPECT_DOUBLE_EQ(canonical_angle(0.0), 0.0);
    EXPECT_NEAR(canonical_angle(3 * std::numbers::pi / 2), -std::numbers::pi / 2, 1e-15);
}

TEST(gate, canonical_angle_changes_rz_by_sign_only) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-50.0, 50.0);
    for (int i = 0; i < 500; ++i) {
        const double t = angle(rng);
        const double c = canonical_angle(t);
        ASSERT_GT(c, -std::numbers::pi);
        ASSERT_LE(c, std::numbers::pi);
        const Matrix a = gate_matrix(GateKind::rz(t));
        const Matrix b = gate_matrix(GateKind::rz(c));
        const double plus = (a - b).cwiseAbs().maxCoeff();
        const double minus = (a + b).cwiseAbs().maxCoeff();
        EXPECT_LE(std::min(plus, minus), 1e-12) << t;
        // Probabilities |entry|^2 unchanged.
        EXPECT_LE((a.cwiseAbs2() - b.cwiseAbs2()).cwiseAbs().maxCoeff(), 1e-12);
    }
}
