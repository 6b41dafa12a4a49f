#include <gtest/gtest.h>

#include <numbers>

#include "katzsum/chars.hpp"
#include "katzsum/error.hpp"

using namespace katzsum;

namespace {

CharacterGroup group(std::uint32_t p, std::uint32_t n) { return CharacterGroup(FiniteField::build(p, n)); }

void expect_near(Complex a, Complex b, double tol = 1e-12) {
    EXPECT_NEAR(a.real(), b.real(), tol);
    EXPECT_NEAR(a.imag(), b.imag(), tol);
}

}  // namespace

TEST(EvalMult, ZeroMapsToZeroEvenForTrivial) {
    const auto g = group(13, 1);
    for (MultChar c : g.all()) EXPECT_EQ(g.eval_mult(c, FieldElem{0}), Complex(0.0, 0.0));
}

TEST(EvalMult, QuadraticAtMinusOneAndQuarticAtMinusFour) {
    for (auto [p, n] : {std::pair{5u, 1u}, {3u, 2u}, {13u, 1u}, {5u, 2u}, {7u, 2u}}) {
        const auto g = group(p, n);
        const auto& f = g.field();
        const auto s = g.special();
        EXPECT_EQ(g.eval_mult(s.phi, f.minus_one()), Complex(1.0, 0.0));
        // -4 = 0 in characteristic 2 only; p is odd here.
        EXPECT_EQ(g.eval_mult(s.A4, f.from_int(-4)), Complex(1.0, 0.0)) << p << "^" << n;
    }
}

TEST(EvalAdd, Examples) {
    const auto g5 = group(5, 1);
    EXPECT_EQ(g5.eval_add(FieldElem{0}), Complex(1.0, 0.0));
    expect_near(g5.eval_add(FieldElem{1}), std::polar(1.0, 2.0 * std::numbers::pi / 5.0));
    for (auto [p, n] : {std::pair{5u, 1u}, {3u, 2u}, {17u, 1u}, {7u, 2u}}) {
        const auto g = group(p, n);
        Complex total{};
        for (std::uint32_t y = 0; y < g.field().q(); ++y) total += g.eval_add(FieldElem{y});
        expect_near(total, 0.0, 1e-11);
    }
}

TEST(SpecialChars, Examples) {
    const auto g13 = group(13, 1);
    const auto s13 = g13.special();
    EXPECT_EQ(s13.A4, g13.chi(3));
    EXPECT_FALSE(s13.A8.has_value());

    const auto g17 = group(17, 1);
    const auto s17 = g17.special();
    ASSERT_TRUE(s17.A8.has_value());
    EXPECT_EQ(*s17.A8, g17.chi(2));
    EXPECT_EQ(*s17.A8 * *s17.A8, s17.A4);
    EXPECT_EQ(s17.A4, g17.chi(4));

    for (auto [p, n] : {std::pair{5u, 1u}, {3u, 2u}, {29u, 1u}}) {
        const auto s = group(p, n).special();
        EXPECT_EQ(s.phi * s.phi, s.eps);
        EXPECT_TRUE(s.eps.is_trivial());
    }
}

TEST(Delta, Examples) {
    const auto g = group(13, 1);
    EXPECT_EQ(delta_char(g.special().eps), 1);
    EXPECT_EQ(delta_char(g.special().phi), 0);
    EXPECT_EQ(delta_kron(FieldElem{3}, FieldElem{3}), 1);
    EXPECT_EQ(delta_kron(FieldElem{3}, FieldElem{4}), 0);
}

TEST(FourthPower, Examples) {
    const auto g = group(13, 1);
    EXPECT_TRUE(g.is_fourth_power(g.chi(4)));
    EXPECT_EQ(g.fourth_root(g.chi(4)), g.chi(1));
    EXPECT_FALSE(g.is_fourth_power(g.chi(2)));
    EXPECT_TRUE(g.is_fourth_power(g.chi(0)));
    EXPECT_EQ(g.fourth_root(g.chi(0)), g.chi(0));
    try {
        g.fourth_root(g.chi(2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotFourthPower);
    }
}

TEST(FourthPower, IffTrivialAtI) {
    for (auto [p, n] : {std::pair{13u, 1u}, {3u, 2u}, {5u, 2u}, {41u, 1u}}) {
        const auto g = group(p, n);
        for (MultChar c : g.all()) {
            const bool at_i = std::abs(g.eval_mult(c, g.field().i_elem()) - 1.0) < 1e-12;
            EXPECT_EQ(g.is_fourth_power(c), at_i) << c.label();
            if (g.is_fourth_power(c)) EXPECT_EQ(g.fourth_root(c).pow(4), c);
        }
    }
}

TEST(MultChar, GroupLaw) {
    const auto g = group(17, 1);
    for (MultChar a : g.all()) {
        EXPECT_TRUE((a * a.conj()).is_trivial());
        EXPECT_EQ(a.pow(-1), a.conj());
        for (MultChar b : g.all()) EXPECT_EQ((a * b).exponent(), (a.exponent() + b.exponent()) % 16);
    }
    EXPECT_EQ(g.chi(-3).label(), "chi_13");
}

TEST(Characters, OrthogonalityBothWays) {
    for (auto [p, n] : {std::pair{5u, 1u}, {3u, 2u}, {13u, 1u}, {5u, 2u}, {7u, 2u}}) {
        const auto g = group(p, n);
        const double order = g.size();
        for (MultChar c : g.all()) {
            Complex total{};
            for (std::uint32_t x = 1; x < g.field().q(); ++x) total += g.eval_mult(c, FieldElem{x});
            expect_near(total, order * delta_char(c), 1e-10);
        }
        for (std::uint32_t x = 1; x < g.field().q(); ++x) {
            Complex total{};
            for (MultChar c : g.all()) total += g.eval_mult(c, FieldElem{x});
            expect_near(total, order * delta_kron(FieldElem{x}, g.field().one()), 1e-10);
        }
    }
}

TEST(Characters, MultiplicativeAndUnimodular) {
    const auto g = group(5, 2);
    const auto& f = g.field();
    for (MultChar c : g.all()) {
        for (std::uint32_t x = 1; x < f.q(); ++x) {
            EXPECT_NEAR(std::abs(g.eval_mult(c, FieldElem{x})), 1.0, 1e-12);
            for (std::uint32_t y = 1; y < f.q(); y += 2) {
                expect_near(g.eval_mult(c, f.mul(FieldElem{x}, FieldElem{y})),
                            g.eval_mult(c, FieldElem{x}) * g.eval_mult(c, FieldElem{y}));
            }
        }
    }
}
