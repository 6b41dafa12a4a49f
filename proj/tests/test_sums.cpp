#include <gtest/gtest.h>

#include <cmath>

#include "katzsum/error.hpp"
#include "katzsum/sums.hpp"
#include "oracle.hpp"

using namespace katzsum;

namespace {

void expect_close(Complex a, Complex b, double tol = 1e-10) {
    EXPECT_LE(std::abs(a - b), tol * (1.0 + std::max(std::abs(a), std::abs(b)))) << a << " vs " << b;
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kFields = {{5, 1}, {3, 2}, {13, 1}, {17, 1}, {5, 2}};

}  // namespace

TEST(Gauss, TrivialIsMinusOne) {
    for (auto [p, n] : kFields) {
        const auto s = build_sums(p, n);
        expect_close(s->gauss(s->chars().special().eps), -1.0);
    }
}

TEST(Gauss, QuadraticOverFiveIsRootFive) {
    const auto s = build_sums(5, 1);
    const auto o = oracle::prime_field(5);
    const Complex direct = oracle::gauss(o, 2);
    EXPECT_NEAR(direct.real(), 2.2360680, 1e-7);
    expect_close(s->gauss(s->chars().special().phi), direct);
    EXPECT_NEAR(s->gauss(s->chars().special().phi).real(), std::sqrt(5.0), 1e-12);
}

TEST(Gauss, MatchesOracleEverywhere) {
    for (auto [oracle_field, p, n] : {std::tuple{oracle::prime_field(13), 13u, 1u}, {oracle::gf9(), 3u, 2u}}) {
        const auto s = build_sums(p, n);
        for (MultChar a : s->chars().all()) {
            expect_close(s->gauss(a), oracle::gauss(oracle_field, a.exponent()));
            expect_close(s->gauss(a), s->gauss_direct(a));
        }
    }
}

TEST(Gauss, NormRelation) {
    for (auto [p, n] : kFields) {
        const auto s = build_sums(p, n);
        const auto& ch = s->chars();
        for (MultChar a : ch.all()) {
            if (a.is_trivial()) continue;
            expect_close(s->gauss(a) * s->gauss(a.conj()), ch.eval_mult(a, ch.field().minus_one()) * double(ch.field().q()));
            const double mag = std::abs(s->gauss(a));
            EXPECT_NEAR(mag * mag, ch.field().q(), 1e-9);
        }
    }
}

TEST(Jacobi, Examples) {
    for (auto [p, n] : kFields) {
        const auto s = build_sums(p, n);
        const auto& ch = s->chars();
        const double q = ch.field().q();
        const MultChar eps = ch.special().eps;
        expect_close(s->jacobi(eps, eps), q - 2.0);
        for (MultChar a : ch.all()) {
            if (a.is_trivial()) continue;
            expect_close(s->jacobi(eps, a), -1.0);
            expect_close(s->jacobi(a, a.conj()), -ch.eval_mult(a, ch.field().minus_one()));
        }
    }
}

TEST(Jacobi, GaussRelations) {
    for (auto [p, n] : kFields) {
        const auto s = build_sums(p, n);
        const auto& ch = s->chars();
        for (MultChar a : ch.all()) {
            for (MultChar b : ch.all()) {
                if (!(a * b).is_trivial()) {
                    expect_close(s->jacobi(a, b), s->gauss(a) * s->gauss(b) / s->gauss(a * b));
                }
                if (!b.is_trivial()) {
                    expect_close(s->jacobi(a, b.conj()),
                                 ch.eval_mult(a, ch.field().minus_one()) * s->jacobi(a, a.conj() * b));
                }
            }
        }
    }
}

TEST(Hyp2F1, ZeroArgumentVanishes) {
    const auto s = build_sums(13, 1);
    for (MultChar a : s->chars().all()) EXPECT_EQ(s->hyp2f1(a, a * a, a.conj(), FieldElem{0}), Complex(0.0, 0.0));
}

TEST(Hyp2F1, ThirteenTermSum) {
    const auto s = build_sums(13, 1);
    const auto o = oracle::prime_field(13);
    const auto& ch = s->chars();
    const Complex expected = oracle::hyp2f1(o, 1, 2, 5, 2);
    expect_close(s->hyp2f1(ch.chi(1), ch.chi(2), ch.chi(5), FieldElem{2}), expected, 1e-12);
}

TEST(Hyp2F1, AgreesWithLiteralTranscription) {
    for (auto [oracle_field, p, n] : {std::tuple{oracle::prime_field(13), 13u, 1u}, {oracle::gf9(), 3u, 2u}}) {
        const auto s = build_sums(p, n);
        const auto& ch = s->chars();
        const std::uint32_t order = ch.size();
        // Every (A, B, C, x) for q = 9; a stride through the q = 13 grid.
        const std::uint32_t stride = order > 8 ? 5 : 1;
        for (std::uint32_t a = 0; a < order; a += 1) {
            for (std::uint32_t b = 0; b < order; b += stride) {
                for (std::uint32_t c = 0; c < order; c += stride) {
                    for (std::uint32_t x = 0; x < ch.field().q(); ++x) {
                        expect_close(s->hyp2f1(ch.chi(a), ch.chi(b), ch.chi(c), FieldElem{x}),
                                     oracle::hyp2f1(oracle_field, a, b, c, x), 1e-12);
                    }
                }
            }
        }
    }
}

TEST(Hyp2F1, GaussSummationAtOne) {
    for (auto [p, n] : kFields) {
        const auto s = build_sums(p, n);
        const auto& ch = s->chars();
        const auto sp = ch.special();
        for (MultChar d : ch.all()) {
            if (d == sp.eps || d == sp.A4 || d == sp.A4.conj()) continue;
            expect_close(s->hyp2f1(d, d * sp.A4, sp.A4, ch.field().one()), s->gauss_summation_at_one(d));
        }
    }
}

TEST(HasseDavenport, Examples) {
    const auto s = build_sums(13, 1);
    const auto sp = s->chars().special();
    EXPECT_LT(s->check_hasse_davenport(sp.eps), 1e-12);
    EXPECT_LT(s->check_hasse_davenport(sp.phi), 1e-12);
    // Both sides by the oracle's direct Gauss sums for A = chi_1.
    const auto o = oracle::prime_field(13);
    const Complex lhs = o.chi(1, 4) * oracle::gauss(o, 1) * oracle::gauss(o, 7);
    const Complex rhs = oracle::gauss(o, 2) * oracle::gauss(o, 6);
    EXPECT_LT(std::abs(lhs - rhs), 1e-10);
    EXPECT_LT(s->check_hasse_davenport(s->chars().chi(1)), 1e-10);
}

TEST(HasseDavenport, AllCharacters) {
    for (auto [p, n] : kFields) {
        const auto s = build_sums(p, n);
        for (MultChar a : s->chars().all()) EXPECT_LT(s->check_hasse_davenport(a), 1e-10);
    }
}

TEST(QuadTransform, Examples) {
    const auto s13 = build_sums(13, 1);
    const auto& ch = s13->chars();
    EXPECT_LT(s13->check_quad_transform(ch.special().eps, FieldElem{2}), 1e-10);
    for (std::uint32_t z = 2; z < 12; ++z) EXPECT_LT(s13->check_quad_transform(ch.chi(1), FieldElem{z}), 1e-10);

    const auto s9 = build_sums(3, 2);
    const auto& f9 = s9->field();
    for (std::uint32_t z = 0; z < 9; ++z) {
        const FieldElem e{z};
        if (e.is_zero() || e == f9.one() || e == f9.minus_one()) continue;
        EXPECT_LT(s9->check_quad_transform(s9->chars().chi(3), e), 1e-10);
    }
}

TEST(QuadTransform, RejectsDegenerateArguments) {
    const auto s = build_sums(13, 1);
    const auto d = s->chars().chi(1);
    for (FieldElem z : {FieldElem{0}, FieldElem{1}, s->field().minus_one()}) {
        try {
            s->check_quad_transform(d, z);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::BadArgument);
        }
    }
}

TEST(Tolerance, BlendedPolicy) {
    EXPECT_TRUE(agrees(1.0, 1.0 + 1e-9));
    EXPECT_FALSE(agrees(1.0, 1.0 + 1e-7));
    EXPECT_TRUE(agrees(1e4, 1e4 + 5e-5));
    EXPECT_FALSE(agrees(0.0, 2e-8));
    EXPECT_DOUBLE_EQ(scaled_error(3.0, 3.0), 0.0);
}
