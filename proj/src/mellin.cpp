#include "katzsum/mellin.hpp"

#include <string>

#include "katzsum/error.hpp"

namespace katzsum {

namespace {

struct Env {
    const FiniteField& f;
    const CharacterGroup& ch;
    const ClassicalSums& sums;
    MultChar eps;
    MultChar phi;
    MultChar A4;
    MultChar A4bar;

    explicit Env(const KatzContext& ctx)
        : f(ctx.field()),
          ch(ctx.chars()),
          sums(*ctx.sums),
          eps(ctx.chars().chi(0)),
          phi(ctx.chars().special().phi),
          A4(ctx.A4),
          A4bar(ctx.A4.conj()) {}

    Complex chi(MultChar c, FieldElem x) const { return ch.eval_mult(c, x); }
    Complex G(MultChar c) const { return sums.gauss(c); }
    Complex J(MultChar a, MultChar b) const { return sums.jacobi(a, b); }
    double q() const { return static_cast<double>(f.q()); }
};

// sum_m A4(a)^(1-m) G(nu A4^(m-1)) G(nu A4^m)
Complex quartic_gauss_cycle(const Env& e, FieldElem a, MultChar nu) {
    Complex acc{};
    for (int m = 0; m < 4; ++m) {
        acc += e.chi(e.A4.pow(1 - m), a) * e.G(nu * e.A4.pow(m - 1)) * e.G(nu * e.A4.pow(m));
    }
    return acc;
}

}  // namespace

Complex mellin_V_direct(const KatzContext& ctx, const KatzTables& tables, MultChar chi) {
    const Env e(ctx);
    Complex acc{};
    for (std::uint32_t j = 1; j < e.f.q(); ++j) acc += e.chi(chi, FieldElem{j}) * tables.v[j];
    return acc;
}

Complex mellin_V_closed(const KatzContext& ctx, MultChar chi) {
    if (!ctx.chars().is_fourth_power(chi)) return {};
    return mellin_V_from_root(ctx, ctx.chars().fourth_root(chi));
}

Complex mellin_V_from_root(const KatzContext& ctx, MultChar nu) {
    const Env e(ctx);
    return e.chi(nu.conj(), ctx.a) * quartic_gauss_cycle(e, ctx.a, nu) / ctx.tau;
}

Complex mellin_V_octic(const KatzContext& ctx) {
    const Env e(ctx);
    if (e.f.unit_order() % 8 != 0) throw Error(Errc::BadArgument, "q - 1 is not divisible by 8");
    const MultChar a8 = e.ch.chi(ctx.A4.exponent() / 2);
    const MultChar a8b = a8.conj();
    const MultChar a8_3 = a8.pow(3);
    const MultChar a8b_3 = a8_3.conj();
    const FieldElem a = ctx.a;
    const Complex sum = e.chi(a8, a) * e.G(a8) * e.G(a8b) + e.chi(a8.pow(5), a) * e.G(a8_3) * e.G(a8b_3) +
                        e.chi(a8_3, a) * e.G(a8b) * e.G(a8b_3) + e.chi(a8b, a) * e.G(a8) * e.G(a8_3);
    return sum / ctx.tau;
}

Complex Y(const KatzContext& ctx, MultChar lambda) {
    const Env e(ctx);
    const MultChar lb = lambda.conj();
    Complex acc{};
    for (std::uint32_t xi = 1; xi < e.f.q(); ++xi) {
        const FieldElem x{xi};
        acc += e.chi(e.A4, x) * e.chi(lb, e.f.add(x, e.f.div(ctx.a, x)));
    }
    return acc;
}

Complex Y_closed(const KatzContext& ctx, MultChar nu) {
    const Env e(ctx);
    const FieldElem a = ctx.a;
    return e.chi(nu.conj(), a) *
           (e.chi(e.A4, a) * e.J(nu, nu * e.A4bar) + e.chi(e.A4bar, a) * e.J(nu * e.phi, nu * e.A4));
}

Complex mellin_V_assembled(const KatzContext& ctx, MultChar nu) {
    const Env e(ctx);
    const MultChar lambda = nu * nu * e.A4bar;
    const MultChar lphi = lambda * e.phi;
    return (e.G(lambda) * Y(ctx, lambda) + e.G(lphi) * Y(ctx, lphi)) / ctx.tau;
}

Complex mellin_P0_direct(const KatzContext& ctx, const KatzTables& tables, MultChar chi) {
    const Env e(ctx);
    Complex acc{};
    for (std::uint32_t j = 1; j < e.f.q(); ++j) acc += e.chi(chi, FieldElem{j}) * tables.p(FieldElem{j}, e.f.zero());
    return acc;
}

Complex mellin_P0_closed(const KatzContext& ctx, MultChar chi) {
    if (!ctx.chars().is_fourth_power(chi)) return {};
    return mellin_P0_from_root(ctx, ctx.chars().fourth_root(chi));
}

Complex mellin_P0_from_root(const KatzContext& ctx, MultChar nu) {
    const Env e(ctx);
    const FieldElem a = ctx.a;
    const Complex prefactor =
        e.chi(e.A4, e.f.minus_one()) * (e.chi(e.A4bar, a) * e.G(e.A4) + e.G(e.A4bar)) / e.q();
    return prefactor * e.chi(nu.conj(), a) * quartic_gauss_cycle(e, a, nu);
}

Complex kummer_hyp(const KatzContext& ctx, MultChar nu) {
    const Env e(ctx);
    return e.sums.hyp2f1(nu * nu, nu * e.A4, nu * e.A4bar, e.f.minus_one());
}

Complex kummer_closed(const KatzContext& ctx, MultChar nu) {
    const Env e(ctx);
    if (nu.pow(4).is_trivial()) throw Error(Errc::FourthPowerTrivial, nu.label() + "^4 is trivial");
    const Complex num = e.chi(e.A4, e.f.minus_one()) * e.G(nu * e.A4) *
                        (e.G(nu) * e.G(e.A4) + e.G(nu * e.phi) * e.G(e.A4bar));
    return e.sums.div_gauss(e.sums.div_gauss(num / e.q(), e.phi), nu * nu);
}

Complex U(const KatzContext& ctx, MultChar lambda) {
    const Env e(ctx);
    Complex inner{};
    for (std::uint32_t j = 1; j < e.f.q(); ++j) {
        inner += e.chi(lambda * e.A4, FieldElem{j}) + e.chi(lambda * e.A4bar, FieldElem{j});
    }
    Complex acc{};
    for (std::uint32_t xi = 1; xi < e.f.q(); ++xi) {
        const FieldElem x{xi};
        const FieldElem a_over_x = e.f.div(ctx.a, x);
        if (!e.f.add(x, a_over_x).is_zero()) continue;
        acc += e.chi(e.phi, e.f.sub(x, a_over_x)) * inner;
    }
    return acc;
}

Complex W(const KatzContext& ctx, MultChar lambda) {
    const Env e(ctx);
    const MultChar la4 = lambda * e.A4;
    const MultChar la4_bar = la4.conj();
    Complex acc{};
    for (std::uint32_t xi = 1; xi < e.f.q(); ++xi) {
        const FieldElem x{xi};
        const FieldElem a_over_x = e.f.div(ctx.a, x);
        acc += e.chi(e.phi, e.f.sub(x, a_over_x)) * e.chi(la4_bar, e.f.add(x, a_over_x));
    }
    return e.G(la4) * acc;
}

Complex W_closed(const KatzContext& ctx, MultChar nu) {
    const Env e(ctx);
    const FieldElem a = ctx.a;
    const Complex pre = e.chi(e.A4, e.f.minus_one()) * e.G(e.phi) / e.q();
    const Complex first = e.G(nu * e.A4) * e.chi(nu.conj() * e.A4bar, a) *
                          (e.G(nu) * e.G(e.A4) + e.G(nu * e.phi) * e.G(e.A4bar));
    const Complex second = e.G(nu * e.A4bar) * e.chi(nu.conj() * e.A4, a) *
                           (e.G(nu * e.phi) * e.G(e.A4) + e.G(nu) * e.G(e.A4bar));
    return pre * (first + second);
}

Complex W_trivial_pair_closed(const KatzContext& ctx) {
    const Env e(ctx);
    const FieldElem a = ctx.a;
    const Complex a4a = e.chi(e.A4, a);
    const Complex a4ba = e.chi(e.A4bar, a);
    const Complex phia = e.chi(e.phi, a);
    const Complex j_a4 = e.J(e.A4, e.phi);
    const Complex j_a4b = e.J(e.A4bar, e.phi);
    const Complex gphi = e.G(e.phi);
    return a4a + a4ba - a4a * j_a4b - a4ba * j_a4 - 2.0 * gphi + phia * j_a4 * gphi + phia * j_a4b * gphi;
}

Complex mellin_P0_assembled(const KatzContext& ctx, MultChar lambda) {
    const Env e(ctx);
    const Complex sum = U(ctx, lambda) + W(ctx, lambda) + W(ctx, lambda * e.phi);
    return e.sums.div_gauss(sum, e.phi);
}

FieldElem alpha(const KatzContext& ctx, FieldElem j, FieldElem x) {
    if (x.is_zero()) throw Error(Errc::ZeroX, "alpha needs x != 0");
    const auto& f = ctx.field();
    const FieldElem jp = f.square(f.add(j, f.one()));
    const FieldElem jm = f.square(f.sub(j, f.one()));
    return f.add(f.mul(x, jp), f.div(f.mul(ctx.a, jm), x));
}

Complex h(const KatzContext& ctx, MultChar d, FieldElem j) {
    if (j.is_zero()) throw Error(Errc::ZeroJ, "h needs j != 0");
    const Env e(ctx);
    const MultChar outer = d.conj() * d.conj() * e.phi;
    const FieldElem jp = e.f.square(e.f.add(j, e.f.one()));
    const FieldElem jm = e.f.square(e.f.sub(j, e.f.one()));
    Complex acc{};
    for (std::uint32_t xi = 1; xi < e.f.q(); ++xi) {
        const FieldElem x{xi};
        acc += e.chi(d, x) * e.chi(e.phi, e.f.sub(e.f.one(), x)) * e.chi(outer, e.f.add(e.f.mul(x, jp), jm));
    }
    return acc;
}

Complex h_closed(const KatzContext& ctx, MultChar d, FieldElem j) {
    if (j.is_zero()) throw Error(Errc::ZeroJ, "h needs j != 0");
    const Env e(ctx);
    const FieldElem j2 = e.f.square(j);
    if (d == e.eps) {
        return -2.0 + e.q() * delta_kron(j2, e.f.minus_one()) + delta_kron(j2, e.f.one());
    }
    if (d == e.A4 || d == e.A4bar) {
        const Complex tail = e.chi(e.phi, e.f.sub(e.f.pow(j, 4), e.f.one()));
        return e.J(d, e.phi) - tail;
    }
    const Complex ratio = e.sums.div_gauss(e.G(d) * e.G(d) * e.G(e.phi), d * d * e.phi);
    return ratio * e.sums.hyp2f1(d, d * e.A4, e.A4, e.f.pow(j, 4));
}

Complex H_direct(const KatzContext& ctx, MultChar lambda1) {
    const Env e(ctx);
    const MultChar chi1 = lambda1 * lambda1 * e.phi;
    Complex acc{};
    for (std::uint32_t ji = 1; ji < e.f.q(); ++ji) {
        const FieldElem j{ji};
        for (std::uint32_t xi = 1; xi < e.f.q(); ++xi) {
            const FieldElem x{xi};
            if (!alpha(ctx, j, x).is_zero()) continue;
            acc += e.chi(chi1, j) * e.chi(e.phi, e.f.sub(x, e.f.div(ctx.a, x)));
        }
    }
    return acc;
}

Complex H_closed(const KatzContext& ctx, MultChar nu1) {
    const Env e(ctx);
    Complex jsum{};
    for (int m = 0; m < 4; ++m) jsum += e.J(nu1 * e.A4.pow(m), e.phi);
    return (e.chi(e.A4, ctx.a) + e.chi(e.A4bar, ctx.a)) * jsum;
}

Complex E(const KatzContext& ctx, MultChar lambda1, MultChar lambda2) {
    const Env e(ctx);
    const MultChar chi1 = lambda1 * lambda1 * e.phi;
    const MultChar lbar = (lambda1 * lambda2).conj();
    std::vector<Complex> x_weight(e.f.q());
    for (std::uint32_t xi = 1; xi < e.f.q(); ++xi) {
        const FieldElem x{xi};
        x_weight[xi] = e.chi(e.phi, e.f.sub(x, e.f.div(ctx.a, x)));
    }
    Complex acc{};
    for (std::uint32_t ji = 1; ji < e.f.q(); ++ji) {
        const FieldElem j{ji};
        Complex row{};
        for (std::uint32_t xi = 1; xi < e.f.q(); ++xi) {
            row += x_weight[xi] * e.chi(lbar, alpha(ctx, j, FieldElem{xi}));
        }
        acc += e.chi(chi1, j) * row;
    }
    return acc;
}

Complex double_mellin_assembled(const KatzContext& ctx, MultChar lambda1, MultChar lambda2) {
    const Env e(ctx);
    const int delta = delta_char((lambda1 * lambda2).pow(2));
    const MultChar l12 = lambda1 * lambda2;
    Complex rhs = e.G(l12) * E(ctx, lambda1, lambda2) + e.G(l12 * e.phi) * E(ctx, lambda1, lambda2 * e.phi);
    if (delta) rhs += (e.q() - 1.0) * H_direct(ctx, lambda1);
    return e.sums.div_gauss(rhs, e.phi) + (2.0 * e.q() - 2.0) * delta;
}

Complex double_mellin_direct(const KatzContext& ctx, const KatzTables& tables, MultChar chi1, MultChar chi2) {
    const Env e(ctx);
    const std::uint32_t q = e.f.q();
    std::vector<Complex> c2(q);
    for (std::uint32_t k = 1; k < q; ++k) c2[k] = e.chi(chi2, FieldElem{k});
    Complex acc{};
    for (std::uint32_t j = 1; j < q; ++j) {
        const auto row = tables.p.row(FieldElem{j});
        Complex inner{};
        for (std::uint32_t k = 1; k < q; ++k) inner += c2[k] * row[k];
        acc += e.chi(chi1, FieldElem{j}) * inner;
    }
    return acc;
}

Complex double_mellin_closed(const KatzContext& ctx, MultChar nu1, MultChar nu2) {
    const Env e(ctx);
    const MultChar mu_bar = (nu1 * nu2).conj();
    std::array<Complex, 4> g1{};
    std::array<Complex, 4> g2{};
    for (int n = 0; n < 4; ++n) {
        g1[n] = e.G(nu1 * e.A4.pow(n - 1)) * e.G(nu1 * e.A4.pow(n));
        g2[n] = e.G(nu2 * e.A4.pow(n - 1)) * e.G(nu2 * e.A4.pow(n));
    }
    Complex acc{};
    for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) acc += e.chi(mu_bar * e.A4bar.pow(m + n), ctx.a) * g1[n] * g2[m];
    }
    return e.chi(e.A4, e.f.neg(ctx.a)) * acc / e.q();
}

Complex double_mellin_evaluated(const KatzContext& ctx, MultChar chi1, MultChar chi2) {
    const auto& ch = ctx.chars();
    if (!ch.is_fourth_power(chi1) || !ch.is_fourth_power(chi2)) return {};
    return double_mellin_closed(ctx, ch.fourth_root(chi1), ch.fourth_root(chi2));
}

RCoeffs r_coeffs(const KatzContext& ctx, MultChar nu1, MultChar nu2) {
    const Env e(ctx);
    if (!(nu1 * nu2).pow(4).is_trivial()) {
        throw Error(Errc::MuNotQuartic, (nu1 * nu2).label() + " is not a power of A4");
    }
    const int d = delta_char(nu1.pow(4));
    const double q = e.q();
    Complex jsum{};
    for (int m = 0; m < 4; ++m) jsum += e.J(nu1 * e.A4.pow(m), e.phi);

    RCoeffs r{};
    r[0] = 4.0 * q - (2.0 * q - 2.0) * d;
    r[1] = e.sums.div_gauss(q * jsum - (d * (q - 1.0)) * e.J(e.A4bar, e.phi), e.phi);
    r[3] = e.sums.div_gauss(q * jsum - (d * (q - 1.0)) * e.J(e.A4, e.phi), e.phi);
    for (int m = 0; m < 4; ++m) {
        r[2] += e.J(nu1.conj() * e.A4bar.pow(m + 1), e.phi) * e.J(nu1 * e.A4.pow(m), e.phi);
    }
    return r;
}

RCoeffs r_coeffs_gauss(const KatzContext& ctx, MultChar nu1) {
    const Env e(ctx);
    const MultChar nb = nu1.conj();
    const Complex pre = e.chi(e.A4, e.f.minus_one()) / e.q();
    RCoeffs r{};
    for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) {
            const int k = ((1 - m - n) % 4 + 4) % 4;
            r[k] += e.G(nu1 * e.A4.pow(n - 1)) * e.G(nu1 * e.A4.pow(n)) * e.G(nb * e.A4.pow(m - 1)) *
                    e.G(nb * e.A4.pow(m));
        }
    }
    for (auto& v : r) v *= pre;
    return r;
}

RCoeffs r_coeffs_from_h(const KatzContext& ctx, MultChar nu1) {
    const Env e(ctx);
    const MultChar chi1 = nu1.pow(4);
    auto twisted_h = [&](MultChar d) {
        Complex acc{};
        for (std::uint32_t j = 1; j < e.f.q(); ++j) acc += e.chi(chi1, FieldElem{j}) * h(ctx, d, FieldElem{j});
        return acc;
    };
    const double q = e.q();
    Complex jsum{};
    for (int m = 0; m < 4; ++m) jsum += e.J(nu1 * e.A4.pow(m), e.phi);

    RCoeffs r{};
    r[0] = (2.0 * q - 2.0) + twisted_h(e.eps);
    r[1] = e.sums.div_gauss((q - 1.0) * jsum - twisted_h(e.A4bar), e.phi);
    r[2] = twisted_h(e.phi);
    r[3] = e.sums.div_gauss((q - 1.0) * jsum - twisted_h(e.A4), e.phi);
    return r;
}

Complex r_assemble(const KatzContext& ctx, const RCoeffs& r) {
    Complex acc{};
    for (int k = 0; k < 4; ++k) acc += r[k] * ctx.chars().eval_mult(ctx.A4.pow(k), ctx.a);
    return acc;
}

Complex inverse_mellin(const CharacterGroup& chars, std::span<const Complex> values, FieldElem j) {
    if (j.is_zero()) throw Error(Errc::ZeroJ, "inverse Mellin transform needs j != 0");
    if (values.size() != chars.size()) {
        throw Error(Errc::BadArgument, "expected " + std::to_string(chars.size()) + " transform values");
    }
    Complex acc{};
    for (std::uint32_t m = 0; m < chars.size(); ++m) acc += chars.eval_mult(chars.chi(m).conj(), j) * values[m];
    return acc / static_cast<double>(chars.size());
}

}  // namespace katzsum
