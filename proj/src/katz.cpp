#include "katzsum/katz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "katzsum/error.hpp"

namespace katzsum {

namespace {

// -(principal root of q * i^k), argument of the root in [0, pi).
Complex tau_for_quartic_value(std::uint32_t q, std::uint32_t k) {
    const double r = std::sqrt(static_cast<double>(q));
    switch (k % 4) {
        case 0: return {-r, 0.0};
        case 2: return {0.0, -r};
        default: return -std::polar(r, std::numbers::pi * static_cast<double>(k % 4) / 4.0);
    }
}

}  // namespace

KatzContext make_context(SumsPtr sums, FieldElem a, QuarticChoice quartic) {
    if (a.is_zero()) throw Error(Errc::ZeroParameter, "a must be nonzero");
    const auto& f = sums->field();
    if (a.index >= f.q()) throw Error(Errc::BadArgument, "a out of range");
    const auto special = sums->chars().special();
    const MultChar a4 = quartic == QuarticChoice::Fixed ? special.A4 : special.A4.conj();

    const std::uint32_t order = f.unit_order();
    const std::uint64_t t = static_cast<std::uint64_t>(a4.exponent()) * f.dlog(f.neg(a)) % order;
    const auto k = static_cast<std::uint32_t>(t / (order / 4));

    KatzContext ctx{std::move(sums), a, a4, f.i_elem(), {}};
    ctx.tau = tau_for_quartic_value(f.q(), k);
    return ctx;
}

KatzContext with_negated_tau(KatzContext ctx) {
    ctx.tau = -ctx.tau;
    return ctx;
}

Complex P(const KatzContext& ctx, FieldElem j, FieldElem k) {
    const auto& f = ctx.field();
    const auto& ch = ctx.chars();
    const MultChar phi = ch.special().phi;

    double deltas = 0.0;
    if (j == k) deltas += 1.0;
    if (j == f.neg(k)) deltas += ch.eval_mult(phi, f.minus_one()).real();

    const FieldElem s = f.square(f.add(j, k));
    const FieldElem d = f.square(f.sub(j, k));
    Complex acc{};
    for (std::uint32_t xi = 1; xi < f.q(); ++xi) {
        const FieldElem x{xi};
        const FieldElem a_over_x = f.div(ctx.a, x);
        const FieldElem sign_arg = f.sub(a_over_x, x);
        if (sign_arg.is_zero()) continue;
        acc += ch.eval_mult(phi, sign_arg) * ch.eval_add(f.add(f.mul(x, s), f.mul(a_over_x, d)));
    }
    return deltas + ctx.sums->div_gauss(acc, phi);
}

Complex V(const KatzContext& ctx, FieldElem j) {
    const auto& f = ctx.field();
    const auto& ch = ctx.chars();
    if (j.is_zero()) {
        const Complex g = ctx.sums->gauss(ctx.A4);
        return g / ctx.tau + ctx.tau / g;
    }
    const FieldElem aj4 = f.mul(ctx.a, f.pow(j, 4));
    Complex acc{};
    for (std::uint32_t xi = 1; xi < f.q(); ++xi) {
        const FieldElem x{xi};
        acc += ch.eval_mult(ctx.A4, x) * ch.eval_add(f.add(x, f.div(aj4, x)));
    }
    return acc / ctx.tau;
}

PTable build_p_table(const KatzContext& ctx, unsigned workers) {
    const std::uint32_t q = ctx.field().q();
    std::vector<Complex> values(std::size_t{q} * q);
    auto fill_rows = [&](std::uint32_t begin, std::uint32_t end) {
        for (std::uint32_t j = begin; j < end; ++j) {
            for (std::uint32_t k = 0; k < q; ++k) values[std::size_t{j} * q + k] = P(ctx, FieldElem{j}, FieldElem{k});
        }
    };

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, q);
    if (workers <= 1) {
        fill_rows(0, q);
    } else {
        std::vector<std::jthread> pool;
        const std::uint32_t chunk = (q + workers - 1) / workers;
        for (std::uint32_t begin = 0; begin < q; begin += chunk) {
            pool.emplace_back(fill_rows, begin, std::min(q, begin + chunk));
        }
    }
    return PTable(q, std::move(values));
}

std::vector<Complex> build_v_table(const KatzContext& ctx) {
    const std::uint32_t q = ctx.field().q();
    std::vector<Complex> out(q);
    for (std::uint32_t j = 0; j < q; ++j) out[j] = V(ctx, FieldElem{j});
    return out;
}

KatzTables tabulate(const KatzContext& ctx) { return {build_v_table(ctx), build_p_table(ctx)}; }

}  // namespace katzsum
