#include "katzsum/harness.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "katzsum/error.hpp"
#include "katzsum/mellin.hpp"

namespace katzsum {

CheckAccumulator::CheckAccumulator(std::string check_id, std::uint32_t q, std::optional<std::uint32_t> a, double tol) {
    report_.check_id = std::move(check_id);
    report_.q = q;
    report_.a = a;
    report_.tol = tol;
}

CheckReport CheckAccumulator::finish() && {
    report_.pass = report_.max_scaled_err <= report_.tol;
    return std::move(report_);
}

bool RunResult::all_pass() const {
    for (const auto& f : fields) {
        for (const auto& r : f.runs) {
            if (!r.pass) return false;
        }
    }
    return true;
}

namespace {

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
    std::uint64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw Error(Errc::ConfigError, "cannot parse " + what + " '" + text + "'");
    }
    return v;
}

std::string jk_label(std::uint32_t j, std::uint32_t k) {
    return "j=" + std::to_string(j) + ",k=" + std::to_string(k);
}

std::string pair_label(MultChar a, MultChar b) { return "(" + a.label() + "," + b.label() + ")"; }

}  // namespace

std::pair<std::uint32_t, std::uint32_t> parse_field_spec(const std::string& text) {
    const auto caret = text.find('^');
    std::uint64_t p = 0;
    std::uint64_t n = 0;
    if (caret != std::string::npos) {
        p = parse_uint(text.substr(0, caret), "prime");
        n = parse_uint(text.substr(caret + 1), "exponent");
        if (!is_prime(p)) throw Error(Errc::ConfigError, std::to_string(p) + " is not prime");
        if (n == 0 || n > 16) throw Error(Errc::ConfigError, "exponent out of range in '" + text + "'");
    } else {
        const std::uint64_t q = parse_uint(text, "field size");
        const auto pn = factor_prime_power(q);
        if (!pn) throw Error(Errc::ConfigError, std::to_string(q) + " is not a prime power");
        p = pn->first;
        n = pn->second;
    }
    std::uint64_t q = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
        q *= p;
        if (q > kMaxFieldSize) throw Error(Errc::ConfigError, "field '" + text + "' exceeds 2^16 elements");
    }
    if (p == 2 || q % 4 != 1) throw Error(Errc::ConfigError, "q = " + std::to_string(q) + " is not 1 mod 4");
    return {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n)};
}

APolicy parse_a_policy(const std::string& text) {
    APolicy policy;
    if (text == "all") return policy;
    if (text == "sample") {
        policy.kind = APolicy::Kind::Sample;
        return policy;
    }
    policy.kind = APolicy::Kind::Explicit;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        policy.explicit_values.push_back(static_cast<std::uint32_t>(parse_uint(item, "a")));
    }
    if (policy.explicit_values.empty()) throw Error(Errc::ConfigError, "empty --a list");
    return policy;
}

std::vector<Suite> parse_suites(const std::vector<std::string>& names) {
    std::vector<Suite> out;
    auto push = [&](Suite s) {
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };
    for (const auto& name : names) {
        if (name == "all") {
            for (Suite s : {Suite::Main, Suite::Mellin, Suite::Transforms, Suite::Classical}) push(s);
        } else if (name == "main") {
            push(Suite::Main);
        } else if (name == "mellin") {
            push(Suite::Mellin);
        } else if (name == "transforms") {
            push(Suite::Transforms);
        } else if (name == "classical") {
            push(Suite::Classical);
        } else {
            throw Error(Errc::ConfigError, "unknown suite '" + name + "'");
        }
    }
    if (out.empty()) throw Error(Errc::ConfigError, "no suite selected");
    return out;
}

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::Main: return "main";
        case Suite::Mellin: return "mellin";
        case Suite::Transforms: return "transforms";
        case Suite::Classical: return "classical";
    }
    return "?";
}

void validate(const SuiteConfig& config) {
    if (!(config.tol > 0.0)) throw Error(Errc::ConfigError, "tolerance must be positive");
    if (config.fields.empty()) throw Error(Errc::ConfigError, "no field given");
    if (config.suites.empty()) throw Error(Errc::ConfigError, "no suite selected");
    for (auto [p, n] : config.fields) {
        parse_field_spec(std::to_string(p) + "^" + std::to_string(n));
        if (config.a_policy.kind == APolicy::Kind::Explicit) {
            std::uint64_t q = 1;
            for (std::uint32_t k = 0; k < n; ++k) q *= p;
            for (auto a : config.a_policy.explicit_values) {
                if (a == 0 || a >= q) {
                    throw Error(Errc::ConfigError,
                                "a = " + std::to_string(a) + " is not a nonzero element of F_" + std::to_string(q));
                }
            }
        }
    }
}

std::vector<std::uint32_t> select_a(const FiniteField& f, const APolicy& policy) {
    std::vector<std::uint32_t> out;
    switch (policy.kind) {
        case APolicy::Kind::All:
            for (std::uint32_t a = 1; a < f.q(); ++a) out.push_back(a);
            break;
        case APolicy::Kind::Sample:
            for (FieldElem a : {f.one(), f.generator(), f.square(f.generator()), f.minus_one()}) {
                if (std::find(out.begin(), out.end(), a.index) == out.end()) out.push_back(a.index);
            }
            break;
        case APolicy::Kind::Explicit:
            out = policy.explicit_values;
            break;
    }
    return out;
}

std::vector<std::uint32_t> select_a_for_pairs(const FiniteField& f, const APolicy& policy) {
    if (f.q() <= kPairSweepFullLimit || policy.kind == APolicy::Kind::Explicit) return select_a(f, policy);
    return select_a(f, APolicy{APolicy::Kind::Sample, {}});
}

namespace {

class FieldRunner {
public:
    FieldRunner(const SumsPtr& sums, const SuiteConfig& config)
        : sums_(sums), f_(sums->field()), ch_(sums->chars()), s_(ch_.special()), tol_(config.tol) {}

    std::vector<CheckReport> take() && { return std::move(out_); }

    CheckAccumulator acc(std::string id, std::optional<std::uint32_t> a, double tol) {
        return CheckAccumulator(std::move(id), f_.q(), a, tol);
    }
    CheckAccumulator acc(std::string id, std::optional<std::uint32_t> a = std::nullopt) {
        return acc(std::move(id), a, tol_);
    }
    void push(CheckAccumulator&& c) { out_.push_back(std::move(c).finish()); }

    void classical();
    void transforms();
    void main_suite(std::uint32_t a);
    void mellin_field();
    void mellin_single(std::uint32_t a);
    void mellin_pairs(std::uint32_t a);

private:
    void main_identity(const KatzContext& ctx, const KatzTables& t, const std::string& prefix);
    void p_j0_factor(const KatzContext& ctx, const KatzTables& t, const std::string& prefix);
    void mellin_v(const KatzContext& ctx, const KatzTables& t, const std::string& prefix);

    SumsPtr sums_;
    const FiniteField& f_;
    const CharacterGroup& ch_;
    SpecialChars s_;
    double tol_;
    std::vector<CheckReport> out_;
};

void FieldRunner::classical() {
    const double q = f_.q();
    const auto chars = ch_.all();
    const FieldElem minus_one = f_.minus_one();

    {
        auto c = acc("gauss_trivial");
        c.add(sums_->gauss(s_.eps), Complex{-1.0, 0.0}, [] { return std::string("eps"); });
        push(std::move(c));
    }
    {
        auto c = acc("jacobi_trivial");
        c.add(sums_->jacobi(s_.eps, s_.eps), Complex{q - 2.0, 0.0}, [] { return std::string("eps"); });
        push(std::move(c));
    }
    auto norm = acc("gauss_norm");
    auto conj = acc("jacobi_conjugate");
    auto eps = acc("jacobi_eps");
    auto cache = acc("gauss_cache");
    auto orth = acc("char_orthogonality");
    for (MultChar a : chars) {
        auto label = [a] { return a.label(); };
        cache.add(sums_->gauss(a), sums_->gauss_direct(a), label);
        Complex total{};
        for (std::uint32_t x = 1; x < f_.q(); ++x) total += ch_.eval_mult(a, FieldElem{x});
        orth.add(total, Complex((q - 1.0) * delta_char(a), 0.0), label);
        if (a.is_trivial()) continue;
        const Complex am1 = ch_.eval_mult(a, minus_one);
        norm.add(sums_->gauss(a) * sums_->gauss(a.conj()), am1 * q, label);
        conj.add(sums_->jacobi(a, a.conj()), -am1, label);
        eps.add(sums_->jacobi(s_.eps, a), Complex{-1.0, 0.0}, label);
    }
    push(std::move(norm));
    push(std::move(conj));
    push(std::move(eps));
    push(std::move(cache));
    push(std::move(orth));

    auto jg = acc("jacobi_gauss");
    auto refl = acc("jacobi_reflection");
    for (MultChar a : chars) {
        for (MultChar b : chars) {
            auto label = [a, b] { return pair_label(a, b); };
            const Complex jab = sums_->jacobi(a, b);
            if (!(a * b).is_trivial()) {
                jg.add(jab, sums_->gauss(a) * sums_->gauss(b) / sums_->gauss(a * b), label);
            }
            // b plays C: J(A, conj C) = A(-1) J(A, conj(A) C).
            if (!b.is_trivial()) {
                refl.add(sums_->jacobi(a, b.conj()), ch_.eval_mult(a, minus_one) * sums_->jacobi(a, a.conj() * b),
                         label);
            }
        }
    }
    push(std::move(jg));
    push(std::move(refl));
}

void FieldRunner::transforms() {
    const auto chars = ch_.all();
    auto hd = acc("hasse_davenport");
    auto quad = acc("quadratic_transform");
    auto gsum = acc("gauss_summation");
    for (MultChar d : chars) {
        auto label = [d] { return d.label(); };
        const Complex lhs = ch_.eval_mult(d, f_.from_int(4)) * sums_->gauss(d) * sums_->gauss(d * s_.phi);
        hd.add(lhs, sums_->gauss(d * d) * sums_->gauss(s_.phi), label);

        for (std::uint32_t zi = 2; zi < f_.q(); ++zi) {
            const FieldElem z{zi};
            if (z == f_.minus_one()) continue;
            const Complex left = sums_->hyp2f1(d, d * s_.A4, s_.A4, f_.pow(z, 4));
            const FieldElem zm1 = f_.sub(z, f_.one());
            const FieldElem arg = f_.neg(f_.square(f_.div(f_.add(z, f_.one()), zm1)));
            const Complex right = ch_.eval_mult(d.conj().pow(4), zm1) * sums_->hyp2f1(d, d * d * s_.phi, d * s_.phi, arg);
            quad.add(left, right, [d, zi] { return d.label() + ",z=" + std::to_string(zi); });
        }

        if (d != s_.eps && d != s_.A4 && d != s_.A4.conj()) {
            gsum.add(sums_->hyp2f1(d, d * s_.A4, s_.A4, f_.one()), sums_->gauss_summation_at_one(d), label);
        }
    }
    push(std::move(hd));
    push(std::move(quad));
    push(std::move(gsum));
}

void FieldRunner::main_identity(const KatzContext& ctx, const KatzTables& t, const std::string& prefix) {
    auto c = acc(prefix + "main_identity", ctx.a.index);
    for (std::uint32_t j = 0; j < f_.q(); ++j) {
        for (std::uint32_t k = 0; k < f_.q(); ++k) {
            c.add(t.p(FieldElem{j}, FieldElem{k}), t.v[j] * t.v[k], [j, k] { return jk_label(j, k); });
        }
    }
    push(std::move(c));
}

void FieldRunner::p_j0_factor(const KatzContext& ctx, const KatzTables& t, const std::string& prefix) {
    auto c = acc(prefix + "p_j0_factor", ctx.a.index);
    for (std::uint32_t j = 0; j < f_.q(); ++j) {
        c.add(t.p(FieldElem{j}, f_.zero()), t.v[0] * t.v[j], [j] { return "j=" + std::to_string(j); });
    }
    push(std::move(c));
}

void FieldRunner::mellin_v(const KatzContext& ctx, const KatzTables& t, const std::string& prefix) {
    auto c = acc(prefix + "mellin_v", ctx.a.index);
    for (MultChar chi : ch_.all()) {
        c.add(mellin_V_direct(ctx, t, chi), mellin_V_closed(ctx, chi), [chi] { return chi.label(); });
    }
    push(std::move(c));
    if (f_.unit_order() % 8 == 0) {
        auto o = acc(prefix + "mellin_v_octic", ctx.a.index);
        o.add(mellin_V_direct(ctx, t, s_.phi), mellin_V_octic(ctx), [this] { return s_.phi.label(); });
        push(std::move(o));
    }
}

void FieldRunner::main_suite(std::uint32_t a_index) {
    const KatzContext ctx = make_context(sums_, FieldElem{a_index});
    const KatzTables t = tabulate(ctx);
    const double q = f_.q();
    const std::optional<std::uint32_t> a = a_index;

    main_identity(ctx, t, "");

    const FieldElem zero = f_.zero();
    const Complex p00 = t.p(zero, zero);
    {
        auto c = acc("p00_closed", a);
        const Complex g = sums_->gauss(ctx.A4);
        const Complex closed = 2.0 + 2.0 * (g * g / (q * ch_.eval_mult(ctx.A4, f_.neg(ctx.a)))).real();
        c.add(p00, closed, [] { return std::string("j=0,k=0"); });
        push(std::move(c));
    }
    {
        auto c = acc("p00_square", a);
        c.add(p00, t.v[0] * t.v[0], [] { return std::string("j=0,k=0"); });
        push(std::move(c));
    }
    p_j0_factor(ctx, t, "");

    auto sym = acc("p_symmetry", a);
    auto par = acc("p_parity", a);
    auto real = acc("p_real", a, 1e-10);
    for (std::uint32_t j = 0; j < f_.q(); ++j) {
        for (std::uint32_t k = 0; k < f_.q(); ++k) {
            auto label = [j, k] { return jk_label(j, k); };
            const Complex pjk = t.p(FieldElem{j}, FieldElem{k});
            sym.add(pjk, t.p(FieldElem{k}, FieldElem{j}), label);
            par.add(t.p(f_.neg(FieldElem{j}), FieldElem{k}), pjk, label);
            real.add(pjk, Complex(pjk.real(), 0.0), label);
        }
    }
    push(std::move(sym));
    push(std::move(par));
    push(std::move(real));

    {
        auto c = acc("v_quarter_turn", a);
        for (std::uint32_t j = 1; j < f_.q(); ++j) {
            c.add(t.v[f_.mul(FieldElem{j}, ctx.i_elem).index], t.v[j], [j] { return "j=" + std::to_string(j); });
        }
        push(std::move(c));
    }
    {
        auto c = acc("tau_square", a);
        c.add(ctx.tau * ctx.tau, q * ch_.eval_mult(ctx.A4, f_.neg(ctx.a)), [] { return std::string("tau"); });
        push(std::move(c));
    }
    {
        const KatzContext neg = with_negated_tau(ctx);
        const auto v_neg = build_v_table(neg);
        auto flip = acc("tau_sign_flip", a);
        auto prod = acc("tau_sign_invariance", a, 1e-12);
        for (std::uint32_t j = 0; j < f_.q(); ++j) {
            flip.add(v_neg[j], -t.v[j], [j] { return "j=" + std::to_string(j); });
            for (std::uint32_t k = 0; k < f_.q(); ++k) {
                prod.add(v_neg[j] * v_neg[k], t.v[j] * t.v[k], [j, k] { return jk_label(j, k); });
            }
        }
        push(std::move(flip));
        push(std::move(prod));
    }
    {
        const KatzContext conj = make_context(sums_, FieldElem{a_index}, QuarticChoice::Conjugate);
        const KatzTables tc = tabulate(conj);
        main_identity(conj, tc, "conj_quartic_");
        auto c = acc("conj_quartic_p00_square", a);
        c.add(tc.p(zero, zero), tc.v[0] * tc.v[0], [] { return std::string("j=0,k=0"); });
        push(std::move(c));
        p_j0_factor(conj, tc, "conj_quartic_");
    }
}

void FieldRunner::mellin_field() {
    const KatzContext ctx = make_context(sums_, f_.one());
    auto kummer = acc("kummer");
    auto hc = acc("h_closed");
    for (MultChar nu : ch_.all()) {
        if (!nu.pow(4).is_trivial()) {
            kummer.add(kummer_hyp(ctx, nu), kummer_closed(ctx, nu), [nu] { return nu.label(); });
        }
        for (std::uint32_t j = 1; j < f_.q(); ++j) {
            hc.add(h(ctx, nu, FieldElem{j}), h_closed(ctx, nu, FieldElem{j}),
                   [nu, j] { return "D=" + nu.label() + ",j=" + std::to_string(j); });
        }
    }
    push(std::move(kummer));
    push(std::move(hc));
}

void FieldRunner::mellin_single(std::uint32_t a_index) {
    const KatzContext ctx = make_context(sums_, FieldElem{a_index});
    const KatzTables t = tabulate(ctx);
    const std::optional<std::uint32_t> a = a_index;
    const auto chars = ch_.all();

    mellin_v(ctx, t, "");

    auto y = acc("y_jacobi", a);
    auto vasm = acc("mellin_v_assembly", a);
    auto p0 = acc("mellin_p0", a);
    auto p0asm = acc("mellin_p0_assembly", a);
    auto wc = acc("w_closed", a);
    auto uw = acc("u_w_trivial", a);
    auto root_v = acc("root_choice_mellin_v", a);
    auto root_p0 = acc("root_choice_mellin_p0", a);
    for (MultChar chi : chars) {
        auto label = [chi] { return chi.label(); };
        p0.add(mellin_P0_direct(ctx, t, chi), mellin_P0_closed(ctx, chi), label);
    }
    for (MultChar lambda : chars) {
        // T((lambda A4)^2) from U and W.
        const MultChar chi = (lambda * ctx.A4).pow(2);
        p0asm.add(mellin_P0_assembled(ctx, lambda), mellin_P0_direct(ctx, t, chi),
                  [lambda] { return "lambda=" + lambda.label(); });
    }
    for (MultChar nu : chars) {
        auto label = [nu] { return "nu=" + nu.label(); };
        const MultChar chi = nu.pow(4);
        const MultChar lambda = nu * nu * ctx.A4.conj();
        if (!(lambda * lambda).is_trivial()) {
            y.add(Y(ctx, lambda), Y_closed(ctx, nu), label);
            vasm.add(mellin_V_assembled(ctx, nu), mellin_V_direct(ctx, t, chi), label);
        }
        if (!chi.is_trivial()) {
            wc.add(W(ctx, lambda), W_closed(ctx, nu), label);
        }
        for (int s = 1; s < 4; ++s) {
            const MultChar other = nu * ctx.A4.pow(s);
            root_v.add(mellin_V_from_root(ctx, other), mellin_V_from_root(ctx, nu), label);
            root_p0.add(mellin_P0_from_root(ctx, other), mellin_P0_from_root(ctx, nu), label);
        }
    }
    {
        // chi trivial: lambda A4 in {eps, phi}.
        const double q = f_.q();
        const Complex quart = ch_.eval_mult(ctx.A4, ctx.a) + ch_.eval_mult(ctx.A4.conj(), ctx.a);
        for (MultChar lambda : {ctx.A4.conj(), ctx.A4}) {
            uw.add(U(ctx, lambda), (q - 1.0) * quart, [lambda] { return "U,lambda=" + lambda.label(); });
        }
        uw.add(W(ctx, ctx.A4.conj()) + W(ctx, ctx.A4), W_trivial_pair_closed(ctx), [] { return std::string("W pair"); });
    }
    push(std::move(y));
    push(std::move(vasm));
    push(std::move(p0));
    push(std::move(p0asm));
    push(std::move(wc));
    push(std::move(uw));
    push(std::move(root_v));
    push(std::move(root_p0));

    const KatzContext conj = make_context(sums_, FieldElem{a_index}, QuarticChoice::Conjugate);
    mellin_v(conj, tabulate(conj), "conj_quartic_");
}

void FieldRunner::mellin_pairs(std::uint32_t a_index) {
    const KatzContext ctx = make_context(sums_, FieldElem{a_index});
    const KatzTables t = tabulate(ctx);
    const std::optional<std::uint32_t> a = a_index;
    const auto chars = ch_.all();
    const std::uint32_t order = ch_.size();

    std::vector<Complex> s_direct(order);
    std::vector<Complex> s_closed(order);
    for (MultChar chi : chars) {
        s_direct[chi.exponent()] = mellin_V_direct(ctx, t, chi);
        s_closed[chi.exponent()] = mellin_V_closed(ctx, chi);
    }

    std::vector<Complex> t_direct(std::size_t{order} * order);
    for (MultChar c1 : chars) {
        for (MultChar c2 : chars) t_direct[std::size_t{c1.exponent()} * order + c2.exponent()] = double_mellin_direct(ctx, t, c1, c2);
    }
    auto T = [&](MultChar c1, MultChar c2) { return t_direct[std::size_t{c1.exponent()} * order + c2.exponent()]; };

    auto dm = acc("double_mellin", a);
    auto sym = acc("double_mellin_symmetry", a);
    auto prod = acc("mellin_product", a);
    for (MultChar c1 : chars) {
        for (MultChar c2 : chars) {
            auto label = [c1, c2] { return pair_label(c1, c2); };
            dm.add(T(c1, c2), double_mellin_evaluated(ctx, c1, c2), label);
            sym.add(T(c1, c2), T(c2, c1), label);
            prod.add(s_direct[c1.exponent()] * s_direct[c2.exponent()], T(c1, c2), label);
        }
    }
    push(std::move(dm));
    push(std::move(sym));
    push(std::move(prod));

    auto assembly = acc("double_mellin_assembly", a);
    for (MultChar l1 : chars) {
        for (MultChar l2 : chars) {
            const MultChar c1 = l1 * l1 * s_.phi;
            const MultChar c2 = l2 * l2 * s_.phi;
            assembly.add(double_mellin_assembled(ctx, l1, l2), T(c1, c2),
                         [l1, l2] { return "lambda" + pair_label(l1, l2); });
        }
    }
    push(std::move(assembly));

    auto hl = acc("h_lambda", a);
    for (MultChar l1 : chars) {
        const MultChar c1 = l1 * l1 * s_.phi;
        const Complex closed = ch_.is_fourth_power(c1) ? H_closed(ctx, ch_.fourth_root(c1)) : Complex{};
        hl.add(H_direct(ctx, l1), closed, [l1] { return "lambda=" + l1.label(); });
    }
    push(std::move(hl));

    auto root = acc("root_choice_double_mellin", a);
    auto rj = acc("r_coeffs", a);
    auto rh = acc("r_coeffs_h", a);
    auto ra = acc("r_assembly", a);
    for (MultChar nu1 : chars) {
        const RCoeffs gauss_form = r_coeffs_gauss(ctx, nu1);
        const RCoeffs jacobi_form = r_coeffs(ctx, nu1, nu1.conj());
        const RCoeffs h_form = r_coeffs_from_h(ctx, nu1);
        for (int k = 0; k < 4; ++k) {
            auto label = [nu1, k] { return "nu1=" + nu1.label() + ",k=" + std::to_string(k); };
            rj.add(jacobi_form[k], gauss_form[k], label);
            rh.add(h_form[k], gauss_form[k], label);
        }
        const MultChar chi1 = nu1.pow(4);
        ra.add(r_assemble(ctx, jacobi_form), T(chi1, chi1.conj()), [nu1] { return "nu1=" + nu1.label(); });
        for (MultChar nu2 : chars) {
            const Complex base = double_mellin_closed(ctx, nu1, nu2);
            for (int s = 0; s < 4; ++s) {
                for (int u = 0; u < 4; ++u) {
                    if (s == 0 && u == 0) continue;
                    root.add(double_mellin_closed(ctx, nu1 * ctx.A4.pow(s), nu2 * ctx.A4.pow(u)), base,
                             [nu1, nu2, s, u] {
                                 return "nu" + pair_label(nu1, nu2) + ",shift=" + std::to_string(s) + std::to_string(u);
                             });
                }
            }
        }
    }
    push(std::move(root));
    push(std::move(rj));
    push(std::move(rh));
    push(std::move(ra));

    auto inv = acc("inverse_mellin_v", a);
    for (std::uint32_t j = 1; j < f_.q(); ++j) {
        auto label = [j] { return "j=" + std::to_string(j); };
        inv.add(inverse_mellin(ch_, s_direct, FieldElem{j}), t.v[j], label);
        inv.add(inverse_mellin(ch_, s_closed, FieldElem{j}), t.v[j], label);
    }
    push(std::move(inv));
}

}  // namespace

FieldRun run_field(const SumsPtr& sums, const SuiteConfig& config) {
    const auto& f = sums->field();
    FieldRunner runner(sums, config);
    auto has = [&](Suite s) { return std::find(config.suites.begin(), config.suites.end(), s) != config.suites.end(); };

    if (has(Suite::Classical)) runner.classical();
    if (has(Suite::Transforms)) runner.transforms();
    if (has(Suite::Main)) {
        for (auto a : select_a(f, config.a_policy)) runner.main_suite(a);
    }
    if (has(Suite::Mellin)) {
        runner.mellin_field();
        for (auto a : select_a(f, config.a_policy)) runner.mellin_single(a);
        for (auto a : select_a_for_pairs(f, config.a_policy)) runner.mellin_pairs(a);
    }
    return FieldRun{f.params(), f.generator().index, std::move(runner).take()};
}

RunResult run(const SuiteConfig& config) {
    validate(config);
    RunResult result;
    for (auto [p, n] : config.fields) result.fields.push_back(run_field(build_sums(p, n), config));
    return result;
}

}  // namespace katzsum
