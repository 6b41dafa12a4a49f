#include "katzsum/gf.hpp"

#include <string>

#include "katzsum/error.hpp"

namespace katzsum {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::WrongResidue: return "WrongResidue";
        case Errc::TooLarge: return "TooLarge";
        case Errc::ZeroArgument: return "ZeroArgument";
        case Errc::NotFourthPower: return "NotFourthPower";
        case Errc::BadArgument: return "BadArgument";
        case Errc::ZeroParameter: return "ZeroParameter";
        case Errc::FourthPowerTrivial: return "FourthPowerTrivial";
        case Errc::ZeroX: return "ZeroX";
        case Errc::ZeroJ: return "ZeroJ";
        case Errc::MuNotQuartic: return "MuNotQuartic";
        case Errc::ConfigError: return "ConfigError";
        case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> factor_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return std::pair{static_cast<std::uint32_t>(q), 1u};
    std::uint32_t n = 0;
    while (q % p == 0) {
        q /= p;
        ++n;
    }
    if (q != 1) return std::nullopt;
    return std::pair{static_cast<std::uint32_t>(p), n};
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients low degree first

// Remainder of a modulo the monic polynomial m, over F_p.
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p) {
    const std::size_t dm = m.size() - 1;
    for (std::size_t k = a.size(); k-- > dm;) {
        const std::uint32_t c = a[k];
        if (c == 0) continue;
        for (std::size_t t = 0; t <= dm; ++t) {
            const std::size_t idx = k - dm + t;
            a[idx] = static_cast<std::uint32_t>((a[idx] + (p - c) * static_cast<std::uint64_t>(m[t])) % p);
        }
    }
    a.resize(dm);
    return a;
}

bool has_divisor_of_degree(const Poly& f, std::uint32_t d, std::uint32_t p) {
    // Enumerate every monic g of degree d.
    std::uint64_t count = 1;
    for (std::uint32_t k = 0; k < d; ++k) count *= p;
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t t = 0; t < count; ++t) {
        std::uint64_t v = t;
        for (std::uint32_t k = 0; k < d; ++k) {
            g[k] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        const Poly r = poly_rem(f, g, p);
        bool zero = true;
        for (auto c : r) zero = zero && c == 0;
        if (zero) return true;
    }
    return false;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const auto n = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; 2 * d <= n; ++d) {
        if (has_divisor_of_degree(f, d, p)) return false;
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree n, comparing c_0 first.
Poly smallest_irreducible(std::uint32_t p, std::uint32_t n) {
    std::uint64_t count = 1;
    for (std::uint32_t k = 0; k < n; ++k) count *= p;
    Poly f(n + 1, 0);
    f[n] = 1;
    for (std::uint64_t t = 0; t < count; ++t) {
        // Most significant digit of t is c_0.
        std::uint64_t v = t;
        for (std::uint32_t k = n; k-- > 0;) {
            f[k] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (is_irreducible(f, p)) return f;
    }
    return {};  // unreachable: irreducibles exist in every degree
}

class PolyArith {
public:
    PolyArith(std::uint32_t p, std::uint32_t n, Poly modulus)
        : p_(p), n_(n), modulus_(std::move(modulus)) {}

    Poly to_poly(std::uint32_t index) const {
        Poly out(n_, 0);
        for (std::uint32_t k = 0; k < n_; ++k) {
            out[k] = index % p_;
            index /= p_;
        }
        return out;
    }

    std::uint32_t to_index(const Poly& a) const {
        std::uint32_t idx = 0;
        for (std::uint32_t k = n_; k-- > 0;) idx = idx * p_ + a[k];
        return idx;
    }

    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
        const Poly a = to_poly(x);
        const Poly b = to_poly(y);
        Poly prod(2 * n_ - 1, 0);
        for (std::uint32_t s = 0; s < n_; ++s) {
            for (std::uint32_t t = 0; t < n_; ++t) {
                prod[s + t] = static_cast<std::uint32_t>((prod[s + t] + static_cast<std::uint64_t>(a[s]) * b[t]) % p_);
            }
        }
        return to_index(poly_rem(std::move(prod), modulus_, p_));
    }

    std::uint32_t pow(std::uint32_t x, std::uint64_t e) const {
        std::uint32_t result = 1;
        while (e > 0) {
            if (e & 1) result = mul(result, x);
            x = mul(x, x);
            e >>= 1;
        }
        return result;
    }

private:
    std::uint32_t p_;
    std::uint32_t n_;
    Poly modulus_;
};

}  // namespace

std::shared_ptr<const FiniteField> FiniteField::build(std::uint32_t p, std::uint32_t n) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (n == 0) throw Error(Errc::BadArgument, "extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        q *= p;
        if (q > kMaxFieldSize) {
            throw Error(Errc::TooLarge, std::to_string(p) + "^" + std::to_string(n) + " exceeds 2^16");
        }
    }
    if (q % 4 != 1) {
        throw Error(Errc::WrongResidue, "q = " + std::to_string(q) + " is not 1 mod 4");
    }

    std::shared_ptr<FiniteField> f(new FiniteField());
    f->params_.p = p;
    f->params_.n = n;
    f->params_.q = static_cast<std::uint32_t>(q);
    f->params_.modulus = smallest_irreducible(p, n);

    const PolyArith arith(p, n, f->params_.modulus);
    const std::uint32_t order = f->unit_order();
    const auto factors = prime_factors(order);

    std::uint32_t gen = 0;
    for (std::uint32_t c = 2; c < q && gen == 0; ++c) {
        bool primitive = true;
        for (auto r : factors) {
            if (arith.pow(c, order / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) gen = c;
    }
    f->generator_ = FieldElem{gen};

    f->exp_table_.resize(order);
    f->log_table_.assign(q, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t k = 0; k < order; ++k) {
        f->exp_table_[k] = cur;
        f->log_table_[cur] = k;
        cur = arith.mul(cur, gen);
    }

    f->neg_table_.resize(q);
    for (std::uint32_t x = 0; x < q; ++x) {
        std::uint32_t r = 0;
        std::uint32_t w = 1;
        std::uint32_t v = x;
        for (std::uint32_t k = 0; k < n; ++k) {
            r += ((p - v % p) % p) * w;
            v /= p;
            w *= p;
        }
        f->neg_table_[x] = r;
    }

    f->i_elem_ = FieldElem{f->exp_table_[order / 4]};

    // Tr(x) = x + x^p + ... + x^(p^(n-1)); the result lies in the prime subfield.
    f->trace_table_.assign(q, 0);
    for (std::uint32_t x = 1; x < q; ++x) {
        FieldElem acc{0};
        FieldElem conj{x};
        for (std::uint32_t k = 0; k < n; ++k) {
            acc = f->add(acc, conj);
            conj = f->pow(conj, p);
        }
        f->trace_table_[x] = acc.index;
    }
    return f;
}

FieldElem FiniteField::from_int(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(params_.p);
    return FieldElem{static_cast<std::uint32_t>(((v % p) + p) % p)};
}

FieldElem FiniteField::elem(std::uint32_t index) const {
    if (index >= params_.q) {
        throw Error(Errc::BadArgument, "element index " + std::to_string(index) + " out of range");
    }
    return FieldElem{index};
}

FieldElem FiniteField::add(FieldElem x, FieldElem y) const {
    const std::uint32_t p = params_.p;
    if (params_.n == 1) return FieldElem{(x.index + y.index) % p};
    std::uint32_t a = x.index;
    std::uint32_t b = y.index;
    std::uint32_t r = 0;
    std::uint32_t w = 1;
    while (a != 0 || b != 0) {
        r += ((a % p + b % p) % p) * w;
        a /= p;
        b /= p;
        w *= p;
    }
    return FieldElem{r};
}

FieldElem FiniteField::neg(FieldElem x) const { return FieldElem{neg_table_[x.index]}; }

FieldElem FiniteField::sub(FieldElem x, FieldElem y) const { return add(x, neg(y)); }

FieldElem FiniteField::mul(FieldElem x, FieldElem y) const {
    if (x.is_zero() || y.is_zero()) return FieldElem{0};
    std::uint32_t k = log_table_[x.index] + log_table_[y.index];
    const std::uint32_t order = unit_order();
    if (k >= order) k -= order;
    return FieldElem{exp_table_[k]};
}

FieldElem FiniteField::inv(FieldElem x) const {
    if (x.is_zero()) throw Error(Errc::ZeroArgument, "inverse of zero");
    const std::uint32_t l = log_table_[x.index];
    return FieldElem{exp_table_[l == 0 ? 0 : unit_order() - l]};
}

FieldElem FiniteField::div(FieldElem x, FieldElem y) const { return mul(x, inv(y)); }

FieldElem FiniteField::pow(FieldElem x, std::int64_t e) const {
    if (x.is_zero()) {
        if (e < 0) throw Error(Errc::ZeroArgument, "negative power of zero");
        return FieldElem{e == 0 ? 1u : 0u};
    }
    return exp(static_cast<std::int64_t>(log_table_[x.index]) * e);
}

std::uint32_t FiniteField::dlog(FieldElem x) const {
    if (x.is_zero()) throw Error(Errc::ZeroArgument, "discrete log of zero");
    return log_table_[x.index];
}

FieldElem FiniteField::exp(std::int64_t k) const {
    const auto order = static_cast<std::int64_t>(unit_order());
    return FieldElem{exp_table_[static_cast<std::size_t>(((k % order) + order) % order)]};
}

std::vector<std::uint32_t> FiniteField::digits(FieldElem x) const {
    std::vector<std::uint32_t> out(params_.n, 0);
    std::uint32_t v = x.index;
    for (auto& d : out) {
        d = v % params_.p;
        v /= params_.p;
    }
    return out;
}

}  // namespace katzsum
