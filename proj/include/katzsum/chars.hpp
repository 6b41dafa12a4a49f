#pragma once

// Multiplicative characters of F_q* and the canonical additive character.
//
// chi_m(g^t) = exp(2 pi i m t / (q-1)), extended by chi_m(0) = 0 for every m,
// the trivial character included. All values come from one table of (q-1)-th
// roots of unity, so products of character values are index additions.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "katzsum/gf.hpp"

namespace katzsum {

using Complex = std::complex<double>;

class MultChar {
public:
    constexpr MultChar() = default;
    /// Character with exponent m reduced mod `order` (= q - 1).
    constexpr MultChar(std::int64_t m, std::uint32_t order)
        : m_(static_cast<std::uint32_t>(((m % static_cast<std::int64_t>(order)) + order) % order)),
          order_(order) {}

    constexpr std::uint32_t exponent() const { return m_; }
    constexpr std::uint32_t order() const { return order_; }
    constexpr bool is_trivial() const { return m_ == 0; }

    constexpr MultChar conj() const { return MultChar(-static_cast<std::int64_t>(m_), order_); }
    constexpr MultChar pow(std::int64_t e) const {
        // m < 2^16 and |e| small in practice; reduce e first to stay in range.
        const auto ord = static_cast<std::int64_t>(order_);
        return MultChar(static_cast<std::int64_t>(m_) * (((e % ord) + ord) % ord), order_);
    }

    friend constexpr MultChar operator*(MultChar a, MultChar b) {
        return MultChar(static_cast<std::int64_t>(a.m_) + b.m_, a.order_);
    }
    friend constexpr bool operator==(MultChar, MultChar) = default;

    /// "chi_m", the external name used in reports.
    std::string label() const { return "chi_" + std::to_string(m_); }

private:
    std::uint32_t m_ = 0;
    std::uint32_t order_ = 1;
};

struct SpecialChars {
    MultChar eps;
    MultChar phi;
    MultChar A4;
    std::optional<MultChar> A8;  // present iff 8 | q - 1
};

/// 1 for the trivial character, 0 otherwise.
inline int delta_char(MultChar a) { return a.is_trivial() ? 1 : 0; }
inline int delta_kron(FieldElem j, FieldElem k) { return j == k ? 1 : 0; }

class CharacterGroup {
public:
    explicit CharacterGroup(FieldPtr field);

    const FiniteField& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::uint32_t size() const { return field_->unit_order(); }

    MultChar chi(std::int64_t m) const { return MultChar(m, size()); }
    std::vector<MultChar> all() const;

    /// exp(2 pi i k / (q-1)).
    Complex unit_root(std::int64_t k) const;

    Complex eval_mult(MultChar chi, FieldElem x) const;
    /// psi(y) = exp(2 pi i Tr(y) / p).
    Complex eval_add(FieldElem y) const { return psi_[y.index]; }

    SpecialChars special() const;

    bool is_fourth_power(MultChar chi) const { return chi.exponent() % 4 == 0; }
    /// chi_(m/4); throws Error{NotFourthPower}. The other roots are this times A4^k.
    MultChar fourth_root(MultChar chi) const;

private:
    FieldPtr field_;
    std::vector<Complex> roots_;  // q-1 entries
    std::vector<Complex> psi_;    // q entries
};

using CharsPtr = std::shared_ptr<const CharacterGroup>;

}  // namespace katzsum
