#pragma once

// Finite fields F_q = F_p[x]/(f) for odd q = p^n with q = 1 (mod 4).
//
// Elements are dense indices 0..q-1; the index of c_0 + c_1 x + ... + c_{n-1} x^{n-1}
// is sum c_k p^k. Multiplication goes through exp/log tables of a fixed generator,
// addition is digit-wise mod p. Everything is built once and then read-only.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace katzsum {

inline constexpr std::uint32_t kMaxFieldSize = 1u << 16;

struct FieldElem {
    std::uint32_t index = 0;

    constexpr FieldElem() = default;
    constexpr explicit FieldElem(std::uint32_t i) : index(i) {}

    constexpr bool is_zero() const { return index == 0; }
    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

struct FieldParams {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::uint32_t q = 0;
    /// Monic modulus, low degree first: (c_0, ..., c_{n-1}, 1).
    std::vector<std::uint32_t> modulus;
};

bool is_prime(std::uint64_t v);

/// Splits q into (p, n) with q = p^n, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> factor_prime_power(std::uint64_t q);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

class FiniteField {
public:
    /// Throws Error{NotPrime | WrongResidue | TooLarge}.
    static std::shared_ptr<const FiniteField> build(std::uint32_t p, std::uint32_t n);

    const FieldParams& params() const { return params_; }
    std::uint32_t p() const { return params_.p; }
    std::uint32_t n() const { return params_.n; }
    std::uint32_t q() const { return params_.q; }
    /// Order of the multiplicative group, q - 1.
    std::uint32_t unit_order() const { return params_.q - 1; }

    FieldElem zero() const { return FieldElem{0}; }
    FieldElem one() const { return FieldElem{1}; }
    FieldElem generator() const { return generator_; }
    /// g^((q-1)/4); squares to -1.
    FieldElem i_elem() const { return i_elem_; }
    FieldElem minus_one() const { return exp(unit_order() / 2); }

    /// Image of the integer v in the prime subfield.
    FieldElem from_int(std::int64_t v) const;
    FieldElem elem(std::uint32_t index) const;

    FieldElem add(FieldElem x, FieldElem y) const;
    FieldElem sub(FieldElem x, FieldElem y) const;
    FieldElem neg(FieldElem x) const;
    FieldElem mul(FieldElem x, FieldElem y) const;
    /// Throws Error{ZeroArgument} for x = 0.
    FieldElem inv(FieldElem x) const;
    FieldElem div(FieldElem x, FieldElem y) const;
    /// 0^0 = 1; negative powers of 0 throw Error{ZeroArgument}.
    FieldElem pow(FieldElem x, std::int64_t e) const;
    FieldElem square(FieldElem x) const { return mul(x, x); }

    /// Absolute trace to F_p, as an integer 0..p-1.
    std::uint32_t trace(FieldElem x) const { return trace_table_[x.index]; }
    /// Discrete log base g; throws Error{ZeroArgument} for x = 0.
    std::uint32_t dlog(FieldElem x) const;
    /// g^k for any integer k.
    FieldElem exp(std::int64_t k) const;

    std::span<const std::uint32_t> exp_table() const { return exp_table_; }
    std::span<const std::uint32_t> log_table() const { return log_table_; }
    std::span<const std::uint32_t> trace_table() const { return trace_table_; }

    /// Base-p digits of an index, low first, length n.
    std::vector<std::uint32_t> digits(FieldElem x) const;

private:
    FiniteField() = default;

    FieldParams params_;
    FieldElem generator_;
    FieldElem i_elem_;
    std::vector<std::uint32_t> exp_table_;    // q-1 entries
    std::vector<std::uint32_t> log_table_;    // q entries, log_table_[0] unused
    std::vector<std::uint32_t> neg_table_;
    std::vector<std::uint32_t> trace_table_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

}  // namespace katzsum
