#pragma once

// Gauss and Jacobi sums, the finite-field 2F1, and the two transformation
// relations used downstream (Hasse-Davenport product, quadratic transformation).

#include <algorithm>
#include <memory>
#include <vector>

#include "katzsum/chars.hpp"

namespace katzsum {

inline constexpr double kDefaultTol = 1e-8;

/// Blended error |lhs - rhs| / (1 + max(|lhs|, |rhs|)).
inline double scaled_error(Complex lhs, Complex rhs) {
    return std::abs(lhs - rhs) / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
}

/// A comparison passes iff |lhs - rhs| <= tol * (1 + max(|lhs|, |rhs|)).
inline bool agrees(Complex lhs, Complex rhs, double tol = kDefaultTol) {
    return std::abs(lhs - rhs) <= tol * (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
}

class ClassicalSums {
public:
    /// Precomputes G(A) for all q-1 characters by direct summation, O(q^2).
    explicit ClassicalSums(CharsPtr chars);

    const CharacterGroup& chars() const { return *chars_; }
    const CharsPtr& chars_ptr() const { return chars_; }
    const FiniteField& field() const { return chars_->field(); }

    /// G(A) = sum_y A(y) psi(y), from the cache.
    Complex gauss(MultChar a) const { return gauss_[a.exponent()]; }
    /// G(A) by the defining sum, bypassing the cache.
    Complex gauss_direct(MultChar a) const;

    /// J(A, B) = sum_y A(y) B(1 - y).
    Complex jacobi(MultChar a, MultChar b) const;

    /// 2F1(A, B; C | x) = (eps(x)/q) sum_y B(y) (conj(B) C)(y - 1) conj(A)(1 - x y).
    Complex hyp2f1(MultChar a, MultChar b, MultChar c, FieldElem x) const;

    /// |A(4) G(A) G(A phi) - G(A^2) G(phi)|.
    double check_hasse_davenport(MultChar a) const;

    /// Residual of 2F1(D, D A4; A4 | z^4) = conj(D)^4(z-1) 2F1(D, D^2 phi; D phi | -((z+1)/(z-1))^2).
    /// Throws Error{BadArgument} for z in {0, 1, -1}.
    double check_quad_transform(MultChar d, FieldElem z) const;

    /// Closed value of 2F1(D, D A4; A4 | 1):
    /// conj(D)(4) G(conj(D)^2) / (G(conj(D)^2 phi) G(phi)).
    Complex gauss_summation_at_one(MultChar d) const;

    /// Division by a Gauss sum; |G(A)| is 1 or sqrt(q), never 0.
    Complex div_gauss(Complex num, MultChar a) const;

private:
    CharsPtr chars_;
    std::vector<Complex> gauss_;
};

using SumsPtr = std::shared_ptr<const ClassicalSums>;

/// Field, characters and Gauss-sum cache for F_(p^n) in one call.
SumsPtr build_sums(std::uint32_t p, std::uint32_t n);

}  // namespace katzsum
