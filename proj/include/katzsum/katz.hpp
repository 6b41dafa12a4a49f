#pragma once

// Katz's mixed exponential sums P(j,k) and the minimum uncertainty sums V(j).

#include <cstdint>
#include <span>
#include <vector>

#include "katzsum/sums.hpp"

namespace katzsum {

enum class QuarticChoice {
    Fixed,      // A4 = chi_((q-1)/4), value i at g
    Conjugate,  // conj(A4)
};

struct KatzContext {
    SumsPtr sums;
    FieldElem a;
    MultChar A4;
    FieldElem i_elem;
    Complex tau;

    const FiniteField& field() const { return sums->field(); }
    const CharacterGroup& chars() const { return sums->chars(); }
};

/// tau = -(principal square root of q A4(-a)), the root with argument in [0, pi).
/// Throws Error{ZeroParameter} for a = 0.
KatzContext make_context(SumsPtr sums, FieldElem a, QuarticChoice quartic = QuarticChoice::Fixed);

/// Same context with tau replaced by -tau.
KatzContext with_negated_tau(KatzContext ctx);

/// P(j,k) = d(j,k) + phi(-1) d(j,-k) + G(phi)^-1 sum_x phi(a/x - x) psi(x(j+k)^2 + (a/x)(j-k)^2).
Complex P(const KatzContext& ctx, FieldElem j, FieldElem k);

/// V(j) = tau^-1 sum_x A4(x) psi(x + a j^4 / x) for j != 0; V(0) = G(A4)/tau + tau/G(A4).
Complex V(const KatzContext& ctx, FieldElem j);

/// Dense q x q table of P, row-major by j.
class PTable {
public:
    PTable() = default;
    PTable(std::uint32_t q, std::vector<Complex> values) : q_(q), values_(std::move(values)) {}

    std::uint32_t q() const { return q_; }
    Complex operator()(FieldElem j, FieldElem k) const { return values_[std::size_t{j.index} * q_ + k.index]; }
    std::span<const Complex> row(FieldElem j) const {
        return std::span<const Complex>(values_).subspan(std::size_t{j.index} * q_, q_);
    }

private:
    std::uint32_t q_ = 0;
    std::vector<Complex> values_;
};

/// Fills the P table by rows, split over up to `workers` threads (0 = hardware concurrency).
PTable build_p_table(const KatzContext& ctx, unsigned workers = 0);

std::vector<Complex> build_v_table(const KatzContext& ctx);

/// Both tables for one context, the input of every direct Mellin transform.
struct KatzTables {
    std::vector<Complex> v;
    PTable p;
};

KatzTables tabulate(const KatzContext& ctx);

}  // namespace katzsum
