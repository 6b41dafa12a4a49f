#include "katzsum/chars.hpp"

#include <cmath>
#include <numbers>

#include "katzsum/error.hpp"

namespace katzsum {

namespace {

// exp(2 pi i k / n), exact at the quarter points.
Complex root_of_unity(std::uint64_t k, std::uint64_t n) {
    k %= n;
    if (k == 0) return {1.0, 0.0};
    if (4 * k == n) return {0.0, 1.0};
    if (2 * k == n) return {-1.0, 0.0};
    if (4 * k == 3 * n) return {0.0, -1.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    return std::polar(1.0, angle);
}

}  // namespace

CharacterGroup::CharacterGroup(FieldPtr field) : field_(std::move(field)) {
    const std::uint32_t order = field_->unit_order();
    roots_.resize(order);
    for (std::uint32_t k = 0; k < order; ++k) roots_[k] = root_of_unity(k, order);

    const std::uint32_t p = field_->p();
    std::vector<Complex> additive(p);
    for (std::uint32_t t = 0; t < p; ++t) additive[t] = root_of_unity(t, p);
    psi_.resize(field_->q());
    for (std::uint32_t y = 0; y < field_->q(); ++y) psi_[y] = additive[field_->trace(FieldElem{y})];
}

std::vector<MultChar> CharacterGroup::all() const {
    std::vector<MultChar> out;
    out.reserve(size());
    for (std::uint32_t m = 0; m < size(); ++m) out.push_back(chi(m));
    return out;
}

Complex CharacterGroup::unit_root(std::int64_t k) const {
    const auto n = static_cast<std::int64_t>(size());
    return roots_[static_cast<std::size_t>(((k % n) + n) % n)];
}

Complex CharacterGroup::eval_mult(MultChar chi, FieldElem x) const {
    if (x.is_zero()) return {0.0, 0.0};
    const std::uint64_t k = static_cast<std::uint64_t>(chi.exponent()) * field_->dlog(x);
    return roots_[k % size()];
}

SpecialChars CharacterGroup::special() const {
    const std::uint32_t order = size();
    SpecialChars s{chi(0), chi(order / 2), chi(order / 4), std::nullopt};
    if (order % 8 == 0) s.A8 = chi(order / 8);
    return s;
}

MultChar CharacterGroup::fourth_root(MultChar chi_m) const {
    if (!is_fourth_power(chi_m)) {
        throw Error(Errc::NotFourthPower, chi_m.label() + " is not a fourth power");
    }
    return chi(chi_m.exponent() / 4);
}

}  // namespace katzsum
