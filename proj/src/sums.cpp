#include "katzsum/sums.hpp"

#include <cassert>

#include "katzsum/error.hpp"

namespace katzsum {

ClassicalSums::ClassicalSums(CharsPtr chars) : chars_(std::move(chars)) {
    gauss_.resize(chars_->size());
    for (std::uint32_t m = 0; m < chars_->size(); ++m) gauss_[m] = gauss_direct(chars_->chi(m));
}

Complex ClassicalSums::gauss_direct(MultChar a) const {
    Complex acc{};
    const auto& f = field();
    for (std::uint32_t y = 1; y < f.q(); ++y) {
        const FieldElem e{y};
        acc += chars_->eval_mult(a, e) * chars_->eval_add(e);
    }
    return acc;
}

Complex ClassicalSums::jacobi(MultChar a, MultChar b) const {
    Complex acc{};
    const auto& f = field();
    for (std::uint32_t y = 2; y < f.q(); ++y) {
        const FieldElem e{y};
        acc += chars_->eval_mult(a, e) * chars_->eval_mult(b, f.sub(f.one(), e));
    }
    return acc;
}

Complex ClassicalSums::hyp2f1(MultChar a, MultChar b, MultChar c, FieldElem x) const {
    if (x.is_zero()) return {};
    const auto& f = field();
    const MultChar b_bar_c = b.conj() * c;
    const MultChar a_bar = a.conj();
    Complex acc{};
    for (std::uint32_t y = 1; y < f.q(); ++y) {
        const FieldElem e{y};
        const FieldElem y_minus_1 = f.sub(e, f.one());
        const FieldElem one_minus_xy = f.sub(f.one(), f.mul(x, e));
        if (y_minus_1.is_zero() || one_minus_xy.is_zero()) continue;
        acc += chars_->eval_mult(b, e) * chars_->eval_mult(b_bar_c, y_minus_1) *
               chars_->eval_mult(a_bar, one_minus_xy);
    }
    return acc / static_cast<double>(f.q());
}

double ClassicalSums::check_hasse_davenport(MultChar a) const {
    const auto s = chars_->special();
    const Complex lhs = chars_->eval_mult(a, field().from_int(4)) * gauss(a) * gauss(a * s.phi);
    const Complex rhs = gauss(a * a) * gauss(s.phi);
    return std::abs(lhs - rhs);
}

double ClassicalSums::check_quad_transform(MultChar d, FieldElem z) const {
    const auto& f = field();
    if (z.is_zero() || z == f.one() || z == f.minus_one()) {
        throw Error(Errc::BadArgument, "z must avoid 0, 1, -1");
    }
    const auto s = chars_->special();
    const Complex lhs = hyp2f1(d, d * s.A4, s.A4, f.pow(z, 4));
    const FieldElem zm1 = f.sub(z, f.one());
    const FieldElem ratio = f.div(f.add(z, f.one()), zm1);
    const FieldElem arg = f.neg(f.square(ratio));
    const Complex rhs = chars_->eval_mult(d.conj().pow(4), zm1) * hyp2f1(d, d * d * s.phi, d * s.phi, arg);
    return std::abs(lhs - rhs);
}

Complex ClassicalSums::gauss_summation_at_one(MultChar d) const {
    const auto s = chars_->special();
    const MultChar d_bar_sq = d.conj() * d.conj();
    const Complex num = chars_->eval_mult(d.conj(), field().from_int(4)) * gauss(d_bar_sq);
    return div_gauss(div_gauss(num, d_bar_sq * s.phi), s.phi);
}

Complex ClassicalSums::div_gauss(Complex num, MultChar a) const {
    const Complex g = gauss(a);
    assert(std::abs(g) > 0.5);
    return num / g;
}

SumsPtr build_sums(std::uint32_t p, std::uint32_t n) {
    auto field = FiniteField::build(p, n);
    auto chars = std::make_shared<const CharacterGroup>(std::move(field));
    return std::make_shared<const ClassicalSums>(std::move(chars));
}

}  // namespace katzsum
