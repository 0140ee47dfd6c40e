#include "dpcover/int_poly.hpp"

#include <algorithm>

namespace dpcover {

IntPoly::IntPoly(std::vector<CheckedInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntPoly IntPoly::constant(CheckedInt c) { return IntPoly({c}); }

IntPoly IntPoly::x() { return IntPoly({CheckedInt(0), CheckedInt(1)}); }

IntPoly IntPoly::monomial(CheckedInt c, int k) {
    std::vector<CheckedInt> v(static_cast<std::size_t>(k) + 1, CheckedInt(0));
    v.back() = c;
    return IntPoly(std::move(v));
}

CheckedInt IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return CheckedInt(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

CheckedInt IntPoly::leading() const { return coeffs_.empty() ? CheckedInt(0) : coeffs_.back(); }

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<CheckedInt> out(std::max(coeffs_.size(), o.coeffs_.size()), CheckedInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<CheckedInt> out(std::max(coeffs_.size(), o.coeffs_.size()), CheckedInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<CheckedInt> out(coeffs_.size() + o.coeffs_.size() - 1, CheckedInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly acc = constant(CheckedInt(1));
    IntPoly base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

CheckedInt IntPoly::eval(CheckedInt x) const {
    CheckedInt acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        CheckedInt c = coeff(k);
        if (c.is_zero()) continue;
        bool neg = c.negative();
        CheckedInt mag = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool unit = mag == CheckedInt(1);
        if (k == 0 || !unit) out += mag.str();
        if (k >= 1) out += var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

} // namespace dpcover
