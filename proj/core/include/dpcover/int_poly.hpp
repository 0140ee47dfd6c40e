#pragma once

#include <string>
#include <vector>

#include "dpcover/checked_int.hpp"

namespace dpcover {

/// Integer-coefficient polynomial, lowest degree first. The zero polynomial
/// has an empty coefficient list; otherwise the leading coefficient is
/// nonzero. All arithmetic is exact and checked.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<CheckedInt> coeffs);

    static IntPoly constant(CheckedInt c);
    /// The monomial x.
    static IntPoly x();
    /// c * x^k
    static IntPoly monomial(CheckedInt c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<CheckedInt>& coeffs() const { return coeffs_; }
    CheckedInt coeff(int k) const;
    CheckedInt leading() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly pow(unsigned e) const;

    CheckedInt eval(CheckedInt x) const;

    bool operator==(const IntPoly&) const = default;

    /// Human form, highest degree first, e.g. "m^4 - 4m^3 + 6m^2 - 3m".
    std::string str(const std::string& var = "m") const;

private:
    void trim();
    std::vector<CheckedInt> coeffs_;
};

} // namespace dpcover
