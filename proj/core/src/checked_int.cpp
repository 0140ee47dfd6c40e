#include "dpcover/checked_int.hpp"

#include <algorithm>
#include <ostream>

namespace dpcover {

std::string CheckedInt::str() const {
    if (v_ == 0) return "0";
    unsigned __int128 u;
    bool neg = v_ < 0;
    if (neg) {
        // two's complement: -v is representable as unsigned even for INT128_MIN
        u = static_cast<unsigned __int128>(-(v_ + 1)) + 1;
    } else {
        u = static_cast<unsigned __int128>(v_);
    }
    std::string out;
    while (u) {
        out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

CheckedInt CheckedInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("CheckedInt: empty string");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("CheckedInt: no digits");
    CheckedInt acc(0);
    const CheckedInt ten(10);
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw std::invalid_argument("CheckedInt: bad digit in \"" + std::string(s) + "\"");
        acc = acc * ten + CheckedInt(c - '0');
    }
    return neg ? -acc : acc;
}

CheckedInt div_exact(CheckedInt a, CheckedInt b) {
    if (b.is_zero()) throw InternalError("div_exact: division by zero");
    __int128 q = a.raw() / b.raw();
    if (q * b.raw() != a.raw())
        throw InternalError("div_exact: " + a.str() + " not divisible by " + b.str());
    return CheckedInt::from_raw(q);
}

bool divides(CheckedInt b, CheckedInt a) {
    if (b.is_zero()) return false;
    return a.raw() % b.raw() == 0;
}

std::ostream& operator<<(std::ostream& os, const CheckedInt& x) { return os << x.str(); }

} // namespace dpcover
