#ifndef FGM_RATIONAL_HPP
#define FGM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace fgm {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// Parses `p/q` or a bare integer `p` (q = 1). Leading sign allowed on p only.
inline Rational parse_rational(std::string_view text) {
    auto is_integer = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer(num, true) || !is_integer(den, false))
        throw DomainError("not a rational literal: '" + std::string(text) + "'");

    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    mpz_class p(n, 10), q(std::string(den), 10);
    if (q == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// Canonical `p/q` form; integers are written with q = 1.
inline std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace fgm

#endif  // FGM_RATIONAL_HPP
