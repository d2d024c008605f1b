#pragma once

// Exact rational scalar type and string conversion.
//
// All geometric computation in this library runs on arbitrary-precision
// rationals; there is no floating-point path anywhere. Accepted input
// formats are integers ("42"), fractions ("-2/3") and finite decimals
// ("0.25"), all converted exactly.

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hov {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;  // always canonical, den > 0

inline std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

namespace detail {

inline bool is_plain_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace detail

// Parses "123", "-2/3" or "0.25" into an exact rational. Anything else
// (exponents, hex floats, NaN, empty strings) is rejected.
inline Rat parse_scalar(const std::string& text) {
    const auto fail = [&]() -> Rat {
        throw std::invalid_argument("not an exact rational literal: '" + text + "'");
    };
    if (text.empty()) return fail();

    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!detail::is_plain_integer(num) || !detail::is_plain_integer(den)) return fail();
        Int d(den);
        if (d == 0) return fail();
        return Rat(Int(num), d);
    }

    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string head = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.empty()) return fail();
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
        bool neg = false;
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
            neg = head[0] == '-';
            head = head.substr(1);
        }
        if (!head.empty() && !detail::is_plain_integer(head)) return fail();
        Int ip = head.empty() ? Int(0) : Int(head);
        Int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Rat value = Rat(ip) + Rat(Int(frac), scale);
        return neg ? -value : value;
    }

    if (!detail::is_plain_integer(text)) return fail();
    return Rat(Int(text));
}

}  // namespace hov
