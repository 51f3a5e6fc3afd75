#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace selfdual {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt from_decimal(const std::string& s) { return BigInt(s); }

/// Floor and ceiling of a/b for b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;  // truncates toward zero
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && (a > 0)) ++q;
    return q;
}

}  // namespace selfdual
