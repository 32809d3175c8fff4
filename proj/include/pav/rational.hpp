#pragma once

#include <cstdio>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pav {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction, always in lowest terms with positive
/// denominator (cpp_rational normalizes on construction). Bound comparisons
/// go through this type only; no floating point is involved anywhere a
/// verdict depends on.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (int i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;  // exact: c is C(n-k+i, i) after this step
    }
    return c;
}

/// "112/13" for proper fractions, "6" when the denominator reduces to 1.
inline std::string fraction_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

/// Display-only decimal approximation, 6 significant digits. Never used in
/// comparisons.
inline std::string decimal_string(const Rational& q) {
    double v = q.convert_to<double>();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace pav
