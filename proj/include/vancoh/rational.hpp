#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <string>
#include <utility>

#include "vancoh/errors.hpp"

namespace vancoh {

// All scalar arithmetic in the library is exact.  Rationals are kept in
// lowest terms with positive denominator (cpp_rational canonicalizes on
// every operation); there is no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return numerator(r); }
inline BigInt rat_den(const Rat& r) { return denominator(r); }

// cpp_rational's two-argument constructor insists on a positive
// denominator; this one normalizes the sign first.
inline Rat make_rat(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

inline BigInt rat_to_integer(const Rat& r, const char* context) {
    if (!rat_is_integer(r)) {
        throw InternalInvariantError(std::string(context) + ": expected an integer, got " +
                                     r.str());
    }
    return numerator(r);
}

inline long long big_to_ll(const BigInt& v, const char* context) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
        throw InternalInvariantError(std::string(context) + ": value out of range: " + v.str());
    }
    return static_cast<long long>(v);
}

// Serialized form is "p" or "p/q"; floats are rejected by construction.
inline std::string rat_to_string(const Rat& r) {
    if (rat_is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        return make_rat(std::move(p), std::move(q));
    } catch (const std::exception&) {
        throw SchemaError("rational", "cannot parse '" + s + "' as p or p/q");
    }
}

}  // namespace vancoh
