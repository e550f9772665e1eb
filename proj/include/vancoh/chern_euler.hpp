#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vancoh/errors.hpp"
#include "vancoh/numtheory.hpp"
#include "vancoh/series.hpp"

namespace vancoh {

// Degrees d_1..d_m of the components of an arrangement in P^n (the
// exceptional divisor of a one-point blow-up of an (n+1)-fold).
struct DegreeProfile {
    int n;                            // dimension of the exceptional P^n
    std::vector<long long> degrees;   // d_j >= 1, one per component

    DegreeProfile(int n_, std::vector<long long> degrees_) : n(n_), degrees(std::move(degrees_)) {
        if (n < 1) throw std::invalid_argument("DegreeProfile: n must be >= 1");
        if (degrees.empty()) throw std::invalid_argument("DegreeProfile: need at least one degree");
        for (long long d : degrees)
            if (d < 1) throw std::invalid_argument("DegreeProfile: degrees must be >= 1");
    }

    int m() const { return static_cast<int>(degrees.size()); }

    bool degrees_distinct() const {
        std::set<long long> s(degrees.begin(), degrees.end());
        return s.size() == degrees.size();
    }
};

namespace detail {

inline long long integer_coefficient(const TruncSeries& s, int k, const char* context) {
    return big_to_ll(rat_to_integer(s.coefficient(k), context), context);
}

}  // namespace detail

// chi of the closed stratum D_I: coefficient of T^n in
// (1+T)^{n+1} prod_{j in I} d_j T (1 + d_j T)^{-1}, computed in the
// truncated ring.  I holds 0-based component indices.
inline long long chi_stratum(const DegreeProfile& p, const std::vector<int>& I) {
    if (static_cast<int>(I.size()) > p.n)
        throw std::invalid_argument("chi_stratum: |I| exceeds n, the stratum is empty");
    const int order = p.n;
    TruncSeries acc = TruncSeries::binomial_power(p.n + 1, order);
    for (int idx : I) {
        const long long d = p.degrees.at(static_cast<size_t>(idx));
        // d_j T / (1 + d_j T) = d_j T * geometric inverse
        TruncSeries factor = series_geom_inverse(d, order);
        std::vector<Rat> shifted(static_cast<size_t>(order) + 1, Rat(0));
        for (int k = 0; k + 1 <= order; ++k)
            shifted[static_cast<size_t>(k) + 1] = Rat(d) * factor.coefficient(k);
        acc = series_mul(acc, TruncSeries(order, std::move(shifted)));
    }
    return detail::integer_coefficient(acc, p.n, "chi_stratum");
}

// Canonical evaluator for chi(U): coefficient of T^n in
// (1+T)^{n+1} prod_j (1 + d_j T)^{-1}.  Total, no distinctness assumption.
inline long long chi_open_series(const DegreeProfile& p) {
    const int order = p.n;
    TruncSeries acc = TruncSeries::binomial_power(p.n + 1, order);
    for (long long d : p.degrees) acc = series_mul(acc, series_geom_inverse(d, order));
    return detail::integer_coefficient(acc, p.n, "chi_open_series");
}

// Independent route: chi(U) = sum over subsets |I| <= n of (-1)^{|I|} chi(D_I).
// Strata with |I| > n are empty in P^n and are not enumerated.
inline long long chi_open_inclusion_exclusion(const DegreeProfile& p) {
    long long total = 0;
    const int m = p.m();
    for (int k = 0; k <= std::min(m, p.n); ++k) {
        const long long sign = (k % 2 == 0) ? 1 : -1;
        for (const auto& I : combinations(m, k)) total += sign * chi_stratum(p, I);
    }
    return total;
}

// Closed form in the fraction field, valid for m > 1 with pairwise distinct
// degrees:  chi(U) = sum_i ( -d_i^{m-2} (1-d_i)^{n+1} / prod_{p != i} (d_i - d_p) ).
// Pure evaluation; callers compare against chi_open_series independently.
inline Rat chi_open_closed_form(const DegreeProfile& p) {
    if (p.m() <= 1)
        throw std::domain_error("chi_open_closed_form: needs m > 1; use chi_open_series");
    if (!p.degrees_distinct())
        throw std::domain_error(
            "chi_open_closed_form: repeated degrees need a limit; use chi_open_series");
    Rat total = 0;
    const int m = p.m();
    for (int i = 0; i < m; ++i) {
        const BigInt di = p.degrees[static_cast<size_t>(i)];
        BigInt num = -1;
        for (int t = 0; t < m - 2; ++t) num *= di;
        BigInt one_minus = 1 - di;
        for (int t = 0; t < p.n + 1; ++t) num *= one_minus;
        BigInt den = 1;
        for (int q = 0; q < m; ++q)
            if (q != i) den *= di - BigInt(p.degrees[static_cast<size_t>(q)]);
        total += make_rat(num, den);
    }
    return total;
}

// Coefficient of T^k in prod (1 + d_j T)^{-1}, evaluated both as a series
// coefficient and by partial fractions (-1)^k sum_i d_i^{k+m-1} / prod_{p != i}(d_i - d_p);
// the two must agree, and the common value is returned.
inline Rat series_coefficient_polynomial_check(const DegreeProfile& p, int k) {
    if (k < 0 || k > p.n)
        throw std::invalid_argument("series_coefficient_polynomial_check: k out of range");
    if (!p.degrees_distinct())
        throw std::domain_error("series_coefficient_polynomial_check: degrees must be distinct");
    const int order = p.n;
    TruncSeries acc = TruncSeries::one(order);
    for (long long d : p.degrees) acc = series_mul(acc, series_geom_inverse(d, order));
    const Rat series_side = acc.coefficient(k);

    Rat fraction_side = 0;
    const int m = p.m();
    for (int i = 0; i < m; ++i) {
        const BigInt di = p.degrees[static_cast<size_t>(i)];
        BigInt num = 1;
        for (int t = 0; t < k + m - 1; ++t) num *= di;
        BigInt den = 1;
        for (int q = 0; q < m; ++q)
            if (q != i) den *= di - BigInt(p.degrees[static_cast<size_t>(q)]);
        fraction_side += make_rat(num, den);
    }
    if (k % 2 == 1) fraction_side = -fraction_side;

    if (series_side != fraction_side)
        throw InternalInvariantError("series_coefficient_polynomial_check: sides disagree: " +
                                     rat_to_string(series_side) + " vs " +
                                     rat_to_string(fraction_side));
    return series_side;
}

}  // namespace vancoh
