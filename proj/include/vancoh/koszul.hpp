#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "vancoh/cochain.hpp"
#include "vancoh/numtheory.hpp"

namespace vancoh {

// Koszul complex K(Q; v_1,...,v_m) with every v_i the identity: component
// j is Lambda^j Q^m with subset basis in lexicographic order, and
// d(e_I) = sum_{i not in I} sign(i, I) e_{I + i} with
// sign(i, I) = (-1)^{#{p in I : p < i}}  (wedge by e_1 + ... + e_m).
// The complex is acyclic and rank d^{j-1} = binomial(m-1, j-1).
inline CochainComplex koszul_complex(int m) {
    if (m < 1) throw std::invalid_argument("koszul_complex: m must be >= 1");
    std::vector<long long> dims(static_cast<size_t>(m) + 1);
    std::vector<std::vector<std::vector<int>>> bases(static_cast<size_t>(m) + 1);
    std::vector<std::map<std::vector<int>, size_t>> index(static_cast<size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
        bases[static_cast<size_t>(j)] = combinations(m, j);
        dims[static_cast<size_t>(j)] = static_cast<long long>(bases[static_cast<size_t>(j)].size());
        for (size_t i = 0; i < bases[static_cast<size_t>(j)].size(); ++i)
            index[static_cast<size_t>(j)][bases[static_cast<size_t>(j)][i]] = i;
    }
    std::vector<RatMatrix> diffs;
    for (int j = 0; j < m; ++j) {
        RatMatrix d(static_cast<size_t>(dims[static_cast<size_t>(j) + 1]),
                    static_cast<size_t>(dims[static_cast<size_t>(j)]));
        for (size_t col = 0; col < bases[static_cast<size_t>(j)].size(); ++col) {
            const auto& S = bases[static_cast<size_t>(j)][col];
            for (int i = 0; i < m; ++i) {
                if (std::binary_search(S.begin(), S.end(), i)) continue;
                auto T = S;
                T.insert(std::upper_bound(T.begin(), T.end(), i), i);
                const size_t row = index[static_cast<size_t>(j) + 1].at(T);
                const long long below = std::lower_bound(S.begin(), S.end(), i) - S.begin();
                d.at(row, col) = (below % 2 == 0) ? 1 : -1;
            }
        }
        diffs.push_back(std::move(d));
    }
    return CochainComplex(0, std::move(dims), std::move(diffs));
}

enum class TruncSide { AtLeast, AtMost };

// Stupid truncation: components outside the half-line are zeroed and the
// differentials restricted, with no cohomological correction.
inline CochainComplex sigma_truncate(const CochainComplex& c, int i, TruncSide side) {
    if (c.empty()) return c;
    int lo = c.min_degree();
    int hi = c.max_degree();
    if (side == TruncSide::AtLeast)
        lo = std::max(lo, i);
    else
        hi = std::min(hi, i);
    if (lo > hi) return CochainComplex(i, {}, {});
    std::vector<long long> dims;
    std::vector<RatMatrix> diffs;
    for (int deg = lo; deg <= hi; ++deg) dims.push_back(c.dim_at(deg));
    const auto& all = c.differentials();
    for (int deg = lo; deg < hi; ++deg)
        diffs.push_back(all[static_cast<size_t>(deg - c.min_degree())]);
    return CochainComplex(lo, std::move(dims), std::move(diffs));
}

// The complex K_lambda whose j-th component is the sum of H^0 of the
// degree-j link strata.  With each stratum connected (one Q apiece) this
// is the Koszul complex; the identification is only valid in degrees
// <= n-1 because the top strata may be reducible, so the window is
// carried alongside and degree-n cohomology read off this model is a
// lower bound, never the true value.
struct KLambdaComplex {
    CochainComplex complex;
    int valid_max_degree;
};

inline KLambdaComplex k_lambda_complex(int m, int n) {
    if (n < 1) throw std::invalid_argument("k_lambda_complex: n must be >= 1");
    return KLambdaComplex{koszul_complex(m), n - 1};
}

// One shifted, Tate-twisted block of a direct sum.  The twist is carried
// as an integer label only; it never affects ranks.  Shift follows the
// usual convention (C[s])^j = C^{j+s}.
struct TwistedSummand {
    CochainComplex base;
    int twist;
    int shift;

    int min_degree() const { return base.min_degree() - shift; }
    int max_degree() const { return base.max_degree() - shift; }
};

struct TwistedComplex {
    std::vector<TwistedSummand> summands;

    long long component_dim(int degree) const {
        long long total = 0;
        for (const auto& s : summands) total += s.base.dim_at(degree + s.shift);
        return total;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (const auto& s : summands) {
            const long long block = s.base.euler_characteristic();
            chi += (s.shift % 2 == 0) ? block : -block;
        }
        return chi;
    }

    // Aggregated over summands, keyed by shifted degree.
    std::map<int, long long> cohomology() const {
        std::map<int, long long> out;
        for (const auto& s : summands)
            for (const auto& [deg, dim] : cohomology_dims(s.base))
                if (dim != 0) out[deg - s.shift] += dim;
        return out;
    }

    // Twist labels present in a given degree (one per summand with a
    // nonzero component there).
    std::vector<int> twists_at(int degree) const {
        std::vector<int> out;
        for (const auto& s : summands)
            if (s.base.dim_at(degree + s.shift) != 0) out.push_back(s.twist);
        return out;
    }
};

// Direct sum over i >= 1 of (sigma_{>= i} K)(1-i)[n+1].
inline TwistedComplex ktilde_complex(int m, int n) {
    if (n < 1) throw std::invalid_argument("ktilde_complex: n must be >= 1");
    const CochainComplex k = koszul_complex(m);
    TwistedComplex out;
    for (int i = 1; i <= m; ++i)
        out.summands.push_back(
            TwistedSummand{sigma_truncate(k, i, TruncSide::AtLeast), 1 - i, n + 1});
    return out;
}

// Direct sum over 0 <= s < n of (sigma_{>= m-s} K)[m-2s](-s); its
// cohomology in degree j < n has dimension binomial(m-1, j).
inline TwistedComplex shifted_twisted_sum(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("shifted_twisted_sum: m, n must be >= 1");
    const CochainComplex k = koszul_complex(m);
    TwistedComplex out;
    for (int s = 0; s < n; ++s)
        out.summands.push_back(
            TwistedSummand{sigma_truncate(k, m - s, TruncSide::AtLeast), -s, m - 2 * s});
    return out;
}

}  // namespace vancoh
