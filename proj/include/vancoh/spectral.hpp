#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vancoh/errors.hpp"
#include "vancoh/numtheory.hpp"

namespace vancoh {

// Cohomology facts for one stratum U_I: the index set I (1-based component
// ids), s(I) = |I ∩ {1..r}| - 1 for the exceptional prefix {1..r}, and the
// dimensions of H^q(U_I, F_{lambda,I}) supplied by the caller.
struct StratumDatum {
    std::vector<int> index_set;                 // sorted, nonempty
    int s_value;                                // >= -1
    std::map<int, long long> cohomology_dims;   // degree q -> dimension

    StratumDatum(std::vector<int> index_set_, int s_value_,
                 std::map<int, long long> cohomology_dims_)
        : index_set(std::move(index_set_)),
          s_value(s_value_),
          cohomology_dims(std::move(cohomology_dims_)) {
        if (s_value < -1) throw std::invalid_argument("StratumDatum: s_value must be >= -1");
        for (const auto& [q, d] : cohomology_dims)
            if (d < 0) throw std::invalid_argument("StratumDatum: negative dimension");
    }
};

// E1 page of a weight spectral sequence.  Entries are keyed by (p, q);
// the entry at (-k, j+k) is pure of weight j+k, and the twists list
// records the Tate-twist label of each contributing block.
struct SpectralPage {
    struct Entry {
        long long dim = 0;
        int weight = 0;
        std::vector<std::pair<int, long long>> twists;  // (twist, dim) per block
    };

    std::map<std::pair<int, int>, Entry> entries;
    int n = 0;
    // Strata that cannot contribute because s(I) < 0 (I disjoint from the
    // exceptional components); kept visible instead of silently dropped.
    std::vector<std::vector<int>> flagged_strata;
    bool degenerates_at_e2 = true;  // each entry pure of weight p+q forces E2 = Einf

    long long dim_at(int p, int q) const {
        auto it = entries.find({p, q});
        return it == entries.end() ? 0 : it->second.dim;
    }
};

// Assembles E_1^{-k, j+k} = sum over (I, a) with I inside J(lambda),
// 0 <= a <= s(I) and |I| - 1 - 2a = k of H^{j - |I| + 1}(U_I, F(a+1-|I|)).
inline SpectralPage weight_ss_e1(const std::vector<StratumDatum>& strata,
                                 const std::set<int>& j_lambda, int n) {
    SpectralPage page;
    page.n = n;
    for (const auto& st : strata) {
        if (st.index_set.empty())
            throw std::invalid_argument("weight_ss_e1: stratum with empty index set");
        for (int i : st.index_set)
            if (!j_lambda.count(i))
                throw std::invalid_argument("weight_ss_e1: stratum index " + std::to_string(i) +
                                            " is not in J(lambda)");
        if (st.s_value < 0) {
            page.flagged_strata.push_back(st.index_set);
            continue;   // the a-range 0 <= a <= s(I) is empty
        }
        const int size = static_cast<int>(st.index_set.size());
        for (int a = 0; a <= st.s_value; ++a) {
            const int k = size - 1 - 2 * a;
            const int twist = a + 1 - size;
            for (const auto& [q, dim] : st.cohomology_dims) {
                if (dim == 0) continue;
                const int j = q + size - 1;
                auto& entry = page.entries[{-k, j + k}];
                entry.dim += dim;
                entry.weight = j + k;
                entry.twists.emplace_back(twist, dim);
            }
        }
    }
    return page;
}

// The normal-crossing cone page: for j <= j_max < n,
// E_1^{-k, j+k} = binomial(m, k) copies of Q((-j-k)/2) when j+k is even and
// 0 <= k <= j, zero otherwise.  The formula is asserted by the source
// computation only below degree n, hence the j_max precondition.  The E1
// differential here is the co-Cech Gysin morphism; its cohomology is
// computed by koszul::shifted_twisted_sum rather than re-derived.
inline SpectralPage cone_e1_page(int m, int n, int j_max) {
    if (m < 1 || n < 1) throw std::invalid_argument("cone_e1_page: m, n must be >= 1");
    if (j_max >= n)
        throw std::domain_error("cone_e1_page: j_max must be < n, the formula stops there");
    SpectralPage page;
    page.n = n;
    for (int j = 0; j <= j_max; ++j) {
        for (int k = 0; k <= j; ++k) {
            if ((j + k) % 2 != 0) continue;
            const long long dim = binomial(m, k);
            if (dim == 0) continue;
            auto& entry = page.entries[{-k, j + k}];
            entry.dim = dim;
            entry.weight = j + k;
            entry.twists.emplace_back((j + k) / 2, dim);
        }
    }
    return page;
}

// Euler characteristic of the page; preserved page to page, so it equals
// the alternating sum over the abutment.
inline long long euler_from_e1(const SpectralPage& page) {
    long long chi = 0;
    for (const auto& [pq, entry] : page.entries) {
        const int total = pq.first + pq.second;
        chi += (total % 2 == 0) ? entry.dim : -entry.dim;
    }
    return chi;
}

// dim H^j <= sum_k dim E_1^{-k, j+k}: per-total-degree sums.
inline std::map<int, long long> betti_bounds_from_e1(const SpectralPage& page) {
    std::map<int, long long> bounds;
    for (const auto& [pq, entry] : page.entries) bounds[pq.first + pq.second] += entry.dim;
    return bounds;
}

// From primitive dimensions p_w (supported in weights >= n, the center) to
// graded dimensions gr_j = sum over k >= max(0, n-j) of p_{j+2k}; the
// cutoff is where N^k kills the primitive part.  The result is checked to
// be symmetric about n.
inline std::map<int, long long> primitive_decomposition_check(
    const std::map<int, long long>& primitive_dims, int n) {
    for (const auto& [w, d] : primitive_dims) {
        if (d < 0)
            throw InconsistentInputError("primitive_decomposition_check: negative dimension");
        if (d > 0 && w < n)
            throw InconsistentInputError(
                "primitive_decomposition_check: primitive part below the center weight " +
                std::to_string(n));
    }
    std::map<int, long long> gr;
    for (const auto& [w, d] : primitive_dims) {
        if (d == 0) continue;
        const int level = w - n;  // N^k is injective on this part for k <= level
        for (int k = 0; k <= level; ++k) gr[w - 2 * k] += d;
    }
    for (const auto& [j, d] : gr) {
        const int mirror = 2 * n - j;
        auto it = gr.find(mirror);
        const long long other = it == gr.end() ? 0 : it->second;
        if (other != d)
            throw InconsistentInputError(
                "primitive_decomposition_check: weight symmetry violated at " +
                std::to_string(j));
    }
    return gr;
}

}  // namespace vancoh
