#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vancoh/chern_euler.hpp"
#include "vancoh/cyclo.hpp"
#include "vancoh/errors.hpp"
#include "vancoh/numtheory.hpp"

namespace vancoh {

// Eigenvalue classes group all primitive c-th roots of unity: the rank
// formulas depend on lambda only through the divisibility tests c | d and
// c | e, so no algebraic numbers are ever represented.
struct EigenvalueClass {
    long long order;   // c >= 1
    long long count;   // phi(c)

    explicit EigenvalueClass(long long c) : order(c), count(euler_phi(c)) {
        if (c < 1) throw std::invalid_argument("EigenvalueClass: order must be >= 1");
    }
};

// J(lambda) = { j : lambda^{a_j} = 1 } = { j : c | a_j }, 1-based indices.
// J(lambda) is everything exactly when c | gcd(a).
inline std::vector<int> classify_eigenvalue(long long c, const std::vector<long long>& a) {
    if (c < 1) throw std::invalid_argument("classify_eigenvalue: order must be >= 1");
    std::vector<int> out;
    for (size_t j = 0; j < a.size(); ++j)
        if (a[j] % c == 0) out.push_back(static_cast<int>(j) + 1);
    return out;
}

// Data of the cone case: either the smooth-X cone (multiplicities a_i and
// degrees d_j, from which e = sum a_j d_j, d = gcd(a) and chi(U) are
// derived) or explicit (e, d, chi_U, m) for the general one-blow-up case
// where no degree profile exists.
struct ConeSingularityInput {
    int n = 0;
    std::vector<long long> multiplicities;   // smooth mode
    std::vector<long long> degrees;          // smooth mode
    struct ExplicitData {
        long long e = 0;
        long long d = 0;
        long long chi_u = 0;
        int m = 0;
    };
    std::optional<ExplicitData> explicit_data;

    static ConeSingularityInput smooth(int n, std::vector<long long> multiplicities,
                                       std::vector<long long> degrees) {
        ConeSingularityInput in;
        in.n = n;
        in.multiplicities = std::move(multiplicities);
        in.degrees = std::move(degrees);
        in.validate();
        return in;
    }

    static ConeSingularityInput with_explicit(int n, long long e, long long d, long long chi_u,
                                              int m) {
        ConeSingularityInput in;
        in.n = n;
        in.explicit_data = ExplicitData{e, d, chi_u, m};
        in.validate();
        return in;
    }

    void validate() const {
        if (n < 1) throw InconsistentInputError("cone input: n must be >= 1");
        if (explicit_data) {
            const auto& x = *explicit_data;
            if (x.m < 1) throw InconsistentInputError("cone input: m must be >= 1");
            if (x.e < 1 || x.d < 1)
                throw InconsistentInputError("cone input: e and d must be >= 1");
            if (x.e % x.d != 0)
                throw InconsistentInputError("cone input: d = " + std::to_string(x.d) +
                                             " does not divide e = " + std::to_string(x.e));
        } else {
            if (multiplicities.empty())
                throw InconsistentInputError("cone input: need at least one component");
            if (degrees.size() != multiplicities.size())
                throw InconsistentInputError(
                    "cone input: multiplicities and degrees must have equal length");
            for (long long a : multiplicities)
                if (a < 1) throw InconsistentInputError("cone input: multiplicities must be >= 1");
            for (long long d : degrees)
                if (d < 1) throw InconsistentInputError("cone input: degrees must be >= 1");
        }
    }

    int m() const {
        return explicit_data ? explicit_data->m : static_cast<int>(multiplicities.size());
    }

    long long e() const {
        if (explicit_data) return explicit_data->e;
        long long total = 0;
        for (size_t j = 0; j < multiplicities.size(); ++j) total += multiplicities[j] * degrees[j];
        return total;
    }

    long long d() const {
        if (explicit_data) return explicit_data->d;
        return gcd_list(multiplicities);
    }

    long long chi_u() const {
        if (explicit_data) return explicit_data->chi_u;
        return chi_open_series(DegreeProfile(n, degrees));
    }
};

// Data of the link case: multiplicities of the SNC components and the
// rational-homology-manifold hypothesis on the strata Y_I.
struct SncLinkInput {
    int n = 0;
    std::vector<long long> multiplicities;
    bool rhm_flag = false;

    SncLinkInput(int n_, std::vector<long long> multiplicities_, bool rhm)
        : n(n_), multiplicities(std::move(multiplicities_)), rhm_flag(rhm) {
        if (n < 2) throw InconsistentInputError("snc link input: n must be >= 2");
        if (multiplicities.empty())
            throw InconsistentInputError("snc link input: need at least one component");
        for (long long a : multiplicities)
            if (a < 1) throw InconsistentInputError("snc link input: multiplicities must be >= 1");
    }
};

struct BettiEntry {
    enum class Kind { Exact, Interval, Undetermined };
    Kind kind = Kind::Undetermined;
    long long lo = 0;
    long long hi = 0;
    bool hodge_jj = false;    // H^j pure of type (j,j)
    bool semisimple = false;  // monodromy semisimple in this degree

    static BettiEntry exact(long long v, bool hodge, bool ss) {
        return BettiEntry{Kind::Exact, v, v, hodge, ss};
    }
    static BettiEntry interval(long long lo, long long hi, bool hodge, bool ss) {
        if (lo > hi) throw InternalInvariantError("BettiEntry: interval lo > hi");
        return BettiEntry{Kind::Interval, lo, hi, hodge, ss};
    }
    static BettiEntry undetermined() { return BettiEntry{}; }

    bool is_exact() const { return kind == Kind::Exact; }
    long long value() const {
        if (!is_exact()) throw InternalInvariantError("BettiEntry: not exact");
        return lo;
    }
};

// Ranks b_c^j per eigenvalue class and degree 0..n.  Entries are identical
// for every lambda in a class, which is why classes rather than individual
// roots index the table.
struct BettiTable {
    enum class Source { Cone, Link };
    Source source = Source::Cone;
    int n = 0;
    int m = 0;
    long long d = 1;
    std::optional<long long> e;        // blow-up multiplicity, cone case only
    std::optional<long long> chi_u;    // cone case only
    std::vector<long long> class_orders;
    std::map<long long, std::vector<BettiEntry>> rows;  // order -> entries 0..n

    const BettiEntry& entry(long long c, int j) const {
        auto it = rows.find(c);
        if (it == rows.end())
            throw std::invalid_argument("BettiTable: class " + std::to_string(c) + " not present");
        return it->second.at(static_cast<size_t>(j));
    }

    bool all_exact() const {
        for (const auto& [c, row] : rows)
            for (const auto& e : row)
                if (!e.is_exact()) return false;
        return true;
    }

    bool all_semisimple() const {
        for (const auto& [c, row] : rows)
            for (const auto& e : row)
                if (!e.semisimple) return false;
        return true;
    }
};

// Ranks of the cone case: eigenvalues are supported on lambda^e = 1; for
// c | e the ranks are binomial(m-1, j) or 0 below degree n according to
// c | d, and at degree n they are (-1)^n chi(U) plus gen_binomial(m-2, n-1)
// in the c | d branch.  gen_binomial makes m = 1 work out, where
// binom(-1, n-1) = (-1)^{n-1}.  Inputs whose formulas would produce a
// negative rank are rejected as inconsistent.
inline BettiTable cone_betti_table(const ConeSingularityInput& in) {
    in.validate();
    BettiTable table;
    table.source = BettiTable::Source::Cone;
    table.n = in.n;
    table.m = in.m();
    table.d = in.d();
    table.e = in.e();
    table.chi_u = in.chi_u();

    const long long signed_chi = (in.n % 2 == 0) ? *table.chi_u : -*table.chi_u;
    const long long top_unipotent = signed_chi + gen_binomial(table.m - 2, in.n - 1);
    if (*table.e % table.d != 0)
        throw InconsistentInputError("cone_betti_table: d does not divide e");
    if (table.d < *table.e && signed_chi < 0)
        throw InconsistentInputError(
            "cone_betti_table: (-1)^n chi(U) = " + std::to_string(signed_chi) +
            " is negative, contradicting the rank formula for classes with c not dividing d");
    if (top_unipotent < 0)
        throw InconsistentInputError(
            "cone_betti_table: (-1)^n chi(U) + binom(m-2, n-1) = " +
            std::to_string(top_unipotent) + " is negative; the input is inconsistent");

    table.class_orders = divisors(*table.e);
    for (long long c : table.class_orders) {
        const bool div_d = (table.d % c == 0);
        std::vector<BettiEntry> row;
        for (int j = 0; j < in.n; ++j) {
            const long long v = div_d ? gen_binomial(table.m - 1, j) : 0;
            row.push_back(BettiEntry::exact(v, /*hodge=*/true, /*ss=*/true));
        }
        row.push_back(BettiEntry::exact(div_d ? top_unipotent : signed_chi,
                                        /*hodge=*/false, /*ss=*/true));
        table.rows[c] = std::move(row);
    }
    return table;
}

// Ranks and bounds of the link case.  For each class, degrees up to
// n - 2 + delta (delta = 1 only for the unipotent class) are covered:
// zero there when c does not divide d, binomial(m-1, j) below the top
// covered degree when it does, and at the top covered degree only the
// upper bound binomial(m-1, j) unless the rhm hypothesis upgrades it to
// an equality.  Degrees above the covered range are reported as
// undetermined, never guessed.
inline BettiTable link_betti_bounds(const SncLinkInput& in) {
    BettiTable table;
    table.source = BettiTable::Source::Link;
    table.n = in.n;
    table.m = static_cast<int>(in.multiplicities.size());
    table.d = gcd_list(in.multiplicities);

    std::set<long long> orders;
    for (long long a : in.multiplicities)
        for (long long c : divisors(a)) orders.insert(c);
    table.class_orders.assign(orders.begin(), orders.end());

    for (long long c : table.class_orders) {
        const bool div_d = (table.d % c == 0);
        const int delta = (c == 1) ? 1 : 0;
        const int covered_max = in.n - 2 + delta;
        std::vector<BettiEntry> row;
        for (int j = 0; j <= in.n; ++j) {
            if (j > covered_max) {
                row.push_back(BettiEntry::undetermined());
                continue;
            }
            if (!div_d) {
                row.push_back(BettiEntry::exact(0, true, true));
            } else if (j < covered_max || in.rhm_flag) {
                row.push_back(BettiEntry::exact(gen_binomial(table.m - 1, j), true, true));
            } else {
                row.push_back(BettiEntry::interval(0, gen_binomial(table.m - 1, j), true, true));
            }
        }
        table.rows[c] = std::move(row);
    }
    return table;
}

// det(1 - t T | H^j) per degree, as a product of (1 - t^c) factors.
// Requires a fully exact, semisimple table; the expanded per-eigenvalue
// multiplicities of each degree must come out nonnegative.
inline std::vector<CycloProduct> char_poly_per_degree(const BettiTable& t) {
    if (!t.all_exact())
        throw std::invalid_argument("char_poly_per_degree: table has interval entries");
    if (!t.all_semisimple())
        throw std::invalid_argument("char_poly_per_degree: table is not semisimple everywhere");
    std::vector<CycloProduct> out;
    for (int j = 0; j <= t.n; ++j) {
        CycloProduct p;
        for (const auto& [c, row] : t.rows) {
            const long long b = row[static_cast<size_t>(j)].value();
            if (b != 0) p *= CycloProduct::eigenvalue_class_factor(c, b);
        }
        for (const auto& [c, mult] : p.expanded_class_multiplicities()) {
            if (mult < 0)
                throw InternalInvariantError("char_poly_per_degree: degree " + std::to_string(j) +
                                             " has negative multiplicity for class " +
                                             std::to_string(c));
        }
        out.push_back(std::move(p));
    }
    return out;
}

// zeta(t) = prod_j det(1 - t T | H^j)^{(-1)^{j+1}}.  For a cone table this
// must equal (1 - t^e)^{-chi(U)}; a mismatch is an internal inconsistency.
inline CycloProduct zeta_function(const BettiTable& t) {
    const auto per_degree = char_poly_per_degree(t);
    CycloProduct zeta;
    for (int j = 0; j <= t.n; ++j) {
        const long long sign = (j % 2 == 0) ? -1 : 1;
        zeta *= per_degree[static_cast<size_t>(j)].pow(sign);
    }
    if (t.source == BettiTable::Source::Cone) {
        const CycloProduct expected = CycloProduct::factor(*t.e, -*t.chi_u);
        if (!(zeta == expected))
            throw InternalInvariantError("zeta_function: alternating product " + zeta.to_string() +
                                         " differs from " + expected.to_string());
    }
    return zeta;
}

// chi_lambda = sum_j (-1)^j b_lambda^j; for a cone table this is chi(U)
// when c | e and 0 otherwise (classes absent from the table have
// identically zero columns).
inline long long chi_lambda(const BettiTable& t, long long c) {
    auto it = t.rows.find(c);
    if (it == t.rows.end()) return 0;
    long long chi = 0;
    for (int j = 0; j <= t.n; ++j) {
        const long long b = it->second[static_cast<size_t>(j)].value();
        chi += (j % 2 == 0) ? b : -b;
    }
    return chi;
}

// Maximal possible Jordan block size at x in degree j, given the largest
// block sizes k_i seen at nearby points in degrees i <= j (k_i = 0 when
// the nearby eigenspace vanishes).  The bound is the plain sum.
inline long long jordan_bound(const std::map<int, long long>& sizes) {
    long long total = 0;
    for (const auto& [i, k] : sizes) {
        if (k < 0) throw std::invalid_argument("jordan_bound: sizes must be nonnegative");
        total += k;
    }
    return total;
}

// Consistency check for the link/Milnor-fiber rank relations: equality of
// reduced fiber and link dimensions below degree n-1, and at degree n-1 a
// short exact sequence forcing h_link = h_fiber + k_x.
struct RankCheckVerdict {
    bool pass = true;
    std::vector<std::string> failures;
};

inline RankCheckVerdict fiber_link_rank_check(const std::vector<long long>& h_tilde_f,
                                     const std::vector<long long>& h_link_phi, long long k_x,
                                     int n) {
    if (n < 1) throw std::invalid_argument("fiber_link_rank_check: n must be >= 1");
    RankCheckVerdict verdict;
    auto dim = [](const std::vector<long long>& v, int j) -> long long {
        return (j >= 0 && j < static_cast<int>(v.size())) ? v[static_cast<size_t>(j)] : 0;
    };
    for (int j = 0; j < n - 1; ++j) {
        if (dim(h_tilde_f, j) != dim(h_link_phi, j)) {
            verdict.pass = false;
            verdict.failures.push_back(
                "degree " + std::to_string(j) + ": reduced fiber dim " +
                std::to_string(dim(h_tilde_f, j)) + " != link dim " +
                std::to_string(dim(h_link_phi, j)));
        }
    }
    if (n >= 1) {
        const int j = n - 1;
        if (dim(h_link_phi, j) != dim(h_tilde_f, j) + k_x) {
            verdict.pass = false;
            verdict.failures.push_back(
                "degree " + std::to_string(j) + ": link dim " +
                std::to_string(dim(h_link_phi, j)) + " != reduced fiber dim " +
                std::to_string(dim(h_tilde_f, j)) + " + k_x " + std::to_string(k_x));
        }
    }
    return verdict;
}

}  // namespace vancoh
