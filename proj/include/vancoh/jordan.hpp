#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vancoh/errors.hpp"
#include "vancoh/matrix.hpp"
#include "vancoh/numtheory.hpp"

namespace vancoh {

// Combinatorial resolution data for the n = 2 non-semisimplicity detector.
// Components are listed with the exceptional divisors (those over the
// point) first; strata are the nonempty intersections Y_I keyed by sorted
// component indices, with connected-component counts and, where required,
// the dimensions of H^q(U_I, F_{lambda,I}) for the graph's target
// eigenvalue order.  Cech restriction blocks between H^0 spaces are
// derived from containment (all-ones when the ambient stratum is
// connected) and signed by the position rule for the natural component
// order; Gysin blocks into H^2 of the single strata carry the curve
// classes and are supplied explicitly.
struct ResolutionGraph {
    struct Component {
        std::string name;
        long long multiplicity = 1;
        bool exceptional = false;
    };

    struct Stratum {
        std::vector<int> comps;   // sorted 0-based component indices
        int connected_components = 1;
        std::optional<std::string> label;
        std::optional<std::vector<long long>> cohomology;   // dims of H^0, H^1, H^2
    };

    struct GysinBlock {
        std::vector<int> pair;   // source stratum (|I| = 2)
        int single = 0;          // target component index
        RatMatrix classes;       // dim H^2(U_single) x cc(pair)
    };

    std::vector<Component> components;
    std::vector<Stratum> strata;
    std::vector<GysinBlock> gysin;
    std::map<std::pair<std::vector<int>, std::vector<int>>, RatMatrix> explicit_restrictions;
    long long target_order = 1;

    void validate() const {
        if (target_order < 1)
            throw InconsistentInputError("resolution graph: eigenvalue order must be >= 1");
        bool seen_non_exceptional = false;
        for (const auto& c : components) {
            if (c.multiplicity < 1)
                throw InconsistentInputError("resolution graph: multiplicities must be >= 1");
            if (c.exceptional && seen_non_exceptional)
                throw InconsistentInputError(
                    "resolution graph: exceptional components must form a prefix");
            if (!c.exceptional) seen_non_exceptional = true;
        }
        for (const auto& st : strata) {
            if (st.comps.empty())
                throw InconsistentInputError("resolution graph: stratum with empty index set");
            if (!std::is_sorted(st.comps.begin(), st.comps.end()) ||
                std::adjacent_find(st.comps.begin(), st.comps.end()) != st.comps.end())
                throw InconsistentInputError("resolution graph: stratum indices must be strictly increasing");
            for (int i : st.comps)
                if (i < 0 || i >= static_cast<int>(components.size()))
                    throw InconsistentInputError("resolution graph: stratum index out of range");
            if (st.connected_components < 0)
                throw InconsistentInputError("resolution graph: negative component count");
        }
    }

    int exceptional_count() const {
        int r = 0;
        for (const auto& c : components)
            if (c.exceptional) ++r;
        return r;
    }

    // Components whose multiplicity the target order divides.
    std::set<int> j_lambda() const {
        std::set<int> out;
        for (size_t i = 0; i < components.size(); ++i)
            if (components[i].multiplicity % target_order == 0) out.insert(static_cast<int>(i));
        return out;
    }

    const Stratum* find_stratum(const std::vector<int>& comps) const {
        for (const auto& st : strata)
            if (st.comps == comps) return &st;
        return nullptr;
    }

    bool stratum_nonempty(const std::vector<int>& comps) const {
        const Stratum* st = find_stratum(comps);
        return st != nullptr && st->connected_components > 0;
    }

    int s_value(const std::vector<int>& comps) const {
        int hits = 0;
        for (int i : comps)
            if (components[static_cast<size_t>(i)].exceptional) ++hits;
        return hits - 1;
    }

    std::string stratum_name(const std::vector<int>& comps) const {
        if (const Stratum* st = find_stratum(comps); st && st->label) return *st->label;
        std::string out;
        for (int i : comps) {
            if (!out.empty()) out += "&";
            out += components[static_cast<size_t>(i)].name;
        }
        return out;
    }

    // Restriction H^0(Y_I) -> H^0(Y_{I'}) for I inside I': explicit block if
    // given, canonical all-ones when Y_I is connected.
    RatMatrix restriction(const std::vector<int>& sub, const std::vector<int>& super) const {
        auto it = explicit_restrictions.find({sub, super});
        const Stratum* from = find_stratum(sub);
        const Stratum* to = find_stratum(super);
        if (from == nullptr || to == nullptr)
            throw IncompleteDataError("restriction: missing stratum " +
                                      stratum_name(from == nullptr ? sub : super));
        if (it != explicit_restrictions.end()) return it->second;
        if (from->connected_components != 1)
            throw IncompleteDataError("restriction: stratum " + stratum_name(sub) +
                                      " is disconnected and no explicit block is given");
        RatMatrix m(static_cast<size_t>(to->connected_components), 1);
        for (size_t r = 0; r < m.rows(); ++r) m.at(r, 0) = 1;
        return m;
    }
};

using StratumKey = std::vector<int>;

// Element of the direct sum over J_0(lambda; 1, 0) of H^0(Y_I): one
// rational per connected component of each supporting stratum.
struct WitnessVector {
    std::map<StratumKey, std::vector<Rat>> coordinates;
};

namespace detail {

// Sign (-1)^q where q is the position of `removed` in the sorted superset.
inline int cech_sign(const std::vector<int>& superset, int removed) {
    const auto it = std::lower_bound(superset.begin(), superset.end(), removed);
    const auto pos = it - superset.begin();
    return (pos % 2 == 0) ? 1 : -1;
}

inline std::vector<StratumKey> sorted_keys(std::vector<StratumKey> keys) {
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace detail

// J(lambda; a, b) = { I inside J(lambda) : |I| - 1 = a, s(I) >= b } and the
// subfamily J_0 whose strata miss every component outside J(lambda)
// (disjointness read off the listed intersections).
inline std::pair<std::vector<StratumKey>, std::vector<StratumKey>> strata_sets(
    const ResolutionGraph& g, int a, int b) {
    if (a < 0) throw std::invalid_argument("strata_sets: a must be >= 0");
    g.validate();
    const std::set<int> j = g.j_lambda();
    std::vector<StratumKey> family, family0;
    for (const auto& st : g.strata) {
        if (static_cast<int>(st.comps.size()) != a + 1 || st.connected_components == 0) continue;
        bool inside = true;
        for (int i : st.comps) inside = inside && j.count(i) > 0;
        if (!inside || g.s_value(st.comps) < b) continue;
        family.push_back(st.comps);
        bool clean = true;
        for (int other = 0; other < static_cast<int>(g.components.size()) && clean; ++other) {
            if (j.count(other) || std::binary_search(st.comps.begin(), st.comps.end(), other))
                continue;
            auto bigger = st.comps;
            bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), other), other);
            if (g.stratum_nonempty(bigger)) clean = false;
        }
        if (clean) family0.push_back(st.comps);
    }
    return {detail::sorted_keys(std::move(family)), detail::sorted_keys(std::move(family0))};
}

namespace detail {

struct WitnessSpace {
    std::vector<StratumKey> strata;          // J_0(lambda; 1, 0), sorted
    std::vector<std::pair<size_t, int>> coords;  // (stratum idx, component idx)
    std::map<StratumKey, size_t> offset;     // first coordinate of each stratum

    size_t dim() const { return coords.size(); }
};

inline WitnessSpace witness_space(const ResolutionGraph& g) {
    WitnessSpace space;
    space.strata = strata_sets(g, 1, 0).second;
    for (size_t s = 0; s < space.strata.size(); ++s) {
        const auto* st = g.find_stratum(space.strata[s]);
        space.offset[space.strata[s]] = space.coords.size();
        for (int comp = 0; comp < st->connected_components; ++comp)
            space.coords.emplace_back(s, comp);
    }
    return space;
}

inline std::vector<Rat> witness_as_vector(const WitnessSpace& space, const WitnessVector& u) {
    std::vector<Rat> v(space.dim(), Rat(0));
    for (const auto& [key, values] : u.coordinates) {
        auto it = space.offset.find(key);
        if (it == space.offset.end()) {
            bool all_zero = true;
            for (const auto& x : values) all_zero = all_zero && x == 0;
            if (all_zero) continue;
            throw std::invalid_argument(
                "witness vector supported outside J_0(lambda; 1, 0): stratum has no coordinate");
        }
        const size_t stratum_idx = space.coords[it->second].first;
        size_t width = 0;
        for (const auto& [s, comp] : space.coords)
            if (s == stratum_idx) ++width;
        if (values.size() != width)
            throw std::invalid_argument("witness vector: expected one value per connected component");
        for (size_t k = 0; k < values.size(); ++k) v[it->second + k] = values[k];
    }
    return v;
}

inline long long required_h2_dim(const ResolutionGraph& g, const StratumKey& single) {
    const auto* st = g.find_stratum(single);
    if (st == nullptr || !st->cohomology || st->cohomology->size() < 3)
        throw IncompleteDataError("missing cohomology fact for stratum " +
                                  g.stratum_name(single));
    return (*st->cohomology)[2];
}

// Rows: Cech restrictions into J_0(lambda; 2, 1) plus Gysin maps into
// H^2(U_I, F) over the single strata of J(lambda; 0, 0).
inline RatMatrix condition_one_matrix(const ResolutionGraph& g, const WitnessSpace& space) {
    std::vector<RatMatrix> blocks;
    std::vector<long long> block_rows;

    const auto triples = strata_sets(g, 2, 1).second;
    for (const auto& t : triples) {
        const auto* st = g.find_stratum(t);
        RatMatrix block(static_cast<size_t>(st->connected_components), space.dim());
        for (const auto& pairkey : space.strata) {
            if (!std::includes(t.begin(), t.end(), pairkey.begin(), pairkey.end())) continue;
            int removed = -1;
            for (int x : t)
                if (!std::binary_search(pairkey.begin(), pairkey.end(), x)) removed = x;
            const int sign = cech_sign(t, removed);
            const RatMatrix r = g.restriction(pairkey, t);
            const size_t base = space.offset.at(pairkey);
            for (size_t row = 0; row < r.rows(); ++row)
                for (size_t col = 0; col < r.cols(); ++col)
                    block.at(row, base + col) += Rat(sign) * r.at(row, col);
        }
        blocks.push_back(std::move(block));
    }

    const auto singles = strata_sets(g, 0, 0).first;   // J, not J_0
    for (const auto& s : singles) {
        const long long h2 = required_h2_dim(g, s);
        if (h2 == 0) continue;
        RatMatrix block(static_cast<size_t>(h2), space.dim());
        for (const auto& pairkey : space.strata) {
            if (!std::includes(pairkey.begin(), pairkey.end(), s.begin(), s.end())) continue;
            const int removed = pairkey[0] == s[0] ? pairkey[1] : pairkey[0];
            const int sign = cech_sign(pairkey, removed);
            const ResolutionGraph::GysinBlock* found = nullptr;
            for (const auto& gb : g.gysin)
                if (gb.pair == pairkey && gb.single == s[0]) found = &gb;
            if (found == nullptr)
                throw IncompleteDataError("missing Gysin classes for stratum " +
                                          g.stratum_name(pairkey) + " into " + g.stratum_name(s));
            if (found->classes.rows() != static_cast<size_t>(h2))
                throw IncompleteDataError("Gysin block for " + g.stratum_name(pairkey) +
                                          " has wrong height");
            const size_t base = space.offset.at(pairkey);
            for (size_t row = 0; row < found->classes.rows(); ++row)
                for (size_t col = 0; col < found->classes.cols(); ++col)
                    block.at(row, base + col) += Rat(sign) * found->classes.at(row, col);
        }
        blocks.push_back(std::move(block));
    }

    size_t rows = 0;
    for (const auto& b : blocks) rows += b.rows();
    RatMatrix m(rows, space.dim());
    size_t at = 0;
    for (const auto& b : blocks) {
        for (size_t r = 0; r < b.rows(); ++r)
            for (size_t c = 0; c < b.cols(); ++c) m.at(at + r, c) = b.at(r, c);
        at += b.rows();
    }
    return m;
}

struct ConditionTwoData {
    RatMatrix projection;   // witness space -> coordinates over J_0(lambda; 1, 1)
    RatMatrix image_map;    // H^0 over J_0(lambda; 0, 0) -> same coordinates
};

inline ConditionTwoData condition_two_data(const ResolutionGraph& g, const WitnessSpace& space) {
    const auto targets = strata_sets(g, 1, 1).second;
    std::vector<size_t> target_offset;
    size_t target_dim = 0;
    for (const auto& t : targets) {
        target_offset.push_back(target_dim);
        target_dim += static_cast<size_t>(g.find_stratum(t)->connected_components);
    }

    RatMatrix projection(target_dim, space.dim());
    for (size_t ti = 0; ti < targets.size(); ++ti) {
        auto it = space.offset.find(targets[ti]);
        if (it == space.offset.end()) continue;
        const int cc = g.find_stratum(targets[ti])->connected_components;
        for (int k = 0; k < cc; ++k)
            projection.at(target_offset[ti] + static_cast<size_t>(k),
                          it->second + static_cast<size_t>(k)) = 1;
    }

    const auto sources = strata_sets(g, 0, 0).second;   // J_0 here
    size_t source_dim = 0;
    std::vector<size_t> source_offset;
    for (const auto& s : sources) {
        source_offset.push_back(source_dim);
        source_dim += static_cast<size_t>(g.find_stratum(s)->connected_components);
    }
    RatMatrix image_map(target_dim, source_dim);
    for (size_t ti = 0; ti < targets.size(); ++ti) {
        for (size_t si = 0; si < sources.size(); ++si) {
            const auto& s = sources[si];
            if (!std::includes(targets[ti].begin(), targets[ti].end(), s.begin(), s.end()))
                continue;
            const int removed = targets[ti][0] == s[0] ? targets[ti][1] : targets[ti][0];
            const int sign = cech_sign(targets[ti], removed);
            const RatMatrix r = g.restriction(s, targets[ti]);
            for (size_t row = 0; row < r.rows(); ++row)
                for (size_t col = 0; col < r.cols(); ++col)
                    image_map.at(target_offset[ti] + row, source_offset[si] + col) +=
                        Rat(sign) * r.at(row, col);
        }
    }
    return ConditionTwoData{std::move(projection), std::move(image_map)};
}

}  // namespace detail

// First necessary condition: u is annihilated by the E1 differential, i.e.
// its Cech image over J_0(lambda; 2, 1) and its Gysin image in the H^2 of
// the J(lambda; 0, 0) strata both vanish.  Zero-dimensional H^2 targets
// pass vacuously.
inline bool check_condition_one(const ResolutionGraph& g, const WitnessVector& u) {
    g.validate();
    const auto space = detail::witness_space(g);
    const auto v = detail::witness_as_vector(space, u);
    const auto m = detail::condition_one_matrix(g, space);
    for (const auto& x : apply_matrix(m, v))
        if (x != 0) return false;
    return true;
}

// Second necessary condition: the projection of u to the coordinates over
// J_0(lambda; 1, 1) lies outside the image of the restriction map from
// J_0(lambda; 0, 0).
inline bool check_condition_two(const ResolutionGraph& g, const WitnessVector& u) {
    g.validate();
    const auto space = detail::witness_space(g);
    const auto v = detail::witness_as_vector(space, u);
    const auto data = detail::condition_two_data(g, space);
    return !in_column_span(data.image_map, apply_matrix(data.projection, v));
}

// Solves the two conditions by linear algebra: a kernel basis of the
// condition-one map is tested vector by vector against condition two, and
// the first passing basis vector (free-column order) is returned.  If a
// witness exists at all, some basis vector passes: the kernel vectors
// failing condition two form a subspace, which cannot contain a whole
// basis unless it is everything.
inline std::optional<WitnessVector> find_witness(const ResolutionGraph& g) {
    g.validate();
    const auto space = detail::witness_space(g);
    if (space.dim() == 0) return std::nullopt;
    const auto m1 = detail::condition_one_matrix(g, space);
    const auto data = detail::condition_two_data(g, space);
    for (const auto& v : kernel_basis(m1)) {
        if (in_column_span(data.image_map, apply_matrix(data.projection, v))) continue;
        WitnessVector u;
        for (size_t s = 0; s < space.strata.size(); ++s) {
            const auto& key = space.strata[s];
            const int cc = g.find_stratum(key)->connected_components;
            std::vector<Rat> vals(static_cast<size_t>(cc));
            bool nonzero = false;
            for (int k = 0; k < cc; ++k) {
                vals[static_cast<size_t>(k)] = v[space.offset.at(key) + static_cast<size_t>(k)];
                nonzero = nonzero || vals[static_cast<size_t>(k)] != 0;
            }
            if (nonzero) u.coordinates[key] = std::move(vals);
        }
        return u;
    }
    return std::nullopt;
}

// Cohomology of a rank-1 local system on a curve of Euler characteristic
// base_chi minus k >= 1 punctures.  monodromy_orders lists the vanishing
// orders of the removed components; the local monodromy at puncture i is
// nontrivial exactly when c does not divide that order.  Some nontrivial
// monodromy forces H^0 = H^2 = 0 and dim H^1 = -chi of the open curve;
// all-trivial monodromy falls back to the constant-sheaf Betti numbers.
inline std::array<long long, 3> local_system_cohomology_product(
    long long base_chi, int punctures, const std::vector<long long>& monodromy_orders,
    long long c) {
    if (punctures < 1)
        throw std::invalid_argument("local_system_cohomology_product: need k >= 1 punctures");
    if (static_cast<int>(monodromy_orders.size()) != punctures)
        throw std::invalid_argument(
            "local_system_cohomology_product: one vanishing order per puncture");
    if (c < 1) throw std::invalid_argument("local_system_cohomology_product: order must be >= 1");
    const long long open_chi = base_chi - punctures;
    bool nontrivial = false;
    for (long long a : monodromy_orders) nontrivial = nontrivial || (a % c != 0);
    if (!nontrivial) return {1, 1 - open_chi, 0};
    if (open_chi > 0)
        throw InconsistentInputError(
            "local_system_cohomology_product: nontrivial monodromy on a curve of positive "
            "Euler characteristic");
    return {0, -open_chi, 0};
}

// Kunneth for a product with a compact factor carrying the pulled-back
// system: dims of the product from dims of the two factors.
inline std::vector<long long> kunneth_product(const std::vector<long long>& a,
                                              const std::vector<long long>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace vancoh
