#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vancoh/jordan.hpp"
#include "vancoh/milnor.hpp"

namespace vancoh::fixtures {

// Resolution graph of the cone example f = (y^2 - x^4)(x^2 - y^4) on the
// quadric cone {xw = yz}, after one base blow-up at two points and one
// blow-up along each of the two tangent curves.  Components E0, E1, E2 lie
// over the origin; E3, E4 are the proper transforms of the fiber divisors
// over the two blown-up points, V is the multiplicity-4 vertical component
// and W1..W4 are the four reduced branches.  Multiplicities: the branches
// are reduced, everything else is even.  For order 2 the single strata E1
// and E2 carry the zero local system cohomology of a product with a
// twice-punctured line; for order 1 the systems are constant and the
// H^2 Gysin targets of E1 and E2 open up.
inline ResolutionGraph a3_resolution_graph(long long order) {
    ResolutionGraph g;
    g.target_order = order;
    auto comp = [&](const std::string& name, long long mult, bool exc) {
        g.components.push_back({name, mult, exc});
    };
    comp("E0", 4, true);
    comp("E1", 6, true);
    comp("E2", 6, true);
    comp("E3", 6, false);
    comp("E4", 6, false);
    comp("V", 4, false);
    comp("W1", 1, false);
    comp("W2", 1, false);
    comp("W3", 1, false);
    comp("W4", 1, false);

    auto stratum = [&](std::vector<int> comps, std::optional<std::string> label,
                       std::optional<std::vector<long long>> coh) {
        g.strata.push_back({std::move(comps), 1, std::move(label), std::move(coh)});
    };
    stratum({0}, "E0", std::vector<long long>{1, 0, 4});
    if (order == 2) {
        stratum({1}, "E1", std::vector<long long>{0, 0, 0});
        stratum({2}, "E2", std::vector<long long>{0, 0, 0});
    } else {
        stratum({1}, "E1", std::vector<long long>{1, 0, 2});
        stratum({2}, "E2", std::vector<long long>{1, 0, 2});
    }
    stratum({3}, "E3", std::nullopt);
    stratum({4}, "E4", std::nullopt);
    stratum({5}, "V", std::nullopt);
    for (int w = 6; w <= 9; ++w) stratum({w}, std::nullopt, std::nullopt);
    stratum({0, 1}, "Z1'", std::nullopt);
    stratum({0, 2}, "Z2'", std::nullopt);
    stratum({0, 3}, "C1'", std::nullopt);
    stratum({0, 4}, "C2'", std::nullopt);
    stratum({0, 5}, "VE", std::nullopt);
    stratum({1, 3}, std::nullopt, std::nullopt);
    stratum({2, 4}, std::nullopt, std::nullopt);
    stratum({1, 6}, std::nullopt, std::nullopt);
    stratum({1, 7}, std::nullopt, std::nullopt);
    stratum({2, 8}, std::nullopt, std::nullopt);
    stratum({2, 9}, std::nullopt, std::nullopt);
    stratum({3, 5}, std::nullopt, std::nullopt);
    stratum({4, 5}, std::nullopt, std::nullopt);
    stratum({3, 6}, std::nullopt, std::nullopt);
    stratum({3, 7}, std::nullopt, std::nullopt);
    stratum({4, 8}, std::nullopt, std::nullopt);
    stratum({4, 9}, std::nullopt, std::nullopt);
    stratum({0, 1, 3}, "p1", std::nullopt);
    stratum({0, 2, 4}, "p2", std::nullopt);
    stratum({0, 3, 5}, "q1", std::nullopt);
    stratum({0, 4, 5}, "q2", std::nullopt);
    stratum({1, 3, 6}, std::nullopt, std::nullopt);
    stratum({1, 3, 7}, std::nullopt, std::nullopt);
    stratum({2, 4, 8}, std::nullopt, std::nullopt);
    stratum({2, 4, 9}, std::nullopt, std::nullopt);

    auto gysin = [&](std::vector<int> pair, int single, std::vector<long long> column) {
        std::vector<Rat> entries(column.size());
        for (size_t i = 0; i < column.size(); ++i) entries[i] = Rat(column[i]);
        g.gysin.push_back(
            {std::move(pair), single, RatMatrix(column.size(), 1, std::move(entries))});
    };
    // curve classes in H^2(E0), basis (A, B, C1, C2): the two rulings and
    // the two exceptional curves of the base blow-up
    gysin({0, 1}, 0, {0, 1, -1, 0});
    gysin({0, 2}, 0, {0, 1, 0, -1});
    gysin({0, 3}, 0, {0, 0, 1, 0});
    gysin({0, 4}, 0, {0, 0, 0, 1});
    gysin({0, 5}, 0, {1, 0, -1, -1});
    if (order != 2) {
        // classes in H^2(E1) and H^2(E2), basis (section, fiber)
        gysin({0, 1}, 1, {1, 0});
        gysin({1, 3}, 1, {0, 1});
        gysin({1, 6}, 1, {1, 0});
        gysin({1, 7}, 1, {1, 0});
        gysin({0, 2}, 2, {1, 0});
        gysin({2, 4}, 2, {0, 1});
        gysin({2, 8}, 2, {1, 0});
        gysin({2, 9}, 2, {1, 0});
    }
    return g;
}

// Same graph with every multiplicity set to one: J(lambda) is empty at
// order 2 and no witness space exists.
inline ResolutionGraph a3_multiplicity_one_graph() {
    auto g = a3_resolution_graph(2);
    for (auto& c : g.components) c.multiplicity = 1;
    return g;
}

// The element of the solution line written down for the example: +1 on
// Z1' and C1', -1 on Z2' and C2'.
inline WitnessVector a3_paper_witness() {
    WitnessVector u;
    u.coordinates[{0, 1}] = {Rat(1)};
    u.coordinates[{0, 3}] = {Rat(1)};
    u.coordinates[{0, 2}] = {Rat(-1)};
    u.coordinates[{0, 4}] = {Rat(-1)};
    return u;
}

// Rank data of f = xyz at the origin (n = 2): the reduced Milnor fiber of
// the torus type and the link hypercohomology dims, with the kernel rank
// forced to one.
struct XyzRankData {
    std::vector<long long> h_tilde_f = {0, 2};
    std::vector<long long> h_link_phi = {0, 3};
    long long k_x = 1;
    int n = 2;
};

inline ConeSingularityInput generic_arrangement_input(int m, int n) {
    return ConeSingularityInput::smooth(n, std::vector<long long>(static_cast<size_t>(m), 1),
                                        std::vector<long long>(static_cast<size_t>(m), 1));
}

inline ConeSingularityInput quadric_cone_input() {
    return ConeSingularityInput::smooth(2, {1}, {2});
}

inline ConeSingularityInput weighted_pair_input() {
    return ConeSingularityInput::smooth(2, {2, 3}, {1, 1});
}

}  // namespace vancoh::fixtures
