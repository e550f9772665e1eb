#pragma once

#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vancoh/builtin_fixtures.hpp"
#include "vancoh/chern_euler.hpp"
#include "vancoh/cochain.hpp"
#include "vancoh/jordan.hpp"
#include "vancoh/koszul.hpp"
#include "vancoh/milnor.hpp"
#include "vancoh/report.hpp"
#include "vancoh/spectral.hpp"

namespace vancoh {

// Cross-check suite behind `vancoh verify`: every library-level identity
// is rerun over exhaustive or seeded-random inputs.  All draws go through
// one generator, so a pinned seed reproduces the run exactly; failures
// carry the offending input serialized for replay.

struct VerifyOptions {
    unsigned long long seed = 20040531;
    bool full = true;   // small budget trims iteration counts
};

struct VerifyResult {
    struct Check {
        std::string name;
        bool pass = true;
        std::string detail;
    };
    std::vector<Check> checks;
    bool all_pass = true;
};

namespace verifydetail {

using Rng = std::mt19937_64;

inline std::string describe_profile(const DegreeProfile& p) {
    std::string out = "n=" + std::to_string(p.n) + " degrees=(";
    for (size_t i = 0; i < p.degrees.size(); ++i)
        out += (i ? "," : "") + std::to_string(p.degrees[i]);
    return out + ")";
}

inline std::string describe_cone(const ConeSingularityInput& in) {
    std::string out = "{\"mode\":\"cone\",\"n\":" + std::to_string(in.n) + ",\"multiplicities\":[";
    for (size_t i = 0; i < in.multiplicities.size(); ++i)
        out += (i ? "," : "") + std::to_string(in.multiplicities[i]);
    out += "],\"degrees\":[";
    for (size_t i = 0; i < in.degrees.size(); ++i)
        out += (i ? "," : "") + std::to_string(in.degrees[i]);
    return out + "]}";
}

// Nondecreasing degree tuples; every route is symmetric in the degrees, so
// sorted profiles cover all of them.
inline void for_each_profile(int max_m, int max_n, long long max_d,
                             const std::function<void(const DegreeProfile&)>& fn) {
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 1; m <= max_m; ++m) {
            std::vector<long long> degrees(static_cast<size_t>(m), 1);
            while (true) {
                fn(DegreeProfile(n, degrees));
                int i = m - 1;
                while (i >= 0 && degrees[static_cast<size_t>(i)] == max_d) --i;
                if (i < 0) break;
                ++degrees[static_cast<size_t>(i)];
                for (int j = i + 1; j < m; ++j)
                    degrees[static_cast<size_t>(j)] = degrees[static_cast<size_t>(i)];
            }
        }
    }
}

inline ConeSingularityInput random_cone_input(Rng& rng, int max_m, int max_n, long long max_a,
                                              long long max_d) {
    std::uniform_int_distribution<int> pick_n(1, max_n), pick_m(1, max_m);
    std::uniform_int_distribution<long long> pick_a(1, max_a), pick_d(1, max_d);
    const int n = pick_n(rng), m = pick_m(rng);
    std::vector<long long> a(static_cast<size_t>(m)), deg(static_cast<size_t>(m));
    for (auto& x : a) x = pick_a(rng);
    for (auto& x : deg) x = pick_d(rng);
    return ConeSingularityInput::smooth(n, std::move(a), std::move(deg));
}

}  // namespace verifydetail

inline VerifyResult run_verify(const VerifyOptions& opts, std::ostream& out) {
    using namespace verifydetail;
    VerifyResult result;
    Rng rng(opts.seed);
    const bool full = opts.full;

    auto check = [&](const std::string& name, const std::function<std::string()>& body) {
        VerifyResult::Check c;
        c.name = name;
        try {
            const std::string failure = body();
            c.pass = failure.empty();
            c.detail = failure;
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        result.all_pass = result.all_pass && c.pass;
        out << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name;
        if (!c.pass) out << ": " << c.detail;
        out << "\n";
        result.checks.push_back(std::move(c));
    };

    check("series: geometric inverse multiplies back to one", [&]() -> std::string {
        std::uniform_int_distribution<long long> pick_d(1, 9);
        std::uniform_int_distribution<int> pick_n(0, 10);
        for (int i = 0; i < (full ? 200 : 40); ++i) {
            const long long d = pick_d(rng);
            const int n = pick_n(rng);
            if (!(series_mul(series_geom_inverse(d, n), TruncSeries::one_plus_dt(d, n)) ==
                  TruncSeries::one(n)))
                return "d=" + std::to_string(d) + " n=" + std::to_string(n);
        }
        return {};
    });

    check("matrix: rank equals rank of the transpose", [&]() -> std::string {
        std::uniform_int_distribution<int> dim(0, 6), entry(-3, 3);
        for (int i = 0; i < (full ? 150 : 30); ++i) {
            RatMatrix m(static_cast<size_t>(dim(rng)), static_cast<size_t>(dim(rng)));
            for (size_t r = 0; r < m.rows(); ++r)
                for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
            if (rank(m) != rank(m.transpose()))
                return "matrix " + std::to_string(m.rows()) + "x" + std::to_string(m.cols());
        }
        return {};
    });

    check("cochain: Euler characteristic preserved by cohomology", [&]() -> std::string {
        for (int m = 1; m <= (full ? 7 : 4); ++m) {
            for (int cut = 0; cut <= m + 1; ++cut) {
                for (auto side : {TruncSide::AtLeast, TruncSide::AtMost}) {
                    const auto c = sigma_truncate(koszul_complex(m), cut, side);
                    long long chi_h = 0;
                    for (const auto& [deg, dim] : cohomology_dims(c))
                        chi_h += (deg % 2 == 0) ? dim : -dim;
                    if (chi_h != c.euler_characteristic())
                        return "m=" + std::to_string(m) + " cut=" + std::to_string(cut);
                }
            }
        }
        return {};
    });

    check("binomial: alternating-sum identity", [&]() -> std::string {
        for (long long m = 1; m <= 20; ++m)
            for (long long n = 1; n <= 20; ++n) {
                long long sum = 0;
                for (long long k = 0; k <= n - 1; ++k) {
                    const long long term = gen_binomial(m - 1, n - 1 - k);
                    sum += (k % 2 == 0) ? term : -term;
                }
                if (gen_binomial(m - 2, n - 1) != sum)
                    return "m=" + std::to_string(m) + " n=" + std::to_string(n);
            }
        return {};
    });

    check("chern: series route = inclusion-exclusion (= closed form when distinct)",
          [&]() -> std::string {
              std::string failure;
              for_each_profile(full ? 6 : 4, full ? 6 : 4, full ? 5 : 3,
                               [&](const DegreeProfile& p) {
                                   if (!failure.empty()) return;
                                   const long long series = chi_open_series(p);
                                   if (series != chi_open_inclusion_exclusion(p)) {
                                       failure = "routes disagree at " + describe_profile(p);
                                       return;
                                   }
                                   if (p.m() > 1 && p.degrees_distinct() &&
                                       chi_open_closed_form(p) != Rat(series))
                                       failure = "closed form disagrees at " + describe_profile(p);
                               });
              return failure;
          });

    check("chern: generic central arrangement value", [&]() -> std::string {
        for (int m = 1; m <= 10; ++m)
            for (int n = 1; n <= 8; ++n) {
                const DegreeProfile p(n, std::vector<long long>(static_cast<size_t>(m), 1));
                const long long expected = ((n % 2 == 0) ? 1 : -1) * gen_binomial(m - 2, n);
                if (chi_open_series(p) != expected)
                    return "m=" + std::to_string(m) + " n=" + std::to_string(n);
            }
        return {};
    });

    check("chern: m=1 homogeneous Milnor-number identity", [&]() -> std::string {
        for (long long d = 1; d <= 10; ++d)
            for (int n = 1; n <= 8; ++n) {
                const long long chi = chi_open_series(DegreeProfile(n, {d}));
                BigInt rhs = 1;
                for (int t = 0; t < n + 1; ++t) rhs *= 1 - BigInt(d);
                if (BigInt(1) - d * BigInt(chi) != rhs)
                    return "d=" + std::to_string(d) + " n=" + std::to_string(n);
            }
        return {};
    });

    check("koszul: acyclicity and binomial image ranks", [&]() -> std::string {
        for (int m = 1; m <= (full ? 8 : 5); ++m) {
            const auto k = koszul_complex(m);
            if (!k.is_complex()) return "d∘d != 0 at m=" + std::to_string(m);
            for (const auto& [deg, dim] : cohomology_dims(k))
                if (dim != 0) return "nonzero H^" + std::to_string(deg) + " at m=" + std::to_string(m);
            for (int j = 1; j <= m; ++j)
                if (rank(k.differentials()[static_cast<size_t>(j) - 1]) !=
                    static_cast<size_t>(gen_binomial(m - 1, j - 1)))
                    return "rank d^" + std::to_string(j - 1) + " at m=" + std::to_string(m);
        }
        return {};
    });

    check("koszul: shifted twisted sum computes binomial Betti numbers", [&]() -> std::string {
        for (int m = 1; m <= (full ? 8 : 5); ++m)
            for (int n = 1; n <= (full ? 8 : 5); ++n) {
                const auto h = shifted_twisted_sum(m, n).cohomology();
                for (int j = 0; j < n; ++j) {
                    const auto it = h.find(j);
                    if ((it == h.end() ? 0 : it->second) != gen_binomial(m - 1, j))
                        return "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                               " j=" + std::to_string(j);
                }
            }
        return {};
    });

    check("spectral: cone-page bounds dominate the truncated Betti numbers",
          [&]() -> std::string {
              for (int m = 1; m <= 8; ++m)
                  for (int n = 2; n <= 6; ++n) {
                      const auto bounds = betti_bounds_from_e1(cone_e1_page(m, n, n - 1));
                      const auto table =
                          cone_betti_table(fixtures::generic_arrangement_input(m, n));
                      for (int j = 0; j < n; ++j) {
                          const auto it = bounds.find(j);
                          const long long bound = it == bounds.end() ? 0 : it->second;
                          if (table.entry(1, j).value() > bound)
                              return "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                     " j=" + std::to_string(j);
                      }
                  }
              return {};
          });

    check("spectral: page entries appear only at admissible (I, a) offsets", [&]() -> std::string {
        std::uniform_int_distribution<int> pick_size(1, 3), pick_s(-1, 2), pick_q(0, 3),
            pick_dim(0, 3);
        for (int trial = 0; trial < (full ? 100 : 20); ++trial) {
            std::vector<StratumDatum> strata;
            const int count = 1 + trial % 3;
            for (int i = 0; i < count; ++i) {
                const int size = pick_size(rng);
                std::vector<int> index_set;
                for (int k = 0; k < size; ++k) index_set.push_back(i * 4 + k + 1);
                const int s = std::min(pick_s(rng), size - 1);
                std::map<int, long long> dims;
                dims[pick_q(rng)] = pick_dim(rng);
                strata.emplace_back(index_set, s, dims);
            }
            std::set<int> j_lambda;
            for (const auto& st : strata)
                for (int i : st.index_set) j_lambda.insert(i);
            const auto page = weight_ss_e1(strata, j_lambda, 3);
            for (const auto& [pq, entry] : page.entries) {
                bool admissible = false;
                for (const auto& st : strata)
                    for (int a = 0; a <= st.s_value; ++a)
                        admissible |=
                            static_cast<int>(st.index_set.size()) - 1 - 2 * a == -pq.first;
                if (!admissible && entry.dim > 0) return "entry outside the admissible offsets";
            }
        }
        return {};
    });

    check("spectral: primitive decomposition is symmetric about the center",
          [&]() -> std::string {
              std::uniform_int_distribution<int> center(0, 4), level(0, 4), dims(0, 5);
              for (int trial = 0; trial < (full ? 200 : 40); ++trial) {
                  const int n = center(rng);
                  std::map<int, long long> primitive;
                  for (int i = 0; i < 3; ++i) primitive[n + level(rng)] += dims(rng);
                  const auto gr = primitive_decomposition_check(primitive, n);
                  for (const auto& [j, d] : gr) {
                      const auto it = gr.find(2 * n - j);
                      if (it == gr.end() || it->second != d)
                          return "asymmetry at weight " + std::to_string(j);
                  }
              }
              return {};
          });

    check("milnor: zeta identity and chi_lambda columns on random cone inputs",
          [&]() -> std::string {
              const int trials = full ? 220 : 60;
              for (int i = 0; i < trials; ++i) {
                  const auto in = random_cone_input(rng, 6, 6, 6, 5);
                  const auto t = cone_betti_table(in);
                  if (!(zeta_function(t) == CycloProduct::factor(in.e(), -in.chi_u())))
                      return "zeta identity: " + describe_cone(in);
                  for (long long c : t.class_orders) {
                      if (chi_lambda(t, c) != in.chi_u())
                          return "chi_lambda column c=" + std::to_string(c) + ": " +
                                 describe_cone(in);
                      for (int j = 0; j <= in.n; ++j)
                          if (t.entry(c, j).value() < 0)
                              return "negative rank: " + describe_cone(in);
                  }
                  for (long long c = 1; c <= in.e() + 2; ++c)
                      if (in.e() % c != 0 && chi_lambda(t, c) != 0)
                          return "nonzero column for c not dividing e: " + describe_cone(in);
              }
              return {};
          });

    check("milnor: m=1 Milnor number equals (d-1)^(n+1) summed over classes",
          [&]() -> std::string {
              for (long long d = 1; d <= 8; ++d)
                  for (int n = 1; n <= 6; ++n) {
                      const auto t =
                          cone_betti_table(ConeSingularityInput::smooth(n, {1}, {d}));
                      BigInt mu = 0;
                      for (long long c : t.class_orders)
                          mu += BigInt(euler_phi(c)) * t.entry(c, n).value();
                      BigInt expected = 1;
                      for (int i = 0; i < n + 1; ++i) expected *= BigInt(d) - 1;
                      if (mu != expected)
                          return "d=" + std::to_string(d) + " n=" + std::to_string(n);
                  }
              return {};
          });

    check("milnor: link bounds agree with the cone table where exact", [&]() -> std::string {
        for (int i = 0; i < (full ? 80 : 20); ++i) {
            auto in = random_cone_input(rng, 5, 5, 6, 4);
            if (in.n < 2) continue;
            const auto t03 = cone_betti_table(in);
            const auto t02 = link_betti_bounds(SncLinkInput(in.n, in.multiplicities, true));
            for (long long c : t02.class_orders) {
                if (std::find(t03.class_orders.begin(), t03.class_orders.end(), c) ==
                    t03.class_orders.end())
                    continue;
                for (int j = 0; j < in.n; ++j) {
                    const auto& e = t02.entry(c, j);
                    if (e.is_exact() && e.value() != t03.entry(c, j).value())
                        return "c=" + std::to_string(c) + " j=" + std::to_string(j) + ": " +
                               describe_cone(in);
                }
            }
        }
        return {};
    });

    check("milnor: semisimple flags cover exactly the guaranteed degrees", [&]() -> std::string {
        for (int i = 0; i < (full ? 40 : 10); ++i) {
            const auto in = random_cone_input(rng, 5, 5, 6, 4);
            const auto t03 = cone_betti_table(in);
            if (!t03.all_semisimple()) return "cone table not semisimple: " + describe_cone(in);
            if (in.n < 2) continue;
            const auto t02 = link_betti_bounds(SncLinkInput(in.n, in.multiplicities, false));
            for (long long c : t02.class_orders) {
                const int delta = (c == 1) ? 1 : 0;
                for (int j = 0; j <= t02.n; ++j)
                    if (t02.entry(c, j).semisimple != (j <= t02.n - 2 + delta))
                        return "flag mismatch at c=" + std::to_string(c) +
                               " j=" + std::to_string(j);
            }
        }
        return {};
    });

    check("jordan: bundled example yields a witness matching the recorded vector",
          [&]() -> std::string {
              const auto g = fixtures::a3_resolution_graph(2);
              const auto u = find_witness(g);
              if (!u) return "no witness found at order 2";
              if (!check_condition_one(g, *u) || !check_condition_two(g, *u))
                  return "returned witness fails re-checking";
              const auto w = fixtures::a3_paper_witness();
              if (!check_condition_one(g, w) || !check_condition_two(g, w))
                  return "recorded witness fails the conditions";
              auto scaled = w;
              for (auto& [key, vals] : scaled.coordinates)
                  for (auto& v : vals) v *= Rat(5, 7);
              if (!check_condition_one(g, scaled) || !check_condition_two(g, scaled))
                  return "scaling invariance fails";
              if (find_witness(fixtures::a3_resolution_graph(1)))
                  return "unexpected witness for the unipotent class";
              if (find_witness(fixtures::a3_multiplicity_one_graph()))
                  return "unexpected witness for the reduced variant";
              return {};
          });

    check("jordan: random graphs only ever return witnesses that re-check", [&]() -> std::string {
        std::uniform_int_distribution<int> pick_ncomp(2, 5), pick_mult(1, 4), pick_order(1, 3),
            pick_h2(0, 2), pick_entry(-1, 1), coin(0, 1);
        int found = 0;
        const int trials = full ? 120 : 30;
        for (int trial = 0; trial < trials; ++trial) {
            ResolutionGraph g;
            const int ncomp = pick_ncomp(rng);
            std::uniform_int_distribution<int> pick_r(1, ncomp);
            const int r = pick_r(rng);
            g.target_order = pick_order(rng);
            for (int i = 0; i < ncomp; ++i)
                g.components.push_back(
                    {"X" + std::to_string(i), pick_mult(rng), i < r});
            std::vector<std::vector<int>> pairs, triples;
            for (int i = 0; i < ncomp; ++i) {
                g.strata.push_back({{i}, 1, std::nullopt,
                                    std::vector<long long>{1, 0, pick_h2(rng)}});
                for (int j = i + 1; j < ncomp; ++j)
                    if (coin(rng)) pairs.push_back({i, j});
            }
            auto has_pair = [&](int a, int b) {
                return std::find(pairs.begin(), pairs.end(), std::vector<int>{a, b}) !=
                       pairs.end();
            };
            for (const auto& p : pairs)
                g.strata.push_back({p, 1 + coin(rng), std::nullopt, std::nullopt});
            for (int i = 0; i < ncomp; ++i)
                for (int j = i + 1; j < ncomp; ++j)
                    for (int k = j + 1; k < ncomp; ++k)
                        if (has_pair(i, j) && has_pair(i, k) && has_pair(j, k) && coin(rng))
                            triples.push_back({i, j, k});
            for (const auto& t : triples)
                g.strata.push_back({t, 1, std::nullopt, std::nullopt});
            // every pair-over-single Gysin block and every restriction off a
            // disconnected pair is supplied, so the data is always complete
            for (const auto& p : pairs) {
                const int cc = g.find_stratum(p)->connected_components;
                for (int single : p) {
                    const long long h2 = (*g.find_stratum({single})->cohomology)[2];
                    if (h2 == 0) continue;
                    RatMatrix classes(static_cast<size_t>(h2), static_cast<size_t>(cc));
                    for (size_t a = 0; a < classes.rows(); ++a)
                        for (size_t b = 0; b < classes.cols(); ++b)
                            classes.at(a, b) = pick_entry(rng);
                    g.gysin.push_back({p, single, std::move(classes)});
                }
                if (cc > 1)
                    for (const auto& t : triples)
                        if (std::includes(t.begin(), t.end(), p.begin(), p.end())) {
                            RatMatrix m(1, static_cast<size_t>(cc));
                            m.at(0, static_cast<size_t>(coin(rng))) = 1;
                            g.explicit_restrictions[{p, t}] = std::move(m);
                        }
            }
            const auto u = find_witness(g);
            if (!u) continue;
            ++found;
            if (!check_condition_one(g, *u)) return "witness fails condition one on replay";
            if (!check_condition_two(g, *u)) return "witness fails condition two on replay";
            auto scaled = *u;
            for (auto& [key, vals] : scaled.coordinates)
                for (auto& v : vals) v *= Rat(3, 2);
            if (!check_condition_one(g, scaled) || !check_condition_two(g, scaled))
                return "scaling invariance fails on a random graph";
        }
        if (found == 0) return "no random graph produced a witness; generator too weak";
        return {};
    });

    check("cli: report documents round-trip through JSON and match the table text",
          [&]() -> std::string {
              for (const auto& in :
                   {fixtures::generic_arrangement_input(4, 2), fixtures::quadric_cone_input(),
                    fixtures::weighted_pair_input()}) {
                  const Json doc = build_cone_report(in);
                  const Json reparsed = Json::parse(render_report_json(doc));
                  if (reparsed != doc) return "JSON round trip changed the document";
                  const std::string table = render_report_table(doc, false);
                  const std::string zeta = doc.at("zeta").at("display").get<std::string>();
                  if (table.find(zeta) == std::string::npos)
                      return "table text lost the zeta value " + zeta;
                  for (const auto& row : doc.at("betti"))
                      for (const auto& r : row.at("ranks"))
                          if (r.at("kind") == "exact" &&
                              table.find("c=" + row.at("order").get<std::string>()) ==
                                  std::string::npos)
                              return "table text lost a class row";
              }
              const Json jd = build_jordan_report(fixtures::a3_resolution_graph(2));
              if (Json::parse(render_report_json(jd)) != jd)
                  return "jordan report round trip changed the document";
              return {};
          });

    out << (result.all_pass ? "verify: all checks passed" : "verify: FAILURES above") << " (seed "
        << opts.seed << ", budget " << (full ? "full" : "small") << ")\n";
    return result;
}

}  // namespace vancoh
