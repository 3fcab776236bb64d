// Acceptance suite: one exact criterion per check, one pass/fail line each.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tp/canonical.hpp"
#include "tp/extremal.hpp"
#include "tp/oracle.hpp"
#include "tp/persistence.hpp"
#include "tp/rng.hpp"
#include "tp/verify.hpp"

namespace {

using tp::field_spec;

const field_spec gf2 = field_spec::gf2();
constexpr std::uint64_t kSeed = 20240915;

struct criterion {
    std::string name;
    std::function<std::string()> run;  // returns detail; throws on failure
};

struct failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw failure(what);
}

// 1. Turan Betti closed form vs matrix reduction, full grid.
std::string turan_closed_form() {
    require(tp::turan_betti_closed_form(8, 2, 1) == 9, "beta_1(T_{8,2}) != 9 (closed form)");
    require(tp::betti(tp::turan(8, 2).first, 1, gf2) == 9, "beta_1(T_{8,2}) != 9 (reduction)");
    require(tp::turan_betti_closed_form(8, 3, 2) == 4, "beta_2(T_{8,3}) != 4 (closed form)");
    require(tp::betti(tp::turan(8, 3).first, 2, gf2) == 4, "beta_2(T_{8,3}) != 4 (reduction)");
    int checked = 0;
    for (int n = 0; n <= 12; ++n)
        for (int k = 1; k <= 4; ++k) {
            const auto g = tp::turan(n, k).first;
            for (int i = 0; i <= 4; ++i, ++checked)
                require(tp::turan_betti_closed_form(n, k, i) == tp::betti(g, i, gf2),
                        "mismatch at T_{" + std::to_string(n) + "," + std::to_string(k) +
                            "} degree " + std::to_string(i));
        }
    return std::to_string(checked) + " (n,k,degree) triples";
}

// 2. Fiberwise optimality via exhaustive enumeration.
std::string fiberwise() {
    std::int64_t graphs = 0;
    for (int n = 4; n <= 6; ++n)
        for (int k = 1; k <= 2; ++k) {
            const auto report = tp::verify_fiberwise_optimality(n, k, gf2);
            require(report.pass, "fiberwise failed at n=" + std::to_string(n) +
                                     " k=" + std::to_string(k) + ": " + report.to_json_line());
            for (std::int64_t e = 1; e <= tp::turan_edge_count(n, k + 1); ++e)
                graphs += static_cast<std::int64_t>(
                    tp::binom(static_cast<int>(tp::choose2(n)), static_cast<int>(e)));
        }
    return std::to_string(graphs) + " labeled graphs enumerated";
}

// 3. Vanishing threshold tight at n in {6,8}, k = 1.
std::string vanishing() {
    for (int n : {6, 8}) {
        const auto report = tp::verify_vanishing(n, 1, gf2);
        require(report.pass, "vanishing failed at n=" + std::to_string(n) + ": " +
                                 report.to_json_line());
        require(report.witness.contains("star_complement_witness"),
                "missing star-complement witness at n=" + std::to_string(n));
        require(report.witness.at("max_at_threshold").get<std::int64_t>() >= 1,
                "threshold not attained at n=" + std::to_string(n));
    }
    return "max beta_1 = 0 above and >= 1 at C(n-1,2)+1, n in {6,8}";
}

// 4. No degree-1 bar born before 4, none of degree 2 before 12.
std::string bar_birth_bounds() {
    int filtrations = 0;
    for (int n = 4; n <= 8; ++n)
        for (int t = 0; t < 100; ++t, ++filtrations) {
            const auto f = tp::random_complete_filtration(
                n, tp::rng::derive(kSeed, static_cast<std::uint64_t>(n * 1000 + t)));
            for (int k = 1; k <= 2; ++k) {
                const auto bc = tp::flag_persistence(f, k, gf2);
                for (const auto& iv : bc.intervals)
                    require(iv.birth >= 2 * k * (k + 1),
                            "degree-" + std::to_string(k) + " bar born at " +
                                std::to_string(iv.birth));
                require(tp::bar_bounds_check(bc, n, k, f.size()).pass, "bar bounds check failed");
            }
        }
    return std::to_string(filtrations) + " seeded filtrations of K_n, n <= 8";
}

// 5. Bar count bound and forced-Turan tightness at n = 6.
std::string max_bars() {
    const auto report = tp::verify_max_bars(6, 200, kSeed, gf2);
    require(report.pass, "maxbars failed: " + report.to_json_line());
    require(report.witness.at("bound") == 4, "bound != 4");
    return "400 trials (random + forced), bound 4";
}

// 6. Optimal schedules match the prediction for 4 <= n <= 14.
std::string optimal_schedules() {
    for (int n = 4; n <= 14; ++n) {
        const auto report = tp::verify_theorem7(n, gf2);
        require(report.pass, "schedule mismatch at n=" + std::to_string(n) + ": " +
                                 report.to_json_line());
        if (n == 10) {
            require(report.witness.at("optimum") == 51, "n=10 optimum != 51");
            require(report.witness.at("optimal_classes") == 1, "n=10 optimum not unique");
        }
        if (n == 8) require(report.witness.at("optimal_classes") == 2, "n=8 should have 2 optima");
        require(report.witness.at("optimal_classes") == (n % 8 == 0 ? 2 : 1),
                "wrong class count at n=" + std::to_string(n));
    }
    return "exhaustive path argmax, 4 <= n <= 14";
}

// 7. Closed-form schedule sums and the two delta formulas.
std::string schedule_formulas() {
    // The two worked coefficient sets for n = 10 both total 50.
    auto path_of = [](int n, const std::string& word) {
        tp::move_path p;
        p.n = n;
        p.word = word;
        p.validate();
        return p;
    };
    require(tp::post_turan_total_persistence(path_of(10, "LRLRLR")) == 50, "LRLRLR != 50");
    require(tp::post_turan_total_persistence(path_of(10, "RLLRRL")) == 50, "RLLRRL != 50");

    // Closed form equals the persistence-computed totals for every path.
    std::int64_t paths_checked = 0;
    for (int n = 4; n <= 12; ++n) {
        for (const auto& p : tp::all_move_paths(n)) {
            require(tp::post_turan_total_persistence(p) ==
                        tp::persistence_post_turan_total(p, gf2),
                    "schedule sum mismatch for n=" + std::to_string(n) + " word " + p.word);
            ++paths_checked;
        }
    }

    // Delta formulas against direct differences, all admissible p <= 7.
    std::int64_t deltas_checked = 0;
    for (int p = 3; p <= 7; ++p) {
        const int n = 2 * p;
        for (int d = 2; d <= p - 1; ++d)
            for (int w = 1; w <= d - 2; ++w)
                for (int v = w; v <= d - 1; ++v) {
                    tp::representation g, g2;
                    g.n = g2.n = n;
                    g.tuples = {{1, 1}};
                    if (v > 1 || w > 1) g.tuples.emplace_back(v, w);
                    for (int i = d; i <= p - 1; ++i) g.tuples.emplace_back(i, i);
                    g2.tuples = {{1, 1}};
                    if ((v > 1 || w > 1) && !(v == d - 1 && w == d - 1))
                        g2.tuples.emplace_back(v, w);
                    if (v != d - 1 || w != d - 1) g2.tuples.emplace_back(d - 1, d - 1);
                    for (int i = d; i <= p - 1; ++i) g2.tuples.emplace_back(i, i);
                    require(tp::post_turan_total_persistence(g2) -
                                    tp::post_turan_total_persistence(g) ==
                                tp::delta_alternation(p, w, d),
                            "alternation delta mismatch");
                    ++deltas_checked;
                }
        for (int j = 1; j <= p - 2; ++j)
            for (int k = 1; k <= j; ++k)
                for (int l = j + 1; l <= p - 1; ++l)
                    for (int m = k; m <= l; ++m) {
                        tp::representation g, g2;
                        g.n = g2.n = n;
                        g.tuples = {{1, 1}};
                        if (j > 1 || k > 1) g.tuples.emplace_back(j, k);
                        g.tuples.emplace_back(l, m);
                        if (std::pair<int, int>{l, m} != std::pair<int, int>{p - 1, p - 1})
                            g.tuples.emplace_back(p - 1, p - 1);
                        g2.tuples = {{1, 1}};
                        if (std::pair<int, int>{j + 1, k} != std::pair<int, int>{l, m} &&
                            (j + 1 > 1 || k > 1))
                            g2.tuples.emplace_back(j + 1, k);
                        g2.tuples.emplace_back(l, m);
                        if (std::pair<int, int>{l, m} != std::pair<int, int>{p - 1, p - 1})
                            g2.tuples.emplace_back(p - 1, p - 1);
                        require(tp::post_turan_total_persistence(g2) -
                                        tp::post_turan_total_persistence(g) ==
                                    tp::delta_start(p, j, k),
                                "start delta mismatch");
                        ++deltas_checked;
                    }
    }
    return std::to_string(paths_checked) + " paths, " + std::to_string(deltas_checked) +
           " delta instances";
}

// 8. Metric realization round trip with exhaustive axiom checks.
std::string metric_round_trip() {
    const auto report = tp::verify_metric_realization(200, kSeed);
    require(report.pass, "metric failed: " + report.to_json_line());
    return "200 seeded filtrations, n <= 10";
}

// 9. The n = 8 bipartite-spanning sweep, exhaustive vs structured.
std::string bipartite_sweep() {
    const auto ex = tp::sweep_bipartite_optimum(8, 0, 12, tp::sweep_mode::exhaustive, gf2);
    require(ex[0].max_beta1 == 9, "t=0 max != 9");
    require(ex[5].max_beta1 == 2, "t=5 max != 2");
    const auto st = tp::sweep_bipartite_optimum(8, 0, 12, tp::sweep_mode::structured, gf2);
    for (std::size_t i = 0; i < ex.size(); ++i)
        require(ex[i].max_beta1 == st[i].max_beta1,
                "structured/exhaustive mismatch at t=" + std::to_string(i));
    const auto st2 = tp::sweep_bipartite_optimum(8, 0, 12, tp::sweep_mode::structured, gf2);
    for (std::size_t i = 0; i < st.size(); ++i)
        require(st[i].witness == st2[i].witness && st[i].max_beta1 == st2[i].max_beta1,
                "structured sweep not deterministic");
    return "t in 0..12: max beta_1 = 9 at t=0, 2 at t=5, modes agree";
}

// 10. Kunneth identity on all small pairs plus the sampled link bound.
std::string kunneth_and_bounds() {
    const auto kn = tp::verify_kunneth(5, gf2);
    require(kn.pass, "kunneth failed: " + kn.to_json_line());
    const auto bounds = tp::verify_bound_hierarchy(500, kSeed, gf2);
    require(bounds.pass, "bound hierarchy failed: " + bounds.to_json_line());
    std::ostringstream detail;
    detail << kn.witness.at("labeled_factors").get<int>() << " factors, "
           << kn.witness.at("class_pairs").get<int>() << " class pairs, 500 sampled bounds";
    return detail.str();
}

} // namespace

int main() {
    const std::vector<criterion> criteria = {
        {"turan-betti-closed-form", turan_closed_form},
        {"fiberwise-optimality", fiberwise},
        {"vanishing-tightness", vanishing},
        {"bar-birth-bounds", bar_birth_bounds},
        {"max-bar-count", max_bars},
        {"optimal-schedules", optimal_schedules},
        {"schedule-formulas", schedule_formulas},
        {"metric-realization", metric_round_trip},
        {"bipartite-sweep", bipartite_sweep},
        {"kunneth-and-bounds", kunneth_and_bounds},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = criteria[i].run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%2zu] %s  %-24s (%.2fs)  %s\n", i + 1, ok ? "PASS" : "FAIL",
                    criteria[i].name.c_str(), secs, detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
