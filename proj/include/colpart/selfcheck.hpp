#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "poly_parse.hpp"
#include "reference.hpp"
#include "transfer.hpp"

// The end-to-end acceptance checks, shared by `colpart selfcheck` and the
// acceptance test binary.

namespace colpart {

enum class CheckStatus { pass, fail, skipped };

inline const char* status_label(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass:
        return "PASS";
    case CheckStatus::fail:
        return "FAIL";
    case CheckStatus::skipped:
        return "SKIPPED";
    }
    return "?";
}

struct CheckResult {
    int id = 0;
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct SelfcheckOptions {
    std::uint64_t oracle_budget = default_oracle_budget;
    std::size_t state_cap = default_state_cap;
    // Worker counts compared by the determinism check; 0 means all cores.
    std::vector<unsigned> worker_configs{1, 2, 0};
    reference::ReferenceForms reference;
    // Criterion ids to run; empty runs all of them.
    std::set<int> only;
};

struct GridInstance {
    std::string graph_spec;
    BaseGraph graph;
    int k;
    int n;
};

// G in {P_1, P_2, P_3, K_3, K_4, C_4}, k in {1, 2, 3}, n in {1..4}.
inline std::vector<GridInstance> acceptance_grid() {
    std::vector<GridInstance> out;
    for (const char* spec : {"path:1", "path:2", "path:3", "complete:3", "complete:4", "cycle:4"}) {
        const BaseGraph g = parse_graph_spec(spec);
        for (int k = 1; k <= 3; ++k) {
            for (int n = 1; n <= 4; ++n) {
                out.push_back({spec, g, k, n});
            }
        }
    }
    return out;
}

inline std::string describe(const GridInstance& inst) {
    return inst.graph_spec + " k=" + std::to_string(inst.k) + " n=" + std::to_string(inst.n);
}

namespace detail {

struct CheckContext {
    const SelfcheckOptions& opts;
    TransferOptions transfer() const { return {opts.state_cap, 1}; }
};

inline std::string first_mismatch(const SeriesInX& got, const XYPolynomial& want, std::size_t n_max) {
    for (std::size_t n = 0; n <= std::max<std::size_t>(n_max, static_cast<std::size_t>(want.degree() + 1)); ++n) {
        const YPolynomial expected = n == 0 ? YPolynomial{} : want.coeff(n);
        const YPolynomial actual = (n == 0 || n > got.n_max()) ? YPolynomial{} : got.term(n);
        if (!(expected == actual)) {
            std::ostringstream os;
            os << "x^" << n << " differs";
            return os.str();
        }
    }
    return {};
}

inline CheckResult expansion_check(int id, std::string name, const CheckContext& ctx, const char* spec,
                                   const std::string& expansion) {
    CheckResult r{id, std::move(name), CheckStatus::pass, {}};
    const XYPolynomial want = parse_xy_polynomial(expansion);
    const auto n_max = static_cast<std::size_t>(want.degree());
    const SeriesInX got = series(parse_graph_spec(spec), 2, n_max, ctx.transfer());
    if (auto diff = first_mismatch(got, want, n_max); !diff.empty()) {
        r.status = CheckStatus::fail;
        r.detail = diff;
    } else {
        r.detail = "x^1..x^" + std::to_string(n_max) + " exact";
    }
    return r;
}

// Oracle distributions for every grid instance within budget, per worker
// configuration. nullopt marks an instance skipped for budget.
using OracleTable = std::vector<std::optional<YPolynomial>>;

inline OracleTable oracle_table(const std::vector<GridInstance>& grid, std::uint64_t budget, unsigned workers) {
    OracleTable out;
    out.reserve(grid.size());
    for (const auto& inst : grid) {
        if (coloring_count(inst.graph, inst.k, inst.n) > BigInt(std::to_string(budget))) {
            out.emplace_back(std::nullopt);
        } else {
            out.emplace_back(oracle_distribution(inst.graph, inst.k, inst.n, budget, workers));
        }
    }
    return out;
}

// Series terms for every grid instance, computed once per (graph, k).
inline std::vector<YPolynomial> series_table(const std::vector<GridInstance>& grid, const TransferOptions& t) {
    std::map<std::pair<std::string, int>, SeriesInX> cache;
    std::vector<YPolynomial> out;
    out.reserve(grid.size());
    for (const auto& inst : grid) {
        auto key = std::pair{inst.graph_spec, inst.k};
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, series(inst.graph, inst.k, 4, t)).first;
        }
        out.push_back(it->second.term(static_cast<std::size_t>(inst.n)));
    }
    return out;
}

} // namespace detail

inline std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& opts = {},
                                              const std::function<void(const CheckResult&)>& on_result = {}) {
    const detail::CheckContext ctx{opts};
    const auto& ref = opts.reference;
    std::vector<CheckResult> results;
    auto wanted = [&](int id) { return opts.only.empty() || opts.only.contains(id); };
    auto record = [&](CheckResult r) {
        if (on_result) {
            on_result(r);
        }
        results.push_back(std::move(r));
    };
    auto guarded = [&](int id, const std::string& name, const std::function<CheckResult()>& body) {
        if (!wanted(id)) {
            return;
        }
        try {
            record(body());
        } catch (const std::exception& e) {
            record({id, name, CheckStatus::fail, std::string("exception: ") + e.what()});
        }
    };

    const auto grid = acceptance_grid();
    std::vector<unsigned> configs;
    for (unsigned w : opts.worker_configs) {
        const unsigned resolved = resolve_workers(w);
        if (std::find(configs.begin(), configs.end(), resolved) == configs.end()) {
            configs.push_back(resolved);
        }
    }
    if (configs.empty()) {
        configs.push_back(1);
    }
    std::map<unsigned, detail::OracleTable> oracle_by_workers;
    auto oracle_for = [&](unsigned workers) -> const detail::OracleTable& {
        auto it = oracle_by_workers.find(workers);
        if (it == oracle_by_workers.end()) {
            it = oracle_by_workers.emplace(workers, detail::oracle_table(grid, opts.oracle_budget, workers)).first;
        }
        return it->second;
    };

    guarded(1, "K_3 series through x^4", [&] {
        return detail::expansion_check(1, "K_3 series through x^4", ctx, "complete:3", ref.k3_expansion);
    });

    guarded(2, "2 x n grid series through x^4", [&] {
        CheckResult r = detail::expansion_check(2, "2 x n grid series through x^4", ctx, "path:2", ref.grid2_expansion);
        const SeriesInX s = series(BaseGraph::path(2), 2, 3, ctx.transfer());
        const BigInt c34 = s.term(3).coeff(4);
        r.detail += "; c(3,4) = " + c34.get_str();
        if (c34 != ref.grid2_n3_four_parts) {
            r.status = CheckStatus::fail;
        }
        return r;
    });

    guarded(3, "K_3 x P_3 partitions with six parts", [&] {
        CheckResult r{3, "K_3 x P_3 partitions with six parts", CheckStatus::pass, {}};
        const SeriesInX s = series(BaseGraph::complete(3), 2, 3, ctx.transfer());
        const BigInt c = s.term(3).coeff(6);
        r.detail = "[x^3 y^6] = " + c.get_str();
        if (c != ref.k3_n3_six_parts) {
            r.status = CheckStatus::fail;
        }
        return r;
    });

    guarded(4, "rational GF reconstruction", [&] {
        CheckResult r{4, "rational GF reconstruction", CheckStatus::pass, {}};
        GfOptions go;
        go.transfer = ctx.transfer();
        const bool k3 = gf_equiv(rational_gf(BaseGraph::complete(3), 2, go), reference::k3_gf(ref));
        const bool grid = gf_equiv(rational_gf(BaseGraph::path(2), 2, go), reference::grid2_gf(ref));
        r.detail = std::string("K_3 ") + (k3 ? "equal" : "DIFFERENT") + ", 2 x n grid " + (grid ? "equal" : "DIFFERENT");
        if (!k3 || !grid) {
            r.status = CheckStatus::fail;
        }
        return r;
    });

    guarded(5, "total-count identity at y = 1", [&] {
        CheckResult r{5, "total-count identity at y = 1", CheckStatus::pass, {}};
        const auto totals = eval_gf_at_y1(reference::k3_gf(ref), 10);
        BigInt expect = 1;
        for (std::size_t n = 0; n < totals.size(); ++n) {
            expect *= ref.k3_total_base;
            if (totals[n] != expect) {
                r.status = CheckStatus::fail;
                r.detail = "[x^" + std::to_string(n + 1) + "] T(x,1) = " + totals[n].get_str();
                return r;
            }
        }
        const auto terms = detail::series_table(grid, ctx.transfer());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (eval_at_one(terms[i]) != coloring_count(grid[i].graph, grid[i].k, grid[i].n)) {
                r.status = CheckStatus::fail;
                r.detail = "p(1) != k^(mn) for " + describe(grid[i]);
                return r;
            }
        }
        r.detail = std::to_string(ref.k3_total_base) + "^1..^10 and " + std::to_string(grid.size()) + " grid instances";
        return r;
    });

    guarded(6, "expected part count for K_3, n = 1..8", [&] {
        CheckResult r{6, "expected part count for K_3, n = 1..8", CheckStatus::pass, {}};
        const SeriesInX s = series(BaseGraph::complete(3), 2, 8, ctx.transfer());
        for (int n = 1; n <= 8; ++n) {
            const BigRational got = expected_size_from_term(s.term(static_cast<std::size_t>(n)), BaseGraph::complete(3), 2, n);
            const BigRational want = reference::k3_expected_size(ref, n);
            if (!(got == want)) {
                r.status = CheckStatus::fail;
                r.detail = "n=" + std::to_string(n) + ": got " + got.str() + ", want " + want.str();
                return r;
            }
            r.detail += (n > 1 ? " " : "") + got.str();
        }
        return r;
    });

    guarded(7, "oracle agrees with transfer engine", [&] {
        CheckResult r{7, "oracle agrees with transfer engine", CheckStatus::pass, {}};
        const auto& oracle = oracle_for(configs.front());
        const auto terms = detail::series_table(grid, ctx.transfer());
        std::size_t compared = 0;
        std::size_t skipped = 0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!oracle[i]) {
                ++skipped;
                continue;
            }
            ++compared;
            if (!(*oracle[i] == terms[i])) {
                r.status = CheckStatus::fail;
                r.detail = "mismatch at " + describe(grid[i]);
                return r;
            }
        }
        r.detail = std::to_string(compared) + " instances exact";
        if (skipped > 0) {
            r.status = CheckStatus::skipped;
            r.detail += ", " + std::to_string(skipped) + " above oracle budget";
        }
        return r;
    });

    guarded(8, "recurrence order and re-expansion", [&] {
        CheckResult r{8, "recurrence order and re-expansion", CheckStatus::pass, {}};
        GfOptions go;
        go.transfer = ctx.transfer();
        const BaseGraph p1 = BaseGraph::path(1);
        const SeriesInX s1 = series(p1, 2, 2 * 2 + 1, ctx.transfer());
        const auto d1 = guess_recurrence(s1, 2);
        if (!d1 || d1->degree() != 1 || !(*d1 == parse_xy_polynomial(ref.path1_denominator))) {
            r.status = CheckStatus::fail;
            r.detail = "P_1 denominator is not " + ref.path1_denominator;
            return r;
        }
        for (const char* spec : {"path:1", "path:2", "complete:3"}) {
            const BaseGraph g = parse_graph_spec(spec);
            const RationalGF gf = rational_gf(g, 2, go);
            const auto order = static_cast<std::size_t>(gf.denominator.degree());
            const std::size_t n_check = 4 * order + 2;
            const auto expanded = expand(gf, n_check);
            const SeriesInX s = series(g, 2, n_check, ctx.transfer());
            for (std::size_t n = 1; n <= n_check; ++n) {
                if (!(expanded[n] == s.term(n))) {
                    r.status = CheckStatus::fail;
                    r.detail = std::string(spec) + ": re-expansion differs at x^" + std::to_string(n);
                    return r;
                }
            }
            r.detail += std::string(r.detail.empty() ? "" : ", ") + spec + " order " + std::to_string(order);
        }
        return r;
    });

    guarded(9, "determinism across worker counts", [&] {
        CheckResult r{9, "determinism across worker counts", CheckStatus::pass, {}};
        const auto& base_oracle = oracle_for(configs.front());
        const auto base_series = detail::series_table(grid, {opts.state_cap, configs.front()});
        std::size_t skipped = 0;
        for (const auto& o : base_oracle) {
            skipped += o ? 0 : 1;
        }
        std::string used;
        for (unsigned w : configs) {
            used += (used.empty() ? "" : ",") + std::to_string(w);
            const auto& oracle = oracle_for(w);
            const auto terms = detail::series_table(grid, {opts.state_cap, w});
            for (std::size_t i = 0; i < grid.size(); ++i) {
                if (!(oracle[i] == base_oracle[i]) || !(terms[i] == base_series[i])) {
                    r.status = CheckStatus::fail;
                    r.detail = "workers=" + std::to_string(w) + " differs at " + describe(grid[i]);
                    return r;
                }
            }
        }
        r.detail = "workers {" + used + "} identical";
        if (skipped > 0) {
            r.status = CheckStatus::skipped;
            r.detail += ", " + std::to_string(skipped) + " oracle instances above budget";
        }
        return r;
    });

    return results;
}

// 1 if any check failed, else 0. Skipped checks do not fail the run.
inline int selfcheck_exit_code(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        if (r.status == CheckStatus::fail) {
            return 1;
        }
    }
    return 0;
}

inline std::string format_result(const CheckResult& r) {
    return std::string("[") + status_label(r.status) + "] " + std::to_string(r.id) + ". " + r.name + " -- " + r.detail;
}

} // namespace colpart
