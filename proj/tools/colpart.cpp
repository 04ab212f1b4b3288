#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "colpart/errors.hpp"
#include "colpart/gf.hpp"
#include "colpart/graph.hpp"
#include "colpart/oracle.hpp"
#include "colpart/render.hpp"
#include "colpart/selfcheck.hpp"
#include "colpart/transfer.hpp"

namespace {

enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_resource = 3,
};

struct RunConfig {
    std::string graph_spec;
    int colors = 2;
    int n = 1;
    std::string format = "text";
    std::uint64_t oracle_budget = colpart::default_oracle_budget;
    std::size_t state_cap = colpart::default_state_cap;
    unsigned workers = 1;

    colpart::TransferOptions transfer() const { return {state_cap, workers}; }
};

nlohmann::json header(const RunConfig& c) { return {{"graph", c.graph_spec}, {"k", c.colors}}; }

int cmd_series(const RunConfig& c) {
    const auto g = colpart::parse_graph_spec(c.graph_spec);
    const auto s = colpart::series(g, c.colors, static_cast<std::size_t>(c.n), c.transfer());
    if (c.format == "json") {
        auto j = header(c);
        j["terms"] = nlohmann::json::array();
        for (std::size_t n = 1; n <= s.n_max(); ++n) {
            j["terms"].push_back(colpart::to_json(s.term(n)));
        }
        std::cout << j.dump() << "\n";
    } else if (c.format == "latex") {
        std::cout << colpart::series_latex(s) << "\n";
    } else {
        std::cout << colpart::series_text(s) << "\n";
    }
    return exit_ok;
}

int cmd_gf(const RunConfig& c) {
    const auto g = colpart::parse_graph_spec(c.graph_spec);
    colpart::GfOptions opts;
    opts.transfer = c.transfer();
    const auto gf = colpart::rational_gf(g, c.colors, opts);
    if (c.format == "json") {
        auto j = header(c);
        j["numerator"] = colpart::to_json(gf.numerator);
        j["denominator"] = colpart::to_json(gf.denominator);
        j["order"] = gf.denominator.degree();
        std::cout << j.dump() << "\n";
    } else if (c.format == "latex") {
        std::cout << colpart::gf_latex(gf) << "\n";
    } else {
        std::cout << colpart::gf_text(gf) << "\n";
    }
    return exit_ok;
}

int cmd_expect(const RunConfig& c) {
    const auto g = colpart::parse_graph_spec(c.graph_spec);
    const auto e = colpart::expected_size(g, c.colors, c.n, c.transfer());
    if (c.format == "json") {
        auto j = header(c);
        j["n"] = c.n;
        j["expected"] = e.str();
        j["numerator"] = e.numerator().get_str();
        j["denominator"] = e.denominator().get_str();
        std::cout << j.dump() << "\n";
    } else if (c.format == "latex") {
        std::cout << "\\frac{" << e.numerator().get_str() << "}{" << e.denominator().get_str() << "}\n";
    } else {
        std::cout << e.str() << "\n";
    }
    return exit_ok;
}

int cmd_oracle(const RunConfig& c) {
    const auto g = colpart::parse_graph_spec(c.graph_spec);
    const auto p = colpart::oracle_distribution(g, c.colors, c.n, c.oracle_budget, c.workers);
    if (c.format == "json") {
        auto j = header(c);
        j["n"] = c.n;
        j["distribution"] = colpart::to_json(p);
        std::cout << j.dump() << "\n";
    } else if (c.format == "latex") {
        std::cout << colpart::to_latex(p) << "\n";
    } else {
        std::cout << colpart::to_text(p) << "\n";
    }
    return exit_ok;
}

int cmd_selfcheck(const RunConfig& c, bool json) {
    colpart::SelfcheckOptions opts;
    opts.oracle_budget = c.oracle_budget;
    opts.state_cap = c.state_cap;
    nlohmann::json report = nlohmann::json::array();
    const auto results = colpart::run_selfcheck(opts, [&](const colpart::CheckResult& r) {
        if (json) {
            report.push_back({{"id", r.id}, {"name", r.name}, {"status", colpart::status_label(r.status)},
                              {"detail", r.detail}});
        } else {
            std::cout << colpart::format_result(r) << std::endl;
        }
    });
    const int code = colpart::selfcheck_exit_code(results);
    if (json) {
        std::cout << nlohmann::json{{"checks", report}, {"ok", code == 0}}.dump() << "\n";
    } else {
        std::cout << (code == 0 ? "selfcheck passed" : "selfcheck FAILED") << "\n";
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counts k-colored partitions of G x P_n and their generating functions"};
    app.require_subcommand(1);

    RunConfig config;
    const std::vector<std::string> formats{"text", "json", "latex"};

    auto add_common = [&](CLI::App* sub, bool wants_graph) {
        if (wants_graph) {
            sub->add_option("--graph", config.graph_spec, "path:m | cycle:m | complete:m | file:<edge list>")
                ->required();
            sub->add_option("--colors,-k", config.colors, "number of colors k")->check(CLI::Range(1, 65535));
        }
        sub->add_option("--format", config.format, "text, json or latex")->check(CLI::IsMember(formats));
        sub->add_option("--oracle-budget", config.oracle_budget, "max colorings the oracle may enumerate")
            ->check(CLI::PositiveNumber);
        sub->add_option("--state-cap", config.state_cap, "max live transfer states")->check(CLI::PositiveNumber);
        sub->add_option("--workers", config.workers, "worker threads, 0 = all cores");
    };

    auto* series_cmd = app.add_subcommand("series", "coefficients [x^n] C_G^(k)(x,y) for n = 1..n-max");
    add_common(series_cmd, true);
    series_cmd->add_option("--n-max", config.n, "last power of x")->required()->check(CLI::PositiveNumber);

    auto* gf_cmd = app.add_subcommand("gf", "rational generating function C_G^(k)(x,y)");
    add_common(gf_cmd, true);

    auto* expect_cmd = app.add_subcommand("expect", "expected number of parts under uniform coloring");
    add_common(expect_cmd, true);
    expect_cmd->add_option("--n", config.n, "path length n")->required()->check(CLI::PositiveNumber);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force distribution over all colorings");
    add_common(oracle_cmd, true);
    oracle_cmd->add_option("--n", config.n, "path length n")->required()->check(CLI::PositiveNumber);

    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "run every acceptance check");
    add_common(selfcheck_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*series_cmd) {
            return cmd_series(config);
        }
        if (*gf_cmd) {
            return cmd_gf(config);
        }
        if (*expect_cmd) {
            return cmd_expect(config);
        }
        if (*oracle_cmd) {
            return cmd_oracle(config);
        }
        return cmd_selfcheck(config, config.format == "json");
    } catch (const colpart::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return exit_resource;
    } catch (const colpart::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const colpart::contract_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return exit_check_failed;
    }
}
