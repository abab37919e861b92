#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "pathram/asymptotics.hpp"
#include "pathram/game.hpp"
#include "pathram/recursion.hpp"
#include "pathram/solver.hpp"
#include "pathram/walks.hpp"

namespace {

using namespace pathram;

std::string nine_digits(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct OutputFormat {
    std::string value = "text";
};

void add_format_option(CLI::App* cmd, OutputFormat& fmt) {
    cmd->add_option("--format", fmt.value, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
}

std::vector<std::int64_t> parse_target_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::string token;
    for (char c : text) {
        if (c == ',') {
            out.push_back(static_cast<std::int64_t>(parse_int128(token)));
            token.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            token.push_back(c);
        }
    }
    if (!token.empty()) out.push_back(static_cast<std::int64_t>(parse_int128(token)));
    return out;
}

GrowthRate parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return GrowthRate(parse_int128(text), 1);
    return GrowthRate(parse_int128(text.substr(0, slash)), parse_int128(text.substr(slash + 1)));
}

void print_report(const solver::SearchReport& report, const std::string& format, bool timing) {
    if (format == "json") {
        std::cout << solver::report_to_json(report).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "l1,l2,kstar,method,witness_count,witnesses_truncated\n"
                  << report.l1 << "," << report.l2 << "," << dec_string(report.kstar) << ","
                  << report.method << "," << report.witnesses.size() << ","
                  << (report.witnesses_truncated ? "yes" : "no") << "\n";
    } else {
        std::cout << "k*(P_" << report.l1 << ",P_" << report.l2 << ") = " << dec_string(report.kstar)
                  << "  [" << report.method << "]\n";
        std::cout << "m* = " << solver::mstar_of_kstar(report.kstar).str() << "\n";
        if (!report.witnesses.empty()) {
            std::cout << "witnesses (" << report.witnesses.size()
                      << (report.witnesses_truncated ? ", truncated" : "") << "):\n";
            for (const auto& w : report.witnesses) {
                std::cout << "  " << walks::to_run_length(w) << "\n";
            }
        }
        std::cout << "nodes expanded " << report.counters.nodes_expanded << ", bound prunes "
                  << report.counters.nodes_pruned_bound << ", dominance prunes "
                  << report.counters.nodes_pruned_dominance << "\n";
    }
    if (timing) {
        std::cerr << "wall time: " << report.wall_seconds << "s\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact solver and analysis toolkit for the path-avoidance coloring game"};
    app.require_subcommand(1);
    unsigned long long seed = 0;
    app.add_option("--seed", seed, "random seed (reserved for randomized suites; deterministic commands ignore it)");

    solver::SearchOptions search_opts;
    if (const char* cap = std::getenv("PATHRAM_NODE_CAP")) {
        search_opts.exhaustive_cap = std::strtoull(cap, nullptr, 10);
    }

    // kstar
    auto* kstar_cmd = app.add_subcommand(
        "kstar", "compute the game value k*(P_l1,P_l2): the smallest tree size restriction at "
                 "which Builder wins the (P_l1,P_l2)-avoidance game");
    std::int64_t l1 = 0, l2 = 0;
    std::string method = "bb";
    OutputFormat kstar_fmt;
    bool timing = false;
    bool no_witnesses = false;
    bool dominance = false;
    kstar_cmd->add_option("--l1", l1, "first path target")->required();
    kstar_cmd->add_option("--l2", l2, "second path target")->required();
    kstar_cmd->add_option("--method", method, "search method")
        ->check(CLI::IsMember({"bb", "exhaustive"}))
        ->capture_default_str();
    kstar_cmd->add_option("--workers", search_opts.workers,
                          "parallel workers for branch-and-bound (1 = deterministic)");
    kstar_cmd->add_option("--witness-cap", search_opts.witness_cap, "maximum witnesses reported");
    kstar_cmd->add_flag("--no-witnesses", no_witnesses, "report the value only");
    kstar_cmd->add_flag("--dominance", dominance,
                        "enable the per-lattice-point dominance filter (off by default; "
                        "states at a shared point are virtually never comparable)");
    kstar_cmd->add_flag("--timing", timing, "print wall time to stderr");
    add_format_option(kstar_cmd, kstar_fmt);

    // eval-walk
    auto* eval_cmd = app.add_subcommand(
        "eval-walk", "evaluate the walk recursion: k(alpha), the full value sequence, and for "
                     "two colors beta(alpha) and delta(alpha)");
    std::string walk_text;
    int min_colors = 0;
    bool full_trace = false;
    OutputFormat eval_fmt;
    eval_cmd->add_option("--walk", walk_text, "walk in run-length form, e.g. 1^6,2^2,1^7,2,1^14,2^24")
        ->required();
    eval_cmd->add_option("--colors", min_colors, "number of colors if larger than the largest entry");
    eval_cmd->add_flag("--trace", full_trace, "include the full k and x sequences");
    add_format_option(eval_cmd, eval_fmt);

    // verify-table
    auto* table_cmd = app.add_subcommand(
        "verify-table", "recompute k*(P_l,2) for l = 2..max and compare against the known exact "
                        "values (l <= 45)");
    std::int64_t max_ell = 27;
    OutputFormat table_fmt;
    table_fmt.value = "csv";
    table_cmd->add_option("--max-l", max_ell, "largest l to check")->capture_default_str();
    table_cmd->add_option("--workers", search_opts.workers, "parallel workers");
    add_format_option(table_cmd, table_fmt);

    // delta-family
    auto* family_cmd = app.add_subcommand(
        "delta-family", "the explicit strategy walk family whose rates delta(alpha) converge to "
                        "the exact growth constant delta(c) for c in {4,5,6}");
    int family_c = 4;
    int family_t = 1;
    OutputFormat family_fmt;
    family_cmd->add_option("--c", family_c, "second color target c (4, 5 or 6)")->required();
    family_cmd->add_option("--t", family_t, "scale exponent: coordinates use precision 10^t")
        ->required();
    add_format_option(family_cmd, family_fmt);

    // bootstrap
    auto* boot_cmd = app.add_subcommand(
        "bootstrap", "nested strategy walks for c = 4^t built from scale s and ratio q; their "
                     "rate compounds as f(q,s)^t");
    std::string q_text = "13/10";
    std::int64_t boot_s = 320;
    int boot_t = 1;
    bool boot_eval = false;
    OutputFormat boot_fmt;
    boot_cmd->add_option("--q", q_text, "rational ratio q (l2/l1 per level)")->capture_default_str();
    boot_cmd->add_option("--s", boot_s, "integer scale factor per level")->capture_default_str();
    boot_cmd->add_option("--t", boot_t, "nesting depth")->required();
    boot_cmd->add_flag("--eval", boot_eval, "also evaluate beta/delta of the walk (long walks are slow)");
    add_format_option(boot_cmd, boot_fmt);

    // symmetric-lb
    auto* sym_cmd = app.add_subcommand(
        "symmetric-lb", "the symmetric-game walk: the q=13/10, s=320 bootstrap walk extended to "
                        "the square endpoint 10*416^t");
    int sym_t = 0;
    bool sym_eval = false;
    OutputFormat sym_fmt;
    sym_cmd->add_option("--t", sym_t, "nesting depth")->required();
    sym_cmd->add_flag("--eval", sym_eval, "also evaluate k(walk) (slow beyond t = 1)");
    add_format_option(sym_cmd, sym_fmt);

    // simulate
    auto* sim_cmd = app.add_subcommand(
        "simulate", "play Builder's tree-list strategy against a Painter on the board and report "
                    "the per-step tree sizes and outcome");
    std::string targets_text;
    std::string painter_name = "greedy";
    std::string painter_walk_text;
    std::int64_t sim_cap = -1;
    bool transcript = false;
    OutputFormat sim_fmt;
    sim_cmd->add_option("--targets", targets_text, "comma-separated path targets, e.g. 5,3")
        ->required();
    sim_cmd->add_option("--painter", painter_name, "painter strategy")
        ->check(CLI::IsMember({"greedy", "walk"}))
        ->capture_default_str();
    sim_cmd->add_option("--walk", painter_walk_text, "strategy walk for --painter walk");
    sim_cmd->add_option("--cap", sim_cap, "tree size restriction (Builder halts rather than exceed it)");
    sim_cmd->add_flag("--transcript", transcript, "include a replayable vertex-addition log");
    add_format_option(sim_cmd, sim_fmt);

    // period
    auto* period_cmd = app.add_subcommand(
        "period", "long-run analysis of x_n = beta + min_{i+j=n-1}(x_i+x_j): period, per-period "
                  "increment, and rational rate");
    std::string prefix_text;
    std::string beta_text;
    std::int64_t extend_to = -1;
    OutputFormat period_fmt;
    period_cmd->add_option("--prefix", prefix_text, "comma-separated integer prefix x_0,...,x_t")
        ->required();
    period_cmd->add_option("--beta", beta_text, "integer offset")->required();
    period_cmd->add_option("--extend", extend_to, "also print the extension up to this index");
    add_format_option(period_cmd, period_fmt);

    CLI11_PARSE(app, argc, argv);

    if (kstar_cmd->parsed()) {
        search_opts.collect_witnesses = !no_witnesses;
        search_opts.use_dominance = dominance;
        solver::SearchReport report = method == "bb"
                                          ? solver::kstar_branch_and_bound(l1, l2, search_opts)
                                          : solver::kstar_exhaustive(l1, l2, search_opts);
        print_report(report, kstar_fmt.value, timing);
        return 0;
    }

    if (eval_cmd->parsed()) {
        auto walk = walks::parse_walk(walk_text, min_colors);
        auto trace = recursion::evaluate(walk);
        nlohmann::json j = recursion::trace_to_json(trace);
        if (!full_trace) {
            j.erase("k");
            for (int s = 1; s <= walk.colors(); ++s) j.erase("x" + std::to_string(s));
        }
        j["k_of_walk"] = dec_string(trace.k_final());
        j["d"] = walk.length();
        if (walk.colors() == 2) {
            j["beta"] = dec_string(recursion::beta_of_walk(walk));
            auto delta = recursion::delta_of_walk(walk);
            j["delta"] = delta.str();
            j["delta_approx"] = nine_digits(delta.to_double());
        }
        if (eval_fmt.value == "json") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "walk " << walks::to_run_length(walk) << "\n";
            std::cout << "targets (";
            for (std::size_t s = 0; s < walk.targets().size(); ++s) {
                std::cout << (s ? "," : "") << walk.targets()[s];
            }
            std::cout << "), d = " << walk.length() << "\n";
            std::cout << "k(alpha) = " << dec_string(trace.k_final()) << "\n";
            if (walk.colors() == 2) {
                std::cout << "beta(alpha) = " << j["beta"].get<std::string>() << "\n";
                std::cout << "delta(alpha) = " << j["delta"].get<std::string>() << " ~ "
                          << j["delta_approx"].get<std::string>() << "\n";
            }
            if (full_trace) {
                std::cout << "k =";
                for (const auto& v : trace.k_values) std::cout << " " << dec_string(v);
                std::cout << "\n";
                for (std::size_t s = 0; s < trace.x.size(); ++s) {
                    std::cout << "x" << s + 1 << " =";
                    for (const auto& v : trace.x[s]) std::cout << " " << dec_string(v);
                    std::cout << "\n";
                }
            }
        }
        return 0;
    }

    if (table_cmd->parsed()) {
        search_opts.collect_witnesses = false;
        auto rows = solver::verify_table(max_ell, search_opts);
        bool all_ok = true;
        if (table_fmt.value == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& row : rows) {
                arr.push_back({{"ell", row.ell},
                               {"kstar", dec_string(row.computed)},
                               {"table_value", row.expected},
                               {"diff", dec_string(row.computed - row.expected)},
                               {"status", row.ok ? "ok" : "mismatch"}});
                all_ok = all_ok && row.ok;
            }
            std::cout << arr.dump(2) << "\n";
        } else {
            std::cout << "ell,kstar,table_value,diff,status\n";
            for (const auto& row : rows) {
                std::cout << row.ell << "," << dec_string(row.computed) << "," << row.expected << ","
                          << dec_string(row.computed - row.expected) << ","
                          << (row.ok ? "ok" : "mismatch") << "\n";
                all_ok = all_ok && row.ok;
            }
        }
        return all_ok ? 0 : 1;
    }

    if (family_cmd->parsed()) {
        auto walk = asymptotics::delta_family(family_c, family_t);
        auto delta = recursion::delta_of_walk(walk);
        nlohmann::json j;
        j["c"] = family_c;
        j["t"] = family_t;
        j["walk"] = walks::to_run_length(walk);
        j["targets"] = {walk.targets()[0], walk.targets()[1]};
        j["beta"] = dec_string(recursion::beta_of_walk(walk));
        j["delta"] = delta.str();
        j["delta_approx"] = nine_digits(delta.to_double());
        const char* limits[3] = {"(sqrt(13)+5)/2", "(sqrt(24)+6)/2", "(sqrt(37)+7)/2"};
        const double limit_values[3] = {4.302775637731995, 5.449489742783178, 6.541381265149110};
        j["limit"] = limits[family_c - 4];
        j["limit_approx"] = nine_digits(limit_values[family_c - 4]);
        if (family_fmt.value == "json") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "walk " << j["walk"].get<std::string>() << " in W(" << walk.targets()[0]
                      << "," << walk.targets()[1] << ")\n";
            std::cout << "delta(alpha) = " << delta.str() << " ~ "
                      << j["delta_approx"].get<std::string>() << "\n";
            std::cout << "limit delta(" << family_c << ") = " << j["limit"].get<std::string>()
                      << " ~ " << j["limit_approx"].get<std::string>() << "\n";
        }
        return 0;
    }

    if (boot_cmd->parsed()) {
        auto params = asymptotics::BootstrapParams::make(parse_rational(q_text), boot_s, boot_t);
        if (params.below_recommended_s) {
            std::cerr << "warning: s < 100 weakens the rate analysis (the construction itself is fine)\n";
        }
        auto walk = asymptotics::bootstrap_walk(params);
        auto rate = asymptotics::bootstrap_rate(params.q, params.s);
        nlohmann::json j;
        j["q"] = params.q.str();
        j["s"] = boot_s;
        j["t"] = boot_t;
        j["walk"] = walks::to_run_length(walk);
        j["targets"] = {walk.targets()[0], walk.targets()[1]};
        j["rate"] = rate.str();
        j["rate_approx"] = nine_digits(rate.to_double());
        if (boot_eval) {
            auto delta = recursion::delta_of_walk(walk);
            j["beta"] = dec_string(recursion::beta_of_walk(walk));
            j["delta"] = delta.str();
            j["delta_approx"] = nine_digits(delta.to_double());
        }
        if (boot_fmt.value == "json") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "walk " << j["walk"].get<std::string>() << " in W(" << walk.targets()[0]
                      << "," << walk.targets()[1] << ")\n";
            std::cout << "f(q,s) = " << rate.str() << " ~ " << j["rate_approx"].get<std::string>()
                      << "\n";
            if (boot_eval) {
                std::cout << "delta(alpha) = " << j["delta"].get<std::string>() << " ~ "
                          << j["delta_approx"].get<std::string>() << "\n";
            }
        }
        return 0;
    }

    if (sym_cmd->parsed()) {
        auto walk = asymptotics::symmetric_lb_walk(sym_t);
        nlohmann::json j;
        j["t"] = sym_t;
        j["ell_hat"] = dec_string(asymptotics::symmetric_lb_target(sym_t));
        j["walk"] = walks::to_run_length(walk);
        if (sym_eval) j["k_of_walk"] = dec_string(recursion::k_of_walk(walk));
        if (sym_fmt.value == "json") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "endpoint " << j["ell_hat"].get<std::string>() << " (square)\n";
            std::cout << "walk " << j["walk"].get<std::string>() << "\n";
            if (sym_eval) {
                std::cout << "k(walk) = " << j["k_of_walk"].get<std::string>() << "\n";
            }
        }
        return 0;
    }

    if (sim_cmd->parsed()) {
        auto targets = parse_target_list(targets_text);
        game::PainterStrategy painter;
        if (painter_name == "walk") {
            if (painter_walk_text.empty()) {
                throw validation_error("--painter walk needs --walk");
            }
            painter = game::PainterStrategy::from_walk(
                walks::parse_walk(painter_walk_text, static_cast<int>(targets.size())));
        }
        std::optional<int128> cap;
        if (sim_cap >= 0) cap = sim_cap;
        auto result = game::run_game(targets, painter, cap, transcript);
        nlohmann::json j;
        j["targets"] = targets;
        j["painter"] = painter_name;
        j["steps"] = result.steps;
        nlohmann::json sizes = nlohmann::json::array();
        for (auto v : result.tree_sizes) sizes.push_back(dec_string(v));
        j["tree_sizes"] = sizes;
        j["largest_component"] = dec_string(result.largest_component);
        j["survived"] = result.cap_respected;
        if (result.losing_color) {
            j["losing_color"] = result.losing_color;
            j["losing_path_len"] = result.losing_path_len;
        }
        j["extracted"] = result.extracted;
        if (transcript) j["transcript"] = result.transcript;
        if (sim_fmt.value == "json") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "steps " << result.steps << ", largest tree "
                      << dec_string(result.largest_component) << "\n";
            if (result.cap_respected) {
                std::cout << "Painter survives: the next tree would exceed the cap\n";
            } else {
                std::cout << "monochromatic P_" << result.losing_path_len << " in color "
                          << result.losing_color << "\n";
            }
        }
        return 0;
    }

    if (period_cmd->parsed()) {
        std::vector<int128> prefix;
        for (auto v : parse_target_list(prefix_text)) prefix.push_back(v);
        // parse_target_list narrows to int64; the CLI accepts that range.
        auto analysis = asymptotics::period_analysis(prefix, parse_int128(beta_text));
        nlohmann::json j = asymptotics::period_to_json(analysis);
        if (extend_to >= 0) {
            auto x = asymptotics::extend_recurrence(prefix, analysis.beta, extend_to);
            nlohmann::json arr = nlohmann::json::array();
            for (auto v : x) arr.push_back(dec_string(v));
            j["extension"] = arr;
        }
        if (period_fmt.value == "json") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "p = " << analysis.p << ", period " << analysis.period_length
                      << ", increment " << dec_string(analysis.increment) << " per period\n";
            std::cout << "delta = " << analysis.delta.str() << " ~ "
                      << nine_digits(analysis.delta.to_double()) << "\n";
            std::cout << "onset " << analysis.onset << "\n";
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pathram::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const pathram::overflow_error& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return 1;
    } catch (const pathram::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
