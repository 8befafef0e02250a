// Command-line harness: stream generation, dynamic runs with metrics,
// one-shot static coloring, and full verification runs.
//
// Exit codes: 0 success, 1 argument/parse errors, 2 invariant or oracle
// failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dyncolor/engine.hpp"
#include "dyncolor/errors.hpp"
#include "dyncolor/metrics.hpp"
#include "dyncolor/oracle.hpp"
#include "dyncolor/stream.hpp"

namespace {

using nlohmann::json;
using namespace dyncolor;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInvariant = 2;

json params_json(const Params& p) {
    return json{{"epsilon", p.epsilon},
                {"delta", p.delta_cap},
                {"greedy_slack", p.greedy_slack},
                {"rounds", p.rounds},
                {"seq_length", p.seq_length},
                {"gamma", p.gamma},
                {"delta_prime", p.delta_prime},
                {"subgraph_count", p.subgraph_count},
                {"sub_palette_size", p.sub_palette_size},
                {"epsilon_out_of_theory_range",
                 p.epsilon_out_of_theory_range}};
}

// Timing lives in its own object so deterministic diffs can drop it.
json metrics_json(const Metrics& m, std::uint64_t seed, const Params& p,
                  bool omit_timing) {
    json out{{"updates", m.updates},
             {"total_recourse", m.total_recourse},
             {"mean_recourse", m.mean_recourse},
             {"max_recourse", m.max_recourse},
             {"mean_dirty_tentative", m.mean_dirty_tentative},
             {"colors_used_peak", m.colors_used_peak},
             {"failed_peak", m.failed_peak},
             {"h_max_degree_peak", m.h_max_degree_peak},
             {"h_inserts", m.h_inserts},
             {"h_deletes", m.h_deletes},
             {"greedy_recolors", m.greedy_recolors},
             {"greedy_fallbacks", m.greedy_fallbacks},
             {"resamples", m.resamples},
             {"seed", seed},
             {"params", params_json(p)}};
    if (!omit_timing)
        out["timing"] = json{{"ns_per_update_mean", m.ns_per_update_mean},
                             {"ns_per_update_p50", m.ns_per_update_p50},
                             {"ns_per_update_p99", m.ns_per_update_p99}};
    return out;
}

std::string metrics_csv(const Metrics& m, std::uint64_t seed, const Params& p,
                        bool omit_timing) {
    std::ostringstream out;
    out << "updates,total_recourse,mean_recourse,max_recourse,"
           "mean_dirty_tentative,colors_used_peak,failed_peak,"
           "h_max_degree_peak,h_inserts,h_deletes,greedy_recolors,"
           "greedy_fallbacks,resamples,seed,epsilon,delta,rounds,seq_length,"
           "subgraph_count,sub_palette_size,ns_per_update_mean,"
           "ns_per_update_p50,ns_per_update_p99\n";
    out << m.updates << ',' << m.total_recourse << ',' << m.mean_recourse
        << ',' << m.max_recourse << ',' << m.mean_dirty_tentative << ','
        << m.colors_used_peak << ',' << m.failed_peak << ','
        << m.h_max_degree_peak << ',' << m.h_inserts << ',' << m.h_deletes
        << ',' << m.greedy_recolors << ',' << m.greedy_fallbacks << ','
        << m.resamples << ',' << seed << ',' << p.epsilon << ','
        << p.delta_cap << ',' << p.rounds << ',' << p.seq_length << ','
        << p.subgraph_count << ',' << p.sub_palette_size << ',';
    if (omit_timing)
        out << "0,0,0\n";
    else
        out << m.ns_per_update_mean << ',' << m.ns_per_update_p50 << ','
            << m.ns_per_update_p99 << "\n";
    return out.str();
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw InvalidArgsError("cannot write " + output_path);
    out << text << "\n";
}

struct RunConfig {
    std::string stream_path;
    double epsilon = 0.3;
    std::uint64_t seed = 1;
    std::uint64_t oracle_check = 0;  // audit every k updates; 0 = off
    std::uint64_t resample_every = 0;
    bool resample_threshold = false;
    std::string output_path;
    std::string format = "json";
    bool omit_timing = false;
    unsigned trials = 1;
};

struct TrialResult {
    Metrics metrics;
    std::uint64_t seed = 0;
    std::string failure;  // non-empty: oracle/invariant diagnostic
};

TrialResult run_stream(const StreamFile& stream, const RunConfig& cfg,
                       std::uint64_t seed) {
    TrialResult result;
    result.seed = seed;

    const Params params = derive_params(cfg.epsilon, stream.delta_cap);
    Engine::Options options;
    options.resample_every = cfg.resample_every;
    options.resample_on_threshold = cfg.resample_threshold;
    Engine engine(stream.node_count, params, seed, options);
    MetricsAccumulator acc;

    std::size_t index = 0;
    for (const StreamUpdate& u : stream.updates) {
        ++index;
        const UpdateReport report = engine.apply_update(
            u.insert ? UpdateKind::kInsert : UpdateKind::kDelete, u.edge);
        acc.add(report, engine);
        if (cfg.oracle_check != 0 && index % cfg.oracle_check == 0) {
            if (std::string msg = oracle::audit_engine(engine); !msg.empty()) {
                std::ostringstream dump;
                dump << "oracle mismatch after update " << index << " ("
                     << (u.insert ? '+' : '-') << ' ' << u.edge.u << ' '
                     << u.edge.v << "), seed " << seed << ": " << msg;
                result.failure = dump.str();
                return result;
            }
        }
    }
    if (cfg.oracle_check != 0) {
        if (std::string msg = oracle::audit_engine(engine); !msg.empty()) {
            result.failure = "oracle mismatch at end of stream, seed " +
                             std::to_string(seed) + ": " + msg;
            return result;
        }
    }
    result.metrics = acc.finalize(engine);
    return result;
}

int cmd_run(const RunConfig& cfg, bool force_audit) {
    RunConfig cfg_local = cfg;
    if (force_audit && cfg_local.oracle_check == 0)
        cfg_local.oracle_check = 1;

    const StreamFile stream = parse_stream_file(cfg_local.stream_path);
    const Params params = derive_params(cfg_local.epsilon, stream.delta_cap);

    std::vector<TrialResult> results;
    if (cfg_local.trials <= 1) {
        results.push_back(run_stream(stream, cfg_local, cfg_local.seed));
    } else {
        std::vector<std::future<TrialResult>> futures;
        for (unsigned t = 0; t < cfg_local.trials; ++t) {
            const std::uint64_t seed = cfg_local.seed + t;
            futures.push_back(std::async(std::launch::async, [&, seed] {
                return run_stream(stream, cfg_local, seed);
            }));
        }
        for (auto& f : futures) results.push_back(f.get());
    }

    for (const TrialResult& r : results) {
        if (!r.failure.empty()) {
            std::cerr << r.failure << "\n";
            return kExitInvariant;
        }
    }

    if (cfg_local.format == "csv") {
        std::string text;
        for (const TrialResult& r : results)
            text += metrics_csv(r.metrics, r.seed, params,
                                cfg_local.omit_timing);
        emit(text, cfg_local.output_path);
    } else {
        json out;
        if (results.size() == 1) {
            out = metrics_json(results[0].metrics, results[0].seed, params,
                               cfg_local.omit_timing);
        } else {
            out["trials"] = json::array();
            double recourse = 0.0;
            for (const TrialResult& r : results) {
                out["trials"].push_back(metrics_json(
                    r.metrics, r.seed, params, cfg_local.omit_timing));
                recourse += r.metrics.mean_recourse;
            }
            out["aggregate"] =
                json{{"trials", results.size()},
                     {"mean_recourse", recourse / results.size()}};
        }
        emit(out.dump(2), cfg_local.output_path);
    }
    return kExitOk;
}

int cmd_static(const RunConfig& cfg) {
    const StreamFile stream = parse_stream_file(cfg.stream_path);
    const Params params = derive_params(cfg.epsilon, stream.delta_cap);

    DynGraph g(stream.node_count, stream.delta_cap);
    for (const StreamUpdate& u : stream.updates) {
        if (u.insert)
            g.insert_edge(u.edge);
        else
            g.delete_edge(u.edge);
    }

    const StaticColorResult result = static_color(g, params, cfg.seed);
    const auto violations = oracle::verify_proper(result.coloring, g);
    if (!violations.empty()) {
        std::cerr << "static coloring improper: " << violations.size()
                  << " clashes, seed " << cfg.seed << "\n";
        return kExitInvariant;
    }

    // (1+61eps)Delta is the asymptotic bound; at desk scale the ratio is
    // informational only.
    const double bound = (1.0 + 61.0 * params.epsilon) * params.delta_cap;
    json out{{"edges", g.edge_count()},
             {"colors_used", result.colors_used},
             {"failed_count", result.failed_count},
             {"h_max_degree", result.h_max_degree},
             {"color_bound", bound},
             {"color_bound_ratio",
              bound > 0 ? static_cast<double>(result.colors_used) / bound
                        : 0.0},
             {"proper", true},
             {"seed", cfg.seed},
             {"params", params_json(params)}};
    emit(out.dump(2), cfg.output_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynamic (1+eps)Delta edge coloring harness"};
    app.require_subcommand(1);

    // gen
    GenOptions gen;
    std::string gen_kind = "random";
    std::string gen_output;
    long long gen_n = 0, gen_delta = 0, gen_count = 0;
    auto* gen_cmd = app.add_subcommand("gen", "generate an update stream");
    gen_cmd->add_option("--kind", gen_kind, "random|forest|regularish|churn")
        ->check(CLI::IsMember({"random", "forest", "regularish", "churn"}));
    gen_cmd->add_option("-n,--nodes", gen_n, "node count")
        ->required()
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--delta", gen_delta, "degree bound")
        ->required()
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--count", gen_count, "updates to emit")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--seed", gen.seed, "generator seed");
    gen_cmd->add_option("--delete-fraction", gen.delete_fraction,
                        "churn delete probability");
    gen_cmd->add_option("-o,--output", gen_output, "output path");

    // shared run/static/verify options
    RunConfig cfg;
    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("stream", cfg.stream_path, "stream file")->required();
        cmd->add_option("--epsilon", cfg.epsilon, "accuracy parameter");
        cmd->add_option("--seed", cfg.seed, "randomness seed");
        cmd->add_option("-o,--output", cfg.output_path, "output path");
    };

    auto* run_cmd = app.add_subcommand("run", "execute a dynamic stream");
    add_common(run_cmd);
    run_cmd->add_option("--oracle-check", cfg.oracle_check,
                        "full state audit every k updates (0 = off)");
    run_cmd->add_option("--resample-every", cfg.resample_every,
                        "re-randomize every N updates (0 = off)");
    run_cmd->add_flag("--resample-threshold", cfg.resample_threshold,
                      "re-randomize when max_degree(H) > 19*eps*delta");
    run_cmd->add_option("--format", cfg.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    run_cmd->add_flag("--omit-timing", cfg.omit_timing,
                      "drop wall-clock fields for deterministic diffs");
    run_cmd->add_option("--trials", cfg.trials,
                        "independent engines with derived seeds");

    auto* static_cmd =
        app.add_subcommand("static", "one-shot coloring of the final graph");
    add_common(static_cmd);

    auto* verify_cmd =
        app.add_subcommand("verify", "run with every audit on");
    add_common(verify_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_cmd->parsed()) {
            if (gen_kind == "forest")
                gen.kind = StreamKind::kForest;
            else if (gen_kind == "regularish")
                gen.kind = StreamKind::kRegularish;
            else if (gen_kind == "churn")
                gen.kind = StreamKind::kChurn;
            gen.node_count = static_cast<NodeId>(gen_n);
            gen.delta_cap = static_cast<std::uint32_t>(gen_delta);
            gen.count = static_cast<std::size_t>(gen_count);
            const StreamFile stream = generate_stream(gen);
            if (gen_output.empty())
                write_stream(stream, std::cout);
            else
                write_stream_file(stream, gen_output);
            return kExitOk;
        }
        if (run_cmd->parsed()) return cmd_run(cfg, /*force_audit=*/false);
        if (static_cmd->parsed()) return cmd_static(cfg);
        if (verify_cmd->parsed()) {
            const int rc = cmd_run(cfg, /*force_audit=*/true);
            if (rc == kExitOk) std::cerr << "verify: all audits passed\n";
            return rc;
        }
    } catch (const StreamParseError& ex) {
        std::cerr << "stream parse error: " << ex.what() << "\n";
        return kExitParse;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
