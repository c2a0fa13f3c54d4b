// Copyright 2026 The qsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// qsearch: command-line front end for the search simulator.
//
//   qsearch spectrum --grover --n 64
//   qsearch search --symmetric --pairs 0.68 --seed 2 --target 1
//   qsearch invert --scheme basic --mu-sweep 8,10,12,14
//   qsearch pipeline --scheme boosted --mu-offset 8 --format csv
//   qsearch compare --b-list 2,3,4 --mu-offset 8
//   qsearch schedule --theta-min 2.7 --mu-offset 8
//
// Exit status: 0 success, 1 schedule exhausted its rounds, 2 invalid
// configuration, 3 assumption violation, 4 resource cap.

#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsearch/config.hpp"
#include "qsearch/error.hpp"
#include "qsearch/pipeline.hpp"
#include "qsearch/report.hpp"
#include "qsearch/search_core.hpp"

using namespace qsearch;

namespace {

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::AssumptionViolation:
    case ErrorKind::Pole:
    case ErrorKind::DegenerateSpectrum:
        return 3;
    case ErrorKind::ResourceCap:
        return 4;
    case ErrorKind::ScheduleFailure:
        return 1;
    default:
        return 2;
    }
}

std::optional<std::string> find_config_path(int argc, char **argv) {
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--config") == 0 && i + 1 < argc) {
            return std::string(argv[i + 1]);
        }
        if (std::strncmp(argv[i], "--config=", 9) == 0) {
            return std::string(argv[i] + 9);
        }
    }
    return std::nullopt;
}

RunConfig load_config_file(const std::string &path) {
    std::ifstream in(path);
    require(in.good(), ErrorKind::InvalidConfig, "cannot open config file '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::InvalidConfig, std::string("config file: ") + e.what());
    }
    return merge_config(RunConfig{}, doc);
}

void emit(const RunConfig &cfg, const std::string &text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out);
    require(out.good(), ErrorKind::InvalidConfig, "cannot write '" + cfg.out + "'");
    out << text;
}

std::string dump(const Json &doc) { return doc.dump(2) + "\n"; }

void check_cap(const RunConfig &cfg, const RegisterLayout &layout) {
    layout.check_cap(cfg.dense_cap);
}

std::string cmd_spectrum(const RunConfig &cfg) {
    const DiffusionSpec spec = spec_from_config(cfg);
    std::optional<SearchInstance> inst;
    if (cfg.target >= 0 || !cfg.spec.empty() || cfg.preset == "grover") {
        inst = make_instance(spec, cfg.target >= 0 ? static_cast<std::size_t>(cfg.target) : 0);
    } else {
        inst = instance_from_config(cfg);
    }
    const double l1 = moments(inst->spec, inst->target, 1);
    const double l2 = moments(inst->spec, inst->target, 2);
    if (cfg.format == "csv") {
        return "N,t,alpha,lambda1,lambda2,B,theta_min\n" + std::to_string(inst->dim()) + "," +
               std::to_string(inst->target) + "," + format_number(inst->alpha) + "," +
               format_number(l1) + "," + format_number(l2) + "," + format_number(inst->big_b) +
               "," + format_number(inst->theta_min()) + "\n";
    }
    Json doc{{"config", to_json(cfg)},
             {"spec", spec_to_json(inst->spec, inst->target)},
             {"moments",
              {{"alpha", inst->alpha}, {"lambda1", l1}, {"lambda2", l2}, {"B", inst->big_b}}}};
    return dump(doc);
}

std::string cmd_search(const RunConfig &cfg) {
    const SearchInstance inst = instance_from_config(cfg);
    const SearchOperator s = diagonalize_search_operator(inst);
    const RelevantPair pair = find_relevant_pair(inst, s);
    const WState w = evolve_to_w(inst, s);
    const double overlap = std::abs(w.state[static_cast<Eigen::Index>(inst.target)]);
    const ComplexVector minus = (pair.vec_plus - pair.vec_minus) / std::sqrt(2.0);
    const double minus_component = std::abs(minus.dot(w.state));
    const double residual = max_secular_residual(inst, s);
    const double recon = (reconstruct_source(pair) - inst.source).norm();
    if (cfg.format == "csv") {
        return "instance_id,alpha,B,lambda_plus,lambda_minus,predicted_plus,q_m,w_overlap,"
               "one_over_b\n" +
               summarize(inst).id + "," + format_number(inst.alpha) + "," +
               format_number(inst.big_b) + "," + format_number(pair.lambda_plus) + "," +
               format_number(pair.lambda_minus) + "," + format_number(pair.predicted_plus) + "," +
               std::to_string(w.q_m) + "," + format_number(overlap) + "," +
               format_number(1.0 / inst.big_b) + "\n";
    }
    Json doc{{"config", to_json(cfg)},
             {"instance", to_json(summarize(inst))},
             {"pair", to_json(pair)},
             {"max_secular_residual", residual},
             {"source_reconstruction_error", recon},
             {"w",
              {{"q_m", w.q_m},
               {"overlap", overlap},
               {"one_over_b", 1.0 / inst.big_b},
               {"relative_deviation", std::abs(overlap * inst.big_b - 1.0)},
               {"minus_component", minus_component}}}};
    return dump(doc);
}

std::string cmd_invert(const RunConfig &cfg) {
    const SearchInstance inst = instance_from_config(cfg);
    const SearchOperator s = diagonalize_search_operator(inst);
    const RelevantPair pair = find_relevant_pair(inst, s);
    require(cfg.scheme != "exact", ErrorKind::InvalidConfig,
            "invert needs scheme 'basic' or 'boosted'");
    const InversionScheme base = scheme_from_config(cfg, inst);

    std::vector<InversionScheme> schemes;
    for (unsigned mu : cfg.mu_sweep) {
        InversionScheme sc = base;
        sc.mu = mu;
        schemes.push_back(sc);
    }
    for (unsigned nu : cfg.nu_sweep) {
        InversionScheme sc = base;
        require(sc.kind == SchemeKind::Boosted, ErrorKind::InvalidConfig,
                "nu_sweep needs the boosted scheme");
        sc.nu = nu;
        schemes.push_back(sc);
    }
    if (schemes.empty()) {
        schemes.push_back(base);
    }

    Json reports = Json::array();
    std::string csv = "scheme,mu,nu,epsilon_max,predicted_bound,within_bound,max_omega_beta_gap\n";
    std::vector<double> mus;
    std::vector<double> log_eps;
    for (InversionScheme sc : schemes) {
        sc.validate();
        check_cap(cfg, sc.layout(inst.dim()));
        const ApproximateInversion r(s, sc);
        const EpsilonReport rep = measure_epsilon(r, pair, inst.big_b);
        double gap = 0.0;
        for (const KickbackEntry &k : analyze_kickback(r)) {
            gap = std::max(gap, std::abs(k.omega - k.beta));
        }
        reports.push_back({{"scheme", to_json(sc)},
                           {"epsilon", to_json(rep)},
                           {"max_omega_beta_gap", gap}});
        csv += std::string(to_string(sc.kind)) + "," + std::to_string(sc.mu) + "," +
               std::to_string(sc.nu) + "," + format_number(rep.epsilon_max) + "," +
               format_number(rep.predicted_bound) + "," + (rep.within_bound() ? "1" : "0") + "," +
               format_number(gap) + "\n";
        mus.push_back(sc.mu);
        log_eps.push_back(std::log(rep.epsilon_max));
    }
    if (cfg.format == "csv") {
        return csv;
    }
    Json doc{{"config", to_json(cfg)}, {"instance", to_json(summarize(inst))}, {"reports", reports}};
    if (cfg.mu_sweep.size() >= 2) {
        // d ln(epsilon) / d mu; the 1/sqrt(2^mu) law predicts -ln(2)/2.
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < cfg.mu_sweep.size(); ++i) {
            mx += mus[i];
            my += log_eps[i];
        }
        const auto n = static_cast<double>(cfg.mu_sweep.size());
        mx /= n;
        my /= n;
        double sxx = 0.0, sxy = 0.0;
        for (std::size_t i = 0; i < cfg.mu_sweep.size(); ++i) {
            sxx += (mus[i] - mx) * (mus[i] - mx);
            sxy += (mus[i] - mx) * (log_eps[i] - my);
        }
        doc["slope_log_epsilon_vs_mu"] = sxy / sxx;
        doc["slope_expected"] = -std::log(2.0) / 2;
    }
    return dump(doc);
}

PipelineResult run_configured(const RunConfig &cfg, const SearchInstance &inst) {
    if (cfg.scheme == "exact") {
        return run_full_exact(inst);
    }
    const InversionScheme sc = scheme_from_config(cfg, inst);
    check_cap(cfg, sc.layout(inst.dim()));
    return run_full(inst, sc);
}

std::string cmd_pipeline(const RunConfig &cfg) {
    const SearchInstance inst = instance_from_config(cfg);
    const PipelineResult res = run_configured(cfg, inst);
    if (cfg.format == "csv") {
        return csv_table({res});
    }
    Json doc{{"config", to_json(cfg)}, {"result", to_json(res)}};
    if (cfg.trials > 0) {
        doc["baseline"] = to_json(classical_baseline(inst, cfg.trials, cfg.seed));
    }
    return dump(doc);
}

std::string cmd_compare(const RunConfig &cfg) {
    std::vector<PipelineResult> results;
    for (double bb : cfg.b_list) {
        RunConfig c = cfg;
        c.pairs = {pair_phase_for_b(bb)};
        c.b_target = bb;
        c.target = -1;
        const SearchInstance inst = instance_from_config(c);
        results.push_back(run_configured(c, inst));
    }
    if (cfg.format == "csv") {
        return csv_table(results);
    }
    return dump(Json{{"config", to_json(cfg)}, {"report", to_json(complexity_report(results))}});
}

std::string cmd_schedule(const RunConfig &cfg, bool &failed) {
    const SearchInstance inst = instance_from_config(cfg);
    ScheduleOptions opt;
    opt.initial_guess = cfg.theta_min > 0.0 ? cfg.theta_min : opt.initial_guess;
    opt.kind = cfg.scheme == "basic" ? SchemeKind::Basic : SchemeKind::Boosted;
    require(cfg.scheme != "exact", ErrorKind::InvalidConfig, "schedule needs an approximate scheme");
    opt.mu_offset = cfg.mu_offset;
    opt.b = cfg.b;
    opt.delta = cfg.delta;
    opt.max_rounds = cfg.max_rounds;
    opt.seed = cfg.seed;
    const ScheduleResult res = run_schedule(inst, opt);
    failed = !res.success;
    if (cfg.format == "csv") {
        std::string out = "round,theta_guess,outcome\n";
        for (std::size_t i = 0; i < res.theta_guesses.size(); ++i) {
            out += std::to_string(i + 1) + "," + format_number(res.theta_guesses[i]) + "," +
                   std::to_string(res.outcomes[i]) + "\n";
        }
        return out;
    }
    return dump(Json{{"config", to_json(cfg)},
                     {"instance", to_json(summarize(inst))},
                     {"schedule", to_json(res)}});
}

} // namespace

int main(int argc, char **argv) {
    RunConfig cfg;
    try {
        if (auto path = find_config_path(argc, argv)) {
            cfg = load_config_file(*path);
        }
    } catch (const Error &e) {
        std::cerr << "qsearch: " << e.what() << "\n";
        return exit_code(e.kind());
    }

    CLI::App app{"Simulator for quantum search with phase-estimation postprocessing"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file; flags override it");
    app.add_option("--seed", cfg.seed, "Seed for every random choice");
    app.add_option("--out", cfg.out, "Write the report here instead of stdout");
    app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--n", cfg.n, "Mainspace dimension");
    app.add_flag_callback("--grover", [&] { cfg.preset = "grover"; }, "Grover diffusion preset");
    app.add_flag_callback("--symmetric", [&] { cfg.preset = "symmetric"; },
                          "Symmetric-spectrum preset (Lambda_1 = 0)");
    app.add_option("--spec", cfg.spec, "Spec document written by 'spectrum'");
    app.add_option("--pairs", cfg.pairs, "Pair phases, comma separated")->delimiter(',');
    app.add_option("--b-target", cfg.b_target, "Choose pair phases giving roughly this B");
    app.add_option("--target", cfg.target, "Target basis state (-1: search the alpha window)");
    app.add_option("--max-alpha-ratio", cfg.max_alpha_ratio, "Upper bound on alpha / theta_min");
    app.add_option("--scheme", cfg.scheme, "basic, boosted or exact")
        ->check(CLI::IsMember({"basic", "boosted", "exact"}));
    app.add_option("--mu", cfg.mu, "Workspace qubits (0: auto)");
    app.add_option("--nu", cfg.nu, "Vote qubits (0: auto)");
    app.add_option("--delta", cfg.delta, "Window margin delta");
    app.add_option("--b", cfg.b, "Additive qubit constant of the basic sizing");
    app.add_option("--mu-offset", cfg.mu_offset, "Additive qubit constant of the boosted sizing");
    app.add_option("--theta-min", cfg.theta_min, "Gap used by the inversion (schedule: first guess)");
    app.add_option("--mu-sweep", cfg.mu_sweep, "Workspace sizes to sweep")->delimiter(',');
    app.add_option("--nu-sweep", cfg.nu_sweep, "Vote register sizes to sweep")->delimiter(',');
    app.add_option("--b-list", cfg.b_list, "B values for 'compare'")->delimiter(',');
    app.add_option("--trials", cfg.trials, "Monte Carlo trials for the baseline (0: skip)");
    app.add_option("--max-rounds", cfg.max_rounds, "Schedule round budget (0: default)");
    app.add_option("--dense-cap", cfg.dense_cap, "Largest joint state, in amplitudes");

    const std::vector<std::pair<const char *, const char *>> commands = {
        {"spectrum", "Build a diffusion spectrum and report its moments"},
        {"search", "Relevant eigenphases and the w-state"},
        {"invert", "Error of the approximate selective inversion"},
        {"pipeline", "End-to-end search with postprocessing"},
        {"compare", "Complexity table over a family of instances"},
        {"schedule", "Search with an unknown spectral gap"}};
    for (const auto &[name, help] : commands) {
        app.add_subcommand(name, help)->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        cfg.validate();
        bool failed = false;
        std::string text;
        if (cfg.command == "spectrum") {
            text = cmd_spectrum(cfg);
        } else if (cfg.command == "search") {
            text = cmd_search(cfg);
        } else if (cfg.command == "invert") {
            text = cmd_invert(cfg);
        } else if (cfg.command == "pipeline") {
            text = cmd_pipeline(cfg);
        } else if (cfg.command == "compare") {
            text = cmd_compare(cfg);
        } else {
            text = cmd_schedule(cfg, failed);
        }
        emit(cfg, text);
        if (failed) {
            std::cerr << "qsearch: schedule exhausted its round budget\n";
            return 1;
        }
    } catch (const Error &e) {
        std::cerr << "qsearch: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e.kind());
    }
    return 0;
}
