#include "horn/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <omp.h>

#include "horn/domino.hpp"
#include "horn/duplication.hpp"
#include "horn/errors.hpp"
#include "horn/lr_rule.hpp"
#include "horn/render.hpp"
#include "horn/report_io.hpp"
#include "horn/spectral.hpp"
#include "horn/sweep.hpp"

namespace horn::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition literal(const std::string& text, const char* what) {
    try {
        return parse_partition(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string(what) + ": " + e.what() + "\n  " + text + "\n  " +
                         std::string(e.position(), ' ') + "^");
    }
}

// "[a,b,...]" with real entries; integer literals go through parse_partition.
std::vector<double> real_literal(const std::string& text) {
    std::vector<double> out;
    std::size_t i = text.find_first_not_of(" \t");
    if (i == std::string::npos || text[i] != '[') throw UsageError("sigma: expected '[' at position 0");
    ++i;
    const char* s = text.c_str();
    while (true) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i < text.size() && text[i] == ']' && out.empty()) break;
        char* end = nullptr;
        const double v = std::strtod(s + i, &end);
        if (end == s + i) throw UsageError("sigma: expected a number at position " + std::to_string(i));
        out.push_back(v);
        i = static_cast<std::size_t>(end - s);
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        if (i < text.size() && text[i] == ']') break;
        throw UsageError("sigma: expected ',' or ']' at position " + std::to_string(i));
    }
    if (text.find_first_not_of(" \t", i + 1) != std::string::npos)
        throw UsageError("sigma: trailing characters at position " + std::to_string(i + 1));
    return out;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path.string());
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
}

std::string weight_string(const DominoTableau& t) {
    const auto w = t.weight();
    return to_string(Partition(std::vector<int>(w.begin(), w.end())));
}

// --- lr ---------------------------------------------------------------------

struct LrArgs {
    std::string lambda, mu, nu, method = "both";
};

int cmd_lr(const LrArgs& a, std::ostream& out) {
    const Partition lambda = literal(a.lambda, "lambda"), mu = literal(a.mu, "mu"), nu = literal(a.nu, "nu");
    std::optional<std::uint64_t> classical, domino;
    if (a.method != "domino") classical = lr_coefficient(lambda, mu, nu);
    if (a.method != "classical") {
        const std::size_t r = std::max(lambda.declared_length(), mu.declared_length());
        domino = cl_coefficient(lambda.padded(r), mu.padded(r), nu);
    }
    if (classical) out << "classical " << *classical << '\n';
    if (domino) out << "domino " << *domino << '\n';
    if (classical && domino) {
        const bool agree = *classical == *domino;
        out << (agree ? "agree" : "DISAGREE") << '\n';
        return agree ? verified : counterexample;
    }
    return verified;
}

// --- enumerate --------------------------------------------------------------

struct EnumerateArgs {
    std::string shape, weight, render, out_dir;
    bool yamanouchi = false;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
    const Partition shape = literal(a.shape, "shape"), weight = literal(a.weight, "weight");
    const auto tableaux = enumerate_domino_tableaux(shape, weight, {.yamanouchi_only = a.yamanouchi});
    if (!a.out_dir.empty()) ensure_dir(a.out_dir);
    for (std::size_t i = 0; i < tableaux.size(); ++i) {
        const auto& t = tableaux[i];
        out << "# tableau " << i + 1 << " reading word " << to_string(reading_word(t)) << '\n' << serialize(t);
        const std::string stem = "tableau_" + std::to_string(i + 1);
        if (a.render == "ascii") {
            const auto art = render_ascii(t);
            if (a.out_dir.empty())
                out << art;
            else
                write_file(fs::path(a.out_dir) / (stem + ".txt"), art);
        } else if (a.render == "svg") {
            const auto svg = render_svg(t);
            if (a.out_dir.empty())
                out << svg;
            else
                write_file(fs::path(a.out_dir) / (stem + ".svg"), svg);
        }
    }
    out << "count " << tableaux.size() << '\n';
    return verified;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "prop2", json_path, execution = "parallel";
    int max_part = 6, p = 2;
    double budget = 0.0;
    bool all = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    SweepConfig config;
    config.p = a.p;
    config.max_part = a.max_part;
    config.time_budget_seconds = a.budget;
    config.execution = a.execution == "serial" ? Execution::serial : Execution::parallel;

    Report report;
    if (a.suite == "prop2") report = sweep_prop2(config);
    else if (a.suite == "p1p2") report = sweep_p1_equals_p2(config);
    else if (a.suite == "implication") report = sweep_implication(config);
    else if (a.suite == "fflp") report = sweep_fflp(config);
    else if (a.suite == "lpp") report = sweep_lpp(config);
    else if (a.suite == "projection") report = sweep_projection(config);
    else report = sweep_cl_vs_lr(config);

    if (a.all) {
        write_report_text(out, report);
    } else {
        Report failed{report.suite, {}, report.complete};
        for (const auto& r : report.records)
            if (!r.ok) failed.records.push_back(r);
        write_report_text(out, failed);
        out << "checked " << report.records.size() << '\n';
    }
    if (!a.json_path.empty()) write_file(a.json_path, report_to_json(report).dump(1) + "\n");

    if (report.failures() > 0) return counterexample;
    if (!report.complete) return budget_exceeded;
    return verified;
}

// --- spectra ----------------------------------------------------------------

struct SpectraArgs {
    std::string sigma, mode = "random", out_prefix, execution = "parallel";
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    double tolerance = 1e-7;
};

int cmd_spectra(const SpectraArgs& a, std::ostream& out) {
    const auto sigma = real_literal(a.sigma);
    if (sigma.empty() || sigma.size() % 2 != 0) throw UsageError("sigma must have positive even length");
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
        if (sigma[i] < sigma[i + 1]) throw UsageError("sigma must be weakly decreasing");
    const auto mode = parse_sampling_mode(a.mode);
    const auto records = monte_carlo_q(sigma, a.samples, a.seed, mode,
                                       a.execution == "serial" ? Execution::serial : Execution::parallel);
    const auto summary = summarize(sigma, records, mode, a.tolerance);

    if (!a.out_prefix.empty()) {
        std::ostringstream table;
        write_samples_text(table, a.seed, records);
        write_file(a.out_prefix + ".tsv", table.str());
        write_file(a.out_prefix + ".json", samples_to_json(a.seed, mode, sigma, records).dump(1) + "\n");
    }
    out << "mode " << to_string(mode) << " seed " << a.seed << '\n';
    write_summary_text(out, summary);

    const double scale = spectral_scale(sigma);
    bool ok = summary.max_trace_error < 1e-9 * scale;
    if (mode != SamplingMode::rotation) ok = ok && summary.max_pairing_defect < 1e-8 * scale;
    if (mode == SamplingMode::block) ok = ok && summary.max_block_discrepancy < 1e-9;
    if (summary.hull_checked) ok = ok && summary.inside_hull == summary.samples;
    return ok ? verified : counterexample;
}

// --- figures ----------------------------------------------------------------

void write_figure(const fs::path& dir, const std::string& name, std::size_t index, const DominoTableau& t,
                  std::ostream& index_out) {
    const std::string stem = name + "_" + std::to_string(index);
    write_file(dir / (stem + ".svg"), render_svg(t));
    write_file(dir / (stem + ".txt"), serialize(t));
    index_out << stem << " shape " << to_string(t.shape()) << " weight " << weight_string(t) << " word "
              << to_string(reading_word(t)) << '\n';
}

int cmd_figures(const std::string& out_dir, std::ostream& out) {
    const fs::path dir(out_dir);
    ensure_dir(dir);
    std::ostringstream index;
    bool ok = true;

    // figure1: Yamanouchi tableaux of shape tau(sigma+, sigma-), sigma = (5,3,2,0), two-part weights.
    const Partition sigma1({5, 3, 2, 0});
    const auto [m1, p1] = sigma_split(sigma1);
    const Partition shape1 = tau_partitions(p1, m1);
    std::vector<DominoTableau> fig1;
    auto weights = partitions_of(static_cast<int>(sigma1.weight()), 2, static_cast<int>(sigma1.weight()));
    std::reverse(weights.begin(), weights.end());
    for (const auto& nu : weights)
        for (auto& t : enumerate_domino_tableaux(shape1, nu, {.yamanouchi_only = true})) fig1.push_back(std::move(t));
    for (std::size_t i = 0; i < fig1.size(); ++i) write_figure(dir, "figure1", i + 1, fig1[i], index);

    // figure2: their duplicates.
    for (std::size_t i = 0; i < fig1.size(); ++i) {
        const auto u = duplicate_from_sigma(fig1[i], sigma1);
        const auto back = undo_duplicate(u);
        if (!back || *back != fig1[i]) ok = false;
        write_figure(dir, "figure2", i + 1, u, index);
    }

    // figure3: first tableau of shape tau(sigma, sigma), sigma = (7,6,4,3), outside the image.
    const Partition sigma3({7, 6, 4, 3});
    const Partition nu3({10, 8, 2});
    std::optional<DominoTableau> witness;
    for (auto& t : enumerate_domino_tableaux(tau_partitions(sigma3, sigma3), doubled(nu3), {.yamanouchi_only = true}))
        if (!undo_duplicate(t)) {
            witness = std::move(t);
            break;
        }
    if (witness)
        write_figure(dir, "figure3", 1, *witness, index);
    else
        ok = false;

    write_file(dir / "index.txt", index.str());
    out << index.str();
    return ok ? verified : counterexample;
}

void configure_threads(int threads) {
    if (threads <= 0) {
        if (const char* env = std::getenv("HORN_THREADS")) threads = std::atoi(env);
    }
    if (threads > 0) omp_set_num_threads(threads);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Littlewood-Richardson, domino tableau and Horn polytope toolkit", "horn"};
    app.set_config("--config", "", "TOML/INI file with option defaults; flags override it");
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP threads (default: HORN_THREADS, then the runtime default)");

    LrArgs lr;
    auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^nu_{lambda mu}");
    lr_cmd->add_option("lambda", lr.lambda)->required();
    lr_cmd->add_option("mu", lr.mu)->required();
    lr_cmd->add_option("nu", lr.nu)->required();
    lr_cmd->add_option("--method", lr.method)->check(CLI::IsMember({"classical", "domino", "both"}))->capture_default_str();

    EnumerateArgs en;
    auto* en_cmd = app.add_subcommand("enumerate", "List domino tableaux of a shape and weight");
    en_cmd->add_option("shape", en.shape)->required();
    en_cmd->add_option("weight", en.weight)->required();
    en_cmd->add_flag("--yamanouchi", en.yamanouchi, "Only Yamanouchi tableaux");
    en_cmd->add_option("--render", en.render)->check(CLI::IsMember({"ascii", "svg"}));
    en_cmd->add_option("--out", en.out_dir, "Directory for rendered files");

    VerifyArgs ve;
    auto* ve_cmd = app.add_subcommand("verify", "Run an exhaustive verification sweep");
    ve_cmd->add_option("--suite", ve.suite)
        ->check(CLI::IsMember({"prop2", "p1p2", "implication", "fflp", "lpp", "projection", "cl"}))
        ->capture_default_str();
    ve_cmd->add_option("--max-part", ve.max_part)->check(CLI::Range(0, kDefaultMaxPart))->capture_default_str();
    ve_cmd->add_option("--p", ve.p)->check(CLI::Range(0, 4))->capture_default_str();
    ve_cmd->add_option("--budget", ve.budget, "Time budget in seconds (0 = none)")->capture_default_str();
    ve_cmd->add_option("--execution", ve.execution)->check(CLI::IsMember({"serial", "parallel"}))->capture_default_str();
    ve_cmd->add_option("--json", ve.json_path, "Write the structured report here");
    ve_cmd->add_flag("--all", ve.all, "Print every record, not just failures");

    SpectraArgs sp;
    auto* sp_cmd = app.add_subcommand("spectra", "Sample ordered spectra of S + J^-1 S J");
    sp_cmd->add_option("sigma", sp.sigma)->required();
    sp_cmd->add_option("--samples", sp.samples)->capture_default_str();
    sp_cmd->add_option("--seed", sp.seed)->capture_default_str();
    sp_cmd->add_option("--mode", sp.mode)->check(CLI::IsMember({"random", "block", "rotation"}))->capture_default_str();
    sp_cmd->add_option("--tolerance", sp.tolerance, "Hull membership tolerance")->capture_default_str();
    sp_cmd->add_option("--execution", sp.execution)->check(CLI::IsMember({"serial", "parallel"}))->capture_default_str();
    sp_cmd->add_option("--out", sp.out_prefix, "Write <prefix>.tsv and <prefix>.json");

    std::string fig_dir;
    auto* fig_cmd = app.add_subcommand("figures", "Regenerate the tableau figures for sigma = (5,3,2,0) and (7,6,4,3)");
    fig_cmd->add_option("--out", fig_dir)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? verified : usage;
    }

    try {
        configure_threads(threads);
        if (*lr_cmd) return cmd_lr(lr, out);
        if (*en_cmd) return cmd_enumerate(en, out);
        if (*ve_cmd) return cmd_verify(ve, out);
        if (*sp_cmd) return cmd_spectra(sp, out);
        if (*fig_cmd) return cmd_figures(fig_dir, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

}  // namespace horn::cli
