#include "cocirc/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cocirc/certifier.hpp"
#include "cocirc/inequalities.hpp"
#include "cocirc/minimizer.hpp"
#include "cocirc/report.hpp"
#include "cocirc/scanner.hpp"

namespace cocirc::cli {

namespace {

struct RunConfig {
    double alpha = 1.0;
    std::string masses;
    double tolerance = 1e-11;
    int max_iterations = 10'000;
    std::string family;
    std::size_t n_total = 0;
    std::size_t k = 0;
    double value = 0.0;
    std::string values;
    int samples = 1000;
    std::uint64_t seed = 0;
    int max_vertices = 12;
    std::string alphas = "0.25,0.5,1,1.5,2,3";
    std::string output_path;
    std::string format = "json";
    std::string plot_path;
};

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw InvalidArgument(std::string("malformed ") + what + " entry '" + item + "'");
        out.push_back(x);
    }
    if (out.empty()) throw InvalidArgument(std::string("empty ") + what + " list");
    return out;
}

MinimizerOptions minimizer_options(const RunConfig& cfg) {
    MinimizerOptions o;
    o.tolerance = cfg.tolerance;
    o.max_iterations = cfg.max_iterations;
    o.validate();
    return o;
}

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
    if (cfg.output_path.empty()) {
        out << content;
    } else {
        write_atomic(cfg.output_path, content);
    }
}

void maybe_plot(const RunConfig& cfg, const MassVector& m, const AngleConfig& theta, std::ostream& err) {
    if (cfg.plot_path.empty()) return;
    try {
        write_atomic(cfg.plot_path, render_svg(m, theta));
    } catch (const std::exception& e) {
        err << "warning: plot not written: " << e.what() << '\n';
    }
}

Json common_input(const RunConfig& cfg, const MassVector& m) {
    Json in;
    in["masses"] = Json::array();
    for (double x : m.values()) in["masses"].push_back(x);
    in["alpha"] = cfg.alpha;
    in["tolerance"] = cfg.tolerance;
    in["max_iterations"] = cfg.max_iterations;
    return in;
}

int run_minimize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const MassVector m(parse_list(cfg.masses, "mass"));
    const Alpha alpha(cfg.alpha);
    const MinimizerResult r = find_minimizer(m, alpha, minimizer_options(cfg));
    emit(cfg, cfg.format == "csv" ? to_csv(r, m) : dump(make_document("minimize", common_input(cfg, m), to_json(r))),
         out);
    maybe_plot(cfg, m, r.theta_m, err);
    if (!r.converged) err << "minimizer did not converge (grad_norm " << r.grad_norm << ")\n";
    return r.converged ? kOk : kIncomplete;
}

int run_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const MassVector m(parse_list(cfg.masses, "mass"));
    const Alpha alpha(cfg.alpha);
    const CertificateReport r = certify(m, alpha, minimizer_options(cfg));
    emit(cfg, cfg.format == "csv" ? to_csv(r) : dump(make_document("certify", common_input(cfg, m), to_json(r))),
         out);
    maybe_plot(cfg, m, r.theta_m, err);
    return r.verdict == Verdict::inconclusive ? kIncomplete : kOk;
}

int run_scan(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    FamilySpec spec;
    Json in;
    in["family"] = cfg.family;
    in["n"] = cfg.n_total;
    if (cfg.family == "two-unequal") {
        const auto v = parse_list(cfg.values, "value");
        if (v.size() != 2) throw InvalidArgument("--values needs exactly two masses");
        spec = FamilySpec::two_unequal(cfg.n_total, v[0], v[1]);
        in["values"] = v;
    } else if (cfg.family == "two-groups") {
        spec = FamilySpec::two_groups(cfg.n_total, cfg.k, cfg.value);
        in["k"] = cfg.k;
        in["value"] = cfg.value;
    } else {
        throw InvalidArgument("--family must be two-unequal or two-groups");
    }
    in["alpha"] = cfg.alpha;
    in["tolerance"] = cfg.tolerance;
    in["max_iterations"] = cfg.max_iterations;

    const ScanResult r = scan_family(spec, Alpha(cfg.alpha), minimizer_options(cfg));
    emit(cfg, cfg.format == "csv" ? to_csv(r) : dump(make_document("scan", std::move(in), to_json(r))), out);
    return r.summary.inconclusive > 0 ? kIncomplete : kOk;
}

int run_inequalities(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    InequalityConfig ic;
    ic.samples = cfg.samples;
    ic.seed = cfg.seed;
    ic.max_vertices = cfg.max_vertices;
    ic.alphas = parse_list(cfg.alphas, "alpha");
    ic.validate();

    const InequalityReport r = run_inequalities(ic);
    Json in;
    in["samples"] = ic.samples;
    in["seed"] = ic.seed;
    in["max_vertices"] = ic.max_vertices;
    in["alphas"] = ic.alphas;
    in["sign_margin"] = ic.sign_margin;
    in["residual_tolerance"] = ic.residual_tolerance;
    emit(cfg, cfg.format == "csv" ? to_csv(r) : dump(make_document("inequalities", std::move(in), to_json(r))),
         out);
    if (r.total_violations > 0) err << r.total_violations << " inequality violations\n";
    return r.total_violations == 0 ? kOk : kIncomplete;
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("-o,--out", cfg.output_path, "Report file (default: standard output)");
    cmd->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
}

void add_minimizer_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--alpha", cfg.alpha, "Potential exponent (> 0)")->required();
    cmd->add_option("--tol", cfg.tolerance, "Gradient tolerance");
    cmd->add_option("--max-iter", cfg.max_iterations, "Newton iteration cap");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Co-circular configurations of the power-law n-body potential", "cocirc"};
    app.require_subcommand(1);

    auto* minimize = app.add_subcommand("minimize", "Minimize U over the fundamental domain");
    add_minimizer_options(minimize, cfg);
    minimize->add_option("--masses", cfg.masses, "Comma-separated positive masses")->required();
    minimize->add_option("--plot", cfg.plot_path, "Write an SVG of the configuration");
    add_output_options(minimize, cfg);

    auto* cert = app.add_subcommand("certify", "Run the dihedral quadratic-form test at the minimizer");
    add_minimizer_options(cert, cfg);
    cert->add_option("--masses", cfg.masses, "Comma-separated positive masses")->required();
    cert->add_option("--plot", cfg.plot_path, "Write an SVG of the configuration");
    add_output_options(cert, cfg);

    auto* scan = app.add_subcommand("scan", "Certify every arrangement of a mass family");
    add_minimizer_options(scan, cfg);
    scan->add_option("--family", cfg.family, "two-unequal or two-groups")->required();
    scan->add_option("--n", cfg.n_total, "Total number of bodies")->required();
    scan->add_option("--k", cfg.k, "Size of the second group (two-groups)");
    scan->add_option("--value", cfg.value, "Mass of the second group (two-groups)");
    scan->add_option("--values", cfg.values, "The two special masses m_j,m_n (two-unequal)");
    add_output_options(scan, cfg);

    auto* ineq = app.add_subcommand("inequalities", "Randomized checks of the cyclic-polygon inequalities");
    ineq->add_option("--samples", cfg.samples, "Polygons per vertex count");
    ineq->add_option("--seed", cfg.seed, "Base seed");
    ineq->add_option("--max-vertices", cfg.max_vertices, "Largest even polygon size");
    ineq->add_option("--alphas", cfg.alphas, "Comma-separated exponents");
    add_output_options(ineq, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*minimize) return run_minimize(cfg, out, err);
        if (*cert) return run_certify(cfg, out, err);
        if (*scan) return run_scan(cfg, out, err);
        return run_inequalities(cfg, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace cocirc::cli
