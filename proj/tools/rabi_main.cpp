#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rabi/analysis.hpp"
#include "rabi/io.hpp"
#include "rabi/solver.hpp"

namespace {

using rabi::ApproxMethod;

rabi::kernels::ExecMode exec_mode(const std::string& s)
{
    return s == "serial" ? rabi::kernels::ExecMode::serial
                         : rabi::kernels::ExecMode::parallel;
}

std::vector<ApproxMethod> parse_methods(const std::vector<std::string>& names)
{
    std::vector<ApproxMethod> out;
    for (const std::string& name : names) out.push_back(rabi::method_from_name(name));
    if (out.empty()) throw std::invalid_argument("no methods selected");
    return out;
}

nlohmann::ordered_json report_json(const rabi::ConvergenceReport& r)
{
    nlohmann::ordered_json j;
    j["converged"] = r.converged;
    j["nmax_sequence"] = r.nmax_sequence;
    j["level_drift"] = r.level_drift;
    j["final_nmax"] = r.final_nmax;
    return j;
}

const char* branch_name(rabi::Branch b)
{
    return b == rabi::Branch::minus ? "minus" : "plus";
}

// spectrum ---------------------------------------------------------------

struct SpectrumOpts {
    double omega0 = 1.0, Omega = 1.0, lambda = 0.0;
    std::string method = "exact";
    int levels = 6;
    int nmax = 100;
    std::string format = "csv", out, exec = "parallel";
};

void run_spectrum(const SpectrumOpts& o)
{
    const rabi::ModelParams p{o.omega0, o.Omega, o.lambda};
    const rabi::ConvergencePolicy policy{o.nmax, 3, 1e-8};
    const ApproxMethod method = rabi::method_from_name(o.method);

    std::vector<rabi::LabeledLevel> levels;
    switch (method) {
        case ApproxMethod::rwa: levels = rabi::rwa_levels(p, o.levels); break;
        case ApproxMethod::adiabatic: levels = rabi::adiabatic_levels(p, o.levels); break;
        case ApproxMethod::grwa: levels = rabi::grwa_levels(p, o.levels); break;
        case ApproxMethod::exact:
            levels = rabi::exact_levels(p, o.levels, policy).levels;
            break;
    }

    std::string text;
    if (o.format == "json") {
        nlohmann::ordered_json doc;
        doc["params"] = {{"omega0", o.omega0}, {"Omega", o.Omega},
                         {"lambda", o.lambda}, {"method", o.method},
                         {"levels", o.levels}, {"nmax", o.nmax}};
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < levels.size(); ++k) {
            rows.push_back({{"rank", k},
                            {"branch", branch_name(levels[k].branch)},
                            {"N", levels[k].n},
                            {"energy", levels[k].energy},
                            {"energy_over_omega0", levels[k].energy / o.omega0}});
        }
        doc["levels"] = std::move(rows);
        text = doc.dump(2) + "\n";
    } else {
        text = "rank,branch,N,energy,energy_over_omega0\n";
        for (std::size_t k = 0; k < levels.size(); ++k) {
            text += std::to_string(k);
            text += ',';
            text += branch_name(levels[k].branch);
            text += ',';
            text += std::to_string(levels[k].n);
            text += ',';
            text += rabi::format_double(levels[k].energy);
            text += ',';
            text += rabi::format_double(levels[k].energy / o.omega0);
            text += '\n';
        }
    }
    rabi::write_output(o.out, text);
}

// sweep / compare ----------------------------------------------------------

struct SweepOpts {
    double omega0 = 1.0, Omega = 1.0, gmin = 0.0, gmax = 2.0;
    int steps = 201;
    int levels = 6;
    std::vector<std::string> methods{"exact", "rwa", "adiabatic", "grwa"};
    int nmax = 100;
    std::string format = "csv", out, exec = "parallel";
    std::string reference = "exact";  // compare only
};

rabi::SweepSpec spec_from(const SweepOpts& o)
{
    rabi::SweepSpec spec;
    spec.omega0 = o.omega0;
    spec.Omega = o.Omega;
    spec.gmin = o.gmin;
    spec.gmax = o.gmax;
    spec.steps = o.steps;
    spec.levels = o.levels;
    spec.methods = parse_methods(o.methods);
    spec.policy = rabi::ConvergencePolicy{o.nmax, 3, 1e-8};
    return spec;
}

void run_sweep_cmd(const SweepOpts& o)
{
    const rabi::SweepTable table = rabi::run_sweep(spec_from(o), exec_mode(o.exec));
    rabi::write_output(o.out, o.format == "json" ? rabi::to_json(table)
                                                 : rabi::to_csv(table));
}

void run_compare_cmd(const SweepOpts& o)
{
    const ApproxMethod reference = rabi::method_from_name(o.reference);
    rabi::SweepSpec spec = spec_from(o);
    spec.methods.push_back(reference);  // always sweep the reference too
    const rabi::SweepTable table = rabi::run_sweep(spec, exec_mode(o.exec));
    const std::vector<rabi::ErrorEntry> entries = rabi::error_summary(table, reference);

    std::string text;
    if (o.format == "json") {
        nlohmann::ordered_json doc;
        doc["reference"] = o.reference;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const rabi::ErrorEntry& e : entries) {
            rows.push_back({{"method", rabi::method_name(e.method)},
                            {"rank", e.rank},
                            {"max_abs_error_over_omega0", e.max_abs_error},
                            {"argmax_g", e.argmax_g}});
        }
        doc["entries"] = std::move(rows);
        text = doc.dump(2) + "\n";
    } else {
        text = "method,rank,max_abs_error_over_omega0,argmax_g\n";
        for (const rabi::ErrorEntry& e : entries) {
            text += rabi::method_name(e.method);
            text += ',';
            text += std::to_string(e.rank);
            text += ',';
            text += rabi::format_double(e.max_abs_error);
            text += ',';
            text += rabi::format_double(e.argmax_g);
            text += '\n';
        }
    }
    rabi::write_output(o.out, text);
}

int run_guarded(const std::function<void()>& fn)
{
    try {
        fn();
        return 0;
    } catch (const rabi::SweepConvergenceError& e) {
        nlohmann::ordered_json j = report_json(e.report());
        j["g"] = e.g();
        std::cerr << "error: " << e.what() << "\n" << j.dump(2) << "\n";
        return 3;
    } catch (const rabi::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << report_json(e.report()).dump(2) << "\n";
        return 3;
    } catch (const rabi::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

void add_common(CLI::App* cmd, SweepOpts& o)
{
    cmd->add_option("--omega0", o.omega0, "oscillator frequency");
    cmd->add_option("--Omega", o.Omega, "spin splitting");
    cmd->add_option("--gmin", o.gmin, "lowest lambda/omega0");
    cmd->add_option("--gmax", o.gmax, "highest lambda/omega0");
    cmd->add_option("--steps", o.steps, "grid points including both ends");
    cmd->add_option("--levels", o.levels, "levels per method");
    cmd->add_option("--methods", o.methods, "comma list of exact,rwa,adiabatic,grwa")
        ->delimiter(',');
    cmd->add_option("--nmax", o.nmax, "starting Fock truncation (doubled until converged)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out, "output path (stdout when omitted)");
    cmd->add_option("--exec", o.exec, "kernel execution mode")
        ->check(CLI::IsMember({"serial", "parallel"}));
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Energy spectrum of the single-mode spin-boson (quantum Rabi) model"};
    app.require_subcommand(1);

    SpectrumOpts so;
    CLI::App* spectrum = app.add_subcommand("spectrum", "levels at one coupling");
    spectrum->add_option("--omega0", so.omega0, "oscillator frequency");
    spectrum->add_option("--Omega", so.Omega, "spin splitting");
    spectrum->add_option("--lambda", so.lambda, "coupling strength");
    spectrum->add_option("--method", so.method, "exact, rwa, adiabatic or grwa");
    spectrum->add_option("--levels", so.levels, "number of levels");
    spectrum->add_option("--nmax", so.nmax, "starting Fock truncation (doubled until converged)");
    spectrum->add_option("--format", so.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    spectrum->add_option("--out", so.out, "output path (stdout when omitted)");
    spectrum->add_option("--exec", so.exec, "kernel execution mode")
        ->check(CLI::IsMember({"serial", "parallel"}));

    SweepOpts wo;
    CLI::App* sweep = app.add_subcommand("sweep", "levels across a coupling grid");
    add_common(sweep, wo);

    SweepOpts co;
    CLI::App* compare = app.add_subcommand("compare", "per-method max deviation from a reference");
    add_common(compare, co);
    compare->add_option("--reference", co.reference, "reference method")
        ->check(CLI::IsMember({"exact", "rwa", "adiabatic", "grwa"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (app.got_subcommand(spectrum)) return run_guarded([&] { run_spectrum(so); });
    if (app.got_subcommand(sweep)) return run_guarded([&] { run_sweep_cmd(wo); });
    return run_guarded([&] { run_compare_cmd(co); });
}
