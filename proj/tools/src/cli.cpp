#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "lpheat/constants.hpp"
#include "lpheat/error.hpp"
#include "lpheat/estimates.hpp"
#include "lpheat/grid.hpp"
#include "lpheat/heat_solver.hpp"
#include "lpheat/io.hpp"
#include "lpheat/kernel.hpp"
#include "lpheat/lprime.hpp"
#include "lpheat/serialize.hpp"
#include "suites.hpp"

namespace lpheat::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(item);
    if (out.empty()) throw UsageError("empty list");
    return out;
}

std::vector<double> parse_times(const std::string& text) {
    std::vector<double> ts;
    for (const auto& item : split_list(text)) {
        const double t = parse_real(item);
        if (!(t > 0.0) || std::isinf(t)) throw UsageError("times must be positive and finite, got " + item);
        ts.push_back(t);
    }
    return ts;
}

std::string read_data(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '{') return arg;
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot read data file '" + arg + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json real_json(double v) {
    if (std::isfinite(v)) return v;
    return format_real(v);
}

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_real(row[i]);
        out += '\n';
    }
    return out;
}

std::string json_table(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = real_json(row[i]);
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

struct Output {
    std::string path;
    std::string format;

    std::string resolved_format() const {
        if (!format.empty()) return format;
        if (path.size() >= 5 && path.ends_with(".json")) return "json";
        return "csv";
    }

    void write(const std::string& text, std::ostream& out) const {
        if (path.empty() || path == "-") {
            out << text;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + path + "'");
        file << text;
    }

    void add_to(CLI::App* cmd) {
        cmd->add_option("--out", path, "Output file (default stdout)");
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    }
};

std::string table(const Output& o, const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
    return o.resolved_format() == "json" ? json_table(header, rows) : csv_table(header, rows);
}

// constants ------------------------------------------------------------------

struct ConstantsArgs {
    std::string p, q;
    Output output;
};

int cmd_constants(const ConstantsArgs& a, std::ostream& out) {
    std::vector<std::vector<double>> rows;
    for (const auto& ps : split_list(a.p)) {
        for (const auto& qs : split_list(a.q)) {
            const Exponent p = Exponent::parse(ps);
            const Exponent q = Exponent::parse(qs);
            const auto tr = r_from(p, q);
            const double m = p.is_infinite() ? std::nan("") : M_const(p);
            rows.push_back({p.value(), q.value(), tr.r().value(), alpha(q), delta(q), c_const(p), young_constant(tr),
                            K_const(tr), L_const(tr), m, beta_extremizer(p, q)});
        }
    }
    a.output.write(table(a.output, {"p", "q", "r", "alpha_q", "delta_q", "c_p", "C", "K", "L", "M", "beta"}, rows),
                   out);
    return kPass;
}

// evolve ---------------------------------------------------------------------

struct EvolveArgs {
    std::string data, times, grid;
    Output output;
};

std::string time_column(double t) { return "t=" + format_real(t); }

int cmd_evolve(const EvolveArgs& a, std::ostream& out) {
    const auto f = parse_element(read_data(a.data));
    const auto ts = parse_times(a.times);
    const auto grid = GridSpec::parse(a.grid);
    const QuadratureConfig cfg;
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(grid.count));
    for (int i = 0; i < grid.count; ++i) rows[static_cast<std::size_t>(i)].push_back(grid.node(i));
    std::vector<std::string> header{"x"};
    for (double t : ts) {
        const auto sol = solve_on_grid(f, t, grid, cfg);
        for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(sol.values[i]);
        header.push_back(time_column(t));
    }
    a.output.write(table(a.output, header, rows), out);
    return kPass;
}

// verify / report ------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    std::optional<double> tol;
    std::string data;
    Output output;
};

SuiteOptions suite_options(const VerifyArgs& a) {
    SuiteOptions opts;
    opts.tolerance = a.tol;
    if (a.tol && !(*a.tol >= 0.0)) throw UsageError("--tol must be >= 0");
    if (!a.data.empty()) {
        opts.elements.clear();
        opts.elements.push_back(data_entry(parse_element(read_data(a.data)), opts.cfg));
    }
    return opts;
}

void check_suite(const std::string& suite) {
    const auto& names = suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        throw UsageError("unknown suite '" + suite + "'");
    }
}

int report_failures(const std::vector<EstimateReport>& reports, std::ostream& err) {
    int failed = 0;
    for (const auto& r : reports) {
        if (r.passed) continue;
        ++failed;
        err << "FAIL " << r.name << " measured=" << format_real(r.measured) << " bound=" << format_real(r.bound)
            << '\n';
    }
    return failed == 0 ? kPass : kVerificationFailure;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    check_suite(a.suite);
    const auto reports = run_suite(a.suite, suite_options(a));
    const auto text = a.output.resolved_format() == "json" ? reports_to_json(reports) + "\n" : reports_to_csv(reports);
    a.output.write(text, out);
    return report_failures(reports, err);
}

int cmd_report(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const auto opts = suite_options(a);
    std::vector<std::string> names;
    std::vector<std::vector<double>> rows;
    std::vector<EstimateReport> all;
    for (const auto& name : suite_names()) {
        const auto reports = run_suite(name, opts);
        double passed = 0.0;
        double worst = 0.0;
        for (const auto& r : reports) {
            passed += r.passed ? 1.0 : 0.0;
            worst = std::max(worst, r.ratio);
        }
        names.push_back(name);
        rows.push_back({static_cast<double>(reports.size()), passed, worst});
        all.insert(all.end(), reports.begin(), reports.end());
    }
    std::string text;
    if (a.output.resolved_format() == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < names.size(); ++i) {
            arr.push_back({{"suite", names[i]},
                           {"checks", static_cast<int>(rows[i][0])},
                           {"passed", static_cast<int>(rows[i][1])},
                           {"worst_ratio", real_json(rows[i][2])}});
        }
        text = arr.dump(2) + "\n";
    } else {
        text = "suite,checks,passed,worst_ratio\n";
        for (std::size_t i = 0; i < names.size(); ++i) {
            text += names[i] + "," + format_real(rows[i][0]) + "," + format_real(rows[i][1]) + "," +
                    format_real(rows[i][2]) + "\n";
        }
    }
    a.output.write(text, out);
    return report_failures(all, err);
}

// example-dirac --------------------------------------------------------------

struct DiracArgs {
    double a = 1.0;
    std::string times = "1,0.25,0.0625,0.01";
    std::string grid = "-5:5:101";
    Output output;
};

int cmd_example_dirac(const DiracArgs& args, std::ostream& out) {
    if (!(args.a > 0.0) || std::isinf(args.a)) throw UsageError("--a must be positive and finite");
    const auto f = dirac_difference(-args.a, args.a, Exponent(1.0));
    const auto ts = parse_times(args.times);
    const auto grid = GridSpec::parse(args.grid);
    const QuadratureConfig cfg;
    const auto bounds = variation_lower_bound(args.a, ts, cfg);

    std::vector<std::vector<double>> rows(static_cast<std::size_t>(grid.count));
    for (int i = 0; i < grid.count; ++i) rows[static_cast<std::size_t>(i)].push_back(grid.node(i));
    std::vector<std::string> header{"x"};
    for (double t : ts) {
        const auto sol = solve_on_grid(f, t, grid, cfg);
        for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(sol.values[i]);
        header.push_back(time_column(t));
    }
    std::vector<std::vector<double>> variation;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        variation.push_back({ts[i], args.a / std::sqrt(ts[i]), bounds[i]});
    }
    const std::vector<std::string> variation_header{"t", "a_over_sqrt_t", "variation_lower_bound"};

    std::string text;
    if (args.output.resolved_format() == "json") {
        json doc;
        doc["a"] = args.a;
        doc["solution"] = json::parse(json_table(header, rows));
        doc["variation"] = json::parse(json_table(variation_header, variation));
        text = doc.dump(2) + "\n";
    } else {
        text = csv_table(header, rows) + "\n" + csv_table(variation_header, variation);
    }
    args.output.write(text, out);
    return kPass;
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::kAccuracy:
        case ErrorKind::kApproximation:
        case ErrorKind::kSearch:
        case ErrorKind::kResolution:
            return kNumeric;
        default:
            return kUsage;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heat equation solutions for derivatives of L^p initial data", "lpheat"};
    app.require_subcommand(1);

    ConstantsArgs constants_args;
    auto* constants = app.add_subcommand("constants", "Norm and Young constants as a table");
    constants->add_option("--p", constants_args.p, "Exponent p, or a comma list")->required();
    constants->add_option("--q", constants_args.q, "Exponent q, or a comma list")->required();
    constants_args.output.add_to(constants);

    EvolveArgs evolve_args;
    auto* evolve = app.add_subcommand("evolve", "Evaluate v_t on a grid");
    evolve->add_option("--data", evolve_args.data, "Initial data: JSON file or inline JSON")->required();
    evolve->add_option("--t", evolve_args.times, "Comma list of times")->required();
    evolve->add_option("--grid", evolve_args.grid, "Grid a:b:n")->required();
    evolve_args.output.add_to(evolve);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", verify_args.suite, "all|kernel|young|bounds|decay|variation");
    verify->add_option("--tol", verify_args.tol, "Override every threshold");
    verify->add_option("--data", verify_args.data, "Check this element instead of the built-in catalog");
    verify_args.output.add_to(verify);

    VerifyArgs report_args;
    auto* report = app.add_subcommand("report", "Summary of all suites");
    report->add_option("--tol", report_args.tol, "Override every threshold");
    report->add_option("--data", report_args.data, "Check this element instead of the built-in catalog");
    report_args.output.add_to(report);

    DiracArgs dirac_args;
    auto* dirac = app.add_subcommand("example-dirac", "v_t and the variation bound for delta_{-a} - delta_a");
    dirac->add_option("--a", dirac_args.a, "Half distance between the atoms");
    dirac->add_option("--t", dirac_args.times, "Comma list of times");
    dirac->add_option("--grid", dirac_args.grid, "Grid a:b:n");
    dirac_args.output.add_to(dirac);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*constants) return cmd_constants(constants_args, out);
        if (*evolve) return cmd_evolve(evolve_args, out);
        if (*verify) return cmd_verify(verify_args, out, err);
        if (*report) return cmd_report(report_args, out, err);
        if (*dirac) return cmd_example_dirac(dirac_args, out);
    } catch (const AccuracyError& e) {
        err << "error: " << e.what() << " (residual " << format_real(e.residual()) << ")\n";
        return kNumeric;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace lpheat::cli
