#include "cli.hpp"

#include "besselquad/bessel.hpp"
#include "besselquad/errors.hpp"
#include "besselquad/identity_suite.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace besselquad::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    double rtol = 1e-12;
    double atol = 1e-300;
    std::size_t nmax = 0; // 0: not given on the command line
    std::uint64_t seed = 20240611;
    std::string format = "json";
};

struct Request {
    std::string fn = "J";
    std::string repr = "auto";
    std::string mu = "0";
    std::string z;
    std::string k = "0";
    long n = 0;
};

const std::map<std::string, Function> function_names{
    {"J", Function::J}, {"I", Function::I}, {"Jderiv", Function::JDeriv}, {"kappa", Function::Kappa}};
const std::map<std::string, Representation> representation_names{{"cos_kernel", Representation::CosKernel},
                                                                  {"sin_kernel", Representation::SinKernel},
                                                                  {"kummer", Representation::Kummer},
                                                                  {"auto", Representation::Auto}};

cplx complex_arg(const std::string& text, const char* what) {
    const auto v = parse_complex(text);
    if (!v)
        throw UsageError(std::string("invalid complex number for ") + what + ": '" + text + "'");
    return *v;
}

QuadratureSpec make_spec(const Globals& g, const char* env_nmax) {
    QuadratureSpec spec;
    spec.rtol = g.rtol;
    spec.atol = g.atol;
    if (g.nmax != 0) {
        spec.n_max = g.nmax;
    } else if (env_nmax != nullptr && *env_nmax != '\0') {
        char* end = nullptr;
        errno = 0;
        const unsigned long long v = std::strtoull(env_nmax, &end, 10);
        if (errno != 0 || *end != '\0' || v == 0)
            throw UsageError(std::string("BESSELQUAD_NMAX is not a positive integer: '") + env_nmax + "'");
        spec.n_max = static_cast<std::size_t>(v);
    }
    spec.n_start = std::min(spec.n_start, spec.n_max);
    try {
        spec.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return spec;
}

OrderArg make_order_arg(const Request& r, cplx mu, cplx z) {
    OrderArg a{mu, z, complex_arg(r.k, "--k"), r.n};
    if (function_names.at(r.fn) == Function::JDeriv && !(a.k.real() > -1.0))
        throw UsageError("Jderiv needs Re k > -1");
    return a;
}

std::string json_string(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out + "\"";
}

std::vector<std::string> warning_names(const EvalOutput& o) {
    std::vector<std::string> w;
    for (Warning x : o.warnings)
        w.emplace_back(to_string(x));
    return w;
}

std::string json_list(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? "," : "") + json_string(items[i]);
    return out + "]";
}

std::string csv_list(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? ";" : "") + items[i];
    return out;
}

std::string csv_number(double x) { return std::isfinite(x) ? format_number(x) : "nan"; }

void report_error(std::ostream& err, const Error& e) { err << "error: " << e.kind() << ": " << e.what() << '\n'; }

// ---------------------------------------------------------------------------

int cmd_eval(const Globals& g, const Request& r, std::ostream& out, std::ostream& err, const char* env_nmax) {
    const QuadratureSpec spec = make_spec(g, env_nmax);
    const OrderArg arg = make_order_arg(r, complex_arg(r.mu, "--mu"), complex_arg(r.z, "--z"));
    EvalOutput o;
    try {
        o = evaluate(function_names.at(r.fn), representation_names.at(r.repr), arg, spec);
    } catch (const Error& e) {
        report_error(err, e);
        return exit_failure;
    }
    const auto w = warning_names(o);
    if (g.format == "csv") {
        out << "value_re,value_im,err_est,nodes,warnings\n"
            << csv_number(o.value.real()) << ',' << csv_number(o.value.imag()) << ',' << csv_number(o.err_est) << ','
            << o.nodes_used << ',' << csv_list(w) << '\n';
    } else {
        out << "{\"value_re\":" << format_number(o.value.real()) << ",\"value_im\":" << format_number(o.value.imag())
            << ",\"err_est\":" << format_number(o.err_est) << ",\"nodes\":" << o.nodes_used
            << ",\"warnings\":" << json_list(w) << "}\n";
    }
    return w.empty() ? exit_ok : exit_warnings;
}

struct Row {
    cplx mu, z;
    EvalOutput out;
    std::string error; // error kind, empty on success
};

int cmd_table(const Globals& g, const Request& r, const std::vector<std::string>& mu_grid,
              const std::vector<std::string>& z_grid, unsigned threads, std::ostream& out, const char* env_nmax) {
    const QuadratureSpec spec = make_spec(g, env_nmax);
    const Function f = function_names.at(r.fn);
    const Representation rep = representation_names.at(r.repr);
    std::vector<Row> rows;
    for (const auto& m : mu_grid)
        for (const auto& z : z_grid)
            rows.push_back({complex_arg(m, "--mu-grid"), complex_arg(z, "--z-grid"), {}, {}});
    std::vector<OrderArg> args;
    for (const Row& row : rows)
        args.push_back(make_order_arg(r, row.mu, row.z));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            try {
                rows[i].out = evaluate(f, rep, args[i], spec);
            } catch (const Error& e) {
                rows[i].error = e.kind();
            }
        }
    };
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(rows.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    bool any_error = false, any_warning = false;
    const bool csv = g.format == "csv";
    if (csv)
        out << "mu_re,mu_im,z_re,z_im,value_re,value_im,err_est,nodes,warnings\n";
    for (const Row& row : rows) {
        std::vector<std::string> w = warning_names(row.out);
        const bool failed = !row.error.empty();
        if (failed)
            w.push_back("error:" + row.error);
        any_error = any_error || failed;
        any_warning = any_warning || !w.empty();
        const double nan = std::nan("");
        const cplx v = failed ? cplx{nan, nan} : row.out.value;
        const double e = failed ? nan : row.out.err_est;
        if (csv) {
            out << format_number(row.mu.real()) << ',' << format_number(row.mu.imag()) << ','
                << format_number(row.z.real()) << ',' << format_number(row.z.imag()) << ',' << csv_number(v.real())
                << ',' << csv_number(v.imag()) << ',' << csv_number(e) << ',' << row.out.nodes_used << ','
                << csv_list(w) << '\n';
        } else {
            out << "{\"mu_re\":" << format_number(row.mu.real()) << ",\"mu_im\":" << format_number(row.mu.imag())
                << ",\"z_re\":" << format_number(row.z.real()) << ",\"z_im\":" << format_number(row.z.imag())
                << ",\"value_re\":" << format_number(v.real()) << ",\"value_im\":" << format_number(v.imag())
                << ",\"err_est\":" << format_number(e) << ",\"nodes\":" << row.out.nodes_used
                << ",\"warnings\":" << json_list(w) << "}\n";
        }
    }
    if (any_error)
        return exit_failure;
    return any_warning ? exit_warnings : exit_ok;
}

int cmd_selftest(const Globals& g, const std::vector<std::string>& only, bool verbose, std::ostream& out,
                 std::ostream& err) {
    SuiteConfig cfg;
    cfg.seed = g.seed;
    for (const auto& id : only) {
        const auto& reg = default_registry();
        if (std::none_of(reg.begin(), reg.end(), [&](const Identity& x) { return x.id == id; }))
            throw UsageError("unknown identity '" + id + "'");
        cfg.only.push_back(id);
    }
    const std::vector<IdentityReport> reports = run_identity_suite(cfg);
    const std::size_t passed =
        static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.pass; }));
    const bool all = passed == reports.size();

    for (const auto& r : reports) {
        if (!verbose && r.pass)
            continue;
        char line[256];
        std::snprintf(line, sizeof line, "%s  %-28s max_rel_err=%.3e max_abs_err=%.3e samples=%zu tol=%.0e",
                      r.pass ? "PASS" : "FAIL", r.identity_id.c_str(), r.max_rel_err, r.max_abs_err, r.samples,
                      r.tolerance);
        err << line;
        if (!r.detail.empty())
            err << "  (" << r.detail << ')';
        err << '\n';
    }
    err << "selftest: " << passed << '/' << reports.size() << " identities passed (seed " << g.seed << ")\n";

    if (g.format == "csv") {
        out << "identity_id,pass,max_rel_err,max_abs_err,samples,tolerance\n";
        for (const auto& r : reports)
            out << r.identity_id << ',' << (r.pass ? "true" : "false") << ',' << csv_number(r.max_rel_err) << ','
                << csv_number(r.max_abs_err) << ',' << r.samples << ',' << csv_number(r.tolerance) << '\n';
    } else {
        out << "{\"seed\":" << g.seed << ",\"pass\":" << (all ? "true" : "false") << ",\"identities\":[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            out << (i ? "," : "") << "{\"identity_id\":" << json_string(r.identity_id)
                << ",\"pass\":" << (r.pass ? "true" : "false") << ",\"max_rel_err\":" << format_number(r.max_rel_err)
                << ",\"max_abs_err\":" << format_number(r.max_abs_err) << ",\"samples\":" << r.samples
                << ",\"tolerance\":" << format_number(r.tolerance) << ",\"detail\":" << json_string(r.detail) << '}';
        }
        out << "]}\n";
    }
    return all ? exit_ok : exit_failure;
}

int cmd_converge(const Globals& g, const Request& r, const std::vector<std::size_t>& n_list, std::ostream& out,
                 std::ostream& err) {
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] < 8 || !std::has_single_bit(n_list[i]))
            throw UsageError("--n-list entries must be powers of two, at least 8");
        if (i > 0 && n_list[i] <= n_list[i - 1])
            throw UsageError("--n-list must be ascending");
    }
    const OrderArg arg = make_order_arg(r, complex_arg(r.mu, "--mu"), complex_arg(r.z, "--z"));
    const bool csv = g.format == "csv";
    if (csv)
        out << "n,value_re,value_im,delta\n";
    for (std::size_t n : n_list) {
        EvalOutput o;
        try {
            o = evaluate_fixed_nodes(function_names.at(r.fn), representation_names.at(r.repr), arg, n);
        } catch (const Error& e) {
            report_error(err, e);
            return exit_failure;
        }
        // delta is the change against the N/2-node grid; N = 8 has none.
        const EvalOutput half = n >= 16 ? evaluate_fixed_nodes(function_names.at(r.fn),
                                                               representation_names.at(r.repr), arg, n / 2)
                                        : o;
        const double delta = n >= 16 ? std::abs(o.value - half.value) : std::nan("");
        if (csv)
            out << n << ',' << csv_number(o.value.real()) << ',' << csv_number(o.value.imag()) << ','
                << csv_number(delta) << '\n';
        else
            out << "{\"n\":" << n << ",\"value_re\":" << format_number(o.value.real())
                << ",\"value_im\":" << format_number(o.value.imag()) << ",\"delta\":" << format_number(delta)
                << "}\n";
    }
    return exit_ok;
}

void add_request_options(CLI::App* sub, Request& r, bool with_point) {
    sub->add_option("--fn", r.fn, "Function: J, I, Jderiv or kappa")
        ->check(CLI::IsMember({"J", "I", "Jderiv", "kappa"}));
    sub->add_option("--repr", r.repr, "Representation: cos_kernel, sin_kernel, kummer or auto")
        ->check(CLI::IsMember({"cos_kernel", "sin_kernel", "kummer", "auto"}));
    sub->add_option("--k", r.k, "Derivative order (Jderiv), complex with Re k > -1");
    sub->add_option("--n", r.n, "Order shift for J, Fourier index for kappa");
    if (with_point) {
        sub->add_option("--mu", r.mu, "Order, e.g. 1.5 or -0.5+0.3i");
        sub->add_option("--z", r.z, "Argument, e.g. 2 or 2+1i")->required();
    }
}

} // namespace

std::optional<cplx> parse_complex(std::string_view text) {
    const std::string s(text);
    if (s.empty())
        return std::nullopt;
    auto imag_unit = [](const std::string& rest, std::size_t pos, double& out) {
        // rest[pos..] is "[+-]" "i" or "[+-]<number>i"
        const std::string tail = rest.substr(pos);
        if (tail == "i" || tail == "+i") {
            out = 1.0;
            return true;
        }
        if (tail == "-i") {
            out = -1.0;
            return true;
        }
        if (tail.size() < 2 || tail.back() != 'i')
            return false;
        const std::string num = tail.substr(0, tail.size() - 1);
        char* end = nullptr;
        out = std::strtod(num.c_str(), &end);
        return end == num.c_str() + num.size() && std::isfinite(out);
    };
    if (s.find_first_of("nNfFxX") != std::string::npos)
        return std::nullopt; // inf, nan and hex floats are not accepted
    double im = 0.0;
    if (s.back() == 'i') {
        char* end = nullptr;
        const double re = std::strtod(s.c_str(), &end);
        const std::size_t used = static_cast<std::size_t>(end - s.c_str());
        if (used == 0 || used == s.size() - 1) {
            // pure imaginary: "i", "-i", "2.5i"
            if (!imag_unit(s, 0, im))
                return std::nullopt;
            return cplx{0.0, im};
        }
        if (s[used] != '+' && s[used] != '-')
            return std::nullopt;
        if (!imag_unit(s, used, im))
            return std::nullopt;
        return cplx{re, im};
    }
    char* end = nullptr;
    const double re = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(re))
        return std::nullopt;
    return cplx{re, 0.0};
}

std::string format_number(double x) {
    if (!std::isfinite(x))
        return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const char* env_nmax) {
    CLI::App app{"Bessel functions of complex order and argument by periodic quadrature", "besselquad"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--rtol", g.rtol, "Relative quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--atol", g.atol, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--nmax", g.nmax, "Node cap, power of two (overrides BESSELQUAD_NMAX)");
    app.add_option("--seed", g.seed, "Random seed for selftest");
    app.add_option("--format", g.format, "Output format: json or csv")->check(CLI::IsMember({"json", "csv"}));

    Request req;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate one function value");
    add_request_options(eval, req, true);

    CLI::App* table = app.add_subcommand("table", "Evaluate on a grid, mu outer and z inner");
    add_request_options(table, req, false);
    std::vector<std::string> mu_grid, z_grid;
    unsigned threads = 1;
    table->add_option("--mu-grid", mu_grid, "Comma-separated orders")->required()->delimiter(',');
    table->add_option("--z-grid", z_grid, "Comma-separated arguments")->required()->delimiter(',');
    table->add_option("--threads", threads, "Worker threads, 0 for all cores");

    CLI::App* selftest = app.add_subcommand("selftest", "Run the identity suite");
    std::vector<std::string> only;
    bool verbose = false;
    selftest->add_option("--only", only, "Run only these identities (repeatable)")->delimiter(',');
    selftest->add_flag("--verbose,-v", verbose, "List every identity on stderr");

    CLI::App* converge = app.add_subcommand("converge", "Fixed-grid values under node doubling");
    add_request_options(converge, req, true);
    std::vector<std::size_t> n_list{16, 32, 64, 128, 256};
    converge->add_option("--n-list", n_list, "Ascending powers of two")->delimiter(',');

    for (CLI::App* sub : {eval, table, selftest, converge})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (eval->parsed())
            return cmd_eval(g, req, out, err, env_nmax);
        if (table->parsed())
            return cmd_table(g, req, mu_grid, z_grid, threads, out, env_nmax);
        if (selftest->parsed())
            return cmd_selftest(g, only, verbose, out, err);
        return cmd_converge(g, req, n_list, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        report_error(err, e);
        return exit_failure;
    }
}

} // namespace besselquad::cli
