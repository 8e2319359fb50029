// Command-line front end: computes Nash equilibria of the entangled Cournot
// duopoly with quartic costs, sweeps the entanglement parameter, locates the
// equilibrium-count thresholds, and emits CSV/JSON tables ready for plotting.

#include "qcournot/bifurcation.hpp"
#include "qcournot/oracle.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using namespace qcournot;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fmt_exp(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

// One table cell carrying both serializations (CSV uses 0/1 for booleans,
// JSON uses true/false).
struct Value {
    std::string csv;
    std::string json;
};

Value num(double v) {
    std::string s = fmt12(v);
    return {s, s};
}

Value integer(long long v) {
    std::string s = std::to_string(v);
    return {s, s};
}

Value boolean(bool v) {
    return {v ? "1" : "0", v ? "true" : "false"};
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;
};

using ParamList = std::vector<std::pair<std::string, std::string>>;

void emit_csv(const Table& t, std::ostream& os) {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << row[i].csv;
        os << '\n';
    }
}

void emit_json(const ParamList& params, const Table& t, std::ostream& os) {
    os << "{\"params\":{";
    for (std::size_t i = 0; i < params.size(); ++i)
        os << (i ? "," : "") << '"' << params[i].first << "\":" << params[i].second;
    os << "},\"records\":[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << (r ? ",{" : "{");
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            os << (i ? "," : "") << '"' << t.columns[i] << "\":" << t.rows[r][i].json;
        os << '}';
    }
    os << "]}\n";
}

struct Options {
    double a = 3.0;
    double b = 5.0;
    double d = 10.0;
    double gamma = 0.0;
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
    std::string format = "csv";
    std::string out;
    std::string config;
    bool has_gamma = false;
    bool has_from = false;
    bool has_to = false;
    bool has_steps = false;
    bool format_given = false;
};

// Registers the shared parameter/output flags on a subcommand.
void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--a", o.a, "demand/cost location parameter (a > 0)");
    cmd->add_option("--b", o.b, "demand intercept component (b > 0)");
    cmd->add_option("--d", o.d, "cost offset (d > 0)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out, "write output to this file instead of stdout");
    cmd->add_option("--config", o.config,
                    "flat key=value file; flags override its values");
}

std::size_t opt_count(const CLI::App* cmd, const std::string& name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt ? opt->count() : 0;
}

// Applies config-file values to options the command line left untouched.
// Unknown keys are rejected so typos do not pass silently.
void merge_config(CLI::App* cmd, Options& o) {
    if (o.config.empty())
        return;
    std::ifstream in(o.config);
    if (!in)
        throw InvalidParams("cannot read config file: " + o.config);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidParams("config line " + std::to_string(lineno) +
                                " is not key=value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const bool flag_given = opt_count(cmd, "--" + key) > 0;
        auto as_double = [&] {
            try {
                return std::stod(value);
            } catch (...) {
                throw InvalidParams("config value for " + key + " is not a number");
            }
        };
        auto as_int = [&] {
            try {
                return std::stoi(value);
            } catch (...) {
                throw InvalidParams("config value for " + key + " is not an integer");
            }
        };
        if (key == "a") {
            if (!flag_given) o.a = as_double();
        } else if (key == "b") {
            if (!flag_given) o.b = as_double();
        } else if (key == "d") {
            if (!flag_given) o.d = as_double();
        } else if (key == "gamma") {
            if (!flag_given) o.gamma = as_double();
            o.has_gamma = true;
        } else if (key == "from") {
            if (!flag_given) o.from = as_double();
            o.has_from = true;
        } else if (key == "to") {
            if (!flag_given) o.to = as_double();
            o.has_to = true;
        } else if (key == "steps") {
            if (!flag_given) o.steps = as_int();
            o.has_steps = true;
        } else if (key == "format") {
            if (value != "csv" && value != "json")
                throw InvalidParams("config format must be csv or json");
            if (!flag_given) o.format = value;
            o.format_given = true;
        } else if (key == "out") {
            if (!flag_given) o.out = value;
        } else {
            throw InvalidParams("unknown config key: " + key);
        }
    }
}

// Output sink: stdout unless --out was given.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_)
                throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void write_table(const Options& o, const ParamList& params, const Table& t) {
    Sink sink(o.out);
    if (o.format == "json")
        emit_json(params, t, sink.stream());
    else
        emit_csv(t, sink.stream());
}

// key=value summary, or the same fields as a one-row table for csv/json.
void write_summary(const Options& o, bool format_given, const ParamList& params,
                   const Table& t, const std::vector<std::string>& pretty) {
    Sink sink(o.out);
    if (!format_given) {
        for (const std::string& line : pretty)
            sink.stream() << line << '\n';
    } else if (o.format == "json") {
        emit_json(params, t, sink.stream());
    } else {
        emit_csv(t, sink.stream());
    }
}

ParamList base_params(const Options& o) {
    return {{"a", fmt12(o.a)}, {"b", fmt12(o.b)}, {"d", fmt12(o.d)}};
}

int cmd_equilibria(const Options& o) {
    EntangledGame game(ModelParams(o.a, o.b, o.d), o.gamma);
    Table t;
    t.columns = {"gamma", "q1", "q2", "x1", "x2", "u1", "u2",
                 "symmetric", "negative_quantity", "residual"};
    for (const Equilibrium& eq : enumerate_equilibria(game)) {
        t.rows.push_back({num(o.gamma), num(eq.quantities.q1), num(eq.quantities.q2),
                          num(eq.strategies.x1), num(eq.strategies.x2),
                          num(eq.profits.u1), num(eq.profits.u2),
                          boolean(eq.symmetric), boolean(eq.negative_quantity),
                          num(eq.residual)});
    }
    ParamList params = base_params(o);
    params.emplace_back("gamma", fmt12(o.gamma));
    write_table(o, params, t);
    return 0;
}

int cmd_sweep(const Options& o) {
    ModelParams mp(o.a, o.b, o.d);
    Table t;
    t.columns = {"gamma", "branch_id", "q1", "q2", "u1", "u2",
                 "symmetric", "u_pareto", "u_classical_sym"};
    for (const ProfitBranchRow& r : profit_branches(mp, o.from, o.to, o.steps)) {
        t.rows.push_back({num(r.gamma), integer(r.branch_id), num(r.q1), num(r.q2),
                          num(r.u1), num(r.u2), boolean(r.symmetric),
                          num(r.u_pareto), num(r.u_classical_sym)});
    }
    ParamList params = base_params(o);
    params.emplace_back("from", fmt12(o.from));
    params.emplace_back("to", fmt12(o.to));
    params.emplace_back("steps", std::to_string(o.steps));
    write_table(o, params, t);
    return 0;
}

int cmd_thresholds(const Options& o, bool format_given) {
    ModelParams mp(o.a, o.b, o.d);
    Thresholds th = find_thresholds(mp);
    Table t;
    t.columns = {"gamma1", "gamma2", "bracket_width"};
    t.rows.push_back({num(th.gamma1), num(th.gamma2), num(th.bracket_width)});
    write_summary(o, format_given, base_params(o), t,
                  {"gamma1=" + fmt6(th.gamma1), "gamma2=" + fmt6(th.gamma2),
                   "bracket_width=" + fmt_exp(th.bracket_width)});
    return 0;
}

int cmd_pareto(const Options& o, bool format_given) {
    ModelParams mp(o.a, o.b, o.d);
    ParetoOptimum po = pareto_optimum(mp);
    const double s = po.q_star - mp.a;
    const double foc = s * s * s + 2.0 * s + mp.a;
    Table t;
    t.columns = {"q_star", "alpha", "beta", "profit_each", "foc_residual"};
    t.rows.push_back(
        {num(po.q_star), num(po.alpha), num(po.beta), num(po.profit_each), num(foc)});
    write_summary(o, format_given, base_params(o), t,
                  {"q_star=" + fmt6(po.q_star), "alpha=" + fmt6(po.alpha),
                   "beta=" + fmt6(po.beta), "profit_each=" + fmt6(po.profit_each),
                   "foc_residual=" + fmt_exp(foc)});
    return 0;
}

int cmd_brcurves(const Options& o) {
    EntangledGame game(ModelParams(o.a, o.b, o.d), o.gamma);
    Table t;
    t.columns = {"q_j", "q_i", "which_firm"};
    constexpr int kSamples = 1000;
    const double lo = o.a - 3.0;
    const double hi = o.a + 3.0;
    for (int firm = 1; firm <= 2; ++firm) {
        for (int i = 0; i < kSamples; ++i) {
            const double q = lo + (hi - lo) * i / (kSamples - 1);
            t.rows.push_back({num(q), num(br_conjugate(game, q)), integer(firm)});
        }
    }
    ParamList params = base_params(o);
    params.emplace_back("gamma", fmt12(o.gamma));
    write_table(o, params, t);
    return 0;
}

int cmd_verify(const Options& o) {
    ModelParams mp(o.a, o.b, o.d);
    Sink sink(o.out);
    std::ostream& os = sink.stream();
    const double gammas[] = {0.0, 0.1, 0.255, 0.27, 0.285, 0.296, 0.3, 0.6, 1.0};
    bool all_ok = true;
    for (double g : gammas) {
        EntangledGame game(mp, g);
        const auto enumerated = enumerate_equilibria(game);
        const auto scanned = grid_equilibria(game, default_grid(mp));
        bool ok = enumerated.size() == scanned.size();
        double max_delta = 0.0;
        if (ok) {
            for (std::size_t i = 0; i < scanned.size(); ++i) {
                max_delta = std::max(
                    {max_delta, std::abs(scanned[i].q1 - enumerated[i].quantities.q1),
                     std::abs(scanned[i].q2 - enumerated[i].quantities.q2)});
            }
            ok = max_delta < 1e-5;
        }
        os << "gamma=" << fmt6(g) << " enumerated=" << enumerated.size()
           << " oracle=" << scanned.size() << " max_delta=" << fmt_exp(max_delta)
           << (ok ? " PASS" : " FAIL") << '\n';
        all_ok = all_ok && ok;
    }
    os << "verify: " << (all_ok ? "PASS" : "FAIL") << '\n';
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nash equilibria of the entangled Cournot duopoly with quartic costs"};
    app.require_subcommand(1);

    Options o;
    CLI::App* eq = app.add_subcommand("equilibria", "all Nash equilibria at one gamma");
    add_common(eq, o);
    eq->add_option("--gamma", o.gamma, "entanglement measure (>= 0)");

    CLI::App* sw = app.add_subcommand("sweep", "profit branches over a gamma range");
    add_common(sw, o);
    sw->add_option("--from", o.from, "start of the gamma range");
    sw->add_option("--to", o.to, "end of the gamma range");
    sw->add_option("--steps", o.steps, "number of grid points (>= 2)");

    CLI::App* th = app.add_subcommand("thresholds",
                                      "bisect the equilibrium-count change points");
    add_common(th, o);

    CLI::App* pa = app.add_subcommand("pareto", "joint-profit optimum q*");
    add_common(pa, o);

    CLI::App* br = app.add_subcommand("brcurves",
                                      "sample both best-response loci at one gamma");
    add_common(br, o);
    br->add_option("--gamma", o.gamma, "entanglement measure (>= 0)");

    CLI::App* ve = app.add_subcommand("verify",
                                      "cross-check the solver against the grid oracle");
    add_common(ve, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();

    try {
        merge_config(sub, o);
        o.has_gamma = o.has_gamma || opt_count(sub, "--gamma") > 0;
        o.has_from = o.has_from || opt_count(sub, "--from") > 0;
        o.has_to = o.has_to || opt_count(sub, "--to") > 0;
        o.has_steps = o.has_steps || opt_count(sub, "--steps") > 0;
        o.format_given = o.format_given || opt_count(sub, "--format") > 0;

        if ((eq->parsed() || br->parsed()) && !o.has_gamma)
            throw InvalidParams("--gamma is required (flag or config)");
        if (sw->parsed() && !(o.has_from && o.has_to && o.has_steps))
            throw InvalidParams("--from, --to and --steps are required (flag or config)");

        if (eq->parsed())
            return cmd_equilibria(o);
        if (sw->parsed())
            return cmd_sweep(o);
        if (th->parsed())
            return cmd_thresholds(o, o.format_given);
        if (pa->parsed())
            return cmd_pareto(o, o.format_given);
        if (br->parsed())
            return cmd_brcurves(o);
        if (ve->parsed())
            return cmd_verify(o);
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidGrid& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const PatternNotFound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
