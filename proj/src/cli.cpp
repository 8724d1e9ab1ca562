#include "besselhit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <variant>

#include "besselhit/errors.hpp"
#include "besselhit/hitting_law.hpp"
#include "besselhit/monte_carlo.hpp"
#include "besselhit/verification.hpp"

namespace besselhit::cli {

namespace {

using Value = std::variant<double, std::int64_t, std::string, bool>;

struct Field {
    std::string key;
    Value value;
};

using Row = std::vector<Field>;

struct Table {
    std::vector<Row> rows;
    // Per-table results; CSV repeats them on every row, JSON nests them.
    Row summary;
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_cell(const Value& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_double(x);
            } else if constexpr (std::is_same_v<T, bool>) {
                return x ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::string>) {
                return x;
            } else {
                return std::to_string(x);
            }
        },
        v);
}

nlohmann::ordered_json json_value(const Value& v) {
    return std::visit([](const auto& x) { return nlohmann::ordered_json(x); }, v);
}

nlohmann::ordered_json json_object(const Row& row) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& f : row) {
        obj[f.key] = json_value(f.value);
    }
    return obj;
}

// Columns are the union of row keys in first-seen order; a row without a key
// leaves its cell empty.
void write_csv(const Table& table, std::ostream& os) {
    if (table.rows.empty()) {
        return;
    }
    std::vector<std::string> columns;
    for (const Row& row : table.rows) {
        for (const Field& f : row) {
            if (std::find(columns.begin(), columns.end(), f.key) == columns.end()) {
                columns.push_back(f.key);
            }
        }
    }
    for (const Field& f : table.summary) {
        columns.push_back(f.key);
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
        os << (i ? "," : "") << columns[i];
    }
    os << '\n';
    for (const Row& row : table.rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            os << (i ? "," : "");
            auto has_key = [&](const Field& f) { return f.key == columns[i]; };
            if (auto it = std::find_if(row.begin(), row.end(), has_key); it != row.end()) {
                os << csv_cell(it->value);
            } else if (auto jt = std::find_if(table.summary.begin(), table.summary.end(), has_key);
                       jt != table.summary.end()) {
                os << csv_cell(jt->value);
            }
        }
        os << '\n';
    }
}

void write_json(const Table& table, std::ostream& os) {
    nlohmann::ordered_json doc;
    if (table.rows.size() == 1 && table.summary.empty()) {
        doc = json_object(table.rows.front());
    } else {
        doc["rows"] = nlohmann::ordered_json::array();
        for (const Row& row : table.rows) {
            doc["rows"].push_back(json_object(row));
        }
        if (!table.summary.empty()) {
            doc["summary"] = json_object(table.summary);
        }
    }
    os << doc.dump(2) << '\n';
}

struct Options {
    std::optional<double> nu;
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> t;
    std::string t_grid;
    std::optional<double> p;
    std::optional<double> lambda;
    std::string method = "inversion";
    std::string estimator = "both";
    std::string precision = "extended";
    std::optional<int> ladder_low;
    std::optional<int> ladder_high;
    std::uint64_t seed = 42;
    std::int64_t paths = 400000;
    double step = 0.01;
    std::optional<double> horizon;
    int streams = 64;
    int threads = 0;
    bool bridge = true;
    std::string format = "csv";
    std::string output;
    std::string config;
};

double require(const std::optional<double>& v, const char* flag) {
    if (!v) {
        throw ParameterError(std::string("missing required flag --") + flag);
    }
    return *v;
}

BesselParams law_params(const Options& o) {
    BesselParams params{require(o.nu, "nu"), require(o.a, "a"), require(o.b, "b")};
    params.require_downward();
    return params;
}

double parse_number(const std::string& s, const char* what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw ParameterError(std::string("--t-grid: bad ") + what + " '" + s + "'");
    }
    return v;
}

// lo:hi:n, lo:hi:n-log (log spacing, the default) or lo:hi:n-lin.
std::vector<double> parse_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, ':');) {
        parts.push_back(part);
    }
    if (parts.size() != 3) {
        throw ParameterError("--t-grid must look like lo:hi:n-log");
    }
    const double lo = parse_number(parts[0], "lower end");
    const double hi = parse_number(parts[1], "upper end");
    std::string count = parts[2];
    bool linear = false;
    if (count.ends_with("-log")) {
        count.resize(count.size() - 4);
    } else if (count.ends_with("-lin")) {
        count.resize(count.size() - 4);
        linear = true;
    }
    const double n = parse_number(count, "point count");
    if (n < 2 || n != std::floor(n) || n > 1e6) {
        throw ParameterError("--t-grid: point count must be an integer >= 2");
    }
    if (!linear) {
        return log_grid(lo, hi, static_cast<int>(n));
    }
    if (!(hi > lo)) {
        throw ParameterError("--t-grid: needs lo < hi");
    }
    std::vector<double> out;
    for (int i = 0; i < static_cast<int>(n); ++i) {
        out.push_back(lo + (hi - lo) * i / (n - 1.0));
    }
    out.back() = hi;
    return out;
}

std::vector<double> times(const Options& o, std::optional<std::vector<double>> fallback = {}) {
    if (o.t && !o.t_grid.empty()) {
        throw ParameterError("give either --t or --t-grid, not both");
    }
    if (o.t) {
        return {*o.t};
    }
    if (!o.t_grid.empty()) {
        return parse_grid(o.t_grid);
    }
    if (fallback) {
        return *fallback;
    }
    throw ParameterError("missing required flag --t (or --t-grid)");
}

InversionConfig inversion_config(const Options& o) {
    InversionConfig cfg;
    if (o.precision == "double") {
        cfg.precision = Precision::Double;
        cfg.ladder = {o.ladder_low.value_or(12), o.ladder_high.value_or(14)};
        cfg.order = std::max(cfg.ladder[0], cfg.ladder[1]);
    } else {
        cfg = InversionConfig::extended(o.ladder_low.value_or(24), o.ladder_high.value_or(28));
    }
    cfg.validate();
    return cfg;
}

void echo_inversion(Row& row, const InversionConfig& cfg) {
    row.push_back({"precision", std::string(cfg.precision == Precision::Double ? "double"
                                                                                : "extended")});
    row.push_back({"ladder-low", std::int64_t{cfg.ladder[0]}});
    row.push_back({"ladder-high", std::int64_t{cfg.ladder[1]}});
}

McConfig mc_config(const Options& o) {
    McConfig cfg;
    cfg.paths = o.paths;
    cfg.step = o.step;
    cfg.horizon = o.horizon;
    cfg.seed = o.seed;
    cfg.streams = o.streams;
    cfg.threads = o.threads;
    cfg.bridge_correction = o.bridge;
    cfg.validate();
    return cfg;
}

void echo_mc(Row& row, const McConfig& cfg, std::optional<double> horizon) {
    row.push_back({"seed", static_cast<std::int64_t>(cfg.seed)});
    row.push_back({"paths", cfg.paths});
    row.push_back({"step", cfg.step});
    if (horizon) {
        row.push_back({"horizon", *horizon});
    }
    row.push_back({"streams", std::int64_t{cfg.streams}});
    row.push_back({"threads", std::int64_t{cfg.threads}});
    row.push_back({"bridge", cfg.bridge_correction});
}

Row law_row(const std::string& command, const BesselParams& params, double t) {
    return {{"command", command}, {"nu", params.nu}, {"a", params.a}, {"b", params.b}, {"t", t}};
}

// Effective horizon of the indicator estimator, echoed so rows replay exactly.
std::optional<double> indicator_horizon(const BesselParams& params, double t,
                                        const McConfig& cfg) {
    if (params.nu <= 0.0) {
        return std::nullopt;
    }
    return cfg.horizon.value_or(kDefaultHorizonFactor * t);
}

class Warnings {
public:
    explicit Warnings(std::ostream& err) : err_(err) {}
    void note(const std::string& w) {
        if (!w.empty() && seen_.insert(w).second) {
            err_ << "warning: " << w << '\n';
        }
    }

private:
    std::ostream& err_;
    std::set<std::string> seen_;
};

Table cmd_tail(const Options& o, Warnings& warn) {
    const BesselParams params = law_params(o);
    Table table;
    for (double t : times(o)) {
        Row row = law_row("tail", params, t);
        row.push_back({"method", o.method});
        TailEstimate e;
        std::vector<Field> extra;
        if (o.method == "inversion") {
            const InversionConfig cfg = inversion_config(o);
            echo_inversion(row, cfg);
            e = tail_inversion(params, t, cfg);
        } else if (o.method == "closed-form") {
            e = closed_form_tail(params, t);
        } else if (o.method == "asymptotic") {
            e = asymptotic_tail(params, t);
            extra.push_back({"err_quantified", e.err_quantified});
        } else {
            const McConfig cfg = mc_config(o);
            const bool indicator = o.method == "mc-indicator";
            echo_mc(row, cfg, indicator ? indicator_horizon(params, t, cfg) : std::nullopt);
            const McEstimate m = indicator ? tail_mc_indicator(params, t, cfg)
                                           : tail_mc_lemma22(params, t, cfg);
            e.value = m.mean;
            e.err = m.std_error;
            extra.push_back({"variance", m.variance});
            if (indicator) {
                extra.push_back({"horizon_truncation", m.horizon_truncation});
            }
        }
        warn.note(e.warning);
        row.push_back({"value", e.value});
        row.push_back({"err", e.err});
        row.push_back({"survival", survival_probability(params, e.value)});
        row.push_back({"hit_ever", prob_hit_ever(params)});
        row.insert(row.end(), extra.begin(), extra.end());
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table cmd_density_or_cdf(const Options& o, const std::string& command) {
    const BesselParams params = law_params(o);
    const InversionConfig cfg = inversion_config(o);
    Table table;
    for (double t : times(o)) {
        Row row = law_row(command, params, t);
        echo_inversion(row, cfg);
        const InversionResult r =
            command == "density" ? density(params, t, cfg) : cdf_inversion(params, t, cfg);
        row.push_back({"value", r.value});
        row.push_back({"err", r.err});
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table cmd_laplace(const Options& o) {
    const BesselParams params = law_params(o);
    const double lambda = require(o.lambda, "lambda");
    Row row{{"command", std::string("laplace")},
            {"nu", params.nu},
            {"a", params.a},
            {"b", params.b},
            {"lambda", lambda}};
    row.push_back(
        {"value", static_cast<double>(laplace_transform(params, Extended(lambda)))});
    return {{row}, {}};
}

Table cmd_moment(const Options& o) {
    const double nu = require(o.nu, "nu");
    const double a = require(o.a, "a");
    const double p = require(o.p, "p");
    const BesselParams params{nu, a, a};
    params.validate();
    Table table;
    for (double t : times(o)) {
        const SeriesEval s = neg_moment(params, p, t);
        const MomentBounds bounds = neg_moment_bounds(params, p, t);
        Row row{{"command", std::string("moment")}, {"nu", nu}, {"a", a}, {"p", p}, {"t", t}};
        row.push_back({"value", s.value});
        row.push_back({"terms_used", std::int64_t{s.terms_used}});
        row.push_back({"trunc_bound", s.trunc_bound});
        row.push_back({"lower", bounds.lower});
        // The upper bound's constant is only valid for t >= 1.
        row.push_back({"upper", t >= 1.0 ? bounds.upper : NAN});
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table cmd_simulate(const Options& o) {
    const BesselParams params = law_params(o);
    const McConfig cfg = mc_config(o);
    std::vector<McEstimator> which;
    if (o.estimator == "indicator" || o.estimator == "both") {
        which.push_back(McEstimator::Indicator);
    }
    if (o.estimator == "lemma22" || (o.estimator == "both" && params.nu > 0.0)) {
        which.push_back(McEstimator::Lemma22);
    }
    Table table;
    for (double t : times(o)) {
        for (McEstimator est : which) {
            const bool indicator = est == McEstimator::Indicator;
            Row row = law_row("simulate", params, t);
            row.push_back({"estimator", std::string(to_string(est))});
            // Every row of one t carries the same inputs; lemma22 ignores the horizon.
            echo_mc(row, cfg, indicator_horizon(params, t, cfg));
            const McEstimate m = indicator ? tail_mc_indicator(params, t, cfg)
                                           : tail_mc_lemma22(params, t, cfg);
            row.push_back({"mean", m.mean});
            row.push_back({"std_error", m.std_error});
            row.push_back({"variance", m.variance});
            row.push_back({"horizon_truncation", m.horizon_truncation});
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

Table cmd_asymptote(const Options& o, Warnings& warn) {
    const BesselParams params = law_params(o);
    Table table;
    for (double t : times(o)) {
        const TailEstimate e = asymptotic_tail(params, t);
        warn.note(e.warning);
        Row row = law_row("asymptote", params, t);
        row.push_back({"value", e.value});
        row.push_back({"err", e.err});
        row.push_back({"err_quantified", e.err_quantified});
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table cmd_verify_slope(const Options& o) {
    const BesselParams params = law_params(o);
    const InversionConfig cfg = inversion_config(o);
    const RemainderReport rep = check_remainder_slope(params, times(o, default_slope_grid()), cfg);
    Table table;
    for (const auto& r : rep.rows) {
        Row row = law_row("verify-slope", params, r.t);
        echo_inversion(row, cfg);
        row.push_back({"tail", r.tail});
        row.push_back({"asymptote", r.asymptote});
        row.push_back({"difference", r.difference});
        table.rows.push_back(std::move(row));
    }
    table.summary = {{"slope", rep.fit.slope},
                     {"intercept", rep.fit.intercept},
                     {"r_squared", rep.fit.r_squared},
                     {"threshold", rep.threshold},
                     {"pass", rep.pass}};
    return table;
}

Table cmd_verify_constant(const Options& o) {
    const BesselParams params = law_params(o);
    const InversionConfig cfg = inversion_config(o);
    const ConstantReport rep =
        check_constant(params, times(o, decade_grid(1e2, 1e4, 2)), cfg);
    Table table;
    for (const auto& r : rep.rows) {
        Row row = law_row("verify-constant", params, r.t);
        echo_inversion(row, cfg);
        row.push_back({"tail", r.tail});
        row.push_back({"err", r.err});
        row.push_back({"normalized", r.normalized});
        table.rows.push_back(std::move(row));
    }
    table.summary = {{"target", rep.target},
                     {"rel_deviation", rep.rel_deviation},
                     {"tolerance", kConstantTolerance},
                     {"pass", rep.pass}};
    return table;
}

Table cmd_verify_moment(const Options& o) {
    const double nu = require(o.nu, "nu");
    const double a = require(o.a, "a");
    const double p = require(o.p, "p");
    const std::vector<double> grid = times(o, std::vector<double>{1.0, 10.0, 100.0, 1000.0});
    const SandwichReport rep = check_moment_sandwich(nu, a, p, grid);
    Table table;
    for (const auto& r : rep.rows) {
        table.rows.push_back({{"command", std::string("verify-moment")},
                              {"nu", nu},
                              {"a", a},
                              {"p", p},
                              {"t", r.t},
                              {"lower", r.lower},
                              {"value", r.value},
                              {"upper", r.upper},
                              {"ok", r.ok}});
    }
    table.summary = {{"pass", rep.pass}};
    return table;
}

// Which flag groups each subcommand takes.
enum Group : unsigned {
    kLaw = 1u << 0,       // --nu --a --b
    kIndex = 1u << 1,     // --nu --a (no barrier)
    kTime = 1u << 2,      // --t --t-grid
    kInversion = 1u << 3, // --precision --ladder-low --ladder-high
    kMc = 1u << 4,        // --seed --paths --step --horizon --streams --threads --bridge
    kMethod = 1u << 5,
    kMoment = 1u << 6,    // --p
    kLambda = 1u << 7,
    kEstimator = 1u << 8,
};

struct Command {
    const char* name;
    const char* help;
    unsigned groups;
};

constexpr Command kCommands[] = {
    {"tail", "tail of the hitting time (P(t<tau<inf) for nu>0, P(tau>t) otherwise)",
     kLaw | kTime | kInversion | kMc | kMethod},
    {"density", "density of the hitting time by Laplace inversion", kLaw | kTime | kInversion},
    {"cdf", "P(tau <= t) by Laplace inversion", kLaw | kTime | kInversion},
    {"laplace", "Laplace transform E[exp(-lambda tau)]", kLaw | kLambda},
    {"moment", "negative moment E[R_t^(-2p)] with its two-sided bound", kIndex | kTime | kMoment},
    {"simulate", "Monte Carlo estimators of the tail", kLaw | kTime | kMc | kEstimator},
    {"asymptote", "large-t asymptotic tail", kLaw | kTime},
    {"verify-slope", "log-log slope of |tail - asymptote|", kLaw | kTime | kInversion},
    {"verify-constant", "normalized tail against the limiting constant",
     kLaw | kTime | kInversion},
    {"verify-moment", "negative-moment sandwich sweep", kIndex | kTime | kMoment},
};

void add_options(CLI::App* sub, unsigned groups, Options& o) {
    if (groups & (kLaw | kIndex)) {
        sub->add_option("--nu", o.nu, "Bessel index nu");
        sub->add_option("--a", o.a, "start point a > 0");
    }
    if (groups & kLaw) {
        sub->add_option("--b", o.b, "barrier 0 < b < a");
    }
    if (groups & kTime) {
        sub->add_option("--t", o.t, "time t > 0");
        sub->add_option("--t-grid", o.t_grid, "time grid lo:hi:n-log (or n-lin)");
    }
    if (groups & kMoment) {
        sub->add_option("--p", o.p, "moment order, 0 < p < 1 + nu");
    }
    if (groups & kLambda) {
        sub->add_option("--lambda", o.lambda, "transform argument lambda > 0");
    }
    if (groups & kMethod) {
        sub->add_option("--method", o.method, "tail method")
            ->check(CLI::IsMember(
                {"inversion", "mc-indicator", "mc-lemma22", "asymptotic", "closed-form"}))
            ->capture_default_str();
    }
    if (groups & kEstimator) {
        sub->add_option("--estimator", o.estimator, "Monte Carlo estimator")
            ->check(CLI::IsMember({"indicator", "lemma22", "both"}))
            ->capture_default_str();
    }
    if (groups & kInversion) {
        sub->add_option("--precision", o.precision, "Stehfest arithmetic")
            ->check(CLI::IsMember({"double", "extended"}))
            ->capture_default_str();
        sub->add_option("--ladder-low", o.ladder_low,
                        "lower Stehfest order (default 24 extended, 12 double)");
        sub->add_option("--ladder-high", o.ladder_high,
                        "higher Stehfest order (default 28 extended, 14 double)");
    }
    if (groups & kMc) {
        sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
        sub->add_option("--paths", o.paths, "number of paths")->capture_default_str();
        sub->add_option("--step", o.step, "time step on [0, t]")->capture_default_str();
        sub->add_option("--horizon", o.horizon, "indicator horizon (default 1e6 t)");
        sub->add_option("--streams", o.streams, "work blocks")->capture_default_str();
        sub->add_option("--threads", o.threads, "worker threads, 0 = all cores")
            ->capture_default_str();
        sub->add_option("--bridge", o.bridge, "Brownian-bridge crossing correction")
            ->capture_default_str();
    }
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--output", o.output, "write output to this file instead of stdout");
    sub->add_option("--config", o.config, "JSON file of flag values; flags override it");
}

std::string find_config(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            return args[i + 1];
        }
        if (args[i].starts_with("--config=")) {
            return args[i].substr(9);
        }
    }
    return {};
}

// Flag arguments equivalent to the JSON config file.
std::vector<std::string> config_args(const std::string& path, const CLI::App* sub) {
    std::ifstream in(path);
    if (!in) {
        throw ParameterError("--config: cannot open '" + path + "'");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError("--config: invalid JSON in '" + path + "': " + e.what());
    }
    if (!doc.is_object()) {
        throw ParameterError("--config: top level must be an object");
    }
    std::vector<std::string> out;
    for (const auto& [key, value] : doc.items()) {
        if (key == "config" || sub->get_option_no_throw("--" + key) == nullptr) {
            throw ParameterError("--config: unknown key '" + key + "' for " + sub->get_name());
        }
        std::string text;
        if (value.is_string()) {
            text = value.get<std::string>();
        } else if (value.is_number() || value.is_boolean()) {
            text = value.dump();
        } else {
            throw ParameterError("--config: value of '" + key + "' must be a scalar");
        }
        out.push_back("--" + key);
        out.push_back(text);
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app("Hitting times of Bessel processes", "besselhit");
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    for (const Command& c : kCommands) {
        add_options(app.add_subcommand(c.name, c.help), c.groups, o);
    }

    try {
        std::vector<std::string> argv = args;
        if (!argv.empty()) {
            const std::string cfg_path = find_config(argv);
            const CLI::App* sub = app.get_subcommand_no_throw(argv.front());
            if (!cfg_path.empty() && sub != nullptr) {
                // File values go first so that later command-line flags win.
                const auto extra = config_args(cfg_path, sub);
                argv.insert(argv.begin() + 1, extra.begin(), extra.end());
            }
        }
        std::reverse(argv.begin(), argv.end());
        try {
            app.parse(argv);
        } catch (const CLI::CallForHelp&) {
            out << (app.get_subcommands().empty() ? app.help()
                                                  : app.get_subcommands().front()->help());
            return kExitOk;
        } catch (const CLI::CallForAllHelp&) {
            out << app.help("", CLI::AppFormatMode::All);
            return kExitOk;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }

        const std::string command = app.get_subcommands().front()->get_name();
        Warnings warn(err);
        Table table;
        if (command == "tail") {
            table = cmd_tail(o, warn);
        } else if (command == "density" || command == "cdf") {
            table = cmd_density_or_cdf(o, command);
        } else if (command == "laplace") {
            table = cmd_laplace(o);
        } else if (command == "moment") {
            table = cmd_moment(o);
        } else if (command == "simulate") {
            table = cmd_simulate(o);
        } else if (command == "asymptote") {
            table = cmd_asymptote(o, warn);
        } else if (command == "verify-slope") {
            table = cmd_verify_slope(o);
        } else if (command == "verify-constant") {
            table = cmd_verify_constant(o);
        } else {
            table = cmd_verify_moment(o);
        }

        std::ofstream file;
        std::ostream* sink = &out;
        if (!o.output.empty()) {
            file.open(o.output);
            if (!file) {
                throw ParameterError("--output: cannot open '" + o.output + "'");
            }
            sink = &file;
        }
        if (o.format == "json") {
            write_json(table, *sink);
        } else {
            write_csv(table, *sink);
        }
        return kExitOk;
    } catch (const InstabilityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInstability;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {  // ParameterError
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace besselhit::cli
