#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fuzzyfrac/cps.hpp"
#include "fuzzyfrac/frac_calc.hpp"
#include "fuzzyfrac/fuzzy_frac.hpp"
#include "fuzzyfrac/gh_arith.hpp"
#include "fuzzyfrac/hybrid_solver.hpp"
#include "fuzzyfrac/json_io.hpp"

namespace fuzzyfrac::cli {

using nlohmann::json;

namespace {

struct Options {
    std::vector<std::string> operands;
    std::size_t grid_n = 100;
    double alpha = -1.0;
    double order = 0.5;
    double gamma1 = 0.0;
    double horizon = 1.0;
    std::size_t steps = 200;
    std::size_t envelope_samples = kDefaultEnvelopeSamples;
    std::vector<double> weights;
    std::vector<double> upper_weights;
    std::string method = "exact";
    std::string op;
    double lambda = 1.0;
    std::string f_spec;
    std::string g_spec;
    std::string u0;
    std::string csv_path;
    std::string output_path;
    bool series = false;
};

// Result of a verb: JSON document and exit code.
struct Reply {
    json doc;
    int code = 0;
};

class UsageError : public Error {
public:
    using Error::Error;
};

std::vector<double> parse_numbers(const std::string& list, const std::string& spec) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError("bad number '" + item + "' in function spec '" + spec + "'");
        }
    }
    return out;
}

std::string read_operand(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty operand");
    const char c = text[first];
    if (c == '{' || c == '[' || c == '-' || c == '+' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
        return text;
    }
    std::ifstream in(text);
    if (!in) throw ParseError("cannot open operand file '" + text + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

FuzzyNumber operand(const Options& o, std::size_t i) {
    if (i >= o.operands.size()) throw UsageError("missing operand " + std::to_string(i + 1));
    return parse_fuzzy(read_operand(o.operands[i]), AlphaGrid::uniform(o.grid_n));
}

json fuzzy_json(const FuzzyNumber& u) { return json::parse(emit_fuzzy(u)); }

json fuzzy_json(const FuzzyNumber& u, GhCase c) {
    json doc = fuzzy_json(u);
    doc["case"] = to_string(c);
    return doc;
}

Reply not_exists(const NotExists& n, const AlphaGrid& grid) {
    json doc{{"error", "not_exists"}, {"reason", to_string(n.reason)}, {"index", n.index}};
    if (n.index < grid.size()) doc["alpha"] = grid[n.index];
    return {doc, 2};
}

json violations_json(const ValidityReport& r) {
    json list = json::array();
    for (const Violation& v : r.violations) {
        list.push_back({{"index", v.index}, {"kind", to_string(v.kind)}, {"magnitude", v.magnitude}});
    }
    return list;
}

std::function<double(double)> of_time(const std::string& spec) {
    const auto fn = catalog_function(spec);
    return [fn](double t) { return fn(t, t); };
}

Reply do_validate(const Options& o) {
    try {
        const FuzzyNumber u = operand(o, 0);
        json doc{{"valid", true}, {"value", fuzzy_json(u)}};
        if (o.alpha >= 0.0) {
            const Interval c = u.alpha_cut(o.alpha);
            doc["cut"] = {c.lo, c.hi};
        }
        return {doc, 0};
    } catch (const ValidationError& e) {
        return {json{{"valid", false}, {"violations", violations_json(e.report())}}, 1};
    }
}

Reply do_arith(const Options& o) {
    const std::string op = o.op.empty() ? "add" : o.op;
    const FuzzyNumber u = operand(o, 0);
    if (op == "neg") return {fuzzy_json(-u), 0};
    if (op == "scale") return {fuzzy_json(scale(u, o.lambda)), 0};
    const FuzzyNumber v = operand(o, 1);
    if (op == "add") return {fuzzy_json(u + v), 0};
    if (op == "sub" || op == "minkowski") return {fuzzy_json(minkowski_sub(u, v)), 0};
    if (op == "mul") return {fuzzy_json(u * v), 0};
    if (op == "distance") return {json{{"distance", distance(u, v)}}, 0};
    throw UsageError("arith: unknown --op '" + op + "' (add, sub, mul, neg, scale, distance)");
}

Reply do_ghdiff(const Options& o) {
    const FuzzyNumber u = operand(o, 0);
    const FuzzyNumber v = operand(o, 1);
    if (o.method == "approx") return {fuzzy_json(approx_gh_diff(u, v)), 0};
    if (o.method == "lsq") return {fuzzy_json(lsq_gh_diff(u, v, o.weights, o.upper_weights)), 0};
    const Outcome<FuzzyResult> r = gh_diff(u, v);
    if (!exists(r)) return not_exists(std::get<NotExists>(r), u.grid());
    const FuzzyResult& w = std::get<FuzzyResult>(r);
    return {fuzzy_json(w.value, w.gh_case), 0};
}

Reply do_gdiv(const Options& o) {
    const FuzzyNumber u = operand(o, 0);
    const FuzzyNumber v = operand(o, 1);
    if (o.method == "approx") return {fuzzy_json(approx_g_div(u, v)), 0};
    if (o.method == "lsq") throw UsageError("gdiv: --method lsq is only defined for ghdiff");
    const Outcome<FuzzyResult> r = g_div(u, v);
    if (!exists(r)) return not_exists(std::get<NotExists>(r), u.grid());
    const FuzzyResult& w = std::get<FuzzyResult>(r);
    return {fuzzy_json(w.value, w.gh_case), 0};
}

Reply do_cps(const Options& o) {
    const CpsTriple t = cps_decompose(operand(o, 0));
    return {json{{"crisp", {t.crisp.lo, t.crisp.hi}}, {"profile", t.profile}, {"symmetric", t.symmetric}}, 0};
}

SampledFunction sampled_from(const Options& o) {
    if (o.f_spec.empty()) throw UsageError("frac: --f is required");
    const auto phi = of_time(o.f_spec);
    SampledFunction s = SampledFunction::sample(phi, 0.0, o.horizon, o.steps);
    if (!std::isfinite(s[0])) {
        // singular at the left end: first sample taken at a + h
        std::vector<double> v(s.values().begin(), s.values().end());
        v[0] = v[1];
        s = SampledFunction(s.a(), s.h(), std::move(v));
    }
    return s;
}

Reply do_frac(const Options& o) {
    const SampledFunction f = sampled_from(o);
    const std::string op = o.op.empty() ? "caputo" : o.op;
    auto at = [&](std::size_t n) -> double {
        if (op == "rl_integral") return rl_integral(f, o.order, n);
        if (op == "caputo") return caputo_derivative(f, o.order, n);
        if (op == "rl_derivative") return rl_derivative(f, o.order, n);
        if (op == "gl") return gl_derivative(f, o.order, n);
        if (op == "hilfer") return hilfer_derivative(f, o.order, o.gamma1, n);
        throw UsageError("frac: unknown --op '" + op + "' (rl_integral, caputo, rl_derivative, gl, hilfer)");
    };
    json doc{{"op", op}, {"order", o.order}, {"t", f.abscissa(f.last())}, {"value", at(f.last())}};
    if (op == "hilfer") doc["gamma1"] = o.gamma1;
    if (o.series) {
        std::vector<double> t, v;
        for (std::size_t n = 1; n < f.size(); ++n) {
            t.push_back(f.abscissa(n));
            v.push_back(at(n));
        }
        doc["series"] = {{"t", t}, {"value", v}};
    }
    return {doc, 0};
}

Reply do_fuzzyfrac(const Options& o) {
    const FuzzyNumber c = operand(o, 0);
    if (o.f_spec.empty()) throw UsageError("fuzzyfrac: --f is required");
    const auto phi = of_time(o.f_spec);
    const double h = o.horizon / static_cast<double>(o.steps);
    std::vector<FuzzyNumber> values;
    for (std::size_t k = 0; k <= o.steps; ++k) values.push_back(scale(c, phi(static_cast<double>(k) * h)));
    const FuzzyFunction F(0.0, h, std::move(values));
    const std::string op = o.op.empty() ? "derivative" : o.op;
    if (op == "derivative") {
        const DerivativeSeries d = gh_derivative_series(F);
        json forms = json::array();
        for (DerivativeForm form : d.forms) forms.push_back(to_string(form));
        return {json{{"value", fuzzy_json(d.derivative.values().back())},
                     {"forms", forms},
                     {"switching_points", d.switching_points}},
                0};
    }
    if (op == "integral") return {fuzzy_json(fuzzy_riemann_integral(F, 0, o.steps)), 0};
    if (op == "rl_integral") return {fuzzy_json(fuzzy_rl_integral(F, o.order, o.steps)), 0};
    if (op == "frac_derivative") {
        const FracDerivative d = fuzzy_frac_derivative(F, o.order, o.steps);
        return {json{{"value", fuzzy_json(d.value)}, {"form", to_string(d.form)}}, 0};
    }
    throw UsageError("fuzzyfrac: unknown --op '" + op + "' (derivative, integral, rl_integral, frac_derivative)");
}

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Reply do_solve(const Options& o) {
    if (o.f_spec.empty() || o.g_spec.empty()) throw UsageError("solve: --f and --g are required");
    if (o.u0.empty()) throw UsageError("solve: --u0 is required");
    HybridProblem p;
    p.f = catalog_function(o.f_spec);
    p.g = catalog_function(o.g_spec);
    p.u0 = parse_fuzzy(read_operand(o.u0), AlphaGrid::uniform(o.grid_n));
    p.horizon = o.horizon;
    p.steps = o.steps;
    p.envelope_samples = o.envelope_samples;
    const SolutionBundle b = solve(p);

    bool converged = true;
    double max_residual = 0.0;
    for (const LevelSolution& s : b.levels) {
        converged = converged && s.converged;
        max_residual = std::max(max_residual, s.residual);
    }
    json doc{{"stacking_valid", b.stacking_valid},
             {"converged", converged},
             {"max_residual", max_residual},
             {"levels", b.levels.size()},
             {"steps", p.steps},
             {"horizon", p.horizon}};
    if (b.stacking_valid) doc["final"] = fuzzy_json(b.at(b.times.size() - 1, p.u0.grid()));

    if (!o.csv_path.empty()) {
        std::ofstream csv(o.csv_path, std::ios::binary);
        if (!csv) throw UsageError("solve: cannot write '" + o.csv_path + "'");
        csv << "t,alpha,lower,upper,residual\n";
        for (std::size_t k = 0; k < b.times.size(); ++k) {
            for (const LevelSolution& s : b.levels) {
                csv << format_number(b.times[k]) << ',' << format_number(s.alpha) << ',' << format_number(s.u1[k])
                    << ',' << format_number(s.u2[k]) << ',' << format_number(s.residual) << '\n';
            }
        }
    }
    return {doc, 0};
}

}  // namespace

std::function<double(double, double)> catalog_function(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::vector<double> a =
        colon == std::string::npos ? std::vector<double>{} : parse_numbers(spec.substr(colon + 1), spec);
    auto need = [&](std::size_t n) {
        if (a.size() != n) {
            throw UsageError("function '" + name + "' expects " + std::to_string(n) + " parameter(s)");
        }
    };
    if (name == "const") {
        need(1);
        return [c = a[0]](double, double) { return c; };
    }
    if (name == "affine") {
        need(2);
        return [p = a[0], q = a[1]](double, double x) { return p + q * x; };
    }
    if (name == "linear_in_x") {
        need(1);
        return [k = a[0]](double, double x) { return k * x; };
    }
    if (name == "decay") {
        need(4);
        return [p = a[0], q = a[1], c = a[2], k = a[3]](double t, double x) { return p + q * std::exp(-k * t) * (x + c); };
    }
    if (name == "power") {
        need(1);
        return [beta = a[0]](double t, double) { return std::pow(t, beta); };
    }
    if (name == "exp") {
        need(1);
        return [k = a[0]](double t, double) { return std::exp(k * t); };
    }
    throw UsageError("unknown function '" + name + "' (const, affine, linear_in_x, decay, power, exp)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Fuzzy-number arithmetic, fractional calculus and hybrid IVP solver", "fuzzyfrac"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--grid-n", o.grid_n, "Alpha grid intervals")->check(CLI::PositiveNumber);
    app.add_option("--alpha", o.alpha, "Alpha level for cut queries")->check(CLI::Range(0.0, 1.0));
    app.add_option("--order", o.order, "Fractional order");
    app.add_option("--gamma1", o.gamma1, "Hilfer type parameter");
    app.add_option("--horizon", o.horizon, "Right end of the time interval");
    app.add_option("--steps", o.steps, "Time steps")->check(CLI::PositiveNumber);
    app.add_option("--envelope-samples", o.envelope_samples, "Samples per cut for envelopes");
    app.add_option("--weights", o.weights, "Lower-endpoint weights per level (lsq)");
    app.add_option("--upper-weights", o.upper_weights, "Upper-endpoint weights per level (lsq)");
    app.add_option("--method", o.method, "exact, approx or lsq")->check(CLI::IsMember({"exact", "approx", "lsq"}));
    app.add_option("--op", o.op, "Operation within the verb");
    app.add_option("--lambda", o.lambda, "Scalar for arith scale");
    app.add_option("--f", o.f_spec, "Catalog function f");
    app.add_option("--g", o.g_spec, "Catalog function g");
    app.add_option("--u0", o.u0, "Initial fuzzy number (file or inline JSON)");
    app.add_option("--csv", o.csv_path, "CSV output for solve");
    app.add_option("-o,--output", o.output_path, "Write the JSON result to a file");
    app.add_flag("--series", o.series, "frac: also emit every time sample");

    const std::vector<std::pair<const char*, const char*>> verbs{
        {"validate", "Check a fuzzy number"},      {"arith", "Levelwise arithmetic"},
        {"ghdiff", "Generalized Hukuhara difference"}, {"gdiv", "Generalized division"},
        {"cps", "Crisp/profile/symmetric decomposition"}, {"frac", "Crisp fractional operators"},
        {"fuzzyfrac", "Fuzzy calculus on c * phi(t)"}, {"solve", "Hybrid fuzzy initial value problem"}};
    for (const auto& [name, help] : verbs) {
        app.add_subcommand(name, help)->add_option("operands", o.operands, "Fuzzy operands");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    const std::string verb = app.get_subcommands().front()->get_name();

    Reply reply;
    try {
        if (verb == "validate") reply = do_validate(o);
        else if (verb == "arith") reply = do_arith(o);
        else if (verb == "ghdiff") reply = do_ghdiff(o);
        else if (verb == "gdiv") reply = do_gdiv(o);
        else if (verb == "cps") reply = do_cps(o);
        else if (verb == "frac") reply = do_frac(o);
        else if (verb == "fuzzyfrac") reply = do_fuzzyfrac(o);
        else reply = do_solve(o);
    } catch (const ValidationError& e) {
        reply = {json{{"error", "invalid_fuzzy_number"}, {"message", e.what()}, {"violations", violations_json(e.report())}}, 1};
    } catch (const DomainError& e) {
        reply = {json{{"error", "domain_error"}, {"message", e.what()}}, 2};
    } catch (const SwitchingPointError& e) {
        reply = {json{{"error", "switching_point"}, {"message", e.what()}}, 2};
    } catch (const NonContraction& e) {
        reply = {json{{"error", "non_contraction"}, {"message", e.what()}}, 2};
    } catch (const InvalidPair& e) {
        reply = {json{{"error", "invalid_pair"}, {"message", e.what()}}, 2};
    } catch (const Error& e) {
        reply = {json{{"error", "usage"}, {"message", e.what()}}, 1};
    }

    const std::string text = reply.doc.dump() + "\n";
    if (!o.output_path.empty()) {
        std::ofstream file(o.output_path, std::ios::binary);
        if (!file) {
            err << "cannot write '" << o.output_path << "'\n";
            return 1;
        }
        file << text;
    } else {
        out << text;
    }
    if (reply.code != 0 && reply.doc.contains("message")) err << reply.doc["message"].get<std::string>() << "\n";
    return reply.code;
}

}  // namespace fuzzyfrac::cli
