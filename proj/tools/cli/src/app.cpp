#include "hypeval_cli/app.hpp"

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypeval/errors.hpp"
#include "hypeval/gamma.hpp"
#include "hypeval/hypergeometric.hpp"
#include "hypeval/kummer.hpp"
#include "hypeval/transforms.hpp"
#include "hypeval_cli/report.hpp"
#include "hypeval_cli/suites.hpp"

namespace hypeval::cli {

namespace {

std::vector<std::string> split(const std::string& text)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<LinearForm> parse_forms(const std::string& text)
{
    std::vector<LinearForm> out;
    if (text.empty()) return out;
    for (const auto& s : split(text)) out.push_back(LinearForm::parse(s));
    return out;
}

std::vector<BigRational> parse_rationals(const std::string& text, std::size_t expected, const char* what)
{
    std::vector<BigRational> out;
    for (const auto& s : split(text)) out.push_back(BigRational::parse(s));
    if (out.size() != expected)
        throw ParseError(std::string(what) + " needs " + std::to_string(expected) + " value(s), got " +
                         std::to_string(out.size()));
    return out;
}

// "a=1/2,b=3"; unspecified symbols are 0.
Point parse_point(const std::string& text)
{
    Point p;
    if (text.empty()) return p;
    for (const auto& kv : split(text)) {
        auto eq = kv.find('=');
        if (eq != 1 || (kv[0] != 'a' && kv[0] != 'b' && kv[0] != 'c'))
            throw ParseError("point entry '" + kv + "' is not of the form a=<rational>");
        p[static_cast<Symbol>(kv[0] - 'a')] = BigRational::parse(kv.substr(2));
    }
    return p;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag)
{
    if (flag) return *flag;
    if (const char* env = std::getenv("HYPEVAL_SEED"); env && *env) {
        try {
            std::size_t pos = 0;
            unsigned long long v = std::stoull(env, &pos);
            if (pos == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw ParseError(std::string("HYPEVAL_SEED='") + env + "' is not an unsigned integer");
    }
    return 1;
}

struct Globals {
    bool json = false;
    bool timing = false;
    int bits = 53;
    unsigned threads = 0;
};

template <class Real>
void put_value(Json& result, const NumericValue<Real>& v)
{
    result["value"] = format_real(v.value);
    result["error_estimate"] = format_real(v.error_estimate);
}

Json precision_echo(const Globals& g)
{
    return {{"bits", g.bits}, {"mantissa", static_cast<int>(precision_for_bits(g.bits))}};
}

// Exact value of a series that is constant and terminating at the point.
std::optional<BigRational> exact_if_terminating(const SeriesSpec& spec, const Point& p)
{
    SeriesSpec at = spec.at(p);
    if (!at.termination_index()) return std::nullopt;
    return sum_terminating(at).constant_value();
}

Report eval_2f1(const Globals& g, const std::string& upper, const std::string& lower)
{
    auto u = parse_rationals(upper, 2, "--upper");
    auto l = parse_rationals(lower, 1, "--lower");
    Report r;
    r.command = "eval 2f1-neg1";
    r.parameters = {{"upper", {u[0].to_string(), u[1].to_string()}}, {"lower", {l[0].to_string()}},
                    {"precision", precision_echo(g)}};
    SeriesSpec spec{{LinearForm(u[0]), LinearForm(u[1])}, {LinearForm(l[0])}, BigRational(-1)};
    if (is_nonpositive_integer(l[0]) && !exact_if_terminating(spec, {}))
        throw InvalidLowerParameter("lower parameter " + l[0].to_string() + " is a pole");
    r.result = Json::object();
    r.result["series"] = spec.to_string();
    with_precision(precision_for_bits(g.bits),
                   [&]<class Real>() { put_value(r.result, eval_2f1_neg1<Real>(u[0], u[1], l[0])); });
    if (auto e = exact_if_terminating(spec, {})) r.result["exact"] = e->to_string();
    return r;
}

Report eval_gamma(const Globals& g, const std::string& text, const std::string& point)
{
    GammaProduct gp = GammaProduct::parse(text);
    Point p = parse_point(point);
    Report r;
    r.command = "eval gamma-product";
    r.parameters = {{"spec", text}, {"point", p.to_string()}, {"precision", precision_echo(g)}};
    r.result = Json::object();
    r.result["product"] = gp.to_string();
    with_precision(precision_for_bits(g.bits),
                   [&]<class Real>() { put_value(r.result, eval_gamma_product<Real>(gp, p)); });
    if (!gp.has_gamma_or_power()) r.result["exact"] = gp.prefactor().eval(p).to_string();
    return r;
}

Report eval_series(const Globals& g, const std::string& upper, const std::string& lower, const std::string& z,
                   const std::string& point)
{
    SeriesSpec spec{parse_forms(upper), parse_forms(lower), BigRational::parse(z)};
    Point p = parse_point(point);
    Report r;
    r.command = "eval series";
    r.parameters = {{"series", spec.to_string()}, {"point", p.to_string()}, {"precision", precision_echo(g)}};
    r.result = Json::object();
    r.result["series"] = spec.at(p).to_string();
    with_precision(precision_for_bits(g.bits), [&]<class Real>() { put_value(r.result, evaluate<Real>(spec, p)); });
    if (auto e = exact_if_terminating(spec, p)) r.result["exact"] = e->to_string();
    return r;
}

Report verify(const Globals& g, const std::string& suite, VerifyOptions opt, const std::optional<std::string>& range,
              const std::optional<std::string>& param)
{
    if (range) opt.n_range = parse_range(*range);
    if (param) opt.param = BigRational::parse(*param);
    opt.precision = precision_for_bits(g.bits);
    opt.threads = g.threads;
    Report r;
    r.command = "verify " + suite;
    r.parameters["suite"] = suite;
    r.parameters["n_range"] = opt.n_range ? Json(std::to_string(opt.n_range->first) + ".." +
                                                std::to_string(opt.n_range->second))
                                          : Json();
    r.parameters["points"] = opt.points ? Json(*opt.points) : Json();
    r.parameters["seed"] = std::to_string(opt.seed);
    r.parameters["tol"] = opt.tol ? Json(format_real(*opt.tol)) : Json();
    r.parameters["kind"] = opt.kind ? Json(*opt.kind) : Json();
    r.parameters["param"] = opt.param ? Json(opt.param->to_string()) : Json();
    r.parameters["precision"] = precision_echo(g);
    r.checks = run_suite(suite, opt);
    return r;
}

// alt_a, alt_b exist only for P and alt_c, alt_d only for Q.
bool variant_exists(Coefficient w, CoeffVariant v)
{
    if (v == CoeffVariant::alt_a || v == CoeffVariant::alt_b) return w == Coefficient::P;
    if (v == CoeffVariant::alt_c || v == CoeffVariant::alt_d) return w == Coefficient::Q;
    return true;
}

Report pq_table(const std::string& range, const std::optional<std::string>& variant)
{
    auto [lo, hi] = parse_range(range);
    if (lo > hi) throw DomainError("empty n range");
    std::optional<CoeffVariant> v;
    if (variant) v = parse_variant(*variant);
    Report r;
    r.command = "pq-table";
    r.parameters = {{"n_range", std::to_string(lo) + ".." + std::to_string(hi)},
                    {"variant", v ? Json(std::string(variant_name(*v))) : Json()}};
    Json rows = Json::array();
    for (long n = lo; n <= hi; ++n) {
        CoeffVariant use = v.value_or(default_variant(n));
        Json row;
        row["n"] = n;
        row["variant"] = variant_name(use);
        for (Coefficient w : {Coefficient::P, Coefficient::Q}) {
            std::string key(1, coefficient_name(w));
            if (!variant_exists(w, use)) {
                row[key] = nullptr;
                continue;
            }
            if (!variant_in_range(w, n, use))
                throw VariantOutOfRange(std::string(variant_name(use)) + " is not defined at n=" + std::to_string(n));
            row[key] = coeff(w, n, use).to_string();
        }
        rows.push_back(std::move(row));
    }
    r.result = Json::object();
    r.result["rows"] = std::move(rows);
    return r;
}

Report orbit(long m, const std::string& ytext)
{
    auto forms = parse_forms(ytext);
    if (forms.size() != 6) throw ParseError("--y needs six values, got " + std::to_string(forms.size()));
    std::array<LinearForm, 6> y;
    std::copy(forms.begin(), forms.end(), y.begin());
    OrbitLabel label(y, m);
    Report r;
    r.command = "orbit";
    r.parameters = {{"m", m}, {"y", label.to_string()}};
    auto entries = orbit_terminating(label);
    auto labels = orbit_labels(label);
    RatFunc ref = label.normalizer() * sum_terminating(label.spec());
    r.result = Json::object();
    r.result["value"] = ref.to_string();
    Json list = Json::array();
    for (std::size_t j = 0; j < entries.size(); ++j) {
        RatFunc v = exact_value(entries[j]);
        list.push_back({{"index", j},
                        {"label", labels[j].first.to_string()},
                        {"sign", labels[j].second},
                        {"prefactor", entries[j].prefactor.to_string()},
                        {"series", entries[j].spec.to_string()},
                        {"value", v.to_string()}});
        r.checks.push_back(exact_record("entry " + std::to_string(j) + " equals the label value", v - ref));
    }
    r.result["entries"] = std::move(list);
    return r;
}

}  // namespace

int exit_code_for(const std::exception& e)
{
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const VariantOutOfRange*>(&e) ||
        dynamic_cast<const InvalidShape*>(&e) || dynamic_cast<const DomainError*>(&e))
        return exit_usage;
    return exit_domain;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact and numeric verification of 2F1(-1) evaluations and their relatives", "hypeval"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable report on stdout");
    app.add_flag("--timing", g.timing, "Include per-check runtimes (breaks byte-identical output)");
    app.add_option("--precision", g.bits, "Mantissa bits: up to 53, 64 or 113")->check(CLI::Range(1, 100000));
    app.add_option("--threads", g.threads, "Worker threads for sweeps (0: hardware)");

    auto* eval = app.add_subcommand("eval", "Evaluate a single expression");
    eval->require_subcommand(1);
    std::string upper, lower, spec_text, point, z = "1";
    auto* e2f1 = eval->add_subcommand("2f1-neg1", "2F1(A, B; C; -1)");
    e2f1->add_option("--upper", upper, "A,B")->required();
    e2f1->add_option("--lower", lower, "C")->required();
    auto* egamma = eval->add_subcommand("gamma-product", "Product of Gamma values");
    egamma->add_option("--spec", spec_text, "e.g. \"3/4*G(c)/G(5-c)\"")->required();
    egamma->add_option("--point", point, "a=..,b=..,c=..");
    auto* eseries = eval->add_subcommand("series", "pFq(upper; lower; z)");
    eseries->add_option("--upper", upper, "Comma-separated affine forms")->required();
    eseries->add_option("--lower", lower, "Comma-separated affine forms");
    eseries->add_option("--z", z, "Argument (rational)");
    eseries->add_option("--point", point, "a=..,b=..,c=..");

    auto* ver = app.add_subcommand("verify", "Run a verification sweep");
    std::string suite;
    VerifyOptions vopt;
    std::optional<std::string> range, param, variant;
    std::optional<std::uint64_t> seed;
    ver->add_option("suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>(std::begin(suite_names), std::end(suite_names))));
    ver->add_option("--n-range", range, "lo..hi");
    ver->add_option("--points", vopt.points, "Random points per sweep");
    ver->add_option("--seed", seed, "Sampling seed (default $HYPEVAL_SEED, then 1)");
    ver->add_option("--tol", vopt.tol, "Numeric tolerance override");
    ver->add_option("--kind", vopt.kind, "special: Q4_ZERO, SPECFO1 or SPECFO2");
    ver->add_option("--param", param, "special: parameter value");

    auto* pq = app.add_subcommand("pq-table", "Table of P(n), Q(n)");
    std::string pq_range;
    pq->add_option("--n-range", pq_range, "lo..hi")->required();
    pq->add_option("--variant", variant, "THM1, THM2, NEG, ALT_A..ALT_D, REFLECT");

    auto* orb = app.add_subcommand("orbit", "The 18 transforms of a terminating 3F2(1)");
    long m = 0;
    std::string ytext;
    orb->add_option("--m", m, "Termination order")->required();
    orb->add_option("--y", ytext, "y0,...,y5")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        Report r;
        if (*e2f1) r = eval_2f1(g, upper, lower);
        else if (*egamma) r = eval_gamma(g, spec_text, point);
        else if (*eseries) r = eval_series(g, upper, lower, z, point);
        else if (*ver) {
            vopt.seed = resolve_seed(seed);
            r = verify(g, suite, vopt, range, param);
        } else if (*pq) r = pq_table(pq_range, variant);
        else r = orbit(m, ytext);
        out << (g.json ? to_json(r, g.timing) : to_text(r, g.timing));
        return r.passed() ? exit_pass : exit_check_failed;
    } catch (const std::exception& e) {
        err << "hypeval: " << describe(e) << "\n";
        return exit_code_for(e);
    }
}

}  // namespace hypeval::cli
