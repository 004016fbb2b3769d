#include "snakefrac/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include <CLI11.hpp>

#include "snakefrac/errors.hpp"
#include "snakefrac/fpoly.hpp"
#include "snakefrac/matchings.hpp"
#include "snakefrac/render.hpp"

namespace snakefrac {

namespace {

unsigned long long default_limit() {
    if (const char* env = std::getenv("SNAKEFRAC_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw validation_error("SNAKEFRAC_LIMIT must be a positive integer, got \"" + std::string(env) + "\"");
    }
    return kDefaultMatchingLimit;
}

PerfectMatching select_base(const SnakeGraph& g, const std::string& selector, unsigned long long limit) {
    if (selector == "minimal") return g.minimal_matching();
    if (selector.rfind("index:", 0) == 0) {
        std::size_t idx = 0;
        try {
            idx = std::stoull(selector.substr(6));
        } catch (const std::exception&) {
            throw validation_error("bad base selector \"" + selector + "\"");
        }
        auto all = enumerate_matchings(g, limit);
        if (idx >= all.size())
            throw validation_error("base index " + std::to_string(idx) + " out of range: only "
                                   + std::to_string(all.size()) + " matchings");
        return all[idx];
    }
    throw validation_error("base selector must be \"minimal\" or \"index:<k>\", got \"" + selector + "\"");
}

std::string polynomial_output(const LaurentPolynomial& p, const std::string& format) {
    if (format == "text") return p.to_text();
    if (format == "latex") return p.to_latex();
    if (format == "json") return p.to_json().dump();
    throw validation_error("unknown polynomial format \"" + format + "\"");
}

}  // namespace

bool CheckReport::consistent() const {
    if (!symbolic) return probes_agree;
    if (formula.is_zero()) return false;
    if (!(formula == graft)) return false;
    if (oracle && !(*oracle == formula)) return false;
    if (mpz_class(static_cast<unsigned long>(formula.term_count())) != expected_count) return false;
    if (formula.eval_all_ones() != expected_count) return false;
    if (matching_count && mpz_class(static_cast<unsigned long>(*matching_count)) != expected_count) return false;
    if (formula.constant_term() != 1) return false;
    if (!formula.all_coefficients_one()) return false;
    if (!formula.is_polynomial()) return false;
    std::int64_t d = cf.partial_sum(cf.length()) - 1;
    if (!(formula.top_term() == Monomial::range_product(1, static_cast<int>(d)))) return false;
    return true;
}

std::string CheckReport::summary() const {
    if (!symbolic) {
        return std::string(probes_agree ? "OK" : "FAILED")
               + ": formula/graft probes agree (symbolic expansion skipped: N=" + expected_count.get_str()
               + " exceeds limit), N=" + expected_count.get_str();
    }
    std::string status = consistent() ? "OK" : "FAILED";
    std::string methods = oracle ? "3 methods agree" : "2 methods agree (enumeration skipped)";
    return status + ": " + methods + ", " + std::to_string(formula.term_count()) + " terms, N="
           + expected_count.get_str();
}

CheckReport cross_validate(const ContinuedFraction& cf, unsigned long long limit) {
    CheckReport report;
    report.cf = cf;
    report.expected_count = continuant(cf);

    if (report.expected_count > mpz_class(static_cast<unsigned long>(limit))) {
        // Too large to expand: compare the two pipelines through homomorphic
        // images instead (y -> 1 over the integers, and three random modular
        // evaluation points).
        report.symbolic = false;
        bool ok = fpoly_formula_all_ones(cf) == report.expected_count
                  && fpoly_graft_all_ones(cf) == report.expected_count;
        for (std::uint64_t seed = 1; seed <= 3 && ok; ++seed)
            ok = fpoly_formula_mod(cf, seed) == fpoly_graft_mod(cf, seed);
        report.probes_agree = ok;
        return report;
    }

    report.formula = fpoly_formula(cf);
    report.graft = fpoly_graft(cf);
    SnakeGraph g = build_snake_graph(cf);
    auto matchings = enumerate_matchings(g, limit);
    report.matching_count = matchings.size();
    PerfectMatching base = g.minimal_matching();
    LaurentPolynomial oracle;
    for (auto& p : matchings)
        oracle = oracle.plus(LaurentPolynomial::from_monomial(matching_height(g, p, base)));
    report.oracle = std::move(oracle);
    return report;
}

void require_consistent(const CheckReport& report) {
    if (!report.consistent())
        throw consistency_error("cross-check failed for [" + report.cf.to_string() + "]: " + report.summary());
}

int cli_exit_code(const std::exception& e) {
    if (dynamic_cast<const limit_error*>(&e)) return 2;
    if (dynamic_cast<const validation_error*>(&e)) return 1;
    if (dynamic_cast<const consistency_error*>(&e)) return 3;
    if (dynamic_cast<const std::logic_error*>(&e)) return 3;
    return 1;
}

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Snake graph F-polynomials from positive continued fractions"};
    app.name("snakefrac");
    app.require_subcommand(1);

    // one settings block per subcommand: shared bindings would let one
    // verb's defaults leak into another's
    struct VerbArgs {
        std::string cf;
        std::string method = "formula";
        std::string format;
        std::string base = "minimal";
        unsigned long long limit = 0;  // 0: use env/default
    };
    std::map<std::string, VerbArgs> verb_args;

    auto add_cf = [&](CLI::App* cmd) {
        cmd->add_option("cf", verb_args[cmd->get_name()].cf, "continued fraction, e.g. 2,3,4")->required();
    };
    auto add_limit = [&](CLI::App* cmd) {
        cmd->add_option("--limit", verb_args[cmd->get_name()].limit,
                        "matching enumeration limit (default " + std::to_string(kDefaultMatchingLimit)
                            + ", or SNAKEFRAC_LIMIT)")
            ->check(CLI::PositiveNumber);
    };
    auto add_format = [&](CLI::App* cmd, const std::vector<std::string>& choices) {
        std::string help;
        for (auto& c : choices) help += (help.empty() ? "" : "|") + c;
        cmd->add_option("--format", verb_args[cmd->get_name()].format, help)
            ->default_val(choices.front())
            ->check(CLI::IsMember(choices));
    };

    CLI::App* value_cmd = app.add_subcommand("value", "exact rational value of the continued fraction");
    add_cf(value_cmd);

    CLI::App* n_cmd = app.add_subcommand("n", "convergent numerator N (the matching count)");
    add_cf(n_cmd);

    CLI::App* build_cmd = app.add_subcommand("build", "construct the snake graph");
    add_cf(build_cmd);
    add_format(build_cmd, {"ascii", "json", "svg"});

    CLI::App* matchings_cmd = app.add_subcommand("matchings", "enumerate all perfect matchings");
    add_cf(matchings_cmd);
    add_format(matchings_cmd, {"text", "json"});
    add_limit(matchings_cmd);

    CLI::App* fpoly_cmd = app.add_subcommand("fpoly", "compute the F-polynomial");
    add_cf(fpoly_cmd);
    fpoly_cmd->add_option("--method", verb_args["fpoly"].method, "formula|graft|matchings")
        ->default_val("formula")
        ->check(CLI::IsMember({"formula", "graft", "matchings"}));
    add_format(fpoly_cmd, {"text", "json", "latex"});
    fpoly_cmd->add_option("--base", verb_args["fpoly"].base, "height base for --method matchings: minimal|index:<k>")
        ->default_val("minimal");
    add_limit(fpoly_cmd);

    CLI::App* check_cmd = app.add_subcommand("check", "cross-validate all methods");
    add_cf(check_cmd);
    add_limit(check_cmd);

    CLI::App* poset_cmd = app.add_subcommand("poset", "the poset of perfect matchings");
    add_cf(poset_cmd);
    add_format(poset_cmd, {"dot", "json"});
    add_limit(poset_cmd);

    CLI::App* render_cmd = app.add_subcommand("render", "draw the snake graph, optionally with a matching");
    add_cf(render_cmd);
    add_format(render_cmd, {"ascii", "svg"});
    render_cmd->add_option("--base", verb_args["render"].base, "overlay matching: none|minimal|index:<k>")
        ->default_val("none");
    add_limit(render_cmd);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;  // anything but help is a usage error
    }

    CLI::App* active = app.get_subcommands().front();
    VerbArgs& opt = verb_args[active->get_name()];
    const std::string& cf_text = opt.cf;
    const std::string& method = opt.method;
    const std::string& format = opt.format;
    const std::string& base = opt.base;
    unsigned long long limit = opt.limit;

    try {
        if (limit == 0) limit = default_limit();

        if (value_cmd->parsed()) {
            out << value(ContinuedFraction::parse(cf_text)).to_string() << "\n";
        } else if (n_cmd->parsed()) {
            out << continuant(ContinuedFraction::parse(cf_text)).get_str() << "\n";
        } else if (build_cmd->parsed()) {
            SnakeGraph g = build_snake_graph(ContinuedFraction::parse(cf_text));
            if (format == "ascii")
                out << render_ascii(g);
            else if (format == "svg")
                out << render_svg(g);
            else
                out << graph_to_json(g).dump() << "\n";
        } else if (matchings_cmd->parsed()) {
            SnakeGraph g = build_snake_graph(ContinuedFraction::parse(cf_text));
            auto all = enumerate_matchings(g, limit);
            if (format == "json") {
                out << matchings_to_json(all).dump() << "\n";
            } else {
                for (auto& p : all) out << p.to_string() << "\n";
            }
        } else if (fpoly_cmd->parsed()) {
            ContinuedFraction cf = ContinuedFraction::parse(cf_text);
            LaurentPolynomial f;
            if (method == "matchings") {
                SnakeGraph g = build_snake_graph(cf);
                f = fpoly_from_matchings(g, select_base(g, base, limit), limit);
            } else {
                mpz_class predicted = continuant(cf);
                if (predicted > mpz_class(static_cast<unsigned long>(limit))) throw limit_error(predicted, limit);
                f = method == "formula" ? fpoly_formula(cf) : fpoly_graft(cf);
            }
            out << polynomial_output(f, format) << "\n";
        } else if (check_cmd->parsed()) {
            CheckReport report = cross_validate(ContinuedFraction::parse(cf_text), limit);
            require_consistent(report);
            out << report.summary() << "\n";
        } else if (poset_cmd->parsed()) {
            SnakeGraph g = build_snake_graph(ContinuedFraction::parse(cf_text));
            MatchingPoset poset = build_matching_poset(g, limit);
            if (format == "json")
                out << poset_to_json(poset).dump() << "\n";
            else
                out << export_poset_dot(poset);
        } else if (render_cmd->parsed()) {
            SnakeGraph g = build_snake_graph(ContinuedFraction::parse(cf_text));
            std::optional<PerfectMatching> overlay;
            if (base != "none") overlay = select_base(g, base, limit);
            if (format == "svg")
                out << render_svg(g, overlay);
            else
                out << render_ascii(g, overlay);
        }
        return 0;
    } catch (const std::exception& e) {
        int code = cli_exit_code(e);
        err << (code == 3 ? "CROSS-CHECK FAILED: " : "error: ") << e.what() << "\n";
        return code;
    }
}

}  // namespace snakefrac
