#include "lorenz/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lorenz/errors.hpp"
#include "lorenz/linkring.hpp"
#include "lorenz/symbolic.hpp"
#include "lorenz/template_model.hpp"
#include "lorenz/twist.hpp"

namespace lorenz::cli {

namespace {

KneadingPair admissible_arg(const std::string& text) {
    KneadingPair p = parse_pair(text);
    if (!is_admissible_pair(p))
        throw MalformedWord("pair " + format_pair(p) + " is not admissible");
    p.verified = true;
    return p;
}

void print_matrix(std::ostream& os, const std::string& name,
                  const TemplateModel& t, bool labeled) {
    os << name << ":\n";
    for (std::size_t i = 0; i < t.cell_count(); ++i) {
        for (std::size_t j = 0; j < t.cell_count(); ++j) {
            if (j) os << ' ';
            if (labeled)
                os << to_char(t.labels[i][j]);
            else
                os << t.transition[i][j];
        }
        os << '\n';
    }
}

void cmd_template(std::ostream& os, const RunConfig& cfg,
                  const std::string& pair_text) {
    TemplateModel t = build_template(admissible_arg(pair_text));
    if (cfg.json) {
        os << template_to_json(t) << '\n';
        return;
    }
    os << "pair: " << format_pair(t.pair) << '\n';
    os << "points:";
    for (const auto& pt : t.points) os << ' ' << format_word(pt.word);
    os << '\n';
    os << "cells:";
    for (const auto& c : t.cells)
        os << " [" << format_word(t.points[c.lower].word) << ","
           << format_word(t.points[c.upper].word) << "]"
           << (c.side == Side::LeftOfZero ? 'L' : 'R');
    os << '\n';
    print_matrix(os, "transition", t, false);
    print_matrix(os, "labels", t, true);
}

void cmd_zeta_w(std::ostream& os, const RunConfig& cfg,
                const std::string& pair_text) {
    LinkRingElement d =
        link_det(build_template(admissible_arg(pair_text)), cfg.cycle_budget);
    if (cfg.json)
        os << d.to_json() << '\n';
    else
        os << "link-det = " << d.str() << '\n';
}

nlohmann::json series_json(const TwistSeries& s) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (int i = 0; i <= s.order(); ++i)
        if (s.coeff(i) != Rational(0))
            coeffs[std::to_string(i)] = rational_str(s.coeff(i));
    return {{"order", s.order()}, {"coefficients", coeffs}};
}

nlohmann::json poly_json(const UniPoly& p) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = c.str();
    return coeffs;
}

void cmd_zeta_s(std::ostream& os, const RunConfig& cfg,
                const std::string& pair_text) {
    TwistSeries s = sullivan_series(build_template(admissible_arg(pair_text)),
                                    cfg.truncation_order);
    if (cfg.json)
        os << series_json(s).dump() << '\n';
    else
        os << "zeta-s = " << s.str() << '\n';
}

void cmd_orbits(std::ostream& os, const RunConfig& cfg,
                const std::string& pair_text) {
    TwistCensus census = orbit_census(
        build_template(admissible_arg(pair_text)), cfg.truncation_order);
    if (cfg.json) {
        nlohmann::json j;
        j["order"] = census.order;
        nlohmann::json orbits = nlohmann::json::object();
        for (std::size_t n = 1; n < census.orbits.size(); ++n)
            orbits[std::to_string(n)] = census.orbits[n].str();
        nlohmann::json twist = nlohmann::json::object();
        nlohmann::json weighted = nlohmann::json::object();
        for (std::size_t q = 1; q < census.twist.size(); ++q) {
            twist[std::to_string(q)] = census.twist[q].str();
            weighted[std::to_string(q)] = census.weighted[q].str();
        }
        j["orbits"] = orbits;
        j["twist"] = twist;
        j["weighted"] = weighted;
        os << j.dump() << '\n';
        return;
    }
    for (std::size_t n = 1; n < census.orbits.size(); ++n)
        os << "O_" << n << " = " << census.orbits[n] << '\n';
    for (std::size_t q = 2; q < census.twist.size(); q += 2)
        os << "T_" << q << " = " << census.twist[q] << '\n';
    for (std::size_t q = 2; q < census.weighted.size(); ++q)
        os << "ScriptT_" << q << " = " << census.weighted[q] << '\n';
}

int cmd_verify(std::ostream& os, const RunConfig& cfg, const std::string& kind,
               const std::vector<std::string>& pair_texts) {
    bool pass = false;
    nlohmann::json j;
    std::string lhs, rhs;
    if (kind == "williams" || kind == "sullivan") {
        if (pair_texts.size() != 2)
            throw CLI::ValidationError("verify " + kind +
                                       " needs two pair arguments");
        KneadingPair outer = admissible_arg(pair_texts[0]);
        KneadingPair inner = admissible_arg(pair_texts[1]);
        if (kind == "williams") {
            auto report =
                verify_williams_factorization(outer, inner, cfg.cycle_budget);
            pass = report.pass;
            lhs = report.lhs.str();
            rhs = report.rhs.str();
        } else {
            auto report = verify_sullivan_factorization(outer, inner);
            pass = report.pass;
            lhs = report.lhs.str();
            rhs = report.rhs.str();
        }
    } else if (kind == "exp-w" || kind == "exp-s") {
        if (pair_texts.size() != 1)
            throw CLI::ValidationError("verify " + kind +
                                       " needs one pair argument");
        TemplateModel t = build_template(admissible_arg(pair_texts[0]));
        if (kind == "exp-w") {
            std::size_t degree = static_cast<std::size_t>(
                std::max(0, cfg.truncation_order));
            LinkRingElement series = exp_trace_series(t, degree);
            LinkRingElement det =
                link_det(t, cfg.cycle_budget).truncated(degree);
            pass = series == det;
            lhs = series.str();
            rhs = det.str();
        } else {
            auto report = verify_sullivan_exp_identity(t, cfg.truncation_order);
            pass = report.pass;
            lhs = report.lhs.str();
            rhs = report.rhs.str();
        }
    } else {
        throw CLI::ValidationError("unknown verify kind: " + kind);
    }
    if (cfg.json) {
        j["kind"] = kind;
        j["pass"] = pass;
        j["lhs"] = lhs;
        j["rhs"] = rhs;
        os << j.dump() << '\n';
    } else {
        os << "verify " << kind << ": " << (pass ? "PASS" : "FAIL") << '\n';
        os << "lhs = " << lhs << '\n';
        os << "rhs = " << rhs << '\n';
    }
    return pass ? 0 : 1;
}

} // namespace

std::size_t generate_corpus(std::size_t max_x, std::size_t max_y,
                            const std::string& out_path, std::size_t bound) {
    auto pairs = enumerate_admissible_pairs(max_x, max_y, bound);
    std::ofstream out(out_path);
    if (!out) throw IoFailure("cannot open " + out_path + " for writing");
    for (const auto& p : pairs) out << format_pair(p) << '\n';
    if (!out.flush()) throw IoFailure("write to " + out_path + " failed");
    return pairs.size();
}

RunResult run(const std::vector<std::string>& args) {
    RunResult result;
    std::ostringstream out, err;
    RunConfig cfg;

    CLI::App app{"sub-Lorenz templates and their zeta functions"};
    app.name("lorenz-zeta");
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config")->envname("LORENZ_ZETA_CONFIG");
    app.add_option("--order", cfg.truncation_order,
                   "series/census truncation order")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.add_option("--budget", cfg.cycle_budget, "simple-cycle budget")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.add_option("--max-enum-len", cfg.max_enum_len,
                   "bound for corpus enumeration")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    std::string output_mode;
    app.add_option("--output", output_mode, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    bool json_flag = false;
    app.add_flag("--json", json_flag, "emit JSON");

    std::string pair_a, pair_b, verify_kind, out_path;
    std::size_t max_x = 0, max_y = 0;

    auto* admissible =
        app.add_subcommand("admissible", "check pair admissibility");
    admissible->add_option("pair", pair_a)->required();
    auto* star = app.add_subcommand("star", "*-product of two pairs");
    star->add_option("outer", pair_a)->required();
    star->add_option("inner", pair_b)->required();
    auto* templ = app.add_subcommand("template", "build the template");
    templ->add_option("pair", pair_a)->required();
    auto* zeta_w = app.add_subcommand("zeta-w", "Williams link-det");
    zeta_w->add_option("pair", pair_a)->required();
    auto* zeta_s = app.add_subcommand("zeta-s", "Sullivan twist zeta series");
    zeta_s->add_option("pair", pair_a)->required();
    auto* orbits = app.add_subcommand("orbits", "orbit and twist census");
    orbits->add_option("pair", pair_a)->required();
    auto* verify = app.add_subcommand("verify", "verify an identity");
    verify->add_option("kind", verify_kind)
        ->required()
        ->check(CLI::IsMember({"williams", "sullivan", "exp-w", "exp-s"}));
    verify->add_option("pair", pair_a);
    verify->add_option("pair2", pair_b);
    auto* corpus = app.add_subcommand("corpus", "write admissible pairs");
    corpus->add_option("max_x", max_x)->required();
    corpus->add_option("max_y", max_y)->required();
    corpus->add_option("--out", out_path)->required();

    // Environment variables sit between command-line flags and the config
    // file: injected ahead of the real arguments, so an explicit flag (taken
    // last) wins, while config values only fill options still unset.
    std::vector<std::string> effective;
    for (const auto& [env, flag] :
         {std::pair<const char*, const char*>{"LORENZ_ZETA_ORDER", "--order"},
          {"LORENZ_ZETA_BUDGET", "--budget"},
          {"LORENZ_ZETA_MAX_ENUM_LEN", "--max-enum-len"},
          {"LORENZ_ZETA_OUTPUT", "--output"}}) {
        if (const char* val = std::getenv(env)) {
            effective.push_back(flag);
            effective.push_back(val);
        }
    }
    effective.insert(effective.end(), args.begin(), args.end());

    std::vector<std::string> argv(effective.rbegin(), effective.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        result.out = app.help();
        result.exit_code = 0;
        return result;
    } catch (const CLI::ParseError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
        return result;
    }
    cfg.json = json_flag || output_mode == "json";

    try {
        if (admissible->parsed()) {
            KneadingPair p = parse_pair(pair_a);
            bool ok = is_admissible_pair(p);
            if (cfg.json)
                out << nlohmann::json{{"pair", format_pair(p)},
                                      {"admissible", ok}}
                           .dump()
                    << '\n';
            else
                out << "admissible: " << (ok ? "true" : "false") << '\n';
        } else if (star->parsed()) {
            KneadingPair product =
                star_pair(admissible_arg(pair_a), parse_pair(pair_b));
            if (cfg.json)
                out << nlohmann::json{{"product", format_pair(product)},
                                      {"admissible", product.verified}}
                           .dump()
                    << '\n';
            else
                out << format_pair(product) << '\n';
        } else if (templ->parsed()) {
            cmd_template(out, cfg, pair_a);
        } else if (zeta_w->parsed()) {
            cmd_zeta_w(out, cfg, pair_a);
        } else if (zeta_s->parsed()) {
            cmd_zeta_s(out, cfg, pair_a);
        } else if (orbits->parsed()) {
            cmd_orbits(out, cfg, pair_a);
        } else if (verify->parsed()) {
            std::vector<std::string> pairs;
            if (!pair_a.empty()) pairs.push_back(pair_a);
            if (!pair_b.empty()) pairs.push_back(pair_b);
            result.exit_code = cmd_verify(out, cfg, verify_kind, pairs);
        } else if (corpus->parsed()) {
            std::size_t count =
                generate_corpus(max_x, max_y, out_path, cfg.max_enum_len);
            out << count << '\n';
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        result.exit_code = 2;
    } catch (const MalformedWord& e) {
        err << "error: " << e.what() << '\n';
        result.exit_code = 2;
    } catch (const BoundTooLarge& e) {
        err << "error: " << e.what() << '\n';
        result.exit_code = 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        result.exit_code = 3;
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

} // namespace lorenz::cli
