#pragma once

#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "staircase/closure.hpp"
#include "staircase/format.hpp"
#include "staircase/json_io.hpp"
#include "staircase/parse.hpp"
#include "staircase/powers.hpp"
#include "staircase/survey.hpp"

namespace staircase::cli {

// Exit codes: 0 success, 1 domain error (wrong class, cap hit, overflow),
// 2 malformed command line or literal.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

namespace detail {

struct options {
    bool json = false;
    bool csv = false;
    bool trace = false;
    exp_t cap = 0;   // 0: per-computation default
    exp_t kmax = 8;
    exp_t bmax = 0;  // 0: 2a
    std::optional<std::string> set_literal;
    std::vector<std::string> positional;
};

inline exp_t parse_flag_value(const std::string& flag, const std::string& value) {
    exp_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw parse_error("flag " + flag + " wants a nonnegative integer, got '" +
                          value + "'");
    return out;
}

inline options parse_options(const std::vector<std::string>& args) {
    options o;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto value = [&](const char* flag) -> const std::string& {
            if (i + 1 >= args.size())
                throw parse_error(std::string("flag ") + flag + " wants a value");
            return args[++i];
        };
        if (a == "--json") o.json = true;
        else if (a == "--csv") o.csv = true;
        else if (a == "--trace") o.trace = true;
        else if (a == "--cap") o.cap = parse_flag_value(a, value("--cap"));
        else if (a == "--kmax") o.kmax = parse_flag_value(a, value("--kmax"));
        else if (a == "--bmax") o.bmax = parse_flag_value(a, value("--bmax"));
        else if (a == "--set") o.set_literal = value("--set");
        else if (a.starts_with("--")) throw parse_error("unknown flag " + a);
        else o.positional.push_back(a);
    }
    return o;
}

inline void print_usage(std::ostream& out) {
    out <<
        "staircase -- exact reduction-number computations for monomial ideals in two variables\n"
        "\n"
        "usage: staircase <command> [arguments] [flags]\n"
        "\n"
        "commands:\n"
        "  classify IDEAL            frame (a, b) and membership flags\n"
        "  reduce IDEAL              minimal monomial reduction\n"
        "  rnum (IDEAL | --set S)    reduction number, witness power, bounds\n"
        "  closure IDEAL             smallest reduction-number-1 ideal containing IDEAL\n"
        "  powers (IDEAL | --set S)  r(I^k) profile, stabilization index, conjecture probe\n"
        "  sumset S [S2]             sumset of two sets, or k-fold table of one\n"
        "  survey m A                all exponent sets on the square frame A, bucketed by r\n"
        "  survey n A                3-generated exponent sets {0,e,A}, bucketed by r\n"
        "  survey rset A B           reduction numbers realized by third generators\n"
        "  survey ourlimits P        realized-value gap bound at an odd prime P\n"
        "  survey specialnight A     coverage of [1, A-1] by r-sets over frames up to bmax\n"
        "\n"
        "ideal literals:  x^4 + x^3*y^3 + y^8   ('*' optional, exponent 1 implicit)\n"
        "                 [(4,0),(3,3),(0,8)]\n"
        "set literals:    g:members, e.g. 6:0,2,6\n"
        "\n"
        "flags:\n"
        "  --json       machine-readable output\n"
        "  --csv        CSV rows (survey bucket tables)\n"
        "  --trace      recurrence table for 3-generated closures\n"
        "  --cap N      iteration cap for power chains (default: max(2*max(a,b), 64))\n"
        "  --kmax N     powers profiled / folds listed (default: 8)\n"
        "  --bmax N     last frame height for survey specialnight (default: 2a)\n";
}

inline framed_ideal framed_from(const std::string& literal) {
    return framed_ideal(parse_ideal(literal));
}

inline int cmd_classify(const options& o, std::ostream& out) {
    const classification c = classify(parse_ideal(o.positional.at(1)));
    if (o.json) {
        out << nlohmann::json{{"a", c.a},
                              {"b", c.b},
                              {"frame_is_reduction", c.frame_is_reduction},
                              {"quasi_equigenerated", c.quasi_equigenerated}}
            << "\n";
        return exit_ok;
    }
    out << "frame: a = " << c.a << ", b = " << c.b << "\n"
        << "minimal monomial reduction is the frame: "
        << (c.frame_is_reduction ? "yes" : "no") << "\n"
        << "quasi-equigenerated: " << (c.quasi_equigenerated ? "yes" : "no")
        << "\n";
    return exit_ok;
}

inline int cmd_reduce(const options& o, std::ostream& out) {
    const monomial_ideal J = minimal_monomial_reduction(parse_ideal(o.positional.at(1)));
    if (o.json) {
        out << nlohmann::json{{"reduction", json_of(J)}} << "\n";
        return exit_ok;
    }
    out << to_string(J) << "\n";
    return exit_ok;
}

inline int cmd_rnum(const options& o, std::ostream& out) {
    if (o.set_literal) {
        const exponent_set A = parse_exponent_set(*o.set_literal);
        const exp_t r = r_equigen(A);
        const reduction_bounds bounds = upper_bounds(A);
        if (o.json) {
            out << nlohmann::json{{"g", A.g},
                                  {"members", A.members.elements()},
                                  {"r", r},
                                  {"multiplicity", multiplicity(A)},
                                  {"cold_bound", bounds.cold},
                                  {"glp_bound", bounds.glp}}
                << "\n";
            return exit_ok;
        }
        out << "r = " << r << "\n"
            << "multiplicity = " << multiplicity(A) << "\n"
            << "bounds: r < " << bounds.cold << ", r <= " << bounds.glp << "\n";
        return exit_ok;
    }
    const framed_ideal F = framed_from(o.positional.at(1));
    const reduction_report rep = reduction_number(F, o.cap);
    if (o.json) {
        out << json_of(rep, F.ideal()) << "\n";
        return exit_ok;
    }
    out << "r = " << rep.r << "\n"
        << "J = " << to_string(rep.reduction) << "\n"
        << "witness: I^" << rep.witness_k + 1 << " = J * I^" << rep.witness_k
        << "\n";
    if (rep.bounds)
        out << "bounds: r < " << rep.bounds->cold << ", r <= " << rep.bounds->glp
            << "\n";
    return exit_ok;
}

inline int cmd_closure(const options& o, std::ostream& out) {
    const framed_ideal F = framed_from(o.positional.at(1));
    auto [L, trace] = closure(F);
    const bool three_generated = F.ideal().size() == 3;
    std::optional<closure_trace> rec;
    if (three_generated) {
        auto [L3, t3] = closure_3gen(F.a(), F.b(), F.ideal().generators()[1]);
        rec = std::move(t3);
    }
    if (o.json) {
        nlohmann::json j{{"closure", json_of(L.ideal())},
                         {"added", nlohmann::json::array()}};
        for (monomial m : trace.added) j["added"].push_back(json_of(m));
        if (rec) {
            j["k"] = *rec->k;
            j["steps"] = nlohmann::json::array();
            for (const closure_step& st : rec->steps)
                j["steps"].push_back({{"i", st.i},
                                      {"r", st.r},
                                      {"s", st.s},
                                      {"c", st.x},
                                      {"d", st.y}});
        }
        out << j << "\n";
        return exit_ok;
    }
    out << "closure = " << to_string(L.ideal()) << "\n";
    out << "added:";
    if (trace.added.empty()) out << " none";
    for (monomial m : trace.added) out << " " << to_string(m);
    out << "\n";
    if (rec && o.trace) {
        out << "  i  r_i  s_i  c_i  d_i  r_i+s_i\n";
        for (const closure_step& st : rec->steps) {
            out << "  " << st.i << "    " << st.r << "    " << st.s << "    "
                << st.x << "    " << st.y << "    " << st.r + st.s << "\n";
        }
        out << "k = " << *rec->k << "\n";
    }
    return exit_ok;
}

inline int cmd_powers(const options& o, std::ostream& out) {
    power_profile_t profile;
    exp_t r1 = 0;
    if (o.set_literal) {
        profile = power_profile(parse_exponent_set(*o.set_literal), o.kmax);
    } else {
        profile = power_profile(framed_from(o.positional.at(1)), o.kmax, o.cap);
    }
    r1 = profile.rs.front();
    const std::vector<exp_t> hits = monotonicity_probe(profile);
    if (o.json) {
        nlohmann::json j{{"rs", profile.rs},
                         {"monotonicity_counterexamples", hits}};
        j["c_index"] = profile.c_index ? nlohmann::json(*profile.c_index)
                                       : nlohmann::json(nullptr);
        nlohmann::json bounds = nlohmann::json::array();
        for (exp_t k = 1; k <= profile.rs.size(); ++k)
            bounds.push_back(hoa_bound(r1, k));
        j["bounds"] = bounds;
        out << j << "\n";
        return exit_ok;
    }
    out << "  k  r(I^k)  bound\n";
    for (std::size_t i = 0; i < profile.rs.size(); ++i)
        out << "  " << i + 1 << "  " << profile.rs[i] << "  "
            << hoa_bound(r1, i + 1) << "\n";
    if (profile.c_index)
        out << "c(I) = " << *profile.c_index << "\n";
    else
        out << "c(I): none within kmax = " << o.kmax << "\n";
    if (hits.empty()) {
        out << "monotonicity conjecture: no counterexample on this profile\n";
    } else {
        out << "monotonicity conjecture: counterexamples at k =";
        for (exp_t k : hits) out << " " << k;
        out << "\n";
    }
    return exit_ok;
}

inline int cmd_sumset(const options& o, std::ostream& out) {
    const exponent_set A = parse_exponent_set(o.positional.at(1));
    if (o.positional.size() >= 3) {
        const exponent_set B = parse_exponent_set(o.positional.at(2));
        const exponent_set S(A.g + B.g, sumset(A.members, B.members));
        if (o.json) {
            out << json_of(S) << "\n";
        } else {
            out << "A + B = " << to_string(S) << " (g = " << S.g << ")\n";
        }
        return exit_ok;
    }
    if (o.json) {
        nlohmann::json folds = nlohmann::json::array();
        for (exp_t k = 1; k <= o.kmax; ++k)
            folds.push_back(
                {{"k", k}, {"set", json_of(exponent_set(k * A.g, k_fold(A.members, k)))}});
        out << nlohmann::json{{"folds", folds}} << "\n";
        return exit_ok;
    }
    for (exp_t k = 1; k <= o.kmax; ++k)
        out << k << "A = " << to_string(exponent_set(k * A.g, k_fold(A.members, k)))
            << "\n";
    return exit_ok;
}

inline survey_table rset_table(exp_t a, exp_t b) {
    survey_table t;
    t.parameter = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    for (exp_t j : r_set(a, b)) t.rows.push_back({j, 1});
    t.total = t.rows.size();
    return t;
}

inline int cmd_survey(const options& o, std::ostream& out) {
    if (o.positional.size() < 3) throw parse_error("survey wants a subcommand and its arguments");
    const std::string& sub = o.positional.at(1);
    const exp_t first = parse_flag_value(sub, o.positional.at(2));
    if (sub == "m" || sub == "n") {
        const survey_table t = sub == "m" ? m_table(first) : n_table(first);
        if (o.csv) out << csv_of(t);
        else if (o.json) out << json_of(t) << "\n";
        else {
            out << "a = " << t.parameter << ", total = " << t.total << "\n";
            out << "  j  count  ratio\n";
            for (const survey_row& row : t.rows)
                out << "  " << row.j << "  " << row.count << "  " << row.count
                    << "/" << t.total << "\n";
        }
        return exit_ok;
    }
    if (sub == "rset") {
        if (o.positional.size() < 4) throw parse_error("survey rset wants two frame sides");
        const exp_t b = parse_flag_value(sub, o.positional.at(3));
        const std::set<exp_t> rs = r_set(first, b);
        if (o.csv) {
            out << csv_of(rset_table(first, b));
        } else if (o.json) {
            out << nlohmann::json{{"set", std::vector<exp_t>(rs.begin(), rs.end())}}
                << "\n";
        } else {
            out << "realized reduction numbers: {";
            bool comma = false;
            for (exp_t j : rs) {
                if (comma) out << ", ";
                out << j;
                comma = true;
            }
            out << "}\n";
        }
        return exit_ok;
    }
    if (sub == "ourlimits") {
        const ourlimits_report rep = ourlimits_check(first);
        if (o.json)
            out << nlohmann::json{{"p", first}, {"gap", rep.gap}, {"holds", rep.holds}}
                << "\n";
        else
            out << "gap = " << rep.gap << " (bound holds: "
                << (rep.holds ? "yes" : "no") << ")\n";
        return exit_ok;
    }
    if (sub == "specialnight") {
        const exp_t bmax = o.bmax == 0 ? 2 * first : o.bmax;
        const coverage_report rep = specialnight_check(first, bmax);
        if (o.json) {
            out << nlohmann::json{
                       {"a", first},
                       {"bmax", bmax},
                       {"covered", std::vector<exp_t>(rep.covered.begin(), rep.covered.end())},
                       {"complete", rep.complete}}
                << "\n";
        } else {
            out << "covered = {";
            bool comma = false;
            for (exp_t j : rep.covered) {
                if (comma) out << ", ";
                out << j;
                comma = true;
            }
            out << "} up to bmax = " << bmax << "\n";
            out << "complete: " << (rep.complete ? "yes" : "no") << "\n";
        }
        return exit_ok;
    }
    throw parse_error("unknown survey subcommand '" + sub + "'");
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    try {
        const detail::options o = detail::parse_options(args);
        if (o.positional.empty() || o.positional[0] == "help" ||
            o.positional[0] == "--help") {
            detail::print_usage(out);
            return o.positional.empty() ? exit_usage : exit_ok;
        }
        const std::string& verb = o.positional[0];
        auto need = [&](std::size_t n) {
            if (o.positional.size() < n && !(n == 2 && o.set_literal))
                throw parse_error(verb + " is missing its argument");
        };
        if (verb == "classify") { need(2); return detail::cmd_classify(o, out); }
        if (verb == "reduce")   { need(2); return detail::cmd_reduce(o, out); }
        if (verb == "rnum")     { need(2); return detail::cmd_rnum(o, out); }
        if (verb == "closure")  { need(2); return detail::cmd_closure(o, out); }
        if (verb == "powers")   { need(2); return detail::cmd_powers(o, out); }
        if (verb == "sumset")   { need(2); return detail::cmd_sumset(o, out); }
        if (verb == "survey")   { return detail::cmd_survey(o, out); }
        throw parse_error("unknown command '" + verb + "'");
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    }
}

}  // namespace staircase::cli
