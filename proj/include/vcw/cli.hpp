#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vcw/boolean_expr.hpp"
#include "vcw/convex_order.hpp"
#include "vcw/core.hpp"
#include "vcw/generators.hpp"
#include "vcw/independence.hpp"
#include "vcw/json_io.hpp"
#include "vcw/type_density.hpp"
#include "vcw/udtfs.hpp"

namespace vcw::cli {

// exit codes: 0 ok, 2 invalid input, 3 precondition violated, 4 cap exceeded
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCap = 4;

namespace detail {

struct Common {
    std::string input;           // empty: standard input
    std::string format = "json";
    bool dedupe = false;
    Limits limits;
};

inline void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--input", c.input, "read the set-system JSON from a file instead of stdin");
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_flag("--dedupe", c.dedupe, "collapse members with identical masks");
    cmd->add_option("--max-elements", c.limits.max_elements, "universe size cap");
    cmd->add_option("--max-members", c.limits.max_members, "member count cap");
}

inline std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open file \"" + path + "\"");
    return slurp(f);
}

inline SetFamily load_family(const Common& c, std::istream& in) {
    const std::string text = c.input.empty() ? slurp(in) : read_file(c.input);
    SetFamily fam = parse_family(text, c.limits);
    if (c.dedupe) fam = fam.deduped();
    return fam;
}

inline std::vector<std::size_t> parse_size_list(const std::string& s, char sep = ',') {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        try {
            out.push_back(std::stoull(item));
        } catch (const std::exception&) {
            throw ParseError("bad number \"" + item + "\" in list \"" + s + "\"");
        }
    }
    if (out.empty()) throw ParseError("empty list \"" + s + "\"");
    return out;
}

// "3,5;7,2" -> {{3,5},{7,2}}
inline std::vector<std::vector<std::size_t>> parse_tuple_list(const std::string& s) {
    std::vector<std::vector<std::size_t>> out;
    std::stringstream ss(s);
    std::string group;
    while (std::getline(ss, group, ';')) out.push_back(parse_size_list(group));
    return out;
}

inline json report_to_json(const ConvexOrderReport& rep) {
    json arr = json::array();
    for (const auto& e : rep.entries)
        arr.push_back({{"name", e.name}, {"polarity", e.polarity}, {"components", e.components}});
    return arr;
}

inline json crossing_to_json(const CrossingWitness& w, const SetFamily& f) {
    json patterns = json::array();
    for (const auto& p : w.patterns)
        patterns.push_back({{"signs", {p.sign_a ? 1 : 0, p.sign_b ? 1 : 0}},
                            {"witness", f.universe.name(p.witness_element)}});
    return {{"ok", false},
            {"members", {f.name(w.member_a), f.name(w.member_b)}},
            {"patterns", patterns}};
}

inline void table_row(std::ostream& os, const std::string& k, const std::string& v) {
    os << std::left << std::setw(18) << k << v << "\n";
}

inline void emit_report_table(std::ostream& os, const ConvexOrderReport& rep) {
    os << std::left << std::setw(20) << "name" << std::setw(10) << "polarity"
       << "components\n";
    for (const auto& e : rep.entries)
        os << std::left << std::setw(20) << e.name << std::setw(10) << e.polarity
           << e.components << "\n";
}

} // namespace detail

// Parses argv (without the program name), runs one verb, writes the whole
// result to `out` at the end. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    using namespace detail;

    CLI::App app{"set-system combinatorics workbench"};
    app.require_subcommand(1);

    Common common;

    // analysis verbs
    auto* iddim = app.add_subcommand("iddim", "independence dimension with a level cap");
    std::size_t iddim_cap = 8;
    iddim->add_option("--cap", iddim_cap, "search cap (levels)");

    auto* certify = app.add_subcommand("certify", "certify independence dimension <= 1");

    auto* order = app.add_subcommand("order", "synthesize a convexity witness order");
    std::string order_mode = "id1";
    order->add_option("--mode", order_mode, "laminar: every member one run; id1: member or complement")
        ->check(CLI::IsMember({"laminar", "id1"}));

    auto* verify = app.add_subcommand("verify", "component counts of members under an order");
    std::string verify_order_file;
    bool verify_allow_complement = false;
    verify->add_option("--order", verify_order_file, "order JSON file")->required();
    verify->add_flag("--allow-complement", verify_allow_complement,
                     "report the better of a member and its complement");

    auto* types = app.add_subcommand("types", "count realized membership signatures");

    auto* density = app.add_subcommand("density", "fit the type-count growth exponent");
    std::string density_schedule = "4,8,16,32";
    density->add_option("--schedule", density_schedule,
                        "member-prefix sizes, e.g. 4,8,16,32");

    auto* ladder = app.add_subcommand("ladder", "longest order-property ladder");
    std::size_t ladder_cap = 8;
    ladder->add_option("--cap", ladder_cap, "maximum ladder length searched");

    auto* udtfs1 = app.add_subcommand("udtfs1", "rank-1 type reconstruction report");
    std::string udtfs_element;
    udtfs1->add_option("--element", udtfs_element, "trace one element's reconstruction");

    auto* combo = app.add_subcommand("combo", "evaluate a boolean combination of members");
    std::string combo_expr, combo_order_file;
    combo->add_option("--expr", combo_expr, "expression, e.g. \"A & !B\"")->required();
    combo->add_option("--order", combo_order_file, "also count components under this order");

    auto* ray = app.add_subcommand("ray", "n-th leftward ray of a member along an order");
    std::size_t ray_n = 1;
    std::string ray_order_file, ray_set;
    ray->add_option("--n", ray_n, "ray index, >= 1")->required();
    ray->add_option("--order", ray_order_file, "order JSON file (default: input order)");
    ray->add_option("--set", ray_set, "member name")->required();

    for (CLI::App* cmd : {iddim, certify, order, verify, types, density, ladder, udtfs1, combo, ray})
        add_common(cmd, common);

    // generators
    auto* gen = app.add_subcommand("gen", "emit an example structure as interchange JSON");
    gen->require_subcommand(1);
    std::uint64_t seed = 0;
    std::string gen_out;
    std::size_t g_m = 0, g_n = 2, g_k = 3, g_depth = 3, g_flips = 0, g_b = 0;
    std::string g_cuts, g_corners, g_arcs, g_mode = "independent";

    auto* gl = gen->add_subcommand("linear", "initial segments {x : x < b} on a chain");
    gl->add_option("--m", g_m, "chain length")->required();
    gl->add_option("--cuts", g_cuts, "explicit cut points, e.g. 2,4");
    gl->add_option("--b", g_b, "number of seeded distinct cuts");

    auto* gg = gen->add_subcommand("grid", "lower orthants of corners on an n-dim grid");
    gg->add_option("--n", g_n, "dimension, 1..3");
    gg->add_option("--m", g_m, "grid side")->required();
    gg->add_option("--corners", g_corners, "explicit corners, e.g. 3,5;7,2");
    gg->add_option("--b", g_b, "number of seeded generic corners");

    auto* gc = gen->add_subcommand("cyclic", "cyclic-order arcs R(x,b,c) on a cycle");
    gc->add_option("--m", g_m, "cycle length")->required();
    gc->add_option("--arcs", g_arcs, "arc parameter pairs, e.g. 1,4;3,7")->required();

    auto* gp = gen->add_subcommand("predicates", "independent bits or a nested chain");
    gp->add_option("--k", g_k, "predicate count")->required();
    gp->add_option("--mode", g_mode, "independent | nested")
        ->check(CLI::IsMember({"independent", "nested"}));
    gp->add_option("--m", g_m, "universe size")->required();

    auto* gr = gen->add_subcommand("random-id1", "random laminar family with complement flips");
    gr->add_option("--m", g_m, "universe size")->required();
    gr->add_option("--depth", g_depth, "split depth");
    gr->add_option("--flips", g_flips, "members to complement");

    auto* go = gen->add_subcommand("reduct-order", "strict dominance lower sets on an m x m grid");
    go->add_option("--m", g_m, "grid side")->required();

    for (CLI::App* cmd : {gl, gg, gc, gp, gr, go}) {
        cmd->add_option("--seed", seed, "generator seed");
        cmd->add_option("--out", gen_out, "write to a file instead of stdout");
        cmd->add_option("--max-elements", common.limits.max_elements, "universe size cap");
        cmd->add_option("--max-members", common.limits.max_members, "member count cap");
    }

    std::vector<const char*> argv;
    argv.push_back("vcw");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitInvalid;
    }

    std::ostringstream os;  // everything is written once, at the end
    int code = kExitOk;
    const bool as_table = common.format == "table";

    try {
        if (gen->parsed()) {
            SetFamily fam;
            if (gl->parsed()) {
                std::vector<std::size_t> cuts;
                if (!g_cuts.empty()) cuts = parse_size_list(g_cuts);
                else if (g_b > 0)
                    for (const auto& c : grid_corners(seed, 1, g_m, g_b)) cuts.push_back(c[0]);
                fam = gen_linear(g_m, cuts, common.limits);
            } else if (gg->parsed()) {
                std::vector<std::vector<std::size_t>> corners;
                if (!g_corners.empty()) corners = parse_tuple_list(g_corners);
                else if (g_b > 0) corners = grid_corners(seed, g_n, g_m, g_b);
                fam = gen_grid(g_n, g_m, corners, common.limits);
            } else if (gc->parsed()) {
                std::vector<std::pair<std::size_t, std::size_t>> arcs;
                for (const auto& t : parse_tuple_list(g_arcs)) {
                    if (t.size() != 2) throw ParseError("arcs need exactly two endpoints");
                    arcs.emplace_back(t[0], t[1]);
                }
                fam = gen_cyclic(g_m, arcs, common.limits);
            } else if (gp->parsed()) {
                fam = gen_predicates(g_k,
                                     g_mode == "independent" ? PredicateMode::Independent
                                                             : PredicateMode::Nested,
                                     g_m, common.limits);
            } else if (gr->parsed()) {
                fam = gen_random_id1(g_m, g_depth, g_flips, seed, common.limits);
            } else {
                fam = gen_reduct_order(g_m, common.limits);
            }
            const std::string text = family_to_json(fam).dump();
            if (gen_out.empty()) {
                os << text << "\n";
            } else {
                std::ofstream f(gen_out, std::ios::binary);
                if (!f) throw ParseError("cannot open output file \"" + gen_out + "\"");
                f << text << "\n";
            }
        } else if (iddim->parsed()) {
            const SetFamily fam = load_family(common, in);
            const IdResult res = independence_dimension(fam, iddim_cap);
            if (as_table) {
                table_row(os, "dimension", std::to_string(res.dimension));
                std::string w;
                for (std::size_t i : res.witness) w += (w.empty() ? "" : " ") + fam.name(i);
                table_row(os, "witness", w);
                table_row(os, "capped", res.capped ? "yes" : "no");
            } else {
                json names = json::array();
                for (std::size_t i : res.witness) names.push_back(fam.name(i));
                os << json{{"dimension", res.dimension}, {"witness", names},
                           {"capped", res.capped}}
                          .dump()
                   << "\n";
            }
        } else if (certify->parsed()) {
            const SetFamily fam = load_family(common, in);
            if (auto w = certify_id_at_most_one(fam)) {
                if (as_table) {
                    table_row(os, "ok", "no");
                    table_row(os, "crossing", fam.name(w->member_a) + " " + fam.name(w->member_b));
                } else {
                    os << crossing_to_json(*w, fam).dump() << "\n";
                }
            } else {
                if (as_table) table_row(os, "ok", "yes");
                else os << json{{"ok", true}}.dump() << "\n";
            }
        } else if (order->parsed()) {
            const SetFamily fam = load_family(common, in);
            if (order_mode == "laminar") {
                const LaminarOrderResult res = order_laminar(fam);
                if (res.crossing) {
                    os << json{{"ok", false},
                               {"crossing", {fam.name(res.crossing->first),
                                             fam.name(res.crossing->second)}}}
                              .dump()
                       << "\n";
                    code = kExitPrecondition;
                } else {
                    const auto rep = verify_convex_order(fam, *res.order, false);
                    if (as_table) {
                        os << "order: ";
                        for (std::size_t idx : res.order->permutation)
                            os << fam.universe.name(idx) << " ";
                        os << "\n";
                        emit_report_table(os, rep);
                    } else {
                        os << json{{"order", order_to_json(*res.order, fam.universe)},
                                   {"report", report_to_json(rep)}}
                                  .dump()
                           << "\n";
                    }
                }
            } else {
                const Id1OrderResult res = order_id1(fam);
                if (res.crossing) {
                    os << crossing_to_json(*res.crossing, fam).dump() << "\n";
                    code = kExitPrecondition;
                } else {
                    if (as_table) {
                        os << "order: ";
                        for (std::size_t idx : res.order->permutation)
                            os << fam.universe.name(idx) << " ";
                        os << "\n";
                        emit_report_table(os, res.report);
                    } else {
                        os << json{{"order", order_to_json(*res.order, fam.universe)},
                                   {"report", report_to_json(res.report)}}
                                  .dump()
                           << "\n";
                    }
                }
            }
        } else if (verify->parsed()) {
            const SetFamily fam = load_family(common, in);
            const LinearOrder ord = parse_order(read_file(verify_order_file), fam.universe);
            const auto rep = verify_convex_order(fam, ord, verify_allow_complement);
            if (as_table) emit_report_table(os, rep);
            else
                os << json{{"report", report_to_json(rep)}, {"all_convex", rep.all_convex()}}
                          .dump()
                   << "\n";
        } else if (types->parsed()) {
            const SetFamily fam = load_family(common, in);
            const TraceTable t = trace_table(fam);
            const auto rows = distinct_rows(t);
            if (as_table) {
                table_row(os, "count", std::to_string(rows.size()));
                for (const auto& r : rows) os << r.to_string() << "\n";
            } else {
                json arr = json::array();
                for (const auto& r : rows) arr.push_back(r.to_string());
                os << json{{"count", rows.size()}, {"distinct_rows", arr}}.dump() << "\n";
            }
        } else if (density->parsed()) {
            const SetFamily fam = load_family(common, in);
            std::vector<std::pair<std::size_t, std::size_t>> points;
            for (std::size_t b : parse_size_list(density_schedule)) {
                if (b > fam.size())
                    throw PreconditionError("schedule size " + std::to_string(b) +
                                            " exceeds the family size " +
                                            std::to_string(fam.size()));
                SetFamily prefix{fam.universe,
                                 {fam.members.begin(), fam.members.begin() +
                                                           static_cast<std::ptrdiff_t>(b)}};
                points.emplace_back(b, type_count(prefix));
            }
            const DensityEstimate est = density_fit(points);
            if (as_table) {
                for (const auto& [b, c] : est.points)
                    os << std::left << std::setw(8) << b << c << "\n";
                table_row(os, "slope", std::to_string(est.slope));
                table_row(os, "intercept", std::to_string(est.intercept));
                table_row(os, "r_squared", std::to_string(est.r_squared));
            } else {
                json pts = json::array();
                for (const auto& [b, c] : est.points) pts.push_back({b, c});
                os << json{{"points", pts},
                           {"slope", est.slope},
                           {"intercept", est.intercept},
                           {"r_squared", est.r_squared}}
                          .dump()
                   << "\n";
            }
        } else if (ladder->parsed()) {
            const SetFamily fam = load_family(common, in);
            const LadderResult res = ladder_index(fam, ladder_cap);
            json rows = json::array(), cols = json::array();
            for (std::size_t e : res.row_elements) rows.push_back(fam.universe.name(e));
            for (std::size_t b : res.col_members) cols.push_back(fam.name(b));
            if (as_table) {
                table_row(os, "ladder", std::to_string(res.length));
                std::string r, c;
                for (std::size_t e : res.row_elements) r += fam.universe.name(e) + " ";
                for (std::size_t b : res.col_members) c += fam.name(b) + " ";
                table_row(os, "rows", r);
                table_row(os, "cols", c);
            } else {
                os << json{{"ladder", res.length}, {"rows", rows}, {"cols", cols}}.dump()
                   << "\n";
            }
        } else if (udtfs1->parsed()) {
            const SetFamily fam = load_family(common, in);
            if (!udtfs_element.empty()) {
                const std::size_t e = fam.universe.index_of(udtfs_element);
                if (certify_id_at_most_one(fam))
                    throw PreconditionError("family is not ID <= 1; reconstruction skipped");
                const SignedInstance sel = minimal_instance_selector(fam, e);
                json decisions = json::array();
                for (std::size_t j = 0; j < fam.size(); ++j)
                    decisions.push_back({{"member", fam.name(j)},
                                         {"predicted", delta_decide(fam, sel, j)},
                                         {"actual", fam.mask(j).test(e)}});
                os << json{{"element", udtfs_element},
                           {"selector", {{"member", fam.name(sel.member)},
                                         {"polarity", sel.polarity ? 1 : 0}}},
                           {"decisions", decisions}}
                          .dump()
                   << "\n";
            } else {
                const Rank1Report rep = rank1_report(fam);
                if (as_table) {
                    table_row(os, "certified", rep.certified ? "yes" : "no");
                    table_row(os, "elements_checked", std::to_string(rep.elements_checked));
                    table_row(os, "exact", rep.exact ? "yes" : "no");
                    table_row(os, "scheme_size", std::to_string(rep.scheme_size));
                } else {
                    os << json{{"certified", rep.certified},
                               {"elements_checked", rep.elements_checked},
                               {"exact", rep.exact},
                               {"scheme_size", rep.scheme_size}}
                              .dump()
                       << "\n";
                }
            }
        } else if (combo->parsed()) {
            const SetFamily fam = load_family(common, in);
            const Bitset mask = boolean_combo(fam, combo_expr);
            json doc{{"elements", mask_to_names(mask, fam.universe)}, {"count", mask.count()}};
            if (!combo_order_file.empty()) {
                const LinearOrder ord = parse_order(read_file(combo_order_file), fam.universe);
                const ComboBound cb = combo_component_bound(fam, ord, combo_expr);
                doc["components"] = cb.components;
                doc["distinct_members"] = cb.distinct_members;
            }
            if (as_table) {
                for (auto& [k, v] : doc.items())
                    table_row(os, k, v.dump());
            } else {
                os << doc.dump() << "\n";
            }
        } else if (ray->parsed()) {
            const SetFamily fam = load_family(common, in);
            const std::size_t idx = fam.member_index(ray_set);
            const LinearOrder ord = ray_order_file.empty()
                                        ? LinearOrder::identity(fam.universe.size())
                                        : parse_order(read_file(ray_order_file), fam.universe);
            const Bitset ray_mask = leftward_ray(ord, fam.mask(idx), ray_n);
            os << json{{"elements", mask_to_names(ray_mask, fam.universe)}}.dump() << "\n";
        }
    } catch (const CapError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    out << os.str();
    return code;
}

} // namespace vcw::cli
