#include <climits>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "severi/json_io.hpp"
#include "severi/resultant.hpp"
#include "severi/selftest.hpp"

namespace {

using namespace severi;

struct GlobalOpts {
    std::string format = "text";
    std::uint64_t seed = 0;
    bool trace = false;
};

long max_edges_cap() {
    if (const char* env = std::getenv("SEVERI_MAX_EDGES")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("SEVERI_MAX_EDGES must be a positive integer");
    }
    return 16;
}

json read_json_input(const std::string& path, const std::string& inline_json) {
    if (!inline_json.empty()) return json::parse(inline_json);
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open input file: " + path);
        return json::parse(in);
    }
    return json::parse(std::cin);
}

void emit(const GlobalOpts& g, const json& j, const std::string& text) {
    if (g.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_dscr(const GlobalOpts& g, const std::string& path, const std::string& inline_json) {
    const WeierstrassPoly P = wpoly_from_json(read_json_input(path, inline_json));
    auto [vertical, rest] = factor_vertical(P);
    const RationalPoly dsc = rest.d >= 1 ? discriminant(rest) : RationalPoly::constant(1);

    json orders = json::array();
    std::ostringstream txt;
    txt << "input degree d = " << P.d << "\n";
    txt << "vertical factor: " << vertical.str() << "\n";
    txt << "discriminant of the non-vertical part: " << dsc.str() << "\n";
    if (dsc.is_zero())
        txt << "  vanishes identically: the curve carries a multiple non-vertical component\n";
    if (!dsc.is_constant()) {
        const auto rs = dsc.rational_roots();
        for (const auto& [root, mult] : rs.roots) {
            orders.push_back(json{{"z", rat_str(root)}, {"ord", mult}});
            txt << "  ord at z = " << rat_str(root) << ": " << mult << "\n";
        }
        if (rs.cofactor.degree() >= 1) {
            txt << "  unresolved factor (no rational roots): " << rs.cofactor.str() << "\n";
        }
    }
    json out{{"d", P.d},
             {"vertical", poly_to_json(vertical)},
             {"discriminant", poly_to_json(dsc)},
             {"orders", orders},
             {"multiple_component", dsc.is_zero()}};
    if (!dsc.is_constant()) {
        const auto rs = dsc.rational_roots();
        if (rs.cofactor.degree() >= 1) out["unresolved"] = poly_to_json(rs.cofactor);
    }
    emit(g, out, txt.str());
    return 0;
}

int cmd_delta(const GlobalOpts& g, const std::string& path, const std::string& inline_json,
              long dtotal, const std::string& curve_json, long euler) {
    const json input = read_json_input(path, inline_json);
    if (!curve_json.empty()) {
        // per-line mode: the curve plus a list of germs covering its singular lines
        const WeierstrassPoly P = wpoly_from_json(json::parse(curve_json));
        std::map<Rat, CurveGerm> germs;
        for (const auto& e : input.is_array() ? input : json::array({input})) {
            CurveGerm c = germ_from_json(e);
            const Rat z0 = c.z0;
            germs.emplace(z0, std::move(c));
        }
        const DeltaPerLineResult res = delta_per_line(
            P, germs, euler == LONG_MIN ? std::nullopt : std::optional<long>(euler));
        std::ostringstream txt;
        for (const auto& [z0, ld] : res.per_line) {
            txt << "line z = " << rat_str(z0) << ": delta " << ld.delta;
            if (ld.ord2_tag != Ord2Case::not_ord2)
                txt << " (ord-2 case: " << ord2_case_name(ld.ord2_tag) << ")";
            txt << "\n";
        }
        txt << "total: " << res.total << "\n";
        if (res.global_check == GlobalCheck::verified)
            txt << "global identity deg(Dscr) = d - chi + 2 delta holds exactly\n";
        else if (res.global_check == GlobalCheck::not_certifiable)
            txt << "global identity not certifiable: irrational loci remain\n";
        for (const auto& f : res.unresolved)
            txt << "unresolved locus: roots of " << f.str() << "\n";
        emit(g, delta_per_line_to_json(res), txt.str());
        return 0;
    }
    const CurveGerm c = germ_from_json(input);
    const DeltaReport rep = curve_delta(c, dtotal);
    std::ostringstream txt;
    txt << "delta_total = " << rep.delta_total << " (vertical term " << rep.vertical_term << ")\n";
    txt << "per-branch deltas:";
    for (long x : rep.per_branch) txt << " " << x;
    txt << "\nord(Dscr) = " << rep.ord_dscr << ", chi = " << rep.euler_char << ", d = " << rep.d
        << ", b = " << rep.b << "\n";
    if (rep.identities_checked)
        txt << "identity check: ord = d - chi + 2 delta holds exactly\n";
    emit(g, delta_report_to_json(rep), txt.str());
    return 0;
}

int cmd_patterns(const GlobalOpts& g, const std::string& pattern_csv,
                 const std::string& poly_json) {
    if (!pattern_csv.empty()) {
        std::vector<long> parts;
        std::stringstream ss(pattern_csv);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(std::stol(item));
        const MultiplicityPattern m(parts);
        const auto degs = strict_degenerations(m);
        json jd = json::array();
        std::ostringstream txt;
        txt << "pattern " << m.str() << ": degree " << m.degree() << ", stratum dimension "
            << stratum_dimension(m) << "\n";
        txt << "strict degenerations (" << degs.size() << "):";
        for (const auto& x : degs) {
            jd.push_back(pattern_to_json(x));
            txt << " " << x.str();
        }
        txt << "\n";
        emit(g,
             json{{"pattern", pattern_to_json(m)},
                  {"degree", m.degree()},
                  {"dimension", stratum_dimension(m)},
                  {"strict_degenerations", jd}},
             txt.str());
        return 0;
    }
    if (!poly_json.empty()) {
        const RationalPoly p = poly_from_json(json::parse(poly_json));
        const PatternReport rep = pattern_of(p.monic());
        std::ostringstream txt;
        txt << "pattern of " << p.monic().str() << ": " << rep.str() << "\n";
        emit(g, pattern_report_to_json(rep), txt.str());
        return 0;
    }
    throw std::invalid_argument("patterns: pass --pattern or --poly");
}

DegenerateModel model_from_flags(const GlobalOpts& g, long k, long d, long f,
                                 const std::string& sections_json, const std::string& fibers_json) {
    const HirzebruchClass klass{k, d, f};
    if (sections_json.empty() && fibers_json.empty()) return build_cx_default(klass, g.seed);
    std::vector<RationalPoly> sections;
    for (const auto& e : json::parse(sections_json)) sections.push_back(poly_from_json(e));
    std::vector<Rat> fibers;
    if (!fibers_json.empty())
        for (const auto& e : json::parse(fibers_json))
            fibers.push_back(rat_parse(e.get<std::string>()));
    return build_cx(klass, sections, fibers);
}

int cmd_model(const GlobalOpts& g, long k, long d, long f, const std::string& sections_json,
              const std::string& fibers_json) {
    const DegenerateModel model = model_from_flags(g, k, d, f, sections_json, fibers_json);
    const Multigraph graph = dual_graph(model);
    const mpz_class trees = count_rational_smoothings(model);
    std::ostringstream txt;
    txt << "F_" << k << " class d=" << d << " f=" << f << "\n";
    txt << "nodes: " << model.node_count() << " (k d(d-1)/2 + d f)\n";
    txt << "g_max: " << genus_max(model.klass) << "\n";
    txt << "spanning trees (rational irreducible smoothings): " << trees.get_str() << "\n";
    txt << "sections:\n";
    for (std::size_t j = 0; j < model.sections.size(); ++j)
        txt << "  p_" << (j + 1) << " = " << model.sections[j].str() << "\n";
    txt << "dual graph edges:\n";
    for (long e = 0; e < model.node_count(); ++e) {
        auto [a, b] = graph.edges[static_cast<std::size_t>(e)];
        txt << "  " << e << ": " << model.nodes[static_cast<std::size_t>(e)].str() << " = (" << a
            << "," << b << ")\n";
    }
    json adj = json::array();
    for (const auto& [a, b] : graph.edges) adj.push_back(json::array({a, b}));
    json out = model_to_json(model);
    out["g_max"] = genus_max(model.klass);
    out["spanning_trees"] = trees.get_str();
    out["dual_graph"] = json{{"vertices", graph.vertices}, {"edges", adj}};
    emit(g, out, txt.str());
    return 0;
}

int cmd_smoothings(const GlobalOpts& g, long k, long d, long f, const std::string& chosen_csv,
                   const std::string& sections_json, const std::string& fibers_json) {
    const DegenerateModel model = model_from_flags(g, k, d, f, sections_json, fibers_json);
    if (!chosen_csv.empty()) {
        std::vector<long> chosen;
        std::stringstream ss(chosen_csv);
        std::string item;
        while (std::getline(ss, item, ',')) chosen.push_back(std::stol(item));
        const SmoothingSet s = SmoothingSet::of(chosen);
        const auto an = smoothing_analysis(model, s);
        std::ostringstream txt;
        txt << "chosen " << s.chosen.size() << " nodes: "
            << (an.irreducible ? "irreducible" : "reducible");
        if (an.genus) txt << ", genus " << *an.genus;
        txt << "\ncomponents:";
        for (const auto& comp : an.components) {
            txt << " {";
            for (std::size_t i = 0; i < comp.size(); ++i) txt << (i ? "," : "") << comp[i];
            txt << "}";
        }
        txt << "\n";
        json out{{"irreducible", an.irreducible}, {"components", an.components}};
        if (an.genus) out["genus"] = *an.genus;
        emit(g, out, txt.str());
        return 0;
    }
    const Multigraph graph = dual_graph(model);
    const mpz_class count = count_rational_smoothings(model);
    std::ostringstream txt;
    txt << "spanning trees: " << count.get_str() << "\n";
    json out{{"spanning_trees", count.get_str()}};
    if (static_cast<long>(graph.edges.size()) <= max_edges_cap()) {
        const auto trees = enumerate_spanning_trees(graph);
        json jt = json::array();
        for (const auto& t : trees) jt.push_back(t);
        out["trees"] = jt;
        txt << "enumerated " << trees.size() << " trees (cap SEVERI_MAX_EDGES = "
            << max_edges_cap() << ")\n";
    }
    emit(g, out, txt.str());
    return 0;
}

int cmd_monodromy(const GlobalOpts& g, long k, long d, long f, const std::string& tree_csv,
                  const std::string& sections_json, const std::string& fibers_json) {
    const DegenerateModel model = model_from_flags(g, k, d, f, sections_json, fibers_json);
    const Multigraph graph = dual_graph(model);

    std::vector<SmoothingSet> trees;
    if (!tree_csv.empty()) {
        std::vector<long> t;
        std::stringstream ss(tree_csv);
        std::string item;
        while (std::getline(ss, item, ',')) t.push_back(std::stol(item));
        trees.push_back(SmoothingSet::of(t));
    } else {
        if (static_cast<long>(graph.edges.size()) > max_edges_cap())
            throw std::invalid_argument(
                "model exceeds SEVERI_MAX_EDGES for all-tree enumeration; pass --tree");
        for (const auto& t : enumerate_spanning_trees(graph)) trees.push_back(SmoothingSet::of(t));
    }

    json jtrees = json::array();
    std::ostringstream txt;
    const mpz_class base_order = group_order(base_group(model));
    txt << "base monodromy group order: " << base_order.get_str() << "\n";
    bool all_full = true;
    for (const auto& T : trees) {
        const auto fm = full_monodromy(model, T);
        all_full = all_full && fm.is_full_symmetric;
        json jt{{"tree", T.chosen},
                {"free_nodes", fm.free_nodes},
                {"order", fm.order.get_str()},
                {"is_full_symmetric", fm.is_full_symmetric},
                {"reachable_trees", fm.reachable_trees},
                {"group", perm_group_to_json(fm.group)}};
        txt << "tree {";
        for (std::size_t i = 0; i < T.chosen.size(); ++i) txt << (i ? "," : "") << T.chosen[i];
        txt << "}: order " << fm.order.get_str() << " on " << fm.free_nodes.size()
            << " free nodes, full symmetric: " << (fm.is_full_symmetric ? "yes" : "no") << "\n";
        if (g.trace) {
            const auto conc = concentrate(model, T);
            jt["concentrate"] = json{{"target", conc.concentrated.chosen},
                                     {"trace", trace_to_json(conc.trace)}};
            txt << "  concentrated to {";
            for (std::size_t i = 0; i < conc.concentrated.chosen.size(); ++i)
                txt << (i ? "," : "") << conc.concentrated.chosen[i];
            txt << "} in " << conc.trace.steps.size() << " moves\n";
        }
        jtrees.push_back(std::move(jt));
    }
    emit(g, json{{"base_group_order", base_order.get_str()}, {"trees", jtrees}}, txt.str());
    return all_full ? 0 : 3;
}

int cmd_sections(const GlobalOpts& g, long genus) {
    const SectionCount sc = section_count(genus);
    std::ostringstream txt;
    txt << "g = " << genus << ": " << sc.count << " curves";
    json out{{"genus", genus}, {"count", sc.count}};
    if (sc.monodromy_order) {
        txt << ", monodromy order " << *sc.monodromy_order
            << (sc.monodromy_inferred ? " (inferred from the exhibited swap)" : "");
        out["monodromy_order"] = *sc.monodromy_order;
        out["monodromy_inferred"] = sc.monodromy_inferred;
    }
    if (sc.plane_image_nodes) {
        txt << ", plane-image nodes " << *sc.plane_image_nodes;
        out["plane_image_nodes"] = *sc.plane_image_nodes;
    }
    txt << "\n";
    emit(g, out, txt.str());
    return 0;
}

int cmd_selftest(const GlobalOpts& g) {
    const auto results = selftest::run_acceptance(g.seed, &std::cout);
    if (g.format == "json") {
        json out = json::array();
        for (const auto& r : results)
            out.push_back(json{{"criterion", r.number},
                               {"title", r.title},
                               {"pass", r.pass},
                               {"detail", r.detail},
                               {"seconds", r.seconds}});
        std::cout << out.dump(2) << "\n";
    }
    return selftest::all_passed(results) ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"severi: exact invariants, degenerations and node monodromy of curves on "
                 "Hirzebruch surfaces"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", g.seed, "seed for randomized sweeps and default models");
    app.add_flag("--trace", g.trace, "include move traces in monodromy reports");

    std::string input_path, inline_json, curve_json;
    long dtotal = -1, euler = LONG_MIN;
    auto* dscr = app.add_subcommand("dscr", "discriminant and vertical factor of a Weierstrass polynomial");
    dscr->add_option("--input", input_path, "JSON input file (default: stdin)");
    dscr->add_option("--json", inline_json, "inline JSON input");

    auto* delta = app.add_subcommand("delta", "virtual nodal numbers of a curve germ");
    delta->add_option("--input", input_path, "JSON input file (default: stdin)");
    delta->add_option("--json", inline_json, "inline JSON input");
    delta->add_option("--dtotal", dtotal, "enclosing fiber degree (default: sum of branch degrees)");
    delta->add_option("--curve", curve_json,
                      "Weierstrass polynomial JSON: switch to per-line mode, the main input then "
                      "lists the covering germs");
    delta->add_option("--euler", euler,
                      "Euler characteristic of the normalization: verify the global order "
                      "identity in per-line mode");

    std::string pattern_csv, poly_json;
    auto* patterns = app.add_subcommand("patterns", "multiplicity-pattern poset queries");
    patterns->add_option("--pattern", pattern_csv, "comma-separated parts, e.g. 2,2,1");
    patterns->add_option("--poly", poly_json, "polynomial JSON to analyze");

    long k = 0, d = 1, f = 0, genus = 0;
    std::string sections_json, fibers_json, chosen_csv, tree_csv;
    auto* model = app.add_subcommand("model", "build the maximally degenerate curve C-cross");
    model->add_option("--k", k, "Hirzebruch index")->required();
    model->add_option("--d", d, "number of sections")->required();
    model->add_option("--f", f, "number of fibers")->required();
    model->add_option("--sections", sections_json, "explicit section polynomials (JSON array)");
    model->add_option("--fibers", fibers_json, "explicit fiber points (JSON array of rationals)");

    auto* smoothings = app.add_subcommand("smoothings", "smoothing-set analysis and tree counts");
    smoothings->add_option("--k", k)->required();
    smoothings->add_option("--d", d)->required();
    smoothings->add_option("--f", f)->required();
    smoothings->add_option("--chosen", chosen_csv, "comma-separated node indices to smooth");
    smoothings->add_option("--sections", sections_json);
    smoothings->add_option("--fibers", fibers_json);

    auto* monodromy = app.add_subcommand("monodromy", "full-symmetric monodromy verification");
    monodromy->add_option("--k", k)->required();
    monodromy->add_option("--d", d)->required();
    monodromy->add_option("--f", f)->required();
    monodromy->add_option("--tree", tree_csv, "spanning tree as comma-separated node indices");
    monodromy->add_option("--sections", sections_json);
    monodromy->add_option("--fibers", fibers_json);

    auto* sections = app.add_subcommand("sections", "degree-1 curve counts on ruled surfaces");
    sections->add_option("--genus", genus, "base genus, 0..3")->required();

    app.add_subcommand("selftest", "run the full acceptance battery");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("dscr")) return cmd_dscr(g, input_path, inline_json);
        if (app.got_subcommand("delta"))
            return cmd_delta(g, input_path, inline_json, dtotal, curve_json, euler);
        if (app.got_subcommand("patterns")) return cmd_patterns(g, pattern_csv, poly_json);
        if (app.got_subcommand("model")) return cmd_model(g, k, d, f, sections_json, fibers_json);
        if (app.got_subcommand("smoothings"))
            return cmd_smoothings(g, k, d, f, chosen_csv, sections_json, fibers_json);
        if (app.got_subcommand("monodromy"))
            return cmd_monodromy(g, k, d, f, tree_csv, sections_json, fibers_json);
        if (app.got_subcommand("sections")) return cmd_sections(g, genus);
        if (app.got_subcommand("selftest")) return cmd_selftest(g);
    } catch (const severi::concentration_stuck_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const severi::internal_consistency_error& e) {
        std::cerr << "internal consistency violation: " << e.what() << "\n";
        return 4;
    } catch (const severi::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
