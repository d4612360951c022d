#include "severi/json_io.hpp"

namespace severi {

json poly_to_json(const RationalPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(rat_str(c));
    return a;
}

RationalPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of strings");
    std::vector<Rat> c;
    for (const auto& e : j) {
        if (e.is_string()) c.push_back(rat_parse(e.get<std::string>()));
        else if (e.is_number_integer()) c.push_back(Rat(e.get<long>()));
        else throw std::invalid_argument("polynomial coefficients must be strings or integers");
    }
    return RationalPoly(std::move(c));
}

json wpoly_to_json(const WeierstrassPoly& P) {
    json a = json::array();
    for (const auto& p : P.a) a.push_back(poly_to_json(p));
    return json{{"d", P.d}, {"a", a}};
}

WeierstrassPoly wpoly_from_json(const json& j) {
    if (!j.contains("d") || !j.contains("a"))
        throw std::invalid_argument("Weierstrass polynomial JSON needs fields d and a");
    const int d = j.at("d").get<int>();
    std::vector<RationalPoly> a;
    for (const auto& e : j.at("a")) a.push_back(poly_from_json(e));
    return WeierstrassPoly(d, std::move(a));
}

json pattern_to_json(const MultiplicityPattern& m) {
    return json(m.parts());
}

MultiplicityPattern pattern_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("pattern JSON must be an integer array");
    return MultiplicityPattern(j.get<std::vector<long>>());
}

json pattern_report_to_json(const PatternReport& r) {
    json unresolved = json::array();
    for (const auto& [mult, deg] : r.unresolved)
        unresolved.push_back(json{{"multiplicity", mult}, {"degree", deg}});
    return json{{"pattern", pattern_to_json(r.pattern)},
                {"complete", r.complete},
                {"unresolved", unresolved}};
}

json germ_to_json(const CurveGerm& c) {
    json branches = json::array();
    for (const auto& b : c.branches)
        branches.push_back(json{{"m", b.m}, {"phi", poly_to_json(b.phi)}});
    return json{{"z0", rat_str(c.z0)}, {"vertical_mult", c.vertical_mult}, {"branches", branches}};
}

CurveGerm germ_from_json(const json& j) {
    CurveGerm c;
    c.z0 = rat_parse(j.at("z0").get<std::string>());
    c.vertical_mult = j.value("vertical_mult", 0L);
    if (j.contains("branches"))
        for (const auto& e : j.at("branches")) {
            BranchGerm b;
            b.z0 = c.z0;
            b.m = e.at("m").get<long>();
            b.phi = poly_from_json(e.at("phi"));
            c.branches.push_back(std::move(b));
        }
    c.validate();
    return c;
}

json delta_report_to_json(const DeltaReport& r) {
    return json{{"delta_total", r.delta_total}, {"per_branch", r.per_branch},
                {"pairwise", r.pairwise},       {"vertical_term", r.vertical_term},
                {"ord_dscr", r.ord_dscr},       {"euler_char", r.euler_char},
                {"d", r.d},                     {"b", r.b},
                {"identities_checked", r.identities_checked}};
}

json delta_per_line_to_json(const DeltaPerLineResult& r) {
    json lines = json::array();
    for (const auto& [z0, ld] : r.per_line) {
        json entry{{"z", rat_str(z0)},
                   {"delta", ld.delta},
                   {"report", delta_report_to_json(ld.report)}};
        if (ld.ord2_tag != Ord2Case::not_ord2) entry["ord2_case"] = ord2_case_name(ld.ord2_tag);
        lines.push_back(std::move(entry));
    }
    json unresolved = json::array();
    for (const auto& f : r.unresolved) unresolved.push_back(poly_to_json(f));
    json out{{"per_line", lines}, {"total", r.total}, {"unresolved", unresolved}};
    if (r.global_check != GlobalCheck::not_requested)
        out["global_identity"] =
            r.global_check == GlobalCheck::verified ? "verified" : "not-certifiable";
    return out;
}

json model_to_json(const DegenerateModel& m) {
    json sections = json::array();
    for (const auto& p : m.sections) sections.push_back(poly_to_json(p));
    json fibers = json::array();
    for (const auto& z : m.fibers) fibers.push_back(rat_str(z));
    json nodes = json::array();
    for (const auto& n : m.nodes) {
        if (n.type == Node::Type::fiber_section)
            nodes.push_back(json{{"type", "fs"}, {"i", n.i}, {"j", n.j}});
        else
            nodes.push_back(json{{"type", "ss"}, {"i", n.i}, {"j", n.j}, {"l", n.l}});
    }
    return json{{"k", m.klass.k}, {"d", m.klass.d},         {"f", m.klass.f},
                {"sections", sections}, {"fibers", fibers}, {"nodes", nodes}};
}

DegenerateModel model_from_json(const json& j) {
    HirzebruchClass klass{j.at("k").get<long>(), j.at("d").get<long>(), j.at("f").get<long>()};
    std::vector<RationalPoly> sections;
    for (const auto& e : j.at("sections")) sections.push_back(poly_from_json(e));
    std::vector<Rat> fibers;
    for (const auto& e : j.at("fibers")) fibers.push_back(rat_parse(e.get<std::string>()));
    return build_cx(klass, sections, fibers);
}

json trace_to_json(const MoveTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        const char* kind = s.move.kind == MoveKind::triangle     ? "triangle"
                           : s.move.kind == MoveKind::rectangle ? "rectangle"
                                                                : "base-relabel";
        steps.push_back(json{{"kind", kind},
                             {"support", s.move.support},
                             {"transposed", json::array({s.move.transposed.first,
                                                         s.move.transposed.second})},
                             {"resulting", s.resulting}});
    }
    return json{{"steps", steps}};
}

json perm_group_to_json(const PermGroup& g) {
    json gens = json::array();
    for (const auto& p : g.generators) {
        json cycles = json::array();
        for (const auto& c : p.cycles()) cycles.push_back(c);
        gens.push_back(cycles);
    }
    return json{{"points", g.n}, {"generators", gens}};
}

}  // namespace severi
