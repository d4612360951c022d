#include "severi/hirzebruch.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "severi/errors.hpp"
#include "severi/resultant.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace severi {

void HirzebruchClass::validate() const {
    if (k < 0) throw std::invalid_argument("Hirzebruch index k must be >= 0");
    if (d < 1) throw std::invalid_argument("section count d must be >= 1");
    if (f < 0) throw std::invalid_argument("fiber count f must be >= 0");
    if (k == 0 && f < 1) throw std::invalid_argument("k = 0 requires f >= 1");
}

long genus_max(const HirzebruchClass& klass) {
    klass.validate();
    return klass.k * klass.d * (klass.d - 1) / 2 + (klass.d - 1) * (klass.f - 1);
}

long m0_star(const HirzebruchClass& klass, bool c_infinity_is_component) {
    klass.validate();
    return klass.f + (c_infinity_is_component ? klass.k : 0);
}

std::string Node::str() const {
    std::ostringstream os;
    if (type == Type::fiber_section)
        os << "fs(" << i << "," << j << ")";
    else
        os << "ss(" << i << "," << j << "," << l << ")";
    return os.str();
}

std::pair<long, long> DegenerateModel::node_vertices(long e) const {
    const Node& n = nodes[static_cast<std::size_t>(e)];
    if (n.type == Node::Type::fiber_section) return {fiber_vertex(n.i), section_vertex(n.j)};
    return {section_vertex(n.i), section_vertex(n.j)};
}

long DegenerateModel::node_index(const Node& n) const {
    for (std::size_t e = 0; e < nodes.size(); ++e)
        if (nodes[e] == n) return static_cast<long>(e);
    throw std::invalid_argument("node not in model: " + n.str());
}

DegenerateModel build_cx(const HirzebruchClass& klass, const std::vector<RationalPoly>& sections,
                         const std::vector<Rat>& fiber_points) {
    klass.validate();
    if (static_cast<long>(sections.size()) != klass.d)
        throw std::invalid_argument("expected d section polynomials");
    if (static_cast<long>(fiber_points.size()) != klass.f)
        throw std::invalid_argument("expected f fiber points");
    for (const auto& p : sections)
        if (p.degree() > klass.k)
            throw std::invalid_argument("section polynomial degree exceeds k");
    for (std::size_t i = 0; i < fiber_points.size(); ++i)
        for (std::size_t j = i + 1; j < fiber_points.size(); ++j)
            if (fiber_points[i] == fiber_points[j])
                throw std::invalid_argument("fiber points must be pairwise distinct");

    DegenerateModel model;
    model.klass = klass;
    model.sections = sections;
    model.fibers = fiber_points;

    for (long i = 1; i <= klass.d; ++i)
        for (long j = i + 1; j <= klass.d; ++j) {
            RationalPoly diff = sections[static_cast<std::size_t>(i - 1)] -
                                sections[static_cast<std::size_t>(j - 1)];
            if (diff.is_zero()) throw std::invalid_argument("coincident sections " +
                                                            std::to_string(i) + "," +
                                                            std::to_string(j));
            if (diff.degree() != klass.k)
                throw std::invalid_argument(
                    "sections " + std::to_string(i) + "," + std::to_string(j) +
                    " meet at infinity: difference degree below k");
            if (klass.k >= 1 && RationalPoly::gcd(diff, diff.derivative()).degree() >= 1)
                throw std::invalid_argument("non-simple pairwise intersection of sections " +
                                            std::to_string(i) + "," + std::to_string(j));
            for (const Rat& zf : fiber_points)
                if (diff(zf) == 0)
                    throw std::invalid_argument("fiber through a section-pair node at z = " +
                                                rat_str(zf));
            PairLocus locus;
            locus.diff = diff;
            if (klass.k >= 1) {
                locus.pattern = pattern_of(diff.monic());
                auto rs = diff.rational_roots();
                for (const auto& [root, mult] : rs.roots) locus.rational_roots.push_back(root);
            }
            model.pair_loci.emplace(std::make_pair(i, j), std::move(locus));
        }
    // triple-point exclusion: no two pair loci sharing a section may share a root
    for (long a = 1; a <= klass.d; ++a)
        for (long b = a + 1; b <= klass.d; ++b)
            for (long c = b + 1; c <= klass.d; ++c) {
                const auto& ab = model.pair_loci.at({a, b}).diff;
                const auto& ac = model.pair_loci.at({a, c}).diff;
                if (klass.k >= 1 && RationalPoly::gcd(ab, ac).degree() >= 1)
                    throw std::invalid_argument("triple point among sections " +
                                                std::to_string(a) + "," + std::to_string(b) +
                                                "," + std::to_string(c));
            }

    for (long i = 1; i <= klass.d; ++i)
        for (long j = i + 1; j <= klass.d; ++j)
            for (long l = 1; l <= klass.k; ++l)
                model.nodes.push_back({Node::Type::section_pair, i, j, l});
    for (long i = 1; i <= klass.f; ++i)
        for (long j = 1; j <= klass.d; ++j)
            model.nodes.push_back({Node::Type::fiber_section, i, j, 0});

    const long expected = klass.k * klass.d * (klass.d - 1) / 2 + klass.d * klass.f;
    if (model.node_count() != expected)
        throw internal_consistency_error("node inventory does not match k d(d-1)/2 + d f");
    return model;
}

DegenerateModel build_cx_default(const HirzebruchClass& klass, std::uint64_t seed) {
    klass.validate();
    SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x5851f42d4c957f2dULL);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<RationalPoly> sections;
        std::vector<Rat> fibers;
        std::vector<long> alphas, betas;
        bool ok = true;
        for (long j = 0; j < klass.d && ok; ++j) {
            long a = 0, b = 0;
            for (int tries = 0; tries < 100; ++tries) {
                a = rng.small_int(6);
                if (std::find(alphas.begin(), alphas.end(), a) == alphas.end()) break;
            }
            for (int tries = 0; tries < 100; ++tries) {
                b = rng.small_int(9);
                if (std::find(betas.begin(), betas.end(), b) == betas.end()) break;
            }
            if (std::find(alphas.begin(), alphas.end(), a) != alphas.end() ||
                std::find(betas.begin(), betas.end(), b) != betas.end()) {
                ok = false;
                break;
            }
            alphas.push_back(a);
            betas.push_back(b);
            RationalPoly p = RationalPoly::constant(Rat(b));
            if (klass.k >= 1) p += RationalPoly::monomial(Rat(a), static_cast<std::size_t>(klass.k));
            sections.push_back(p);
        }
        if (!ok) continue;
        for (long i = 1; i <= klass.f; ++i) fibers.push_back(Rat(100 + i + rng.small_int(20)));
        std::sort(fibers.begin(), fibers.end());
        if (std::adjacent_find(fibers.begin(), fibers.end()) != fibers.end()) continue;
        try {
            return build_cx(klass, sections, fibers);
        } catch (const std::invalid_argument&) {
            continue;  // degenerate draw, re-sample
        }
    }
    // canonical fallback: alpha_j = j, beta_j = j^2 never degenerates
    std::vector<RationalPoly> sections;
    for (long j = 1; j <= klass.d; ++j) {
        RationalPoly p = RationalPoly::constant(Rat(j * j));
        if (klass.k >= 1) p += RationalPoly::monomial(Rat(j), static_cast<std::size_t>(klass.k));
        sections.push_back(p);
    }
    std::vector<Rat> fibers;
    for (long i = 1; i <= klass.f; ++i) fibers.push_back(Rat(i));
    return build_cx(klass, sections, fibers);
}

WeierstrassPoly toric_degenerate(const WeierstrassPoly& P, const HirzebruchClass& klass,
                                 const Rat& lambda) {
    klass.validate();
    if (lambda == 0) throw std::invalid_argument("toric parameter must be nonzero");
    if (P.d != static_cast<int>(klass.d))
        throw std::invalid_argument("fiber degree of P must match the class degree d");
    for (int i = 0; i <= P.d; ++i)
        if (P.a[static_cast<std::size_t>(i)].degree() > klass.f + i * klass.k)
            throw std::invalid_argument("not in linear system d*C0 + f*F: deg a_" +
                                        std::to_string(i) + " exceeds f + ik");
    std::vector<RationalPoly> out(P.a.size());
    for (int i = 0; i <= P.d; ++i) {
        const Rat scale = rat_pow(lambda, -(klass.f + i * klass.k));
        out[static_cast<std::size_t>(i)] =
            scale * P.a[static_cast<std::size_t>(i)].compose_affine(lambda, Rat(0));
    }
    return WeierstrassPoly(P.d, std::move(out));
}

Multigraph dual_graph(const DegenerateModel& model) {
    Multigraph g;
    g.vertices = model.vertex_count();
    for (long e = 0; e < model.node_count(); ++e) g.edges.push_back(model.node_vertices(e));
    return g;
}

SmoothingSet SmoothingSet::of(std::vector<long> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return SmoothingSet{std::move(nodes)};
}

namespace {

struct UnionFind {
    std::vector<long> parent;
    explicit UnionFind(long n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0L);
    }
    long find(long x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(long a, long b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

bool mask_is_spanning_tree(const Multigraph& g, std::uint32_t mask) {
    UnionFind uf(g.vertices);
    long used = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (mask & (1u << e)) {
            ++used;
            if (!uf.unite(g.edges[e].first, g.edges[e].second)) return false;
        }
    return used == g.vertices - 1;
}

}  // namespace

SmoothingAnalysis smoothing_analysis(const DegenerateModel& model, const SmoothingSet& s) {
    const Multigraph g = dual_graph(model);
    for (long e : s.chosen)
        if (e < 0 || e >= model.node_count())
            throw std::invalid_argument("smoothing set contains an unknown node index");
    UnionFind uf(g.vertices);
    for (long e : s.chosen) uf.unite(g.edges[static_cast<std::size_t>(e)].first,
                                     g.edges[static_cast<std::size_t>(e)].second);
    std::map<long, std::vector<long>> byroot;
    for (long v = 0; v < g.vertices; ++v) byroot[uf.find(v)].push_back(v);
    SmoothingAnalysis out;
    for (auto& [root, verts] : byroot) out.components.push_back(verts);
    out.irreducible = out.components.size() == 1;
    if (out.irreducible)
        out.genus = static_cast<long>(s.chosen.size()) - (g.vertices - 1);
    return out;
}

mpz_class spanning_tree_count_serial(const Multigraph& g) {
    if (g.edges.size() > 31) throw std::invalid_argument("subset sweep limited to 31 edges");
    if (g.vertices == 1) return 1;
    const std::uint32_t full = 1u << g.edges.size();
    long count = 0;
    for (std::uint32_t mask = 0; mask < full; ++mask)
        if (__builtin_popcount(mask) == g.vertices - 1 && mask_is_spanning_tree(g, mask)) ++count;
    return count;
}

mpz_class spanning_tree_count_parallel(const Multigraph& g) {
    if (g.edges.size() > 31) throw std::invalid_argument("subset sweep limited to 31 edges");
    if (g.vertices == 1) return 1;
    const std::uint32_t full = 1u << g.edges.size();
    long count = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : count) schedule(static)
#endif
    for (std::uint32_t mask = 0; mask < full; ++mask)
        if (__builtin_popcount(mask) == g.vertices - 1 && mask_is_spanning_tree(g, mask)) ++count;
    return count;
}

mpz_class spanning_tree_count_matrix_tree(const Multigraph& g) {
    if (g.vertices == 1) return 1;
    const std::size_t n = static_cast<std::size_t>(g.vertices) - 1;
    std::vector<std::vector<Rat>> lap(n, std::vector<Rat>(n, Rat(0)));
    for (const auto& [a, b] : g.edges) {
        if (a < static_cast<long>(n)) lap[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] += 1;
        if (b < static_cast<long>(n)) lap[static_cast<std::size_t>(b)][static_cast<std::size_t>(b)] += 1;
        if (a < static_cast<long>(n) && b < static_cast<long>(n)) {
            lap[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] -= 1;
            lap[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] -= 1;
        }
    }
    const Rat det = det_rational(std::move(lap));
    if (det.get_den() != 1) throw internal_consistency_error("matrix-tree determinant not integral");
    return det.get_num();
}

mpz_class count_rational_smoothings(const DegenerateModel& model) {
    const Multigraph g = dual_graph(model);
    if (g.edges.size() <= 16) return spanning_tree_count_parallel(g);
    return spanning_tree_count_matrix_tree(g);
}

std::vector<std::vector<long>> enumerate_spanning_trees(const Multigraph& g) {
    if (g.edges.size() > 24) throw std::invalid_argument("tree enumeration limited to 24 edges");
    std::vector<std::vector<long>> out;
    if (g.vertices == 1) {
        out.push_back({});
        return out;
    }
    const std::uint32_t full = 1u << g.edges.size();
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (__builtin_popcount(mask) != g.vertices - 1) continue;
        if (!mask_is_spanning_tree(g, mask)) continue;
        std::vector<long> edges;
        for (std::size_t e = 0; e < g.edges.size(); ++e)
            if (mask & (1u << e)) edges.push_back(static_cast<long>(e));
        out.push_back(std::move(edges));
    }
    return out;
}

SectionCount section_count(long g) {
    if (g < 0 || g > 3) throw std::invalid_argument("section counts are only tabulated for genus 0..3");
    SectionCount out;
    switch (g) {
        case 0:
            out.count = 1;
            break;
        case 1:
            out.count = 2;
            out.monodromy_order = 2;
            out.monodromy_inferred = true;
            break;
        case 2:
            out.count = 4;
            out.monodromy_order = 24;  // Sym_4
            break;
        case 3: {
            out.count = 8;
            out.monodromy_order = 40320;  // Sym_8
            // nodal count of the planar image of degree 3g-3
            const long deg = 3 * g - 3;
            out.plane_image_nodes = (deg - 1) * (deg - 2) / 2 - g;
            break;
        }
    }
    return out;
}

}  // namespace severi
