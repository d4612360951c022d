#ifndef SEVERI_HIRZEBRUCH_HPP
#define SEVERI_HIRZEBRUCH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "severi/patterns.hpp"
#include "severi/weierstrass.hpp"

namespace severi {

/// Linear-equivalence data d*C0 + f*F on the Hirzebruch surface F_k.
struct HirzebruchClass {
    long k = 0;
    long d = 1;
    long f = 0;

    void validate() const;
};

/// g_max = k d(d-1)/2 + (d-1)(f-1).
long genus_max(const HirzebruchClass& klass);

/// Multiplicity of the limit fiber F_0 under the toric degeneration:
/// f + k when C_inf is a component of the limit, f otherwise.
long m0_star(const HirzebruchClass& klass, bool c_infinity_is_component);

struct Node {
    enum class Type { fiber_section, section_pair };
    Type type = Type::fiber_section;
    long i = 0;  // fiber index (fs) or smaller section index (ss), 1-based
    long j = 0;  // section index (fs) or larger section index (ss), 1-based
    long l = 0;  // slot 1..k for section pairs, 0 for fiber-section nodes

    friend bool operator==(const Node& a, const Node& b) {
        return a.type == b.type && a.i == b.i && a.j == b.j && a.l == b.l;
    }
    std::string str() const;
};

struct PairLocus {
    RationalPoly diff;              // p_i - p_j
    PatternReport pattern;          // square-free signature of diff
    std::vector<Rat> rational_roots;  // sorted; binds slots when complete
};

/// The maximally degenerate curve C-cross: d sections, f fibers, and its
/// labeled node inventory (k per section pair, one per fiber-section pair).
struct DegenerateModel {
    HirzebruchClass klass;
    std::vector<RationalPoly> sections;  // p_j(z), degree <= k
    std::vector<Rat> fibers;             // distinct base points
    std::vector<Node> nodes;             // canonical order
    std::map<std::pair<long, long>, PairLocus> pair_loci;

    long node_count() const { return static_cast<long>(nodes.size()); }
    long vertex_count() const { return klass.d + klass.f; }
    /// Vertex id: sections 0..d-1, fibers d..d+f-1.
    long section_vertex(long j) const { return j - 1; }
    long fiber_vertex(long i) const { return klass.d + i - 1; }
    /// Endpoints of node e in the dual graph.
    std::pair<long, long> node_vertices(long e) const;
    long node_index(const Node& n) const;
};

/// Builds C-cross from explicit sections and fiber points; enforces the
/// maximal-nodal genericity preconditions (exact degree-k square-free pairwise
/// differences, no triple points, fibers off the pair loci).
DegenerateModel build_cx(const HirzebruchClass& klass, const std::vector<RationalPoly>& sections,
                         const std::vector<Rat>& fiber_points);

/// Default monomial-plus-constant family alpha_j z^k + beta_j with seeded
/// distinct coefficients (validated, re-drawn on degeneracy).
DegenerateModel build_cx_default(const HirzebruchClass& klass, std::uint64_t seed = 0);

/// Toric rescaling lift: a_i(z) -> lambda^-(f+ik) a_i(lambda z). Requires the
/// linear-system degree bounds deg a_i <= f + ik.
WeierstrassPoly toric_degenerate(const WeierstrassPoly& P, const HirzebruchClass& klass,
                                 const Rat& lambda);

struct Multigraph {
    long vertices = 0;
    std::vector<std::pair<long, long>> edges;
};

/// Loop-free dual multigraph: vertices = components, edges = nodes (aligned
/// with the node order of the model).
Multigraph dual_graph(const DegenerateModel& model);

struct SmoothingSet {
    std::vector<long> chosen;  // node indices, strictly increasing

    static SmoothingSet of(std::vector<long> nodes);
};

struct SmoothingAnalysis {
    bool irreducible = false;
    std::optional<long> genus;          // defined when irreducible
    std::vector<std::vector<long>> components;  // vertex partition
};

SmoothingAnalysis smoothing_analysis(const DegenerateModel& model, const SmoothingSet& s);

/// Number of spanning trees of the dual graph: brute-force subset sweep up to
/// 16 edges (OpenMP), matrix-tree determinant beyond.
mpz_class count_rational_smoothings(const DegenerateModel& model);

/// The individual routes, kept separate for cents-level testing and benchmarks.
mpz_class spanning_tree_count_serial(const Multigraph& g);
mpz_class spanning_tree_count_parallel(const Multigraph& g);
mpz_class spanning_tree_count_matrix_tree(const Multigraph& g);

/// All spanning trees as sorted edge-index lists (for desk-scale sweeps).
std::vector<std::vector<long>> enumerate_spanning_trees(const Multigraph& g);

struct SectionCount {
    long count = 0;
    std::optional<long> monodromy_order;
    bool monodromy_inferred = false;      // true for the g=1 swap
    std::optional<long> plane_image_nodes;  // the g=3 nodal sextic check
};

/// Curve counts of degree-1 sections on a generic ruled surface over a genus-g
/// base, g in 0..3.
SectionCount section_count(long g);

}  // namespace severi

#endif
