#include "severi/monodromy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace severi {

Perm Perm::identity(long n) {
    std::vector<long> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0L);
    return Perm(std::move(v));
}

Perm::Perm(std::vector<long> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (long x : img_) {
        if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("not a bijection");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Perm Perm::transposition(long n, long a, long b) {
    Perm p = identity(n);
    std::swap(p.img_[static_cast<std::size_t>(a)], p.img_[static_cast<std::size_t>(b)]);
    return p;
}

bool Perm::is_identity() const {
    for (long i = 0; i < size(); ++i)
        if (img_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<long> v(img_.size());
    for (long i = 0; i < size(); ++i) v[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
    Perm p;
    p.img_ = std::move(v);
    return p;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<long> v(a.img_.size());
    for (long i = 0; i < a.size(); ++i) v[static_cast<std::size_t>(i)] = a(b(i));
    Perm p;
    p.img_ = std::move(v);
    return p;
}

std::vector<long> Perm::apply_to_sorted(const std::vector<long>& set) const {
    std::vector<long> out;
    out.reserve(set.size());
    for (long x : set) out.push_back((*this)(x));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<long>> Perm::cycles() const {
    std::vector<std::vector<long>> out;
    std::vector<char> seen(img_.size(), 0);
    for (long i = 0; i < size(); ++i) {
        if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
        std::vector<long> cyc;
        long x = i;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            cyc.push_back(x);
            x = (*this)(x);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Perm::cycles_str() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
        os << "(";
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
        os << ")";
    }
    return os.str();
}

namespace {

// Sims filter: keeps at most n(n-1)/2 generators spanning the same group.
class SimsTable {
  public:
    explicit SimsTable(long n) : n_(n) {}

    void insert(Perm p) {
        while (!p.is_identity()) {
            long i = 0;
            while (p(i) == i) ++i;
            const auto key = std::make_pair(i, p(i));
            auto it = table_.find(key);
            if (it == table_.end()) {
                table_.emplace(key, std::move(p));
                return;
            }
            p = it->second.inverse() * p;
        }
    }

    std::vector<Perm> generators() const {
        std::vector<Perm> out;
        out.reserve(table_.size());
        for (const auto& [k, p] : table_) out.push_back(p);
        return out;
    }

  private:
    long n_;
    std::map<std::pair<long, long>, Perm> table_;
};

mpz_class order_rec(const std::vector<Perm>& gens_in, long n) {
    SimsTable filter(n);
    for (const auto& g : gens_in) filter.insert(g);
    const std::vector<Perm> gens = filter.generators();
    if (gens.empty()) return 1;
    long base = -1;
    for (long i = 0; i < n && base < 0; ++i)
        for (const auto& g : gens)
            if (g(i) != i) {
                base = i;
                break;
            }
    if (base < 0) return 1;
    // orbit of base with transversal
    std::map<long, Perm> transversal;
    std::deque<long> queue;
    transversal.emplace(base, Perm::identity(n));
    queue.push_back(base);
    while (!queue.empty()) {
        const long x = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            const long y = g(x);
            if (!transversal.count(y)) {
                transversal.emplace(y, g * transversal.at(x));
                queue.push_back(y);
            }
        }
    }
    // Schreier generators of the point stabilizer
    std::vector<Perm> stab;
    for (const auto& [x, ux] : transversal)
        for (const auto& g : gens) {
            Perm s = transversal.at(g(x)).inverse() * (g * ux);
            if (!s.is_identity()) stab.push_back(std::move(s));
        }
    return mpz_class(static_cast<long>(transversal.size())) * order_rec(stab, n);
}

}  // namespace

mpz_class group_order(const PermGroup& g) {
    return order_rec(g.generators, g.n);
}

std::vector<long> orbit_of(const PermGroup& g, long point) {
    std::set<long> seen{point};
    std::deque<long> queue{point};
    while (!queue.empty()) {
        const long x = queue.front();
        queue.pop_front();
        for (const auto& p : g.generators) {
            const long y = p(x);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Perm> setwise_stabilizer_generators(const PermGroup& g, const std::vector<long>& set) {
    // orbit of the set with a transversal; Schreier generators stabilize it
    std::map<std::vector<long>, Perm> transversal;
    std::deque<std::vector<long>> queue;
    transversal.emplace(set, Perm::identity(g.n));
    queue.push_back(set);
    std::vector<Perm> out;
    while (!queue.empty()) {
        const std::vector<long> cur = queue.front();
        queue.pop_front();
        const Perm& ucur = transversal.at(cur);
        for (const auto& p : g.generators) {
            std::vector<long> img = p.apply_to_sorted(cur);
            auto it = transversal.find(img);
            if (it == transversal.end()) {
                transversal.emplace(std::move(img), p * ucur);
                queue.push_back(p.apply_to_sorted(cur));
            } else {
                Perm s = it->second.inverse() * (p * ucur);
                if (!s.is_identity()) out.push_back(std::move(s));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PermGroup base_group(const DegenerateModel& model) {
    const long n = model.node_count();
    const long d = model.klass.d, f = model.klass.f, k = model.klass.k;
    const long domain = n + d + f;
    PermGroup g;
    g.n = domain;

    auto idx = [&](const Node& node) { return model.node_index(node); };
    auto identity_img = [&] {
        std::vector<long> img(static_cast<std::size_t>(domain));
        std::iota(img.begin(), img.end(), 0L);
        return img;
    };

    // adjacent slot transpositions within each section pair
    for (long i = 1; i <= d; ++i)
        for (long j = i + 1; j <= d; ++j)
            for (long l = 1; l < k; ++l)
                g.generators.push_back(Perm::transposition(
                    domain, idx({Node::Type::section_pair, i, j, l}),
                    idx({Node::Type::section_pair, i, j, l + 1})));

    // section swaps s <-> s+1, relabeling every node and the section points
    for (long s = 1; s < d; ++s) {
        std::vector<long> img = identity_img();
        auto tau = [s](long x) { return x == s ? s + 1 : (x == s + 1 ? s : x); };
        for (long e = 0; e < n; ++e) {
            Node node = model.nodes[static_cast<std::size_t>(e)];
            if (node.type == Node::Type::fiber_section) {
                node.j = tau(node.j);
            } else {
                long a = tau(node.i), b = tau(node.j);
                node.i = std::min(a, b);
                node.j = std::max(a, b);
            }
            img[static_cast<std::size_t>(e)] = idx(node);
        }
        std::swap(img[static_cast<std::size_t>(n + s - 1)], img[static_cast<std::size_t>(n + s)]);
        g.generators.push_back(Perm(std::move(img)));
    }

    // fiber swaps
    for (long s = 1; s < f; ++s) {
        std::vector<long> img = identity_img();
        auto tau = [s](long x) { return x == s ? s + 1 : (x == s + 1 ? s : x); };
        for (long e = 0; e < n; ++e) {
            Node node = model.nodes[static_cast<std::size_t>(e)];
            if (node.type == Node::Type::fiber_section) node.i = tau(node.i);
            img[static_cast<std::size_t>(e)] = idx(node);
        }
        std::swap(img[static_cast<std::size_t>(n + d + s - 1)],
                  img[static_cast<std::size_t>(n + d + s)]);
        g.generators.push_back(Perm(std::move(img)));
    }
    if (g.generators.empty()) g.generators.push_back(Perm::identity(domain));
    return g;
}

namespace {

bool contains(const std::vector<long>& sorted, long x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

bool is_fiber_vertex(const DegenerateModel& m, long v) { return v >= m.klass.d; }

// All triangle constellations with the support role on a given smoothed-set
// predicate; emits (support, {q2, q3}) with the component triple checked for
// at most one vertical line.
std::vector<Move> enumerate_triangles(const DegenerateModel& model,
                                      const std::vector<long>& smoothed_sorted,
                                      bool transposed_must_be_free) {
    std::vector<Move> out;
    const long n = model.node_count();
    for (long q1 = 0; q1 < n; ++q1) {
        if (!contains(smoothed_sorted, q1)) continue;
        auto [d2, d3] = model.node_vertices(q1);
        for (long q2 = 0; q2 < n; ++q2) {
            if (q2 == q1) continue;
            auto [a2, b2] = model.node_vertices(q2);
            // q2 must join d3 with a third component d1
            long d1 = -1;
            if (a2 == d3) d1 = b2;
            else if (b2 == d3) d1 = a2;
            else continue;
            if (d1 == d2) continue;
            for (long q3 = 0; q3 < n; ++q3) {
                if (q3 == q1 || q3 == q2) continue;
                auto [a3, b3] = model.node_vertices(q3);
                if (!((a3 == d1 && b3 == d2) || (a3 == d2 && b3 == d1))) continue;
                long verticals = (is_fiber_vertex(model, d1) ? 1 : 0) +
                                 (is_fiber_vertex(model, d2) ? 1 : 0) +
                                 (is_fiber_vertex(model, d3) ? 1 : 0);
                if (verticals > 1) continue;
                if (transposed_must_be_free &&
                    (contains(smoothed_sorted, q2) || contains(smoothed_sorted, q3)))
                    continue;
                Move mv;
                mv.kind = MoveKind::triangle;
                mv.support = {q1};
                mv.transposed = {std::min(q2, q3), std::max(q2, q3)};
                out.push_back(std::move(mv));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Move& x, const Move& y) {
        return std::tie(x.support, x.transposed) < std::tie(y.support, y.transposed);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Move& x, const Move& y) {
                              return x.support == y.support && x.transposed == y.transposed;
                          }),
              out.end());
    return out;
}

std::vector<Move> enumerate_rectangles(const DegenerateModel& model,
                                       const std::vector<long>& smoothed_sorted,
                                       bool transposed_must_be_free) {
    std::vector<Move> out;
    const long d = model.klass.d, f = model.klass.f;
    // sides A (support) and B (transposed) from one ruling; E, F from the other
    auto scan = [&](bool sides_are_sections) {
        const long nside = sides_are_sections ? d : f;
        const long nother = sides_are_sections ? f : d;
        for (long A = 1; A <= nside; ++A)
            for (long B = 1; B <= nside; ++B) {
                if (B == A) continue;
                for (long E = 1; E <= nother; ++E)
                    for (long Fo = E + 1; Fo <= nother; ++Fo) {
                        auto node_of = [&](long side, long other) {
                            Node nd;
                            nd.type = Node::Type::fiber_section;
                            nd.i = sides_are_sections ? other : side;
                            nd.j = sides_are_sections ? side : other;
                            return model.node_index(nd);
                        };
                        const long q11 = node_of(A, E), q12 = node_of(A, Fo);
                        const long q21 = node_of(B, E), q22 = node_of(B, Fo);
                        if (!contains(smoothed_sorted, q11) || !contains(smoothed_sorted, q12))
                            continue;
                        if (transposed_must_be_free && (contains(smoothed_sorted, q21) ||
                                                        contains(smoothed_sorted, q22)))
                            continue;
                        Move mv;
                        mv.kind = MoveKind::rectangle;
                        mv.support = {std::min(q11, q12), std::max(q11, q12)};
                        mv.transposed = {std::min(q21, q22), std::max(q21, q22)};
                        out.push_back(std::move(mv));
                    }
            }
    };
    scan(true);
    scan(false);
    std::sort(out.begin(), out.end(), [](const Move& x, const Move& y) {
        return std::tie(x.support, x.transposed) < std::tie(y.support, y.transposed);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Move& x, const Move& y) {
                              return x.support == y.support && x.transposed == y.transposed;
                          }),
              out.end());
    return out;
}

std::vector<Move> enumerate_moves(const DegenerateModel& model,
                                  const std::vector<long>& smoothed_sorted,
                                  bool transposed_must_be_free) {
    return model.klass.k >= 1
               ? enumerate_triangles(model, smoothed_sorted, transposed_must_be_free)
               : enumerate_rectangles(model, smoothed_sorted, transposed_must_be_free);
}

void require_spanning_tree(const DegenerateModel& model, const SmoothingSet& T) {
    const auto an = smoothing_analysis(model, T);
    if (!an.irreducible || an.genus.value_or(-1) != 0)
        throw std::invalid_argument("smoothing set is not a spanning tree of the dual graph");
}

// The rewrite search is bounded in advance by the number of spanning trees.
void require_searchable(const DegenerateModel& model) {
    static const mpz_class limit = 500000;
    if (spanning_tree_count_matrix_tree(dual_graph(model)) > limit)
        throw std::invalid_argument(
            "model has too many spanning trees for the chain-rewrite search");
}

bool tree_mask_is_tree(const DegenerateModel& model, const std::vector<long>& edges) {
    const auto an = smoothing_analysis(model, SmoothingSet{edges});
    return an.irreducible && an.genus.value_or(-1) == 0;
}

// Chain step: exchanging exactly one smoothed node of the transposition.
std::vector<long> apply_transposition(const std::vector<long>& sorted_set,
                                      std::pair<long, long> t) {
    std::vector<long> out = sorted_set;
    for (long& x : out) {
        if (x == t.first) x = t.second;
        else if (x == t.second) x = t.first;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool target_reached(const DegenerateModel& model, const std::vector<long>& tree) {
    // (T1): all chosen nodes touch section 1; (T1') for k = 0: all touch
    // fiber 1 or section 1.
    const long sec1 = model.section_vertex(1);
    const long fib1 = model.klass.f >= 1 ? model.fiber_vertex(1) : -1;
    for (long e : tree) {
        auto [a, b] = model.node_vertices(e);
        if (model.klass.k >= 1) {
            if (a != sec1 && b != sec1) return false;
        } else {
            if (a != sec1 && b != sec1 && a != fib1 && b != fib1) return false;
        }
    }
    return true;
}

long target_incidence(const DegenerateModel& model, const std::vector<long>& tree) {
    const long sec1 = model.section_vertex(1);
    const long fib1 = model.klass.f >= 1 ? model.fiber_vertex(1) : -1;
    long cnt = 0;
    for (long e : tree) {
        auto [a, b] = model.node_vertices(e);
        if (model.klass.k >= 1 ? (a == sec1 || b == sec1)
                               : (a == sec1 || b == sec1 || a == fib1 || b == fib1))
            ++cnt;
    }
    return cnt;
}

}  // namespace

std::vector<Move> triangle_moves(const DegenerateModel& model, const SmoothingSet& smoothed) {
    if (model.klass.k < 1)
        throw std::invalid_argument("triangle moves need k >= 1: use rectangle_moves");
    require_spanning_tree(model, smoothed);
    return enumerate_triangles(model, smoothed.chosen, /*transposed_must_be_free=*/true);
}

std::vector<Move> rectangle_moves(const DegenerateModel& model, const SmoothingSet& smoothed) {
    if (model.klass.k >= 1)
        throw std::invalid_argument("rectangle moves are the k = 0 device: use triangle_moves");
    require_spanning_tree(model, smoothed);
    return enumerate_rectangles(model, smoothed.chosen, /*transposed_must_be_free=*/true);
}

ConcentrateResult concentrate(const DegenerateModel& model, const SmoothingSet& T) {
    require_spanning_tree(model, T);
    require_searchable(model);
    ConcentrateResult res;
    res.concentrated = T;
    if (target_reached(model, T.chosen)) return res;

    // BFS over chain rewrites; neighbor order prefers progress toward the
    // target component(s), then lexicographic labels, so traces are stable.
    std::map<std::vector<long>, std::pair<std::vector<long>, Move>> parent;
    std::deque<std::vector<long>> queue;
    parent.emplace(T.chosen, std::make_pair(std::vector<long>{}, Move{}));
    queue.push_back(T.chosen);
    std::vector<long> goal;
    bool found = false;
    while (!queue.empty() && !found) {
        const std::vector<long> cur = queue.front();
        queue.pop_front();
        auto moves = enumerate_moves(model, cur, /*transposed_must_be_free=*/false);
        // keep only genuine exchanges that stay spanning trees
        struct Cand {
            std::vector<long> next;
            Move move;
            long incidence;
        };
        std::vector<Cand> cands;
        for (const auto& mv : moves) {
            const bool in1 = contains(cur, mv.transposed.first);
            const bool in2 = contains(cur, mv.transposed.second);
            if (in1 == in2) continue;  // no exchange
            std::vector<long> next = apply_transposition(cur, mv.transposed);
            if (!tree_mask_is_tree(model, next)) continue;
            cands.push_back({std::move(next), mv, 0});
            cands.back().incidence = target_incidence(model, cands.back().next);
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.incidence != b.incidence) return a.incidence > b.incidence;
            return std::tie(a.move.support, a.move.transposed) <
                   std::tie(b.move.support, b.move.transposed);
        });
        for (const auto& c : cands) {
            if (parent.count(c.next)) continue;
            parent.emplace(c.next, std::make_pair(cur, c.move));
            if (target_reached(model, c.next)) {
                goal = c.next;
                found = true;
                break;
            }
            queue.push_back(c.next);
        }
    }
    if (!found) {
        std::ostringstream os;
        os << "concentration stuck: no supported-transposition chain reaches the target"
           << " (k=" << model.klass.k << ", d=" << model.klass.d << ", f=" << model.klass.f
           << ", |T|=" << T.chosen.size() << ", trees explored=" << parent.size() << ")";
        throw concentration_stuck_error(os.str());
    }
    // reconstruct the chain
    std::vector<MoveStep> rev;
    std::vector<long> cur = goal;
    while (cur != T.chosen) {
        const auto& [prev, mv] = parent.at(cur);
        rev.push_back({mv, cur});
        cur = prev;
    }
    std::reverse(rev.begin(), rev.end());
    res.trace.steps = std::move(rev);
    res.concentrated = SmoothingSet{goal};
    return res;
}

SmoothingSet replay_trace(const DegenerateModel& model, const SmoothingSet& start,
                          const MoveTrace& trace) {
    require_spanning_tree(model, start);
    std::vector<long> cur = start.chosen;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const MoveStep& step = trace.steps[i];
        const auto tag = "trace step " + std::to_string(i);
        if ((step.move.kind == MoveKind::triangle) != (model.klass.k >= 1))
            throw std::invalid_argument(tag + ": move kind does not match the model");
        const auto valid = enumerate_moves(model, cur, /*transposed_must_be_free=*/false);
        const bool known = std::any_of(valid.begin(), valid.end(), [&](const Move& m) {
            return m.support == step.move.support && m.transposed == step.move.transposed;
        });
        if (!known) throw std::invalid_argument(tag + ": no such supported transposition");
        const bool in1 = contains(cur, step.move.transposed.first);
        const bool in2 = contains(cur, step.move.transposed.second);
        if (in1 == in2) throw std::invalid_argument(tag + ": transposition does not exchange");
        cur = apply_transposition(cur, step.move.transposed);
        if (cur != step.resulting)
            throw std::invalid_argument(tag + ": recorded result differs from the replay");
        if (!tree_mask_is_tree(model, cur))
            throw std::invalid_argument(tag + ": intermediate set is not a spanning tree");
    }
    return SmoothingSet{cur};
}

FullMonodromyResult full_monodromy(const DegenerateModel& model, const SmoothingSet& T) {
    require_spanning_tree(model, T);
    require_searchable(model);
    const long n = model.node_count();
    FullMonodromyResult res;
    for (long e = 0; e < n; ++e)
        if (!contains(T.chosen, e)) res.free_nodes.push_back(e);
    const long nf = static_cast<long>(res.free_nodes.size());
    std::map<long, long> free_index;
    for (long i = 0; i < nf; ++i) free_index[res.free_nodes[static_cast<std::size_t>(i)]] = i;

    auto restrict_to_free = [&](const Perm& p) {
        std::vector<long> img(static_cast<std::size_t>(nf));
        for (long i = 0; i < nf; ++i) {
            const long y = p(res.free_nodes[static_cast<std::size_t>(i)]);
            auto it = free_index.find(y);
            if (it == free_index.end())
                throw internal_consistency_error("monodromy generator does not preserve the free set");
            img[static_cast<std::size_t>(i)] = it->second;
        }
        return Perm(std::move(img));
    };

    std::set<Perm> gens;

    // (a) setwise stabilizer of T inside the base monodromy group
    const PermGroup base = base_group(model);
    for (const auto& s : setwise_stabilizer_generators(base, T.chosen))
        gens.insert(restrict_to_free(s));

    // (b) constellation transpositions over every chain-reachable tree,
    // conjugated back along the chain; Schreier elements of revisits too
    std::map<std::vector<long>, Perm> rep;  // tree -> sigma with sigma(T) = tree
    std::deque<std::vector<long>> queue;
    rep.emplace(T.chosen, Perm::identity(n));
    queue.push_back(T.chosen);
    while (!queue.empty()) {
        const std::vector<long> cur = queue.front();
        queue.pop_front();
        const Perm sigma = rep.at(cur);
        const Perm sigma_inv = sigma.inverse();
        for (const auto& mv : enumerate_moves(model, cur, /*transposed_must_be_free=*/false)) {
            const bool in1 = contains(cur, mv.transposed.first);
            const bool in2 = contains(cur, mv.transposed.second);
            const Perm tau = Perm::transposition(n, mv.transposed.first, mv.transposed.second);
            if (!in1 && !in2) {
                // group move at cur: conjugate to a permutation fixing T pointwise
                gens.insert(restrict_to_free(sigma_inv * (tau * sigma)));
            } else if (in1 != in2) {
                std::vector<long> next = apply_transposition(cur, mv.transposed);
                if (!tree_mask_is_tree(model, next)) continue;
                auto it = rep.find(next);
                if (it == rep.end()) {
                    rep.emplace(next, tau * sigma);
                    queue.push_back(std::move(next));
                } else {
                    // chain cycle: an element carrying T to itself setwise
                    Perm cyc = it->second.inverse() * (tau * sigma);
                    if (!cyc.is_identity()) gens.insert(restrict_to_free(cyc));
                }
            }
        }
    }
    res.reachable_trees = static_cast<long>(rep.size());

    PermGroup g;
    g.n = nf;
    for (const auto& p : gens)
        if (!p.is_identity()) g.generators.push_back(p);
    if (g.generators.empty()) g.generators.push_back(Perm::identity(nf));
    res.group = g;
    res.order = group_order(g);
    mpz_class fact = 1;
    for (long i = 2; i <= nf; ++i) fact *= i;
    res.is_full_symmetric = (res.order == fact);
    res.transitive = nf <= 1 || static_cast<long>(orbit_of(g, 0).size()) == nf;
    return res;
}

}  // namespace severi
