#ifndef SEVERI_MONODROMY_HPP
#define SEVERI_MONODROMY_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "severi/errors.hpp"
#include "severi/hirzebruch.hpp"

namespace severi {

/// Permutation of {0..n-1}; image(x) = images[x].
class Perm {
  public:
    Perm() = default;
    static Perm identity(long n);
    explicit Perm(std::vector<long> images);
    static Perm transposition(long n, long a, long b);

    long size() const { return static_cast<long>(img_.size()); }
    long operator()(long x) const { return img_[static_cast<std::size_t>(x)]; }
    bool is_identity() const;
    Perm inverse() const;
    /// (a * b)(x) = a(b(x)): b acts first.
    friend Perm operator*(const Perm& a, const Perm& b);
    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    std::vector<long> apply_to_sorted(const std::vector<long>& set) const;
    std::string cycles_str() const;
    std::vector<std::vector<long>> cycles() const;

  private:
    std::vector<long> img_;
};

struct PermGroup {
    long n = 0;
    std::vector<Perm> generators;
};

/// Exact order via a stabilizer chain (Schreier-Sims with a Sims filter).
mpz_class group_order(const PermGroup& g);

/// Orbit of a point under the group's generators.
std::vector<long> orbit_of(const PermGroup& g, long point);

/// Schreier generators of the setwise stabilizer of `set` (given sorted),
/// computed from the orbit of the set under the group.
std::vector<Perm> setwise_stabilizer_generators(const PermGroup& g, const std::vector<long>& set);

/// Monodromy of the maximal nodal locus: slot transpositions per section
/// pair, section swaps, fiber swaps. Order (k!)^(d(d-1)/2) d! f!. The
/// permutation domain is nodes followed by section and fiber labels
/// (points n..n+d-1 and n+d..n+d+f-1), so the action is faithful even when
/// component swaps fix every node.
PermGroup base_group(const DegenerateModel& model);

enum class MoveKind { triangle, rectangle, base_relabel };

struct Move {
    MoveKind kind = MoveKind::triangle;
    std::vector<long> support;          // nodes the constellation is smoothed at
    std::pair<long, long> transposed;   // the two nodes exchanged
};

/// Triangle transpositions available on the free nodes: support in `smoothed`,
/// both transposed nodes outside it, at most one vertical component in the
/// triangle. Requires k >= 1.
std::vector<Move> triangle_moves(const DegenerateModel& model, const SmoothingSet& smoothed);

/// Rectangle transpositions for k = 0: both support nodes on one side of a
/// fiber/section rectangle and in `smoothed`, the opposite side free.
std::vector<Move> rectangle_moves(const DegenerateModel& model, const SmoothingSet& smoothed);

struct MoveStep {
    Move move;
    std::vector<long> resulting;  // smoothed set after the step
};

struct MoveTrace {
    std::vector<MoveStep> steps;
};

struct ConcentrateResult {
    SmoothingSet concentrated;
    MoveTrace trace;
};

/// Replays a recorded chain against the model: every step must be a valid
/// supported transposition, every intermediate set a spanning tree. Returns
/// the final smoothing set; throws on any violation.
SmoothingSet replay_trace(const DegenerateModel& model, const SmoothingSet& start,
                          const MoveTrace& trace);

/// Rewrites a spanning-tree smoothing set by supported transpositions until
/// every chosen node touches the first section (k >= 1) or the first fiber or
/// first section (k = 0). Throws concentration_stuck_error when no chain
/// reaches the target.
ConcentrateResult concentrate(const DegenerateModel& model, const SmoothingSet& T);

struct FullMonodromyResult {
    PermGroup group;           // on free-node indices 0..|free|-1
    std::vector<long> free_nodes;  // model node indices, ascending
    mpz_class order = 1;
    bool is_full_symmetric = false;
    bool transitive = false;
    long reachable_trees = 0;
};

/// Group generated on N-cross minus T by all constellation transpositions
/// reachable through chain rewrites, conjugated back to T, together with the
/// setwise T-stabilizer of the base group.
FullMonodromyResult full_monodromy(const DegenerateModel& model, const SmoothingSet& T);

}  // namespace severi

#endif
