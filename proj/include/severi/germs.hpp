#ifndef SEVERI_GERMS_HPP
#define SEVERI_GERMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "severi/errors.hpp"
#include "severi/resultant.hpp"
#include "severi/weierstrass.hpp"

namespace severi {

/// One reduced non-vertical local branch: z = z0 + t^m, w = phi(t).
struct BranchGerm {
    Rat z0;
    long m = 1;         // covering degree of pr onto the base
    RationalPoly phi;   // fiber coordinate as a polynomial in t

    /// Throws unless m >= 1 and the parameterization is reduced (no proper
    /// divisor e > 1 of m with phi in Q[t^e]).
    void validate() const;

    Rat point_on_line() const { return phi(Rat(0)); }
    /// ord_t(phi - phi(0)); the w-direction multiplicity at the line.
    long contact_order() const;
};

/// Monic degree-m Weierstrass polynomial in w (coefficients in Q[z]) vanishing
/// exactly on the branch image, by eliminating t.
WeierstrassPoly branch_to_weierstrass(const BranchGerm& b);

/// delta_j = (ord(Dscr) - (m-1)) / 2; the division is exact for reduced branches.
long branch_delta(const BranchGerm& b);

/// Local intersection index delta_ij = ord_{z0} Res_w of the implicitizations.
long pairwise_delta(const BranchGerm& b1, const BranchGerm& b2);

/// Curve germ along one whole line l_{z0}: the line with multiplicity plus
/// the interesting branches. Branches may sit at different points of the line.
struct CurveGerm {
    Rat z0;
    long vertical_mult = 0;
    std::vector<BranchGerm> branches;

    void validate() const;
    long branch_degree_sum() const;
};

struct DeltaReport {
    long delta_total = 0;
    std::vector<long> per_branch;
    std::vector<std::vector<long>> pairwise;  // symmetric, zero diagonal
    long vertical_term = 0;                   // d * m
    long ord_dscr = 0;
    long euler_char = 0;                      // chi of the normalization
    long d = 0;                               // enclosing fiber degree used
    long b = 0;                               // branch count incl. implicit sheets
    bool identities_checked = false;          // false only for the d = 0 germ
};

/// Assembles the local invariants of the germ inside a curve of fiber degree
/// d_total (>= sum of branch degrees; the difference models smooth sheets
/// crossing the line away from the listed branches; pass -1 for the
/// self-contained germ). Verifies ord(Dscr) = d - b + 2(delta' + m(d-1)) on
/// the assembled polynomial and throws internal_consistency_error on mismatch.
DeltaReport curve_delta(const CurveGerm& c, long d_total = -1);

/// The product (z-z0)^m * prod_j B_j realizing the germ.
WeierstrassPoly assemble_germ_poly(const CurveGerm& c);

enum class Ord2Case {
    node,                // one transversal crossing, everything else transverse
    vertical_inflection, // one branch of covering degree 3, vertical inflection
    two_tangencies,      // two simple vertical tangencies
    vertical_line_d2,    // d = 2 with l_{z0} a component, rest transversal
    not_ord2,
};

const char* ord2_case_name(Ord2Case c);

/// Classifies a germ whose line has discriminant order exactly 2 into the
/// four configurations; anything else reports not_ord2.
Ord2Case classify_ord2_line(const CurveGerm& c, long d_enclosing = -1);

struct LineDelta {
    long delta = 0;
    DeltaReport report;
    Ord2Case ord2_tag = Ord2Case::not_ord2;
};

enum class GlobalCheck { not_requested, verified, not_certifiable };

struct DeltaPerLineResult {
    std::map<Rat, LineDelta> per_line;
    long total = 0;
    /// Square-free factors of the discriminant (and vertical divisor) whose
    /// roots are not rational: loci the germ map cannot certify.
    std::vector<RationalPoly> unresolved;
    GlobalCheck global_check = GlobalCheck::not_requested;
};

/// Per-line virtual nodal numbers of the curve defined by P; the germs map
/// must cover every rational root of the discriminant after factoring out
/// vertical lines. Throws on germ/polynomial mismatch. When the Euler
/// characteristic of the curve's normalization is supplied and every
/// discriminant locus is rational, the per-line sum is verified against
/// deg(Dscr) = d - chi + 2 delta; a mismatch is an internal-consistency error.
DeltaPerLineResult delta_per_line(const WeierstrassPoly& P,
                                  const std::map<Rat, CurveGerm>& germs,
                                  std::optional<long> normalization_euler = std::nullopt);

enum class EquisingularCase { i, ii, ii_tangent, iii, general_lower_bound };

const char* equisingular_case_name(EquisingularCase c);

struct EquisingularResult {
    long codim = 0;
    EquisingularCase tag = EquisingularCase::general_lower_bound;
    /// When false, codim is only a lower bound.
    bool exact = true;
};

/// Codimension of the equisingular stratum at the line, by case analysis
/// on the branch configuration.
EquisingularResult equisingular_codim(const CurveGerm& c, long d_total = -1);

struct JetSpec {
    Rat zeta;
    long m = 1;          // jet length: the (m-1)-jet is prescribed
    RationalPoly jet;    // in the local variable z - zeta, degree <= m-1
};

struct JetCorrection {
    RationalPoly H;  // G + q
    RationalPoly q;  // unique with deg q <= sum(m_i) - 1
};

/// Corrects G so that its (m_i-1)-jet at zeta_i equals the prescribed jet,
/// by the unique polynomial q of degree < sum m_i (Chinese remainders).
/// Duplicate zeta_i are rejected; callers pre-merge coincident points.
JetCorrection jet_correct(const std::vector<JetSpec>& specs, const RationalPoly& G);

}  // namespace severi

#endif
