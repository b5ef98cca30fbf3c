#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "equitutte/matroid.hpp"
#include "equitutte/poly.hpp"

namespace equitutte {

// Equivariant Tutte polynomial in x, y, r, s and one t variable per ground
// element: the corank-nullity sum over all subsets, each subset weighted by
// prod_{e in S}(1 + r t_e) * prod_{e not in S}(1 + s t_e).
MultiPoly equivariant_tutte(const Matroid& m);

// Same polynomial by memoized deletion/contraction. The default pivot is the
// first general element in ground order; when none is left, loops are handled
// before coloops. A custom pivot chooser may pick any element.
using PivotChooser = std::function<Label(const Matroid&)>;
MultiPoly equivariant_tutte_dc(const Matroid& m);
MultiPoly equivariant_tutte_dc(const Matroid& m, const PivotChooser& pivot);

// Corank-nullity form of the classical Tutte polynomial in x and y.
MultiPoly classical_tutte(const Matroid& m);

// Multivariate (Potts) polynomial: sum_S q^{-rank(S)} prod_{e in S} v_e, kept
// as a fraction whose denominator is a power of q.
PolyFraction multivariate_tutte(const Matroid& m);
// The same fraction obtained from the equivariant Tutte polynomial by the
// change of variables x -> q+1, y -> 2, r -> 1, s -> 0, t_e -> v_e - 1.
PolyFraction potts_from_equivariant(const Matroid& m);
// Inverse change of variables: rebuilds the equivariant Tutte polynomial (as
// a fraction) from the Potts fraction of a matroid with the given rank and
// ground labels.
PolyFraction equivariant_from_potts(const PolyFraction& potts, int rank,
                                    const std::vector<Label>& ground);

// Pushforward polynomial in alpha, beta, z, w and the t block: the subset sum
// with per-element factors (alpha + t_e) / (beta - t_e), divided exactly by
// (alpha + beta). Defined for non-empty ground sets.
MultiPoly f_polynomial(const Matroid& m);
// Same polynomial by memoized deletion/contraction with single-element base
// cases (loop: 1 - t_e w, coloop: 1 + t_e z).
MultiPoly f_polynomial_dc(const Matroid& m);

// The substitution x -> (r+s)/(s+z), y -> (r+s)/(r+w), s -> -s turns the
// equivariant Tutte polynomial into the pushforward polynomial at
// alpha = 1/r, beta = 1/s up to the prefactor
// (rs)^{|E|-1} (r+s) / ((s+z)^rank (r+w)^corank).  The sign flip on the
// fourth slot makes the off-subset product (1 + s t_e) match the
// (1 - s t_e) factors produced on the pushforward side.  Verified by
// cross-multiplication.
bool verify_tutte_fm_relation(const Matroid& m);

// Coefficient of z^0 w^corank in the pushforward polynomial, computed both by
// extraction and by its own subset sum; the two routes must agree.
MultiPoly p_polynomial(const Matroid& m);

// (-1)^rank T(1-q, 0, q, 1) divided exactly by (q - 1); cross-checked against
// the direct subset sum in q and t.
MultiPoly equivariant_charpoly(const Matroid& m);

struct CharpolyRelations {
  bool top_coefficient_identity = false;  // p_polynomial at alpha=1/q, beta=-1
  std::vector<std::pair<std::vector<Label>, bool>> contraction_rows;
  bool all_ok() const;
};
// Checks the charpoly against the p polynomial and, for every proper subset
// A, the substitution t_e -> -1 on A, 0 off A against the classical reduced
// characteristic polynomial of the contraction by A.
CharpolyRelations verify_charpoly_relations(const Matroid& m);

// Deletion/contraction recursion with polynomial or rational multipliers.
struct TgParameters {
  PolyFraction a1, a2, b1, b2;  // deletion / contraction multipliers
  PolyFraction alpha, beta;     // loop / coloop specialization values
  PolyFraction gamma;           // value on the empty matroid
};
PolyFraction tg_invariant(const Matroid& m, const TgParameters& p);
// Closed form gamma a2^corank b2^rank T(beta a2/b2 + 1, alpha b2/a2 + 1,
// b1/b2, a1/a2); requires a2, b2 nonzero.
PolyFraction tg_invariant_closed(const Matroid& m, const TgParameters& p);
// Solves the loop/coloop multiplier equations c1 = b1 a + a1, c2 = b2 a + a2,
// d1 = a1 b + b1, d2 = a2 b + b2 for (a, b); nullopt when inconsistent.
std::optional<std::pair<PolyFraction, PolyFraction>> solve_tg_parameters(
    const PolyFraction& c1, const PolyFraction& c2, const PolyFraction& d1,
    const PolyFraction& d2, const PolyFraction& a1, const PolyFraction& a2,
    const PolyFraction& b1, const PolyFraction& b2);

// Exact evaluation at a rational (x,y,r,s) point. The result is a fraction
// whose denominator is a positive integer constant (1 at integer points) and
// whose numerator lives in the t variables only.
PolyFraction evaluate_tutte(const Matroid& m, const Rational& x0, const Rational& y0,
                            const Rational& r0, const Rational& s0);

enum class EvalOracle {
  bases_containing,        // point (1,1,1,0)
  power_count,             // point (2,2,1,0): 2^{|E \ A|}
  independent_containing,  // point (2,1,1,0)
  spanning_disjoint,       // point (1,2,0,1)
  acyclic_free,            // point (2,0,1,0), graphic, A independent
  strong_bidirected,       // point (0,2,1,0), graphic and connected
};

struct EvaluationRow {
  std::vector<Label> subset;
  Rational coefficient;
  Integer oracle_count;
  bool checked = false;  // false when the oracle makes no claim for this row
  bool ok = false;
};

struct EvaluationReport {
  std::array<Rational, 4> point;
  std::vector<EvaluationRow> rows;
  bool coefficient_identities_ok = false;  // symbolic minor identities at (r,s)=(1,0),(0,1)
  bool match = false;                      // every checked row agreed
};

// Compares every t-subset coefficient of the evaluation against the counting
// oracle. The orientation oracles need the realizing graph.
EvaluationReport evaluation_report(const Matroid& m, const Rational& x0, const Rational& y0,
                                   const Rational& r0, const Rational& s0, EvalOracle oracle,
                                   const Graph* graph = nullptr);

// Symbolic identities behind the coefficient table: at (r,s) = (1,0) the
// coefficient of t_A is (y-1)^{nullity(A)} T_{M/A}(x,y); at (0,1) it is
// (x-1)^{rank(M)-rank(E-A)} T_{M\A}(x,y).
bool verify_coefficient_specializations(const Matroid& m);

// Fraction identities for t_e -> -1/s on A (contraction form) and
// t_e -> -1/r on A (deletion form).
bool verify_reciprocal_substitutions(const Matroid& m);

// Rebuilds the matroid whose bases-containing evaluation (point (1,1,1,0))
// is the given t polynomial: nonzero coefficients mark independent sets.
Matroid recover_matroid(const MultiPoly& p, const std::vector<Label>& ground);

// Evaluates every labeled matroid on the ground set at the point and lists
// pairs of distinct matroids with equal values. Guarded to |ground| <= 4.
std::vector<std::pair<Matroid, Matroid>> uniqueness_scan(const std::vector<Label>& ground,
                                                         const Rational& x0, const Rational& y0,
                                                         const Rational& r0, const Rational& s0);

}  // namespace equitutte
