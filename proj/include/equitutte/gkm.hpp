#pragma once

#include <vector>

#include "equitutte/matroid.hpp"
#include "equitutte/poly.hpp"

namespace equitutte {

// Polynomial tuple indexed by the orderings of a ground set, stored densely
// over all |ground|! orderings at their lex ranks. Ground sets are capped at
// 6 elements (720 entries).
struct GkmClass {
  std::vector<Label> ground;
  std::vector<MultiPoly> entries;

  const MultiPoly& at(const std::vector<Label>& ordering) const;
  MultiPoly& at(const std::vector<Label>& ordering);
};

// Fixed point of the product of two projective spaces: an ordered pair of
// ground labels.
struct ProductPoint {
  Label a;
  Label b;
};

// Location of a failed adjacent-swap divisibility test.
struct GkmWitness {
  std::vector<Label> ordering;
  int slot = 0;
};

// Elementary symmetric polynomial e_i over {-t_e : e in the greedy basis of
// the ordering}, {-t_e : e outside it}, or {t_e : e in it} respectively.
GkmClass chern_sub(const Matroid& m, int i);
GkmClass chern_quot(const Matroid& m, int i);
GkmClass chern_sub_dual(const Matroid& m, int i);

// prod_{e in basis}(1 + t_e z) and prod_{e outside}(1 - t_e w).
GkmClass total_chern_sub_dual_z(const Matroid& m);
GkmClass total_chern_quot_w(const Matroid& m);

// Entrywise product of the two total classes above.
GkmClass xi_class(const Matroid& m);

// True iff every adjacent swap satisfies the divisibility condition: the two
// entries agree after identifying the swapped variables. On failure the
// witness (if given) receives one offending ordering and slot.
bool gkm_check(const GkmClass& c, GkmWitness* witness = nullptr);

// prod_{i>=1} (t_{ordering[i-1]} - t_{ordering[i]}); empty and singleton
// orderings give 1.
MultiPoly tangent_weight_perm(const std::vector<Label>& ordering);

// prod_{e != a} (t_e - t_a) * prod_{e != b} (t_b - t_e) over the ground set.
MultiPoly tangent_weight_product_point(const std::vector<Label>& ground, const Label& a,
                                       const Label& b);

// Weighted fixed-point sum over the orderings that start at p.b and end at
// p.a, returned as one unreduced fraction over the product of the
// participating tangent weights. An empty sum yields the zero fraction.
PolyFraction pushforward_localized(const GkmClass& c, const ProductPoint& p);

struct PushforwardCheck {
  ProductPoint point;
  bool ok = false;
  PolyFraction localized;
  PolyFraction expected;
};

struct PushforwardReport {
  std::vector<PushforwardCheck> rows;
  bool all_ok() const;
};

// Compares pushforward_localized(xi_class(m), (a,b)) with the closed form
// f_polynomial(m) at alpha = -t_a, beta = t_b for every ordered pair (a,b).
// Diagonal pairs on two or more elements pit the empty sum against the
// derived vanishing of the closed form.
PushforwardReport verify_pushforward_theorem(const Matroid& m);

// Splitting index of an ordering of ground minus the pivot: inserting the
// pivot at slot l produces the contraction's greedy basis plus the pivot for
// l <= k and the deletion's greedy basis for l > k. Returns k in [-1, n];
// -1 iff the pivot is a loop, n iff it is a coloop. Any deviation from this
// shape raises LemmaViolation (it must never fire).
int compute_k_sigma(const Matroid& m, const std::vector<Label>& ordering, const Label& pivot);

// Entrywise recursion checks against the deletion and contraction classes:
// the xi entry at every insertion of the pivot factors through the minors'
// entries, and for a general pivot the total Chern classes of the two minors
// differ by the single linear factor at the splitting slot.
bool verify_minor_entry_relations(const Matroid& m, const Label& pivot);

// Deletion-contraction recursion for the localized pushforward at every
// off-diagonal pair avoiding the pivot.
bool verify_pushforward_dc(const Matroid& m, const Label& pivot);

}  // namespace equitutte
