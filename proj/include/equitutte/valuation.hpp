#pragma once

#include <array>
#include <vector>

#include "equitutte/matroid.hpp"
#include "equitutte/poly.hpp"

namespace equitutte {

// Integer combination of matroids sharing one ground set and one rank.
struct SignedCombination {
  std::vector<Label> ground;
  int rank = 0;
  std::vector<std::pair<Integer, Matroid>> terms;

  static SignedCombination make(std::vector<Label> ground, int rank,
                                std::vector<std::pair<Integer, Matroid>> terms);
};

// Membership in the base polytope: coordinates (indexed by ground order) lie
// in [0,1], sum to the rank, and respect every rank inequality
// sum_{e in S} p_e <= rank(S).
bool in_base_polytope(const Matroid& m, const std::vector<Rational>& point);

// Checks that the signed sum of base-polytope indicator functions vanishes on
// the whole grid {0, 1/d, ..., 1}^E restricted to coordinate sum = rank.
bool indicator_is_zero(const SignedCombination& c, int denominator);

// The rank-2 hypersimplex on four elements cut along one hyperplane:
// inclusion-exclusion of the two closed halves and their common face.
SignedCombination delta24_split_fixture();

enum class ValuativeInvariant { equivariant_tutte, potts, equivariant_charpoly, evaluation };

// Exact vanishing of the signed sum of the chosen invariant. The evaluation
// flavour needs the (x,y,r,s) point.
bool check_valuative(const SignedCombination& c, ValuativeInvariant invariant,
                     const std::array<Rational, 4>* point = nullptr);

}  // namespace equitutte
