#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "equitutte/error.hpp"

namespace equitutte {

using Label = std::string;

enum class ElementClass { loop, coloop, general };

// Matroid on an ordered ground set, represented by the family of bases as
// bitsets over ground positions. The label order is the declaration order and
// every canonical output (basis lists, subsets) follows it.
class Matroid {
 public:
  // Validates: labels distinct, bases drawn from the ground set, non-empty
  // family, equal sizes, and the basis exchange axiom (reported with a
  // violating triple).
  static Matroid from_bases(std::vector<Label> ground, const std::vector<std::vector<Label>>& bases);
  static Matroid from_masks(std::vector<Label> ground, std::vector<std::uint32_t> bases);
  static Matroid uniform(int k, std::vector<Label> ground);

  const std::vector<Label>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  int rank() const { return rank_; }
  int corank() const { return size() - rank_; }
  std::uint32_t full_mask() const { return size() == 32 ? ~0u : (1u << size()) - 1; }

  const std::vector<std::uint32_t>& bases() const { return bases_; }
  std::vector<std::vector<Label>> bases_labels() const;

  int position(const Label& l) const;  // unknown_label if absent
  bool has_label(const Label& l) const;
  std::uint32_t mask_of(const std::vector<Label>& subset) const;
  std::vector<Label> labels_of(std::uint32_t mask) const;

  int rank_of_mask(std::uint32_t mask) const;
  int rank_of(const std::vector<Label>& subset) const { return rank_of_mask(mask_of(subset)); }
  int nullity_of_mask(std::uint32_t mask) const;
  int nullity_of(const std::vector<Label>& subset) const { return nullity_of_mask(mask_of(subset)); }
  bool is_basis(std::uint32_t mask) const;
  bool is_independent(std::uint32_t mask) const;
  bool is_spanning(std::uint32_t mask) const { return rank_of_mask(mask) == rank_; }

  ElementClass element_class(const Label& l) const;

  // Minors are total: deleting a coloop drops it from every basis, and
  // contracting a loop is the same as deleting it.
  Matroid deleted(const Label& l) const;
  Matroid contracted(const Label& l) const;
  // Element-at-a-time in ground order.
  Matroid deleted_set(const std::vector<Label>& subset) const;
  Matroid contracted_set(const std::vector<Label>& subset) const;
  Matroid dual() const;
  // Renames labels in place (positions unchanged); the map must be injective
  // on the ground set.
  Matroid relabeled(const std::map<Label, Label>& names) const;

  // Greedy basis along the given visit order (a permutation of the ground
  // set): take each element that keeps the picked set independent.
  std::vector<Label> lex_first_basis(const std::vector<Label>& order) const;
  std::uint32_t lex_first_basis_mask(const std::vector<int>& order) const;

  // Canonical encoding of (ground, bases); usable as a memo key.
  std::string key() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_ == b.ground_ && a.bases_ == b.bases_;
  }
  friend bool operator!=(const Matroid& a, const Matroid& b) { return !(a == b); }

 private:
  Matroid() = default;
  std::vector<Label> ground_;
  std::vector<std::uint32_t> bases_;  // sorted ascending, deduplicated
  int rank_ = 0;
};

Matroid direct_sum(const Matroid& a, const Matroid& b);

// Multigraph: parallel edges and self-loops allowed. Vertices and edge labels
// are validated by the constructors of the operations that consume graphs.
struct Graph {
  struct Edge {
    Label label;
    std::string tail, head;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  void validate() const;
  bool connected() const;  // ignoring isolated-vertex-free special cases: all vertices in one component
};

// Cycle matroid: ground = edge labels in declaration order, bases = spanning
// forests (maximal acyclic edge sets); rank = |V| - #components.
Matroid graphic_matroid(const Graph& g);

// Orientations of the edges outside `fixed` such that the whole digraph is
// acyclic for every orientation of the edges in `fixed`.
long long count_acyclic_orientations_free_set(const Graph& g, const std::vector<Label>& fixed);
// Orientations of the edges outside `doubled` that make the digraph strongly
// connected when every edge in `doubled` runs both ways. Requires connected g.
long long count_strongly_connected_bidirected(const Graph& g, const std::vector<Label>& doubled);

// Every matroid on the given labels, ordered by rank and then by the
// lexicographic encoding of the basis family. Guarded to |ground| <= 5.
std::vector<Matroid> enumerate_labeled_matroids(const std::vector<Label>& ground);

// All permutations of 0..n-1 in lexicographic order.
const std::vector<std::vector<int>>& permutations_of(int n);
// Rank of a permutation tuple within permutations_of(n).
std::size_t permutation_rank(const std::vector<int>& perm);

}  // namespace equitutte
