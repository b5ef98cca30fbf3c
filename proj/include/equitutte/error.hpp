#pragma once

#include <stdexcept>
#include <string>

namespace equitutte {

enum class errc {
  // matroid and graph construction / queries
  empty_bases,
  unequal_basis_sizes,
  exchange_violation,
  unknown_label,
  label_collision,
  bad_rank,
  ground_too_large,
  too_many_edges,
  unknown_edge,
  disconnected_graph,
  empty_ground,
  // polynomial ring
  zero_denominator,
  zero_denominator_binding,
  residual_t_variable,
  unbound_variable,
  denominator_vanishes,
  not_divisible,
  // invariants
  zero_parameter,
  not_a_matroid,
  oracle_requires_graph,
  lemma_violation,
  bad_index,
  // input handling
  parse_error,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace equitutte
