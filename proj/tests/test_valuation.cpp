#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <bit>
#include <map>
#include <vector>

#include "equitutte/valuation.hpp"

using namespace equitutte;

#define CHECK_ERRC(expr, expected)                  \
  do {                                              \
    try {                                           \
      (void)(expr);                                 \
      FAIL("expected an error from " #expr);        \
    } catch (const error& e) {                      \
      CHECK(e.code() == errc::expected);            \
    }                                               \
  } while (0)

namespace {

Rational frac(long n, long d) {
  Rational v(n, d);
  v.canonicalize();
  return v;
}

Matroid u24() { return Matroid::uniform(2, {"1", "2", "3", "4"}); }

std::vector<Matroid> corpus3() {
  std::vector<Matroid> all;
  for (const std::vector<Label>& g :
       {std::vector<Label>{"0"}, {"0", "1"}, {"0", "1", "2"}}) {
    auto batch = enumerate_labeled_matroids(g);
    all.insert(all.end(), batch.begin(), batch.end());
  }
  return all;
}

}  // namespace

TEST_CASE("base polytope membership") {
  CHECK(in_base_polytope(u24(), {frac(1, 2), frac(1, 2), frac(1, 2), frac(1, 2)}));

  // Two parallel elements pin their coordinate sum below their common rank 1.
  SignedCombination split = delta24_split_fixture();
  const Matroid& parallel12 = split.terms[1].second;
  CHECK(parallel12.rank_of({"1", "2"}) == 1);
  CHECK(!in_base_polytope(parallel12, {1, 1, 0, 0}));
  CHECK(in_base_polytope(u24(), {1, 1, 0, 0}));

  CHECK(!in_base_polytope(u24(), {2, 0, 0, 0}));
  CHECK(!in_base_polytope(u24(), {frac(3, 2), frac(1, 2), 0, 0}));
  CHECK(!in_base_polytope(u24(), {frac(-1, 2), frac(1, 2), 1, 1}));
  CHECK(!in_base_polytope(u24(), {1, 1, 1, 0}));
  CHECK_ERRC(in_base_polytope(u24(), {1, 1, 0}), unknown_label);

  // Among 0/1 points, exactly the basis indicator vectors lie in the polytope.
  auto as_point = [](const Matroid& m, std::uint32_t mask) {
    std::vector<Rational> p(m.size());
    for (int i = 0; i < m.size(); ++i) p[i] = (mask >> i) & 1u;
    return p;
  };
  std::vector<Matroid> all = corpus3();
  all.push_back(u24());
  for (const Matroid& m : all)
    for (std::uint32_t mask = 0; mask < (1u << m.size()); ++mask)
      CHECK(in_base_polytope(m, as_point(m, mask)) == m.is_basis(mask));
}

TEST_CASE("grid vanishing of signed indicator sums") {
  SignedCombination split = delta24_split_fixture();
  CHECK(indicator_is_zero(split, 1));
  CHECK(indicator_is_zero(split, 2));
  CHECK(indicator_is_zero(split, 4));

  SignedCombination lone = SignedCombination::make(
      {"0", "1"}, 1, {{Integer(1), Matroid::uniform(1, {"0", "1"})}});
  CHECK(!indicator_is_zero(lone, 1));

  SignedCombination cancel = SignedCombination::make(
      {"0", "1"}, 1,
      {{Integer(1), Matroid::uniform(1, {"0", "1"})}, {Integer(-1), Matroid::uniform(1, {"0", "1"})}});
  CHECK(indicator_is_zero(cancel, 3));

  // Dropping the common face over-counts the midpoint square.
  SignedCombination missing = SignedCombination::make(
      split.ground, split.rank,
      {split.terms[0], split.terms[1], split.terms[2]});
  CHECK(!indicator_is_zero(missing, 2));

  CHECK_ERRC(indicator_is_zero(split, 0), zero_parameter);
}

TEST_CASE("hypersimplex split fixture shape") {
  SignedCombination split = delta24_split_fixture();
  CHECK(split.ground == std::vector<Label>{"1", "2", "3", "4"});
  CHECK(split.rank == 2);
  CHECK(split.terms.size() == 4);
  CHECK(split.terms[0].first == 1);
  CHECK(split.terms[1].first == -1);
  CHECK(split.terms[2].first == -1);
  CHECK(split.terms[3].first == 1);
  CHECK(split.terms[0].second.key() == u24().key());
  CHECK(split.terms[0].second.bases().size() == 6);
  CHECK(split.terms[1].second.bases().size() == 5);
  CHECK(split.terms[2].second.bases().size() == 5);
  CHECK(split.terms[3].second.bases().size() == 4);
  CHECK(split.terms[2].second.rank_of({"3", "4"}) == 1);
  CHECK(split.terms[3].second.rank_of({"1", "2"}) == 1);
  CHECK(split.terms[3].second.rank_of({"3", "4"}) == 1);
}

TEST_CASE("signed invariant sums vanish on the split") {
  SignedCombination split = delta24_split_fixture();
  CHECK(check_valuative(split, ValuativeInvariant::equivariant_tutte));
  CHECK(check_valuative(split, ValuativeInvariant::potts));
  CHECK(check_valuative(split, ValuativeInvariant::equivariant_charpoly));
  std::array<Rational, 4> basis_count{1, 1, 1, 0};
  CHECK(check_valuative(split, ValuativeInvariant::evaluation, &basis_count));
  std::array<Rational, 4> generic{frac(3, 2), frac(-1, 3), 2, frac(5, 7)};
  CHECK(check_valuative(split, ValuativeInvariant::evaluation, &generic));
  CHECK_ERRC(check_valuative(split, ValuativeInvariant::evaluation), unbound_variable);

  SignedCombination cancel = SignedCombination::make(
      split.ground, split.rank,
      {{Integer(1), split.terms[1].second}, {Integer(-1), split.terms[1].second}});
  for (ValuativeInvariant inv :
       {ValuativeInvariant::equivariant_tutte, ValuativeInvariant::potts,
        ValuativeInvariant::equivariant_charpoly})
    CHECK(check_valuative(cancel, inv));

  // A lone nonzero term cannot cancel.
  SignedCombination lone = SignedCombination::make(
      split.ground, split.rank, {{Integer(1), u24()}});
  CHECK(!check_valuative(lone, ValuativeInvariant::equivariant_tutte));
  CHECK(!check_valuative(lone, ValuativeInvariant::potts));
}

TEST_CASE("the split stays valuative under every relabeling") {
  SignedCombination split = delta24_split_fixture();
  for (const auto& p : permutations_of(4)) {
    std::map<Label, Label> rename;
    for (int i = 0; i < 4; ++i) rename[split.ground[i]] = split.ground[p[i]];
    std::vector<std::pair<Integer, Matroid>> terms;
    for (const auto& [coeff, m] : split.terms) terms.emplace_back(coeff, m.relabeled(rename));
    std::vector<Label> ground = terms[0].second.ground();
    SignedCombination renamed =
        SignedCombination::make(std::move(ground), split.rank, std::move(terms));
    CHECK(check_valuative(renamed, ValuativeInvariant::equivariant_tutte));
    CHECK(indicator_is_zero(renamed, 2));
  }
}

TEST_CASE("combination construction errors") {
  Matroid m = Matroid::uniform(1, {"0", "1"});
  CHECK_ERRC(SignedCombination::make({"0", "0"}, 1, {{Integer(1), m}}), label_collision);
  CHECK_ERRC(SignedCombination::make({"0", "1"}, 1,
                                     {{Integer(1), Matroid::uniform(1, {"0", "2"})}}),
             unknown_label);
  CHECK_ERRC(SignedCombination::make({"0", "1"}, 2, {{Integer(1), m}}), bad_rank);
}
