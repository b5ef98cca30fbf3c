#include "equitutte/valuation.hpp"

#include <algorithm>
#include <set>

#include "equitutte/invariants.hpp"

namespace equitutte {

SignedCombination SignedCombination::make(std::vector<Label> ground, int rank,
                                          std::vector<std::pair<Integer, Matroid>> terms) {
  std::set<Label> seen;
  for (const auto& l : ground)
    if (!seen.insert(l).second) fail(errc::label_collision, "ground label " + l + " repeats");
  for (const auto& [coeff, m] : terms) {
    if (m.ground() != ground)
      fail(errc::unknown_label, "a term's ground set differs from the combination's");
    if (m.rank() != rank)
      fail(errc::bad_rank, "a term has rank " + std::to_string(m.rank()) + ", expected " +
                               std::to_string(rank));
  }
  SignedCombination c;
  c.ground = std::move(ground);
  c.rank = rank;
  c.terms = std::move(terms);
  return c;
}

bool in_base_polytope(const Matroid& m, const std::vector<Rational>& point) {
  if (point.size() != static_cast<std::size_t>(m.size()))
    fail(errc::unknown_label, "point has " + std::to_string(point.size()) +
                                  " coordinates, ground has " + std::to_string(m.size()));
  Rational total = 0;
  for (const auto& p : point) {
    if (p < 0 || p > 1) return false;
    total += p;
  }
  if (total != m.rank()) return false;
  std::uint32_t full = m.full_mask();
  for (std::uint32_t sub = 1; sub < full; ++sub) {
    Rational s = 0;
    for (int i = 0; i < m.size(); ++i)
      if (sub & (1u << i)) s += point[i];
    if (s > m.rank_of_mask(sub)) return false;
  }
  return true;
}

bool indicator_is_zero(const SignedCombination& c, int denominator) {
  if (denominator < 1) fail(errc::zero_parameter, "the grid denominator must be at least 1");
  int n = static_cast<int>(c.ground.size());
  std::vector<Rational> point(n);
  auto rec = [&](auto&& self, int idx, int remaining) -> bool {
    if (idx == n - 1) {
      if (remaining > denominator) return true;
      point[idx] = Rational(remaining, denominator);
      point[idx].canonicalize();
      Integer sum = 0;
      for (const auto& [coeff, m] : c.terms)
        if (in_base_polytope(m, point)) sum += coeff;
      return sum == 0;
    }
    int cap = std::min(denominator, remaining);
    for (int v = 0; v <= cap; ++v) {
      point[idx] = Rational(v, denominator);
      point[idx].canonicalize();
      if (!self(self, idx + 1, remaining - v)) return false;
    }
    return true;
  };
  if (n == 0) return true;
  return rec(rec, 0, c.rank * denominator);
}

SignedCombination delta24_split_fixture() {
  std::vector<Label> ground{"1", "2", "3", "4"};
  auto except = [&](const std::vector<std::vector<Label>>& banned) {
    std::vector<std::vector<Label>> bases;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        std::vector<Label> pair{ground[i], ground[j]};
        if (std::find(banned.begin(), banned.end(), pair) == banned.end())
          bases.push_back(pair);
      }
    return Matroid::from_bases(ground, bases);
  };
  Matroid whole = Matroid::uniform(2, ground);
  Matroid left = except({{"1", "2"}});
  Matroid right = except({{"3", "4"}});
  Matroid middle = except({{"1", "2"}, {"3", "4"}});
  return SignedCombination::make(
      ground, 2,
      {{Integer(1), whole}, {Integer(-1), left}, {Integer(-1), right}, {Integer(1), middle}});
}

bool check_valuative(const SignedCombination& c, ValuativeInvariant invariant,
                     const std::array<Rational, 4>* point) {
  switch (invariant) {
    case ValuativeInvariant::equivariant_tutte: {
      MultiPoly sum;
      for (const auto& [coeff, m] : c.terms) sum += MultiPoly(coeff) * equivariant_tutte(m);
      return sum.is_zero();
    }
    case ValuativeInvariant::potts: {
      PolyFraction sum;
      for (const auto& [coeff, m] : c.terms)
        sum = sum + PolyFraction(MultiPoly(coeff)) * potts_from_equivariant(m);
      return sum.is_zero();
    }
    case ValuativeInvariant::equivariant_charpoly: {
      MultiPoly sum;
      for (const auto& [coeff, m] : c.terms) sum += MultiPoly(coeff) * equivariant_charpoly(m);
      return sum.is_zero();
    }
    case ValuativeInvariant::evaluation:
    default: {
      if (!point) fail(errc::unbound_variable, "the evaluation flavour needs an (x,y,r,s) point");
      PolyFraction sum;
      for (const auto& [coeff, m] : c.terms)
        sum = sum + PolyFraction(MultiPoly(coeff)) *
                        evaluate_tutte(m, (*point)[0], (*point)[1], (*point)[2], (*point)[3]);
      return sum.is_zero();
    }
  }
}

}  // namespace equitutte
