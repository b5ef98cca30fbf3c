#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "equitutte/matroid.hpp"

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

Matroid example_matroid() {
  return Matroid::from_bases({"0", "1", "2", "3"},
                             {{"0", "1", "3"}, {"0", "2", "3"}, {"1", "2", "3"}});
}

std::vector<Matroid> small_corpus() {
  std::vector<Matroid> all;
  for (const std::vector<Label>& g :
       {std::vector<Label>{}, {"0"}, {"0", "1"}, {"0", "1", "2"}, {"0", "1", "2", "3"}}) {
    auto batch = enumerate_labeled_matroids(g);
    all.insert(all.end(), batch.begin(), batch.end());
  }
  return all;
}

}  // namespace

TEST_CASE("construction and basic queries") {
  Matroid u12 = Matroid::uniform(1, {"0", "1"});
  CHECK(u12.size() == 2);
  CHECK(u12.rank() == 1);
  CHECK(u12.corank() == 1);
  CHECK(u12.bases().size() == 2);
  CHECK(u12.is_basis(u12.mask_of({"0"})));
  CHECK(u12.is_basis(u12.mask_of({"1"})));
  CHECK_FALSE(u12.is_basis(u12.mask_of({"0", "1"})));
  CHECK(u12.rank_of({"0", "1"}) == 1);
  CHECK(u12.nullity_of({"0", "1"}) == 1);
  CHECK(u12.rank_of({}) == 0);
  CHECK(u12.is_independent(u12.mask_of({"0"})));
  CHECK(u12.is_spanning(u12.mask_of({"0"})));
  CHECK(u12.position("1") == 1);
  CHECK(u12.has_label("1"));
  CHECK_FALSE(u12.has_label("7"));
  CHECK_ERRC(u12.position("7"), unknown_label);

  auto lbls = u12.bases_labels();
  CHECK(lbls == std::vector<std::vector<Label>>{{"0"}, {"1"}});

  Matroid ex = example_matroid();
  CHECK(ex.rank() == 3);
  CHECK(ex.rank_of({"0", "1", "2"}) == 2);
  CHECK(ex.element_class("3") == ElementClass::coloop);
  CHECK(ex.element_class("0") == ElementClass::general);
  Matroid loop = Matroid::from_bases({"e"}, {{}});
  CHECK(loop.element_class("e") == ElementClass::loop);
  CHECK(loop.rank() == 0);
}

TEST_CASE("construction rejects malformed input") {
  CHECK_ERRC(Matroid::from_bases({"0"}, {}), empty_bases);
  CHECK_ERRC(Matroid::from_bases({"0", "1", "2"}, {{"0"}, {"1", "2"}}), unequal_basis_sizes);
  CHECK_ERRC(Matroid::from_bases({"0", "1", "2", "3"}, {{"0", "1"}, {"2", "3"}}),
             exchange_violation);
  CHECK_ERRC(Matroid::from_bases({"0"}, {{"9"}}), unknown_label);
  CHECK_ERRC(Matroid::from_bases({"0", "0"}, {{"0"}}), label_collision);
  CHECK_ERRC(Matroid::from_bases({"0"}, {{"0", "0"}}), label_collision);
  CHECK_ERRC(Matroid::uniform(3, {"0", "1"}), bad_rank);
  CHECK_ERRC(Matroid::uniform(-1, {"0"}), bad_rank);
  std::vector<Label> big;
  for (int i = 0; i < 26; ++i) big.push_back(std::to_string(i));
  CHECK_ERRC(Matroid::uniform(1, big), ground_too_large);

  // Size mismatch is reported before any exchange scan.
  CHECK_ERRC(Matroid::from_bases({"0", "1", "2", "3"}, {{"0"}, {"2", "3"}}), unequal_basis_sizes);
}

TEST_CASE("deletion and contraction") {
  Matroid ex = example_matroid();
  Matroid del2 = ex.deleted("2");
  CHECK(del2.ground() == std::vector<Label>{"0", "1", "3"});
  CHECK(del2.bases_labels() == std::vector<std::vector<Label>>{{"0", "1", "3"}});
  Matroid con2 = ex.contracted("2");
  CHECK(con2.bases_labels() == std::vector<std::vector<Label>>{{"0", "3"}, {"1", "3"}});

  // Removing a coloop keeps every basis, minus that element.
  Matroid del3 = ex.deleted("3");
  CHECK(del3 == Matroid::uniform(2, {"0", "1", "2"}));
  CHECK(del3 == ex.contracted("3"));

  // Contracting a loop is deletion.
  Matroid withloop = Matroid::from_bases({"a", "b"}, {{"b"}});
  CHECK(withloop.contracted("a") == withloop.deleted("a"));

  // Set forms agree with elementwise application in ground order.
  Matroid both = ex.deleted_set({"2", "1"});
  CHECK(both == ex.deleted("1").deleted("2"));
  Matroid cboth = ex.contracted_set({"0", "2"});
  CHECK(cboth == ex.contracted("0").contracted("2"));
  CHECK(ex.deleted_set({}) == ex);
}

TEST_CASE("duality") {
  Matroid u12 = Matroid::uniform(1, {"0", "1"});
  CHECK(u12.dual() == u12);
  Matroid ex = example_matroid();
  CHECK(ex.dual().rank() == 1);
  for (const Matroid& m : small_corpus()) {
    CHECK(m.dual().dual() == m);
    CHECK(m.dual().rank() == m.size() - m.rank());
    // Complement rank identity across the duality.
    std::uint32_t full = m.full_mask();
    for (std::uint32_t sub = 0;; ++sub) {
      int lhs = m.dual().rank_of_mask(sub);
      int rhs = static_cast<int>(std::popcount(sub)) - m.rank() + m.rank_of_mask(full & ~sub);
      CHECK(lhs == rhs);
      if (sub == full) break;
    }
    // Deleting in the dual is dual to contracting.
    for (const auto& l : m.ground()) CHECK(m.dual().deleted(l) == m.contracted(l).dual());
  }
}

TEST_CASE("rank function laws") {
  for (const Matroid& m : small_corpus()) {
    std::uint32_t full = m.full_mask();
    for (std::uint32_t a = 0;; ++a) {
      CHECK(m.rank_of_mask(a) <= std::popcount(a));
      for (std::uint32_t b = 0;; ++b) {
        CHECK(m.rank_of_mask(a | b) + m.rank_of_mask(a & b) <=
              m.rank_of_mask(a) + m.rank_of_mask(b));
        if ((a & b) == a) CHECK(m.rank_of_mask(a) <= m.rank_of_mask(b));
        if (b == full) break;
      }
      if (a == full) break;
    }
  }
}

TEST_CASE("direct sums") {
  Matroid a = Matroid::uniform(1, {"a"});
  Matroid b = Matroid::from_bases({"b"}, {{}});
  Matroid sum = direct_sum(a, b);
  CHECK(sum.ground() == std::vector<Label>{"a", "b"});
  CHECK(sum.rank() == 1);
  CHECK(sum.bases_labels() == std::vector<std::vector<Label>>{{"a"}});
  CHECK_ERRC(direct_sum(a, a), label_collision);

  Matroid u12 = Matroid::uniform(1, {"0", "1"});
  Matroid u12b = Matroid::uniform(1, {"2", "3"});
  Matroid s = direct_sum(u12, u12b);
  CHECK(s.rank() == 2);
  CHECK(s.bases().size() == 4);
}

TEST_CASE("relabeling") {
  Matroid u12 = Matroid::uniform(1, {"0", "1"});
  Matroid named = u12.relabeled({{"0", "p"}, {"1", "q"}});
  CHECK(named.ground() == std::vector<Label>{"p", "q"});
  CHECK(named.is_basis(named.mask_of({"p"})));
  CHECK_ERRC(u12.relabeled({{"0", "p"}}), unknown_label);
}

TEST_CASE("greedy bases") {
  Matroid ex = example_matroid();
  CHECK(ex.lex_first_basis({"0", "1", "2", "3"}) == std::vector<Label>{"0", "1", "3"});
  CHECK(ex.lex_first_basis({"2", "1", "0", "3"}) == std::vector<Label>{"1", "2", "3"});
  CHECK_ERRC(ex.lex_first_basis({"0", "1"}), unknown_label);
  CHECK_ERRC(ex.lex_first_basis({"0", "1", "2", "2"}), label_collision);

  for (const Matroid& m : small_corpus()) {
    std::set<std::uint32_t> seen;
    for (const auto& perm : permutations_of(m.size())) {
      std::uint32_t basis = m.lex_first_basis_mask(perm);
      CHECK(m.is_basis(basis));
      seen.insert(basis);
    }
    // Every basis is the greedy result of some visit order.
    CHECK(seen.size() == m.bases().size());
  }
}

TEST_CASE("graphic matroids") {
  Graph triangle{{"a", "b", "c"},
                 {{"1", "a", "b"}, {"2", "b", "c"}, {"3", "c", "a"}}};
  Matroid tm = graphic_matroid(triangle);
  CHECK(tm == Matroid::uniform(2, {"1", "2", "3"}));

  Graph k4{{"a", "b", "c", "d"},
           {{"1", "a", "b"},
            {"2", "a", "c"},
            {"3", "a", "d"},
            {"4", "b", "c"},
            {"5", "b", "d"},
            {"6", "c", "d"}}};
  CHECK(graphic_matroid(k4).bases().size() == 16);
  CHECK(graphic_matroid(k4).rank() == 3);

  Graph selfloop{{"v"}, {{"e", "v", "v"}}};
  Matroid lm = graphic_matroid(selfloop);
  CHECK(lm.element_class("e") == ElementClass::loop);

  Graph multi{{"u", "v"}, {{"1", "u", "v"}, {"2", "u", "v"}}};
  CHECK(graphic_matroid(multi) == Matroid::uniform(1, {"1", "2"}));

  Graph path{{"u", "v", "w"}, {{"1", "u", "v"}, {"2", "v", "w"}}};
  Matroid pm = graphic_matroid(path);
  CHECK(pm.rank() == 2);
  CHECK(pm.element_class("1") == ElementClass::coloop);

  Graph edgeless{{"u", "v"}, {}};
  CHECK(graphic_matroid(edgeless).rank() == 0);

  Graph bad{{"u"}, {{"1", "u", "zzz"}}};
  CHECK_ERRC(graphic_matroid(bad), unknown_label);
}

TEST_CASE("orientation counting") {
  Graph triangle{{"a", "b", "c"},
                 {{"1", "a", "b"}, {"2", "b", "c"}, {"3", "c", "a"}}};
  CHECK(count_acyclic_orientations_free_set(triangle, {}) == 6);
  CHECK(count_acyclic_orientations_free_set(triangle, {"1"}) == 2);
  CHECK(count_strongly_connected_bidirected(triangle, {}) == 2);
  CHECK(count_strongly_connected_bidirected(triangle, {"1"}) == 2);
  CHECK(count_strongly_connected_bidirected(triangle, {"1", "2"}) == 2);
  CHECK(count_strongly_connected_bidirected(triangle, {"1", "2", "3"}) == 1);

  Graph selfloop{{"v"}, {{"e", "v", "v"}}};
  CHECK(count_acyclic_orientations_free_set(selfloop, {}) == 0);
  CHECK(count_strongly_connected_bidirected(selfloop, {}) == 2);

  Graph k4{{"a", "b", "c", "d"},
           {{"1", "a", "b"},
            {"2", "a", "c"},
            {"3", "a", "d"},
            {"4", "b", "c"},
            {"5", "b", "d"},
            {"6", "c", "d"}}};
  CHECK(count_acyclic_orientations_free_set(k4, {}) == 24);

  Graph split{{"u", "v"}, {}};
  CHECK_ERRC(count_strongly_connected_bidirected(split, {}), disconnected_graph);
  CHECK_ERRC(count_acyclic_orientations_free_set(triangle, {"9"}), unknown_edge);
  CHECK_ERRC(count_acyclic_orientations_free_set(triangle, {"1", "1"}), unknown_edge);

  Graph big{{"u", "v"}, {}};
  for (int i = 0; i < 13; ++i) big.edges.push_back({std::to_string(i), "u", "v"});
  CHECK_ERRC(count_acyclic_orientations_free_set(big, {}), too_many_edges);
}

TEST_CASE("exhaustive enumeration") {
  CHECK(enumerate_labeled_matroids({}).size() == 1);
  CHECK(enumerate_labeled_matroids({"0"}).size() == 2);
  CHECK(enumerate_labeled_matroids({"0", "1"}).size() == 5);
  CHECK(enumerate_labeled_matroids({"0", "1", "2"}).size() == 16);
  CHECK(enumerate_labeled_matroids({"0", "1", "2", "3"}).size() == 68);
  std::vector<Label> six{"0", "1", "2", "3", "4", "5"};
  CHECK_ERRC(enumerate_labeled_matroids(six), ground_too_large);

  // No duplicates, and every matroid is valid by construction.
  auto all3 = enumerate_labeled_matroids({"0", "1", "2"});
  std::set<std::string> keys;
  for (const auto& m : all3) keys.insert(m.key());
  CHECK(keys.size() == all3.size());
}

TEST_CASE("permutation ranking") {
  const auto& p3 = permutations_of(3);
  CHECK(p3.size() == 6);
  CHECK(p3.front() == std::vector<int>{0, 1, 2});
  CHECK(p3.back() == std::vector<int>{2, 1, 0});
  CHECK(std::is_sorted(p3.begin(), p3.end()));
  for (std::size_t i = 0; i < p3.size(); ++i) CHECK(permutation_rank(p3[i]) == i);
  CHECK(permutations_of(0).size() == 1);
  CHECK_ERRC(permutations_of(9), ground_too_large);
}
