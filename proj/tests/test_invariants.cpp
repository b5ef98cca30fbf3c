#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equitutte/invariants.hpp"

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

const Variable X = Variable::x();
const Variable Y = Variable::y();
const Variable R = Variable::r();
const Variable S = Variable::s();
const Variable Z = Variable::z();
const Variable W = Variable::w();
const Variable Q = Variable::q();
const Variable ALPHA = Variable::alpha();
const Variable BETA = Variable::beta();

MultiPoly pv(const Variable& v) { return MultiPoly::var(v); }
MultiPoly tv(const std::string& l) { return MultiPoly::var(Variable::t(l)); }

Matroid loop_matroid() { return Matroid::from_bases({"e"}, {{}}); }
Matroid coloop_matroid() { return Matroid::uniform(1, {"e"}); }
Matroid u12() { return Matroid::uniform(1, {"0", "1"}); }
Matroid example_matroid() {
  return Matroid::from_bases({"0", "1", "2", "3"},
                             {{"0", "1", "3"}, {"0", "2", "3"}, {"1", "2", "3"}});
}

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

TEST_CASE("per-element generating polynomial on one and two elements") {
  MultiPoly x = pv(X), y = pv(Y), r = pv(R), s = pv(S);
  CHECK(equivariant_tutte(loop_matroid()) == y + (y * r - r + s) * tv("e"));
  CHECK(equivariant_tutte(coloop_matroid()) == x + (x * s - s + r) * tv("e"));

  MultiPoly expected = (x + y) + (x * s + y * r) * (tv("0") + tv("1")) +
                       ((x - 1) * s.pow(2) + 2 * MultiPoly::one() * r * s + (y - 1) * r.pow(2)) *
                           tv("0") * tv("1");
  CHECK(equivariant_tutte(u12()) == expected);

  CHECK(equivariant_tutte(Matroid::uniform(0, {})) == MultiPoly::one());
}

TEST_CASE("recursive and subset-sum routes agree") {
  for (const Matroid& m : corpus3()) {
    CHECK(equivariant_tutte(m) == equivariant_tutte_dc(m));
    CHECK(f_polynomial(m) == f_polynomial_dc(m));
  }
  // The recursion does not depend on which element is split first.
  PivotChooser last = [](const Matroid& m) { return m.ground().back(); };
  CHECK(equivariant_tutte_dc(example_matroid(), last) == equivariant_tutte(example_matroid()));
}

TEST_CASE("dropping the element variables recovers the plain invariant") {
  for (const Matroid& m : corpus3()) {
    PolyBindings zero;
    for (const auto& l : m.ground()) zero.emplace(Variable::t(l), MultiPoly());
    MultiPoly collapsed = substitute(equivariant_tutte(m), zero);
    // At t = 0 the r,s variables disappear with their factors.
    CHECK(collapsed == classical_tutte(m));
  }
  Matroid triangle = Matroid::uniform(2, {"1", "2", "3"});
  CHECK(classical_tutte(triangle) == pv(X).pow(2) + pv(X) + pv(Y));
}

TEST_CASE("duality swaps the variable pairs and sums multiply") {
  PolyBindings swap{{X, pv(Y)}, {Y, pv(X)}, {R, pv(S)}, {S, pv(R)}};
  for (const Matroid& m : corpus3()) {
    CHECK(equivariant_tutte(m.dual()) == substitute(equivariant_tutte(m), swap));
  }
  Matroid a = Matroid::uniform(1, {"a", "b"});
  Matroid b = Matroid::from_bases({"c"}, {{}});
  CHECK(equivariant_tutte(direct_sum(a, b)) ==
        equivariant_tutte(a) * equivariant_tutte(b));
}

TEST_CASE("statistical-physics form") {
  MultiPoly q = pv(Q);
  PolyFraction coloop = multivariate_tutte(coloop_matroid());
  CHECK(fraction_eq(coloop, PolyFraction(q + pv(Variable::v("e")), q)));

  for (const Matroid& m : corpus3()) {
    CHECK(fraction_eq(multivariate_tutte(m), potts_from_equivariant(m)));
    PolyFraction back = equivariant_from_potts(potts_from_equivariant(m), m.rank(), m.ground());
    CHECK(fraction_eq(back, PolyFraction(equivariant_tutte(m))));
  }
}

TEST_CASE("pushforward polynomial closed forms") {
  MultiPoly a = pv(ALPHA), b = pv(BETA), z = pv(Z), w = pv(W);
  CHECK(f_polynomial(loop_matroid()) == MultiPoly::one() - tv("e") * w);
  CHECK(f_polynomial(coloop_matroid()) == MultiPoly::one() + tv("e") * z);
  CHECK(f_polynomial(Matroid::uniform(2, {"0", "1"})) ==
        (MultiPoly::one() + tv("0") * z) * (MultiPoly::one() + tv("1") * z) * (a + b));
  CHECK(f_polynomial(Matroid::uniform(3, {"0", "1", "2"})) ==
        (MultiPoly::one() + tv("0") * z) * (MultiPoly::one() + tv("1") * z) *
            (MultiPoly::one() + tv("2") * z) * (a + b).pow(2));
  Matroid mixed = direct_sum(Matroid::from_bases({"a"}, {{}}), Matroid::uniform(1, {"b"}));
  CHECK(f_polynomial(mixed) ==
        (MultiPoly::one() - tv("a") * w) * (MultiPoly::one() + tv("b") * z) * (a + b));
  CHECK_ERRC(f_polynomial(Matroid::uniform(0, {})), empty_ground);
}

TEST_CASE("substitution bridge between the two main polynomials") {
  CHECK(verify_tutte_fm_relation(u12()));
  CHECK(verify_tutte_fm_relation(loop_matroid()));
  CHECK(verify_tutte_fm_relation(coloop_matroid()));
  CHECK(verify_tutte_fm_relation(Matroid::uniform(2, {"0", "1", "2"})));
}

TEST_CASE("top-degree part of the pushforward polynomial") {
  MultiPoly a = pv(ALPHA), b = pv(BETA);
  CHECK(p_polynomial(loop_matroid()) == -tv("e"));
  CHECK(p_polynomial(coloop_matroid()) == MultiPoly::one());
  CHECK(p_polynomial(Matroid::uniform(2, {"0", "1"})) == a + b);
  for (const Matroid& m : corpus3()) CHECK_NOTHROW(p_polynomial(m));
}

TEST_CASE("reduced characteristic polynomial") {
  MultiPoly q = pv(Q);
  CHECK(equivariant_charpoly(coloop_matroid()) == MultiPoly::one());
  CHECK(equivariant_charpoly(loop_matroid()) == -tv("e"));
  CHECK(equivariant_charpoly(u12()) ==
        MultiPoly::one() + tv("0") + tv("1") + q * tv("0") * tv("1"));
  CHECK_ERRC(equivariant_charpoly(Matroid::uniform(0, {})), empty_ground);

  for (const Matroid& m : corpus3()) {
    CharpolyRelations rel = verify_charpoly_relations(m);
    CHECK(rel.top_coefficient_identity);
    CHECK(rel.all_ok());
  }
}

TEST_CASE("linear-coefficient recursion family") {
  // The classical polynomial sits at a1=0, a2=1, b1=0, b2=1 with loop weight
  // alpha+1 = y and coloop weight beta+1 = x.
  TgParameters classical{PolyFraction(0), PolyFraction(1), PolyFraction(0), PolyFraction(1),
                         PolyFraction(pv(Y) - 1), PolyFraction(pv(X) - 1), PolyFraction(1)};
  Matroid ex = example_matroid();
  CHECK(fraction_eq(tg_invariant(ex, classical), PolyFraction(classical_tutte(ex))));
  CHECK(fraction_eq(tg_invariant_closed(ex, classical), PolyFraction(classical_tutte(ex))));

  std::mt19937 rng(424242);
  auto coin = [&]() {
    Rational v(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    v.canonicalize();
    return v;
  };
  for (int round = 0; round < 5; ++round) {
    Rational a2 = 0, b2 = 0;
    while (a2 == 0) a2 = coin();
    while (b2 == 0) b2 = coin();
    TgParameters p{PolyFraction(coin()), PolyFraction(a2), PolyFraction(coin()),
                   PolyFraction(b2),     PolyFraction(coin()), PolyFraction(coin()),
                   PolyFraction(coin())};
    for (const Matroid& m : corpus3())
      CHECK(fraction_eq(tg_invariant(m, p), tg_invariant_closed(m, p)));
  }

  TgParameters degenerate{PolyFraction(1), PolyFraction(0), PolyFraction(1), PolyFraction(1),
                          PolyFraction(1), PolyFraction(1), PolyFraction(1)};
  CHECK_ERRC(tg_invariant_closed(ex, degenerate), zero_parameter);

  auto solved = solve_tg_parameters(PolyFraction(0), PolyFraction(pv(Y)), PolyFraction(0),
                                    PolyFraction(pv(X)), PolyFraction(0), PolyFraction(1),
                                    PolyFraction(0), PolyFraction(1));
  REQUIRE(solved.has_value());
  CHECK(fraction_eq(solved->first, PolyFraction(pv(Y) - 1)));
  CHECK(fraction_eq(solved->second, PolyFraction(pv(X) - 1)));

  auto inconsistent = solve_tg_parameters(PolyFraction(5), PolyFraction(pv(Y)), PolyFraction(0),
                                          PolyFraction(pv(X)), PolyFraction(0), PolyFraction(1),
                                          PolyFraction(0), PolyFraction(1));
  CHECK_FALSE(inconsistent.has_value());
  CHECK_ERRC(solve_tg_parameters(PolyFraction(0), PolyFraction(1), PolyFraction(0), PolyFraction(1),
                                 PolyFraction(0), PolyFraction(0), PolyFraction(0), PolyFraction(1)),
             zero_parameter);
}

TEST_CASE("rational evaluation of the generating polynomial") {
  PolyFraction v = evaluate_tutte(u12(), Rational(1), Rational(1), Rational(1), Rational(0));
  CHECK(fraction_eq(v, PolyFraction(MultiPoly(2) + tv("0") + tv("1"))));
  PolyFraction half = evaluate_tutte(coloop_matroid(), Rational(1, 2), Rational(1), Rational(1),
                                     Rational(0));
  // x = 1/2 scales the constant subset term only.
  CHECK(fraction_eq(half, PolyFraction(MultiPoly(1) + 2 * tv("e"), MultiPoly(2))));
}

TEST_CASE("coefficient tables against counting oracles") {
  Matroid m = Matroid::uniform(2, {"0", "1", "2", "3"});
  auto rep = evaluation_report(m, Rational(1), Rational(1), Rational(1), Rational(0),
                               EvalOracle::bases_containing);
  CHECK(rep.match);
  CHECK(rep.coefficient_identities_ok);
  CHECK(rep.rows.size() == 16);
  CHECK(rep.rows[0].subset.empty());
  CHECK(rep.rows[0].coefficient == Rational(6));
  CHECK(rep.rows[0].oracle_count == 6);
  for (const auto& row : rep.rows) {
    CHECK(row.checked);
    if (row.subset.size() == 1) CHECK(row.coefficient == Rational(3));
    if (row.subset.size() == 2) CHECK(row.coefficient == Rational(1));
    if (row.subset.size() > 2) CHECK(row.coefficient == Rational(0));
  }

  auto power = evaluation_report(u12(), Rational(2), Rational(2), Rational(1), Rational(0),
                                 EvalOracle::power_count);
  CHECK(power.match);
  CHECK(power.rows[0].coefficient == Rational(4));

  auto indep = evaluation_report(u12(), Rational(2), Rational(1), Rational(1), Rational(0),
                                 EvalOracle::independent_containing);
  CHECK(indep.match);
  CHECK(indep.rows[0].coefficient == Rational(3));

  auto span = evaluation_report(u12(), Rational(1), Rational(2), Rational(0), Rational(1),
                                EvalOracle::spanning_disjoint);
  CHECK(span.match);
  CHECK(span.rows[0].coefficient == Rational(3));
  CHECK(span.rows.back().coefficient == Rational(0));
}

TEST_CASE("orientation oracles need the realizing graph") {
  Graph triangle{{"a", "b", "c"},
                 {{"1", "a", "b"}, {"2", "b", "c"}, {"3", "c", "a"}}};
  Matroid tm = graphic_matroid(triangle);

  auto acyc = evaluation_report(tm, Rational(2), Rational(0), Rational(1), Rational(0),
                                EvalOracle::acyclic_free, &triangle);
  CHECK(acyc.match);
  CHECK(acyc.rows[0].coefficient == Rational(6));
  for (const auto& row : acyc.rows) {
    if (row.subset.size() == 1) CHECK(row.coefficient == Rational(2));
    if (row.subset.size() == 2) CHECK(row.coefficient == Rational(0));
    // The full (dependent) edge set makes no claim.
    if (row.subset.size() == 3) CHECK_FALSE(row.checked);
  }

  auto strong = evaluation_report(tm, Rational(0), Rational(2), Rational(1), Rational(0),
                                  EvalOracle::strong_bidirected, &triangle);
  CHECK(strong.match);
  CHECK(strong.rows[0].coefficient == Rational(2));
  CHECK(strong.rows.back().coefficient == Rational(1));
  for (const auto& row : strong.rows) CHECK(row.checked);

  CHECK_ERRC(evaluation_report(tm, Rational(2), Rational(0), Rational(1), Rational(0),
                               EvalOracle::acyclic_free),
             oracle_requires_graph);
  Graph other{{"u", "v"}, {{"1", "u", "v"}, {"2", "u", "v"}, {"3", "u", "v"}}};
  CHECK_ERRC(evaluation_report(tm, Rational(2), Rational(0), Rational(1), Rational(0),
                               EvalOracle::acyclic_free, &other),
             oracle_requires_graph);
}

TEST_CASE("symbolic coefficient and substitution identities") {
  for (const Matroid& m :
       {loop_matroid(), coloop_matroid(), u12(), Matroid::uniform(2, {"0", "1", "2"})}) {
    CHECK(verify_coefficient_specializations(m));
  }
  for (const Matroid& m : {loop_matroid(), coloop_matroid(), u12()}) {
    CHECK(verify_reciprocal_substitutions(m));
  }
}

TEST_CASE("matroid recovery from the basis-counting evaluation") {
  for (const Matroid& m : corpus3()) {
    PolyFraction v = evaluate_tutte(m, Rational(1), Rational(1), Rational(1), Rational(0));
    CHECK(v.den() == MultiPoly::one());
    CHECK(recover_matroid(v.num(), m.ground()) == m);
  }
  // A bare constant marks every element as a loop.
  CHECK(recover_matroid(MultiPoly::one(), {"e"}) == loop_matroid().relabeled({{"e", "e"}}));
  CHECK_ERRC(recover_matroid(MultiPoly::one() + tv("0") * tv("1"), {"0", "1"}), not_a_matroid);
  CHECK_ERRC(recover_matroid(pv(X) + 1, {"0"}), not_a_matroid);
  CHECK_ERRC(recover_matroid(MultiPoly(), {"0"}), not_a_matroid);
}

TEST_CASE("point evaluations separate matroids away from the degenerate locus") {
  auto collisions = uniqueness_scan({"0", "1"}, Rational(3), Rational(2), Rational(1), Rational(0));
  CHECK(collisions.empty());
  // With (x-1)(y-1) = 1 the evaluation forgets the matroid entirely.
  auto degenerate = uniqueness_scan({"0", "1"}, Rational(2), Rational(2), Rational(1), Rational(0));
  CHECK(degenerate.size() == 10);  // all 5 matroids pairwise identified
}
