#include "equitutte/invariants.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace equitutte {

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

MultiPoly var(const Variable& v) { return MultiPoly::var(v); }
MultiPoly tvar(const Label& l) { return MultiPoly::var(Variable::t(l)); }

// Powers of base up to and including max_e.
std::vector<MultiPoly> power_table(const MultiPoly& base, int max_e) {
  std::vector<MultiPoly> out(max_e + 1);
  out[0] = MultiPoly::one();
  for (int i = 1; i <= max_e; ++i) out[i] = out[i - 1] * base;
  return out;
}

void require_elements(const Matroid& m, const char* what) {
  if (m.size() == 0) fail(errc::empty_ground, std::string(what) + " needs a non-empty ground set");
}

Label default_pivot(const Matroid& m) {
  for (const auto& l : m.ground())
    if (m.element_class(l) == ElementClass::general) return l;
  for (const auto& l : m.ground())
    if (m.element_class(l) == ElementClass::loop) return l;
  return m.ground().front();
}

MultiPoly tutte_dc_memo(const Matroid& m, const PivotChooser& pivot,
                        std::map<std::string, MultiPoly>& memo) {
  if (m.size() == 0) return MultiPoly::one();
  std::string key = m.key();
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Label e = pivot(m);
  MultiPoly rt = MultiPoly::one() + var(R) * tvar(e);
  MultiPoly st = MultiPoly::one() + var(S) * tvar(e);
  MultiPoly res;
  switch (m.element_class(e)) {
    case ElementClass::general:
      res = st * tutte_dc_memo(m.deleted(e), pivot, memo) +
            rt * tutte_dc_memo(m.contracted(e), pivot, memo);
      break;
    case ElementClass::loop:
      res = ((var(Y) - 1) * rt + st) * tutte_dc_memo(m.deleted(e), pivot, memo);
      break;
    case ElementClass::coloop:
      res = ((var(X) - 1) * st + rt) * tutte_dc_memo(m.contracted(e), pivot, memo);
      break;
  }
  memo.emplace(std::move(key), res);
  return res;
}

MultiPoly f_dc_memo(const Matroid& m, std::map<std::string, MultiPoly>& memo) {
  if (m.size() == 1) {
    const Label& e = m.ground().front();
    if (m.rank() == 0) return MultiPoly::one() - tvar(e) * var(W);
    return MultiPoly::one() + tvar(e) * var(Z);
  }
  std::string key = m.key();
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Label e = default_pivot(m);
  MultiPoly a = var(ALPHA), b = var(BETA);
  MultiPoly res;
  switch (m.element_class(e)) {
    case ElementClass::general:
      res = (MultiPoly::one() + a * var(W)) * (b - tvar(e)) * f_dc_memo(m.deleted(e), memo) +
            (MultiPoly::one() + b * var(Z)) * (a + tvar(e)) * f_dc_memo(m.contracted(e), memo);
      break;
    case ElementClass::loop:
      res = (MultiPoly::one() - tvar(e) * var(W)) * (a + b) * f_dc_memo(m.deleted(e), memo);
      break;
    case ElementClass::coloop:
      res = (MultiPoly::one() + tvar(e) * var(Z)) * (a + b) * f_dc_memo(m.contracted(e), memo);
      break;
  }
  memo.emplace(std::move(key), res);
  return res;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

MultiPoly equivariant_tutte(const Matroid& m) {
  int n = m.size();
  auto xm1 = power_table(var(X) - 1, m.rank());
  auto ym1 = power_table(var(Y) - 1, n);
  std::vector<MultiPoly> in_factor(n), out_factor(n);
  for (int i = 0; i < n; ++i) {
    in_factor[i] = MultiPoly::one() + var(R) * tvar(m.ground()[i]);
    out_factor[i] = MultiPoly::one() + var(S) * tvar(m.ground()[i]);
  }
  MultiPoly total;
  std::uint32_t full = m.full_mask();
  for (std::uint32_t sub = 0;; ++sub) {
    int rk = m.rank_of_mask(sub);
    int nl = static_cast<int>(std::popcount(sub)) - rk;
    MultiPoly term = xm1[m.rank() - rk] * ym1[nl];
    for (int i = 0; i < n; ++i) term *= (sub & (1u << i)) ? in_factor[i] : out_factor[i];
    total += term;
    if (sub == full) break;
  }
  return total;
}

MultiPoly equivariant_tutte_dc(const Matroid& m) { return equivariant_tutte_dc(m, default_pivot); }

MultiPoly equivariant_tutte_dc(const Matroid& m, const PivotChooser& pivot) {
  std::map<std::string, MultiPoly> memo;
  return tutte_dc_memo(m, pivot, memo);
}

MultiPoly classical_tutte(const Matroid& m) {
  auto xm1 = power_table(var(X) - 1, m.rank());
  auto ym1 = power_table(var(Y) - 1, m.size());
  MultiPoly total;
  std::uint32_t full = m.full_mask();
  for (std::uint32_t sub = 0;; ++sub) {
    int rk = m.rank_of_mask(sub);
    int nl = static_cast<int>(std::popcount(sub)) - rk;
    total += xm1[m.rank() - rk] * ym1[nl];
    if (sub == full) break;
  }
  return total;
}

PolyFraction multivariate_tutte(const Matroid& m) {
  auto qpow = power_table(var(Q), m.rank());
  MultiPoly num;
  std::uint32_t full = m.full_mask();
  for (std::uint32_t sub = 0;; ++sub) {
    MultiPoly term = qpow[m.rank() - m.rank_of_mask(sub)];
    for (int i = 0; i < m.size(); ++i)
      if (sub & (1u << i)) term *= MultiPoly::var(Variable::v(m.ground()[i]));
    num += term;
    if (sub == full) break;
  }
  return PolyFraction(std::move(num), qpow.back());
}

PolyFraction potts_from_equivariant(const Matroid& m) {
  PolyBindings bind{{X, var(Q) + 1}, {Y, MultiPoly(2)}, {R, MultiPoly::one()}, {S, MultiPoly()}};
  for (const auto& l : m.ground())
    bind.emplace(Variable::t(l), MultiPoly::var(Variable::v(l)) - 1);
  return PolyFraction(substitute(equivariant_tutte(m), bind), var(Q).pow(m.rank()));
}

PolyFraction equivariant_from_potts(const PolyFraction& potts, int rank,
                                    const std::vector<Label>& ground) {
  FractionBindings bind;
  bind.emplace(Q, PolyFraction((var(X) - 1) * (var(Y) - 1)));
  for (const auto& l : ground)
    bind.emplace(Variable::v(l),
                 PolyFraction((MultiPoly::one() + var(R) * tvar(l)) * (var(Y) - 1),
                              MultiPoly::one() + var(S) * tvar(l)));
  MultiPoly prefactor = (var(X) - 1).pow(rank);
  for (const auto& l : ground) prefactor *= MultiPoly::one() + var(S) * tvar(l);
  return PolyFraction(prefactor) * substitute(potts, bind);
}

MultiPoly f_polynomial(const Matroid& m) {
  require_elements(m, "the pushforward polynomial");
  int rk = m.rank(), crk = m.corank(), n = m.size();
  auto az = power_table(MultiPoly::one() - var(ALPHA) * var(Z), rk);
  auto aw = power_table(MultiPoly::one() + var(ALPHA) * var(W), crk);
  auto bz = power_table(MultiPoly::one() + var(BETA) * var(Z), rk);
  auto bw = power_table(MultiPoly::one() - var(BETA) * var(W), crk);
  std::vector<MultiPoly> in_factor(n), out_factor(n);
  for (int i = 0; i < n; ++i) {
    in_factor[i] = var(ALPHA) + tvar(m.ground()[i]);
    out_factor[i] = var(BETA) - tvar(m.ground()[i]);
  }
  MultiPoly num;
  std::uint32_t full = m.full_mask();
  for (std::uint32_t sub = 0;; ++sub) {
    int r = m.rank_of_mask(sub);
    int nl = static_cast<int>(std::popcount(sub)) - r;
    MultiPoly term = az[rk - r] * aw[crk - nl] * bz[r] * bw[nl];
    for (int i = 0; i < n; ++i) term *= (sub & (1u << i)) ? in_factor[i] : out_factor[i];
    num += term;
    if (sub == full) break;
  }
  return divide_exact_alpha_plus_beta(num);
}

MultiPoly f_polynomial_dc(const Matroid& m) {
  require_elements(m, "the pushforward polynomial");
  std::map<std::string, MultiPoly> memo;
  return f_dc_memo(m, memo);
}

bool verify_tutte_fm_relation(const Matroid& m) {
  require_elements(m, "the correspondence check");
  MultiPoly rs = var(R) + var(S);
  PolyFraction lhs = substitute(
      equivariant_tutte(m),
      FractionBindings{{X, PolyFraction(rs, var(S) + var(Z))},
                       {Y, PolyFraction(rs, var(R) + var(W))},
                       {S, PolyFraction(-var(S))}});
  PolyFraction fsub = substitute(
      f_polynomial(m),
      FractionBindings{{ALPHA, PolyFraction(MultiPoly::one(), var(R))},
                       {BETA, PolyFraction(MultiPoly::one(), var(S))}});
  PolyFraction rhs = PolyFraction(var(R) * var(S)).pow(m.size() - 1) * PolyFraction(rs) /
                     (PolyFraction(var(S) + var(Z)).pow(m.rank()) *
                      PolyFraction(var(R) + var(W)).pow(m.corank())) *
                     fsub;
  return fraction_eq(lhs, rhs);
}

MultiPoly p_polynomial(const Matroid& m) {
  require_elements(m, "the top-degree pushforward");
  MultiPoly extracted =
      coefficient_of(coefficient_of(f_polynomial(m), Z, 0), W, static_cast<unsigned>(m.corank()));

  int crk = m.corank(), n = m.size();
  auto apow = power_table(var(ALPHA), crk);
  auto nbpow = power_table(-var(BETA), n);
  MultiPoly num;
  std::uint32_t full = m.full_mask();
  for (std::uint32_t sub = 0;; ++sub) {
    int nl = static_cast<int>(std::popcount(sub)) - m.rank_of_mask(sub);
    MultiPoly term = apow[crk - nl] * nbpow[nl];
    for (int i = 0; i < n; ++i)
      term *= (sub & (1u << i)) ? var(ALPHA) + tvar(m.ground()[i])
                                : var(BETA) - tvar(m.ground()[i]);
    num += term;
    if (sub == full) break;
  }
  MultiPoly summed = divide_exact_alpha_plus_beta(num);
  if (extracted != summed)
    fail(errc::lemma_violation, "top-degree pushforward routes disagree");
  return extracted;
}

MultiPoly equivariant_charpoly(const Matroid& m) {
  require_elements(m, "the characteristic polynomial");
  PolyBindings bind{{X, MultiPoly::one() - var(Q)}, {Y, MultiPoly()}, {R, var(Q)}, {S, MultiPoly::one()}};
  MultiPoly num = substitute(equivariant_tutte(m), bind);
  if (m.rank() % 2) num = -num;
  MultiPoly fast = divide_exact_linear(num, Q, MultiPoly::one());

  // Direct sum: q^{rank - rank(S)} (-1)^{|S|} prod_{e not in S}(1 + t_e)
  // prod_{e in S}(1 + q t_e), divided by q - 1.
  auto qpow = power_table(var(Q), m.rank());
  MultiPoly direct_num;
  std::uint32_t full = m.full_mask();
  for (std::uint32_t sub = 0;; ++sub) {
    MultiPoly term = qpow[m.rank() - m.rank_of_mask(sub)];
    if (std::popcount(sub) % 2) term = -term;
    for (int i = 0; i < m.size(); ++i)
      term *= (sub & (1u << i)) ? MultiPoly::one() + var(Q) * tvar(m.ground()[i])
                                : MultiPoly::one() + tvar(m.ground()[i]);
    direct_num += term;
    if (sub == full) break;
  }
  MultiPoly direct = divide_exact_linear(direct_num, Q, MultiPoly::one());
  if (fast != direct) fail(errc::lemma_violation, "characteristic polynomial routes disagree");
  return fast;
}

bool CharpolyRelations::all_ok() const {
  if (!top_coefficient_identity) return false;
  for (const auto& row : contraction_rows)
    if (!row.second) return false;
  return true;
}

CharpolyRelations verify_charpoly_relations(const Matroid& m) {
  require_elements(m, "the characteristic relations");
  CharpolyRelations rep;
  MultiPoly chi = equivariant_charpoly(m);

  PolyFraction lhs = substitute(p_polynomial(m),
                                FractionBindings{{ALPHA, PolyFraction(MultiPoly::one(), var(Q))},
                                                 {BETA, PolyFraction(MultiPoly(-1))}});
  lhs = lhs * PolyFraction((-var(Q)).pow(m.size() - 1));
  rep.top_coefficient_identity = fraction_eq(lhs, PolyFraction(chi));

  std::uint32_t full = m.full_mask();
  for (std::uint32_t sub = 0; sub < full; ++sub) {
    PolyBindings bind;
    for (int i = 0; i < m.size(); ++i)
      bind.emplace(Variable::t(m.ground()[i]), (sub & (1u << i)) ? MultiPoly(-1) : MultiPoly());
    MultiPoly specialized = substitute(chi, bind);

    Matroid minor = m.contracted_set(m.labels_of(sub));
    MultiPoly minor_t = substitute(classical_tutte(minor),
                                   PolyBindings{{X, MultiPoly::one() - var(Q)}, {Y, MultiPoly()}});
    if (minor.rank() % 2) minor_t = -minor_t;
    MultiPoly reduced = divide_exact_linear(minor_t, Q, MultiPoly::one());
    int k = std::popcount(sub);
    MultiPoly rhs = (MultiPoly::one() - var(Q)).pow(k) * reduced;
    if (k % 2) rhs = -rhs;
    rep.contraction_rows.emplace_back(m.labels_of(sub), specialized == rhs);
  }
  return rep;
}

PolyFraction tg_invariant(const Matroid& m, const TgParameters& p) {
  if (m.size() == 0) return p.gamma;
  Label e = default_pivot(m);
  PolyFraction te{tvar(e)};
  switch (m.element_class(e)) {
    case ElementClass::general:
      return (p.a1 * te + p.a2) * tg_invariant(m.deleted(e), p) +
             (p.b1 * te + p.b2) * tg_invariant(m.contracted(e), p);
    case ElementClass::loop:
      return ((p.b1 * p.alpha + p.a1) * te + (p.b2 * p.alpha + p.a2)) *
             tg_invariant(m.deleted(e), p);
    case ElementClass::coloop:
    default:
      return ((p.a1 * p.beta + p.b1) * te + (p.a2 * p.beta + p.b2)) *
             tg_invariant(m.contracted(e), p);
  }
}

PolyFraction tg_invariant_closed(const Matroid& m, const TgParameters& p) {
  if (p.a2.is_zero() || p.b2.is_zero())
    fail(errc::zero_parameter, "closed form needs nonzero constant multipliers");
  FractionBindings bind{{X, p.beta * p.a2 / p.b2 + PolyFraction(1)},
                        {Y, p.alpha * p.b2 / p.a2 + PolyFraction(1)},
                        {R, p.b1 / p.b2},
                        {S, p.a1 / p.a2}};
  PolyFraction sub = substitute(equivariant_tutte(m), bind);
  return p.gamma * p.a2.pow(m.corank()) * p.b2.pow(m.rank()) * sub;
}

std::optional<std::pair<PolyFraction, PolyFraction>> solve_tg_parameters(
    const PolyFraction& c1, const PolyFraction& c2, const PolyFraction& d1,
    const PolyFraction& d2, const PolyFraction& a1, const PolyFraction& a2,
    const PolyFraction& b1, const PolyFraction& b2) {
  if (a2.is_zero() || b2.is_zero())
    fail(errc::zero_parameter, "solving needs nonzero constant multipliers");
  PolyFraction alpha = (c2 - a2) / b2;
  PolyFraction beta = (d2 - b2) / a2;
  if (!fraction_eq(c1, b1 * alpha + a1)) return std::nullopt;
  if (!fraction_eq(d1, a1 * beta + b1)) return std::nullopt;
  return std::make_pair(alpha, beta);
}

PolyFraction evaluate_tutte(const Matroid& m, const Rational& x0, const Rational& y0,
                            const Rational& r0, const Rational& s0) {
  FractionBindings bind{{X, PolyFraction(x0)}, {Y, PolyFraction(y0)}, {R, PolyFraction(r0)}, {S, PolyFraction(s0)}};
  return substitute(equivariant_tutte(m), bind);
}

namespace {

Integer oracle_count_for(const Matroid& m, std::uint32_t sub, EvalOracle oracle, const Graph* graph) {
  switch (oracle) {
    case EvalOracle::bases_containing: {
      Integer c = 0;
      for (std::uint32_t b : m.bases())
        if ((b & sub) == sub) ++c;
      return c;
    }
    case EvalOracle::power_count: {
      Integer c = 1;
      c <<= m.size() - std::popcount(sub);
      return c;
    }
    case EvalOracle::independent_containing: {
      Integer c = 0;
      std::uint32_t full = m.full_mask();
      for (std::uint32_t i = 0;; ++i) {
        if ((i & sub) == sub && m.is_independent(i)) ++c;
        if (i == full) break;
      }
      return c;
    }
    case EvalOracle::spanning_disjoint: {
      Integer c = 0;
      std::uint32_t full = m.full_mask();
      for (std::uint32_t i = 0;; ++i) {
        if (!(i & sub) && m.is_spanning(i)) ++c;
        if (i == full) break;
      }
      return c;
    }
    case EvalOracle::acyclic_free:
      return Integer(static_cast<long>(count_acyclic_orientations_free_set(*graph, m.labels_of(sub))));
    case EvalOracle::strong_bidirected:
    default:
      return Integer(static_cast<long>(count_strongly_connected_bidirected(*graph, m.labels_of(sub))));
  }
}

}  // namespace

EvaluationReport evaluation_report(const Matroid& m, const Rational& x0, const Rational& y0,
                                   const Rational& r0, const Rational& s0, EvalOracle oracle,
                                   const Graph* graph) {
  bool needs_graph = oracle == EvalOracle::acyclic_free || oracle == EvalOracle::strong_bidirected;
  if (needs_graph) {
    if (!graph) fail(errc::oracle_requires_graph, "orientation oracles need the realizing graph");
    if (graphic_matroid(*graph) != m)
      fail(errc::oracle_requires_graph, "attached graph does not realize the matroid");
  }
  EvaluationReport rep;
  rep.point = {x0, y0, r0, s0};
  PolyFraction value = evaluate_tutte(m, x0, y0, r0, s0);
  Integer den = value.den().constant_value();

  rep.match = true;
  std::uint32_t full = m.full_mask();
  for (std::uint32_t sub = 0;; ++sub) {
    EvaluationRow row;
    row.subset = m.labels_of(sub);
    row.coefficient = Rational(coefficient_of_t_monomial(value.num(), row.subset).constant_value(), den);
    row.coefficient.canonicalize();
    row.checked = oracle != EvalOracle::acyclic_free || m.is_independent(sub);
    if (row.checked) {
      row.oracle_count = oracle_count_for(m, sub, oracle, graph);
      row.ok = row.coefficient == Rational(row.oracle_count);
      rep.match = rep.match && row.ok;
    }
    rep.rows.push_back(std::move(row));
    if (sub == full) break;
  }
  rep.coefficient_identities_ok = verify_coefficient_specializations(m);
  rep.match = rep.match && rep.coefficient_identities_ok;
  return rep;
}

bool verify_coefficient_specializations(const Matroid& m) {
  MultiPoly tutte = equivariant_tutte(m);
  MultiPoly at_r = substitute(tutte, PolyBindings{{R, MultiPoly::one()}, {S, MultiPoly()}});
  MultiPoly at_s = substitute(tutte, PolyBindings{{R, MultiPoly()}, {S, MultiPoly::one()}});
  std::uint32_t full = m.full_mask();
  for (std::uint32_t sub = 0;; ++sub) {
    auto labels = m.labels_of(sub);
    MultiPoly lhs_r = coefficient_of_t_monomial(at_r, labels);
    MultiPoly rhs_r =
        (var(Y) - 1).pow(m.nullity_of_mask(sub)) * classical_tutte(m.contracted_set(labels));
    if (lhs_r != rhs_r) return false;
    MultiPoly lhs_s = coefficient_of_t_monomial(at_s, labels);
    MultiPoly rhs_s = (var(X) - 1).pow(m.rank() - m.rank_of_mask(m.full_mask() & ~sub)) *
                      classical_tutte(m.deleted_set(labels));
    if (lhs_s != rhs_s) return false;
    if (sub == full) break;
  }
  return true;
}

bool verify_reciprocal_substitutions(const Matroid& m) {
  MultiPoly tutte = equivariant_tutte(m);
  std::uint32_t full = m.full_mask();
  for (std::uint32_t sub = 0;; ++sub) {
    auto labels = m.labels_of(sub);
    int k = std::popcount(sub);

    FractionBindings to_s;
    for (const auto& l : labels) to_s.emplace(Variable::t(l), PolyFraction(MultiPoly(-1), var(S)));
    PolyFraction lhs = substitute(tutte, to_s);
    PolyFraction rhs = PolyFraction(var(S) - var(R), var(S)).pow(k) *
                       PolyFraction((var(Y) - 1).pow(m.nullity_of_mask(sub))) *
                       PolyFraction(equivariant_tutte(m.contracted_set(labels)));
    if (!fraction_eq(lhs, rhs)) return false;

    FractionBindings to_r;
    for (const auto& l : labels) to_r.emplace(Variable::t(l), PolyFraction(MultiPoly(-1), var(R)));
    lhs = substitute(tutte, to_r);
    rhs = PolyFraction(var(R) - var(S), var(R)).pow(k) *
          PolyFraction((var(X) - 1).pow(m.rank() - m.rank_of_mask(full & ~sub))) *
          PolyFraction(equivariant_tutte(m.deleted_set(labels)));
    if (!fraction_eq(lhs, rhs)) return false;

    if (sub == full) break;
  }
  return true;
}

Matroid recover_matroid(const MultiPoly& p, const std::vector<Label>& ground) {
  std::map<Label, int> pos;
  for (std::size_t i = 0; i < ground.size(); ++i) pos[ground[i]] = static_cast<int>(i);
  std::vector<std::uint32_t> independents;
  for (const auto& term : p.terms()) {
    std::uint32_t mask = 0;
    for (const auto& f : term.first.factors()) {
      if (!f.first.is_t() || f.second != 1)
        fail(errc::not_a_matroid, "input is not multilinear in the element variables");
      auto it = pos.find(f.first.label());
      if (it == pos.end())
        fail(errc::not_a_matroid, "variable " + f.first.name() + " outside the ground set");
      mask |= 1u << it->second;
    }
    independents.push_back(mask);
  }
  if (independents.empty()) fail(errc::not_a_matroid, "no independent sets");
  std::sort(independents.begin(), independents.end());
  auto is_independent = [&](std::uint32_t m) {
    return std::binary_search(independents.begin(), independents.end(), m);
  };
  if (!is_independent(0)) fail(errc::not_a_matroid, "the empty set is not marked independent");
  for (std::uint32_t ind : independents)
    for (int i = 0; i < static_cast<int>(ground.size()); ++i)
      if ((ind & (1u << i)) && !is_independent(ind & ~(1u << i)))
        fail(errc::not_a_matroid, "independent sets are not downward closed");
  std::vector<std::uint32_t> maximal;
  for (std::uint32_t ind : independents) {
    bool top = true;
    for (int i = 0; i < static_cast<int>(ground.size()) && top; ++i)
      if (!(ind & (1u << i)) && is_independent(ind | (1u << i))) top = false;
    if (top) maximal.push_back(ind);
  }
  try {
    return Matroid::from_masks(ground, std::move(maximal));
  } catch (const error& e) {
    fail(errc::not_a_matroid, std::string("recovered family is not a matroid: ") + e.what());
  }
}

std::vector<std::pair<Matroid, Matroid>> uniqueness_scan(const std::vector<Label>& ground,
                                                         const Rational& x0, const Rational& y0,
                                                         const Rational& r0, const Rational& s0) {
  auto matroids = enumerate_labeled_matroids(ground);
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < matroids.size(); ++i) {
    PolyFraction v = evaluate_tutte(matroids[i], x0, y0, r0, s0);
    Integer den = v.den().constant_value();
    Integer content = den;
    for (const auto& term : v.num().terms()) content = gcd(content, term.second);
    if (content == 0) content = 1;
    MultiPoly num;
    for (const auto& term : v.num().terms())
      num += MultiPoly::term(term.second / content, term.first);
    buckets[num.str() + "|" + Integer(den / content).get_str()].push_back(i);
  }
  std::vector<std::pair<Matroid, Matroid>> collisions;
  for (const auto& [key, idx] : buckets)
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        collisions.emplace_back(matroids[idx[i]], matroids[idx[j]]);
  return collisions;
}

}  // namespace equitutte
