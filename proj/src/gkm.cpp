#include "equitutte/gkm.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "equitutte/invariants.hpp"

namespace equitutte {

namespace {

const Variable ZVAR = Variable::z();
const Variable WVAR = Variable::w();
const Variable AVAR = Variable::alpha();
const Variable BVAR = Variable::beta();

MultiPoly tv(const Label& l) { return MultiPoly::var(Variable::t(l)); }

// Positions of the ordering's labels within ground; must hit every slot once.
std::vector<int> positions_of(const std::vector<Label>& ground, const std::vector<Label>& ordering) {
  std::map<Label, int> pos;
  for (std::size_t i = 0; i < ground.size(); ++i) pos[ground[i]] = static_cast<int>(i);
  if (ordering.size() != ground.size())
    fail(errc::bad_index, "ordering has " + std::to_string(ordering.size()) + " labels, ground has " +
                              std::to_string(ground.size()));
  std::vector<int> out;
  std::vector<bool> seen(ground.size(), false);
  for (const auto& l : ordering) {
    auto it = pos.find(l);
    if (it == pos.end()) fail(errc::unknown_label, "label " + l + " is not in the ground set");
    if (seen[it->second]) fail(errc::label_collision, "label " + l + " repeats in the ordering");
    seen[it->second] = true;
    out.push_back(it->second);
  }
  return out;
}

int ground_position(const std::vector<Label>& ground, const Label& l) {
  auto it = std::find(ground.begin(), ground.end(), l);
  if (it == ground.end()) fail(errc::unknown_label, "label " + l + " is not in the ground set");
  return static_cast<int>(it - ground.begin());
}

// One entry per ordering, computed from the greedy basis and memoized per
// distinct basis.
GkmClass make_class(const Matroid& m, const std::function<MultiPoly(std::uint32_t)>& from_basis) {
  if (m.size() > 6) fail(errc::ground_too_large, "ordering-indexed tuples are capped at 6 elements");
  GkmClass c;
  c.ground = m.ground();
  const auto& perms = permutations_of(m.size());
  c.entries.reserve(perms.size());
  std::map<std::uint32_t, MultiPoly> memo;
  for (const auto& p : perms) {
    std::uint32_t basis = m.lex_first_basis_mask(p);
    auto it = memo.find(basis);
    if (it == memo.end()) it = memo.emplace(basis, from_basis(basis)).first;
    c.entries.push_back(it->second);
  }
  return c;
}

MultiPoly total_sub_dual_for_basis(const Matroid& m, std::uint32_t basis) {
  MultiPoly out = MultiPoly::one();
  for (int i = 0; i < m.size(); ++i)
    if (basis & (1u << i)) out *= MultiPoly::one() + tv(m.ground()[i]) * MultiPoly::var(ZVAR);
  return out;
}

MultiPoly total_quot_for_basis(const Matroid& m, std::uint32_t basis) {
  MultiPoly out = MultiPoly::one();
  for (int i = 0; i < m.size(); ++i)
    if (!(basis & (1u << i))) out *= MultiPoly::one() - tv(m.ground()[i]) * MultiPoly::var(WVAR);
  return out;
}

std::uint32_t minor_mask_in_parent(const Matroid& parent, const Matroid& minor, std::uint32_t mask) {
  return parent.mask_of(minor.labels_of(mask));
}

}  // namespace

const MultiPoly& GkmClass::at(const std::vector<Label>& ordering) const {
  const auto& perms = permutations_of(static_cast<int>(ground.size()));
  if (entries.size() != perms.size())
    fail(errc::bad_index, "tuple holds " + std::to_string(entries.size()) + " entries, expected " +
                              std::to_string(perms.size()));
  return entries[permutation_rank(positions_of(ground, ordering))];
}

MultiPoly& GkmClass::at(const std::vector<Label>& ordering) {
  return const_cast<MultiPoly&>(static_cast<const GkmClass&>(*this).at(ordering));
}

GkmClass chern_sub(const Matroid& m, int i) {
  if (i < 0 || i > m.rank()) fail(errc::bad_index, "index " + std::to_string(i) + " is outside [0, rank]");
  return make_class(m, [&](std::uint32_t basis) {
    std::vector<MultiPoly> values;
    for (int j = 0; j < m.size(); ++j)
      if (basis & (1u << j)) values.push_back(-tv(m.ground()[j]));
    return elementary_symmetric(values, static_cast<unsigned>(i));
  });
}

GkmClass chern_quot(const Matroid& m, int i) {
  if (i < 0 || i > m.corank())
    fail(errc::bad_index, "index " + std::to_string(i) + " is outside [0, corank]");
  return make_class(m, [&](std::uint32_t basis) {
    std::vector<MultiPoly> values;
    for (int j = 0; j < m.size(); ++j)
      if (!(basis & (1u << j))) values.push_back(-tv(m.ground()[j]));
    return elementary_symmetric(values, static_cast<unsigned>(i));
  });
}

GkmClass chern_sub_dual(const Matroid& m, int i) {
  if (i < 0 || i > m.rank()) fail(errc::bad_index, "index " + std::to_string(i) + " is outside [0, rank]");
  return make_class(m, [&](std::uint32_t basis) {
    std::vector<MultiPoly> values;
    for (int j = 0; j < m.size(); ++j)
      if (basis & (1u << j)) values.push_back(tv(m.ground()[j]));
    return elementary_symmetric(values, static_cast<unsigned>(i));
  });
}

GkmClass total_chern_sub_dual_z(const Matroid& m) {
  return make_class(m, [&](std::uint32_t basis) { return total_sub_dual_for_basis(m, basis); });
}

GkmClass total_chern_quot_w(const Matroid& m) {
  return make_class(m, [&](std::uint32_t basis) { return total_quot_for_basis(m, basis); });
}

GkmClass xi_class(const Matroid& m) {
  return make_class(m, [&](std::uint32_t basis) {
    return total_sub_dual_for_basis(m, basis) * total_quot_for_basis(m, basis);
  });
}

bool gkm_check(const GkmClass& c, GkmWitness* witness) {
  int n = static_cast<int>(c.ground.size());
  const auto& perms = permutations_of(n);
  if (c.entries.size() != perms.size())
    fail(errc::bad_index, "tuple holds " + std::to_string(c.entries.size()) + " entries, expected " +
                              std::to_string(perms.size()));
  for (std::size_t r = 0; r < perms.size(); ++r) {
    const auto& p = perms[r];
    for (int i = 0; i + 1 < n; ++i) {
      if (p[i] > p[i + 1]) continue;  // each unordered swap pair once
      std::vector<int> swapped = p;
      std::swap(swapped[i], swapped[i + 1]);
      MultiPoly diff = c.entries[r] - c.entries[permutation_rank(swapped)];
      PolyBindings bind{{Variable::t(c.ground[p[i]]), tv(c.ground[p[i + 1]])}};
      if (!substitute(diff, bind).is_zero()) {
        if (witness) {
          witness->ordering.clear();
          for (int pos : p) witness->ordering.push_back(c.ground[pos]);
          witness->slot = i;
        }
        return false;
      }
    }
  }
  return true;
}

MultiPoly tangent_weight_perm(const std::vector<Label>& ordering) {
  MultiPoly out = MultiPoly::one();
  for (std::size_t i = 1; i < ordering.size(); ++i) out *= tv(ordering[i - 1]) - tv(ordering[i]);
  return out;
}

MultiPoly tangent_weight_product_point(const std::vector<Label>& ground, const Label& a,
                                       const Label& b) {
  ground_position(ground, a);
  ground_position(ground, b);
  MultiPoly out = MultiPoly::one();
  for (const auto& e : ground)
    if (e != a) out *= tv(e) - tv(a);
  for (const auto& e : ground)
    if (e != b) out *= tv(b) - tv(e);
  return out;
}

PolyFraction pushforward_localized(const GkmClass& c, const ProductPoint& p) {
  int n = static_cast<int>(c.ground.size());
  if (n == 0) fail(errc::empty_ground, "the fixed-point sum needs a non-empty ground set");
  const auto& perms = permutations_of(n);
  if (c.entries.size() != perms.size())
    fail(errc::bad_index, "tuple holds " + std::to_string(c.entries.size()) + " entries, expected " +
                              std::to_string(perms.size()));
  int pa = ground_position(c.ground, p.a);
  int pb = ground_position(c.ground, p.b);
  std::vector<std::size_t> chosen;
  std::vector<MultiPoly> weights;
  for (std::size_t r = 0; r < perms.size(); ++r) {
    const auto& q = perms[r];
    if (q.front() != pb || q.back() != pa) continue;
    chosen.push_back(r);
    std::vector<Label> labels;
    for (int pos : q) labels.push_back(c.ground[pos]);
    weights.push_back(tangent_weight_perm(labels));
  }
  if (chosen.empty()) return PolyFraction();
  MultiPoly den = MultiPoly::one();
  for (const auto& w : weights) den *= w;
  MultiPoly num;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    MultiPoly term = c.entries[chosen[i]];
    for (std::size_t j = 0; j < chosen.size(); ++j)
      if (j != i) term *= weights[j];
    num += term;
  }
  num *= tangent_weight_product_point(c.ground, p.a, p.b);
  return PolyFraction(std::move(num), std::move(den));
}

bool PushforwardReport::all_ok() const {
  for (const auto& row : rows)
    if (!row.ok) return false;
  return true;
}

PushforwardReport verify_pushforward_theorem(const Matroid& m) {
  if (m.size() == 0) fail(errc::empty_ground, "the pushforward check needs a non-empty ground set");
  GkmClass xi = xi_class(m);
  MultiPoly f = f_polynomial(m);
  PushforwardReport rep;
  for (const auto& a : m.ground()) {
    for (const auto& b : m.ground()) {
      PushforwardCheck row;
      row.point = {a, b};
      row.localized = pushforward_localized(xi, row.point);
      row.expected =
          PolyFraction(substitute(f, PolyBindings{{AVAR, -tv(a)}, {BVAR, tv(b)}}));
      row.ok = fraction_eq(row.localized, row.expected);
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

int compute_k_sigma(const Matroid& m, const std::vector<Label>& ordering, const Label& pivot) {
  int pivot_pos = m.position(pivot);
  int n = m.size() - 1;
  {
    std::vector<Label> rest;
    for (const auto& l : m.ground())
      if (l != pivot) rest.push_back(l);
    positions_of(rest, ordering);  // validates shape
  }
  Matroid del = m.deleted(pivot);
  Matroid con = m.contracted(pivot);
  std::vector<int> del_order, con_order;
  for (const auto& l : ordering) {
    del_order.push_back(del.position(l));
    con_order.push_back(con.position(l));
  }
  std::uint32_t con_minor = con.lex_first_basis_mask(con_order);
  std::uint32_t del_minor = del.lex_first_basis_mask(del_order);
  std::uint32_t con_target = minor_mask_in_parent(m, con, con_minor) | (1u << pivot_pos);
  std::uint32_t del_target = minor_mask_in_parent(m, del, del_minor);

  std::vector<int> base_positions;
  for (const auto& l : ordering) base_positions.push_back(m.position(l));
  int k = -1;
  bool in_prefix = true;
  for (int l = 0; l <= n; ++l) {
    std::vector<int> order = base_positions;
    order.insert(order.begin() + l, pivot_pos);
    std::uint32_t basis = m.lex_first_basis_mask(order);
    if (basis == con_target) {
      if (!in_prefix)
        fail(errc::lemma_violation, "contraction form reappears after the cutoff at slot " +
                                        std::to_string(l));
      k = l;
    } else if (basis == del_target) {
      in_prefix = false;
    } else {
      fail(errc::lemma_violation, "insertion basis matches neither minor form at slot " +
                                      std::to_string(l));
    }
  }
  if (-1 < k && k < n) {
    std::uint32_t joined =
        minor_mask_in_parent(m, con, con_minor) | (1u << m.position(ordering[k]));
    if (joined != del_target)
      fail(errc::lemma_violation, "minor bases do not differ by the splitting element");
  }
  ElementClass cls = m.element_class(pivot);
  if ((k == -1) != (cls == ElementClass::loop) || (k == n) != (cls == ElementClass::coloop))
    fail(errc::lemma_violation, "splitting index disagrees with the element class");
  return k;
}

bool verify_minor_entry_relations(const Matroid& m, const Label& pivot) {
  m.position(pivot);
  int n = m.size() - 1;
  Matroid del = m.deleted(pivot);
  Matroid con = m.contracted(pivot);
  GkmClass xi_m = xi_class(m);
  GkmClass xi_del = xi_class(del);
  GkmClass xi_con = xi_class(con);
  bool general = m.element_class(pivot) == ElementClass::general;
  GkmClass sdz_del, sdz_con, qw_del, qw_con;
  if (general) {
    sdz_del = total_chern_sub_dual_z(del);
    sdz_con = total_chern_sub_dual_z(con);
    qw_del = total_chern_quot_w(del);
    qw_con = total_chern_quot_w(con);
  }
  MultiPoly zfac = MultiPoly::one() + tv(pivot) * MultiPoly::var(ZVAR);
  MultiPoly wfac = MultiPoly::one() - tv(pivot) * MultiPoly::var(WVAR);

  std::vector<Label> rest = del.ground();
  for (const auto& q : permutations_of(n)) {
    std::vector<Label> ordering;
    for (int pos : q) ordering.push_back(rest[pos]);
    int k = compute_k_sigma(m, ordering, pivot);
    for (int l = 0; l <= n; ++l) {
      std::vector<Label> inserted = ordering;
      inserted.insert(inserted.begin() + l, pivot);
      MultiPoly expected =
          (l <= k) ? zfac * xi_con.at(ordering) : wfac * xi_del.at(ordering);
      if (xi_m.at(inserted) != expected) return false;
    }
    if (general) {
      const Label& sk = ordering[k];
      if ((MultiPoly::one() + tv(sk) * MultiPoly::var(ZVAR)) * sdz_con.at(ordering) !=
          sdz_del.at(ordering))
        return false;
      if ((MultiPoly::one() - tv(sk) * MultiPoly::var(WVAR)) * qw_del.at(ordering) !=
          qw_con.at(ordering))
        return false;
    }
  }
  return true;
}

bool verify_pushforward_dc(const Matroid& m, const Label& pivot) {
  m.position(pivot);
  if (m.size() < 3) return true;  // no off-diagonal pair avoids the pivot
  ElementClass cls = m.element_class(pivot);
  GkmClass xi_m = xi_class(m);
  GkmClass xi_del = xi_class(m.deleted(pivot));
  GkmClass xi_con = xi_class(m.contracted(pivot));
  MultiPoly te = tv(pivot);
  for (const auto& a : m.ground()) {
    if (a == pivot) continue;
    for (const auto& b : m.ground()) {
      if (b == pivot || b == a) continue;
      PolyFraction lhs = pushforward_localized(xi_m, {a, b});
      PolyFraction rhs;
      switch (cls) {
        case ElementClass::general:
          rhs = PolyFraction((MultiPoly::one() - tv(a) * MultiPoly::var(WVAR)) * (tv(b) - te)) *
                    pushforward_localized(xi_del, {a, b}) +
                PolyFraction((MultiPoly::one() + tv(b) * MultiPoly::var(ZVAR)) * (te - tv(a))) *
                    pushforward_localized(xi_con, {a, b});
          break;
        case ElementClass::loop:
          rhs = PolyFraction((MultiPoly::one() - te * MultiPoly::var(WVAR)) * (tv(b) - tv(a))) *
                pushforward_localized(xi_del, {a, b});
          break;
        case ElementClass::coloop:
          rhs = PolyFraction((MultiPoly::one() + te * MultiPoly::var(ZVAR)) * (tv(b) - tv(a))) *
                pushforward_localized(xi_con, {a, b});
          break;
      }
      if (!fraction_eq(lhs, rhs)) return false;
    }
  }
  return true;
}

}  // namespace equitutte
