#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equitutte/error.hpp"

namespace equitutte {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p" or "p/q" with arbitrary-precision parts; the result is reduced
// with a positive denominator.
Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& v);
Rational rational_pow(const Rational& base, unsigned e);

// A variable is one of the fixed formal symbols x, y, r, s, z, w, q, alpha,
// beta, a per-element variable t:<label>, or a per-element Potts variable
// v:<label>. The total order puts the formal symbols first in the order
// above, then the t block, then the v block; within a block labels compare by
// length first, then lexicographically, so numeric labels sort numerically.
class Variable {
 public:
  static Variable x() { return Variable(0); }
  static Variable y() { return Variable(1); }
  static Variable r() { return Variable(2); }
  static Variable s() { return Variable(3); }
  static Variable z() { return Variable(4); }
  static Variable w() { return Variable(5); }
  static Variable q() { return Variable(6); }
  static Variable alpha() { return Variable(7); }
  static Variable beta() { return Variable(8); }
  static Variable t(const std::string& label) { return Variable(kT, label); }
  static Variable v(const std::string& label) { return Variable(kV, label); }

  bool is_formal() const { return code_ < kT; }
  bool is_t() const { return code_ == kT; }
  bool is_v() const { return code_ == kV; }
  const std::string& label() const { return label_; }

  std::string name() const;
  static std::optional<Variable> parse(const std::string& name);

  friend bool operator==(const Variable& a, const Variable& b) {
    return a.code_ == b.code_ && a.label_ == b.label_;
  }
  friend bool operator!=(const Variable& a, const Variable& b) { return !(a == b); }
  friend bool operator<(const Variable& a, const Variable& b);

 private:
  static constexpr int kT = 9;
  static constexpr int kV = 10;
  explicit Variable(int code, std::string label = {}) : code_(code), label_(std::move(label)) {}

  int code_;
  std::string label_;
};

// Product of variable powers with all exponents positive, kept sorted by the
// variable order. The default-constructed monomial is the unit.
class Monomial {
 public:
  Monomial() = default;
  static Monomial unit() { return Monomial(); }
  static Monomial of(const Variable& v, unsigned e = 1);
  static Monomial make(std::vector<std::pair<Variable, unsigned>> factors);

  bool is_unit() const { return factors_.empty(); }
  unsigned total_degree() const;
  unsigned degree_of(const Variable& v) const;
  const std::vector<std::pair<Variable, unsigned>>& factors() const { return factors_; }

  Monomial times(const Monomial& o) const;
  // Drops the given variable entirely (used when extracting coefficients).
  Monomial without(const Variable& v) const;

  std::string str() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<std::pair<Variable, unsigned>> factors_;
};

// Graded lexicographic comparison: higher total degree first, ties broken by
// exponent vectors with earlier variables dominating. Returns <0, 0, >0 when
// a sorts after, equal to, or before b in the canonical (descending) order.
int cmp_monomial(const Monomial& a, const Monomial& b);

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return cmp_monomial(a, b) > 0; }
};

class PolyFraction;

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients. Terms are kept in descending graded-lex order with no zero
// coefficients, so equal polynomials have identical representations.
class MultiPoly {
 public:
  MultiPoly() = default;  // zero
  MultiPoly(int c) : MultiPoly(Integer(c)) {}
  MultiPoly(const Integer& c);

  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly one() { return MultiPoly(1); }
  static MultiPoly var(const Variable& v, unsigned e = 1);
  static MultiPoly term(const Integer& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The coefficient of the unit monomial (the whole value when is_constant()).
  Integer constant_value() const;

  std::size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<Monomial, Integer>>& terms() const { return terms_; }
  const Integer& leading_coefficient() const;

  Integer coefficient(const Monomial& m) const;
  unsigned degree_in(const Variable& v) const;
  unsigned total_degree() const;
  std::vector<Variable> variables() const;

  MultiPoly pow(unsigned e) const;
  std::string str() const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Multiplies by a bare monomial without going through the generic product.
  MultiPoly times_monomial(const Monomial& m) const;

 private:
  std::vector<std::pair<Monomial, Integer>> terms_;
};

// Quotient of two polynomials kept unreduced: no GCD is ever computed. The
// denominator is nonzero and its leading coefficient is positive; equality is
// decided by cross-multiplication.
class PolyFraction {
 public:
  PolyFraction() : num_(), den_(1) {}
  PolyFraction(int c) : num_(c), den_(1) {}
  PolyFraction(const Integer& c) : num_(c), den_(1) {}
  PolyFraction(const Rational& c);
  PolyFraction(const MultiPoly& num) : num_(num), den_(1) {}
  PolyFraction(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  PolyFraction pow(unsigned e) const;
  PolyFraction inverse() const;
  std::string str() const;

  friend PolyFraction operator+(const PolyFraction& a, const PolyFraction& b);
  friend PolyFraction operator-(const PolyFraction& a, const PolyFraction& b);
  friend PolyFraction operator*(const PolyFraction& a, const PolyFraction& b);
  friend PolyFraction operator/(const PolyFraction& a, const PolyFraction& b);
  friend PolyFraction operator-(const PolyFraction& a);
  PolyFraction& operator+=(const PolyFraction& o) { return *this = *this + o; }
  PolyFraction& operator-=(const PolyFraction& o) { return *this = *this - o; }
  PolyFraction& operator*=(const PolyFraction& o) { return *this = *this * o; }

 private:
  MultiPoly num_, den_;
};

bool fraction_eq(const PolyFraction& a, const PolyFraction& b);

using PolyBindings = std::map<Variable, MultiPoly>;
using FractionBindings = std::map<Variable, PolyFraction>;
using RationalPoint = std::map<Variable, Rational>;

// Ring-homomorphic substitution; unbound variables are left untouched.
MultiPoly substitute(const MultiPoly& p, const PolyBindings& bindings);

// Substitution with fractional values. The denominator of the result is the
// product of the binding denominators raised to the degrees occurring in p,
// with no reduction performed.
PolyFraction substitute(const MultiPoly& p, const FractionBindings& bindings);
PolyFraction substitute(const PolyFraction& f, const FractionBindings& bindings);

// Full evaluation; every variable of p must be bound.
Rational eval_rational(const MultiPoly& p, const RationalPoint& point);
Rational fraction_eval(const PolyFraction& f, const RationalPoint& point);

// Exact division of n by (v - root) via synthetic division, where root must
// not involve v. Throws not_divisible with the remainder in the message.
MultiPoly divide_exact_linear(const MultiPoly& n, const Variable& v, const MultiPoly& root);
// Exact division by (alpha + beta), i.e. synthetic division in alpha at the
// root -beta.
MultiPoly divide_exact_alpha_plus_beta(const MultiPoly& n);

// e_i of the given values; e_0 = 1 and e_i = 0 for i beyond the list size.
MultiPoly elementary_symmetric(const std::vector<MultiPoly>& values, unsigned i);

// The terms of p whose degree in v is exactly e, with the v power removed.
MultiPoly coefficient_of(const MultiPoly& p, const Variable& v, unsigned e);

// Coefficient of the squarefree t-monomial over the labels in `subset`: keeps
// the terms whose t-part is exactly one power of t:<l> for each l in subset
// and no other t variable, then strips that t-part. Throws
// residual_t_variable if any term carries an exponent >= 2 on a t variable of
// the subset.
MultiPoly coefficient_of_t_monomial(const MultiPoly& p, const std::vector<std::string>& subset);

}  // namespace equitutte
