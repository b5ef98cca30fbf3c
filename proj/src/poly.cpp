#include "equitutte/poly.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace equitutte {

namespace {

const std::array<const char*, 9> kFormalNames = {"x", "y", "r", "s", "z", "w", "q", "alpha", "beta"};

// Length-first label comparison keeps numeric labels in numeric order.
int cmp_label(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return a.compare(b);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational v{Integer(text)};
      return v;
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) fail(errc::zero_denominator, "rational with zero denominator: " + text);
    Rational v(num, den);
    v.canonicalize();
    return v;
  } catch (const std::invalid_argument&) {
    fail(errc::parse_error, "not a rational: " + text);
  }
}

std::string rational_str(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational rational_pow(const Rational& base, unsigned e) {
  Rational acc(1);
  Rational b = base;
  while (e) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

std::string Variable::name() const {
  if (is_formal()) return kFormalNames[code_];
  return (is_t() ? "t:" : "v:") + label_;
}

std::optional<Variable> Variable::parse(const std::string& name) {
  for (int i = 0; i < 9; ++i)
    if (name == kFormalNames[i]) return Variable(i);
  if (name.size() > 2 && name[1] == ':') {
    if (name[0] == 't') return Variable::t(name.substr(2));
    if (name[0] == 'v') return Variable::v(name.substr(2));
  }
  return std::nullopt;
}

bool operator<(const Variable& a, const Variable& b) {
  if (a.code_ != b.code_) return a.code_ < b.code_;
  return cmp_label(a.label_, b.label_) < 0;
}

Monomial Monomial::of(const Variable& v, unsigned e) {
  Monomial m;
  if (e > 0) m.factors_.emplace_back(v, e);
  return m;
}

Monomial Monomial::make(std::vector<std::pair<Variable, unsigned>> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Monomial m;
  for (auto& f : factors) {
    if (f.second == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == f.first)
      m.factors_.back().second += f.second;
    else
      m.factors_.push_back(std::move(f));
  }
  return m;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::degree_of(const Variable& v) const {
  for (const auto& f : factors_)
    if (f.first == v) return f.second;
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < factors_.size() && j < o.factors_.size()) {
    if (factors_[i].first == o.factors_[j].first) {
      out.factors_.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
      ++i, ++j;
    } else if (factors_[i].first < o.factors_[j].first) {
      out.factors_.push_back(factors_[i++]);
    } else {
      out.factors_.push_back(o.factors_[j++]);
    }
  }
  for (; i < factors_.size(); ++i) out.factors_.push_back(factors_[i]);
  for (; j < o.factors_.size(); ++j) out.factors_.push_back(o.factors_[j]);
  return out;
}

Monomial Monomial::without(const Variable& v) const {
  Monomial out;
  for (const auto& f : factors_)
    if (f.first != v) out.factors_.push_back(f);
  return out;
}

std::string Monomial::str() const {
  if (is_unit()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "*";
    out += f.first.name();
    if (f.second > 1) out += "^" + std::to_string(f.second);
  }
  return out;
}

int cmp_monomial(const Monomial& a, const Monomial& b) {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first != fb[j].first) {
      // Whoever holds the earlier variable has the larger exponent there.
      return fa[i].first < fb[j].first ? 1 : -1;
    }
    if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second ? 1 : -1;
    ++i, ++j;
  }
  if (i < fa.size()) return 1;
  if (j < fb.size()) return -1;
  return 0;
}

MultiPoly::MultiPoly(const Integer& c) {
  if (c != 0) terms_.emplace_back(Monomial::unit(), c);
}

MultiPoly MultiPoly::var(const Variable& v, unsigned e) {
  return term(1, Monomial::of(v, e));
}

MultiPoly MultiPoly::term(const Integer& c, const Monomial& m) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit());
}

Integer MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) fail(errc::parse_error, "polynomial is not constant: " + str());
  return terms_[0].second;
}

const Integer& MultiPoly::leading_coefficient() const {
  static const Integer zero(0);
  return terms_.empty() ? zero : terms_[0].second;
}

Integer MultiPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.first == m) return t.second;
  return 0;
}

unsigned MultiPoly::degree_in(const Variable& v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree_of(v));
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
  return d;
}

std::vector<Variable> MultiPoly::variables() const {
  std::vector<Variable> out;
  for (const auto& t : terms_)
    for (const auto& f : t.first.factors())
      if (std::find(out.begin(), out.end(), f.first) == out.end()) out.push_back(f.first);
  std::sort(out.begin(), out.end());
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int c = cmp_monomial(a.terms_[i].first, b.terms_[j].first);
    if (c > 0) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      Integer sum = a.terms_[i].second + b.terms_[j].second;
      if (sum != 0) out.terms_.emplace_back(a.terms_[i].first, std::move(sum));
      ++i, ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
  return out;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out = a;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  std::map<Monomial, Integer, MonomialGreater> acc;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Monomial m = ta.first.times(tb.first);
      acc[std::move(m)] += ta.second * tb.second;
    }
  MultiPoly out;
  out.terms_.reserve(acc.size());
  for (auto& kv : acc)
    if (kv.second != 0) out.terms_.emplace_back(kv.first, std::move(kv.second));
  return out;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m) const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.first = t.first.times(m);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc = MultiPoly::one();
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) acc *= base;
    if (e >>= 1u) base *= base;
  }
  return acc;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    Integer c = t.second;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Integer a = abs(c);
    if (t.first.is_unit()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += t.first.str();
    }
  }
  return out;
}

PolyFraction::PolyFraction(const Rational& c) {
  Rational reduced = c;
  reduced.canonicalize();  // callers may pass values built from raw num/den
  num_ = MultiPoly(Integer(reduced.get_num()));
  den_ = MultiPoly(Integer(reduced.get_den()));
}

PolyFraction::PolyFraction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(errc::zero_denominator, "fraction with zero denominator");
  if (den_.leading_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

PolyFraction PolyFraction::pow(unsigned e) const {
  return PolyFraction(num_.pow(e), den_.pow(e));
}

PolyFraction PolyFraction::inverse() const {
  if (num_.is_zero()) fail(errc::zero_denominator, "inverse of the zero fraction");
  return PolyFraction(den_, num_);
}

std::string PolyFraction::str() const {
  if (den_ == MultiPoly::one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
  return PolyFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

PolyFraction operator-(const PolyFraction& a, const PolyFraction& b) {
  return PolyFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

PolyFraction operator*(const PolyFraction& a, const PolyFraction& b) {
  return PolyFraction(a.num_ * b.num_, a.den_ * b.den_);
}

PolyFraction operator/(const PolyFraction& a, const PolyFraction& b) {
  if (b.num_.is_zero()) fail(errc::zero_denominator, "division by the zero fraction");
  return PolyFraction(a.num_ * b.den_, a.den_ * b.num_);
}

PolyFraction operator-(const PolyFraction& a) {
  PolyFraction out = a;
  out.num_ = -out.num_;
  return out;
}

bool fraction_eq(const PolyFraction& a, const PolyFraction& b) {
  return a.num() * b.den() == b.num() * a.den();
}

MultiPoly substitute(const MultiPoly& p, const PolyBindings& bindings) {
  MultiPoly out;
  for (const auto& term : p.terms()) {
    MultiPoly acc(term.second);
    Monomial untouched;
    for (const auto& f : term.first.factors()) {
      auto it = bindings.find(f.first);
      if (it == bindings.end())
        untouched = untouched.times(Monomial::of(f.first, f.second));
      else
        acc *= it->second.pow(f.second);
    }
    out += acc.times_monomial(untouched);
  }
  return out;
}

PolyFraction substitute(const MultiPoly& p, const FractionBindings& bindings) {
  // Degrees actually occurring decide the powers of each binding denominator.
  std::map<Variable, unsigned> occurring;
  for (const auto& [v, f] : bindings) {
    if (f.den().is_zero()) fail(errc::zero_denominator_binding, "binding for " + v.name() + " has zero denominator");
    unsigned d = p.degree_in(v);
    if (d > 0) occurring[v] = d;
  }
  MultiPoly den = MultiPoly::one();
  for (const auto& [v, d] : occurring) den *= bindings.at(v).den().pow(d);

  MultiPoly num;
  for (const auto& term : p.terms()) {
    MultiPoly acc(term.second);
    Monomial untouched;
    for (const auto& f : term.first.factors()) {
      auto it = bindings.find(f.first);
      if (it == bindings.end())
        untouched = untouched.times(Monomial::of(f.first, f.second));
      else
        acc *= it->second.num().pow(f.second);
    }
    // Pad with the denominators this term did not consume.
    for (const auto& [v, d] : occurring) {
      unsigned used = term.first.degree_of(v);
      acc *= bindings.at(v).den().pow(d - used);
    }
    num += acc.times_monomial(untouched);
  }
  return PolyFraction(std::move(num), std::move(den));
}

PolyFraction substitute(const PolyFraction& f, const FractionBindings& bindings) {
  PolyFraction num = substitute(f.num(), bindings);
  PolyFraction den = substitute(f.den(), bindings);
  if (den.is_zero()) fail(errc::denominator_vanishes, "substitution sends the denominator to zero");
  return num / den;
}

Rational eval_rational(const MultiPoly& p, const RationalPoint& point) {
  Rational out(0);
  for (const auto& term : p.terms()) {
    Rational acc(term.second);
    for (const auto& f : term.first.factors()) {
      auto it = point.find(f.first);
      if (it == point.end()) fail(errc::unbound_variable, "variable " + f.first.name() + " is not bound");
      acc *= rational_pow(it->second, f.second);
    }
    out += acc;
  }
  return out;
}

Rational fraction_eval(const PolyFraction& f, const RationalPoint& point) {
  Rational den = eval_rational(f.den(), point);
  if (den == 0) fail(errc::denominator_vanishes, "denominator vanishes at the evaluation point");
  return eval_rational(f.num(), point) / den;
}

MultiPoly divide_exact_linear(const MultiPoly& n, const Variable& v, const MultiPoly& root) {
  if (root.degree_in(v) > 0)
    fail(errc::parse_error, "division root must not involve " + v.name());
  if (n.is_zero()) return MultiPoly();
  unsigned d = n.degree_in(v);
  // Coefficient polynomials of v^0 .. v^d with the v power stripped.
  std::vector<MultiPoly> c(d + 1);
  for (const auto& term : n.terms()) {
    unsigned k = term.first.degree_of(v);
    c[k] += MultiPoly::term(term.second, term.first.without(v));
  }
  std::vector<MultiPoly> quo(d == 0 ? 0 : d);
  MultiPoly carry;  // q_k while walking k = d-1 .. 0
  for (unsigned k = d; k >= 1; --k) {
    MultiPoly qk = (k == d) ? c[d] : c[k] + root * carry;
    quo[k - 1] = qk;
    carry = std::move(qk);
  }
  MultiPoly remainder = d == 0 ? c[0] : c[0] + root * carry;
  if (!remainder.is_zero())
    fail(errc::not_divisible, "division leaves remainder " + remainder.str());
  MultiPoly out;
  for (unsigned k = 0; k < quo.size(); ++k)
    out += quo[k].times_monomial(Monomial::of(v, k));
  return out;
}

MultiPoly divide_exact_alpha_plus_beta(const MultiPoly& n) {
  return divide_exact_linear(n, Variable::alpha(), -MultiPoly::var(Variable::beta()));
}

MultiPoly elementary_symmetric(const std::vector<MultiPoly>& values, unsigned i) {
  if (i > values.size()) return MultiPoly();
  std::vector<MultiPoly> e(i + 1);
  e[0] = MultiPoly::one();
  unsigned used = 0;
  for (const auto& val : values) {
    ++used;
    for (unsigned k = std::min(i, used); k >= 1; --k) e[k] += e[k - 1] * val;
  }
  return e[i];
}

MultiPoly coefficient_of(const MultiPoly& p, const Variable& v, unsigned e) {
  MultiPoly out;
  for (const auto& term : p.terms())
    if (term.first.degree_of(v) == e) out += MultiPoly::term(term.second, term.first.without(v));
  return out;
}

MultiPoly coefficient_of_t_monomial(const MultiPoly& p, const std::vector<std::string>& subset) {
  std::vector<Variable> wanted;
  wanted.reserve(subset.size());
  for (const auto& l : subset) wanted.push_back(Variable::t(l));
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

  MultiPoly out;
  for (const auto& term : p.terms()) {
    for (const auto& f : term.first.factors())
      if (f.first.is_t() && f.second >= 2 &&
          std::find(wanted.begin(), wanted.end(), f.first) != wanted.end())
        fail(errc::residual_t_variable,
             "exponent " + std::to_string(f.second) + " on " + f.first.name());
    Monomial stripped;
    std::vector<Variable> seen;
    bool match = true;
    for (const auto& f : term.first.factors()) {
      if (!f.first.is_t()) {
        stripped = stripped.times(Monomial::of(f.first, f.second));
        continue;
      }
      if (std::find(wanted.begin(), wanted.end(), f.first) == wanted.end() || f.second != 1) {
        match = false;
        break;
      }
      seen.push_back(f.first);
    }
    if (match && seen.size() == wanted.size())
      out += MultiPoly::term(term.second, stripped);
  }
  return out;
}

}  // namespace equitutte
