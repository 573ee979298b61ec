#include "eulerform/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "eulerform/errors.hpp"

namespace eulerform {

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (!(terms[i].mono == o.terms[i].mono) || terms[i].coeff != o.terms[i].coeff) return false;
  return true;
}

std::string scalar_to_string(const Scalar& s) { return s.get_str(); }

PolyRing::PolyRing(Field field, std::vector<std::string> vars, std::vector<int> weights,
                   OrderKind order)
    : field_(field), vars_(std::move(vars)) {
  if (vars_.empty()) throw StructuralError("a polynomial ring needs at least one variable");
  std::set<std::string> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size()) throw StructuralError("variable names must be distinct");
  if (weights.empty()) weights.assign(vars_.size(), 1);
  if (weights.size() != vars_.size())
    throw StructuralError("one weight per variable is required");
  weights_ = Weights(std::move(weights));
  order_ = MonomialOrder{order, vars_.size()};
}

int PolyRing::variable_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

Polynomial PolyRing::constant(const Scalar& c) const { return monomial(c, weights_.one()); }

Polynomial PolyRing::variable(std::size_t i) const {
  return monomial(field_.from_int(1), weights_.variable(i));
}

Polynomial PolyRing::monomial(const Scalar& c, const Monomial& m) const {
  Polynomial p;
  Scalar v = c;
  field_.normalize(v);
  if (!Field::is_zero(v)) p.terms.push_back({v, m});
  return p;
}

Polynomial PolyRing::from_terms(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order_.compare(a.mono, b.mono) > 0; });
  Polynomial out;
  for (auto& t : terms) {
    field_.normalize(t.coeff);
    if (!out.terms.empty() && out.terms.back().mono == t.mono) {
      out.terms.back().coeff = field_.add(out.terms.back().coeff, t.coeff);
      if (Field::is_zero(out.terms.back().coeff)) out.terms.pop_back();
    } else if (!Field::is_zero(t.coeff)) {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

Polynomial PolyRing::add(const Polynomial& f, const Polynomial& g) const {
  Polynomial out;
  out.terms.reserve(f.terms.size() + g.terms.size());
  std::size_t i = 0, j = 0;
  while (i < f.terms.size() && j < g.terms.size()) {
    auto c = order_.compare(f.terms[i].mono, g.terms[j].mono);
    if (c > 0) {
      out.terms.push_back(f.terms[i++]);
    } else if (c < 0) {
      out.terms.push_back(g.terms[j++]);
    } else {
      Scalar s = field_.add(f.terms[i].coeff, g.terms[j].coeff);
      if (!Field::is_zero(s)) out.terms.push_back({s, f.terms[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < f.terms.size(); ++i) out.terms.push_back(f.terms[i]);
  for (; j < g.terms.size(); ++j) out.terms.push_back(g.terms[j]);
  return out;
}

Polynomial PolyRing::neg(const Polynomial& f) const {
  Polynomial out = f;
  for (auto& t : out.terms) t.coeff = field_.neg(t.coeff);
  return out;
}

Polynomial PolyRing::sub(const Polynomial& f, const Polynomial& g) const { return add(f, neg(g)); }

Polynomial PolyRing::scale(const Polynomial& f, const Scalar& c) const {
  if (Field::is_zero(c)) return {};
  Polynomial out = f;
  for (auto& t : out.terms) t.coeff = field_.mul(t.coeff, c);
  return out;
}

Polynomial PolyRing::mul_term(const Polynomial& f, const Scalar& c, const Monomial& m) const {
  if (Field::is_zero(c)) return {};
  Polynomial out = f;
  for (auto& t : out.terms) {
    t.coeff = field_.mul(t.coeff, c);
    t.mono = mono_mul(t.mono, m);
  }
  return out;
}

Polynomial PolyRing::mul(const Polynomial& f, const Polynomial& g) const {
  Polynomial acc;
  for (const auto& t : g.terms) acc = add(acc, mul_term(f, t.coeff, t.mono));
  return acc;
}

Polynomial PolyRing::pow(const Polynomial& f, unsigned e) const {
  Polynomial r = constant(field_.from_int(1));
  for (unsigned i = 0; i < e; ++i) r = mul(r, f);
  return r;
}

Polynomial PolyRing::monic(const Polynomial& f) const {
  if (f.is_zero()) return f;
  return scale(f, field_.inv(f.lead().coeff));
}

bool PolyRing::is_homogeneous(const Polynomial& f) const {
  for (const auto& t : f.terms)
    if (t.mono.degree != f.terms.front().mono.degree) return false;
  return true;
}

int PolyRing::degree(const Polynomial& f) const {
  if (f.is_zero()) throw ContractError("degree of the zero polynomial");
  int d = f.terms.front().mono.degree;
  for (const auto& t : f.terms) d = std::max(d, static_cast<int>(t.mono.degree));
  return d;
}

Scalar PolyRing::constant_term(const Polynomial& f) const {
  if (!f.is_zero() && f.terms.back().mono.is_one()) return f.terms.back().coeff;
  return Scalar(0);
}

std::string PolyRing::to_string(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars_[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string PolyRing::to_string(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < f.terms.size(); ++k) {
    const auto& t = f.terms[k];
    Scalar c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool one = (c == 1);
    if (t.mono.is_one()) {
      out += scalar_to_string(c);
    } else {
      if (!one) out += scalar_to_string(c) + "*";
      out += to_string(t.mono);
    }
  }
  return out;
}

std::string PolyRing::description() const {
  std::ostringstream os;
  os << field_.name() << "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) os << ",";
    os << vars_[i];
    if (weights_[i] != 1) os << ":" << weights_[i];
  }
  os << "]";
  return os.str();
}

bool PolyRing::operator==(const PolyRing& o) const {
  if (!(field_ == o.field_) || vars_ != o.vars_ || order_.kind != o.order_.kind) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (weights_[i] != o.weights_[i]) return false;
  return true;
}

}  // namespace eulerform
