#include "eulerform/hilbert.hpp"

#include <algorithm>

#include "eulerform/errors.hpp"

namespace eulerform {

namespace {

void add_into(Laurent& acc, const Laurent& x, int shift = 0, int sign = 1) {
  for (const auto& [d, c] : x) {
    mpz_class& slot = acc[d + shift];
    if (sign > 0)
      slot += c;
    else
      slot -= c;
    if (slot == 0) acc.erase(d + shift);
  }
}

Laurent times_one_minus(const Laurent& x, int w) {
  Laurent out = x;
  add_into(out, x, w, -1);
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    int ta = total_exponent(a), tb = total_exponent(b);
    if (ta != tb) return ta < tb;
    return a.exps.e < b.exps.e;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (mono_divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

Laurent numerator_rec(std::vector<Monomial> gens, const Weights& w, std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return Laurent{{0, 1}};
  if (gens.front().is_one()) return Laurent{};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
      coprime = mono_coprime(gens[i], gens[j]);
  if (coprime) {
    Laurent acc{{0, 1}};
    for (const auto& g : gens) acc = times_one_minus(acc, g.degree);
    return acc;
  }
  // Pivot on the variable occurring in the most generators, at its
  // smallest positive exponent.
  std::size_t best = 0;
  int best_count = -1;
  for (std::size_t i = 0; i < nvars; ++i) {
    int count = 0;
    for (const auto& g : gens) count += g[i] > 0;
    if (count > best_count) {
      best_count = count;
      best = i;
    }
  }
  int e = INT_MAX;
  for (const auto& g : gens)
    if (g[best] > 0) e = std::min<int>(e, g[best]);
  Monomial p = w.variable(best, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial q = g;
    q.exps.e[best] = static_cast<std::uint16_t>(std::max(0, static_cast<int>(g[best]) - e));
    q.degree = w.degree_of(q.exps);
    colon.push_back(q);
  }
  Laurent out = numerator_rec(std::move(plus), w, nvars);
  add_into(out, numerator_rec(std::move(colon), w, nvars), p.degree);
  return out;
}

// Exact division by (1 - t^w); nullopt if it leaves a remainder.
std::optional<Laurent> divide_one_minus(const Laurent& x, int w) {
  if (x.empty()) return Laurent{};
  const int lo = x.begin()->first, hi = x.rbegin()->first;
  Laurent q;
  // x = (1 - t^w) q, so q_k = x_k + q_{k-w}.
  for (int k = lo; k <= hi - w; ++k) {
    mpz_class v = 0;
    if (auto it = x.find(k); it != x.end()) v += it->second;
    if (auto it = q.find(k - w); it != q.end()) v += it->second;
    if (v != 0) q[k] = v;
  }
  Laurent check = times_one_minus(q, w);
  if (check != x) return std::nullopt;
  return q;
}

std::vector<std::vector<Monomial>> component_ideals(const GradedModule& m) {
  return initial_ideals(m.gb());
}

// Number of monomials of weighted degree d.
mpz_class monomials_of_degree(const Weights& w, int d) {
  if (d < 0) return 0;
  std::vector<mpz_class> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (std::size_t i = 0; i < w.nvars(); ++i)
    for (int k = w[i]; k <= d; ++k) ways[static_cast<std::size_t>(k)] += ways[static_cast<std::size_t>(k - w[i])];
  return ways[static_cast<std::size_t>(d)];
}

}  // namespace

Laurent monomial_quotient_numerator(std::vector<Monomial> gens, const Weights& w, std::size_t nvars) {
  return numerator_rec(std::move(gens), w, nvars);
}

int monomial_quotient_dimension(const std::vector<Monomial>& gens, std::size_t nvars) {
  int best = kNegInfinity;
  for (unsigned s = 0; s < (1u << nvars); ++s) {
    bool free_set = true;
    for (const auto& g : gens) {
      bool inside = true;
      for (std::size_t i = 0; i < nvars && inside; ++i)
        if (g[i] > 0 && !(s & (1u << i))) inside = false;
      if (inside) {
        free_set = false;
        break;
      }
    }
    if (free_set) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

HilbertSeries hilbert_series(const GradedModule& m) {
  const PolyRing& P = *m.poly();
  HilbertSeries hs;
  for (std::size_t i = 0; i < P.nvars(); ++i) hs.weights.push_back(P.weights()[i]);
  auto ideals = component_ideals(m);
  for (std::size_t j = 0; j < ideals.size(); ++j)
    add_into(hs.numerator, monomial_quotient_numerator(ideals[j], P.weights(), P.nvars()), m.degrees()[j]);
  return hs;
}

mpz_class hilbert_function(const GradedModule& m, int degree) {
  HilbertSeries hs = hilbert_series(m);
  mpz_class total = 0;
  for (const auto& [a, c] : hs.numerator) total += c * monomials_of_degree(m.poly()->weights(), degree - a);
  return total;
}

int module_dimension(const GradedModule& m) {
  int best = kNegInfinity;
  for (const auto& ideal : component_ideals(m))
    best = std::max(best, monomial_quotient_dimension(ideal, m.poly()->nvars()));
  return best;
}

long module_length(const GradedModule& m) {
  int dim = module_dimension(m);
  if (dim == kNegInfinity) return 0;
  if (dim > 0) return kInfinite;
  HilbertSeries hs = hilbert_series(m);
  Laurent q = hs.numerator;
  for (int w : hs.weights) {
    auto next = divide_one_minus(q, w);
    if (!next) throw AlgebraError("Hilbert series of a zero-dimensional module is not a polynomial");
    q = std::move(*next);
  }
  mpz_class total = 0;
  for (const auto& [d, c] : q) total += c;
  if (!total.fits_slong_p()) throw AlgebraError("length does not fit in a machine integer");
  return total.get_si();
}

mpq_class HilbertPolynomial::operator()(const mpq_class& n) const {
  mpq_class acc = 0;
  for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * n + coefficients[i];
  return acc;
}

HilbertPolynomial HilbertPolynomial::derivative(int k) const {
  HilbertPolynomial out = *this;
  for (int step = 0; step < k; ++step) {
    if (out.coefficients.empty()) break;
    std::vector<mpq_class> c;
    for (std::size_t i = 1; i < out.coefficients.size(); ++i)
      c.push_back(out.coefficients[i] * static_cast<long>(i));
    out.coefficients = std::move(c);
  }
  return out;
}

std::string HilbertPolynomial::to_string() const {
  if (coefficients.empty()) return "0";
  std::string s;
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    const mpq_class& c = coefficients[i];
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (i == 0 || a != 1) s += a.get_str() + (i > 0 ? "*" : "");
    if (i > 0) s += "n";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

HilbertPolynomial hilbert_polynomial(const GradedModule& m) {
  const PolyRing& P = *m.poly();
  if (!P.weights().standard())
    throw ContractError("Hilbert polynomials need standard (all weights 1) gradings");
  HilbertPolynomial hp;
  HilbertSeries hs = hilbert_series(m);
  if (hs.numerator.empty()) return hp;
  Laurent q = hs.numerator;
  int d = static_cast<int>(P.nvars());
  while (d > 0) {
    auto next = divide_one_minus(q, 1);
    if (!next) break;
    q = std::move(*next);
    --d;
  }
  // Σ_{k<=n} coefficient of t^k in q(t)/(1-t)^d = Σ_a q_a C(n - a + d, d).
  mpz_class fact = 1;
  for (int k = 2; k <= d; ++k) fact *= k;
  std::vector<mpq_class> total(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& [a, c] : q) {
    std::vector<mpq_class> poly{mpq_class(1)};
    for (int k = 1; k <= d; ++k) {
      // multiply by (n + (k - a))
      std::vector<mpq_class> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] += poly[i];
        next[i] += poly[i] * (k - a);
      }
      poly = std::move(next);
    }
    for (std::size_t i = 0; i < poly.size(); ++i) total[i] += mpq_class(c) * poly[i] / fact;
  }
  while (!total.empty() && total.back() == 0) total.pop_back();
  for (auto& c : total) c.canonicalize();
  hp.coefficients = std::move(total);
  hp.n0 = q.rbegin()->first - d;
  return hp;
}

}  // namespace eulerform
