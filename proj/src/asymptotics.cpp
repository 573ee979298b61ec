#include "eulerform/asymptotics.hpp"

#include <algorithm>

#include "eulerform/errors.hpp"

namespace eulerform {

namespace {

// Least d such that the d-th differences of `s` are constant with at
// least two entries.
std::optional<int> constant_difference_order(std::vector<long> s) {
  for (int d = 0; s.size() >= 2; ++d) {
    if (std::all_of(s.begin(), s.end(), [&](long v) { return v == s.front(); })) return d;
    std::vector<long> next;
    for (std::size_t i = 1; i < s.size(); ++i) next.push_back(s[i] - s[i - 1]);
    s = std::move(next);
  }
  return std::nullopt;
}

// Growth fit on a sequence: drops index 0, tries the sequence itself and
// then its even and odd subsequences (quasi-polynomial growth).
Complexity fit(std::vector<long> seq) {
  Complexity out;
  out.sequence = seq;
  std::vector<long> tail(seq.begin() + (seq.size() > 1 ? 1 : 0), seq.end());
  if (std::all_of(tail.begin(), tail.end(), [](long v) { return v == 0; }) && tail.size() >= 2) {
    out.value = 0;
    return out;
  }
  if (auto d = constant_difference_order(tail)) {
    out.value = *d + 1;
    return out;
  }
  std::vector<long> even, odd;
  for (std::size_t i = 0; i < tail.size(); ++i) (i % 2 == 0 ? even : odd).push_back(tail[i]);
  auto de = constant_difference_order(even), dd = constant_difference_order(odd);
  if (de && dd) {
    out.value = std::max(*de, *dd) + 1;
    return out;
  }
  // No polynomial pattern in the window: report the window size as a lower
  // bound on the growth degree.
  out.value = static_cast<int>(tail.size());
  return out;
}

struct LengthWindow {
  std::vector<long> lengths;  // index 0..top
  bool finite_resolution = false;
  std::optional<Period> period;
};

LengthWindow length_window(Functor f, PairContext& ctx) {
  LengthWindow w;
  const FreeResolution& res = ctx.resolution();
  w.finite_resolution = !res.truncated_at.has_value();
  const int top = w.finite_resolution ? res.length() : *res.truncated_at - 1;
  if (!w.finite_resolution) w.period = detect_period(res);
  for (int i = 0; i <= top; ++i)
    w.lengths.push_back(f == Functor::tor ? ctx.tor_length(i) : ctx.ext_length(i));
  return w;
}

// Threshold from the window plus whether it is certified.
std::pair<int, bool> threshold_of(const LengthWindow& w) {
  const int top = static_cast<int>(w.lengths.size()) - 1;
  int s = 0;
  for (int i = 0; i <= top; ++i)
    if (w.lengths[static_cast<std::size_t>(i)] == kInfinite) s = i + 1;
  if (w.finite_resolution) return {s, true};
  // A periodic tail repeats from start + 1 on, so both parities must be
  // visible inside the window.
  if (w.period && top >= w.period->start + 2) return {s, true};
  return {s, false};
}

AsymptoticEstimate estimate(Functor f, int e, const GradedModule& m, const GradedModule& n,
                            int bound) {
  if (e < 0) throw ContractError("e must be nonnegative");
  AsymptoticEstimate out;
  out.e = e;
  out.functor = f;
  PairContext ctx(m, n, bound);
  LengthWindow w = length_window(f, ctx);
  const int top = static_cast<int>(w.lengths.size()) - 1;
  for (int i = 0; i <= top; ++i) out.lengths.emplace_back(i, w.lengths[static_cast<std::size_t>(i)]);
  auto [s, certified] = threshold_of(w);
  // Every Tor and Ext of a finite-length tensor product has finite length.
  if (module_length(tensor(m, n)) != kInfinite) certified = true;
  if (certified) out.threshold = s;

  mpz_class acc = 0;
  std::vector<mpz_class> partial(static_cast<std::size_t>(top + 1));
  for (int i = s; i <= top; ++i) {
    acc += (i % 2 == 0) ? w.lengths[static_cast<std::size_t>(i)] : -w.lengths[static_cast<std::size_t>(i)];
    partial[static_cast<std::size_t>(i)] = acc;
    if (e > 0 && i == 0) continue;
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), mpz_class(i).get_mpz_t(), static_cast<unsigned long>(e));
    mpq_class q(acc, scale);
    q.canonicalize();
    out.trace.push_back({i, acc, q});
  }
  if (!certified) return out;

  if (w.finite_resolution) {
    out.verdict = Verdict::exact;
    out.value = e == 0 ? mpq_class(acc) : mpq_class(0);
    return out;
  }

  if (!w.period) {
    if (!out.trace.empty()) {
      out.verdict = Verdict::estimated;
      out.value = out.trace.back().scaled;
      out.window = std::make_pair(out.trace.front().n, out.trace.back().n);
    }
    return out;
  }
  out.certificate = w.period;
  const int i0 = std::max(w.period->start + 1, s);
  if (i0 + 1 <= top) {
    const long a = w.lengths[static_cast<std::size_t>(i0)];
    const long b = w.lengths[static_cast<std::size_t>(i0 + 1)];
    const long l_even = (i0 % 2 == 0) ? a : b;
    const long l_odd = (i0 % 2 == 0) ? b : a;
    if (e >= 2) {
      out.verdict = Verdict::exact;
      out.value = mpq_class(0);
      return out;
    }
    if (e == 1) {
      out.verdict = Verdict::exact;
      out.value = mpq_class(l_even - l_odd, 2);
      out.value->canonicalize();
      return out;
    }
    if (l_even == 0 && l_odd == 0) {
      out.verdict = Verdict::exact;
      out.value = mpq_class(acc);
      return out;
    }
    if (l_even == l_odd && top - 1 >= i0) {
      out.verdict = Verdict::inconclusive_oscillating;
      out.accumulation = {mpq_class(partial[static_cast<std::size_t>(top - 1)]), mpq_class(acc)};
      std::sort(out.accumulation.begin(), out.accumulation.end());
      return out;
    }
    // e = 0 with unequal stable lengths: the partial sums diverge.
    return out;
  }
  out.certificate.reset();
  if (!out.trace.empty()) {
    out.verdict = Verdict::estimated;
    out.value = out.trace.back().scaled;
    out.window = std::make_pair(out.trace.front().n, out.trace.back().n);
  }
  return out;
}

}  // namespace

Complexity complexity(const GradedModule& m, int bound) {
  if (m.is_zero()) return Complexity{0, Confidence::exact, {}, std::nullopt};
  FreeResolution res = resolve(m, bound);
  std::vector<long> betti;
  for (int i = 0; i <= res.length(); ++i) betti.push_back(res.rank(i));
  if (!res.truncated_at) return Complexity{0, Confidence::exact, betti, std::nullopt};
  if (auto p = detect_period(res)) return Complexity{1, Confidence::exact, betti, p};
  return fit(betti);
}

Complexity plexity(const GradedModule& m, int bound) {
  if (m.is_zero()) return Complexity{0, Confidence::exact, {}, std::nullopt};
  FreeResolution res = resolve(residue_field(m.ring()), bound);
  const int top = res.truncated_at ? *res.truncated_at - 1 : res.length();
  std::vector<long> nu;
  for (int i = 0; i <= top; ++i) {
    GradedModule x = ext_module(i, res, m).module;
    nu.push_back(x.is_zero() ? 0 : static_cast<long>(x.rank()));
  }
  if (!res.truncated_at) return Complexity{0, Confidence::exact, nu, std::nullopt};
  if (auto p = detect_period(res); p && top >= p->start + 2) {
    const bool vanish = std::all_of(nu.begin() + p->start + 1, nu.end(), [](long v) { return v == 0; });
    return Complexity{vanish ? 0 : 1, Confidence::exact, nu, p};
  }
  return fit(nu);
}

std::optional<int> f_threshold(Functor f, const GradedModule& m, const GradedModule& n, int bound) {
  if (m.is_zero() || n.is_zero()) return 0;
  if (module_length(tensor(m, n)) != kInfinite) return 0;
  PairContext ctx(m, n, bound);
  LengthWindow w = length_window(f, ctx);
  auto [s, certified] = threshold_of(w);
  if (!certified) return std::nullopt;
  return s;
}

AsymptoticEstimate herbrand_h(int e, const GradedModule& m, const GradedModule& n, int bound) {
  return estimate(Functor::ext, e, m, n, bound);
}

AsymptoticEstimate eta(int e, const GradedModule& m, const GradedModule& n, int bound) {
  return estimate(Functor::tor, e, m, n, bound);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::exact: return "exact";
    case Verdict::estimated: return "estimated";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::inconclusive_oscillating: return "inconclusive-oscillating";
  }
  return "";
}

std::string to_string(Confidence c) { return c == Confidence::exact ? "exact" : "fitted"; }

std::string to_string(Functor f) { return f == Functor::tor ? "tor" : "ext"; }

}  // namespace eulerform
