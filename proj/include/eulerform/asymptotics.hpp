#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulerform/invariants.hpp"

namespace eulerform {

inline constexpr int kDefaultAsymptoticBound = 12;

enum class Confidence { exact, fitted };

struct Complexity {
  int value = 0;
  Confidence confidence = Confidence::fitted;
  /// The sequence the fit was made on (Betti numbers or generator counts).
  std::vector<long> sequence;
  std::optional<Period> certificate;
};

/// cx M: growth of the Betti numbers of M. 0 when the resolution ends, 1
/// (exact) with a period certificate, otherwise d + 1 where d is the least
/// order of finite differences that is constant on the computed window.
Complexity complexity(const GradedModule& m, int bound = kDefaultAsymptoticBound);

/// px M = cx(k, M): the same fit on ν(Ext^n(k, M)).
Complexity plexity(const GradedModule& m, int bound = kDefaultAsymptoticBound);

enum class Functor { tor, ext };

/// f_tor / f_ext: least s with length(Tor_i) (resp. Ext^i) finite for all
/// i >= s. Empty when the bound does not certify it.
std::optional<int> f_threshold(Functor f, const GradedModule& m, const GradedModule& n,
                               int bound = kDefaultAsymptoticBound);

struct TracePoint {
  int n;
  mpz_class partial_sum;
  mpq_class scaled;
};

enum class Verdict { exact, estimated, inconclusive, inconclusive_oscillating };

struct AsymptoticEstimate {
  int e = 0;
  Functor functor = Functor::ext;
  std::optional<int> threshold;
  std::vector<TracePoint> trace;
  Verdict verdict = Verdict::inconclusive;
  /// exact value, or the last scaled partial sum for estimates.
  std::optional<mpq_class> value;
  /// first and last n of the trace for estimates.
  std::optional<std::pair<int, int>> window;
  /// the two accumulation values of an oscillating e = 0 sum.
  std::vector<mpq_class> accumulation;
  std::optional<Period> certificate;
  /// the Ext/Tor lengths the trace was built from, by index.
  std::vector<std::pair<int, long>> lengths;
};

/// h_e(M, N) = lim Σ_{i=f_ext}^n (-1)^i length Ext^i(M,N) / n^e.
AsymptoticEstimate herbrand_h(int e, const GradedModule& m, const GradedModule& n,
                              int bound = kDefaultAsymptoticBound);
/// η_e(M, N): the same limit over Tor lengths from f_tor.
AsymptoticEstimate eta(int e, const GradedModule& m, const GradedModule& n,
                       int bound = kDefaultAsymptoticBound);

std::string to_string(Verdict v);
std::string to_string(Confidence c);
std::string to_string(Functor f);

}  // namespace eulerform
