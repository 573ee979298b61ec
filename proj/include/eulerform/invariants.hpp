#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulerform/hilbert.hpp"
#include "eulerform/homology.hpp"

namespace eulerform {

inline constexpr int kInfiniteGrade = INT_MAX;

/// Ext/Tor data of a pair (M, N), computed lazily and cached. Resolutions
/// are taken of M only. Over quotient rings the resolution of M is
/// extended on demand.
class PairContext {
 public:
  PairContext(GradedModule m, GradedModule n, int bound = 0);

  const GradedModule& m() const { return m_; }
  const GradedModule& n() const { return n_; }
  const FreeResolution& resolution(int need_index = 0);
  /// pdim M, or -1 when the resolution is truncated (infinite so far).
  int pdim_m();
  const HomologyModule& tor(int i);
  const HomologyModule& ext(int i);
  long tor_length(int i);
  long ext_length(int i);
  /// Every length consulted so far, keyed "Tor_i" / "Ext^i".
  const std::map<std::string, long>& consulted() const { return consulted_; }
  int bound_used() const;

 private:
  GradedModule m_, n_;
  int bound_;
  std::optional<FreeResolution> res_;
  std::map<int, HomologyModule> tor_, ext_;
  std::map<std::string, long> consulted_;
};

/// χ_j = Σ_{i>=j} (-1)^{i-j} length Tor_i(M, N).
long chi_partial(int j, PairContext& ctx);
/// ξ_j = Σ_{i>=j} (-1)^{i-j} length Ext^i(M, N).
long xi_partial(int j, PairContext& ctx);
/// ξ̄_j = Σ_{i=0}^{j} (-1)^i length Ext^{j-i}(M, N); ξ̄_j = 0 for j < 0.
long xi_bar(int j, PairContext& ctx);
/// min{i : Ext^i(M, N) != 0}, or kInfiniteGrade.
int grade_pair(PairContext& ctx);
/// sup{n : Tor_n(M, N) != 0}; kNegInfinity if every Tor vanishes.
int q_last_tor(PairContext& ctx);

long chi_partial(int j, const GradedModule& m, const GradedModule& n);
long xi_partial(int j, const GradedModule& m, const GradedModule& n);
long xi_bar(int j, const GradedModule& m, const GradedModule& n);
int grade_pair(const GradedModule& m, const GradedModule& n);
int q_last_tor(const GradedModule& m, const GradedModule& n);
/// grade M = grade(M, R).
int module_grade(const GradedModule& m);

struct TwistCoefficients {
  std::vector<mpq_class> c;  ///< c[k] for k = 0..nvars
  int k0 = 0;
};

/// c_k = (1/k!) Σ_{i,j} (-1)^i n_ij^k from a finite resolution.
TwistCoefficients twist_coefficients(const FreeResolution& res);

/// Result of a theorem check; `skipped` names a failed hypothesis.
struct CheckReport {
  std::string name;
  bool passed = false;
  std::optional<std::string> skipped;
  /// Computed quantities, in insertion order.
  std::vector<std::pair<std::string, std::string>> values;
  std::map<std::string, long> lengths;

  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, long value) { set(key, std::to_string(value)); }
  std::string get(const std::string& key) const;
};

/// χ = c_{k0} P_N^{(k0)} and (-1)^{k0} ξ = c_{k0} P_N^{(k0)}, with
/// k0 = dim R - dim M.
CheckReport graded_chan_check(const GradedModule& m, const GradedModule& n);
/// Equivalence of ξ_j = 0, grade(M,N) >= j and χ_{pdim M - j + 1} = 0,
/// plus ξ_j >= 0.
CheckReport theorem_A_check(int j, const GradedModule& m, const GradedModule& n);
/// Ext^n(M, M) != 0 for 0 <= n <= pdim M.
CheckReport jorgensen_check(const GradedModule& m);
/// (-1)^{g+j} ξ_j = χ + (-1)^{g+j} ξ̄_{j-1}.
CheckReport lemma_2_4_check(int j, const GradedModule& m, const GradedModule& n);

/// Renders integers with the INFINITE / -INFINITE sentinels spelled out.
std::string grade_to_string(int g);

}  // namespace eulerform
