#pragma once

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tandemcount/bigint.hpp"

namespace tandemcount {

/// Sparse polynomial with exact integer coefficients over an ordered list of
/// variables (a subset of t,u,v,w). Exponent tuples follow the variable
/// order; zero terms are never stored.
class SeriesPoly {
 public:
  using Exponents = std::vector<int>;

  SeriesPoly() = default;
  explicit SeriesPoly(std::string variables);

  const std::string& variables() const { return vars_; }
  int arity() const { return static_cast<int>(vars_.size()); }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  const BigInt& coeff(const Exponents& exp) const;
  const BigInt& coeff(std::initializer_list<int> exp) const;
  void add_term(Exponents exp, BigInt c);
  void set_term(Exponents exp, BigInt c);

  SeriesPoly& operator+=(const SeriesPoly& other);
  SeriesPoly operator*(const SeriesPoly& other) const;
  friend bool operator==(const SeriesPoly&, const SeriesPoly&) = default;

  /// Exact truncated division by a polynomial whose pure-constant term is 1,
  /// graded by the degree in `main_var`; keeps main_var degrees <= max_deg.
  /// Division by a unit series over Z is always exact.
  SeriesPoly divided_truncated(const SeriesPoly& unit_divisor, char main_var, int max_deg) const;

  /// Drops terms with degree in `var` above max_deg.
  SeriesPoly truncated(char var, int max_deg) const;

  /// Substitutes 1 for each variable in `vars`, summing collapsed terms.
  /// The result keeps the remaining variables in their original order.
  SeriesPoly specialized_ones(std::string_view vars) const;

  /// Low-order terms seeded as fixed constants rather than produced by a
  /// recurrence (exponent tuples); carried into the JSON emission as metadata.
  std::vector<Exponents> flagged_constants;

 private:
  int var_index(char v) const;
  std::string vars_;
  std::map<Exponents, BigInt> terms_;
};

/// (1 + x)^k or (1 + x*y)^k over the given variable list.
SeriesPoly unit_binomial_power(std::string variables, std::string_view monomial_vars, int k);

/// JSON emission: {"schema":"tandemcount/1","model":...,"variables":[...],
/// "terms":[{"exp":[...],"coeff":"<decimal>"}...]}; terms in lexicographic
/// exponent order. Coefficients are decimal strings.
std::string series_to_json(const SeriesPoly& s, std::string_view model);

/// CSV with header; columns named a,b,c for u,v,w and n for t.
void series_to_csv(const SeriesPoly& s, std::ostream& os);

/// OEIS-style b-file `index value` lines over [lo,hi] (univariate only;
/// missing coefficients print as 0). When `offset` is set, lines are
/// re-indexed to start there.
void series_to_bfile(const SeriesPoly& s, std::ostream& os, int lo, int hi,
                     std::optional<long long> offset = std::nullopt);

}  // namespace tandemcount
