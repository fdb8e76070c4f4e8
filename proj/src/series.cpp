#include "tandemcount/series.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace tandemcount {

namespace {
const BigInt kZero = 0;
}

SeriesPoly::SeriesPoly(std::string variables) : vars_(std::move(variables)) {
  for (char v : vars_)
    if (std::string_view("tuvw").find(v) == std::string_view::npos)
      throw std::invalid_argument("SeriesPoly: unknown variable");
}

int SeriesPoly::var_index(char v) const {
  auto pos = vars_.find(v);
  if (pos == std::string::npos) throw std::invalid_argument("SeriesPoly: no such variable");
  return static_cast<int>(pos);
}

const BigInt& SeriesPoly::coeff(const Exponents& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? kZero : it->second;
}

const BigInt& SeriesPoly::coeff(std::initializer_list<int> exp) const {
  return coeff(Exponents(exp));
}

void SeriesPoly::add_term(Exponents exp, BigInt c) {
  if (static_cast<int>(exp.size()) != arity())
    throw std::invalid_argument("SeriesPoly::add_term: arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exp), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SeriesPoly::set_term(Exponents exp, BigInt c) {
  if (c == 0)
    terms_.erase(exp);
  else
    terms_[std::move(exp)] = std::move(c);
}

SeriesPoly& SeriesPoly::operator+=(const SeriesPoly& other) {
  if (other.vars_ != vars_) throw std::invalid_argument("SeriesPoly: variable mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SeriesPoly SeriesPoly::operator*(const SeriesPoly& other) const {
  if (other.vars_ != vars_) throw std::invalid_argument("SeriesPoly: variable mismatch");
  SeriesPoly out(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e(ea);
      for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

SeriesPoly SeriesPoly::truncated(char var, int max_deg) const {
  const int vi = var_index(var);
  SeriesPoly out(vars_);
  for (const auto& [e, c] : terms_)
    if (e[vi] <= max_deg) out.set_term(e, c);
  return out;
}

SeriesPoly SeriesPoly::divided_truncated(const SeriesPoly& unit_divisor, char main_var,
                                         int max_deg) const {
  if (unit_divisor.vars_ != vars_) throw std::invalid_argument("SeriesPoly: variable mismatch");
  const int vi = var_index(main_var);

  // split a polynomial into homogeneous parts by main_var degree
  auto split = [&](const SeriesPoly& p) {
    std::vector<SeriesPoly> parts;
    for (const auto& [e, c] : p.terms_) {
      const int d = e[vi];
      if (d > max_deg) continue;
      if (d >= static_cast<int>(parts.size())) parts.resize(d + 1, SeriesPoly(vars_));
      parts[d].set_term(e, c);
    }
    parts.resize(std::max<size_t>(parts.size(), 1), SeriesPoly(vars_));
    return parts;
  };

  auto dparts = split(unit_divisor);
  SeriesPoly expect_one(vars_);
  expect_one.set_term(Exponents(arity(), 0), 1);
  if (!(dparts[0] == expect_one))
    throw std::invalid_argument("divided_truncated: divisor constant term must be 1");

  auto nparts = split(*this);
  nparts.resize(max_deg + 1, SeriesPoly(vars_));
  std::vector<SeriesPoly> q(max_deg + 1, SeriesPoly(vars_));
  for (int k = 0; k <= max_deg; ++k) {
    SeriesPoly acc = nparts[k];
    for (int m = 1; m <= k && m < static_cast<int>(dparts.size()); ++m) {
      if (dparts[m].empty() || q[k - m].empty()) continue;
      SeriesPoly prod = dparts[m] * q[k - m];
      for (const auto& [e, c] : prod.terms()) acc.add_term(e, -c);
    }
    q[k] = std::move(acc);
  }
  SeriesPoly out(vars_);
  for (auto& part : q)
    for (const auto& [e, c] : part.terms()) out.set_term(e, c);
  return out;
}

SeriesPoly SeriesPoly::specialized_ones(std::string_view vars) const {
  std::vector<bool> drop(vars_.size(), false);
  std::string kept;
  for (size_t k = 0; k < vars_.size(); ++k) {
    if (vars.find(vars_[k]) != std::string_view::npos)
      drop[k] = true;
    else
      kept.push_back(vars_[k]);
  }
  SeriesPoly out(kept);
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    for (size_t k = 0; k < e.size(); ++k)
      if (!drop[k]) ne.push_back(e[k]);
    out.add_term(std::move(ne), c);
  }
  return out;
}

SeriesPoly unit_binomial_power(std::string variables, std::string_view monomial_vars, int k) {
  SeriesPoly base(variables);
  SeriesPoly::Exponents one_exp(variables.size(), 0);
  base.set_term(one_exp, 1);
  SeriesPoly::Exponents mono(variables.size(), 0);
  for (char v : monomial_vars) {
    auto pos = variables.find(v);
    if (pos == std::string::npos) throw std::invalid_argument("unit_binomial_power: variable");
    mono[pos] = 1;
  }
  base.set_term(mono, 1);
  SeriesPoly out(variables);
  out.set_term(one_exp, 1);
  for (int t = 0; t < k; ++t) out = out * base;
  return out;
}

std::string series_to_json(const SeriesPoly& s, std::string_view model) {
  nlohmann::ordered_json j;
  j["schema"] = "tandemcount/1";
  j["model"] = std::string(model);
  auto vars = nlohmann::ordered_json::array();
  for (char v : s.variables()) vars.push_back(std::string(1, v));
  j["variables"] = vars;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : s.terms()) {
    nlohmann::ordered_json t;
    t["exp"] = e;
    t["coeff"] = c.str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  if (!s.flagged_constants.empty()) {
    nlohmann::ordered_json meta;
    meta["fixed_constant_terms"] = s.flagged_constants;
    j["metadata"] = std::move(meta);
  }
  return j.dump();
}

void series_to_csv(const SeriesPoly& s, std::ostream& os) {
  std::string header;
  for (char v : s.variables()) {
    switch (v) {
      case 't': header += "n,"; break;
      case 'u': header += "a,"; break;
      case 'v': header += "b,"; break;
      case 'w': header += "c,"; break;
    }
  }
  os << header << "coeff\n";
  for (const auto& [e, c] : s.terms()) {
    for (int x : e) os << x << ",";
    os << c.str() << "\n";
  }
}

void series_to_bfile(const SeriesPoly& s, std::ostream& os, int lo, int hi,
                     std::optional<long long> offset) {
  if (s.arity() != 1) throw std::invalid_argument("series_to_bfile: univariate only");
  for (int n = lo; n <= hi; ++n) {
    const long long index = offset ? (*offset + (n - lo)) : n;
    os << index << " " << s.coeff({n}).str() << "\n";
  }
}

}  // namespace tandemcount
