#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lrk/common.hpp"
#include "lrk/partition.hpp"
#include "lrk/schur_expansion.hpp"
#include "lrk/tableaux.hpp"

namespace lrk {

/// Exact multivariate polynomial over the integers: a map from exponent
/// vectors (fixed length nvars) to nonzero coefficients. Term keys are
/// ordered by total degree, then lexicographically.
class sparse_polynomial {
 public:
  using exponents = weight_vector;

  struct grlex_less {
    bool operator()(const exponents& a, const exponents& b) const {
      std::int64_t da = vec_sum(a), db = vec_sum(b);
      if (da != db) return da < db;
      return a < b;
    }
  };

  using term_map = std::map<exponents, std::int64_t, grlex_less>;

  explicit sparse_polynomial(std::size_t nvars) : nvars_(nvars) {}

  static sparse_polynomial constant(std::size_t nvars, std::int64_t c) {
    sparse_polynomial p(nvars);
    p.add_term(exponents(nvars, 0), c);
    return p;
  }

  static sparse_polynomial monomial(exponents e, std::int64_t c) {
    sparse_polynomial p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(exponents e, std::int64_t c) {
    if (c == 0) return;
    if (e.size() != nvars_)
      throw std::invalid_argument("exponent vector length does not match nvars");
    auto [it, inserted] = terms_.try_emplace(std::move(e), std::int64_t{0});
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  std::int64_t coeff(const exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  sparse_polynomial& operator+=(const sparse_polynomial& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("nvars mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  sparse_polynomial& operator-=(const sparse_polynomial& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("nvars mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  sparse_polynomial& operator*=(std::int64_t s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c = checked_mul(c, s);
    return *this;
  }

  std::int64_t total_degree() const {
    return terms_.empty() ? 0 : vec_sum(terms_.rbegin()->first);
  }

  /// Homogeneous degree, or nullopt when terms of mixed degree exist.
  /// The zero polynomial reports degree 0.
  std::optional<std::int64_t> homogeneous_degree() const {
    if (terms_.empty()) return 0;
    std::int64_t d = vec_sum(terms_.begin()->first);
    if (vec_sum(terms_.rbegin()->first) != d) return std::nullopt;
    return d;
  }

  /// Invariance under every adjacent-variable swap.
  bool is_symmetric() const {
    for (std::size_t i = 0; i + 1 < nvars_; ++i) {
      for (const auto& [e, c] : terms_) {
        exponents swapped = e;
        std::swap(swapped[i], swapped[i + 1]);
        if (coeff(swapped) != c) return false;
      }
    }
    return true;
  }

  /// Value at x_1 = ... = x_n = 1: the sum of all coefficients.
  std::int64_t evaluate_ones() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) s = checked_add(s, c);
    return s;
  }

  friend bool operator==(const sparse_polynomial&, const sparse_polynomial&) = default;

 private:
  std::size_t nvars_;
  term_map terms_;
};

/// Exact distributive product. Terms whose total degree exceeds
/// max_total_degree are dropped when the bound is non-negative.
inline sparse_polynomial multiply(const sparse_polynomial& a, const sparse_polynomial& b,
                                  std::int64_t max_total_degree = -1) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("nvars mismatch");
  sparse_polynomial out(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    std::int64_t da = vec_sum(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (max_total_degree >= 0 && da + vec_sum(eb) > max_total_degree) continue;
      out.add_term(vec_add(ea, eb), checked_mul(ca, cb));
    }
  }
  return out;
}

inline sparse_polynomial operator*(const sparse_polynomial& a, const sparse_polynomial& b) {
  return multiply(a, b);
}

inline sparse_polynomial operator+(sparse_polynomial a, const sparse_polynomial& b) {
  a += b;
  return a;
}

inline sparse_polynomial operator-(sparse_polynomial a, const sparse_polynomial& b) {
  a -= b;
  return a;
}

/// Schur polynomial as the SSYT weight-generating function: the sum over
/// all SSYT of the shape with entries <= n of the content monomial. The
/// bialternant ratio is a tested identity, not the construction.
inline sparse_polynomial schur_polynomial(const partition& lambda, std::size_t n) {
  if (lambda.num_parts() > n)
    throw std::invalid_argument("schur_polynomial: partition has more than n parts");
  sparse_polynomial p(n);
  for_each_ssyt_content(lambda, n,
                        [&](const weight_vector& content) { p.add_term(content, 1); });
  return p;
}

/// Sum of all degree-k monomials in n variables.
inline sparse_polynomial complete_homogeneous(std::int64_t k, std::size_t n) {
  if (k < 0) throw std::invalid_argument("complete_homogeneous: negative degree");
  sparse_polynomial p(n);
  if (n == 0) {
    if (k == 0) p.add_term({}, 1);
    return p;
  }
  for_each_composition(k, n, [&](const weight_vector& c) { p.add_term(c, 1); });
  return p;
}

/// det(x_i^{e_j}) expanded over permutations. Requires non-negative
/// exponents; repeated exponents cancel to the zero polynomial.
inline sparse_polynomial alternant(const weight_vector& exps, std::size_t n) {
  if (exps.size() != n) throw std::invalid_argument("alternant: need n exponents");
  for (std::int64_t e : exps)
    if (e < 0) throw std::invalid_argument("alternant: negative exponent");
  sparse_polynomial out(n);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  do {
    weight_vector e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = exps[idx[i]];
    out.add_term(std::move(e), permutation_sign(idx));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

/// Re-index a polynomial into a wider variable set, shifting variable i
/// to variable offset+i.
inline sparse_polynomial embed(const sparse_polynomial& p, std::size_t total_vars,
                               std::size_t offset) {
  if (offset + p.nvars() > total_vars)
    throw std::invalid_argument("embed: variables out of range");
  sparse_polynomial out(total_vars);
  for (const auto& [e, c] : p.terms()) {
    weight_vector w(total_vars, 0);
    std::copy(e.begin(), e.end(), w.begin() + offset);
    out.add_term(std::move(w), c);
  }
  return out;
}

/// Schur-basis coordinates of a symmetric homogeneous polynomial by
/// greedy peeling: the graded-lex leading exponent of a symmetric
/// polynomial is weakly decreasing, and subtracting its coefficient times
/// that Schur polynomial strictly lowers the leading term (the Kostka
/// matrix is unitriangular), so the loop terminates with the unique
/// coordinates.
inline schur_expansion schur_decompose(const sparse_polynomial& p) {
  schur_expansion out;
  if (p.is_zero()) return out;
  if (!p.is_symmetric())
    throw std::invalid_argument("schur_decompose: polynomial is not symmetric");
  auto deg = p.homogeneous_degree();
  if (!deg)
    throw std::invalid_argument("schur_decompose: polynomial is not homogeneous");
  std::size_t budget = enumerate_partitions(*deg, p.nvars()).size() + 1;
  sparse_polynomial rest = p;
  while (!rest.is_zero()) {
    if (budget-- == 0)
      throw std::logic_error("schur_decompose: failed to terminate");
    const auto& [lead, c] = *rest.terms().rbegin();
    for (std::size_t i = 1; i < lead.size(); ++i)
      if (lead[i - 1] < lead[i])
        throw std::logic_error("schur_decompose: leading term is not a partition");
    partition psi(lead);
    out.add(psi, c);
    sparse_polynomial s = schur_polynomial(psi, p.nvars());
    s *= c;
    rest -= s;
  }
  return out;
}

/// Expand both sides of the product identity
///   prod 1/(1 - x_i y_j) = sum_mu S_mu(x) S_mu(y)
/// in 2n variables up to the given total degree and compare term maps
/// exactly. Term counts grow quickly, hence the documented n <= 3,
/// maxdeg <= 8 bound.
inline bool cauchy_truncated_check(std::size_t n, std::int64_t maxdeg) {
  if (n < 1 || n > 3 || maxdeg < 0 || maxdeg > 8)
    throw bounds_error("cauchy_truncated_check: bounds are 1 <= n <= 3, 0 <= maxdeg <= 8");
  const std::size_t vars = 2 * n;
  sparse_polynomial lhs = sparse_polynomial::constant(vars, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sparse_polynomial factor(vars);
      for (std::int64_t k = 0; 2 * k <= maxdeg; ++k) {
        weight_vector e(vars, 0);
        e[i] = k;
        e[n + j] = k;
        factor.add_term(std::move(e), 1);
      }
      lhs = multiply(lhs, factor, maxdeg);
    }
  }
  sparse_polynomial rhs(vars);
  for (std::int64_t m = 0; 2 * m <= maxdeg; ++m) {
    for (const partition& mu : enumerate_partitions(m, n)) {
      sparse_polynomial s = schur_polynomial(mu, n);
      rhs += multiply(embed(s, vars, 0), embed(s, vars, n));
    }
  }
  return lhs == rhs;
}

}  // namespace lrk
