#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lrk/common.hpp"
#include "lrk/kostant.hpp"
#include "lrk/partition.hpp"
#include "lrk/schur_expansion.hpp"
#include "lrk/tableaux.hpp"

namespace lrk {

/// Which Kostka backend the signed-sum formulas consume. SSYT
/// enumeration is the fastest exact path at desk scale; the Kostant
/// alternating sum is the drop-in alternative.
enum class kostka_method { ssyt, kostant };

namespace detail {

inline std::int64_t kostka_by(const partition& shape, const partition& content,
                              std::size_t n, kostka_method method) {
  return method == kostka_method::ssyt ? kostka_ssyt(shape, content)
                                       : kostka_kostant(shape, content.parts(), n);
}

inline void check_lr_bounds(const partition& lambda, const partition& mu, std::size_t n,
                            std::size_t max_n, const char* who) {
  if (n < 1 || n > max_n)
    throw bounds_error(std::string(who) + ": documented bound is 1 <= n <= " +
                       std::to_string(max_n));
  if (checked_add(lambda.content(), mu.content()) > 40)
    throw bounds_error(std::string(who) + ": documented bound is |lambda|+|mu| <= 40");
}

inline std::vector<std::pair<weight_vector, int>> signed_permutations(const weight_vector& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<std::pair<weight_vector, int>> out;
  do {
    weight_vector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[idx[i]];
    out.emplace_back(std::move(w), permutation_sign(idx));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace detail

/// The suffix-sum pair (sigma, tau) with tau_i = mu_i + mu_{i+1} + ...
/// and sigma_i = mu_{i+1} + mu_{i+2} + ..., realizing every Kostka
/// number as the LR coefficient K_{lambda,mu} = c_{sigma,lambda}^{tau}.
struct king_pair {
  partition sigma;
  partition tau;
};

inline king_pair king_embedding(const partition& mu) {
  std::size_t m = mu.num_parts();
  weight_vector tau(m, 0), sigma(m, 0);
  std::int64_t suffix = 0;
  for (std::size_t i = m; i-- > 0;) {
    sigma[i] = suffix;
    suffix += mu.part(i);
    tau[i] = suffix;
  }
  return {partition(std::move(sigma)), partition(std::move(tau))};
}

/// Expansion of S_lambda * S_mu in the Schur basis of the n-variable
/// ring via the signed Kostka sum: for every xi ⊴ mu and every distinct
/// rearrangement of xi, sort lambda + sigma(xi) + rho with its sign and
/// accumulate sign * K_{mu,xi} on the sorted partition; vectors with a
/// repeated entry contribute nothing (their alternants vanish). The sign
/// is computed per (xi, sigma) term since the sorting permutation
/// depends on both.
inline schur_expansion schur_product_expand(const partition& lambda, const partition& mu,
                                            std::size_t n,
                                            kostka_method method = kostka_method::ssyt) {
  detail::check_lr_bounds(lambda, mu, n, 8, "schur_product_expand");
  if (mu.num_parts() > n)
    throw std::invalid_argument("partition has more than n parts");
  weight_vector rho = staircase(n);
  weight_vector lambda_rho = vec_add(lambda.padded(n), rho);
  schur_expansion out;
  for (const partition& xi : enumerate_dominated(mu, n)) {
    std::int64_t kostka = detail::kostka_by(mu, xi, n, method);
    for (const weight_vector& rearranged : distinct_rearrangements(xi, n)) {
      signed_sort ss = sort_with_sign(vec_add(lambda_rho, rearranged));
      if (ss.degenerate) continue;
      out.add(partition(vec_sub(ss.sorted, rho)), checked_mul(ss.sign, kostka));
    }
  }
  return out;
}

namespace detail {

template <class OnCandidate>
std::int64_t signed_kostka_sum(const partition& lambda, const partition& mu,
                               const partition& nu, std::size_t n, kostka_method method,
                               OnCandidate&& on_candidate) {
  check_lr_bounds(lambda, mu, n, 8, "lr_signed_kostka");
  if (mu.num_parts() > n)
    throw std::invalid_argument("partition has more than n parts");
  weight_vector nu_rho = vec_add(nu.padded(n), staircase(n));
  weight_vector lambda_rho = vec_add(lambda.padded(n), staircase(n));
  if (nu.content() != lambda.content() + mu.content()) return 0;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::map<partition, std::int64_t> kostka_memo;
  std::int64_t total = 0;
  weight_vector v(n);
  do {
    int sign = permutation_sign(idx);
    for (std::size_t i = 0; i < n; ++i) v[i] = nu_rho[idx[i]] - lambda_rho[i];
    weight_vector sorted = v;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    on_candidate(std::as_const(sorted));
    if (!sorted.empty() && sorted.back() < 0) continue;  // K of a negative type is 0
    partition psi(sorted);
    if (!is_dominated(psi, mu)) continue;  // K_{mu,psi} = 0 outside the dominance cone
    auto [it, fresh] = kostka_memo.try_emplace(psi, std::int64_t{0});
    if (fresh) it->second = kostka_by(mu, psi, n, method);
    total = checked_add(total, checked_mul(sign, it->second));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return total;
}

}  // namespace detail

/// LR coefficient as the corollary's signed Kostka sum: over all n!
/// permutations w of nu + rho, the term is sign(w) * K_{mu, psi} with
/// psi the descending sort of w(nu + rho) - (lambda + rho), dropped when
/// an entry is negative. nu + rho has distinct entries, so each
/// rearrangement corresponds to exactly one permutation and no
/// stabilizer quotient is needed.
inline std::int64_t lr_signed_kostka(const partition& lambda, const partition& mu,
                                     const partition& nu, std::size_t n,
                                     kostka_method method = kostka_method::ssyt) {
  return detail::signed_kostka_sum(lambda, mu, nu, n, method, [](const weight_vector&) {});
}

struct signed_kostka_trace {
  std::vector<weight_vector> candidates;  ///< sorted w(nu+rho)-(lambda+rho), one per permutation
  std::int64_t value = 0;
};

/// Same sum, also reporting the per-permutation candidate vectors
/// (before the non-negativity and dominance filters).
inline signed_kostka_trace lr_signed_kostka_trace(const partition& lambda, const partition& mu,
                                                  const partition& nu, std::size_t n,
                                                  kostka_method method = kostka_method::ssyt) {
  signed_kostka_trace trace;
  trace.value = detail::signed_kostka_sum(
      lambda, mu, nu, n, method,
      [&](const weight_vector& c) { trace.candidates.push_back(c); });
  return trace;
}

namespace detail {

/// Signed count of permutations w with sort(w(nu_rho) - lambda_rho) =
/// psi, found by backtracking: position i (offset lambda_rho[i]) matches
/// an unused entry of nu_rho whose difference is still available in
/// psi's multiset. Every matching is enumerated; distinct matchings
/// carry distinct signs and may cancel, so a single greedy match would
/// be incomplete.
inline std::int64_t signed_match_count(const weight_vector& nu_rho,
                                       const weight_vector& lambda_rho,
                                       const weight_vector& psi) {
  const std::size_t n = nu_rho.size();
  std::map<std::int64_t, std::int64_t> remaining;
  for (std::int64_t x : psi) ++remaining[x];

  struct matcher {
    const weight_vector& nu_rho;
    const weight_vector& lambda_rho;
    std::map<std::int64_t, std::int64_t>& remaining;
    std::vector<bool> used;
    std::vector<std::size_t> choice;
    std::int64_t total = 0;

    void descend(std::size_t i) {
      const std::size_t n = nu_rho.size();
      if (i == n) {
        total += permutation_sign(choice);
        return;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (used[k]) continue;
        auto it = remaining.find(nu_rho[k] - lambda_rho[i]);
        if (it == remaining.end() || it->second == 0) continue;
        used[k] = true;
        --it->second;
        choice[i] = k;
        descend(i + 1);
        ++it->second;
        used[k] = false;
      }
    }
  } m{nu_rho, lambda_rho, remaining, std::vector<bool>(n, false),
      std::vector<std::size_t>(n, 0)};
  m.descend(0);
  return m.total;
}

}  // namespace detail

/// LR coefficient by the matching algorithm: for each psi ⊴ mu, the
/// signed number of permutations realizing psi as a rearrangement of
/// w(nu + rho) - (lambda + rho), times K_{mu,psi}. Equals
/// lr_signed_kostka on every input; the equality is the correctness
/// witness for the matching subroutine.
inline std::int64_t lr_matching(const partition& lambda, const partition& mu,
                                const partition& nu, std::size_t n,
                                kostka_method method = kostka_method::ssyt) {
  detail::check_lr_bounds(lambda, mu, n, 8, "lr_matching");
  if (mu.num_parts() > n)
    throw std::invalid_argument("partition has more than n parts");
  weight_vector nu_rho = vec_add(nu.padded(n), staircase(n));
  weight_vector lambda_rho = vec_add(lambda.padded(n), staircase(n));
  if (nu.content() != lambda.content() + mu.content()) return 0;
  std::int64_t total = 0;
  for (const partition& psi : enumerate_dominated(mu, n)) {
    std::int64_t count = detail::signed_match_count(nu_rho, lambda_rho, psi.padded(n));
    if (count == 0) continue;
    total = checked_add(total,
                        checked_mul(count, detail::kostka_by(mu, psi, n, method)));
  }
  return total;
}

namespace detail {

template <class Cache>
std::int64_t steinberg_impl(const partition& lambda, const partition& mu,
                            const partition& nu, std::size_t n, Cache& cache) {
  check_lr_bounds(lambda, mu, n, 6, "lr_steinberg");  // n!^2 terms
  if (nu.content() != lambda.content() + mu.content()) return 0;
  weight_vector rho = staircase(n);
  weight_vector target = vec_add(vec_add(nu.padded(n), rho), rho);
  auto lambda_terms = signed_permutations(vec_add(lambda.padded(n), rho));
  auto mu_terms = signed_permutations(vec_add(mu.padded(n), rho));
  std::int64_t total = 0;
  weight_vector arg(n);
  for (const auto& [lv, ls] : lambda_terms) {
    for (const auto& [mv, ms] : mu_terms) {
      for (std::size_t i = 0; i < n; ++i) arg[i] = lv[i] + mv[i] - target[i];
      total = checked_add(total,
                          checked_mul(ls * ms, kostant_dispatch(arg, cache)));
    }
  }
  return total;
}

}  // namespace detail

/// LR coefficient by Steinberg's formula: the double alternating sum of
/// Kostant partition function values over all pairs of permutations of
/// lambda + rho and mu + rho.
inline std::int64_t lr_steinberg(const partition& lambda, const partition& mu,
                                 const partition& nu, std::size_t n) {
  detail::local_kostant_cache cache;
  return detail::steinberg_impl(lambda, mu, nu, n, cache);
}

inline std::int64_t lr_steinberg(const partition& lambda, const partition& mu,
                                 const partition& nu, std::size_t n, kostant_cache& cache) {
  return detail::steinberg_impl(lambda, mu, nu, n, cache);
}

}  // namespace lrk
