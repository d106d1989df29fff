#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lrk/kostant.hpp"
#include "lrk/lr.hpp"
#include "lrk/partition.hpp"
#include "lrk/symfunc.hpp"
#include "lrk/tableaux.hpp"

namespace lrk::cli {

struct verify_mismatch {
  std::string method;
  weight_vector lambda;  // shape for kostka cases
  weight_vector mu;      // content for kostka cases
  weight_vector nu;      // empty for kostka cases
  std::int64_t value = 0;
  std::int64_t oracle_value = 0;
};

struct verify_report {
  std::int64_t cases_run = 0;
  std::vector<verify_mismatch> mismatches;
};

/// Cross-method sweep: every LR formula against the tableau-rule oracle
/// over all triples with |lambda|+|mu| = |nu| <= max_size and at most n
/// parts, plus the Kostka SSYT/Kostant comparison over all shapes and
/// content compositions of size <= max_size.
inline verify_report run_verify(std::int64_t max_size, std::size_t n) {
  verify_report report;
  kostant_cache cache;
  for (std::int64_t total = 0; total <= max_size; ++total) {
    auto nus = enumerate_partitions(total, n);
    for (std::int64_t a = 0; a <= total; ++a) {
      for (const partition& lambda : enumerate_partitions(a, n)) {
        for (const partition& mu : enumerate_partitions(total - a, n)) {
          for (const partition& nu : nus) {
            std::int64_t oracle = lr_rule_count(nu, lambda, mu);
            auto check = [&](const char* name, std::int64_t value) {
              ++report.cases_run;
              if (value != oracle)
                report.mismatches.push_back({name, lambda.parts(), mu.parts(),
                                             nu.parts(), value, oracle});
            };
            check("lr-signed", lr_signed_kostka(lambda, mu, nu, n));
            check("lr-matching", lr_matching(lambda, mu, nu, n));
            check("lr-steinberg", lr_steinberg(lambda, mu, nu, n, cache));
          }
        }
      }
    }
  }
  for (std::int64_t m = 0; m <= max_size; ++m) {
    for (const partition& shape : enumerate_partitions(m, n)) {
      for_each_composition(m, n, [&](const weight_vector& content) {
        std::int64_t oracle = kostka_ssyt(shape, content);
        std::int64_t value = kostka_kostant(shape, content, n, cache);
        ++report.cases_run;
        if (value != oracle)
          report.mismatches.push_back(
              {"kostka-kostant", shape.parts(), content, {}, value, oracle});
      });
    }
  }
  return report;
}

namespace detail {

using nlohmann::json;

inline std::size_t resolve_n(std::initializer_list<const partition*> inputs,
                             std::int64_t n_flag, std::size_t extra = 0) {
  std::size_t n = std::max<std::size_t>(1, extra);
  for (const partition* p : inputs) n = std::max(n, p->num_parts());
  if (n_flag > 0) {
    if (static_cast<std::size_t>(n_flag) < n)
      throw std::invalid_argument(
          "--n is smaller than the widest input; it can only zero-pad");
    n = static_cast<std::size_t>(n_flag);
  }
  return n;
}

inline void emit(std::ostream& out, bool as_json, const json& j,
                 const std::string& text) {
  if (as_json)
    out << j.dump() << "\n";
  else
    out << text << "\n";
}

inline std::string monomial_text(const weight_vector& expo, std::int64_t coeff) {
  std::string s = std::to_string(coeff);
  std::string vars;
  for (std::size_t i = 0; i < expo.size(); ++i) {
    if (expo[i] == 0) continue;
    if (!vars.empty()) vars += ' ';
    vars += "x" + std::to_string(i + 1) + "^" + std::to_string(expo[i]);
  }
  if (!vars.empty()) s += " * " + vars;
  return s;
}

}  // namespace detail

/// Dispatch a parsed command line. Exit codes: 0 success, 1 malformed
/// input, 2 verification mismatch, 3 documented size-bound violation.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::json;

  CLI::App app{"exact Littlewood-Richardson coefficient and Kostka number calculator"};
  app.require_subcommand(1);

  std::string lambda_s, mu_s, nu_s, shape_s, content_s, vector_s, xi_s;
  std::string lr_method = "matching", kostka_method_s = "ssyt";
  std::int64_t n_flag = 0, cauchy_n = 2, maxdeg = 4, max_size = 8;
  std::int64_t verify_n = 3;
  bool as_json = false, list_dominated = false;

  auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  lr_cmd->add_option("--lambda", lambda_s, "first factor, e.g. 5,3,2")->required();
  lr_cmd->add_option("--mu", mu_s, "second factor")->required();
  lr_cmd->add_option("--nu", nu_s, "target partition")->required();
  lr_cmd->add_option("--method", lr_method, "matching|signed|steinberg|oracle")
      ->check(CLI::IsMember({"matching", "signed", "steinberg", "oracle"}));
  lr_cmd->add_option("--n", n_flag, "pad to n parts (defaults to the widest input)");
  lr_cmd->add_flag("--json", as_json, "JSON output");

  auto* kostka_cmd = app.add_subcommand("kostka", "Kostka number");
  kostka_cmd->add_option("--shape", shape_s, "shape partition")->required();
  kostka_cmd->add_option("--content", content_s, "content multiplicities")->required();
  kostka_cmd->add_option("--method", kostka_method_s, "ssyt|kostant")
      ->check(CLI::IsMember({"ssyt", "kostant"}));
  kostka_cmd->add_option("--n", n_flag, "pad to n parts");
  kostka_cmd->add_flag("--json", as_json, "JSON output");

  auto* product_cmd = app.add_subcommand("schur-product", "expand S_lambda * S_mu");
  product_cmd->add_option("--lambda", lambda_s, "first factor")->required();
  product_cmd->add_option("--mu", mu_s, "second factor")->required();
  product_cmd->add_option("--n", n_flag, "number of variables");
  product_cmd->add_flag("--json", as_json, "JSON output");

  auto* poly_cmd = app.add_subcommand("schur-poly", "Schur polynomial terms");
  poly_cmd->add_option("--lambda", lambda_s, "partition")->required();
  poly_cmd->add_option("--n", n_flag, "number of variables");
  poly_cmd->add_flag("--json", as_json, "JSON output");

  auto* kostant_cmd = app.add_subcommand("kostant", "Kostant partition function");
  kostant_cmd->add_option("--vector", vector_s, "integer vector, e.g. 2,0,-2")->required();
  kostant_cmd->add_flag("--json", as_json, "JSON output");

  auto* dominated_cmd = app.add_subcommand("dominated", "dominance order queries");
  dominated_cmd->add_option("--mu", mu_s, "dominating partition")->required();
  auto* xi_opt = dominated_cmd->add_option("--xi", xi_s, "candidate partition");
  dominated_cmd->add_flag("--list", list_dominated, "list all partitions ⊴ mu");
  dominated_cmd->add_option("--n", n_flag, "part bound for --list");
  dominated_cmd->add_flag("--json", as_json, "JSON output");

  auto* king_cmd = app.add_subcommand("king-embed", "suffix-sum embedding of a Kostka number");
  king_cmd->add_option("--mu", mu_s, "content partition")->required();
  king_cmd->add_flag("--json", as_json, "JSON output");

  auto* cauchy_cmd = app.add_subcommand("cauchy-check", "truncated Cauchy identity check");
  cauchy_cmd->add_option("--n", cauchy_n, "variables per side (1..3)");
  cauchy_cmd->add_option("--maxdeg", maxdeg, "total degree cutoff (0..8)");
  cauchy_cmd->add_flag("--json", as_json, "JSON output");

  auto* verify_cmd = app.add_subcommand("verify", "cross-method verification sweep");
  verify_cmd->add_option("--max-size", max_size, "maximum |nu| (default 8)");
  verify_cmd->add_option("--n", verify_n, "number of parts (default 3)");
  verify_cmd->add_flag("--json", as_json, "JSON output");

  std::vector<const char*> argv;
  argv.push_back("lrk");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (lr_cmd->parsed()) {
      partition lambda = partition::parse(lambda_s);
      partition mu = partition::parse(mu_s);
      partition nu = partition::parse(nu_s);
      std::size_t n = detail::resolve_n({&lambda, &mu, &nu}, n_flag);
      std::int64_t value = 0;
      if (lr_method == "matching")
        value = lr_matching(lambda, mu, nu, n);
      else if (lr_method == "signed")
        value = lr_signed_kostka(lambda, mu, nu, n);
      else if (lr_method == "steinberg")
        value = lr_steinberg(lambda, mu, nu, n);
      else
        value = lr_rule_count(nu, lambda, mu);
      json j{{"lambda", lambda.parts()}, {"mu", mu.parts()},   {"nu", nu.parts()},
             {"method", lr_method},      {"n", n},             {"value", value}};
      detail::emit(out, as_json, j, std::to_string(value));
      return 0;
    }

    if (kostka_cmd->parsed()) {
      partition shape = partition::parse(shape_s);
      weight_vector content = parse_int_list(content_s);
      std::size_t n = detail::resolve_n({&shape}, n_flag, content.size());
      std::int64_t value = kostka_method_s == "ssyt" ? kostka_ssyt(shape, content)
                                                     : kostka_kostant(shape, content, n);
      json j{{"shape", shape.parts()},
             {"content", content},
             {"method", kostka_method_s},
             {"value", value}};
      detail::emit(out, as_json, j, std::to_string(value));
      return 0;
    }

    if (product_cmd->parsed()) {
      partition lambda = partition::parse(lambda_s);
      partition mu = partition::parse(mu_s);
      std::size_t n = detail::resolve_n({&lambda, &mu}, n_flag);
      schur_expansion expansion = schur_product_expand(lambda, mu, n);
      json terms = json::array();
      std::string text;
      const auto& map = expansion.terms();
      for (auto it = map.rbegin(); it != map.rend(); ++it) {  // descending lex
        terms.push_back(json{{"nu", it->first.parts()}, {"coeff", it->second}});
        if (!text.empty()) text += "\n";
        text += it->first.to_string() + ": " + std::to_string(it->second);
      }
      json j{{"lambda", lambda.parts()}, {"mu", mu.parts()}, {"n", n}, {"terms", terms}};
      detail::emit(out, as_json, j, text);
      return 0;
    }

    if (poly_cmd->parsed()) {
      partition lambda = partition::parse(lambda_s);
      std::size_t n = detail::resolve_n({&lambda}, n_flag);
      sparse_polynomial poly = schur_polynomial(lambda, n);
      json terms = json::array();
      std::string text;
      const auto& map = poly.terms();
      for (auto it = map.rbegin(); it != map.rend(); ++it) {
        terms.push_back(json{{"exponents", it->first}, {"coeff", it->second}});
        if (!text.empty()) text += "\n";
        text += detail::monomial_text(it->first, it->second);
      }
      json j{{"lambda", lambda.parts()}, {"n", n}, {"terms", terms}};
      detail::emit(out, as_json, j, text);
      return 0;
    }

    if (kostant_cmd->parsed()) {
      weight_vector v = parse_int_list(vector_s);
      std::int64_t value = kostant_partition(v);
      json j{{"vector", v}, {"value", value}};
      detail::emit(out, as_json, j, std::to_string(value));
      return 0;
    }

    if (dominated_cmd->parsed()) {
      partition mu = partition::parse(mu_s);
      if (list_dominated) {
        std::size_t n = detail::resolve_n({&mu}, n_flag);
        auto list = enumerate_dominated(mu, n);
        json arr = json::array();
        std::string text;
        for (std::size_t i = 0; i < list.size(); ++i) {
          arr.push_back(list[i].parts());
          if (i) text += "\n";
          text += list[i].to_string();
        }
        json j{{"mu", mu.parts()}, {"n", n}, {"dominated", arr}};
        detail::emit(out, as_json, j, text);
        return 0;
      }
      if (xi_opt->count() == 0) {
        err << "dominated: need --xi or --list\n";
        return 1;
      }
      partition xi = partition::parse(xi_s);
      bool value = is_dominated(xi, mu);
      json j{{"xi", xi.parts()}, {"mu", mu.parts()}, {"dominated", value}};
      detail::emit(out, as_json, j, value ? "true" : "false");
      return 0;
    }

    if (king_cmd->parsed()) {
      partition mu = partition::parse(mu_s);
      king_pair pair = king_embedding(mu);
      json j{{"mu", mu.parts()},
             {"sigma", pair.sigma.parts()},
             {"tau", pair.tau.parts()}};
      detail::emit(out, as_json, j,
                   "sigma: " + pair.sigma.to_string() + "\ntau: " + pair.tau.to_string());
      return 0;
    }

    if (cauchy_cmd->parsed()) {
      if (cauchy_n < 0) throw std::invalid_argument("cauchy-check: --n must be positive");
      bool ok = cauchy_truncated_check(static_cast<std::size_t>(cauchy_n), maxdeg);
      json j{{"n", cauchy_n}, {"maxdeg", maxdeg}, {"ok", ok}};
      detail::emit(out, as_json, j, ok ? "ok" : "mismatch");
      return ok ? 0 : 2;
    }

    if (verify_cmd->parsed()) {
      if (verify_n < 1) throw std::invalid_argument("verify: --n must be positive");
      verify_report report = run_verify(max_size, static_cast<std::size_t>(verify_n));
      json mismatches = json::array();
      std::string text = "cases run: " + std::to_string(report.cases_run) +
                         "\nmismatches: " + std::to_string(report.mismatches.size());
      for (const verify_mismatch& m : report.mismatches) {
        mismatches.push_back(json{{"method", m.method},
                                  {"lambda", m.lambda},
                                  {"mu", m.mu},
                                  {"nu", m.nu},
                                  {"value", m.value},
                                  {"oracle_value", m.oracle_value}});
        text += "\nmismatch method=" + m.method + " lambda=" + to_csv(m.lambda) +
                " mu=" + to_csv(m.mu) + " nu=" + to_csv(m.nu) +
                ": value=" + std::to_string(m.value) +
                " oracle=" + std::to_string(m.oracle_value);
      }
      json j{{"cases_run", report.cases_run}, {"mismatches", mismatches}};
      detail::emit(out, as_json, j, text);
      return report.mismatches.empty() ? 0 : 2;
    }
  } catch (const bounds_error& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 1;
  }
  err << "unknown subcommand\n";
  return 1;
}

}  // namespace lrk::cli
