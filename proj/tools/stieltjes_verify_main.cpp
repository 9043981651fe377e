// Command-line front end: run identity verifications, list fixtures, and
// evaluate individual operations, with text or streamable-JSON reports.
//
// Exit codes: 0 all selected fixtures pass, 1 any hard failure, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stieltjes/catalog.hpp"
#include "stieltjes/duality.hpp"
#include "stieltjes/series.hpp"
#include "stieltjes/specfun.hpp"

namespace {

using stieltjes::catalog::Identity;
using stieltjes::catalog::Registry;
using stieltjes::catalog::RunOverrides;
using stieltjes::catalog::VerificationRecord;
using ordered_json = nlohmann::ordered_json;

// glob with '*' and '?'
bool glob_match(const std::string& pat, const std::string& s, size_t pi = 0, size_t si = 0) {
  while (pi < pat.size() && si < s.size()) {
    if (pat[pi] == '*') {
      for (size_t k = si; k <= s.size(); ++k) {
        if (glob_match(pat, s, pi + 1, k)) return true;
      }
      return false;
    }
    if (pat[pi] != '?' && pat[pi] != s[si]) return false;
    ++pi;
    ++si;
  }
  while (pi < pat.size() && pat[pi] == '*') ++pi;
  return pi == pat.size() && si == s.size();
}

std::vector<const Identity*> select_identities(const std::vector<std::string>& globs) {
  std::vector<const Identity*> out;
  for (const auto& ident : Registry::instance().identities()) {
    if (globs.empty()) {
      out.push_back(&ident);
      continue;
    }
    for (const auto& g : globs) {
      if (glob_match(g, ident.id)) {
        out.push_back(&ident);
        break;
      }
    }
  }
  return out;
}

ordered_json record_json(const VerificationRecord& r, bool stable) {
  ordered_json j;
  j["id"] = r.id;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["abs_err"] = r.abs_err;
  j["rel_err"] = r.rel_err;
  j["pass"] = r.pass;
  j["suspect"] = r.suspect;
  j["n_evals"] = r.n_evals;
  j["elapsed_ms"] = stable ? 0.0 : r.elapsed_ms;
  return j;
}

void print_record_text(const VerificationRecord& r) {
  const char* tag = r.suspect ? "susp" : (r.pass ? " ok " : "FAIL");
  std::printf("[%s] %-18s lhs=%-22.15g rhs=%-22.15g abs_err=%-12.3e n_evals=%-9ld %.0f ms\n",
              tag, r.id.c_str(), r.lhs, r.rhs, r.abs_err, r.n_evals, r.elapsed_ms);
  if (!r.detail.empty()) std::printf("       %s\n", r.detail.c_str());
}

int cmd_verify(const std::vector<std::string>& globs, std::optional<double> tol,
               std::optional<long> budget, const std::string& format, int jobs,
               bool stable_output) {
  auto selected = select_identities(globs);
  if (selected.empty()) {
    std::fprintf(stderr, "error: no fixture matches the given --id filters\n");
    return 2;
  }
  RunOverrides ov;
  ov.tol = tol;
  ov.budget = budget;

  std::vector<VerificationRecord> records(selected.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < selected.size(); ++i) {
      records[i] = Registry::instance().verify(*selected[i], ov);
    }
  } else {
    // fixtures are pure; records are buffered and emitted in registry order
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t] {
        for (size_t i = t; i < selected.size(); i += jobs) {
          records[i] = Registry::instance().verify(*selected[i], ov);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  long passed = 0, failed = 0, suspects = 0;
  for (const auto& r : records) {
    if (r.suspect) {
      ++suspects;
    } else if (r.pass) {
      ++passed;
    } else {
      ++failed;
    }
    if (format == "json") {
      std::printf("%s\n", record_json(r, stable_output).dump().c_str());
    } else {
      print_record_text(r);
    }
  }
  if (format != "json") {
    std::printf("passed %ld / failed %ld / suspect %ld\n", passed, failed, suspects);
  }
  return failed == 0 ? 0 : 1;
}

int cmd_list(const std::vector<std::string>& globs, const std::string& format) {
  auto selected = select_identities(globs);
  if (selected.empty()) {
    std::fprintf(stderr, "error: no fixture matches the given --id filters\n");
    return 2;
  }
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto* ident : selected) {
      ordered_json j;
      j["id"] = ident->id;
      j["description"] = ident->description;
      j["reference"] = ident->reference;
      j["tol"] = ident->tol;
      j["typo_suspect"] = ident->typo_suspect;
      if (!ident->notes.empty()) j["notes"] = ident->notes;
      arr.push_back(j);
    }
    std::printf("%s\n", arr.dump(2).c_str());
  } else {
    for (const auto* ident : selected) {
      std::printf("%-18s %-8s tol=%-8.1e %-24s %s\n", ident->id.c_str(),
                  ident->typo_suspect ? "suspect" : "", ident->tol, ident->reference.c_str(),
                  ident->description.c_str());
    }
  }
  return 0;
}

int cmd_eval(const std::string& op, int n, int k, double re, double im, double z,
             const std::string& pair, long k_outer, bool doubled) {
  using namespace stieltjes;
  try {
    if (op == "polylog") {
      auto v = specfun::polylog(n, {re, im});
      std::printf("polylog(%d, %g%+gi) = %.15g %+.15gi\n", n, re, im, v.real(), v.imag());
    } else if (op == "jn") {
      QuadResult r = duality::j_n(n);
      std::printf("J_%d = %.15g (err_est %.3e, %ld evals)\n", n, r.value, r.err_est, r.n_evals);
    } else if (op == "hat") {
      const auto& p = duality::pair_by_name(pair);
      QuadResult r = duality::hat_transform_numeric(p, z);
      double closed = p.fhat_closed ? p.fhat_closed->eval(z)
                                    : std::numeric_limits<double>::quiet_NaN();
      std::printf("hat[%s](%g) = %.15g (closed form %.15g, err_est %.3e)\n", pair.c_str(), z,
                  r.value, closed, r.err_est);
    } else if (op == "tvalue") {
      auto r = series::t_value_triple(1e-9);
      std::printf("t-value = %.15g (tail_bound %.3e, %ld terms)\n", r.value, r.tail_bound,
                  r.terms_used);
    } else if (op == "mzv-tail") {
      auto r = series::mzv_tail_triple(k_outer, 1e-9, doubled);
      std::printf("mzv tail%s = %.15g (tail_bound %.3e, %ld terms)\n",
                  doubled ? " (doubled)" : "", r.value, r.tail_bound, r.terms_used);
    } else if (op == "e-even") {
      std::printf("E_%d = %.15g\n", 2 * k, series::e_even(k));
    } else if (op == "e-odd") {
      std::printf("E_%d = %.15g\n", 2 * n + 1, series::e_odd(n));
    } else {
      std::fprintf(stderr, "error: unknown eval op '%s'\n", op.c_str());
      return 2;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification of a catalog of integral, series, and "
               "Stieltjes-duality identities"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run identity verifications");
  std::vector<std::string> verify_ids;
  std::optional<double> tol;
  std::optional<long> budget;
  std::string verify_format = "text";
  int jobs = 1;
  bool stable_output = false;
  verify->add_option("--id", verify_ids, "fixture id glob (repeatable)");
  verify->add_option("--tol", tol, "tolerance override");
  verify->add_option("--budget", budget, "evaluation budget override");
  verify->add_option("--format", verify_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", jobs, "parallel fixture evaluations")->check(CLI::Range(1, 64));
  verify->add_flag("--stable-output", stable_output,
                   "zero the elapsed_ms field for bit-reproducible reports");

  // list
  auto* list = app.add_subcommand("list", "list fixtures");
  std::vector<std::string> list_ids;
  std::string list_format = "text";
  list->add_option("--id", list_ids, "fixture id glob (repeatable)");
  list->add_option("--format", list_format, "text|json")->check(CLI::IsMember({"text", "json"}));

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a single operation");
  std::string op;
  int n = 2, k = 1;
  double re = 0.0, im = 0.0, z = 0.5;
  std::string pair = "uniform01";
  long k_outer = 100000;
  bool doubled = false;
  eval->add_option("op", op, "polylog|jn|hat|tvalue|mzv-tail|e-even|e-odd")->required();
  eval->add_option("--n", n, "order / index");
  eval->add_option("--k", k, "index");
  eval->add_option("--re", re, "real part");
  eval->add_option("--im", im, "imaginary part");
  eval->add_option("--z", z, "evaluation point");
  eval->add_option("--pair", pair, "Stieltjes pair name");
  eval->add_option("--k-outer", k_outer, "outer truncation");
  eval->add_flag("--doubled", doubled, "1/l weights instead of 1/(2l)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(verify_ids, tol, budget, verify_format, jobs, stable_output);
    }
    if (list->parsed()) return cmd_list(list_ids, list_format);
    if (eval->parsed()) return cmd_eval(op, n, k, re, im, z, pair, k_outer, doubled);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
