// Command-line front end. Every subcommand is deterministic given its flags:
// fixed seeds drive all randomized verification, numbers print with up to 17
// significant digits. Exit codes: 0 success, 1 domain error (reducible pair,
// non-conjugate pairs, unsupported rank), 2 usage or input syntax error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fricke/charvar.hpp"
#include "fricke/charvar3.hpp"
#include "fricke/errors.hpp"
#include "fricke/io.hpp"
#include "fricke/polynomial.hpp"
#include "fricke/trace_calculus.hpp"
#include "fricke/verify.hpp"
#include "fricke/words.hpp"

namespace {

using namespace fricke;

std::string mat_text(const Mat2& m) {
  return "[[" + format_complex(m.a) + ", " + format_complex(m.b) + "], [" +
         format_complex(m.c) + ", " + format_complex(m.d) + "]]";
}

std::vector<Complex> parse_complex_list(const std::string& text,
                                        std::size_t expected) {
  std::vector<Complex> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string piece =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    out.push_back(parse_complex(piece));
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  if (out.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) +
                         " comma-separated complex values",
                     0);
  }
  return out;
}

SixTuple six_from_strings(const std::vector<std::string>& v) {
  return {parse_complex(v[0]), parse_complex(v[1]), parse_complex(v[2]),
          parse_complex(v[3]), parse_complex(v[4]), parse_complex(v[5])};
}

void print_check_results(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    std::cout << r.name << ": max_residual=" << format_double(r.max_residual)
              << " tol=" << format_double(r.tolerance)
              << " trials=" << r.trials << (r.pass ? " PASS" : " FAIL")
              << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "trace polynomials of free-group words in SL(2,C), character lifting,\n"
      "irreducibility, conjugators, and the rank-3 trace relations, with\n"
      "every symbolic result cross-checkable against a numeric matrix oracle"};
  app.require_subcommand(1);
  int rc = 0;

  // trace <word> [--rank 2] [--memo-cap N]
  std::string trace_word_text;
  int trace_rank = 2;
  std::uint64_t memo_cap = 0;
  auto* trace_cmd =
      app.add_subcommand("trace", "print the trace polynomial f_w(x,y,z)");
  trace_cmd->add_option("word", trace_word_text, "word, e.g. \"XYX^-1Y^-1\"")
      ->required();
  trace_cmd->add_option("--rank", trace_rank, "word rank (only 2 supported)");
  auto* cap_opt = trace_cmd->add_option(
      "--memo-cap", memo_cap, "cap the memo table at this many entries");
  trace_cmd->callback([&] {
    if (trace_rank != 2) {
      throw Error(
          "trace polynomials are computed for rank-2 words only; "
          "rewriting rank-3 words into the eight generators is out of scope");
    }
    const Word w = parse_word(trace_word_text, 2);
    TraceTable table(cap_opt->count() > 0
                         ? std::optional<std::size_t>(memo_cap)
                         : std::nullopt);
    std::cout << table.trace_poly(w).str() << "\n";
  });

  // eval <word> --at x,y,z
  std::string eval_word_text, eval_at;
  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate f_w at a character triple");
  eval_cmd->add_option("word", eval_word_text)->required();
  eval_cmd->add_option("--at", eval_at, "complex triple x,y,z")->required();
  eval_cmd->callback([&] {
    const Word w = parse_word(eval_word_text, 2);
    const auto v = parse_complex_list(eval_at, 3);
    const TracePoly f = trace_poly(w);
    std::cout << format_complex(f.eval({{Var::x, v[0]},
                                        {Var::y, v[1]},
                                        {Var::z, v[2]}}))
              << "\n";
  });

  // kappa x y z
  std::vector<std::string> kappa_args;
  auto* kappa_cmd =
      app.add_subcommand("kappa", "kappa(x,y,z) = x^2+y^2+z^2-xyz-2");
  kappa_cmd->add_option("xyz", kappa_args, "x y z (complex)")
      ->expected(3)
      ->required();
  kappa_cmd->callback([&] {
    std::cout << format_complex(kappa_value(parse_complex(kappa_args[0]),
                                            parse_complex(kappa_args[1]),
                                            parse_complex(kappa_args[2])))
              << "\n";
  });

  // lift x y z [--json]
  std::vector<std::string> lift_args;
  bool lift_json = false;
  auto* lift_cmd = app.add_subcommand(
      "lift", "matrix pair with tau(xi,eta) = (x,y,z)");
  lift_cmd->add_option("xyz", lift_args, "x y z (complex)")
      ->expected(3)
      ->required();
  lift_cmd->add_flag("--json", lift_json, "emit the pair as JSON");
  lift_cmd->callback([&] {
    const RepPair p = lift_char({parse_complex(lift_args[0]),
                                 parse_complex(lift_args[1]),
                                 parse_complex(lift_args[2])});
    if (lift_json) {
      std::cout << to_json(p) << "\n";
    } else {
      std::cout << "xi  = " << mat_text(p.xi) << "\n"
                << "eta = " << mat_text(p.eta) << "\n";
    }
  });

  // lift3 t1 t2 t3 t12 t23 t13 [--json]
  std::vector<std::string> lift3_args;
  bool lift3_json = false;
  double lift3_irr_tol = kDefaultIrrTol;
  auto* lift3_cmd = app.add_subcommand(
      "lift3", "matrix triple realizing six rank-3 trace coordinates");
  lift3_cmd->add_option("tuple", lift3_args, "t1 t2 t3 t12 t23 t13 (complex)")
      ->expected(6)
      ->required();
  lift3_cmd->add_flag("--json", lift3_json, "emit the result as JSON");
  lift3_cmd->add_option("--irr-tol", lift3_irr_tol,
                        "branch cut tolerance on |kappa(t1,t2,t12) - 2|");
  lift3_cmd->callback([&] {
    const SixTuple s = six_from_strings(lift3_args);
    const Lift3Result res = lift_char3(s, lift3_irr_tol);
    const auto [r1, r2] = t123_roots(s);
    if (lift3_json) {
      std::cout << "{\"branch\": \"" << lift_branch_name(res.branch)
                << "\", \"t123_roots\": [" << to_json(r1) << ", "
                << to_json(r2) << "], \"triple\": " << to_json(res.triple)
                << "}\n";
    } else {
      std::cout << "branch = " << lift_branch_name(res.branch) << "\n"
                << "t123 roots = " << format_complex(r1) << ", "
                << format_complex(r2) << "\n"
                << "A1 = " << mat_text(res.triple.a1) << "\n"
                << "A2 = " << mat_text(res.triple.a2) << "\n"
                << "A3 = " << mat_text(res.triple.a3) << "\n";
    }
  });

  // conjugate <pairs.json>
  std::string conj_path;
  bool conj_json = false;
  double conj_irr_tol = kDefaultIrrTol;
  auto* conj_cmd = app.add_subcommand(
      "conjugate", "recover g with g.(xi,eta)g^-1 = (xi',eta')");
  conj_cmd->add_option("pairs", conj_path, "JSON file [[xi,eta],[xi',eta']]")
      ->required();
  conj_cmd->add_flag("--json", conj_json, "emit the matrix as JSON");
  conj_cmd->add_option("--irr-tol", conj_irr_tol, "irreducibility tolerance");
  conj_cmd->callback([&] {
    const auto [p, q] = pair_of_pairs_from_json(read_file(conj_path));
    try {
      const Mat2 g =
          conjugator(p, q, kDefaultOracleTol, 1e-7, conj_irr_tol);
      std::cout << (conj_json ? to_json(g) : mat_text(g)) << "\n";
    } catch (const ReduciblePair&) {
      std::cout << "REDUCIBLE\n";
      rc = 1;
    } catch (const NotConjugate&) {
      std::cout << "NOT_CONJUGATE\n";
      rc = 1;
    }
  });

  // invol <pair.json>
  std::string invol_path;
  bool invol_json = false;
  auto* invol_cmd = app.add_subcommand(
      "invol", "inverting element g with g.(xi,eta) = (xi^-1,eta^-1)");
  invol_cmd->add_option("pair", invol_path, "JSON file [xi, eta]")->required();
  invol_cmd->add_flag("--json", invol_json, "emit the matrix as JSON");
  invol_cmd->callback([&] {
    const RepPair p = pair_from_json(read_file(invol_path));
    try {
      const Mat2 g = inverting_element(p);
      std::cout << (invol_json ? to_json(g) : mat_text(g)) << "\n";
    } catch (const ReduciblePair&) {
      std::cout << "REDUCIBLE\n";
      rc = 1;
    }
  });

  // verify --suite basic|fricke|all --trials N --seed S
  std::string suite = "all";
  VerifyOptions vopt;
  auto* verify_cmd = app.add_subcommand(
      "verify", "run randomized identity suites; exit 0 iff all pass");
  verify_cmd->add_option("--suite", suite, "basic | fricke | all")
      ->check(CLI::IsMember({"basic", "fricke", "all"}));
  verify_cmd->add_option("--trials", vopt.trials, "trials per identity");
  verify_cmd->add_option("--seed", vopt.seed, "random seed");
  verify_cmd->add_option("--oracle-tol", vopt.oracle_tol,
                         "relative tolerance for matrix-oracle identities");
  verify_cmd->add_option("--irr-tol", vopt.irr_tol,
                         "irreducibility tolerance on |kappa - 2|");
  verify_cmd->add_option("--det-tol", vopt.det_tol,
                         "SL2 certification tolerance on |det - 1|");
  verify_cmd->callback([&] {
    std::vector<CheckResult> results;
    if (suite == "basic" || suite == "all") {
      const auto basic = run_basic_suite(vopt);
      results.insert(results.end(), basic.begin(), basic.end());
    }
    if (suite == "fricke" || suite == "all") {
      const auto fr = run_fricke_suite(vopt);
      results.insert(results.end(), fr.begin(), fr.end());
    }
    print_check_results(results);
    std::size_t passed = 0;
    for (const auto& r : results) {
      passed += r.pass ? 1 : 0;
    }
    std::cout << "verify: " << passed << "/" << results.size()
              << " checks passed\n";
    if (!all_pass(results)) {
      rc = 1;
    }
  });

  // reduce <word> [--rank]
  std::string reduce_word_text;
  int reduce_rank = 2;
  auto* reduce_cmd = app.add_subcommand(
      "reduce", "reduced and cyclically reduced forms plus canonical key");
  reduce_cmd->add_option("word", reduce_word_text)->required();
  reduce_cmd->add_option("--rank", reduce_rank, "word rank (2 or 3)");
  reduce_cmd->callback([&] {
    const Word w = parse_word(reduce_word_text, reduce_rank);
    const CyclicReduction cr = cyclic_reduce(w);
    std::cout << "reduced    = " << to_string(w) << "\n"
              << "cyclic     = " << to_string(cr.core) << "\n"
              << "conjugator = " << to_string(cr.conjugator) << "\n"
              << "key        = " << to_string(canonical_trace_key(w)) << "\n";
  });

  // roots3 t1 t2 t3 t12 t23 t13
  std::vector<std::string> roots_args;
  auto* roots_cmd = app.add_subcommand(
      "roots3", "the two roots of lambda^2 - P(t)lambda + Q(t)");
  roots_cmd->add_option("tuple", roots_args, "t1 t2 t3 t12 t23 t13 (complex)")
      ->expected(6)
      ->required();
  roots_cmd->callback([&] {
    const auto [r1, r2] = t123_roots(six_from_strings(roots_args));
    std::cout << "lambda+ = " << format_complex(r1) << "\n"
              << "lambda- = " << format_complex(r2) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
