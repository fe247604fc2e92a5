// Copyright 2026 The skewlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "skewlab/bench.hpp"
#include "skewlab/commutators.hpp"
#include "skewlab/config.hpp"
#include "skewlab/eval.hpp"
#include "skewlab/verify.hpp"

namespace {

// Exit codes: 0 = success / all properties pass, 1 = property failure or a
// mathematically undefined result, 2 = usage error (bad flags, bad specs,
// expression syntax errors, symbols the context lacks).
constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skewlab: exact arithmetic in twisted Laurent series division rings L((t, sigma))"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global options (--prec, --field, ...) after the subcommand too

  skewlab::ContextConfig context;
  long precision = skewlab::kDefaultPrecision;
  std::uint64_t seed = 42;
  app.add_option("--field", context.field,
                 "coefficient field: q, q-u, or gf:p:k[:c0,c1,...,ck] (modulus low-to-high)")
      ->capture_default_str();
  app.add_option("--sigma", context.sigma, "automorphism: identity, shift:c, scale:c, frobenius")
      ->capture_default_str();
  app.add_option("--prec", precision, "working precision P (series known modulo t^P)")
      ->capture_default_str();
  app.add_option("--seed", seed, "master seed for randomized suites")->capture_default_str();

  std::string eval_arg;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression and print the series");
  eval_cmd->add_option("expr", eval_arg, "expression over u/w, t, + - * / ^, comm(,), inv(), O(t^P)")
      ->required();

  std::string inv_arg;
  CLI::App* inv_cmd = app.add_subcommand("inv", "series inverse of an expression");
  inv_cmd->add_option("expr", inv_arg, "expression to invert")->required();

  std::string comm_x, comm_y;
  CLI::App* comm_cmd = app.add_subcommand("comm", "multiplicative commutator x y x^-1 y^-1");
  comm_cmd->add_option("x", comm_x, "first expression")->required();
  comm_cmd->add_option("y", comm_y, "second expression")->required();

  skewlab::VerifyConfig verify_config;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the property suites and emit a JSON report");
  verify_cmd->add_option("--trials-ring", verify_config.trials_ring, "associativity/distributivity triples")
      ->capture_default_str();
  verify_cmd->add_option("--trials-valuation", verify_config.trials_valuation, "valuation-law pairs")
      ->capture_default_str();
  verify_cmd->add_option("--trials-inverse", verify_config.trials_inverse, "two-sided inverse checks")
      ->capture_default_str();
  verify_cmd
      ->add_option("--trials-commutators", verify_config.trials_commutators,
                   "single commutator kernel checks")
      ->capture_default_str();
  verify_cmd
      ->add_option("--trials-products", verify_config.trials_products,
                   "products of up to 4 commutators")
      ->capture_default_str();
  verify_cmd
      ->add_option("--trials-fcomb", verify_config.trials_f_combinations,
                   "rational-scalar combinations of commutators")
      ->capture_default_str();
  verify_cmd
      ->add_option("--trials-centre", verify_config.trials_centre_probes,
                   "random probes per centre candidate")
      ->capture_default_str();
  verify_cmd->add_option("--kmax", verify_config.k_max, "codimension targets t^-1 .. t^-kmax")
      ->capture_default_str();
  verify_cmd->add_option("--budget", verify_config.span_budget, "commutator generators per target")
      ->capture_default_str();

  skewlab::BenchConfig bench_config;
  CLI::App* bench_cmd = app.add_subcommand("bench", "time mul vs mul_incremental on dense series");
  bench_cmd->add_option("--sizes", bench_config.sizes, "coefficient counts, e.g. 32,64,128,256")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--trials", bench_config.trials, "trials per size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify_cmd) {
      verify_config.context = context;
      verify_config.seed = seed;
      verify_config.precision = precision;
      const skewlab::VerificationReport report = skewlab::run_verify(verify_config);
      std::cout << skewlab::report_to_json(report) << "\n";
      std::cerr << skewlab::report_summary(report);
      return report.all_passed() ? kExitSuccess : kExitFailure;
    }
    if (*bench_cmd) {
      bench_config.context = context;
      bench_config.seed = seed;
      const skewlab::BenchReport report = skewlab::run_bench(bench_config);
      std::cout << skewlab::bench_to_json(report) << "\n";
      std::cerr << skewlab::bench_table(report);
      return report.all_outputs_equal() ? kExitSuccess : kExitFailure;
    }

    const skewlab::ContextPtr ctx = skewlab::make_context(context);
    if (*eval_cmd) {
      std::cout << skewlab::eval_text(eval_arg, ctx, precision).to_string() << "\n";
    } else if (*inv_cmd) {
      std::cout << skewlab::eval_text(inv_arg, ctx, precision).inverse().to_string() << "\n";
    } else if (*comm_cmd) {
      const skewlab::SkewSeries x = skewlab::eval_text(comm_x, ctx, precision);
      const skewlab::SkewSeries y = skewlab::eval_text(comm_y, ctx, precision);
      std::cout << skewlab::commutator(x, y).value.to_string() << "\n";
    }
    return kExitSuccess;
  } catch (const skewlab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
