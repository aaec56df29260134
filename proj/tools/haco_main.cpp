// Copyright 2026 The Haco Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch front end: apply operator configs to spectrum files, run the
// verification suites, and transform Dirichlet coefficient files.
//
// Exit codes: 0 success, 1 verification failure, 2 input/validation error,
// 3 group/family incompatibility.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "haco/serialization.hpp"
#include "haco/verify.hpp"

namespace {

int run_apply(const std::string& config_path, const std::string& input_path,
              const std::string& output_path) {
  const haco::HausdorffOperator op =
      haco::operator_from_json(haco::read_text_file(config_path));
  const haco::Spectrum input =
      haco::spectrum_from_json(haco::read_text_file(input_path));
  const haco::Spectrum output = haco::apply(op, input);
  haco::write_text_file(output_path, haco::to_json_string(output));
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed,
               const std::string& report_path) {
  const haco::VerificationReport report = haco::run_suite(suite, seed);
  for (const haco::CheckRecord& rec : report.checks) {
    std::ostringstream line;
    line << (rec.pass ? "[PASS] " : "[FAIL] ") << rec.id << "  deviation "
         << rec.max_deviation << " tolerance " << rec.tolerance
         << "  instances " << rec.instances;
    if (rec.witness) line << "  witness " << *rec.witness;
    std::cout << line.str() << "\n";
  }
  if (!report_path.empty())
    haco::write_text_file(report_path, haco::to_json_string(report));
  return report.all_passed() ? 0 : 1;
}

int run_dirichlet(const std::string& op, const std::string& config_path,
                  const std::string& coeffs_path,
                  const std::string& output_path) {
  const haco::DirichletPolynomial input =
      haco::dirichlet_from_json(haco::read_text_file(coeffs_path));
  haco::DirichletPolynomial output(input.n_max());
  if (op == "sigma") {
    const auto weights = haco::sigma_weights_from_operator(
        haco::operator_from_json(haco::read_text_file(config_path)));
    output = haco::sigma_operator(weights, input);
  } else {
    const auto weights =
        haco::root_weights_from_json(haco::read_text_file(config_path));
    output = haco::root_rescale_operator(weights, input);
  }
  haco::write_text_file(output_path, haco::to_json_string(output));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete Hausdorff operators on ordered dual groups"};
  app.require_subcommand(1);

  std::string config_path;
  std::string input_path;
  std::string output_path;
  CLI::App* apply = app.add_subcommand(
      "apply", "apply an operator config to a spectrum file");
  apply->add_option("config", config_path, "operator config (JSON)")
      ->required();
  apply->add_option("input", input_path, "input spectrum (JSON)")->required();
  apply->add_option("output", output_path, "output spectrum path")->required();

  std::string suite = "all";
  std::uint64_t seed = 0;
  std::string report_path;
  CLI::App* verify =
      app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite,
                     "one of: all, theorem1, theorem2, theorem5, remark1, "
                     "corollary3, proposition1, dirichlet, delsarte, eq1");
  verify->add_option("--seed", seed, "instance generator seed");
  verify->add_option("--report", report_path, "report output path (JSON)");

  std::string dirichlet_op;
  std::string dirichlet_config;
  std::string dirichlet_coeffs;
  std::string dirichlet_output;
  CLI::App* dirichlet = app.add_subcommand(
      "dirichlet", "transform a Dirichlet coefficient file");
  dirichlet->add_option("--op", dirichlet_op, "sigma or rootscale")
      ->required()
      ->check(CLI::IsMember({"sigma", "rootscale"}));
  dirichlet->add_option("config", dirichlet_config, "kernel config (JSON)")
      ->required();
  dirichlet->add_option("coeffs", dirichlet_coeffs, "coefficient file (JSON)")
      ->required();
  dirichlet->add_option("output", dirichlet_output, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (apply->parsed()) return run_apply(config_path, input_path, output_path);
    if (verify->parsed()) return run_verify(suite, seed, report_path);
    return run_dirichlet(dirichlet_op, dirichlet_config, dirichlet_coeffs,
                         dirichlet_output);
  } catch (const haco::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return haco::is_compatibility_error(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
