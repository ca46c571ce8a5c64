// Copyright 2026 The weylgenus authors.
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

// Batch driver for the trace-formula and characteristic-class pipelines.
//
//   weylgenus run JOBFILE          run a JSON job document ('-' = stdin)
//   weylgenus sweep --nmax N       twisted A-hat vanishing sweep over CP^n
//   weylgenus verify ...           factorization property suite
//
// Exit codes: 0 success, 1 domain error, 2 parse/schema error,
// 3 property-suite failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "weylgenus/jobs.hpp"

namespace {

std::string read_document(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw weylgenus::IoError("cannot open job file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int deliver(const weylgenus::Report& report, const weylgenus::JobSpec& job,
            const std::string& csv_flag, bool quiet) {
  const std::string csv_path = !csv_flag.empty() ? csv_flag : job.csv_path;
  const bool csv_requested = job.output == weylgenus::OutputMode::csv || !csv_path.empty();
  const bool csv_to_stdout = csv_requested && csv_path.empty();
  if (csv_to_stdout)
    weylgenus::emit_csv(report, std::cout);
  else if (!quiet)
    std::cout << weylgenus::render_table(report);
  if (!csv_path.empty()) weylgenus::emit_csv(report, csv_path);
  return report.suite_passed ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact discrete-series trace factorizations and characteristic-class genera"};
  app.require_subcommand(1);

  std::string job_file;
  std::string csv_path;
  bool quiet = false;
  int nmax = 10;
  int rank_max = 2;
  int weight_max = 5;

  CLI::App* run = app.add_subcommand("run", "run a JSON job document (file path, or '-' for stdin)");
  run->add_option("jobfile", job_file, "job document")->required();
  run->add_option("--csv", csv_path, "write CSV to this path");
  run->add_flag("--quiet", quiet, "suppress the table output");

  CLI::App* sweep = app.add_subcommand("sweep", "twisted A-hat vanishing sweep on CP^1..CP^N");
  sweep->add_option("--nmax", nmax, "largest projective-space dimension")->check(CLI::NonNegativeNumber);
  sweep->add_option("--csv", csv_path, "write CSV to this path");
  sweep->add_flag("--quiet", quiet, "suppress the table output");

  CLI::App* verify =
      app.add_subcommand("verify", "factorization property suite over built-in pairs");
  verify->add_option("--rank-max", rank_max, "largest Cartan rank in the catalog")
      ->check(CLI::PositiveNumber);
  verify->add_option("--weight-max", weight_max, "largest fundamental coordinate on the grid")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--csv", csv_path, "write CSV to this path");
  verify->add_flag("--quiet", quiet, "suppress the table output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      const weylgenus::JobSpec job = weylgenus::parse_job(read_document(job_file));
      return deliver(weylgenus::run_job(job), job, csv_path, quiet);
    }
    if (sweep->parsed()) {
      weylgenus::JobSpec job;
      job.kind = weylgenus::JobKind::sweep;
      job.nmax = nmax;
      return deliver(weylgenus::run_job(job), job, csv_path, quiet);
    }
    weylgenus::JobSpec job;
    job.kind = weylgenus::JobKind::verify;
    return deliver(weylgenus::run_verify_catalog(rank_max, weight_max), job, csv_path, quiet);
  } catch (const weylgenus::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const weylgenus::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const weylgenus::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
