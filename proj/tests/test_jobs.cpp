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

#include <cstdlib>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "weylgenus/jobs.hpp"

using namespace weylgenus;

TEST_CASE("parsing job documents") {
  SECTION("trace") {
    const JobSpec job =
        parse_job(R"({"kind":"trace","cartan":[[2]],"noncompact_simple":[1],"weight":["3"]})");
    CHECK(job.kind == JobKind::trace);
    CHECK(job.cartan == std::vector<std::vector<int>>{{2}});
    CHECK(job.noncompact_simple == std::vector<int>{1});
    CHECK(job.weight == std::vector<Rational>{3});
  }
  SECTION("genus") {
    const JobSpec job = parse_job(R"({"kind":"genus","genus":"ahat","dims":[2],"twists":["1"]})");
    CHECK(job.kind == JobKind::genus);
    CHECK(job.genus_name == "ahat");
    CHECK(job.dims == std::vector<int>{2});
    CHECK(job.twists == std::vector<Rational>{1});
  }
  SECTION("sweep and verify") {
    CHECK(parse_job(R"({"kind":"sweep","nmax":10})").nmax == 10);
    const JobSpec v = parse_job(
        R"({"kind":"verify","cartan":[[2,-1],[-1,2]],"noncompact_simple":[2],"weight_max":5})");
    CHECK(v.kind == JobKind::verify);
    CHECK(v.weight_max == 5);
  }
  SECTION("output options") {
    const JobSpec job = parse_job(
        R"({"kind":"sweep","nmax":2,"output":"csv","csv_path":"out.csv"})");
    CHECK(job.output == OutputMode::csv);
    CHECK(job.csv_path == "out.csv");
  }
}

TEST_CASE("schema violations") {
  CHECK_THROWS_AS(parse_job("not json at all"), ParseError);
  CHECK_THROWS_AS(parse_job("[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_job(R"({"kind":"frobnicate"})"), SchemaError);
  // missing fields
  CHECK_THROWS_AS(parse_job(R"({"kind":"trace","cartan":[[2,0],[0,2]]})"), SchemaError);
  // wrong arity
  CHECK_THROWS_AS(
      parse_job(R"({"kind":"trace","cartan":[[2,0],[0,2]],"noncompact_simple":[1],"weight":["1"]})"),
      SchemaError);
  CHECK_THROWS_AS(parse_job(R"({"kind":"trace","cartan":[[2,0]],"noncompact_simple":[],"weight":["1"]})"),
                  SchemaError);
  // extra fields rejected
  CHECK_THROWS_AS(parse_job(R"({"kind":"sweep","nmax":3,"weight":["1"]})"), SchemaError);
  // malformed rationals
  CHECK_THROWS_AS(
      parse_job(R"({"kind":"trace","cartan":[[2]],"noncompact_simple":[1],"weight":["1.5"]})"),
      SchemaError);
  // rationals must be strings, never JSON numbers
  CHECK_THROWS_AS(
      parse_job(R"({"kind":"trace","cartan":[[2]],"noncompact_simple":[1],"weight":[3]})"),
      SchemaError);
  CHECK_THROWS_AS(parse_job(R"({"kind":"genus","genus":"nope","dims":[2],"twists":["0"]})"),
                  SchemaError);
  CHECK_THROWS_AS(parse_job(R"({"kind":"genus","genus":"ahat","dims":[2],"twists":[]})"),
                  SchemaError);
  // exp_twist requires its parameter; others must not carry one
  CHECK_THROWS_AS(parse_job(R"({"kind":"genus","genus":"exp_twist","dims":[2],"twists":["0"]})"),
                  SchemaError);
  CHECK_THROWS_AS(
      parse_job(R"({"kind":"genus","genus":"ahat","param":"1","dims":[2],"twists":["0"]})"),
      SchemaError);
  CHECK_THROWS_AS(parse_job(R"({"kind":"sweep","nmax":-1})"), SchemaError);
}

TEST_CASE("running a trace job") {
  const JobSpec job =
      parse_job(R"({"kind":"trace","cartan":[[2]],"noncompact_simple":[1],"weight":["3"]})");
  const Report report = run_job(job);
  CHECK(report.columns ==
        std::vector<std::string>{"mu", "dim_V", "formal_degree", "tau_G", "factor", "regular"});
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0] == std::vector<std::string>{"3", "1", "3", "-3", "-3", "true"});

  // The empty marking is the all-compact pair.
  const Report compact = run_job(
      parse_job(R"({"kind":"trace","cartan":[[2]],"noncompact_simple":[],"weight":["1"]})"));
  CHECK(compact.rows[0] == std::vector<std::string>{"1", "2", "2", "2", "1", "true"});

  // Domain errors surface from the pipeline, not the parser, naming the field.
  const JobSpec bad =
      parse_job(R"({"kind":"trace","cartan":[[2]],"noncompact_simple":[4],"weight":["3"]})");
  CHECK_THROWS_AS(run_job(bad), IndexOutOfRange);
  const JobSpec affine = parse_job(
      R"({"kind":"trace","cartan":[[2,-1,-1],[-1,2,-1],[-1,-1,2]],"noncompact_simple":[1],"weight":["1","1","1"]})");
  CHECK_THROWS_AS(run_job(affine), NotFiniteType);
  const JobSpec nondominant = parse_job(
      R"({"kind":"trace","cartan":[[2,-1],[-1,2]],"noncompact_simple":[2],"weight":["-1","0"]})");
  CHECK_THROWS_WITH(run_job(nondominant), Catch::Matchers::StartsWith("weight:"));
}

TEST_CASE("running a genus job") {
  const Report report =
      run_job(parse_job(R"({"kind":"genus","genus":"ahat","dims":[2],"twists":["1"]})"));
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0][3] == "0");

  const Report todd =
      run_job(parse_job(R"({"kind":"genus","genus":"todd","dims":[3],"twists":["0"]})"));
  CHECK(todd.rows[0][3] == "1");
}

TEST_CASE("sweep rows are sorted and all zero") {
  const Report report = run_job(parse_job(R"({"kind":"sweep","nmax":3})"));
  CHECK(report.columns == std::vector<std::string>{"n", "k", "value"});
  REQUIRE(report.rows.size() == 6);  // n=1: k=0; n=2: +-1; n=3: 0,+-2
  CHECK(report.rows[0] == std::vector<std::string>{"1", "0", "0"});
  CHECK(report.rows[1] == std::vector<std::string>{"2", "-1", "0"});
  CHECK(report.rows[2] == std::vector<std::string>{"2", "1", "0"});
  CHECK(report.rows[3] == std::vector<std::string>{"3", "-2", "0"});
  for (const auto& row : report.rows) CHECK(row[2] == "0");
}

TEST_CASE("CSV output") {
  SECTION("fixed trace header") {
    const Report report = run_job(
        parse_job(R"({"kind":"trace","cartan":[[2]],"noncompact_simple":[1],"weight":["3"]})"));
    std::ostringstream out;
    emit_csv(report, out);
    CHECK(out.str() == "mu,dim_V,formal_degree,tau_G,factor,regular\n3,1,3,-3,-3,true\n");
  }
  SECTION("empty sweep gives a header-only file") {
    const Report report = run_job(parse_job(R"({"kind":"sweep","nmax":0})"));
    std::ostringstream out;
    emit_csv(report, out);
    CHECK(out.str() == "n,k,value\n");
  }
  SECTION("byte-identical across runs") {
    const std::string doc = R"({"kind":"sweep","nmax":6})";
    std::ostringstream first, second;
    emit_csv(run_job(parse_job(doc)), first);
    emit_csv(run_job(parse_job(doc)), second);
    CHECK(first.str() == second.str());
    CHECK(!first.str().empty());
  }
  SECTION("fields with commas or quotes are quoted") {
    Report report;
    report.columns = {"a", "b"};
    report.rows.push_back({"1,2", "say \"hi\""});
    std::ostringstream out;
    emit_csv(report, out);
    CHECK(out.str() == "a,b\n\"1,2\",\"say \"\"hi\"\"\"\n");
  }
  SECTION("every emitted rational parses back") {
    const Report report = run_job(parse_job(R"({"kind":"sweep","nmax":8})"));
    for (const auto& row : report.rows)
      CHECK(format_rational(parse_rational(row[2])) == row[2]);
  }
}

TEST_CASE("verify jobs") {
  const Report report = run_job(parse_job(
      R"({"kind":"verify","cartan":[[2,-1],[-1,2]],"noncompact_simple":[2],"weight_max":5})"));
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0][3] == "36");  // 6 x 6 grid
  CHECK(report.rows[0][4] == "0");
  CHECK(report.rows[0][5] == "PASS");
  CHECK(report.suite_passed);

  SECTION("catalog mode covers every marking") {
    const Report catalog = run_verify_catalog(1, 4);
    CHECK(catalog.rows.size() == 2);  // rank 1: marks {} and {1}
    CHECK(catalog.suite_passed);
    for (const auto& row : catalog.rows) CHECK(row.back() == "PASS");
  }
}

TEST_CASE("series order cap guards sweeps and genus jobs") {
  REQUIRE(setenv("WEYLGENUS_SERIES_ORDER_CAP", "5", 1) == 0);
  CHECK_THROWS_AS(run_job(parse_job(R"({"kind":"sweep","nmax":10})")), OrderCapExceeded);
  CHECK_THROWS_AS(
      run_job(parse_job(R"({"kind":"genus","genus":"ahat","dims":[8],"twists":["0"]})")),
      OrderCapExceeded);
  CHECK_NOTHROW(run_job(parse_job(R"({"kind":"sweep","nmax":5})")));
  REQUIRE(setenv("WEYLGENUS_SERIES_ORDER_CAP", "junk", 1) == 0);
  CHECK_THROWS_AS(run_job(parse_job(R"({"kind":"sweep","nmax":2})")), Error);
  REQUIRE(unsetenv("WEYLGENUS_SERIES_ORDER_CAP") == 0);
  CHECK_NOTHROW(run_job(parse_job(R"({"kind":"sweep","nmax":10})")));
}

TEST_CASE("table rendering echoes inputs") {
  const Report report = run_job(
      parse_job(R"({"kind":"trace","cartan":[[2,-1],[-1,2]],"noncompact_simple":[2],"weight":["1","1"]})"));
  const std::string table = render_table(report);
  CHECK(table.find("# kind=trace") != std::string::npos);
  CHECK(table.find("# cartan=2 -1;-1 2") != std::string::npos);
  CHECK(table.find("5/8") != std::string::npos);
}
