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

#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "weylgenus/genera.hpp"
#include "weylgenus/trace.hpp"

namespace weylgenus {

/// Batch job driver. Job documents are JSON; all rationals travel as "p/q"
/// strings (integers without the "/1"), never as JSON numbers, so exactness
/// survives every toolchain. Outputs are deterministic: the same document
/// always produces byte-identical CSV.

enum class JobKind { trace, genus, sweep, verify };

enum class OutputMode { table, csv };

struct JobSpec {
  JobKind kind = JobKind::trace;
  std::vector<std::vector<int>> cartan;
  std::vector<int> noncompact_simple;
  std::vector<Rational> weight;
  std::string genus_name;  // "ahat" | "l" | "todd" | "exp_twist"
  Rational genus_param;    // exp_twist parameter
  std::vector<int> dims;
  std::vector<Rational> twists;
  int nmax = 0;        // sweep
  int weight_max = 0;  // verify
  OutputMode output = OutputMode::table;
  std::string csv_path;  // empty = none requested by the document
};

/// Structured result: echoed inputs plus all computed quantities, every
/// rational as an exact "p/q" string.
struct Report {
  JobKind kind = JobKind::trace;
  std::vector<std::string> inputs;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool suite_passed = true;  // only verify jobs can clear this
};

inline constexpr int kDefaultSeriesOrderCap = 128;

/// Resource guard for series orders, settable via WEYLGENUS_SERIES_ORDER_CAP.
inline int series_order_cap() {
  const char* raw = std::getenv("WEYLGENUS_SERIES_ORDER_CAP");
  if (raw == nullptr) return kDefaultSeriesOrderCap;
  const std::string text(raw);
  if (text.empty() || text.size() > 9 ||
      text.find_first_not_of("0123456789") != std::string::npos)
    throw Error("WEYLGENUS_SERIES_ORDER_CAP must be a nonnegative integer");
  return std::stoi(text);
}

namespace detail {

inline void require_series_order(int needed) {
  const int cap = series_order_cap();
  if (needed > cap)
    throw OrderCapExceeded("requested series order " + std::to_string(needed) +
                           " exceeds WEYLGENUS_SERIES_ORDER_CAP=" + std::to_string(cap));
}

inline const char* kind_name(JobKind kind) {
  switch (kind) {
    case JobKind::trace: return "trace";
    case JobKind::genus: return "genus";
    case JobKind::sweep: return "sweep";
    case JobKind::verify: return "verify";
  }
  return "?";
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

template <typename Range, typename Fn>
std::string join_map(const Range& range, const std::string& sep, Fn&& fn) {
  std::vector<std::string> parts;
  for (const auto& x : range) parts.push_back(fn(x));
  return join(parts, sep);
}

inline std::string format_cartan(const std::vector<std::vector<int>>& cartan) {
  return join_map(cartan, ";", [](const std::vector<int>& row) {
    return join_map(row, " ", [](int v) { return std::to_string(v); });
  });
}

inline std::string format_weight(const Weight& w) {
  return join_map(w.coords, " ", [](const Rational& c) { return format_rational(c); });
}

// --- strict JSON schema handling -------------------------------------------

using Json = nlohmann::json;

inline const Json& field(const Json& doc, const std::string& name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw SchemaError("missing field '" + name + "'");
  return *it;
}

inline int int_field(const Json& doc, const std::string& name) {
  const Json& v = field(doc, name);
  if (!v.is_number_integer()) throw SchemaError("field '" + name + "' must be an integer");
  return v.get<int>();
}

inline Rational rational_field_value(const Json& v, const std::string& name) {
  if (!v.is_string())
    throw SchemaError("field '" + name + "' must hold rationals as \"p/q\" strings");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    throw SchemaError("field '" + name + "': " + e.what());
  }
}

inline std::vector<int> int_list_field(const Json& doc, const std::string& name) {
  const Json& v = field(doc, name);
  if (!v.is_array()) throw SchemaError("field '" + name + "' must be an array");
  std::vector<int> out;
  for (const Json& x : v) {
    if (!x.is_number_integer()) throw SchemaError("field '" + name + "' must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

inline std::vector<Rational> rational_list_field(const Json& doc, const std::string& name) {
  const Json& v = field(doc, name);
  if (!v.is_array()) throw SchemaError("field '" + name + "' must be an array");
  std::vector<Rational> out;
  for (const Json& x : v) out.push_back(rational_field_value(x, name));
  return out;
}

inline std::vector<std::vector<int>> cartan_field(const Json& doc) {
  const Json& v = field(doc, "cartan");
  if (!v.is_array() || v.empty()) throw SchemaError("field 'cartan' must be a nonempty matrix");
  std::vector<std::vector<int>> out;
  for (const Json& row : v) {
    if (!row.is_array()) throw SchemaError("field 'cartan' must be a matrix");
    std::vector<int> r;
    for (const Json& x : row) {
      if (!x.is_number_integer()) throw SchemaError("field 'cartan' must hold integers");
      r.push_back(x.get<int>());
    }
    out.push_back(std::move(r));
  }
  for (const auto& row : out)
    if (row.size() != out.size()) throw SchemaError("field 'cartan' must be square");
  return out;
}

}  // namespace detail

/// Parses and validates a JSON job document. Exactly the fields a kind
/// requires (plus the optional output/csv_path) may be present; anything
/// else is a SchemaError. Malformed JSON is a ParseError.
inline JobSpec parse_job(const std::string& document) {
  detail::Json doc;
  try {
    doc = detail::Json::parse(document);
  } catch (const detail::Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("job document must be a JSON object");

  const detail::Json& kind_value = detail::field(doc, "kind");
  if (!kind_value.is_string()) throw SchemaError("field 'kind' must be a string");
  const std::string kind = kind_value.get<std::string>();

  JobSpec job;
  std::set<std::string> allowed{"kind", "output", "csv_path"};
  if (kind == "trace") {
    job.kind = JobKind::trace;
    allowed.insert({"cartan", "noncompact_simple", "weight"});
    job.cartan = detail::cartan_field(doc);
    job.noncompact_simple = detail::int_list_field(doc, "noncompact_simple");
    job.weight = detail::rational_list_field(doc, "weight");
    if (job.weight.size() != job.cartan.size())
      throw SchemaError("field 'weight' must have one coordinate per Cartan row");
  } else if (kind == "genus") {
    job.kind = JobKind::genus;
    allowed.insert({"genus", "dims", "twists"});
    const detail::Json& name = detail::field(doc, "genus");
    if (!name.is_string()) throw SchemaError("field 'genus' must be a string");
    job.genus_name = name.get<std::string>();
    if (job.genus_name != "ahat" && job.genus_name != "l" && job.genus_name != "todd" &&
        job.genus_name != "exp_twist")
      throw SchemaError("unknown genus '" + job.genus_name + "'");
    if (job.genus_name == "exp_twist") {
      allowed.insert("param");
      job.genus_param = detail::rational_field_value(detail::field(doc, "param"), "param");
    }
    job.dims = detail::int_list_field(doc, "dims");
    job.twists = detail::rational_list_field(doc, "twists");
    if (job.twists.size() != job.dims.size())
      throw SchemaError("fields 'dims' and 'twists' must have equal length");
  } else if (kind == "sweep") {
    job.kind = JobKind::sweep;
    allowed.insert("nmax");
    job.nmax = detail::int_field(doc, "nmax");
    if (job.nmax < 0) throw SchemaError("field 'nmax' must be >= 0");
  } else if (kind == "verify") {
    job.kind = JobKind::verify;
    allowed.insert({"cartan", "noncompact_simple", "weight_max"});
    job.cartan = detail::cartan_field(doc);
    job.noncompact_simple = detail::int_list_field(doc, "noncompact_simple");
    job.weight_max = detail::int_field(doc, "weight_max");
    if (job.weight_max < 0) throw SchemaError("field 'weight_max' must be >= 0");
  } else {
    throw SchemaError("unknown job kind '" + kind + "'");
  }

  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!allowed.contains(key))
      throw SchemaError("field '" + key + "' is not allowed for kind '" + kind + "'");
  }
  if (doc.contains("output")) {
    const detail::Json& v = doc["output"];
    if (!v.is_string() || (v != "table" && v != "csv"))
      throw SchemaError("field 'output' must be \"table\" or \"csv\"");
    job.output = v == "csv" ? OutputMode::csv : OutputMode::table;
  }
  if (doc.contains("csv_path")) {
    const detail::Json& v = doc["csv_path"];
    if (!v.is_string()) throw SchemaError("field 'csv_path' must be a string");
    job.csv_path = v.get<std::string>();
  }
  return job;
}

namespace detail {

struct PairCheckResult {
  long long checked = 0;
  long long failures = 0;
};

/// Exhaustive factorization / singular-vanishing / rescaling check of one
/// pair over all dominant integral weights with coordinates 0..weight_max.
inline PairCheckResult verify_pair(const CompactPair& pair, int weight_max) {
  const int r = pair.root_system().rank();
  const CompactPair rescaled =
      make_compact_pair(pair.root_system().with_form_scaled(7), pair.noncompact_simple());
  PairCheckResult result;
  std::vector<int> coords(r, 0);
  while (true) {
    Weight mu;
    mu.coords.assign(coords.begin(), coords.end());
    ++result.checked;
    try {
      const TraceReport report = check_factorization(pair, mu);
      // Independent singular scan: tau_G must vanish with a zero pairing.
      bool singular = false;
      const Weight shifted = mu + pair.rho_c();
      for (const Root& a : pair.root_system().positive_roots())
        if (pair.root_system().inner_product(shifted, a) == 0) singular = true;
      if (singular && report.tau_g != 0) ++result.failures;
      if (!singular && report.tau_g == 0) ++result.failures;
      if (weyl_dim(rescaled, mu) != report.dim_v ||
          formal_degree(rescaled, mu) != report.formal_degree ||
          trace_factor(rescaled, mu) != report.factor)
        ++result.failures;
    } catch (const Error&) {
      ++result.failures;
    }
    int i = 0;
    while (i < r && coords[i] == weight_max) coords[i++] = 0;
    if (i == r) break;
    ++coords[i];
  }
  return result;
}

inline GenusSpec genus_by_name(const std::string& name, const Rational& param) {
  if (name == "ahat") return GenusSpec::ahat_half();
  if (name == "l") return GenusSpec::l_genus();
  if (name == "todd") return GenusSpec::todd();
  if (name == "exp_twist") return GenusSpec::exp_twist(param);
  throw SchemaError("unknown genus '" + name + "'");
}

}  // namespace detail

/// Runs a validated job. Domain errors propagate with the failing field
/// named in the message. Deterministic: row order is fixed by the inputs.
inline Report run_job(const JobSpec& job) {
  Report report;
  report.kind = job.kind;
  report.inputs.push_back(std::string("kind=") + detail::kind_name(job.kind));

  switch (job.kind) {
    case JobKind::trace: {
      report.inputs.push_back("cartan=" + detail::format_cartan(job.cartan));
      report.inputs.push_back(
          "noncompact_simple=" +
          detail::join_map(job.noncompact_simple, " ", [](int i) { return std::to_string(i); }));
      Weight mu{job.weight};
      report.inputs.push_back("weight=" + detail::format_weight(mu));
      const CompactPair pair =
          make_compact_pair(build_root_system(CartanMatrix(job.cartan)), job.noncompact_simple);
      const TraceReport trace = [&] {
        try {
          return check_factorization(pair, mu);
        } catch (const NotDominant& e) {
          throw NotDominant(std::string("weight: ") + e.what());
        } catch (const NotIntegral& e) {
          throw NotIntegral(std::string("weight: ") + e.what());
        }
      }();
      report.columns = {"mu", "dim_V", "formal_degree", "tau_G", "factor", "regular"};
      report.rows.push_back({detail::format_weight(trace.mu), trace.dim_v.str(),
                             format_rational(trace.formal_degree), format_rational(trace.tau_g),
                             format_rational(trace.factor), trace.regular ? "true" : "false"});
      break;
    }
    case JobKind::genus: {
      report.inputs.push_back("genus=" + job.genus_name);
      report.inputs.push_back(
          "dims=" + detail::join_map(job.dims, " ", [](int n) { return std::to_string(n); }));
      report.inputs.push_back("twists=" + detail::join_map(job.twists, " ", [](const Rational& t) {
                                return format_rational(t);
                              }));
      int needed = 0;
      for (const int n : job.dims) needed = std::max(needed, n);
      detail::require_series_order(needed);
      const GenusSpec spec = detail::genus_by_name(job.genus_name, job.genus_param);
      const Rational value = product_genus(spec, job.dims, job.twists);
      report.columns = {"genus", "dims", "twists", "value"};
      report.rows.push_back(
          {job.genus_name,
           detail::join_map(job.dims, " ", [](int n) { return std::to_string(n); }),
           detail::join_map(job.twists, " ", [](const Rational& t) { return format_rational(t); }),
           format_rational(value)});
      break;
    }
    case JobKind::sweep: {
      report.inputs.push_back("nmax=" + std::to_string(job.nmax));
      detail::require_series_order(job.nmax);
      report.columns = {"n", "k", "value"};
      for (int n = 1; n <= job.nmax; ++n) {
        for (long long k = -n; k <= n; ++k) {
          if ((k - (n + 1)) % 2 != 0) continue;
          report.rows.push_back({std::to_string(n), std::to_string(k),
                                 format_rational(twisted_ahat_cpn(n, k))});
        }
      }
      break;
    }
    case JobKind::verify: {
      report.inputs.push_back("cartan=" + detail::format_cartan(job.cartan));
      report.inputs.push_back(
          "noncompact_simple=" +
          detail::join_map(job.noncompact_simple, " ", [](int i) { return std::to_string(i); }));
      report.inputs.push_back("weight_max=" + std::to_string(job.weight_max));
      const CompactPair pair =
          make_compact_pair(build_root_system(CartanMatrix(job.cartan)), job.noncompact_simple);
      const detail::PairCheckResult result = detail::verify_pair(pair, job.weight_max);
      report.columns = {"cartan", "noncompact_simple", "weight_max", "checked", "failures",
                        "status"};
      report.rows.push_back(
          {detail::format_cartan(job.cartan),
           detail::join_map(job.noncompact_simple, " ", [](int i) { return std::to_string(i); }),
           std::to_string(job.weight_max), std::to_string(result.checked),
           std::to_string(result.failures), result.failures == 0 ? "PASS" : "FAIL"});
      if (result.failures != 0) report.suite_passed = false;
      break;
    }
  }
  return report;
}

/// The factorization property suite over a built-in catalog of pairs: every
/// Cartan matrix of rank <= rank_max from the standard small families, with
/// every subset of simple roots marked noncompact.
inline Report run_verify_catalog(int rank_max, int weight_max) {
  if (rank_max < 1) throw Error("rank_max must be >= 1");
  if (weight_max < 0) throw Error("weight_max must be >= 0");

  std::vector<std::vector<std::vector<int>>> catalog = {{{2}}};
  if (rank_max >= 2) {
    catalog.push_back({{2, -1}, {-1, 2}});          // A2
    catalog.push_back({{2, -2}, {-1, 2}});          // C2
    catalog.push_back({{2, -1}, {-3, 2}});          // G2
    catalog.push_back({{2, 0}, {0, 2}});            // A1 x A1
  }
  if (rank_max >= 3) {
    catalog.push_back({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});   // A3
    catalog.push_back({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});   // B3
    catalog.push_back({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});   // C3
    catalog.push_back({{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}});     // A2 x A1
  }

  Report report;
  report.kind = JobKind::verify;
  report.inputs.push_back("kind=verify");
  report.inputs.push_back("rank_max=" + std::to_string(rank_max));
  report.inputs.push_back("weight_max=" + std::to_string(weight_max));
  report.columns = {"cartan", "noncompact_simple", "weight_max", "checked", "failures", "status"};
  for (const auto& cartan : catalog) {
    const RootSystem rs = build_root_system(CartanMatrix(cartan));
    const int r = rs.rank();
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      std::vector<int> marks;
      for (int i = 0; i < r; ++i)
        if (mask & (1u << i)) marks.push_back(i + 1);
      const CompactPair pair = make_compact_pair(rs, marks);
      const detail::PairCheckResult result = detail::verify_pair(pair, weight_max);
      report.rows.push_back(
          {detail::format_cartan(cartan),
           detail::join_map(marks, " ", [](int i) { return std::to_string(i); }),
           std::to_string(weight_max), std::to_string(result.checked),
           std::to_string(result.failures), result.failures == 0 ? "PASS" : "FAIL"});
      if (result.failures != 0) report.suite_passed = false;
    }
  }
  return report;
}

namespace detail {

inline std::string csv_quote(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (const char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace detail

/// RFC-4180-style CSV with a fixed header per job kind and LF line endings.
inline void emit_csv(const Report& report, std::ostream& out) {
  out << detail::join_map(report.columns, ",", detail::csv_quote) << "\n";
  for (const auto& row : report.rows)
    out << detail::join_map(row, ",", detail::csv_quote) << "\n";
  if (!out) throw IoError("failed while writing CSV stream");
}

inline void emit_csv(const Report& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  emit_csv(report, out);
  out.flush();
  if (!out) throw IoError("failed while writing '" + path + "'");
}

/// Human-readable table: echoed inputs as '#' comment lines, then aligned
/// columns.
inline std::string render_table(const Report& report) {
  std::string out;
  for (const auto& line : report.inputs) out += "# " + line + "\n";
  std::vector<std::size_t> widths(report.columns.size(), 0);
  for (std::size_t j = 0; j < report.columns.size(); ++j)
    widths[j] = report.columns[j].size();
  for (const auto& row : report.rows)
    for (std::size_t j = 0; j < row.size(); ++j) widths[j] = std::max(widths[j], row[j].size());
  const auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      out += row[j];
      if (j + 1 < row.size()) out += std::string(widths[j] - row[j].size() + 2, ' ');
    }
    out += "\n";
  };
  emit_row(report.columns);
  for (const auto& row : report.rows) emit_row(row);
  return out;
}

}  // namespace weylgenus
