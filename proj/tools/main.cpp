#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlim/bps.hpp"
#include "qlim/catalog.hpp"
#include "qlim/checks.hpp"
#include "qlim/closedform.hpp"
#include "qlim/errors.hpp"
#include "qlim/lattice.hpp"
#include "qlim/series.hpp"

namespace {

using nlohmann::json;
using namespace qlim;

enum class Format { text, json_fmt, csv };

struct Output {
  Format format = Format::text;
  std::string path;

  void emit(const std::string& body) const {
    if (path.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw BadInput("cannot open output file: " + path);
    f << body;
  }
};

json laurent_to_json(const LaurentPoly& p) {
  json j = json::array();
  for (const auto& [e, c] : p.terms()) j.push_back({e, to_fraction_string(c)});
  return j;
}

QuiverSpec load_spec(const std::string& file, const std::string& catalog_name) {
  if (file.empty() == catalog_name.empty())
    throw BadInput("provide exactly one of a spec file or --catalog");
  if (!catalog_name.empty()) return get_entry(catalog_name).spec;
  std::ifstream f(file);
  if (!f) throw BadInput("cannot read spec file: " + file);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw BadInput(std::string("spec file is not valid JSON: ") + e.what());
  }
  return QuiverSpec::from_json(j);
}

std::string index_key(const MultiIndex& idx) {
  std::string s;
  for (size_t i = 0; i < idx.size(); ++i) s += (i ? " " : "") + std::to_string(idx[i]);
  return s;
}

std::string render_series(const MultiSeries<BigRational>& y, Format format) {
  switch (format) {
    case Format::json_fmt:
      return series_to_json(y).dump(2) + "\n";
    case Format::csv: {
      std::string out = "index,value\n";
      for (const auto& [idx, c] : y.terms())
        out += "\"" + index_key(idx) + "\"," + to_fraction_string(c) + "\n";
      return out;
    }
    case Format::text: {
      std::string out = "# truncation bound " + std::to_string(y.region().bound()) + "\n";
      for (const auto& [idx, c] : y.terms())
        out += "[" + index_key(idx) + "] " + to_fraction_string(c) + "\n";
      return out;
    }
  }
  return {};
}

std::string render_bps(const BpsTable& table, Format format) {
  switch (format) {
    case Format::json_fmt:
      return bps_to_json(table).dump(2) + "\n";
    case Format::csv: {
      std::string out = "r,a,N,integral\n";
      for (const auto& e : table)
        out += std::to_string(e.r) + "," + to_fraction_string(e.a) + "," +
               to_fraction_string(e.n) + "," + (e.integral ? "true" : "false") + "\n";
      return out;
    }
    case Format::text: {
      std::string out = "r\ta\tN\tintegral\n";
      for (const auto& e : table)
        out += std::to_string(e.r) + "\t" + to_fraction_string(e.a) + "\t" +
               to_fraction_string(e.n) + "\t" + (e.integral ? "yes" : "no") + "\n";
      return out;
    }
  }
  return {};
}

std::string render_checks(const std::vector<CheckResult>& results, Format format) {
  switch (format) {
    case Format::json_fmt: {
      json checks = json::array();
      bool all = true;
      for (const auto& r : results) {
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        all = all && r.passed;
      }
      return json{{"checks", checks}, {"passed", all}}.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out = "name,passed,detail\n";
      for (const auto& r : results)
        out += "\"" + r.name + "\"," + (r.passed ? "true" : "false") + ",\"" + r.detail +
               "\"\n";
      return out;
    }
    case Format::text: {
      std::string out;
      for (const auto& r : results)
        out += std::string(r.passed ? "[PASS] " : "[FAIL] ") + r.name + " - " + r.detail +
               "\n";
      return out;
    }
  }
  return {};
}

MultiSeries<BigRational> closed_form_series(const QuiverSpec& spec, long bound,
                                            std::optional<long> cap) {
  TruncRegion region(spec.levels, bound, cap);
  MultiSeries<BigRational> y(region);
  for (const MultiIndex& idx : region.indices_lex()) y.set_coeff(idx, coeff_b(spec, idx));
  return y;
}

int run_limit(const QuiverSpec& spec, long bound, std::optional<long> cap,
              const std::string& method, const Output& out) {
  std::optional<MultiSeries<BigRational>> y;
  if (method == "oracle" || method == "both") y = classical_limit_oracle(spec, bound, cap);
  if (method == "closed" || method == "both") {
    MultiSeries<BigRational> c = closed_form_series(spec, bound, cap);
    if (y && !(c == *y)) {
      for (const MultiIndex& idx : TruncRegion(spec.levels, bound, cap).indices_lex())
        if (c.coeff(idx) != y->coeff(idx)) {
          std::cerr << "methods disagree at index [" << index_key(idx) << "]: closed "
                    << to_fraction_string(c.coeff(idx)) << ", oracle "
                    << to_fraction_string(y->coeff(idx)) << "\n";
          return 3;
        }
    }
    y = std::move(c);
  }
  out.emit(render_series(*y, out.format));
  return 0;
}

int run_bps(const QuiverSpec& spec, long order, std::optional<long> cap, const Output& out) {
  out.emit(render_bps(bps_numbers(log_derivative_series(spec, order, cap)), out.format));
  return 0;
}

int run_lattice(long a, long b, long n, bool weighted, const Output& out) {
  if (weighted) {
    const LaurentPoly w = weighted_count({a, b, n});
    switch (out.format) {
      case Format::json_fmt:
        out.emit(json{{"weighted", laurent_to_json(w)}}.dump(2) + "\n");
        break;
      case Format::csv: {
        std::string body = "exponent,value\n";
        for (const auto& [e, c] : w.terms())
          body += std::to_string(e) + "," + to_fraction_string(c) + "\n";
        out.emit(body);
        break;
      }
      case Format::text:
        out.emit(w.str() + "\n");
        break;
    }
  } else {
    const BigInt c = count_paths({a, b, n});
    switch (out.format) {
      case Format::json_fmt:
        out.emit(json{{"count", c.get_str()}}.dump(2) + "\n");
        break;
      case Format::csv:
        out.emit("count\n" + c.get_str() + "\n");
        break;
      case Format::text:
        out.emit(c.get_str() + "\n");
        break;
    }
  }
  return 0;
}

int run_verify(const std::string& case_name, bool all, const Output& out) {
  if (case_name.empty() == !all)
    throw BadInput("provide exactly one of --case or --all");
  std::vector<CheckResult> results;
  if (all)
    results = run_all_checks();
  else
    results.push_back(check_catalog_entry(case_name));
  out.emit(render_checks(results, out.format));
  for (const auto& r : results)
    if (!r.passed) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classical limits of symmetric-quiver series, extremal invariants, "
               "and lattice-path counts"};
  app.require_subcommand(1);
  app.fallthrough();  // let --format/--output appear after the subcommand too

  Output out;
  std::map<std::string, Format> format_names{
      {"text", Format::text}, {"json", Format::json_fmt}, {"csv", Format::csv}};
  app.add_option("--format", out.format, "output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
  app.add_option("--output", out.path, "write output to a file instead of stdout");

  std::string spec_file, catalog_name, method = "oracle", case_name;
  long max_degree = 0, max_order = 0, lat_a = 0, lat_b = 0, lat_n = 0;
  std::optional<long> vertex_cap;
  long cap_value = -1;
  bool weighted = false, verify_all = false;

  CLI::App* limit = app.add_subcommand("limit", "classical-limit series coefficients");
  limit->add_option("spec", spec_file, "quiver spec JSON file");
  limit->add_option("--catalog", catalog_name, "use a catalog entry instead of a file");
  limit->add_option("--max-degree", max_degree, "weighted-degree truncation")->required();
  limit->add_option("--method", method, "closed | oracle | both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));
  limit->add_option("--vertex-cap", cap_value, "index cap for zero-level vertices");

  CLI::App* bps = app.add_subcommand("bps", "log-derivative coefficients and invariants");
  bps->add_option("spec", spec_file, "quiver spec JSON file");
  bps->add_option("--catalog", catalog_name, "use a catalog entry instead of a file");
  bps->add_option("--max-order", max_order, "highest degree r to report")->required();
  bps->add_option("--vertex-cap", cap_value, "index cap for zero-level vertices");

  CLI::App* lattice = app.add_subcommand("lattice", "paths under y = a x + b");
  lattice->add_option("--a", lat_a, "slope")->required();
  lattice->add_option("--b", lat_b, "offset")->required();
  lattice->add_option("--n", lat_n, "number of steps")->required();
  lattice->add_flag("--weighted", weighted, "area-weighted polynomial instead of the count");

  CLI::App* verify = app.add_subcommand("verify", "re-run the built-in verification suite");
  verify->add_option("--case", case_name, "one catalog entry");
  verify->add_flag("--all", verify_all, "every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (limit->parsed() || bps->parsed()) {
      if (cap_value >= 0) vertex_cap = cap_value;
      const QuiverSpec spec = load_spec(spec_file, catalog_name);
      if (limit->parsed()) return run_limit(spec, max_degree, vertex_cap, method, out);
      return run_bps(spec, max_order, vertex_cap, out);
    }
    if (lattice->parsed()) return run_lattice(lat_a, lat_b, lat_n, weighted, out);
    return run_verify(case_name, verify_all, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
