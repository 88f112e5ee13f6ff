#include "pdcouple/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "pdcouple/errors.hpp"

namespace pdcouple {

namespace {

using nlohmann::json;

constexpr const char* kConfigColumns = "method,delta,m,ratio,epsilon,degree,bc,profile_c,case";

void write_config_columns(std::ostream& os, const CaseConfig& c) {
  os << to_string(c.method) << ',' << format_double(c.grid.delta) << ',' << c.grid.m << ','
     << format_double(c.grid.ratio) << ',' << format_double(c.grid.epsilon) << ',' << c.degree << ','
     << to_string(c.effective_bc()) << ',';
  if (c.profile_c) os << format_double(*c.profile_c);
  os << ',' << c.case_name;
}

std::string_view grid_name(GridKind g) { return g == GridKind::kLocal ? "local" : "nonlocal"; }

GridKind parse_grid(std::string_view s) {
  if (s == "local") return GridKind::kLocal;
  if (s == "nonlocal") return GridKind::kNonlocal;
  throw ConfigurationError("unknown grid tag '" + std::string(s) + "'");
}

json number_or_tag(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return nullptr;
  return v > 0 ? "inf" : "-inf";
}

double from_number_or_tag(const json& j) {
  if (j.is_null()) return std::nan("");
  if (j.is_string()) return j.get<std::string>() == "inf" ? INFINITY : -INFINITY;
  return j.get<double>();
}

json config_json(const CaseConfig& c) {
  json j;
  j["method"] = to_string(c.method);
  j["geometry"] = {{"length", c.geometry.length}, {"a", c.geometry.a}, {"b", c.geometry.b}};
  j["delta"] = c.grid.delta;
  j["m"] = c.grid.m;
  j["ratio"] = c.grid.ratio;
  j["epsilon"] = c.grid.epsilon;
  j["tol_div"] = c.grid.tol_div;
  j["degree"] = c.degree;
  j["bc"] = c.bc ? json(to_string(*c.bc)) : json(nullptr);
  j["profile_c"] = c.profile_c ? json(*c.profile_c) : json(nullptr);
  j["case"] = c.case_name;
  j["reference"] = to_string(c.reference);
  j["kappa_rule"] = to_string(c.kappa_rule);
  j["compute_condition"] = c.compute_condition;
  return j;
}

CaseConfig config_from_json(const json& j) {
  CaseConfig c;
  c.method = parse_method(j.at("method").get<std::string>());
  c.geometry.length = j.at("geometry").at("length").get<double>();
  c.geometry.a = j.at("geometry").at("a").get<double>();
  c.geometry.b = j.at("geometry").at("b").get<double>();
  c.grid.delta = j.at("delta").get<double>();
  c.grid.m = j.at("m").get<int>();
  c.grid.ratio = j.at("ratio").get<double>();
  c.grid.epsilon = j.at("epsilon").get<double>();
  c.grid.tol_div = j.at("tol_div").get<double>();
  c.degree = j.at("degree").get<int>();
  if (!j.at("bc").is_null()) c.bc = parse_bc(j.at("bc").get<std::string>());
  if (!j.at("profile_c").is_null()) c.profile_c = j.at("profile_c").get<double>();
  c.case_name = j.at("case").get<std::string>();
  c.reference = parse_reference(j.at("reference").get<std::string>());
  c.kappa_rule = parse_kappa_rule(j.at("kappa_rule").get<std::string>());
  c.compute_condition = j.at("compute_condition").get<bool>();
  return c;
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw ConfigurationError("unknown format '" + std::string(text) + "'");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_records_csv(std::ostream& os, std::span<const CaseReport> reports) {
  os << kConfigColumns << ",grid,index,x,u,ref,abs_err\n";
  for (const CaseReport& r : reports) {
    for (const NodeRecord& n : r.records) {
      write_config_columns(os, r.config);
      os << ',' << grid_name(n.grid) << ',' << n.index << ',' << format_double(n.x) << ','
         << format_double(n.u) << ',' << format_double(n.ref) << ',' << format_double(n.abs_err) << '\n';
    }
  }
}

void write_summary_csv(std::ostream& os, std::span<const CaseReport> reports) {
  os << kConfigColumns << ",N,max_abs_err,cond,residual\n";
  for (const CaseReport& r : reports) {
    write_config_columns(os, r.config);
    os << ',' << r.summary.N << ',' << format_double(r.summary.max_abs_err) << ',';
    if (!std::isnan(r.summary.cond)) os << format_double(r.summary.cond);
    os << ',' << format_double(r.summary.residual) << '\n';
  }
}

std::string to_json(std::span<const CaseReport> reports) {
  json out = json::array();
  for (const CaseReport& r : reports) {
    json jr;
    jr["config"] = config_json(r.config);
    json recs = json::array();
    for (const NodeRecord& n : r.records)
      recs.push_back({{"grid", grid_name(n.grid)},
                      {"index", n.index},
                      {"x", n.x},
                      {"u", n.u},
                      {"ref", n.ref},
                      {"abs_err", n.abs_err}});
    jr["records"] = std::move(recs);
    jr["summary"] = {{"N", r.summary.N},
                     {"max_abs_err", r.summary.max_abs_err},
                     {"cond", number_or_tag(r.summary.cond)},
                     {"residual", r.summary.residual}};
    out.push_back(std::move(jr));
  }
  return out.dump(2) + "\n";
}

std::vector<CaseReport> reports_from_json(std::string_view text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigurationError(std::string("invalid report JSON: ") + e.what());
  }
  std::vector<CaseReport> out;
  try {
    for (const json& jr : in) {
      CaseReport r;
      r.config = config_from_json(jr.at("config"));
      for (const json& n : jr.at("records")) {
        NodeRecord rec;
        rec.grid = parse_grid(n.at("grid").get<std::string>());
        rec.index = n.at("index").get<int>();
        rec.x = n.at("x").get<double>();
        rec.u = n.at("u").get<double>();
        rec.ref = n.at("ref").get<double>();
        rec.abs_err = n.at("abs_err").get<double>();
        r.records.push_back(rec);
      }
      const json& s = jr.at("summary");
      r.summary.N = s.at("N").get<int>();
      r.summary.max_abs_err = s.at("max_abs_err").get<double>();
      r.summary.cond = from_number_or_tag(s.at("cond"));
      r.summary.residual = s.at("residual").get<double>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ConfigurationError(std::string("malformed report JSON: ") + e.what());
  }
  return out;
}

std::filesystem::path summary_path(const std::filesystem::path& records_path) {
  std::filesystem::path p = records_path;
  p.replace_filename(records_path.stem().string() + ".summary.csv");
  return p;
}

void emit(std::span<const CaseReport> reports, OutputFormat format, const std::filesystem::path& path) {
  auto open = [](const std::filesystem::path& p) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + p.string() + "' for writing");
    return f;
  };
  if (format == OutputFormat::kJson) {
    std::ofstream f = open(path);
    f << to_json(reports);
    if (!f) throw std::runtime_error("write failed: " + path.string());
    return;
  }
  std::ofstream rec = open(path);
  write_records_csv(rec, reports);
  std::ofstream sum = open(summary_path(path));
  write_summary_csv(sum, reports);
  if (!rec || !sum) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace pdcouple
