// pdcouple: experiment driver for the 1D local/nonlocal coupling solvers.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdcouple/errors.hpp"
#include "pdcouple/fraction.hpp"
#include "pdcouple/harness.hpp"
#include "pdcouple/report_io.hpp"
#include "pdcouple/verification.hpp"

namespace {

using namespace pdcouple;
using Settings = std::map<std::string, std::string>;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> number_list(const std::string& s) {
  std::vector<double> out;
  for (const std::string& item : split_list(s)) out.push_back(parse_number(item));
  return out;
}

// key = value lines; '#' starts a comment. Keys are the long flag names.
Settings read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot read config file '" + path + "'");
  Settings s;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigurationError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    s[key] = trim(line.substr(eq + 1));
  }
  return s;
}

struct Options {
  std::string config_file;
  Settings flags;
  std::string out;
  std::string format;
};

const char* const kKeys[] = {"method", "delta",      "m",     "ratio",  "epsilon", "degree", "bc",
                             "profile-c", "case",    "reference", "kappa-rule", "length", "a", "b",
                             "axis",   "values",     "methods", "c-values", "labels", "cases"};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config_file, "key = value file mirroring the flags");
  sub->add_option("--out", o.out, "output path (stdout when omitted)");
  sub->add_option("--format", o.format, "csv | json (table for table-style commands)");
  for (const char* key : kKeys) {
    // Values stay strings so fractions can be parsed exactly.
    sub->add_option_function<std::string>(std::string("--") + key,
                                          [&o, key](const std::string& v) { o.flags[key] = v; });
  }
  sub->add_flag_function("--cond", [&o](std::int64_t) { o.flags["cond"] = "true"; },
                         "also compute the 2-norm condition number");
}

Settings merged(const Options& o) {
  Settings s;
  if (!o.config_file.empty()) s = read_config_file(o.config_file);
  for (const auto& [k, v] : o.flags) s[k] = v;
  if (!o.out.empty()) s["out"] = o.out;
  if (!o.format.empty()) s["format"] = o.format;
  return s;
}

std::string get(const Settings& s, const std::string& key, const std::string& fallback = "") {
  const auto it = s.find(key);
  return it == s.end() ? fallback : it->second;
}

CaseConfig make_config(const Settings& s) {
  static const std::vector<std::string> known = [] {
    std::vector<std::string> k(std::begin(kKeys), std::end(kKeys));
    k.insert(k.end(), {"cond", "out", "format"});
    return k;
  }();
  for (const auto& [k, v] : s)
    if (std::find(known.begin(), known.end(), k) == known.end())
      throw ConfigurationError("unknown setting '" + k + "'");

  CaseConfig c;
  c.method = parse_method(get(s, "method", "mdcm"));
  c.grid.delta = parse_number(get(s, "delta", "1/8"));
  c.grid.m = parse_int(get(s, "m", "2"));
  c.grid.ratio = parse_number(get(s, "ratio", "2"));
  c.grid.epsilon = parse_number(get(s, "epsilon", "0"));
  c.degree = parse_int(get(s, "degree", "3"));
  c.case_name = get(s, "case", "quartic");
  if (const std::string bc = get(s, "bc"); !bc.empty()) c.bc = parse_bc(bc);
  if (const std::string pc = get(s, "profile-c"); !pc.empty() && pc != "none") c.profile_c = parse_number(pc);
  c.reference = parse_reference(get(s, "reference", "exact"));
  c.kappa_rule = parse_kappa_rule(get(s, "kappa-rule", "bond-average"));
  c.geometry.length = parse_number(get(s, "length", "3"));
  c.geometry.a = parse_number(get(s, "a", "1"));
  c.geometry.b = parse_number(get(s, "b", "2"));
  const std::string cond = get(s, "cond", "false");
  c.compute_condition = cond == "true" || cond == "1" || cond == "yes";
  // Validates the case name early.
  (void)manufactured_case(c.case_name, c.geometry.length);
  return c;
}

std::string output_format(const Settings& s, bool allow_table) {
  const std::string f = get(s, "format", "csv");
  if (f == "table") {
    if (!allow_table) throw ConfigurationError("format 'table' is not available for this command");
    return f;
  }
  (void)parse_format(f);
  return f;
}

// Records for `solve`, summaries otherwise, when writing to stdout.
void write_reports(const std::vector<CaseReport>& reports, const Settings& s, bool records_to_stdout) {
  const std::string fmt = output_format(s, false);
  const std::string out = get(s, "out");
  if (!out.empty()) {
    emit(reports, parse_format(fmt), out);
    return;
  }
  if (fmt == "json")
    std::cout << to_json(reports);
  else if (records_to_stdout)
    write_records_csv(std::cout, reports);
  else
    write_summary_csv(std::cout, reports);
}

int cmd_solve(const Settings& s) {
  const CaseConfig c = make_config(s);
  const std::vector<CaseReport> reports{run_case(c)};
  write_reports(reports, s, true);
  return kExitOk;
}

int report_failures(const SweepResult& r) {
  bool numerical = false;
  for (const SweepFailure& f : r.failures) {
    std::fprintf(stderr, "pdcouple: %s=%s failed: %s\n", std::string(to_string(r.axis)).c_str(),
                 format_double(f.value).c_str(), f.message.c_str());
    numerical = numerical || f.numerical;
  }
  if (!r.reports.empty() || r.failures.empty()) return kExitOk;
  return numerical ? kExitNumerical : kExitConfig;
}

int cmd_sweep(const Settings& s) {
  const CaseConfig base = make_config(s);
  const SweepAxis axis = parse_sweep_axis(get(s, "axis", "delta"));
  const std::vector<double> values = number_list(get(s, "values"));
  if (values.empty()) throw ConfigurationError("sweep needs --values");
  const SweepResult r = run_sweep(base, axis, values);
  for (std::size_t i = 0; i < r.reduction_factors.size(); ++i)
    std::fprintf(stderr, "reduction %s=%s -> %s: %.6g\n", std::string(to_string(axis)).c_str(),
                 format_double(r.values[i]).c_str(), format_double(r.values[i + 1]).c_str(),
                 r.reduction_factors[i]);
  write_reports(r.reports, s, false);
  return report_failures(r);
}

int cmd_condition(const Settings& s) {
  Settings local = s;
  if (!local.count("ratio")) local["ratio"] = "5";
  if (!local.count("axis")) local["axis"] = "n";
  if (!local.count("values")) local["values"] = "4,5,6,7,8,9,10";
  local["cond"] = "true";
  const CaseConfig base = make_config(local);
  const SweepAxis axis = parse_sweep_axis(get(local, "axis"));
  const std::vector<double> values = number_list(get(local, "values"));
  std::vector<std::string> methods = split_list(get(local, "methods", "mdcm,mscm,vhcm"));

  std::vector<CaseReport> reports;
  int status = kExitOk;
  for (const std::string& name : methods) {
    CaseConfig c = base;
    c.method = parse_method(name);
    const SweepResult r = run_sweep(c, axis, values);
    reports.insert(reports.end(), r.reports.begin(), r.reports.end());
    if (const int st = report_failures(r); st != kExitOk) status = st;
  }
  if (get(local, "format") == "table") {
    std::printf("%-6s %6s %12s %6s %14s\n", "method", "degree", "delta", "N", "cond");
    for (const CaseReport& r : reports)
      std::printf("%-6s %6d %12.6g %6d %14.6e\n", std::string(to_string(r.config.method)).c_str(),
                  r.config.degree, r.config.grid.delta, r.summary.N, r.summary.cond);
  } else {
    write_reports(reports, local, false);
  }
  return status;
}

std::vector<double> labels_of(const Settings& s) {
  const std::string l = get(s, "labels");
  return l.empty() ? default_table_labels() : number_list(l);
}

int cmd_table1(const Settings& s) {
  const std::vector<TableEntry> t = run_table1(labels_of(s));
  if (output_format(s, true) == "table") {
    std::printf("%-8s %-8s %14s\n", "delta", "column", "max_abs_err");
    for (const TableEntry& e : t) {
      const Fraction label = parse_fraction(format_double(e.label));
      std::printf("%-8s %-8s %14.7e\n", label.str().c_str(), e.column.c_str(), e.report.summary.max_abs_err);
    }
    return kExitOk;
  }
  std::vector<CaseReport> reports;
  for (const TableEntry& e : t) reports.push_back(e.report);
  write_reports(reports, s, false);
  return kExitOk;
}

int cmd_table2(const Settings& s) {
  const std::string cv = get(s, "c-values");
  const std::vector<double> cs = cv.empty() ? std::vector<double>{0.9, 0.75, 0.5, 0.25, 0.1} : number_list(cv);
  std::vector<std::string> cases = split_list(get(s, "cases", "linear,quadratic,cubic,quartic"));
  const KappaRule rule = parse_kappa_rule(get(s, "kappa-rule", "bond-average"));
  const std::vector<TableEntry> t = run_table2(cs, labels_of(s), cases, rule);
  if (output_format(s, true) == "table") {
    std::printf("%-6s %-8s %-10s %14s\n", "c", "delta", "case", "max_abs_err");
    for (const TableEntry& e : t) {
      const Fraction label = parse_fraction(format_double(e.label));
      std::printf("%-6.3g %-8s %-10s %14.7e\n", e.c, label.str().c_str(), e.column.c_str(),
                  e.report.summary.max_abs_err);
    }
    return kExitOk;
  }
  std::vector<CaseReport> reports;
  for (const TableEntry& e : t) reports.push_back(e.report);
  write_reports(reports, s, false);
  return kExitOk;
}

int cmd_precision(const Settings& s) {
  const CaseConfig base = make_config(s);
  const std::vector<std::string> methods = split_list(get(s, "methods", "mdcm,mscm,vhcm"));
  const std::string deg = get(s, "values");
  const std::vector<double> degrees = deg.empty() ? std::vector<double>{1, 2, 3} : number_list(deg);
  const std::string fmt = output_format(s, true);

  std::ostringstream os;
  if (fmt == "json") os << "[\n";
  else if (fmt == "csv") os << "method,delta,m,ratio,epsilon,degree,degree_of_precision\n";
  else os << "method  degree  degree_of_precision\n";
  bool first = true;
  for (const std::string& name : methods) {
    for (double d : degrees) {
      CaseConfig c = with_axis_value(base, SweepAxis::kDegree, d);
      c.method = parse_method(name);
      const int dop = degree_of_precision(c);
      if (fmt == "json") {
        os << (first ? "" : ",\n") << "  {\"method\": \"" << name << "\", \"delta\": " << format_double(c.grid.delta)
           << ", \"m\": " << c.grid.m << ", \"ratio\": " << format_double(c.grid.ratio)
           << ", \"epsilon\": " << format_double(c.grid.epsilon) << ", \"degree\": " << c.degree
           << ", \"degree_of_precision\": " << dop << "}";
      } else if (fmt == "csv") {
        os << name << ',' << format_double(c.grid.delta) << ',' << c.grid.m << ',' << format_double(c.grid.ratio)
           << ',' << format_double(c.grid.epsilon) << ',' << c.degree << ',' << dop << '\n';
      } else {
        char line[80];
        std::snprintf(line, sizeof line, "%-7s %6d  %d\n", name.c_str(), c.degree, dop);
        os << line;
      }
      first = false;
    }
  }
  if (fmt == "json") os << "\n]\n";
  const std::string out = get(s, "out");
  if (out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(out);
    if (!f) throw ConfigurationError("cannot open '" + out + "' for writing");
    f << os.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coupled local/nonlocal 1D bar solver"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Settings&);
    Options options;
  };
  std::vector<Command> commands = {
      {"solve", "solve one configuration and write per-node records", cmd_solve, {}},
      {"sweep", "run one configuration per --values entry along --axis (delta|n|c|p)", cmd_sweep, {}},
      {"condition", "condition numbers per method along an axis (default: n = 4..10, ratio 5)", cmd_condition, {}},
      {"table1", "quartic-case error table for VHCM and MDCM with quadratic/cubic interpolation", cmd_table1, {}},
      {"table2", "MDCM errors for the softened-modulus profiles", cmd_table2, {}},
      {"precision", "degree-of-precision audit per method and interpolation degree", cmd_precision, {}},
  };
  std::vector<CLI::App*> subs;
  for (Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, c.options);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    for (std::size_t i = 0; i < commands.size(); ++i)
      if (subs[i]->parsed()) return commands[i].run(merged(commands[i].options));
  } catch (const ConfigurationError& e) {
    std::fprintf(stderr, "pdcouple: configuration error: %s\n", e.what());
    return kExitConfig;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "pdcouple: numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "pdcouple: %s\n", e.what());
    return kExitConfig;
  }
  return kExitConfig;
}
