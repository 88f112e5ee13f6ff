// Acceptance checks: one PASS/FAIL line per criterion, details for failed
// sub-checks indented below it. Exit status is the number of failures.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdcouple/harness.hpp"
#include "pdcouple/interpolation.hpp"
#include "pdcouple/verification.hpp"

using namespace pdcouple;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const char* fmt, ...) __attribute__((format(printf, 3, 4)));
};

void Check::expect(bool cond, const char* fmt, ...) {
  if (cond) return;
  ok = false;
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  notes.emplace_back(buf);
}

int failures = 0;

void report(int id, const char* name, const std::function<void(Check&)>& body) {
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.notes.push_back(std::string("exception: ") + e.what());
  }
  std::printf("%s criterion %d: %s\n", c.ok ? "PASS" : "FAIL", id, name);
  for (const std::string& n : c.notes) std::printf("    %s\n", n.c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

CaseConfig base(Method method, int degree, double delta, double ratio, const char* case_name) {
  CaseConfig c;
  c.method = method;
  c.degree = degree;
  c.grid.delta = delta;
  c.grid.m = 2;
  c.grid.ratio = ratio;
  c.case_name = case_name;
  return c;
}

double max_err(const CaseConfig& c) { return run_case(c).summary.max_abs_err; }

double max_err_between(const CaseReport& r, double lo, double hi) {
  double e = 0.0;
  for (const NodeRecord& n : r.records)
    if (n.x > lo && n.x < hi) e = std::max(e, n.abs_err);
  return e;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::kMdcm: return "mdcm";
    case Method::kMscm: return "mscm";
    case Method::kVhcm: return "vhcm";
    case Method::kFdm: return "fdm";
  }
  return "?";
}

// Published error tables. Rows: delta 1/8, 1/16, 1/32, 1/64.
const double kQuarticTable[4][3] = {  // vhcm, mdcm-i2, mdcm-i3
    {0.0000038, 0.0003796, 0.0000446},
    {0.0000070, 0.0000926, 0.0000123},
    {0.0000025, 0.0000229, 0.0000032},
    {0.0000007, 0.0000057, 0.0000008}};

struct ProfileTable {
  double c;
  double err[4][4];  // [delta][linear, quadratic, cubic, quartic]
};

const ProfileTable kProfileTables[] = {
    {0.9,
     {{0.0004743879, 0.0008048903, 0.0008550996, 0.0004092119},
      {0.0001200195, 0.0002108269, 0.0002270992, 0.0001320202},
      {0.0000304043, 0.0000541946, 0.0000587087, 0.0000366584},
      {0.0000076385, 0.0000137248, 0.0000149136, 0.0000096157}}},
    {0.5,
     {{0.0052547932, 0.0070306856, 0.0066316345, 0.0050171533},
      {0.0014670512, 0.0019497268, 0.0018311628, 0.0014068558},
      {0.0003805258, 0.0005065490, 0.0004761879, 0.0003686359},
      {0.0000962315, 0.0001284305, 0.0001209166, 0.0000940043}}},
    {0.1,
     {{0.0580608552, 0.0618444766, 0.0493397823, 0.0346054167},
      {0.0258549055, 0.0269246387, 0.0210321509, 0.0145342177},
      {0.0078532931, 0.0081374090, 0.0063260344, 0.0043565707},
      {0.0020744831, 0.0021474957, 0.0016679495, 0.0011481485}}},
};

const char* kDeltaNames[] = {"1/8", "1/16", "1/32", "1/64"};

void degree_of_precision_check(Check& c) {
  const struct {
    Method m;
    int p;
  } runs[] = {{Method::kMdcm, 3}, {Method::kMscm, 3}, {Method::kVhcm, 3}};
  for (const auto& r : runs) {
    for (const char* name : {"linear", "quadratic", "cubic"}) {
      const double e = max_err(base(r.m, r.p, 0.125, 2.0, name));
      c.expect(e <= 1e-9, "%s p=%d %s: max error %.3e > 1e-9", method_name(r.m), r.p, name, e);
    }
  }
}

void quadratic_order_check(Check& c) {
  const double e8 = max_err(base(Method::kMdcm, 2, 1.0 / 8, 2.0, "cubic"));
  const double e16 = max_err(base(Method::kMdcm, 2, 1.0 / 16, 2.0, "cubic"));
  c.expect(e8 > 1e-9, "error on the cubic case is %.3e, expected clearly nonzero", e8);
  const double f = e8 / e16;
  c.expect(f >= 3.0 && f <= 5.0, "reduction factor %.4f outside [3, 5] (%.4e -> %.4e)", f, e8, e16);
}

std::vector<TableEntry> quartic_table() { return run_table1(default_table_labels()); }

void quartic_table_check(Check& c) {
  const auto t = quartic_table();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double want = kQuarticTable[i / 3][i % 3];
    const double got = t[i].report.summary.max_abs_err;
    const double tol = std::max(1e-7, 0.05 * want);
    c.expect(std::abs(got - want) <= tol, "delta %s %s: %.7e vs %.7e", kDeltaNames[i / 3], t[i].column.c_str(), got,
             want);
  }
}

void interpolation_separation_check(Check& c) {
  const auto t = quartic_table();
  for (std::size_t row = 0; row < 4; ++row) {
    const double i2 = t[3 * row + 1].report.summary.max_abs_err;
    const double i3 = t[3 * row + 2].report.summary.max_abs_err;
    c.expect(i2 / i3 >= 5.0, "delta %s: I2/I3 error ratio %.3f < 5", kDeltaNames[row], i2 / i3);
  }
}

void misaligned_check(Check& c) {
  for (int n = 4; n <= 7; ++n) {
    const double delta = 2.0 / (5.0 * n);
    const double hd = delta / 2;
    CaseConfig aligned = base(Method::kMdcm, 3, delta, 5.0, "quartic");
    CaseConfig shifted = aligned;
    shifted.grid.epsilon = hd / 2;
    const CaseReport ra = run_case(aligned);
    const CaseReport rs = run_case(shifted);
    const double q = rs.summary.max_abs_err / ra.summary.max_abs_err;
    c.expect(q <= 3.0 && q >= 1.0 / 3.0, "n=%d: misaligned/aligned error ratio %.3f", n, q);

    CaseConfig dir = shifted;
    dir.case_name = "dirichlet_quartic";
    dir.bc = BoundaryCondition::kDirichletBoth;
    const CaseReport rd = run_case(dir);
    const double centre_dir = max_err_between(rd, 1.0, 2.0);
    const double centre_mixed = max_err_between(rs, 1.0, 2.0);
    c.expect(centre_dir > centre_mixed, "n=%d: Dirichlet central error %.3e not above mixed %.3e", n, centre_dir,
             centre_mixed);
  }
}

void profile_trend_check(Check& c) {
  const std::vector<std::string> cases{"linear", "quadratic", "cubic", "quartic"};
  std::vector<double> cs;
  for (const ProfileTable& p : kProfileTables) cs.push_back(p.c);
  const auto t = run_table2(cs, default_table_labels(), cases);
  // t is ordered by c, then delta, then case.
  auto err = [&](int ci, int di, int k) { return t[(ci * 4 + di) * 4 + k].report.summary.max_abs_err; };
  for (int ci = 0; ci < 3; ++ci) {
    for (int k = 0; k < 4; ++k) {
      for (int di = 1; di <= 2; ++di) {
        const double f = err(ci, di, k) / err(ci, di + 1, k);
        c.expect(f >= 3.0 && f <= 5.0, "c=%.1f %s: reduction %s -> %s is %.3f", kProfileTables[ci].c,
                 cases[k].c_str(), kDeltaNames[di], kDeltaNames[di + 1], f);
      }
      for (int di = 0; di < 4; ++di) {
        const double want = kProfileTables[ci].err[di][k];
        const double got = err(ci, di, k);
        c.expect(got <= 2 * want && got >= want / 2, "c=%.1f delta %s %s: %.4e vs %.4e (x%.2f)",
                 kProfileTables[ci].c, kDeltaNames[di], cases[k].c_str(), got, want, got / want);
      }
    }
  }
  for (int di = 0; di < 4; ++di)
    for (int k = 0; k < 4; ++k)
      c.expect(err(0, di, k) < err(1, di, k) && err(1, di, k) < err(2, di, k),
               "delta %s %s: errors not increasing as c decreases", kDeltaNames[di], cases[k].c_str());
}

void condition_check(Check& c) {
  const std::vector<double> ns{4, 5, 6, 7, 8, 9, 10};
  auto conds = [&](Method m, int degree) {
    CaseConfig cfg = base(m, degree, 0.1, 5.0, "quartic");
    cfg.compute_condition = true;
    const SweepResult r = run_sweep(cfg, SweepAxis::kN, ns);
    std::vector<double> out;
    for (const CaseReport& rep : r.reports) out.push_back(rep.summary.cond);
    if (out.size() != ns.size()) throw std::runtime_error("condition sweep failed");
    return out;
  };
  const auto mdcm = conds(Method::kMdcm, 2);
  const auto mscm = conds(Method::kMscm, 2);
  const auto vhcm = conds(Method::kVhcm, 2);
  const auto mdcm3 = conds(Method::kMdcm, 3);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double delta = 2.0 / (5.0 * ns[i]);
    if (delta <= 1.0 / 16) {
      c.expect(vhcm[i] <= mdcm[i] / 10, "n=%g: cond vhcm %.3e > cond mdcm / 10 = %.3e", ns[i], vhcm[i], mdcm[i] / 10);
      c.expect(vhcm[i] <= mscm[i] / 10, "n=%g: cond vhcm %.3e > cond mscm / 10 = %.3e", ns[i], vhcm[i], mscm[i] / 10);
    }
    if (i > 0) {
      c.expect(mdcm[i] > mdcm[i - 1], "mdcm cond not increasing at n=%g", ns[i]);
      c.expect(mscm[i] > mscm[i - 1], "mscm cond not increasing at n=%g", ns[i]);
      c.expect(vhcm[i] > vhcm[i - 1], "vhcm cond not increasing at n=%g", ns[i]);
    }
    const double q = std::max(mdcm[i], mdcm3[i]) / std::min(mdcm[i], mdcm3[i]);
    c.expect(q < 2.0, "n=%g: cond mdcm changes by x%.3f between p=2 and p=3", ns[i], q);
  }
}

void oracle_check(Check& c) {
  // Peridynamic rows against the quadrature oracle.
  for (const ElasticModulusProfile& E : {ElasticModulusProfile::constant(1.0), ElasticModulusProfile::spline(0.25)}) {
    for (int m : {2, 3, 4}) {
      const double h = 1.0 / 64;
      const double delta = m * h;
      std::vector<double> x(193);
      for (int i = 0; i <= 192; ++i) x[i] = i * h;
      double worst = 0.0;
      for (int k = m; k + m <= 192; ++k) {
        const StencilRow row = pd_row(x, k, m, h, E, KappaRule::kBondAverage, 0.0);
        const auto q = pd_row_by_quadrature(
            x, k, m, [&](double a, double b) { return 0.5 * (kappa(E(a), delta) + kappa(E(b), delta)); });
        double scale = 0.0;
        for (double v : q) scale = std::max(scale, std::abs(v));
        for (std::size_t i = 0; i < q.size(); ++i) worst = std::max(worst, std::abs(row.coeffs[i] - q[i]) / scale);
      }
      c.expect(worst <= 1e-12, "m=%d %s modulus: worst relative row deviation %.3e", m,
               E.is_constant() ? "constant" : "spline", worst);
    }
  }
  // Lagrange weights against exact rationals, including the printed fractions.
  auto rat = [](std::initializer_list<std::pair<int, int>> v) {
    std::vector<Rational> out;
    for (auto [n, d] : v) out.emplace_back(n, d);
    return out;
  };
  c.expect(rational_lagrange(rat({{6, 8}, {7, 8}, {1, 1}}), Rational(15, 16)) == rat({{-1, 8}, {3, 4}, {3, 8}}),
           "quadratic half-cell weights differ from (-1/8, 3/4, 3/8)");
  c.expect(rational_lagrange(rat({{5, 8}, {6, 8}, {7, 8}, {1, 1}}), Rational(15, 16)) ==
               rat({{1, 16}, {-5, 16}, {15, 16}, {5, 16}}),
           "cubic half-cell weights differ from (1/16, -5/16, 15/16, 5/16)");
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> num(1, 40);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int p = 1 + trial % 3;
    const int den = 8 << (trial % 5);
    std::vector<Rational> nodes;
    int acc = 0;
    for (int i = 0; i <= p; ++i) {
      acc += num(rng);
      nodes.emplace_back(acc, den);
    }
    const Rational target(nodes.front() + (nodes.back() - nodes.front()) * Rational(num(rng), 64));
    std::vector<double> fx;
    for (const Rational& r : nodes) fx.push_back(r.convert_to<double>());
    const auto w = lagrange_value_weights(fx, target.convert_to<double>());
    const auto exact = rational_lagrange(nodes, target);
    for (std::size_t i = 0; i < w.size(); ++i) worst = std::max(worst, std::abs(w[i] - exact[i].convert_to<double>()));
  }
  c.expect(worst <= 1e-14, "floating Lagrange weights deviate by %.3e", worst);
  // Stencils produced on the coupled grids.
  for (int p = 1; p <= 3; ++p) {
    const CoupledGrid g = build_overlap_grid({}, base(Method::kMdcm, p, 0.125, 2.0, "quartic").grid);
    for (int k = 0; k <= g.m(); ++k) {
      const InterpolationStencil s = value_stencil(g, Side::kLeft, p, g.nonlocal_nodes()[k]);
      std::vector<Rational> nodes;
      for (int j : s.support) nodes.emplace_back(j, 8);
      const auto exact = rational_lagrange(nodes, Rational(14 + k, 16));
      for (std::size_t i = 0; i < exact.size(); ++i)
        c.expect(std::abs(s.weights[i] - exact[i].convert_to<double>()) <= 1e-14, "grid stencil p=%d k=%d weight %zu",
                 p, k, i);
    }
  }
}

void fdm_convergence_check(Check& c) {
  std::vector<double> err;
  for (double h : {1.0 / 16, 1.0 / 32, 1.0 / 64}) {
    CaseConfig cfg = base(Method::kFdm, 3, h, 1.0, "quartic");
    cfg.grid.m = 1;  // h_e = ratio * delta / m = h
    err.push_back(max_err(cfg));
  }
  for (int i = 0; i < 2; ++i) {
    const double order = std::log2(err[i] / err[i + 1]);
    c.expect(std::abs(order - 2.0) <= 0.2, "observed order %.4f between h=1/%d and h=1/%d", order, 16 << i,
             32 << i);
  }
}

}  // namespace

int main() {
  report(1, "degree of precision three (linear, quadratic, cubic reproduced)", degree_of_precision_check);
  report(2, "quadratic interpolation limits the cubic case to second order", quadratic_order_check);
  report(3, "quartic error table reproduced", quartic_table_check);
  report(4, "cubic interpolation beats quadratic by at least 5x", interpolation_separation_check);
  report(5, "misaligned interfaces keep the error level; Dirichlet case larger in the centre", misaligned_check);
  report(6, "softened-modulus error trends", profile_trend_check);
  report(7, "condition numbers", condition_check);
  report(8, "oracle equivalence (quadrature rows, rational weights)", oracle_check);
  report(9, "FDM reference converges at second order", fdm_convergence_check);
  return failures;
}
