// Command-line front end: W-tables, verification reports, kernel grids and
// transform evaluations, emitted as CSV or JSON.
//
// Exit codes: 0 success (and no failed checks), 1 verification failure,
// 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpnb/berezin.hpp"
#include "cpnb/geometry.hpp"
#include "cpnb/spectra.hpp"
#include "cpnb/types.hpp"
#include "cpnb/verify.hpp"
#include "cpnb/version.hpp"

namespace {

using json = nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << payload;
}

json params_json(const cpnb::LevelParams& p) {
  return json{{"n", p.n}, {"two_nu", p.two_nu}, {"m", p.m}};
}

// ---------------------------------------------------------------------------
// wtable

std::string wtable_csv(const cpnb::berezin::WTable& table) {
  std::ostringstream out;
  out << "k,lambda,w_formula,w_oracle,residual\n";
  for (const auto& row : table.rows) {
    out << row.k << ',' << fmt17(row.lambda) << ',';
    if (row.w_formula) out << fmt17(*row.w_formula);
    out << ',' << fmt17(row.w_oracle) << ',';
    if (row.residual) out << fmt17(*row.residual);
    out << '\n';
  }
  return out.str();
}

std::string wtable_json(const cpnb::berezin::WTable& table) {
  json doc;
  doc["schema_version"] = "1";
  doc["params"] = params_json(table.params);
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r;
    r["k"] = row.k;
    r["lambda"] = row.lambda;
    r["w_formula"] = row.w_formula ? json(*row.w_formula) : json(nullptr);
    r["w_oracle"] = row.w_oracle;
    r["residual"] = row.residual ? json(*row.residual) : json(nullptr);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  doc["termination_report"] = table.termination_report;
  doc["provenance"] = {{"seed", 0},
                       {"quadrature_orders", {{"w_oracle", "(2nu+2m+k)/2+2"}}},
                       {"build_id", cpnb::kBuildId}};
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// verify

const char* status_name(cpnb::verify::Status s) {
  switch (s) {
    case cpnb::verify::Status::pass: return "pass";
    case cpnb::verify::Status::fail: return "fail";
    default: return "finding";
  }
}

std::string report_json(const cpnb::verify::Report& report) {
  json doc;
  doc["schema_version"] = report.schema_version;
  doc["suite"] = report.suite;
  doc["grid"] = report.grid;
  json checks = json::array();
  for (const auto& c : report.checks) {
    json jc;
    jc["name"] = c.name;
    jc["status"] = status_name(c.status);
    jc["measured"] = c.measured;
    jc["expected"] = c.expected ? json(*c.expected) : json(nullptr);
    jc["tolerance"] = c.tolerance;
    checks.push_back(std::move(jc));
  }
  doc["checks"] = std::move(checks);
  doc["provenance"] = {{"seed", report.provenance.seed},
                       {"quadrature_orders",
                        {{"radial_default", report.provenance.radial_order},
                         {"w_oracle", report.provenance.w_oracle_order}}},
                       {"build_id", report.provenance.build_id}};
  return doc.dump(2) + "\n";
}

std::string report_text(const cpnb::verify::Report& report) {
  std::ostringstream out;
  int failed = 0;
  for (const auto& c : report.checks) {
    if (c.status == cpnb::verify::Status::fail) ++failed;
    out << '[' << status_name(c.status) << "] " << c.name
        << " measured=" << fmt17(c.measured);
    if (c.expected) out << " expected=" << fmt17(*c.expected);
    out << " tolerance=" << fmt17(c.tolerance) << '\n';
  }
  out << report.suite << " (" << report.grid << " grid): " << report.checks.size()
      << " checks, " << failed << " failed\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// shared flag parsing

struct LevelFlags {
  int n = 1;
  int two_nu = 0;
  int m = 0;

  void attach(CLI::App* cmd, bool need_level = true) {
    cmd->add_option("--n", n, "complex dimension of CP^n")->required();
    auto* tn = cmd->add_option("--two-nu", two_nu, "magnetic strength 2*nu (integer)");
    auto* mm = cmd->add_option("--m", m, "Landau level index");
    if (need_level) {
      tn->required();
      mm->required();
    }
  }

  cpnb::LevelParams params() const { return {n, two_nu, m}; }
};

std::optional<int> parse_psi_index(const std::string& which) {
  if (which.rfind("psi:", 0) != 0) return std::nullopt;
  try {
    const int k = std::stoi(which.substr(4));
    if (k < 0) return std::nullopt;
    return k;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

cpnb::ProjectivePoint parse_point(const std::string& text, int n) {
  cpnb::ProjectivePoint z(n, cpnb::Complex(0.0));
  if (text.empty()) return z;
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(std::stod(item));
  if (values.size() != static_cast<std::size_t>(2 * n))
    throw std::invalid_argument("--z expects " + std::to_string(2 * n) +
                                " comma-separated reals (re,im per coordinate)");
  for (int j = 0; j < n; ++j) z[j] = cpnb::Complex(values[2 * j], values[2 * j + 1]);
  return z;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berezin transforms for spherical Landau levels on CP^n"};
  app.require_subcommand(1);

  // --- wtable ---------------------------------------------------------------
  auto* wtable_cmd = app.add_subcommand("wtable", "emit the variational weight table");
  LevelFlags wtable_level;
  wtable_level.attach(wtable_cmd);
  int kmax = -1;
  std::string wtable_format = "csv";
  std::string wtable_out;
  wtable_cmd->add_option("--kmax", kmax, "largest spectral index (default 2nu+2m+2)")
      ->check(CLI::NonNegativeNumber);
  wtable_cmd->add_option("--format", wtable_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  wtable_cmd->add_option("--out", wtable_out, "output path (default stdout)");

  // --- verify ---------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
  std::string suite = "all";
  std::string grid_name = "small";
  std::uint64_t verify_seed = 42;
  bool as_json = false;
  verify_cmd->add_option("--suite", suite, "specfun, geometry, spectra, berezin or all");
  verify_cmd->add_option("--grid", grid_name, "small or full")
      ->check(CLI::IsMember({"small", "full"}));
  verify_cmd->add_option("--seed", verify_seed, "seed for all randomness");
  verify_cmd->add_flag("--json", as_json, "emit the JSON report document");

  // --- kernel ---------------------------------------------------------------
  auto* kernel_cmd = app.add_subcommand("kernel", "sample a kernel on a uniform chord grid");
  LevelFlags kernel_level;
  kernel_level.attach(kernel_cmd, false);
  std::string which = "berezin";
  int points = 101;
  kernel_cmd->add_option("--which", which, "reproducing, berezin or psi:k");
  kernel_cmd->add_option("--points", points, "number of grid points")->check(CLI::PositiveNumber);

  // --- transform ------------------------------------------------------------
  auto* transform_cmd = app.add_subcommand("transform", "apply the Berezin transform");
  LevelFlags transform_level;
  transform_level.attach(transform_cmd);
  std::string observable = "const";
  std::string z_text;
  std::string method = "radial";
  std::uint64_t transform_seed = 42;
  std::size_t samples = 1000000;
  transform_cmd->add_option("--f", observable, "const, chord or psi:k");
  transform_cmd->add_option("--z", z_text, "evaluation point, re,im per coordinate");
  transform_cmd->add_option("--method", method, "radial or mc")
      ->check(CLI::IsMember({"radial", "mc"}));
  transform_cmd->add_option("--seed", transform_seed, "Monte Carlo seed");
  transform_cmd->add_option("--samples", samples, "Monte Carlo sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*wtable_cmd) {
      const auto params = wtable_level.params();
      params.validate();
      const auto table = cpnb::berezin::build_wtable(params, kmax);
      write_output(wtable_out,
                   wtable_format == "csv" ? wtable_csv(table) : wtable_json(table));
      return 0;
    }

    if (*verify_cmd) {
      cpnb::verify::Options options;
      options.grid = (grid_name == "full") ? cpnb::verify::Grid::full : cpnb::verify::Grid::small;
      options.seed = verify_seed;
      const auto report = cpnb::verify::run_suite(suite, options);
      std::cout << (as_json ? report_json(report) : report_text(report));
      return report.ok() ? 0 : 1;
    }

    if (*kernel_cmd) {
      const int n = kernel_level.n;
      if (n < 1) throw std::invalid_argument("--n must be >= 1");
      std::function<double(double)> f;
      if (which == "reproducing") {
        const auto params = kernel_level.params();
        params.validate();
        f = [params](double x) { return cpnb::spectra::reproducing_kernel(params, x); };
      } else if (which == "berezin") {
        const auto params = kernel_level.params();
        params.validate();
        f = [params](double x) { return cpnb::berezin::berezin_kernel(params, x); };
      } else if (auto k = parse_psi_index(which)) {
        f = [n, k](double x) { return cpnb::spectra::spectral_function_psi(n, *k, x); };
      } else {
        throw std::invalid_argument("--which must be reproducing, berezin or psi:k");
      }
      std::ostringstream out;
      out << "x,value\n";
      for (int i = 0; i < points; ++i) {
        const double x = (points == 1) ? -1.0 : -1.0 + 2.0 * i / (points - 1.0);
        out << fmt17(x) << ',' << fmt17(f(x)) << '\n';
      }
      std::cout << out.str();
      return 0;
    }

    if (*transform_cmd) {
      const auto params = transform_level.params();
      params.validate();
      const auto z = parse_point(z_text, params.n);
      const cpnb::ProjectivePoint pole(params.n, cpnb::Complex(0.0));

      std::optional<int> psi_k = parse_psi_index(observable);
      if (observable != "const" && observable != "chord" && !psi_k)
        throw std::invalid_argument("--f must be const, chord or psi:k");

      cpnb::berezin::Observable f;
      if (observable == "const") {
        f.radial = [](double) { return 1.0; };
        f.point = [](const cpnb::ProjectivePoint&) { return 1.0; };
      } else if (observable == "chord") {
        f.radial = [](double x) { return x; };
        f.point = [&](const cpnb::ProjectivePoint& w) { return cpnb::geometry::cos2_fs(w, pole); };
      } else {
        f.radial = [&](double x) {
          return cpnb::spectra::spectral_function_psi(params.n, *psi_k, x);
        };
        f.point = [&](const cpnb::ProjectivePoint& w) {
          return cpnb::spectra::spectral_function_psi(params.n, *psi_k,
                                                      cpnb::geometry::cos2_fs(w, pole));
        };
      }

      cpnb::berezin::IntegrationMethod how;
      if (method == "radial") {
        // chord and psi observables are biinvariant about the pole only.
        bool at_pole = true;
        for (const auto& c : z) at_pole = at_pole && std::abs(c) < 1e-14;
        if (observable != "const" && !at_pole) {
          f.radial = nullptr;  // profile not valid at this placement
          throw std::invalid_argument(
              "radial method requires the observable to be radial about --z "
              "(move z to the pole or use --method mc)");
        }
        const int order =
            std::max(32, (params.two_nu + 2 * params.m + (psi_k ? *psi_k : 1)) / 2 + 4);
        how = cpnb::berezin::IntegrationMethod::radial(order);
      } else {
        how = cpnb::berezin::IntegrationMethod::monte_carlo(transform_seed, samples);
      }
      const auto result = cpnb::berezin::berezin_apply(params, f, z, how);
      std::cout << "value " << fmt17(result.value) << '\n';
      if (result.std_error) std::cout << "std_error " << fmt17(*result.std_error) << '\n';
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
