#include "cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvedcp/beta_table.hpp"
#include "curvedcp/errors.hpp"
#include "curvedcp/eta.hpp"
#include "curvedcp/geometry.hpp"
#include "curvedcp/potential.hpp"
#include "curvedcp/thermal.hpp"
#include "curvedcp/units.hpp"

namespace curvedcp::cli {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v, const char* f = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

// "a:b:step" (inclusive range), "v1,v2,v3", a single value, or "" (empty).
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> out;
  if (spec.empty()) return out;
  if (spec.find(':') != std::string::npos) {
    double a, b, step;
    char extra;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &a, &b, &step, &extra) != 3 ||
        !(step > 0.0))
      throw std::invalid_argument("bad grid spec '" + spec +
                                  "', expected start:stop:step");
    const long n = std::lround(std::floor((b - a) / step + 1e-9));
    for (long i = 0; i <= n; ++i) out.push_back(a + step * i);
    return out;
  }
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stod(tok));
  }
  return out;
}

std::vector<BetaIndex> parse_indices(const std::string& spec) {
  if (spec == "all") {
    const auto& ids = all_beta_indices();
    return {ids.begin(), ids.end()};
  }
  std::vector<BetaIndex> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int p, q;
    char extra;
    if (std::sscanf(tok.c_str(), "%d:%d%c", &p, &q, &extra) != 2)
      throw std::invalid_argument("bad index '" + tok + "', expected p:q");
    BetaIndex idx{p, q};
    if (!beta_index_valid(idx))
      throw std::out_of_range("no coefficient with index " + tok);
    out.push_back(idx);
  }
  if (out.empty()) throw std::invalid_argument("empty index list");
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open output file '" + path + "'");
  f << content;
  f.flush();
  if (!f) throw IoError("write failed for '" + path + "'");
}

// Data destination: file plus provenance sidecar, or stdout.
void emit(const std::string& output, const std::string& content,
          const json& meta) {
  if (output.empty()) {
    std::cout << content;
    return;
  }
  write_file(output, content);
  write_file(output + ".meta.json", meta.dump(2) + "\n");
}

json meta_for(const std::string& command, const json& params) {
  return json{{"tool", "curvedcp"}, {"command", command},
              {"parameters", params}};
}

// ---------------------------------------------------------------- beta-table

struct BetaTableOpts {
  std::string xi_spec = "0:10:0.5";
  std::string indices = "all";
  std::string output;
  std::string format = "csv";
};

int cmd_beta_table(const BetaTableOpts& o) {
  const auto grid = parse_grid(o.xi_spec);
  const auto ids = parse_indices(o.indices);

  std::string body = "p,q,xi,beta\n";
  json rows = json::array();
  for (const auto& idx : ids) {
    for (double xi : grid) {
      const double v = beta_eval(idx, xi);
      body += std::to_string(idx.p) + "," + std::to_string(idx.q) + "," +
              fmt(xi, "%.10g") + "," + fmt(v) + "\n";
      rows.push_back({{"p", idx.p}, {"q", idx.q}, {"xi", xi}, {"beta", v}});
    }
  }
  const json params = {{"xi", o.xi_spec},
                       {"indices", o.indices},
                       {"format", o.format}};
  emit(o.output, o.format == "json" ? rows.dump(2) + "\n" : body,
       meta_for("beta-table", params));
  return kExitOk;
}

// --------------------------------------------------------- matsubara-curves

struct CurvesOpts {
  std::string tau_spec = "0.05:8:0.05";
  std::string indices = "all";
  std::string output;
  std::string format = "csv";
  double tol = 1e-12;
  long max_terms = 1000000;
};

int cmd_matsubara_curves(const CurvesOpts& o) {
  const auto grid = parse_grid(o.tau_spec);
  const auto ids = parse_indices(o.indices);
  for (double t : grid)
    if (!(t > 0.0))
      throw std::invalid_argument("matsubara-curves: tau grid must be > 0");

  std::string body = "p,q,tau,beta_tilde,beta_tilde_over_T0\n";
  json rows = json::array();
  size_t ok_rows = 0, failed_rows = 0;
  for (const auto& idx : ids) {
    const double t0 = beta_T0_integral(idx, std::min(o.tol, 1e-10));
    for (double tau : grid) {
      ThermalConfig cfg{tau, o.tol, o.max_terms};
      try {
        const BetaSumResult s = matsubara_beta_sum(idx, cfg);
        body += std::to_string(idx.p) + "," + std::to_string(idx.q) + "," +
                fmt(tau, "%.10g") + "," + fmt(s.value) + "," +
                fmt(s.value / t0) + "\n";
        rows.push_back({{"p", idx.p},
                        {"q", idx.q},
                        {"tau", tau},
                        {"beta_tilde", s.value},
                        {"beta_tilde_over_T0", s.value / t0}});
        ++ok_rows;
      } catch (const ConvergenceError& e) {
        std::cerr << "warning: skipping (p=" << idx.p << ", q=" << idx.q
                  << ", tau=" << tau << "): " << e.what() << "\n";
        ++failed_rows;
      }
    }
  }
  const json params = {{"tau", o.tau_spec},
                       {"indices", o.indices},
                       {"format", o.format},
                       {"tol", o.tol}};
  emit(o.output, o.format == "json" ? rows.dump(2) + "\n" : body,
       meta_for("matsubara-curves", params));
  if (ok_rows == 0 && failed_rows > 0) return kExitConvergence;
  return kExitOk;
}

// -------------------------------------------------------------- shared setup

struct PhysicalOpts {
  double d_nm = 0.0;
  std::vector<double> temperatures_k;  // kelvin; may be empty
  std::vector<double> taus;            // dimensionless; may be empty
  // polarizability, nm^3
  double a_iso = 0.0;
  double a_xx = 0.0, a_yy = 0.0, a_zz = 0.0;
  double a_xy = 0.0, a_xz = 0.0, a_yz = 0.0;
  // profile
  std::string profile = "plane";
  double radius_nm = 0.0;
  double axis_deg = 0.0;
  double r1_nm = 0.0, r2_nm = 0.0;
  double grad_x = 0.0, grad_y = 0.0;  // d_i(1/R1 + 1/R2), 1/nm^2
  std::vector<std::string> poly_coeffs;
  std::string grid_file;
  double tol = 1e-12;
  long max_terms = 1000000;
};

void add_physical_options(CLI::App* sub, PhysicalOpts& o) {
  sub->add_option("--d-nm", o.d_nm, "particle-surface separation in nm")
      ->required();
  sub->add_option("--T", o.temperatures_k, "temperature in kelvin");
  sub->add_option("--tau", o.taus, "dimensionless temperature d/lambda_T");
  sub->add_option("--alpha-iso", o.a_iso, "isotropic polarizability, nm^3");
  sub->add_option("--alpha-xx", o.a_xx, "polarizability component, nm^3");
  sub->add_option("--alpha-yy", o.a_yy, "polarizability component, nm^3");
  sub->add_option("--alpha-zz", o.a_zz, "polarizability component, nm^3");
  sub->add_option("--alpha-xy", o.a_xy, "polarizability component, nm^3");
  sub->add_option("--alpha-xz", o.a_xz, "polarizability component, nm^3");
  sub->add_option("--alpha-yz", o.a_yz, "polarizability component, nm^3");
  sub->add_option("--profile", o.profile,
                  "surface profile: plane|sphere|cylinder|principal|"
                  "polynomial|grid");
  sub->add_option("--radius-nm", o.radius_nm, "sphere/cylinder radius, nm");
  sub->add_option("--axis-deg", o.axis_deg, "cylinder axis angle, degrees");
  sub->add_option("--r1-nm", o.r1_nm, "principal radius R1, nm (inf allowed)");
  sub->add_option("--r2-nm", o.r2_nm, "principal radius R2, nm (inf allowed)");
  sub->add_option("--grad-lap-x", o.grad_x,
                  "d/dx (1/R1 + 1/R2) at the foot point, 1/nm^2");
  sub->add_option("--grad-lap-y", o.grad_y,
                  "d/dy (1/R1 + 1/R2) at the foot point, 1/nm^2");
  sub->add_option("--poly-coeff", o.poly_coeffs,
                  "polynomial profile coefficient m,n,value (repeatable)");
  sub->add_option("--grid-file", o.grid_file, "height-grid file path");
  sub->add_option("--tol", o.tol, "relative tolerance for sums/integrals");
  sub->add_option("--max-terms", o.max_terms, "Matsubara term cap");
}

PolarizabilityTensor alpha_from(const PhysicalOpts& o) {
  PolarizabilityTensor a;
  if (o.a_iso != 0.0) a = PolarizabilityTensor::isotropic(o.a_iso);
  if (o.a_xx != 0.0) a(0, 0) = o.a_xx;
  if (o.a_yy != 0.0) a(1, 1) = o.a_yy;
  if (o.a_zz != 0.0) a(2, 2) = o.a_zz;
  a(0, 1) = a(1, 0) = o.a_xy;
  a(0, 2) = a(2, 0) = o.a_xz;
  a(1, 2) = a(2, 1) = o.a_yz;
  return a;
}

HeightGridProfile read_height_grid(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open height-grid file '" + path + "'");
  std::string header;
  std::getline(f, header);
  const std::string tag = "spacing_nm=";
  auto pos = header.find(tag);
  if (header.empty() || header[0] != '#' || pos == std::string::npos)
    throw std::invalid_argument("height-grid file '" + path +
                                "' must start with '# spacing_nm=<value>'");
  HeightGridProfile grid;
  grid.spacing = std::stod(header.substr(pos + tag.size()));
  std::string line;
  while (std::getline(f, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::stringstream ss(line);
    std::vector<double> row;
    double v;
    while (ss >> v) row.push_back(v);
    grid.values.push_back(std::move(row));
  }
  return grid;
}

SurfaceProfile profile_from(const PhysicalOpts& o) {
  if (o.profile == "plane") return PlaneProfile{};
  if (o.profile == "sphere") return SphereProfile{o.radius_nm};
  if (o.profile == "cylinder")
    return CylinderProfile{o.radius_nm, o.axis_deg * std::numbers::pi / 180.0};
  if (o.profile == "polynomial") {
    PolynomialProfile p;
    for (const auto& spec : o.poly_coeffs) {
      int m, n;
      double v;
      char extra;
      if (std::sscanf(spec.c_str(), "%d,%d,%lf%c", &m, &n, &v, &extra) != 3)
        throw std::invalid_argument("bad --poly-coeff '" + spec +
                                    "', expected m,n,value");
      p.coeffs[{m, n}] = v;
    }
    return p;
  }
  if (o.profile == "grid") {
    if (o.grid_file.empty())
      throw std::invalid_argument("--grid-file required for grid profile");
    return read_height_grid(o.grid_file);
  }
  throw std::invalid_argument("unknown profile '" + o.profile + "'");
}

LocalGeometry geometry_from(const PhysicalOpts& o) {
  if (o.profile == "principal") {
    if (o.r1_nm == 0.0 || o.r2_nm == 0.0)
      throw std::invalid_argument(
          "principal profile needs nonzero --r1-nm and --r2-nm (use inf for "
          "flat directions)");
    return LocalGeometry::make_principal(o.d_nm, 1.0 / o.r1_nm, 1.0 / o.r2_nm,
                                         {o.grad_x, o.grad_y});
  }
  LocalGeometry g = local_geometry_from_profile(profile_from(o), o.d_nm);
  if (o.grad_x != 0.0 || o.grad_y != 0.0) g.grad_lap = {o.grad_x, o.grad_y};
  return g;
}

// one (tau, optional T) evaluation point
struct TemperaturePoint {
  double tau = 0.0;
  std::optional<double> temperature_k;
};

std::vector<TemperaturePoint> temperature_points(const PhysicalOpts& o) {
  if (!o.temperatures_k.empty() && !o.taus.empty())
    throw std::invalid_argument("give either --T or --tau, not both");
  std::vector<TemperaturePoint> pts;
  for (double t : o.temperatures_k) {
    if (t < 0.0) throw std::invalid_argument("--T must be >= 0");
    pts.push_back({t == 0.0 ? 0.0 : units::tau_from(o.d_nm, t), t});
  }
  for (double tau : o.taus) {
    if (tau < 0.0) throw std::invalid_argument("--tau must be >= 0");
    pts.push_back({tau, std::nullopt});
  }
  if (pts.empty())
    throw std::invalid_argument("exactly one of --T or --tau is required");
  return pts;
}

void print_validity_warnings(const ValidityFlags& v) {
  if (!v.tau_within_expansion)
    std::cerr << "warning: tau above the low-temperature expansion comfort "
                 "zone (0.3)\n";
  if (!v.curvature_within_bounds)
    std::cerr << "warning: |d/R| above 0.5; the derivative expansion may be "
                 "inaccurate\n";
}

// ------------------------------------------------------------------ potential

struct PotentialOpts : PhysicalOpts {
  std::string output;
  std::string format = "json";
};

int cmd_potential(const PotentialOpts& o) {
  if (!(o.d_nm > 0.0)) throw std::invalid_argument("--d-nm must be positive");
  const auto pts = temperature_points(o);
  if (pts.size() != 1)
    throw std::invalid_argument("potential takes exactly one --T or --tau");
  const auto& pt = pts.front();

  const PolarizabilityTensor alpha = alpha_from(o);
  const LocalGeometry geom = geometry_from(o);
  ThermalConfig cfg{pt.tau, o.tol, o.max_terms};
  const PotentialBreakdown b = u_full(alpha, geom, cfg);
  print_validity_warnings(b.validity);

  auto [pg, pa] = to_principal_frame(geom, alpha);

  json rep;
  rep["inputs"] = {{"d_nm", o.d_nm},
                   {"profile", o.profile},
                   {"alpha_nm3", alpha.m}};
  if (pt.temperature_k) rep["inputs"]["T_K"] = *pt.temperature_k;
  rep["dimensionless"] = {
      {"tau", b.tau},
      {"d_over_R1", pg.d * pg.curvature1},
      {"d_over_R2", pg.d * pg.curvature2},
      {"curvature_gradient",
       {pg.d * pg.d * pg.grad_lap[0], pg.d * pg.d * pg.grad_lap[1]}}};
  rep["breakdown"] = {{"total", b.total},
                      {"flat_term", b.flat_term},
                      {"curvature1_term", b.curvature1_term},
                      {"gradient_term", b.gradient_term},
                      {"curvature2_term", b.curvature2_term},
                      {"channel_perp", b.channel_perp},
                      {"channel_zz", b.channel_zz},
                      {"channel_zi", b.channel_zi},
                      {"channel_xxyy", b.channel_xxyy}};
  const double u_ev = units::u_hat_to_ev(b.total, o.d_nm);
  rep["energy"] = {{"U_pi_d4_over_hbar_c", b.total},
                   {"U_d4_over_hbar_c", b.total / std::numbers::pi},
                   {"U_eV", u_ev},
                   {"U_joule", u_ev * units::ev_to_joule},
                   {"U_over_kB_kelvin", u_ev / units::k_b_ev_per_k}};
  if (pt.temperature_k && b.tau > 0.0)
    rep["energy"]["U_d3_over_kBT"] = b.total * 2.0 / b.tau;
  rep["validity"] = {
      {"tau_within_expansion", b.validity.tau_within_expansion},
      {"curvature_within_bounds", b.validity.curvature_within_bounds}};

  std::string body;
  if (o.format == "csv") {
    body += "key,value\n";
    for (const auto& [section, obj] : rep.items()) {
      if (!obj.is_object()) continue;
      for (const auto& [k, v] : obj.items())
        if (v.is_number())
          body += section + "." + k + "," + fmt(v.get<double>()) + "\n";
    }
  } else {
    body = rep.dump(2) + "\n";
  }
  const json params = {{"d_nm", o.d_nm},
                       {"profile", o.profile},
                       {"format", o.format},
                       {"tol", o.tol}};
  emit(o.output, body, meta_for("potential", params));
  return kExitOk;
}

// ----------------------------------------------------------- orientation-scan

struct ScanOpts : PhysicalOpts {
  std::string yaw_spec = "0:180:15";
  std::string tilt_spec = "0";
  std::string output;
  std::string format = "csv";
};

int cmd_orientation_scan(const ScanOpts& o) {
  if (!(o.d_nm > 0.0)) throw std::invalid_argument("--d-nm must be positive");
  const auto pts = temperature_points(o);
  const auto yaws = parse_grid(o.yaw_spec);
  const auto tilts = parse_grid(o.tilt_spec);
  if (yaws.empty() || tilts.empty())
    throw std::invalid_argument("orientation-scan: empty angle grid");

  std::vector<Rotation> grid;
  for (double yaw : yaws)
    for (double tilt : tilts)
      grid.push_back(Rotation{yaw * std::numbers::pi / 180.0,
                              tilt * std::numbers::pi / 180.0, 0.0});

  const PolarizabilityTensor alpha = alpha_from(o);
  const LocalGeometry geom = geometry_from(o);

  std::string body = "tau,yaw_rad,tilt_rad,energy,is_min\n";
  json rows = json::array();
  for (const auto& pt : pts) {
    ThermalConfig cfg{pt.tau, o.tol, o.max_terms};
    const auto scan = orientation_scan(alpha, geom, cfg, grid);
    print_validity_warnings(validity_flags(geom, pt.tau));
    for (const auto& row : scan) {
      body += fmt(pt.tau, "%.10g") + "," + fmt(row.rotation.z1, "%.10g") +
              "," + fmt(row.rotation.y, "%.10g") + "," + fmt(row.energy) +
              "," + (row.is_min ? "1" : "0") + "\n";
      rows.push_back({{"tau", pt.tau},
                      {"yaw_rad", row.rotation.z1},
                      {"tilt_rad", row.rotation.y},
                      {"energy", row.energy},
                      {"is_min", row.is_min}});
    }
  }
  const json params = {{"d_nm", o.d_nm},
                       {"yaw", o.yaw_spec},
                       {"tilt", o.tilt_spec},
                       {"format", o.format}};
  emit(o.output, o.format == "json" ? rows.dump(2) + "\n" : body,
       meta_for("orientation-scan", params));
  return kExitOk;
}


// Flat key=value configuration files. Keys mirror the long option names
// without the leading dashes; values given on the command line win. The
// expansion simply appends "--key value" tokens for config keys that are
// absent from the original argument list.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string path;
  std::vector<std::string> out;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      ++i;
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
    }
  }
  if (path.empty()) return out;

  std::ifstream f(path);
  if (!f) throw IoError("cannot open config file '" + path + "'");
  auto given = [&](const std::string& key) {
    const std::string flag = "--" + key;
    for (const auto& a : out)
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
  };
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config file '" + path + "' line " +
                                  std::to_string(lineno) +
                                  ": expected key=value");
    auto trim = [](std::string v) {
      const auto a = v.find_first_not_of(" \t\r");
      const auto b = v.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string()
                                    : v.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config file '" + path + "' line " +
                                  std::to_string(lineno) + ": empty key");
    if (!given(key)) {
      out.push_back("--" + key);
      out.push_back(value);
    }
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "curvedcp: finite-temperature Casimir-Polder potentials near gently "
      "curved perfectly conducting surfaces"};
  app.require_subcommand(1);

  BetaTableOpts bt;
  auto* sub_bt = app.add_subcommand(
      "beta-table", "tabulate the curvature-expansion coefficients beta(xi)");
  sub_bt->add_option("--xi", bt.xi_spec, "xi grid (start:stop:step or list)");
  sub_bt->add_option("--indices", bt.indices, "'all' or a list like 0:1,4:2");
  sub_bt->add_option("--output", bt.output, "output path (default stdout)");
  sub_bt->add_option("--format", bt.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  std::string cfg_dummy_bt;
  sub_bt->add_option("--config", cfg_dummy_bt,
                     "flat key=value config file (flags win)");

  CurvesOpts cv;
  auto* sub_cv = app.add_subcommand(
      "matsubara-curves",
      "normalized Matsubara sums beta~(tau)/beta~(0) over a tau grid");
  sub_cv->add_option("--tau", cv.tau_spec,
                     "tau grid (start:stop:step or list)");
  sub_cv->add_option("--indices", cv.indices, "'all' or a list like 0:1,4:2");
  sub_cv->add_option("--output", cv.output, "output path (default stdout)");
  sub_cv->add_option("--format", cv.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub_cv->add_option("--tol", cv.tol, "sum relative tolerance");
  sub_cv->add_option("--max-terms", cv.max_terms, "Matsubara term cap");
  std::string cfg_dummy_cv;
  sub_cv->add_option("--config", cfg_dummy_cv,
                     "flat key=value config file (flags win)");

  PotentialOpts po;
  auto* sub_po =
      app.add_subcommand("potential", "evaluate the particle-surface potential");
  add_physical_options(sub_po, po);
  sub_po->add_option("--output", po.output, "output path (default stdout)");
  sub_po->add_option("--format", po.format, "json|csv")
      ->check(CLI::IsMember({"csv", "json"}));
  std::string cfg_dummy_po;
  sub_po->add_option("--config", cfg_dummy_po,
                     "flat key=value config file (flags win)");

  ScanOpts sc;
  auto* sub_sc = app.add_subcommand(
      "orientation-scan", "energy vs particle orientation over an angle grid");
  add_physical_options(sub_sc, sc);
  sub_sc->add_option("--yaw-deg", sc.yaw_spec, "in-plane angles, degrees");
  sub_sc->add_option("--tilt-deg", sc.tilt_spec, "polar tilt angles, degrees");
  sub_sc->add_option("--output", sc.output, "output path (default stdout)");
  sub_sc->add_option("--format", sc.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  std::string cfg_dummy_sc;
  sub_sc->add_option("--config", cfg_dummy_sc,
                     "flat key=value config file (flags win)");

  std::vector<std::string> raw;
  for (int i = 1; i < argc; ++i) raw.emplace_back(argv[i]);
  std::vector<std::string> expanded;
  try {
    expanded = expand_config(raw);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    // CLI11 parses vectors in reverse order
    std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (sub_bt->parsed()) return cmd_beta_table(bt);
    if (sub_cv->parsed()) return cmd_matsubara_curves(cv);
    if (sub_po->parsed()) return cmd_potential(po);
    return cmd_orientation_scan(sc);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace curvedcp::cli
