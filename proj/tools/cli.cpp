#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "config.hpp"
#include "qbertrand/error.hpp"
#include "qbertrand/family.hpp"
#include "qbertrand/pct.hpp"
#include "qbertrand/radial.hpp"
#include "qbertrand/second_class.hpp"
#include "qbertrand/spectrum.hpp"
#include "qbertrand/verification.hpp"
#include "table.hpp"

namespace qbertrand::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::set<std::string> unit_keys{"hbar", "mass", "coulomb_strength", "omega", "lambda"};

std::set<std::string> with_units(std::set<std::string> keys) {
  keys.insert(unit_keys.begin(), unit_keys.end());
  return keys;
}

PhysicalConstants read_units(const KeyValues& kv) {
  PhysicalConstants c;
  c.hbar = kv.number("hbar", c.hbar);
  c.mass = kv.number("mass", c.mass);
  c.coulomb_strength = kv.number("coulomb_strength", c.coulomb_strength);
  c.omega = kv.number("omega", c.omega);
  if (!(c.hbar > 0.0)) throw ConfigError("key 'hbar': must be positive");
  if (!(c.mass > 0.0)) throw ConfigError("key 'mass': must be positive");
  return c;
}

double read_lambda(const KeyValues& kv) {
  const double lam = kv.number("lambda", 1.0);
  if (!(lam > 0.0)) throw ConfigError("key 'lambda': must be positive");
  return lam;
}

RadialGrid read_grid(const KeyValues& kv, std::array<double, 3> fallback) {
  const auto g = kv.grid("grid", fallback);
  return RadialGrid(g[0], g[1], static_cast<std::size_t>(g[2]));
}

// Uniform sample points without RadialGrid's lower limits on size.
std::vector<double> sample_points(const KeyValues& kv, std::array<double, 3> fallback) {
  const auto g = kv.grid("grid", fallback);
  const auto n = static_cast<std::size_t>(g[2]);
  if (n < 2) throw ConfigError("key 'grid': need at least two points");
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i)
    r[i] = g[0] + (g[1] - g[0]) * static_cast<double>(i) / static_cast<double>(n - 1);
  return r;
}

PctForm read_form(const KeyValues& kv, const std::string& fallback) {
  return kv.choice("form", fallback, {"canonical", "tabulated"}) == "canonical"
             ? PctForm::canonical
             : PctForm::tabulated;
}

// ---------------------------------------------------------------- potential

Table cmd_potential(const KeyValues& kv) {
  const std::string fam = kv.choice("family", "first", {"first", "pct", "second"});
  Table t{{"r", "V"}, {}};

  if (fam == "first") {
    kv.require_known(with_units({"family", "alpha", "a", "b", "c", "epsilon", "energy", "l", "n",
                                 "grid"}));
    const PhysicalConstants units = read_units(kv);
    const double lam = read_lambda(kv);
    const double alpha = kv.number("alpha", 2.0);
    const int l = kv.integer("l", 0);
    const int n = kv.integer("n", 0);
    const bool explicit_abc = kv.has("a") || kv.has("b") || kv.has("c");
    FamilyParams p;
    double energy = kv.number("energy", 0.0);
    const auto cls = classify_alpha(alpha);
    if (!explicit_abc && cls == AlphaClass::oscillator) {
      p = oscillator_params(l, units.omega, units, lam);
      p.epsilon = epsilon_n(p, n, Sign::minus);
      if (!kv.has("energy")) energy = -couplings(p).g2;
    } else if (!explicit_abc && cls == AlphaClass::coulomb) {
      const SpectralLine line = energy_coulomb(n, l, units, lam);
      p = coulomb_params(l, line.sigma, units, lam);
      p.epsilon = line.epsilon_n;
      if (!kv.has("energy")) energy = -couplings(p).g1;
    } else {
      p.alpha = alpha;
      p.a = kv.number("a", -0.5);
      p.b = kv.number("b", 0.0);
      p.c = kv.number("c", 0.0);
      p.l = l;
      p.lambda = lam;
      p.constants = units;
    }
    if (kv.has("epsilon")) p.epsilon = kv.number("epsilon", 0.0);
    const CouplingSet cs = couplings(p);
    for (double r : sample_points(kv, {0.1, 5.0, 50}))
      t.rows.push_back({r, potential_eval(cs, energy, r)});
    return t;
  }

  if (fam == "pct") {
    kv.require_known(with_units({"family", "alpha", "a", "b", "c", "epsilon", "energy", "l",
                                 "map", "form", "grid"}));
    FamilyParams p;
    p.alpha = kv.number("alpha", -1.0);
    p.a = kv.number("a", -0.5);
    p.b = kv.number("b", 0.0);
    p.c = kv.number("c", 0.0);
    p.epsilon = kv.number("epsilon", 0.0);
    p.l = kv.integer("l", 0);
    p.lambda = read_lambda(kv);
    p.constants = read_units(kv);
    const PctForm form = read_form(kv, "tabulated");
    const std::string map_name = kv.choice("map", "exp", {"exp", "identity"});
    t.header = {"rho", "V"};
    for (double rho : sample_points(kv, {0.1, 5.0, 50})) {
      double v;
      if (map_name == "exp" && !kv.has("energy")) {
        v = exp_map_potential(p, rho, form);
      } else {
        const PctMap map = map_name == "exp" ? exp_map() : identity_map();
        v = pct_potential(p, map, rho, kv.number("energy", 0.0), form);
      }
      t.rows.push_back({rho, v});
    }
    return t;
  }

  kv.require_known(with_units({"family", "alpha", "a", "b", "gamma", "beta", "delta", "l", "form",
                               "grid"}));
  SecondClassParams p;
  p.alpha = kv.number("alpha", 2.0);
  p.a = kv.number("a", 1.0);
  p.b = kv.number("b", 1.0);
  p.gamma = kv.number("gamma", 1.0);
  p.beta = kv.number("beta", 0.0);
  p.delta = kv.number("delta", 0.0);
  p.l = kv.integer("l", 0);
  const PctForm form = read_form(kv, "tabulated");
  t.header = {"rho", "V"};
  if (form == PctForm::canonical) {
    for (double rho : sample_points(kv, {0.1, 5.0, 50})) t.rows.push_back({rho, chain_potential(p, rho)});
  } else {
    const DerivedCoefficients dc = derived_coeffs(p);
    for (double rho : sample_points(kv, {0.1, 5.0, 50}))
      t.rows.push_back({rho, second_potential(dc, p, rho)});
  }
  return t;
}

// ----------------------------------------------------------------- spectrum

Table cmd_spectrum(const KeyValues& kv) {
  kv.require_known(with_units({"case", "n_max", "l_max", "verify", "grid", "alpha", "a", "b", "c",
                               "epsilon"}));
  const std::string kind = kv.choice("case", "coulomb", {"coulomb", "oscillator", "numeric"});
  const PhysicalConstants units = read_units(kv);
  const double lam = read_lambda(kv);
  const int n_max = kv.integer("n_max", 2);
  const int l_max = kv.integer("l_max", 1);
  if (n_max < 0 || l_max < 0) throw ConfigError("keys 'n_max' and 'l_max' must be non-negative");
  const bool numeric = kind == "numeric" || kv.flag("verify", false);

  RadialPotential V;
  std::array<double, 3> grid_default{1e-3, 30.0, 4000};
  if (kind == "coulomb") {
    const double k = units.coulomb_strength;
    V = [k](double r) { return -k / r; };
    grid_default = {1e-3, 60.0, 6000};
  } else if (kind == "oscillator") {
    const double half_k = 0.5 * units.mass * units.omega * units.omega;
    V = [half_k](double r) { return half_k * r * r; };
    grid_default = {1e-3, 20.0, 4000};
  } else {
    FamilyParams p;
    p.alpha = kv.number("alpha", 2.0);
    p.a = kv.number("a", -0.5);
    p.b = kv.number("b", -1.0);
    p.c = kv.number("c", 0.0);
    p.epsilon = kv.number("epsilon", 0.0);
    p.lambda = lam;
    p.constants = units;
    const CouplingSet cs = couplings(p);
    V = [cs](double r) { return potential_eval(cs, 0.0, r); };
  }

  Table t{{"n", "l", "E_analytic", "E_numeric", "abs_diff"}, {}};
  const RadialGrid grid = numeric ? read_grid(kv, grid_default) : RadialGrid(1.0, 2.0, 16);
  for (int l = 0; l <= l_max; ++l) {
    std::vector<Eigenpair> levels;
    if (numeric) levels = fd_spectrum(V, l, grid, static_cast<std::size_t>(n_max) + 1, units);
    for (int n = 0; n <= n_max; ++n) {
      Cell analytic, num, diff;
      if (kind == "coulomb") analytic = energy_coulomb(n, l, units, lam).energy;
      if (kind == "oscillator") analytic = energy_oscillator(n, l, units.omega, units, lam).energy;
      if (numeric) {
        num = levels[n].energy;
        if (const double* e = std::get_if<double>(&analytic)) diff = std::abs(levels[n].energy - *e);
      }
      t.rows.push_back({static_cast<long long>(n), static_cast<long long>(l), analytic, num, diff});
    }
  }
  return t;
}

// ---------------------------------------------------------------------- pct

Table cmd_pct(const KeyValues& kv, Json& meta) {
  kv.require_known(with_units({"alpha", "a", "b", "c", "l", "n", "form", "grid"}));
  FamilyParams p;
  p.alpha = kv.number("alpha", 0.5);
  p.a = kv.number("a", -4.0);
  p.b = kv.number("b", 0.0);
  p.c = kv.number("c", 0.0);
  p.lambda = read_lambda(kv);
  p.constants = read_units(kv);
  const PctForm form = read_form(kv, "canonical");
  const PctSolution sol = make_pct_solution(p, kv.integer("l", 1), kv.integer("n", 0), form);
  meta["form"] = to_string(form);
  meta["branch"] = to_string(sol.branch);
  meta["epsilon"] = sol.params.epsilon;
  meta["energy"] = sol.energy;

  Table t{{"rho", "V", "psi"}, {}};
  for (double rho : sample_points(kv, {0.05, 25.0, 200}))
    t.rows.push_back({rho, exp_map_potential(sol.params, rho, form), pct_wavefunction(sol, rho)});
  return t;
}

// ------------------------------------------------------------- second-class

Table cmd_second(const KeyValues& kv, Json& meta) {
  kv.require_known({"what", "alpha", "a", "b", "gamma", "beta", "delta", "l", "grid", "alphas"});
  SecondClassParams p;
  p.alpha = kv.number("alpha", 2.0);
  p.a = kv.number("a", 1.0);
  p.b = kv.number("b", 1.0);
  p.gamma = kv.number("gamma", 1.0);
  p.beta = kv.number("beta", 0.0);
  p.delta = kv.number("delta", 0.0);
  p.l = kv.integer("l", 0);
  const std::string what = kv.choice("what", "table", {"table", "coefficients", "report"});

  if (what == "coefficients") {
    const DerivedCoefficients dc = derived_coeffs(p);
    Table t{{"name", "value"}, {}};
    const std::pair<const char*, double> items[] = {
        {"A1", dc.A1}, {"A2", dc.A2}, {"B1", dc.B1}, {"B2", dc.B2}, {"B3", dc.B3}, {"C1", dc.C1},
        {"C2", dc.C2}, {"C3", dc.C3}, {"D1", dc.D1}, {"D2", dc.D2}, {"D3", dc.D3}};
    for (const auto& [name, value] : items) t.rows.push_back({std::string(name), value});
    return t;
  }

  if (what == "report") {
    std::vector<double> alphas = kv.numbers("alphas", {});
    if (alphas.empty())
      for (int k = 0; k <= 50; ++k)
        if (k != 10) alphas.push_back((50.0 + 5.0 * k) / 100.0);
    const IndependenceReport report = constant_independence_report(alphas, p);
    meta["negative"] = report.negative;
    Table t{{"alpha", "excluded", "constant_independent", "surviving_exponents",
             "delta_sensitivity_variation", "inverse_square_coefficient", "l_effective",
             "remainder", "note"},
            {}};
    for (const auto& e : report.entries) {
      std::string exps;
      for (double x : e.surviving_exponents) exps += (exps.empty() ? "" : " ") + format_double(x);
      Cell c, le, rem;
      if (e.zero_energy) {
        c = e.zero_energy->inverse_square_coefficient;
        if (e.zero_energy->l_effective) le = *e.zero_energy->l_effective;
        rem = e.zero_energy->remainder;
      }
      t.rows.push_back({e.alpha, e.excluded, e.constant_independent, exps,
                        e.delta_sensitivity_variation, c, le, rem, e.note});
    }
    return t;
  }

  const DerivedCoefficients dc = derived_coeffs(p);
  const RadialGrid grid = read_grid(kv, {0.1, 5.0, 50});
  std::vector<double> S(grid.size());
  Cell empty;
  bool have_s = true;
  try {
    S = s_factor(dc, p, grid);
  } catch (const Error& e) {
    if (e.code() != Errc::turning_point_on_grid) throw;
    have_s = false;
    meta["note"] = e.what();
  }
  Table t{{"rho", "F1", "F2", "F3", "S", "V_tabulated", "V_chain"}, {}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double rho = grid.r(i);
    const FValues f = F_functions(dc, p, rho);
    t.rows.push_back({rho, f.F1, f.F2, f.F3, have_s ? Cell{S[i]} : empty,
                      second_potential(dc, p, rho), chain_potential(p, rho)});
  }
  return t;
}

// ----------------------------------------------------------------- classify

Table cmd_classify(const KeyValues& kv) {
  kv.require_known({"alpha"});
  Table t{{"alpha", "class"}, {}};
  for (double a : kv.numbers("alpha", {1.0, 1.5, 2.0}))
    t.rows.push_back({a, std::string(to_string(classify_alpha(a)))});
  return t;
}

// ------------------------------------------------------------------- verify

Json verify_report(const std::vector<CheckResult>& results, std::uint64_t seed) {
  Json checks = Json::object();
  for (const auto& r : results) {
    Json entry = Json::object();
    entry["pass"] = r.pass;
    entry["measured"] = std::isfinite(r.measured) ? Json(r.measured) : Json(nullptr);
    entry["tolerance"] = r.tolerance;
    entry["informational"] = r.informational;
    entry["detail"] = r.detail;
    checks[r.group + "/" + r.name] = std::move(entry);
  }
  Json report = Json::object();
  report["seed"] = seed;
  report["all_passed"] = all_passed(results);
  report["checks"] = std::move(checks);
  return report;
}

Table verify_table(const std::vector<CheckResult>& results) {
  Table t{{"group", "name", "pass", "measured", "tolerance", "informational", "detail"}, {}};
  for (const auto& r : results)
    t.rows.push_back({r.group, r.name, r.pass, r.measured, r.tolerance, r.informational, r.detail});
  return t;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case Errc::grid_too_coarse:
    case Errc::no_sign_change:
    case Errc::divergent_norm:
      return exit_oracle;
    default:
      return exit_config;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound-state potentials from similarity transformations of the Euler operator",
               "qbertrand"};
  app.require_subcommand(1, 1);

  std::string format = "csv";
  std::string out_path;
  std::string config_path;
  std::uint64_t seed = 42;
  std::vector<std::string> only;
  std::vector<std::string> entries;

  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "Write output to PATH instead of stdout");
  app.add_option("--seed", seed, "Seed for randomised checks");
  app.add_option("--config", config_path, "File of 'key = value' lines");

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"potential", "Tabulate a first-class, PCT or second-class potential"},
      {"spectrum", "Analytic (and optionally numerical) Coulomb/oscillator levels"},
      {"verify", "Run the verification suite"},
      {"pct", "Exp-map PCT solution: potential and eigenfunction"},
      {"second-class", "Second-class coefficients, F-functions, potentials or report"},
      {"classify", "Constant-independence class of alpha values"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("entries", entries, "key=value settings");
    if (std::string(c.name) == "verify")
      sub->add_option("--only", only, "Groups to run")->delimiter(',');
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_config;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    KeyValues kv;
    if (!config_path.empty()) kv.load_file(config_path);
    for (const auto& e : entries) kv.set_entry(e);

    std::ostringstream buffer;
    Json meta = Json::object();
    int status = exit_ok;

    auto emit_table = [&](const Table& t) {
      if (format == "csv") {
        write_csv(t, buffer);
      } else if (meta.empty()) {
        buffer << to_json(t).dump(2) << '\n';
      } else {
        Json doc = meta;
        doc["rows"] = to_json(t);
        buffer << doc.dump(2) << '\n';
      }
    };

    if (command == "verify") {
      kv.require_known({});
      VerifyOptions opts;
      opts.seed = seed;
      opts.only = only;
      const auto results = run_verification(opts);
      if (format == "json")
        buffer << verify_report(results, seed).dump(2) << '\n';
      else
        write_csv(verify_table(results), buffer);
      if (!all_passed(results)) status = exit_verify;
    } else if (command == "potential") {
      emit_table(cmd_potential(kv));
    } else if (command == "spectrum") {
      emit_table(cmd_spectrum(kv));
    } else if (command == "pct") {
      emit_table(cmd_pct(kv, meta));
    } else if (command == "second-class") {
      emit_table(cmd_second(kv, meta));
    } else {
      emit_table(cmd_classify(kv));
    }

    if (out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot write '" << out_path << "'\n";
        return exit_config;
      }
      file << buffer.str();
    }
    return status;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e);
  }
}

}  // namespace qbertrand::cli
