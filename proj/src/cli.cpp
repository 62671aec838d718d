#include "lppqs/cli.hpp"

#include <omp.h>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lppqs/bijections.hpp"
#include "lppqs/errors.hpp"
#include "lppqs/io.hpp"
#include "lppqs/probability.hpp"
#include "lppqs/verification.hpp"

namespace lppqs {

namespace {

/// A usage problem detected after CLI11 parsing (bad value ranges etc.).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  int threads = 0;
  std::uint64_t budget = SeriesOptions{}.node_budget;

  SeriesOptions series() const { return SeriesOptions{budget}; }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty() || output == "-") {
    out << text;
    return;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw UsageError("cannot write " + output);
  f << text;
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

Rational exact_probability(const std::string& text, const char* name) {
  Rational r = parse_rational(text);
  if (r <= 0 || r >= 1) throw UsageError(std::string(name) + " must lie strictly between 0 and 1");
  return r;
}

/// y from --y, or from --q when q is the square of a rational. With
/// `exact` false an irrational square root is rounded.
Rational resolve_y(const std::string& y_text, const std::string& q_text, bool exact) {
  if (!y_text.empty()) return exact_probability(y_text, "y");
  if (q_text.empty()) throw UsageError("one of --q or --y is required");
  const Rational q = exact_probability(q_text, "q");
  const Rational y = rational_sqrt(q);
  if (exact && y * y != q)
    throw UsageError("q = " + rational_string(q) + " has no rational square root; pass --y for exact output");
  return y;
}

// ----------------------------------------------------------------- verify

struct VerifyConfig {
  std::string scope = "all";
  std::optional<std::size_t> n;
  std::optional<int> u;
  std::optional<std::size_t> trials;
  std::size_t max_dim = 5;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string output;
  bool brief = false;
};

using SizeList = std::vector<std::pair<std::size_t, int>>;

SizeList select_sizes(const SizeList& defaults, const VerifyConfig& c) {
  if (c.n && c.u) return {{*c.n, *c.u}};
  SizeList out;
  for (const auto& [n, u] : defaults)
    if ((!c.n || *c.n == n) && (!c.u || *c.u == u)) out.emplace_back(n, u);
  if (out.empty()) throw UsageError("no default instance matches; pass both --n and --u");
  return out;
}

SizeList grid(std::size_t n_max, int u_max, int step = 1) {
  SizeList out;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (int u = 0; u <= u_max; u += step) out.emplace_back(n, u);
  return out;
}

std::vector<CheckResult> run_verify(const VerifyConfig& c, const GlobalOptions& g) {
  const SizeList theorem_sizes{{1, 2}, {1, 4}, {2, 2}, {2, 4}, {3, 2}};
  const SizeList step_sizes{{1, 2}, {1, 4}, {2, 2}, {2, 4}};
  const bool all = c.scope == "all";
  std::vector<CheckResult> results;
  auto random_config = [&](std::size_t fallback) {
    return RandomCheckConfig{c.trials.value_or(fallback), c.seed};
  };

  if (all || c.scope == "theorem") {
    for (const auto& [n, u] : select_sizes(theorem_sizes, c)) {
      if (u % 2 != 0) throw UsageError("theorem needs an even u");
      results.push_back(check_theorem(n, u, g.series()));
    }
  }
  if (all || c.scope == "step1")
    for (const auto& [n, u] : select_sizes(step_sizes, c)) results.push_back(check_step1(n, u, g.series()));
  if (all || c.scope == "step4")
    for (const auto& [n, u] : select_sizes(step_sizes, c)) results.push_back(check_step4(n, u, g.series()));
  if (all || c.scope == "okada")
    for (const auto& [n, u] : select_sizes(grid(3, 6), c)) results.push_back(check_okada(n, u));
  if (all || c.scope == "stembridge") {
    for (const auto& [n, u] : select_sizes(grid(3, 6, 2), c)) {
      if (u % 2 != 0) throw UsageError("stembridge needs an even u");
      results.push_back(check_stembridge(n, u / 2));
    }
  }
  if (all || c.scope == "characters") {
    for (Family f : {Family::schur, Family::symplectic, Family::odd_orthogonal})
      for (std::size_t n = 1; n <= c.n.value_or(3); ++n)
        if (!c.n || n == *c.n) results.push_back(check_characters(f, n, c.u.value_or(3)));
  }
  if (all || c.scope == "greene") results.push_back(check_greene(random_config(200), c.max_dim));
  if (all || c.scope == "roundtrips") {
    results.push_back(check_local_roundtrips(Rule::row, random_config(1000)));
    results.push_back(check_local_roundtrips(Rule::col, random_config(1000)));
    results.push_back(check_bz_roundtrips(random_config(500)));
    results.push_back(check_p2l_roundtrips(random_config(500)));
  }
  return results;
}

std::string verify_text(const std::vector<CheckResult>& results, bool brief) {
  std::ostringstream s;
  std::size_t failed = 0;
  for (const auto& r : results) {
    failed += !r.pass;
    s << (r.pass ? "PASS " : "FAIL ") << r.suite << ' ' << r.instance << " (" << fixed(r.seconds, 3) << "s)\n";
    if (brief && r.pass) continue;
    for (const auto& [key, value] : r.details) s << "  " << key << ": " << value << '\n';
  }
  if (failed == 0)
    s << "all " << results.size() << " checks passed\n";
  else
    s << failed << " of " << results.size() << " checks failed\n";
  return s.str();
}

std::string verify_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json j;
  bool pass = true;
  auto list = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    pass = pass && r.pass;
    nlohmann::ordered_json item;
    item["suite"] = r.suite;
    item["instance"] = r.instance;
    item["pass"] = r.pass;
    item["seconds"] = r.seconds;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.details) details[key] = value;
    item["details"] = std::move(details);
    list.push_back(std::move(item));
  }
  j["pass"] = pass;
  j["checks"] = std::move(list);
  return j.dump(2) + "\n";
}

// -------------------------------------------------------------------- rsk

struct RskConfig {
  std::string input;
  std::string geometry = "p2hlr";
  std::string direction = "forward";
  std::string rule = "row";
  std::optional<int> u;
  bool roundtrip = false;
  std::string output;
};

using TextMap = std::function<std::string(const std::string&)>;

struct RskMaps {
  TextMap forward;
  TextMap inverse;
  TextMap canonical_source;  // re-serialises the forward input
  TextMap canonical_image;   // re-serialises the inverse input
};

std::string format_growth(const GrowthGrid& grid) {
  return "north " + format_chain(grid.north_chain()) + "\neast " + format_chain(grid.east_chain()) + "\n";
}

std::pair<std::vector<Partition>, std::vector<Partition>> parse_growth(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::vector<Partition>> north, east;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string key;
    if (!(words >> key) || key[0] == '#') continue;
    std::string rest;
    std::getline(words, rest);
    if (key == "north") north = parse_chain(rest);
    else if (key == "east") east = parse_chain(rest);
    else throw ParseError("expected 'north' or 'east', got '" + key + "'");
  }
  if (!north || !east) throw ParseError("growth boundary needs a north and an east line");
  return {*north, *east};
}

RskMaps rsk_maps(const RskConfig& c) {
  if (c.geometry == "p2hlr") {
    if (!c.u) throw UsageError("--u is required for p2hlr");
    const int u = *c.u;
    return {
        [u](const std::string& t) { return format_rows(bz_forward(parse_filling(t, GeometryKind::p2hlr), u).rows()); },
        [u](const std::string& t) { return format_filling(bz_inverse(SpGTPattern::from_rows(parse_rows(t)), u)); },
        [](const std::string& t) { return format_filling(parse_filling(t, GeometryKind::p2hlr)); },
        [](const std::string& t) { return format_rows(parse_rows(t)); },
    };
  }
  if (c.geometry == "p2l") {
    return {
        [](const std::string& t) { return format_rows(p2l_forward(parse_filling(t, GeometryKind::p2l)).rows()); },
        [](const std::string& t) { return format_filling(p2l_inverse(GTPattern::from_rows(parse_rows(t)))); },
        [](const std::string& t) { return format_filling(parse_filling(t, GeometryKind::p2l)); },
        [](const std::string& t) { return format_rows(parse_rows(t)); },
    };
  }
  const Rule rule = c.rule == "col" ? Rule::col : Rule::row;
  return {
      [rule](const std::string& t) { return format_growth(grow_grid(parse_matrix(t), rule)); },
      [rule](const std::string& t) {
        const auto [north, east] = parse_growth(t);
        return format_matrix(shrink_grid(rule, north, east));
      },
      [](const std::string& t) { return format_matrix(parse_matrix(t)); },
      [](const std::string& t) {
        const auto [north, east] = parse_growth(t);
        return "north " + format_chain(north) + "\neast " + format_chain(east) + "\n";
      },
  };
}

int run_rsk(const RskConfig& c, std::ostream& out) {
  const RskMaps maps = rsk_maps(c);
  const std::string input = read_input(c.input);
  const bool forward = c.direction == "forward";
  const TextMap& there = forward ? maps.forward : maps.inverse;
  const TextMap& back = forward ? maps.inverse : maps.forward;
  const std::string image = there(input);
  if (!c.roundtrip) {
    emit(image, c.output, out);
    return exit_ok;
  }
  if (!c.output.empty()) emit(image, c.output, out);
  const std::string original = (forward ? maps.canonical_source : maps.canonical_image)(input);
  const std::string again = back(image);
  if (again == original) {
    out << "roundtrip identical\n";
    return exit_ok;
  }
  out << "roundtrip differs\n--- input\n" << original << "--- after round trip\n" << again;
  return exit_math_failure;
}

// -------------------------------------------------------------------- cdf

struct CdfConfig {
  std::string geometry = "p2hlr";
  std::size_t n = 1;
  std::string y;
  std::string q;
  int u_max = 10;
  std::string format = "text";
  std::string output;
};

int run_cdf(const CdfConfig& c, const GlobalOptions& g, std::ostream& out) {
  const Rational y = resolve_y(c.y, c.q, true);
  if (c.n == 0) throw UsageError("--n must be positive");
  if (c.u_max < 0) throw UsageError("--u-max must be non-negative");
  const Geometry geometry(parse_geometry_kind(c.geometry), c.n);
  std::vector<std::pair<int, Rational>> table;
  for (int u = 0; u <= c.u_max; ++u) table.emplace_back(u, exact_cdf(geometry, u, y, g.series()));

  std::ostringstream s;
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["geometry"] = c.geometry;
    j["n"] = c.n;
    j["y"] = rational_string(y);
    j["q"] = rational_string(y * y);
    auto rows = nlohmann::ordered_json::array();
    for (const auto& [u, p] : table) rows.push_back({u, rational_string(p)});
    j["cdf"] = std::move(rows);
    s << j.dump() << '\n';
  } else if (c.format == "csv") {
    s << "bound,prob\n";
    for (const auto& [u, p] : table) s << u << ',' << rational_string(p) << '\n';
  } else {
    s << "# " << c.geometry << " n=" << c.n << " y=" << rational_string(y) << " q=" << rational_string(y * y) << '\n';
    s << "bound P(L<=bound)\n";
    for (const auto& [u, p] : table) s << u << ' ' << rational_string(p) << '\n';
  }
  emit(s.str(), c.output, out);
  return exit_ok;
}

// --------------------------------------------------------------- simulate

struct SimulateConfig {
  std::string geometry = "p2hlr";
  std::size_t n = 0;
  std::string y;
  std::string q;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
  bool factorization = false;
};

std::string report_text(const SimulationReport& r) {
  std::ostringstream s;
  s << "geometry " << to_string(r.geometry) << "\nn " << r.n << "\nq " << fixed(r.q(), 12) << "\ny "
    << rational_string(r.y) << "\nseed " << r.seed << "\nsamples " << r.samples << "\nmean " << fixed(r.mean)
    << "\nvariance " << fixed(r.variance) << "\nc1 " << fixed(r.scaling.c1, 12) << "\nc2 "
    << fixed(r.scaling.c2, 12) << "\nnormalized_mean " << fixed(r.normalized_mean) << "\nnormalized_variance "
    << fixed(r.normalized_variance) << "\nnormalized_skewness " << fixed(r.normalized_skewness) << '\n';
  s << "value P(L<=value)\n";
  for (const auto& [v, p] : r.cdf) s << v << ' ' << fixed(p) << '\n';
  return s.str();
}

std::string factorization_output(const MonteCarloFactorization& f, const std::string& format) {
  std::ostringstream s;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = f.p2hlr.n;
    j["q"] = f.p2hlr.q();
    j["y"] = rational_string(f.p2hlr.y);
    j["seed"] = f.p2hlr.seed;
    j["samples"] = f.p2hlr.samples;
    j["sup_distance"] = f.sup_distance;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : f.rows) rows.push_back({r.u, r.p2hlr, r.p2pr, r.p2l});
    j["rows"] = std::move(rows);
    j["p2hlr"] = report_json(f.p2hlr);
    j["p2pr"] = report_json(f.p2pr);
    j["p2l"] = report_json(f.p2l);
    s << j.dump() << '\n';
  } else if (format == "csv") {
    s << "u,p2hlr,p2pr,p2l_half,product\n";
    for (const auto& r : f.rows)
      s << r.u << ',' << shortest(r.p2hlr) << ',' << shortest(r.p2pr) << ',' << shortest(r.p2l) << ','
        << shortest(r.p2pr * r.p2l) << '\n';
  } else {
    s << "n " << f.p2hlr.n << "\nq " << fixed(f.p2hlr.q(), 12) << "\nseed " << f.p2hlr.seed << "\nsamples "
      << f.p2hlr.samples << "\nsup_distance " << fixed(f.sup_distance) << '\n';
    s << "u P_p2hlr P_p2pr P_p2l(u/2) product\n";
    for (const auto& r : f.rows)
      s << r.u << ' ' << fixed(r.p2hlr) << ' ' << fixed(r.p2pr) << ' ' << fixed(r.p2l) << ' '
        << fixed(r.p2pr * r.p2l) << '\n';
  }
  return s.str();
}

int run_simulate(const SimulateConfig& c, std::ostream& out) {
  const Rational y = resolve_y(c.y, c.q, false);
  if (c.n == 0) throw UsageError("--n must be positive");
  if (c.samples == 0) throw UsageError("--samples must be positive");
  std::string text;
  if (c.factorization) {
    text = factorization_output(monte_carlo_factorization(c.n, y, c.samples, c.seed), c.format);
  } else {
    const GeometricSpec spec{Geometry(parse_geometry_kind(c.geometry), c.n), y, c.seed};
    const SimulationReport r = sample_lpp(spec, c.samples);
    if (c.format == "json") text = report_json(r).dump() + "\n";
    else if (c.format == "csv") text = report_csv(r);
    else text = report_text(r);
  }
  emit(text, c.output, out);
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and Monte Carlo checks for last-passage percolation in reflected geometries", "lppqs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "lppqs 1.0");

  GlobalOptions global;
  app.add_option("--threads", global.threads, "OpenMP thread cap (0 = runtime default)")
      ->envname("LPPQS_THREADS")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--budget", global.budget, "node budget for series enumeration")
      ->envname("LPPQS_BUDGET")
      ->capture_default_str();

  const std::vector<std::string> formats{"text", "json", "csv"};
  const std::vector<std::string> geometries{"p2hlr", "p2pr", "p2l"};

  VerifyConfig verify;
  auto* v = app.add_subcommand("verify", "check the exact identities and bijection properties");
  v->add_option("--scope", verify.scope, "suite to run")
      ->check(CLI::IsMember({"theorem", "step1", "step4", "okada", "stembridge", "characters", "greene",
                             "roundtrips", "all"}))
      ->envname("LPPQS_SCOPE")
      ->capture_default_str();
  v->add_option("--n", verify.n, "restrict to this n")->envname("LPPQS_N");
  v->add_option("--u", verify.u, "restrict to this u (box width for characters)")->envname("LPPQS_U");
  v->add_option("--trials", verify.trials, "random cases per property (default 200 greene, 1000 local, 500 maps)")
      ->envname("LPPQS_TRIALS");
  v->add_option("--max-dim", verify.max_dim, "largest matrix side for greene")->capture_default_str();
  v->add_option("--seed", verify.seed, "seed for random cases")->envname("LPPQS_SEED")->capture_default_str();
  v->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}))->envname("LPPQS_FORMAT")
      ->capture_default_str();
  v->add_option("--output", verify.output, "write the report here instead of stdout");
  v->add_flag("--brief", verify.brief, "omit details of passing checks");

  RskConfig rsk;
  auto* r = app.add_subcommand("rsk", "apply a growth bijection to a file");
  r->add_option("--input", rsk.input, "input file ('-' for stdin)")->required();
  r->add_option("--geometry", rsk.geometry, "p2hlr (bz map), p2l (p2l map) or matrix (plain growth)")
      ->check(CLI::IsMember({"p2hlr", "p2l", "matrix"}))
      ->capture_default_str();
  r->add_option("--direction", rsk.direction)->check(CLI::IsMember({"forward", "inverse"}))->capture_default_str();
  r->add_option("--rule", rsk.rule, "local rule for --geometry matrix")
      ->check(CLI::IsMember({"row", "col"}))
      ->capture_default_str();
  r->add_option("--u", rsk.u, "bound u for p2hlr")->envname("LPPQS_U");
  r->add_flag("--roundtrip", rsk.roundtrip, "apply the map and its inverse and compare with the input");
  r->add_option("--output", rsk.output, "write the image here instead of stdout");

  CdfConfig cdf;
  auto* c = app.add_subcommand("cdf", "exact CDF table P(L <= u), u = 0..u-max");
  c->add_option("--geometry", cdf.geometry)->check(CLI::IsMember(geometries))->envname("LPPQS_GEOMETRY")
      ->capture_default_str();
  c->add_option("--n", cdf.n)->envname("LPPQS_N")->capture_default_str();
  auto* cy = c->add_option("--y", cdf.y, "sqrt(q) as an exact rational, e.g. 1/2")->envname("LPPQS_Y");
  c->add_option("--q", cdf.q, "q; must be the square of a rational")->envname("LPPQS_Q")->excludes(cy);
  c->add_option("--u-max", cdf.u_max)->capture_default_str();
  c->add_option("--format", cdf.format)->check(CLI::IsMember(formats))->envname("LPPQS_FORMAT")
      ->capture_default_str();
  c->add_option("--output", cdf.output);

  SimulateConfig sim;
  auto* s = app.add_subcommand("simulate", "Monte Carlo last-passage times with geometric weights");
  s->add_option("--geometry", sim.geometry)->check(CLI::IsMember(geometries))->envname("LPPQS_GEOMETRY")
      ->capture_default_str();
  s->add_option("--n", sim.n)->envname("LPPQS_N")->required();
  auto* sy = s->add_option("--y", sim.y, "sqrt(q)")->envname("LPPQS_Y");
  s->add_option("--q", sim.q, "geometric parameter off the diagonal")->envname("LPPQS_Q")->excludes(sy);
  s->add_option("--samples", sim.samples)->envname("LPPQS_SAMPLES")->capture_default_str();
  s->add_option("--seed", sim.seed)->envname("LPPQS_SEED")->capture_default_str();
  s->add_option("--format", sim.format)->check(CLI::IsMember(formats))->envname("LPPQS_FORMAT")
      ->capture_default_str();
  s->add_option("--output", sim.output);
  s->add_flag("--factorization", sim.factorization,
              "simulate p2hlr, p2pr and p2l and report the factorisation sup-distance");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  if (global.threads > 0) omp_set_num_threads(global.threads);

  try {
    if (v->parsed()) {
      const auto results = run_verify(verify, global);
      emit(verify.format == "json" ? verify_json(results) : verify_text(results, verify.brief), verify.output, out);
      for (const auto& res : results)
        if (!res.pass) return exit_math_failure;
      return exit_ok;
    }
    if (r->parsed()) return run_rsk(rsk, out);
    if (c->parsed()) return run_cdf(cdf, global, out);
    return run_simulate(sim, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_math_failure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_math_failure;
  }
}

}  // namespace lppqs
