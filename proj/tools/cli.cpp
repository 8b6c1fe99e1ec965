#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "momentforge/boolean.hpp"
#include "momentforge/errors.hpp"
#include "momentforge/family.hpp"
#include "momentforge/fitter.hpp"
#include "momentforge/mgf.hpp"
#include "momentforge/oracle.hpp"
#include "momentforge/parallel.hpp"
#include "serialize.hpp"

#ifndef MOMENTFORGE_VERSION
#define MOMENTFORGE_VERSION "0.0.0"
#endif

namespace momentforge::cli {

namespace {

struct Common {
  std::string format = "json";
  std::string out;
  unsigned threads = 0;
};

struct FamilyFlags {
  std::string family;
  std::optional<long> n, m, c, k;

  ParamMap params(Family f) const {
    ParamMap p;
    auto put = [&](const char* key, const std::optional<long>& v) {
      if (v) p[key] = *v;
    };
    for (const auto& key : family_parameters(f)) {
      if (key == "n") put("n", n);
      if (key == "m") put("m", m);
      if (key == "c") put("c", c);
      if (key == "k") put("k", k);
    }
    return p;
  }
};

// What a subcommand produced: a JSON body and its CSV rendering.
struct Output {
  Json body;
  std::string csv;
  int exit_code = kExitOk;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> precision;
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "json (default) or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", common.out, "write the result to this path instead of stdout");
  sub->add_option("--threads", common.threads, "worker cap; 0 = MOMENTFORGE_THREADS or hardware count");
}

void add_family(CLI::App* sub, FamilyFlags& f, bool with_n = true) {
  sub->add_option("--family", f.family, "schur | invmaj | boolean | domino | board1n")->required();
  if (with_n) sub->add_option("--n", f.n, "length / variables / columns");
  sub->add_option("--m", f.m, "board rows (domino)");
  sub->add_option("--c", f.c, "number of colors (schur)");
  sub->add_option("--k", f.k, "cube dimension (boolean)");
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const long long v = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("not an integer list: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list: '" + text + "'");
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("not a number list: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list: '" + text + "'");
  return out;
}

// |sample space| when it is small enough to print; moments times it are the
// integer tables of sums over the space.
std::optional<Integer> sample_space_size(Family f, const ParamMap& p) {
  switch (f) {
    case Family::Schur:
      if (p.at("n") > 4096) return std::nullopt;
      return ipow(Integer(p.at("c")), static_cast<unsigned>(p.at("n")));
    case Family::Invmaj:
      if (p.at("n") > 1000) return std::nullopt;
      return factorial(static_cast<unsigned>(p.at("n")));
    case Family::Boolean:
      if (p.at("n") > 8) return std::nullopt;
      return ipow(Integer(2), 1u << p.at("n"));
    case Family::Domino:
      if (p.at("m") * p.at("n") > 4096) return std::nullopt;
      return ipow(Integer(2), static_cast<unsigned>(p.at("m") * p.at("n")));
    case Family::Board1n:
      if (p.at("n") > 4096) return std::nullopt;
      return ipow(Integer(2), static_cast<unsigned>(p.at("n")));
  }
  return std::nullopt;
}

Output moments_command(const FamilyFlags& flags, MomentKind kind, int r_max, unsigned threads) {
  const Family f = parse_family(flags.family);
  const ParamMap params = flags.params(f);
  const auto m = family_moments(f, params, kind, r_max, threads);
  Output o;
  o.body = moments_json(m);
  std::optional<Integer> space;
  if (kind == MomentKind::Raw) space = sample_space_size(f, params);
  if (space) {
    o.body["sample_space_size"] = to_string(*space);
    for (auto& e : o.body["moments"]) e["sample_space_sum"] = to_string(parse_rational(e["value"].get<std::string>()) * Rational(*space));
  }
  std::ostringstream csv;
  csv << "family,params,kind,r,value" << (space ? ",sample_space_sum" : "") << "\n";
  for (const auto& e : o.body["moments"]) {
    csv << m.family << "," << csv_field(params_text(m.params)) << "," << to_string(m.kind) << ","
        << e["r"].get<int>() << "," << e["value"].get<std::string>();
    if (space) csv << "," << e["sample_space_sum"].get<std::string>();
    csv << "\n";
  }
  o.csv = csv.str();
  return o;
}

Output pgf_command(const FamilyFlags& flags, unsigned threads) {
  const Family f = parse_family(flags.family);
  const ParamMap params = flags.params(f);
  const Polynomial p = family_pgf(f, params, threads);
  Output o;
  o.body = {{"family", std::string(family_id(f))}, {"params", params_json(params)}, {"pgf", polynomial_json(p)}};
  std::ostringstream csv;
  csv << "power,coefficient\n";
  for (std::size_t d = 0; d < p.coefficients().size(); ++d)
    if (sgn(p.coefficients()[d]) != 0) csv << d << "," << to_string(p.coefficients()[d]) << "\n";
  o.csv = csv.str();
  return o;
}

Output normality_command(const FamilyFlags& flags, const std::string& grid_text, int r_max, double threshold,
                         unsigned digits) {
  const Family f = parse_family(flags.family);
  ParamMap fixed = flags.params(f);
  fixed.erase("n");
  const auto grid = parse_list(grid_text);
  NormalityOptions options{threshold, digits};
  const auto report = normality_report(std::string(family_id(f)), fixed, grid, r_max, central_source(f, fixed), options);
  const unsigned shown = std::min(digits, 30u);
  Output o;
  o.precision = digits;
  o.body = normality_json(report, shown);
  std::ostringstream csv;
  csv << "family,params,r,n,m_r,target,deviation,verdict\n";
  for (const auto& row : report.rows) {
    csv << report.family << "," << csv_field(params_text(report.params)) << "," << row.r << "," << row.n << ","
        << to_decimal(row.normalized, shown) << "," << to_string(row.target) << ","
        << to_decimal(row.deviation, shown) << "," << (report.verdict(row.r).converged ? "converged" : "open")
        << "\n";
  }
  o.csv = csv.str();
  return o;
}

Output mgf_command(const std::string& family, const std::string& n_text, const std::string& t_grid_text, double t_min,
                   double t_max, int t_points, unsigned digits) {
  const auto ns = parse_list(n_text);
  const auto grid = t_grid_text.empty() ? linear_grid(t_min, t_max, t_points) : parse_real_list(t_grid_text);
  const unsigned shown = std::min(digits, 30u);
  Output o;
  o.precision = digits;
  Json reports = Json::array();
  std::ostringstream csv;
  csv << "family,n,t,value,target,deviation\n";
  std::vector<Real> maxima;
  for (auto n : ns) {
    const auto report = mgf_limit_check(family, n, grid, digits);
    reports.push_back(mgf_json(report, shown));
    for (const auto& row : report.rows) {
      csv << family << "," << n << "," << row.t << "," << to_decimal(row.value, shown) << ","
          << to_decimal(row.target, shown) << "," << to_decimal(row.deviation, shown) << "\n";
    }
    maxima.push_back(report.max_deviation);
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < maxima.size(); ++i) decreasing = decreasing && maxima[i] < maxima[i - 1];
  o.body = {{"family", family}, {"reports", reports}, {"decreasing", decreasing}};
  o.csv = csv.str();
  return o;
}

Output oracle_command(const FamilyFlags& flags, int r_max, std::uint64_t samples, std::uint64_t seed,
                      unsigned threads) {
  const Family f = parse_family(flags.family);
  const ParamMap params = flags.params(f);
  validate_parameters(f, params);
  auto p = [&](const char* key) { return static_cast<int>(params.at(key)); };
  Output o;
  std::ostringstream csv;
  oracle::Histogram h;
  Json extra = Json::object();
  std::optional<oracle::Histogram> maj;
  switch (f) {
    case Family::Schur:
      h = oracle::enumerate_schur(p("n"), p("c"), threads);
      break;
    case Family::Invmaj: {
      const auto joint = oracle::enumerate_permutations(p("n"), threads);
      h = joint.inv_marginal();
      maj = joint.maj_marginal();
      break;
    }
    case Family::Boolean:
      if (samples > 0) {
        h = oracle::sample_boolean(p("n"), p("k"), samples, seed, threads);
        o.seed = seed;
        extra["sampler"] = {{"prng", "mt19937_64"}, {"seed", seed}, {"samples", samples}, {"block", 4096}};
      } else {
        h = oracle::enumerate_boolean(p("n"), p("k"), threads);
      }
      break;
    case Family::Domino:
      h = oracle::enumerate_boards(p("m"), p("n"), threads);
      break;
    case Family::Board1n:
      h = oracle::enumerate_boards(1, p("n"), threads);
      break;
  }
  auto moments = oracle::histogram_moments(h, r_max);
  moments.family = std::string(family_id(f));
  moments.params = params;
  o.body = {{"family", std::string(family_id(f))}, {"params", params_json(params)},
            {"mode", o.seed ? "sampled" : "exhaustive"}, {"histogram", histogram_json(h)}};
  if (maj) {
    o.body["maj_histogram"] = histogram_json(*maj);
    o.body["marginals_equal"] = *maj == h;
  }
  for (auto& [k, v] : extra.items()) o.body[k] = v;
  o.body["moments"] = moments_json(moments)["moments"];
  if (maj) {
    csv << "value,inv_count,maj_count\n";
    for (const auto& [v, c] : h.counts) {
      const auto it = maj->counts.find(v);
      csv << v << "," << to_string(c) << "," << (it == maj->counts.end() ? std::string("0") : to_string(it->second))
          << "\n";
    }
  } else {
    csv << "value,count\n";
    for (const auto& [v, c] : h.counts) csv << v << "," << to_string(c) << "\n";
  }
  o.csv = csv.str();
  return o;
}

std::vector<FitSample> read_fit_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read fit data '" + path + "'");
  std::vector<FitSample> data;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("fit data line needs 'n,value': '" + line + "'");
    const std::string head = line.substr(0, comma);
    if (head == "n") continue;
    data.push_back({std::stol(head), parse_rational(line.substr(comma + 1))});
  }
  return data;
}

Output fit_command(const FamilyFlags& flags, const std::string& data_path, int order, long from, long to, int period,
                   int degree, int verify, unsigned threads) {
  FitSpec spec;
  spec.period = period;
  spec.degree = degree;
  spec.verification_points = verify;
  Json source;
  if (!data_path.empty()) {
    spec.samples = read_fit_data(data_path);
    source = {{"data", data_path}};
  } else {
    if (flags.family.empty()) throw std::invalid_argument("fit needs --family or --data");
    if (from < 1 || to < from) throw std::invalid_argument("fit needs 1 <= --from <= --to");
    const Family f = parse_family(flags.family);
    ParamMap params = flags.params(f);
    for (long n = from; n <= to; ++n) {
      params["n"] = n;
      spec.samples.push_back({n, family_moments(f, params, MomentKind::Raw, order, threads)[order]});
    }
    params.erase("n");
    source = {{"family", std::string(family_id(f))}, {"params", params_json(params)}, {"moment", order}};
  }
  Output o;
  try {
    const auto fit = fit_quasi_polynomial(spec);
    o.body = fit_json(fit);
    o.body["source"] = source;
    o.body["verified"] = true;
    std::ostringstream csv;
    csv << "residue,polynomial\n";
    for (int j = 0; j < fit.formula.period(); ++j) csv << j << "," << csv_field(fit.formula.branch(j).to_string()) << "\n";
    o.csv = csv.str();
  } catch (const VerificationError& e) {
    o.body = {{"source", source},
              {"verified", false},
              {"error", e.what()},
              {"residue", e.residue()},
              {"point", e.point()},
              {"provenance", {{"period", period}, {"degree", degree}}}};
    o.csv = "residue,point,error\n" + std::to_string(e.residue()) + "," + std::to_string(e.point()) + "," +
            csv_field(e.what()) + "\n";
    o.exit_code = kExitVerification;
  }
  return o;
}

Output identities_command(int r_max) {
  const auto rows = boolean::identity_battery(r_max);
  const bool all = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.holds; });
  Output o;
  o.body = {{"r_max", r_max}, {"rows", identities_json(rows)}, {"all_hold", all}};
  std::ostringstream csv;
  csv << "r,t,value,expected,holds\n";
  for (const auto& r : rows)
    csv << r.r << "," << r.t << "," << to_string(r.value) << "," << to_string(r.expected) << ","
        << (r.holds ? "true" : "false") << "\n";
  o.csv = csv.str();
  o.exit_code = all ? kExitOk : kExitVerification;
  return o;
}

Output approx_h_command(int n, int k, std::size_t max_degree) {
  const auto h = boolean::approx_h(n, k, max_degree);
  const Rational mean_x = boolean::eval_at(boolean::k_first_moment(k), n);
  const Rational var_x = boolean::eval_at(boolean::k_variance(k), n);
  Output o;
  o.body = {{"n", n},
            {"k", k},
            {"p", to_string(h.p)},
            {"mean_y", to_string(h.mean)},
            {"variance_y", to_string(h.variance)},
            {"mean_x", to_string(mean_x)},
            {"variance_x", to_string(var_x)}};
  if (h.pgf) o.body["pgf"] = polynomial_json(*h.pgf);
  std::ostringstream csv;
  csv << "quantity,value\n";
  csv << "p," << to_string(h.p) << "\nmean_y," << to_string(h.mean) << "\nvariance_y," << to_string(h.variance)
      << "\nmean_x," << to_string(mean_x) << "\nvariance_x," << to_string(var_x) << "\n";
  o.csv = csv.str();
  return o;
}

Json collect_parameters(const CLI::App* sub) {
  Json params = Json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const auto results = opt->results();
    std::string joined;
    for (const auto& r : results) joined += (joined.empty() ? "" : ",") + r;
    params[opt->get_name()] = joined;
  }
  return params;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  CLI::App app{"Exact moments, generating functions and normality checks for combinatorial statistics"};
  app.name("momentforge");
  app.require_subcommand(1);
  app.set_version_flag("--version", MOMENTFORGE_VERSION);

  Common common;
  FamilyFlags flags;
  int r_max = 4;
  int identity_r_max = 10;
  std::string grid = "10,100,1000";
  double threshold = 0.05;
  unsigned digits = 50;
  std::string n_list;
  std::string t_grid;
  double t_min = -2, t_max = 2;
  int t_points = 41;
  std::uint64_t samples = 0, seed = 1;
  std::string data_path;
  long from = 1, to = 0;
  int period = 1, degree = 0, verify = 3;
  int n_single = 0, k_single = 0;
  std::size_t max_degree = 512;
  std::string mgf_family;

  std::map<std::string, std::function<Output()>> actions;

  for (const auto& [name, kind] : std::vector<std::pair<std::string, MomentKind>>{
           {"moments", MomentKind::Raw}, {"central", MomentKind::Central}, {"binomial-moments", MomentKind::Binomial}}) {
    auto* sub = app.add_subcommand(name, "exact " + std::string(to_string(kind)) + " moments of orders 0..r");
    add_common(sub, common);
    add_family(sub, flags);
    sub->add_option("--r", r_max, "highest order")->check(CLI::Range(0, 64));
    const MomentKind k = kind;
    actions[name] = [&, k] { return moments_command(flags, k, r_max, common.threads); };
  }
  {
    auto* sub = app.add_subcommand("pgf", "exact probability generating function in q");
    add_common(sub, common);
    add_family(sub, flags);
    actions["pgf"] = [&] { return pgf_command(flags, common.threads); };
  }
  {
    auto* sub = app.add_subcommand("normality", "method-of-moments report along an n grid");
    add_common(sub, common);
    add_family(sub, flags, false);
    sub->add_option("--grid", grid, "comma-separated n values (at least 3)");
    sub->add_option("--r", r_max, "highest order")->check(CLI::Range(2, 64));
    sub->add_option("--threshold", threshold, "deviation bound at the largest n");
    sub->add_option("--digits", digits, "working precision in decimal digits")->check(CLI::Range(10u, 1000u));
    actions["normality"] = [&] { return normality_command(flags, grid, r_max, threshold, digits); };
  }
  {
    auto* sub = app.add_subcommand("mgf-limit", "G_n(e^(t/sigma)) against e^(t^2/2)");
    add_common(sub, common);
    sub->add_option("--family", mgf_family, "invmaj | board1n")->required()->check(CLI::IsMember({"invmaj", "board1n"}));
    sub->add_option("--n", n_list, "one n or a comma-separated list")->required();
    sub->add_option("--t-grid", t_grid, "comma-separated t values (overrides --t-min/--t-max/--t-points)");
    sub->add_option("--t-min", t_min);
    sub->add_option("--t-max", t_max);
    sub->add_option("--t-points", t_points)->check(CLI::Range(1, 100000));
    sub->add_option("--digits", digits, "working precision in decimal digits")->check(CLI::Range(10u, 1000u));
    actions["mgf-limit"] = [&] { return mgf_command(mgf_family, n_list, t_grid, t_min, t_max, t_points, digits); };
  }
  {
    auto* sub = app.add_subcommand("oracle", "exhaustive (or seeded sampled) distribution");
    add_common(sub, common);
    add_family(sub, flags);
    sub->add_option("--r", r_max, "highest moment order")->check(CLI::Range(0, 64));
    sub->add_option("--samples", samples, "boolean only: Monte Carlo sample count (0 = exhaustive)");
    sub->add_option("--seed", seed, "64-bit seed for sampling");
    actions["oracle"] = [&] { return oracle_command(flags, r_max, samples, seed, common.threads); };
  }
  {
    auto* sub = app.add_subcommand("fit", "quasi-polynomial ansatz with held-out verification");
    add_common(sub, common);
    sub->add_option("--family", flags.family, "data source family (n varies over --from..--to)");
    sub->add_option("--m", flags.m);
    sub->add_option("--c", flags.c);
    sub->add_option("--k", flags.k);
    sub->add_option("--moment", r_max, "raw moment order to fit")->check(CLI::Range(0, 64));
    sub->add_option("--from", from);
    sub->add_option("--to", to);
    sub->add_option("--data", data_path, "CSV file of n,value rows instead of a family");
    sub->add_option("--period", period, "quasi-polynomial period hypothesis")->check(CLI::Range(1, 1000));
    sub->add_option("--degree", degree, "degree bound hypothesis")->check(CLI::Range(0, 64));
    sub->add_option("--verify", verify, "minimum held-out points per residue")->check(CLI::Range(1, 1000));
    actions["fit"] = [&] { return fit_command(flags, data_path, r_max, from, to, period, degree, verify, common.threads); };
  }
  {
    auto* sub = app.add_subcommand("identities", "coefficient identities of the Boolean k=0 central moments");
    add_common(sub, common);
    sub->add_option("--r-max", identity_r_max)->check(CLI::Range(1, 40));
    actions["identities"] = [&] { return identities_command(identity_r_max); };
  }
  {
    auto* sub = app.add_subcommand("approx-h", "independence approximation H_n(q) and its moments");
    add_common(sub, common);
    sub->add_option("--n", n_single)->required()->check(CLI::Range(0, 14));
    sub->add_option("--k", k_single)->check(CLI::Range(0, 14));
    sub->add_option("--max-degree", max_degree, "expand H_n(q) only up to this degree");
    actions["approx-h"] = [&] { return approx_h_command(n_single, k_single, max_degree); };
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << MOMENTFORGE_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto* sub : app.get_subcommands())
      if (sub->parsed()) err << "run 'momentforge " << sub->get_name() << " --help' for the options\n";
    if (app.get_subcommands().empty()) err << "run 'momentforge --help' for the subcommands\n";
    return kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  Output result;
  try {
    if (common.threads == 0) common.threads = resolve_thread_count(0);
    result = actions.at(sub->get_name())();
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\nrun 'momentforge " << sub->get_name() << " --help' for the options\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\nreduce the parameters or use a closed-form subcommand\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return kExitVerification;
  }

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  Json manifest = {{"tool", "momentforge"},
                   {"version", MOMENTFORGE_VERSION},
                   {"subcommand", sub->get_name()},
                   {"parameters", collect_parameters(sub)},
                   {"seed", result.seed ? Json(*result.seed) : Json(nullptr)},
                   {"outputs", Json::array({common.out.empty() ? "stdout" : common.out})},
                   {"wall_time_seconds", seconds}};
  if (result.precision) manifest["precision_digits"] = *result.precision;

  std::string payload;
  if (common.format == "csv") {
    payload = result.csv;
    err << manifest.dump() << "\n";
    if (!common.out.empty()) {
      std::ofstream m(common.out + ".manifest.json");
      m << manifest.dump(2) << "\n";
    }
  } else {
    Json doc = {{"command", sub->get_name()}, {"manifest", manifest}};
    for (auto& [k, v] : result.body.items()) doc[k] = v;
    payload = doc.dump(2) + "\n";
  }
  if (common.out.empty()) {
    out << payload;
  } else {
    std::ofstream file(common.out);
    if (!file) {
      err << "error: cannot write '" << common.out << "'\n";
      return kExitUsage;
    }
    file << payload;
  }
  return result.exit_code;
}

}  // namespace momentforge::cli
