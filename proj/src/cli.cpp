#include "imult/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "imult/bounds.hpp"
#include "imult/campaign.hpp"
#include "imult/identities.hpp"
#include "imult/parser.hpp"
#include "imult/report.hpp"

namespace imult {

namespace {

struct Options {
  std::string F, G, f;
  std::string point = "0,0";
  std::vector<std::string> series;
  int form = 1;
  bool oracle = false;
  std::string order = "4";
  std::string json;
  std::uint64_t seed = 1;
  std::int64_t count = 200;
  std::int64_t t = 4;
  std::int64_t d = 3;
  std::int64_t exponent_cap = 6;
  std::int64_t degenerate = 0;
  unsigned threads = 0;
  std::uint64_t k = 1, l = 0;
};

Point to_point(const std::string& text) {
  auto [a, b] = parse_point(text);
  return {AlgNum(a), AlgNum(b)};
}

Rational order_of(const std::string& text) {
  Rational q;
  try {
    q = Rational(text);
    q.canonicalize();
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("--order", "not a rational number: " + text);
  }
  if (sgn(q) <= 0) throw CLI::ValidationError("--order", "the order must be positive");
  return q;
}

std::string pt(const PolygonPoint& p) { return "(" + std::to_string(p.k) + "," + std::to_string(p.v) + ")"; }

ExperimentConfig config_of(const Options& o) {
  ExperimentConfig cfg;
  cfg.seed = o.seed;
  cfg.count = o.count;
  cfg.max_terms = o.t;
  cfg.max_degree = o.d;
  cfg.exponent_cap = o.exponent_cap;
  cfg.threads = o.threads;
  if (o.count < 1 || o.t < 1 || o.d < 1 || o.exponent_cap < 1)
    throw Error(ErrorCode::InvalidArgument, "all caps must be positive");
  return cfg;
}

void write_json(const Options& o, const std::string& command, Json body) {
  if (o.json.empty()) return;
  std::ofstream file(o.json, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.json);
  file << render_report(command, std::move(body));
}

void cmd_imult(const Options& o, std::ostream& out) {
  auto F = parse_poly(o.F), G = parse_poly(o.G);
  Point p = to_point(o.point);
  MultiplicityResult r = o.oracle ? jet_oracle_multiplicity(F.poly, G.poly, p)
                                  : halphen_multiplicity(F.poly, G.poly, p, o.form);
  out << r.to_string() << "\n";
  write_json(o, "imult", {{"F", F.source}, {"G", G.source}, {"point", to_json(p)}, {"multiplicity", to_json(r)}});
}

void cmd_polygon(const Options& o, std::ostream& out) {
  auto F = parse_poly(o.F);
  NewtonPolygon poly = newton_polygon(F.poly);
  out << "points:";
  for (const auto& v : poly.points) out << " " << pt(v);
  out << "\n";
  out << "vertices:";
  for (const auto& v : poly.vertices) out << " " << pt(v);
  out << "\n";
  out << "edge         slope  length\n";
  for (const auto& e : poly.edges) {
    std::string span = pt(e.from) + "-" + pt(e.to);
    std::string slope = to_string(e.slope);
    out << span << std::string(span.size() < 13 ? 13 - span.size() : 1, ' ') << slope
        << std::string(slope.size() < 7 ? 7 - slope.size() : 1, ' ') << e.length << "\n";
  }
  std::int64_t positive = positive_valuation_count(F.poly);
  out << "m: " << poly.m << "\n";
  out << "positive roots: " << positive << "\n";
  Json body = to_json(poly);
  body["positive_roots"] = positive;
  body["F"] = F.source;
  write_json(o, "polygon", std::move(body));
}

void cmd_expand(const Options& o, std::ostream& out) {
  auto F = parse_poly(o.F);
  ExpansionOptions opts;
  opts.order = order_of(o.order);
  opts.all_finite = true;
  auto branches = expand_branches(F.poly, opts);
  for (const auto& b : branches) {
    out << "y = " << b.series.to_string();
    if (b.multiplicity > 1) out << "  multiplicity " << b.multiplicity;
    if (b.conjugates > 1) out << "  conjugates " << b.conjugates;
    for (std::uint32_t d = 1; d <= tower_depth(b.tower); ++d) out << "  [" << modulus_text(b.tower, d) << " = 0]";
    out << "\n";
  }
  write_json(o, "expand", {{"F", F.source}, {"order", to_json(opts.order)}, {"branches", to_json(branches)}});
}

void cmd_wronskian(const Options& o, std::ostream& out) {
  if (o.series.empty()) throw CLI::ValidationError("--series", "at least one series is needed");
  std::vector<PuiseuxSeries> list;
  for (const auto& s : o.series) list.push_back(parse_series(s));
  PuiseuxSeries W = wronskian(list);
  TruncatedValue v = W.val();
  out << "W = " << W.to_string() << "\n";
  out << "val: " << v.value.to_string() << (v.exact ? "" : " (lower bound)") << "\n";
  Json inputs = Json::array();
  for (const auto& s : list) inputs.push_back(s.to_string());
  write_json(o, "wronskian",
             {{"series", inputs}, {"wronskian", W.to_string()}, {"val", v.value.to_string()}, {"exact", v.exact}});
}

void cmd_hajos(const Options& o, std::ostream& out) {
  UniPoly f = parse_unipoly(o.f);
  std::uint64_t m = hajos_max_multiplicity(f);
  std::size_t t = f.term_count();
  out << m << "\n";
  write_json(o, "hajos", {{"f", f.to_string()}, {"max_multiplicity", m}, {"t", t}, {"cap", t == 0 ? 0 : t - 1}});
}

void cmd_rk(const Options& o, std::ostream& out) {
  std::string text = to_string(build_R(o.k));
  out << text << "\n";
  write_json(o, "rk", {{"k", o.k}, {"R", text}});
}

void cmd_rbar(const Options& o, std::ostream& out) {
  const ScaledIntPoly& r = build_Rbar(o.k, o.l);
  out << r.to_string() << "\n";
  write_json(o, "rbar",
             {{"k", o.k}, {"l", o.l}, {"numerator", to_string(r.numerator)}, {"denominator", to_json(Rational(r.denominator))}});
}

void cmd_verify(const Options& o, std::ostream& out) {
  if (!o.F.empty() || !o.G.empty()) {
    if (o.F.empty() || o.G.empty()) throw CLI::ValidationError("--F/--G", "both polynomials are needed");
    auto r = verify_bound_instance(parse_poly(o.F), parse_poly(o.G), to_point(o.point));
    out << "I_p = " << r.halphen.to_string() << " (oracle " << r.oracle.to_string() << ")\n";
    for (const auto& v : r.verdicts)
      out << (v.ok ? "ok    " : "FAIL  ") << v.formula << ": " << to_string(v.lhs) << " <= " << to_string(v.rhs) << "\n";
    write_json(o, "verify-bound", {{"instance", to_json(r, false)}});
    if (!r.ok()) throw Error(ErrorCode::HypothesisViolated, "verdict failed");
    return;
  }
  ExperimentConfig cfg = config_of(o);
  CampaignReport rep = bound_campaign(cfg);
  out << "instances: " << rep.instances.size() << "\n";
  out << "passed: " << rep.passed << "\n";
  Json body = {{"campaign", to_json(rep)}};
  if (o.degenerate > 0) {
    auto rows = degenerate_family(o.degenerate);
    for (const auto& row : rows)
      out << "n=" << row.n << "  " << row.F << ", " << row.G << " at " << row.point << ": " << row.multiplicity
          << (row.exceeds ? " > " : " <= ") << to_string(row.bound) << "\n";
    body["degenerate"] = to_json(rows);
  }
  write_json(o, "verify-bound", std::move(body));
  if (!rep.ok()) throw Error(ErrorCode::HypothesisViolated, "campaign has failing verdicts");
}

void cmd_fgplus1(const Options& o, std::ostream& out) {
  ExperimentConfig cfg = config_of(o);
  FgReport rep = fgplus1_search(cfg);
  out << "samples: " << rep.samples << "\n";
  out << "observed max: " << rep.observed_max << "\n";
  out << "cap: " << rep.cap << "\n";
  for (const auto& e : rep.extremal) out << "f = " << e.f << ", g = " << e.g << ": " << e.h << "\n";
  write_json(o, "search-fgplus1", to_json(rep));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Local intersection multiplicities of plane curves", "imult"};
  app.require_subcommand(1);

  auto add_json = [&](CLI::App* c) { c->add_option("--json", o.json, "Write a JSON report to this path"); };
  auto add_seeded = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "Random seed");
    c->add_option("--count", o.count, "Number of random instances");
    c->add_option("--t", o.t, "Monomial cap");
    c->add_option("--exponent-cap", o.exponent_cap, "Exponent cap");
    c->add_option("--threads", o.threads, "Worker threads, 0 for all cores");
  };

  auto* imult_cmd = app.add_subcommand("imult", "Intersection multiplicity at a point");
  imult_cmd->add_option("--F", o.F, "First polynomial")->required();
  imult_cmd->add_option("--G", o.G, "Second polynomial")->required();
  imult_cmd->add_option("--point", o.point, "Point a,b");
  imult_cmd->add_option("--form", o.form, "Halphen form")->check(CLI::IsMember({1, 2, 3}));
  imult_cmd->add_flag("--oracle", o.oracle, "Use the jet oracle");
  imult_cmd->add_option("--order", o.order, "Ignored; the order is chosen automatically");
  add_json(imult_cmd);

  auto* polygon_cmd = app.add_subcommand("polygon", "Newton polygon in y with x-adic valuations");
  polygon_cmd->add_option("--F", o.F, "Polynomial")->required();
  add_json(polygon_cmd);

  auto* expand_cmd = app.add_subcommand("expand", "Puiseux branches of F(x, y) = 0 at x = 0");
  expand_cmd->add_option("--F", o.F, "Polynomial")->required();
  expand_cmd->add_option("--order", o.order, "Truncation order");
  add_json(expand_cmd);

  auto* wron_cmd = app.add_subcommand("wronskian", "Wronskian of Puiseux series");
  wron_cmd->add_option("--series", o.series, "Series, repeatable")->required();
  add_json(wron_cmd);

  auto* hajos_cmd = app.add_subcommand("hajos", "Largest multiplicity of a nonzero root");
  hajos_cmd->add_option("--f", o.f, "Univariate polynomial in x")->required();
  add_json(hajos_cmd);

  auto* rk_cmd = app.add_subcommand("rk", "Root derivative polynomial R_k");
  rk_cmd->add_option("--k", o.k, "k")->required()->check(CLI::Range(1, 12));
  add_json(rk_cmd);

  auto* rbar_cmd = app.add_subcommand("rbar", "Polynomial Rbar_{k,l}");
  rbar_cmd->add_option("--k", o.k, "k")->required()->check(CLI::Range(0, 12));
  rbar_cmd->add_option("--l", o.l, "l")->required()->check(CLI::Range(0, 12));
  add_json(rbar_cmd);

  auto* verify_cmd = app.add_subcommand("verify-bound", "Check the multiplicity bound on one instance or a campaign");
  verify_cmd->add_option("--F", o.F, "First polynomial");
  verify_cmd->add_option("--G", o.G, "Second polynomial");
  verify_cmd->add_option("--point", o.point, "Point a,b with nonzero coordinates");
  verify_cmd->add_option("--d", o.d, "Degree cap for F");
  verify_cmd->add_option("--degenerate", o.degenerate, "Also tabulate the zero-coordinate families up to n");
  add_seeded(verify_cmd);
  add_json(verify_cmd);

  auto* fg_cmd = app.add_subcommand("search-fgplus1", "Multiplicities of nonzero roots of f g + 1");
  add_seeded(fg_cmd);
  add_json(fg_cmd);

  std::vector<std::string> storage{"imult"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*imult_cmd) cmd_imult(o, out);
    else if (*polygon_cmd) cmd_polygon(o, out);
    else if (*expand_cmd) cmd_expand(o, out);
    else if (*wron_cmd) cmd_wronskian(o, out);
    else if (*hajos_cmd) cmd_hajos(o, out);
    else if (*rk_cmd) cmd_rk(o, out);
    else if (*rbar_cmd) cmd_rbar(o, out);
    else if (*verify_cmd) cmd_verify(o, out);
    else if (*fg_cmd) cmd_fgplus1(o, out);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace imult
