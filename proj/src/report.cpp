#include "imult/report.hpp"

namespace imult {

Json to_json(const Rational& q) { return to_fraction_string(q); }

Json to_json(const AlgNum& a) {
  Json moduli = Json::array();
  for (std::uint32_t d = 1; d <= tower_depth(a.tower()); ++d) moduli.push_back(modulus_text(a.tower(), d));
  return {{"tower", moduli}, {"rep", a.to_string()}};
}

Json to_json(const Point& p) { return {{"x", to_json(p.a)}, {"y", to_json(p.b)}}; }

Json to_json(const MultiplicityResult& r) {
  Json summands = Json::array();
  for (const auto& s : r.summands) summands.push_back({{"val", to_json(s.val)}, {"weight", s.weight}});
  Json out = {{"method", method_name(r.method)}, {"m", r.m},   {"n", r.n},
              {"r", r.r},                        {"s", r.s},   {"summands", summands},
              {"infinite", r.infinite}};
  if (r.infinite) out["value"] = "INFINITE";
  else out["value"] = r.value;
  return out;
}

Json to_json(const NewtonPolygon& poly) {
  auto pt = [](const PolygonPoint& p) { return Json::array({p.k, p.v}); };
  Json points = Json::array(), vertices = Json::array(), edges = Json::array();
  for (const auto& p : poly.points) points.push_back(pt(p));
  for (const auto& p : poly.vertices) vertices.push_back(pt(p));
  for (const auto& e : poly.edges)
    edges.push_back({{"from", pt(e.from)}, {"to", pt(e.to)}, {"slope", to_json(e.slope)}, {"length", e.length}});
  return {{"points", points},
          {"vertices", vertices},
          {"edges", edges},
          {"m", poly.m},
          {"zero_series_count", poly.zero_series_count}};
}

Json to_json(const std::vector<Branch>& branches) {
  Json out = Json::array();
  for (const auto& b : branches) {
    Json moduli = Json::array();
    for (std::uint32_t d = 1; d <= tower_depth(b.tower); ++d) moduli.push_back(modulus_text(b.tower, d));
    Json entry = {{"series", b.series.to_string()},
                  {"ramification", b.series.ramification()},
                  {"multiplicity", b.multiplicity},
                  {"conjugates", b.conjugates},
                  {"tower", moduli}};
    if (auto t = b.series.truncation_order()) entry["truncation"] = to_json(*t);
    out.push_back(std::move(entry));
  }
  return out;
}

Json to_json(const ExperimentConfig& cfg) {
  return {{"seed", cfg.seed},
          {"max_terms", cfg.max_terms},
          {"max_degree", cfg.max_degree},
          {"exponent_cap", cfg.exponent_cap},
          {"coeff_range", cfg.coeff_range},
          {"count", cfg.count},
          {"order_cap", cfg.order_cap}};
}

Json to_json(const InstanceReport& r, bool timings) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back({{"formula", v.formula}, {"lhs", to_json(v.lhs)}, {"rhs", to_json(v.rhs)}, {"ok", v.ok}});
  Json out = {{"F", r.F},
              {"G", r.G},
              {"point", to_json(r.point)},
              {"d", r.d},
              {"t", r.t},
              {"halphen", to_json(r.halphen)},
              {"oracle", to_json(r.oracle)},
              {"agree", r.agree},
              {"verdicts", verdicts},
              {"ok", r.ok()}};
  if (timings) out["millis"] = r.millis;
  return out;
}

Json to_json(const CampaignReport& r) {
  Json instances = Json::array();
  for (const auto& i : r.instances) instances.push_back(to_json(i, r.config.record_timings));
  return {{"config", to_json(r.config)},
          {"instances", instances},
          {"passed", r.passed},
          {"total", r.instances.size()},
          {"ok", r.ok()}};
}

Json to_json(const std::vector<DegenerateRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows)
    out.push_back({{"n", row.n},
                   {"F", row.F},
                   {"G", row.G},
                   {"point", row.point},
                   {"multiplicity", row.multiplicity},
                   {"bound", to_json(row.bound)},
                   {"exceeds", row.exceeds}});
  return out;
}

Json to_json(const FgReport& r) {
  Json extremal = Json::array();
  for (const auto& e : r.extremal)
    extremal.push_back({{"f", e.f}, {"g", e.g}, {"h", e.h}, {"multiplicity", e.multiplicity}});
  return {{"config", to_json(r.config)},
          {"observed_max", r.observed_max},
          {"cap", r.cap},
          {"samples", r.samples},
          {"extremal", extremal},
          {"ok", r.ok()}};
}

std::string render_report(const std::string& command, Json body) {
  Json out = {{"schema", kReportSchema}, {"command", command}, {"result", std::move(body)}};
  return out.dump(2) + "\n";
}

}  // namespace imult
