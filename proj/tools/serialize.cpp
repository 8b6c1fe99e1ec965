#include "serialize.hpp"

namespace momentforge::cli {

Json params_json(const ParamMap& params) {
  Json j = Json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

std::string params_text(const ParamMap& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ";";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

Json moments_json(const MomentVector<Rational>& m) {
  Json entries = Json::array();
  for (int r = 0; r <= m.r_max(); ++r) entries.push_back({{"r", r}, {"value", to_string(m[r])}});
  return {{"family", m.family}, {"params", params_json(m.params)}, {"kind", std::string(to_string(m.kind))},
          {"moments", entries}};
}

Json histogram_json(const oracle::Histogram& h) {
  Json rows = Json::array();
  for (const auto& [v, c] : h.counts) rows.push_back({{"value", v}, {"count", to_string(c)}});
  return {{"total", to_string(h.total)}, {"counts", rows}};
}

Json polynomial_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (std::size_t d = 0; d < p.coefficients().size(); ++d) {
    if (sgn(p.coefficients()[d]) == 0) continue;
    coeffs.push_back({{"power", d}, {"coefficient", to_string(p.coefficients()[d])}});
  }
  return {{"symbol", p.symbol().empty() ? "q" : p.symbol()}, {"text", p.to_string()}, {"coefficients", coeffs}};
}

Json normality_json(const NormalityReport& report, unsigned digits) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"r", row.r},
                    {"n", row.n},
                    {"m_r", to_decimal(row.normalized, digits)},
                    {"target", to_string(row.target)},
                    {"deviation", to_decimal(row.deviation, digits)},
                    {"converged", report.verdict(row.r).converged}});
  }
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) {
    verdicts.push_back({{"r", v.r},
                        {"converged", v.converged},
                        {"monotone_tail", v.monotone_tail},
                        {"final_deviation", to_decimal(v.final_deviation, digits)}});
  }
  return {{"family", report.family},
          {"params", params_json(report.params)},
          {"grid", report.grid},
          {"r_max", report.r_max},
          {"threshold", report.options.threshold},
          {"rows", rows},
          {"verdicts", verdicts},
          {"all_converged", report.all_converged()}};
}

Json mgf_json(const MgfReport& report, unsigned digits) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"t", row.t},
                    {"value", to_decimal(row.value, digits)},
                    {"target", to_decimal(row.target, digits)},
                    {"deviation", to_decimal(row.deviation, digits)}});
  }
  return {{"family", report.family},
          {"n", report.n},
          {"rows", rows},
          {"max_deviation", to_decimal(report.max_deviation, digits)}};
}

Json fit_json(const FitResult& fit) {
  Json branches = Json::array();
  for (int j = 0; j < fit.formula.period(); ++j) {
    branches.push_back({{"residue", j}, {"polynomial", fit.formula.branch(j).to_string()}});
  }
  const auto& p = fit.provenance;
  return {{"formula", fit.formula.to_string()},
          {"branches", branches},
          {"canonical_period", fit.formula.canonical().period()},
          {"provenance",
           {{"period", p.period},
            {"degree", p.degree},
            {"sample_range", {p.sample_min, p.sample_max}},
            {"interpolation_points", p.interpolation_points},
            {"verification_points", p.verification_points},
            {"hypotheses", {"period " + std::to_string(p.period), "degree <= " + std::to_string(p.degree)}}}}};
}

Json identities_json(const std::vector<boolean::IdentityRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    out.push_back({{"r", row.r},
                   {"t", row.t},
                   {"value", to_string(row.value)},
                   {"expected", to_string(row.expected)},
                   {"holds", row.holds}});
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace momentforge::cli
