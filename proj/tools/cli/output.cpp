#include "cli/output.hpp"

#include <sstream>

namespace qsd::cli {
namespace {

std::string opt_string(const std::optional<Rational>& q) { return q ? to_string(*q) : ""; }

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string joined_reasons(const FeasibilityVerdict& v) {
  std::string s;
  for (const Reason& r : v.reasons) s += (s.empty() ? "" : "; ") + r.filter + ": " + r.detail;
  for (const auto& c : v.citations) s += (s.empty() ? "" : "; ") + std::string("cited: ") + c;
  return s;
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Json params_json(const QsdParams& p) {
  return Json{{"v", p.v()}, {"k", p.k()}, {"lambda", p.lambda()}, {"x", p.x()}, {"y", p.y()}};
}

Json verdict_json(const FeasibilityVerdict& v) {
  const CriterionReport& rep = v.report;
  Json j;
  j["params"] = params_json(v.params);
  j["derived"] = Json{{"r", rational_json(v.derived.r)},
                      {"b", rational_json(v.derived.b)},
                      {"integral", v.derived.integral}};
  if (v.srg) {
    const SrgParams& s = *v.srg;
    j["block_graph"] = Json{{"V", s.V},
                            {"K", rational_json(s.K)},
                            {"Lambda", rational_json(s.Lambda)},
                            {"M", rational_json(s.M)},
                            {"R", rational_json(s.R)},
                            {"S", rational_json(s.S)},
                            {"mult_R", s.mult_R},
                            {"mult_S", s.mult_S}};
  } else {
    j["block_graph"] = nullptr;
  }
  if (v.regular_set) {
    j["regular_set"] = Json{{"size", v.regular_set->size},
                            {"d", rational_json(v.regular_set->degree)},
                            {"e", rational_json(v.regular_set->nexus)}};
  } else {
    j["regular_set"] = nullptr;
  }

  Json c;
  c["cc_slack"] = rational_json(rep.cc_slack);
  c["cc"] = to_string(rep.cc_verdict);
  c["neumaier"] = Json{{"A", rational_json(rep.neumaier.A)},
                       {"B", rational_json(rep.neumaier.B)},
                       {"C", rational_json(rep.neumaier.C)}};
  c["n_slack"] = rational_json(rep.neumaier.slack);
  c["n"] = to_string(rep.n_verdict);
  c["c_value"] = rational_json(rep.c_value);
  c["c"] = to_string(rep.c_verdict);
  c["h_value"] = rep.h_value ? rational_json(*rep.h_value) : Json(nullptr);
  c["h"] = rep.h_verdict ? Json(to_string(*rep.h_verdict)) : Json(nullptr);
  if (rep.krein) {
    c["krein_lhs"] = rational_json(rep.krein->lhs);
    c["krein_rhs"] = rational_json(rep.krein->rhs);
    c["krein_margin"] = rational_json(rep.krein->margin());
    c["krein"] = to_string(*rep.krein_verdict);
  } else {
    c["krein_lhs"] = c["krein_rhs"] = c["krein_margin"] = c["krein"] = nullptr;
  }
  c["ard"] = rep.ard ? Json{{"n", rep.ard->n}, {"t", rep.ard->t}} : Json(nullptr);
  c["shrikhande"] = to_string(rep.shrikhande);
  c["degenerate_triple"] = rep.degenerate_triple;
  c["equivalence_applies"] = rep.equivalence_applies;
  j["criteria"] = std::move(c);

  j["status"] = to_string(v.status);
  Json reasons = Json::array();
  for (const Reason& r : v.reasons) reasons.push_back(Json{{"filter", r.filter}, {"detail", r.detail}});
  j["reasons"] = std::move(reasons);
  j["citations"] = v.citations;
  return j;
}

Json table_report_json(const TableReport& t) {
  Json rows = Json::array();
  for (const TableCheck& c : t.rows) {
    Json row;
    row["table"] = c.row.table == TableId::kBlokhuisCalderbank ? "larger" : "smaller";
    row["v"] = c.row.v;
    row["k"] = c.row.k;
    row["lambda"] = c.row.lambda;
    row["y"] = c.row.y;
    row["x"] = c.row.x;
    row["printed_r"] = c.row.r ? Json(*c.row.r) : Json(nullptr);
    row["printed_b"] = c.row.b ? Json(*c.row.b) : Json(nullptr);
    row["r"] = rational_json(c.derived.r);
    row["b"] = rational_json(c.derived.b);
    row["printed_rb_match"] = c.printed_rb_match;
    row["arithmetic_ok"] = c.arithmetic_ok;
    row["inequalities_pass"] = c.inequalities_pass;
    row["shrikhande_excluded"] = c.shrikhande_excluded;
    row["comment"] = c.row.comment;
    row["verdict"] = verdict_json(c.verdict);
    rows.push_back(std::move(row));
  }
  return Json{{"rows", std::move(rows)}, {"failures", t.failures}, {"ok", t.ok()}};
}

Json oracle_json(const std::string& name, const OracleReport& r) {
  Json j;
  j["design"] = name;
  j["v"] = r.v;
  j["b"] = r.b;
  j["k"] = r.k;
  j["lambda"] = r.lambda ? Json(*r.lambda) : Json(nullptr);
  j["r"] = r.r ? Json(*r.r) : Json(nullptr);
  j["intersection_sizes"] = r.intersection_sizes;
  j["params"] = r.params ? params_json(*r.params) : Json(nullptr);
  j["srg"] = r.K ? Json{{"V", r.b}, {"K", *r.K}, {"Lambda", r.Lambda.value_or(-1)},
                        {"M", r.M.value_or(-1)}}
                 : Json(nullptr);
  j["spectrum_verified"] = r.spectrum_verified;
  j["mult_R"] = r.mult_R;
  j["mult_S"] = r.mult_S;
  j["d"] = r.degree ? Json(*r.degree) : Json(nullptr);
  j["e"] = r.nexus ? Json(*r.nexus) : Json(nullptr);
  j["triple_sums"] = Json{{"A", r.sum_one},
                          {"B", r.sum_lambda},
                          {"C", r.sum_lambda_pairs},
                          {"squared_deviation", rational_json(r.sum_squared_deviation)}};
  j["is_3design"] = r.is_3design;
  j["n_slack"] = rational_json(r.n_slack);
  j["c_value"] = rational_json(r.c_value);
  j["h_value"] = r.h_value ? rational_json(*r.h_value) : Json(nullptr);
  j["complement"] = r.complement_params ? params_json(*r.complement_params) : Json(nullptr);
  j["mismatches"] = r.mismatches;
  j["ok"] = r.ok();
  return j;
}

Json equivalence_json(std::uint64_t seed, const EquivalenceSummary& s) {
  return Json{{"seed", seed},
              {"samples", s.samples},
              {"failures", s.failures},
              {"grid_points", s.grid_points},
              {"grid_mismatches", s.grid_mismatches},
              {"failure_lines", s.failure_lines},
              {"ok", s.ok()}};
}

std::string_view csv_header() {
  return "v,k,lambda,x,y,r,b,V,K,R,S,Lambda,M,d,e,cc_slack,n_slack,c_value,h_value,"
         "krein_margin,status,reasons";
}

std::string csv_row(const FeasibilityVerdict& v) {
  const QsdParams& p = v.params;
  const CriterionReport& rep = v.report;
  std::ostringstream out;
  out << p.v() << ',' << p.k() << ',' << p.lambda() << ',' << p.x() << ',' << p.y() << ','
      << to_string(v.derived.r) << ',' << to_string(v.derived.b) << ',';
  if (v.srg) {
    out << v.srg->V << ',' << to_string(v.srg->K) << ',' << to_string(v.srg->R) << ','
        << to_string(v.srg->S) << ',' << to_string(v.srg->Lambda) << ',' << to_string(v.srg->M)
        << ',';
  } else {
    out << ",,,,,,";
  }
  if (v.regular_set) {
    out << to_string(v.regular_set->degree) << ',' << to_string(v.regular_set->nexus) << ',';
  } else {
    out << ",,";
  }
  out << to_string(rep.cc_slack) << ',' << to_string(rep.neumaier.slack) << ','
      << to_string(rep.c_value) << ',' << opt_string(rep.h_value) << ','
      << (rep.krein ? to_string(rep.krein->margin()) : "") << ',' << to_string(v.status) << ','
      << csv_escape(joined_reasons(v));
  return out.str();
}

void write_verdict_text(std::ostream& out, const FeasibilityVerdict& v) {
  const CriterionReport& rep = v.report;
  out << "parameters   (v,k,lambda,x,y) = " << v.params.to_string() << '\n';
  out << "derived      r=" << to_string(v.derived.r) << " b=" << to_string(v.derived.b) << '\n';
  if (v.srg) {
    const SrgParams& s = *v.srg;
    out << "block graph  (V,K,Lambda,M) = (" << s.V << ',' << to_string(s.K) << ','
        << to_string(s.Lambda) << ',' << to_string(s.M) << ")\n";
    out << "spectrum     " << spectrum_string(s) << '\n';
  }
  if (v.regular_set) {
    out << "regular set  size=" << v.regular_set->size << " d=" << to_string(v.regular_set->degree)
        << " e=" << to_string(v.regular_set->nexus) << '\n';
  }
  out << "CC           slack=" << to_string(rep.cc_slack) << ' ' << to_string(rep.cc_verdict) << '\n';
  out << "N            A=" << to_string(rep.neumaier.A) << " B=" << to_string(rep.neumaier.B)
      << " C=" << to_string(rep.neumaier.C) << " slack=" << to_string(rep.neumaier.slack) << ' '
      << to_string(rep.n_verdict) << (rep.degenerate_triple ? " (degenerate: B=0)" : "") << '\n';
  out << "C            value=" << to_string(rep.c_value) << ' ' << to_string(rep.c_verdict) << '\n';
  if (rep.h_value) {
    out << "H            value=" << to_string(*rep.h_value) << ' ' << to_string(*rep.h_verdict)
        << '\n';
    out << "Krein        Q=" << to_string(rep.krein->lhs) << " bound=" << to_string(rep.krein->rhs)
        << " margin=" << to_string(rep.krein->margin()) << ' ' << to_string(*rep.krein_verdict)
        << '\n';
  } else {
    out << "H            undefined\n";
  }
  out << "Shrikhande   " << to_string(rep.shrikhande);
  if (rep.ard) out << " ARD(" << rep.ard->n << ',' << rep.ard->t << ')';
  out << '\n';
  out << "status       " << to_string(v.status) << '\n';
  for (const Reason& r : v.reasons) out << "  reason     " << r.filter << ": " << r.detail << '\n';
  for (const auto& c : v.citations) out << "  cited      " << c << '\n';
}

std::string verdict_line(const FeasibilityVerdict& v) {
  std::string line = v.params.to_string() + " r=" + to_string(v.derived.r) +
                     " b=" + to_string(v.derived.b) + " " + std::string(to_string(v.status));
  const std::string why = joined_reasons(v);
  if (!why.empty()) line += " [" + why + "]";
  return line;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qsd::cli
