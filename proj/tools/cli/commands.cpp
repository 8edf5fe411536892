#include "cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cli/output.hpp"
#include "qsd/error.hpp"

namespace qsd::cli {
namespace {

struct Globals {
  Format format = Format::kText;
  unsigned threads = 1;
};

void print_verdicts(std::ostream& out, const Globals& g, const std::vector<FeasibilityVerdict>& vs,
                    const Json& header, const std::vector<std::string>& text_header) {
  switch (g.format) {
    case Format::kJson: {
      Json j = header;
      Json arr = Json::array();
      for (const auto& v : vs) arr.push_back(verdict_json(v));
      j["verdicts"] = std::move(arr);
      out << dump(j);
      break;
    }
    case Format::kCsv:
      out << csv_header() << '\n';
      for (const auto& v : vs) out << csv_row(v) << '\n';
      break;
    case Format::kText:
      for (const auto& line : text_header) out << "# " << line << '\n';
      for (const auto& v : vs) out << verdict_line(v) << '\n';
      break;
  }
}

int exit_for(const FeasibilityVerdict& v) {
  return v.status == Status::kInfeasible ? kCriterionFailure : kOk;
}

QsdParams params_from(const std::vector<std::int64_t>& a) {
  return QsdParams::make(a.at(0), a.at(1), a.at(2), a.at(3), a.at(4));
}

// ---------------------------------------------------------------------------

int cmd_check(const Globals& g, const std::vector<std::int64_t>& args, std::ostream& out) {
  const FeasibilityVerdict v = classify(params_from(args));
  switch (g.format) {
    case Format::kJson:
      out << dump(verdict_json(v));
      break;
    case Format::kCsv:
      out << csv_header() << '\n' << csv_row(v) << '\n';
      break;
    case Format::kText:
      write_verdict_text(out, v);
      break;
  }
  return exit_for(v);
}

struct ScanOptions {
  ScanRange range;
  bool all = false;
  bool full_range = false;
  bool relax_eigen = false;
  std::vector<std::string> filters;
};

int cmd_scan(const Globals& g, ScanOptions opt, std::ostream& out) {
  ScanRange& range = opt.range;
  range.survivors_only = !opt.all;
  range.canonical_half = !opt.full_range;
  range.threads = g.threads;
  if (!opt.filters.empty()) {
    range.filters.clear();
    for (const auto& name : opt.filters) {
      const auto f = parse_filter(name);
      if (!f) throw InvalidParameters("unknown filter '" + name + "'");
      range.filters.insert(*f);
    }
  }
  if (opt.relax_eigen) range.filters.erase(Filter::kSrgIntegrality);

  const auto verdicts = scan(range);
  const bool solved = range.survivors_only && range.filters.contains(Filter::kCalderbankCowen);
  Json filters = Json::array();
  for (Filter f : range.filters) filters.push_back(std::string(to_string(f)));
  Json header;
  header["scan"] = Json{{"v_min", range.v_min},
                        {"v_max", range.v_max},
                        {"k_max", range.k_max ? Json(*range.k_max) : Json(nullptr)},
                        {"lambda_max", range.lambda_max},
                        {"lambda_mode", solved ? "solved-from-CC" : "enumerated"},
                        {"canonical_half", range.canonical_half},
                        {"survivors_only", range.survivors_only},
                        {"filters", filters}};
  header["count"] = verdicts.size();
  std::ostringstream h1, h2;
  h1 << "scan v=" << range.v_min << ".." << range.v_max
     << (range.k_max ? " k<=" + std::to_string(*range.k_max) : std::string())
     << (range.canonical_half ? " k<=v/2" : "") << " lambda<=" << range.lambda_max << " ("
     << (solved ? "lambda solved from Calderbank-Cowen equality" : "lambda enumerated") << ")";
  std::string names;
  for (Filter f : range.filters) names += (names.empty() ? "" : ",") + std::string(to_string(f));
  h2 << "filters " << names << (range.survivors_only ? "; survivors only" : "; all candidates")
     << "; " << verdicts.size() << " verdicts";
  print_verdicts(out, g, verdicts, header, {h1.str(), h2.str()});
  return kOk;
}

int cmd_tables(const Globals& g, std::ostream& out) {
  const TableReport t = reproduce_tables();
  switch (g.format) {
    case Format::kJson:
      out << dump(table_report_json(t));
      break;
    case Format::kCsv:
      out << csv_header() << ",comment\n";
      for (const auto& row : t.rows) {
        std::string comment = row.row.comment;
        if (comment.find_first_of(",\"") != std::string::npos) {
          std::string quoted = "\"";
          for (char c : comment) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
          comment = quoted + "\"";
        }
        out << csv_row(row.verdict) << ',' << comment << '\n';
      }
      break;
    case Format::kText: {
      auto print = [&](TableId id, bool with_rb) {
        out << std::setw(6) << "v" << std::setw(6) << "k" << std::setw(7) << "lambda"
            << std::setw(6) << "y" << std::setw(6) << "x";
        if (with_rb) out << std::setw(7) << "r" << std::setw(7) << "b";
        out << "  " << std::left << std::setw(21) << "status" << "comment" << std::right << '\n';
        for (const auto& row : t.rows) {
          if (row.row.table != id) continue;
          out << std::setw(6) << row.row.v << std::setw(6) << row.row.k << std::setw(7)
              << row.row.lambda << std::setw(6) << row.row.y << std::setw(6) << row.row.x;
          if (with_rb) {
            out << std::setw(7) << to_string(row.derived.r) << std::setw(7)
                << to_string(row.derived.b);
          }
          out << "  " << std::left << std::setw(21) << to_string(row.verdict.status)
              << row.row.comment << std::right << '\n';
        }
      };
      print(TableId::kBlokhuisCalderbank, false);
      out << '\n';
      print(TableId::kSmallerSets, true);
      out << '\n' << t.rows.size() << " rows, " << t.failures.size() << " arithmetic failures\n";
      for (const auto& f : t.failures) out << "FAIL " << f << '\n';
      break;
    }
  }
  return t.ok() ? kOk : kCriterionFailure;
}

int cmd_family(const Globals& g, const std::string& which, std::vector<std::int64_t> qs,
               std::int64_t n, std::int64_t t, std::ostream& out) {
  std::vector<FeasibilityVerdict> vs;
  std::vector<std::string> labels;
  if (which == "bh") {
    if (qs.empty()) qs = {2, 4, 8, 16, 32};
    for (auto q : qs) {
      vs.push_back(classify(bh_family(q)));
      labels.push_back("Blokhuis-Haemers q=" + std::to_string(q));
    }
  } else if (which == "ard") {
    vs.push_back(classify(ard_params({n, t})));
    labels.push_back("ARD(" + std::to_string(n) + "," + std::to_string(t) + ")");
  } else {
    throw InvalidParameters("family must be 'bh' or 'ard'");
  }
  if (g.format == Format::kText) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      out << "# " << labels[i] << '\n';
      write_verdict_text(out, vs[i]);
    }
  } else {
    print_verdicts(out, g, vs, Json{{"family", which}}, {});
  }
  int code = kOk;
  for (const auto& v : vs) code = std::max(code, exit_for(v));
  return code;
}

int cmd_complement(const Globals& g, const std::vector<std::int64_t>& args, std::ostream& out) {
  const QsdParams p = params_from(args);
  const auto [comp, cd] = complement(p, derive_params(p));
  const FeasibilityVerdict v = classify(comp);
  if (g.format == Format::kText) {
    out << "complement of " << p.to_string() << " is " << comp.to_string()
        << " with r'=" << to_string(cd.r) << " b'=" << to_string(cd.b) << '\n';
    write_verdict_text(out, v);
  } else {
    print_verdicts(out, g, {v}, Json{{"complement_of", params_json(p)}}, {});
  }
  return exit_for(v);
}

int cmd_equivalence(const Globals& g, std::uint64_t seed, std::size_t samples,
                    std::ostream& out) {
  const EquivalenceSummary s = run_equivalence(seed, samples, g.threads);
  if (g.format == Format::kJson) {
    out << dump(equivalence_json(seed, s));
  } else if (g.format == Format::kCsv) {
    out << "seed,samples,failures,grid_points,grid_mismatches\n"
        << seed << ',' << s.samples << ',' << s.failures << ',' << s.grid_points << ','
        << s.grid_mismatches << '\n';
  } else {
    out << "seed " << seed << ", " << s.samples << " sampled tuples, " << s.grid_points
        << " grid points\n";
    for (const auto& line : s.failure_lines) out << "FAIL " << line << '\n';
    out << s.failures + s.grid_mismatches << " failures\n";
  }
  return s.ok() ? kOk : kCriterionFailure;
}

int cmd_oracle(const Globals& g, const std::string& which, const std::string& export_dir,
               std::ostream& out) {
  std::vector<std::pair<std::string, ExplicitDesign (*)()>> builders = {
      {"pair8", [] { return build_pair_design(8); }},
      {"632", build_6_3_2},
      {"witt", build_witt_23},
  };
  if (which != "all") {
    std::erase_if(builders, [&](const auto& b) { return b.first != which; });
    if (builders.empty()) throw InvalidParameters("unknown design '" + which + "'");
  }
  bool ok = true;
  Json reports = Json::array();
  for (const auto& [name, build] : builders) {
    const ExplicitDesign d = build();
    const OracleReport r = verify_design(d);
    ok = ok && r.ok();
    if (!export_dir.empty()) {
      std::filesystem::create_directories(export_dir);
      std::ofstream(std::filesystem::path(export_dir) / (name + ".txt")) << d.to_text();
    }
    if (g.format == Format::kJson) {
      reports.push_back(oracle_json(name, r));
    } else if (g.format == Format::kCsv) {
      if (reports.empty()) {
        out << "design,v,k,lambda,x,y,b,r,V,K,Lambda,M,mult_R,mult_S,d,e,A,B,C,is_3design,ok\n";
        reports.push_back(name);
      }
      const auto& p = r.params;
      out << name << ',' << r.v << ',' << r.k << ',' << (p ? p->lambda() : -1) << ','
          << (p ? p->x() : -1) << ',' << (p ? p->y() : -1) << ',' << r.b << ',' << r.r.value_or(-1)
          << ',' << r.b << ',' << r.K.value_or(-1) << ',' << r.Lambda.value_or(-1) << ','
          << r.M.value_or(-1) << ',' << r.mult_R << ',' << r.mult_S << ','
          << r.degree.value_or(-1) << ',' << r.nexus.value_or(-1) << ',' << r.sum_one << ','
          << r.sum_lambda << ',' << r.sum_lambda_pairs << ',' << r.is_3design << ','
          << r.ok() << '\n';
    } else {
      out << "# " << name << ": " << (r.ok() ? "all counts match" : "MISMATCH") << '\n';
      if (r.params) {
        out << "design       2-" << r.params->to_string() << " b=" << r.b
            << " r=" << r.r.value_or(-1) << " intersections {" << r.params->y() << ','
            << r.params->x() << "}\n";
      }
      if (r.K) {
        out << "block graph  (" << r.b << ',' << *r.K << ',' << r.Lambda.value_or(-1) << ','
            << r.M.value_or(-1) << ") multiplicities 1," << r.mult_R << ',' << r.mult_S
            << (r.spectrum_verified ? " (annihilation check passed)" : "") << '\n';
      }
      if (r.degree) out << "regular set  d=" << *r.degree << " e=" << r.nexus.value_or(-1) << '\n';
      out << "triple sums  A=" << r.sum_one << " B=" << r.sum_lambda << " C=" << r.sum_lambda_pairs
          << " deviation=" << to_string(r.sum_squared_deviation)
          << (r.is_3design ? " (3-design)" : "") << '\n';
      out << "inequalities N=" << to_string(r.n_slack) << " C=" << to_string(r.c_value)
          << " H=" << (r.h_value ? to_string(*r.h_value) : "undefined") << '\n';
      if (r.complement_params) out << "complement   " << r.complement_params->to_string() << '\n';
      for (const auto& m : r.mismatches) out << "MISMATCH " << m << '\n';
    }
  }
  if (g.format == Format::kJson) out << dump(Json{{"designs", reports}, {"ok", ok}});
  return ok ? kOk : kCriterionFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Feasibility checks for quasisymmetric 2-design parameters"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  const std::map<std::string, Format> formats{
      {"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}};
  app.add_option("--format", g.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description("{text,csv,json}"));
  app.add_option("--threads", g.threads, "Worker threads for scan and equivalence")
      ->check(CLI::Range(1u, 1024u));

  std::vector<std::int64_t> check_args;
  auto* check = app.add_subcommand("check", "Classify one parameter set v k lambda x y");
  check->add_option("params", check_args, "v k lambda x y")->required()->expected(5);

  ScanOptions scan_opt;
  auto* scan_cmd = app.add_subcommand("scan", "Enumerate and classify parameter sets");
  scan_cmd->add_option("--v-min", scan_opt.range.v_min, "Smallest v (>= 4)");
  scan_cmd->add_option("--v-max", scan_opt.range.v_max, "Largest v")->required();
  scan_cmd->add_option("--k-max", scan_opt.range.k_max, "Largest block size");
  scan_cmd->add_option("--lambda-max", scan_opt.range.lambda_max, "Largest lambda")
      ->capture_default_str();
  scan_cmd->add_option("--cap", scan_opt.range.candidate_cap, "Candidate cap (exit 3 above)")
      ->capture_default_str();
  auto* survivors_flag = scan_cmd->add_flag("--survivors", "Print survivors only (the default)");
  scan_cmd->add_flag("--all", scan_opt.all, "Print every candidate, not only survivors")
      ->excludes(survivors_flag);
  scan_cmd->add_flag("--full-range", scan_opt.full_range, "Also enumerate k > v/2");
  scan_cmd->add_flag("--no-eigen-integrality", scan_opt.relax_eigen,
                     "Drop the integral-eigenvalue filter");
  scan_cmd->add_option("--filters", scan_opt.filters, "Comma-separated filter names")
      ->delimiter(',');

  auto* tables = app.add_subcommand("tables", "Recompute the embedded parameter tables");

  std::string family_name;
  std::vector<std::int64_t> family_q;
  std::int64_t ard_n = 14, ard_t = 2;
  auto* family = app.add_subcommand("family", "Blokhuis-Haemers (bh) or ARD (ard) parameters");
  family->add_option("which", family_name, "bh or ard")->required();
  family->add_option("--q", family_q, "Powers of two for bh (default 2,4,8,16,32)");
  family->add_option("--n", ard_n, "ARD n")->capture_default_str();
  family->add_option("--t", ard_t, "ARD t")->capture_default_str();

  std::vector<std::int64_t> comp_args;
  auto* comp = app.add_subcommand("complement", "Complementary parameters and their verdict");
  comp->add_option("params", comp_args, "v k lambda x y")->required()->expected(5);

  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  auto* equiv = app.add_subcommand("equivalence", "Verify the Hobart/Calderbank/Neumaier chain");
  equiv->add_option("--seed", seed)->capture_default_str();
  equiv->add_option("--samples", samples)->capture_default_str()->check(CLI::PositiveNumber);

  std::string oracle_design = "all";
  std::string export_dir;
  auto* oracle = app.add_subcommand("oracle", "Brute-force checks on explicit designs");
  oracle->add_option("--design", oracle_design, "pair8, 632, witt or all")->capture_default_str();
  oracle->add_option("--export", export_dir, "Write each design's block list to this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(g, check_args, out);
    if (*scan_cmd) return cmd_scan(g, scan_opt, out);
    if (*tables) return cmd_tables(g, out);
    if (*family) return cmd_family(g, family_name, family_q, ard_n, ard_t, out);
    if (*comp) return cmd_complement(g, comp_args, out);
    if (*equiv) return cmd_equivalence(g, seed, samples, out);
    if (*oracle) return cmd_oracle(g, oracle_design, export_dir, out);
  } catch (const InvalidParameters& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCriterionFailure;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qsd"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qsd::cli
