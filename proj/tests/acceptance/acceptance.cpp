// Acceptance suite: one PASS/FAIL line per criterion, driven through the CLI
// entry point in process. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/output.hpp"
#include "qsd/oracle.hpp"
#include "qsd/scanner.hpp"

namespace {

using qsd::cli::Json;
using Clock = std::chrono::steady_clock;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = qsd::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Collects failed checks for one criterion.
struct Checker {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      failures.push_back(s.str());
    }
  }
};

bool is_int_string(const Json& j) {
  if (!j.is_string()) return false;
  const std::string s = j.get<std::string>();
  return !s.empty() && s.find('/') == std::string::npos;
}

int report(int id, const std::string& title, double limit_s, const std::function<void(Checker&)>& body) {
  Checker c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= limit_s) {
    std::ostringstream s;
    s << "took " << secs << " s, limit " << limit_s << " s";
    c.failures.push_back(s.str());
  }
  const bool pass = c.failures.empty();
  std::cout << (pass ? "PASS" : "FAIL") << "  " << id << ". " << title << "  (" << secs * 1000.0
            << " ms, limit " << limit_s * 1000.0 << " ms)\n";
  for (const auto& n : c.notes) std::cout << "        " << n << '\n';
  for (const auto& f : c.failures) std::cout << "        " << f << '\n';
  std::cout.flush();
  return pass ? 0 : 1;
}

// -- 1 ----------------------------------------------------------------------

void witt_check(Checker& c, const CliResult& r) {
  c.eq(r.code, 0, "exit code");
  const Json j = Json::parse(r.out);
  c.eq(j["derived"]["r"], "77", "r");
  c.eq(j["derived"]["b"], "253", "b");
  const Json& g = j["block_graph"];
  c.eq(g["V"], 253, "V");
  c.eq(g["K"], "140", "K");
  c.eq(g["Lambda"], "87", "Lambda");
  c.eq(g["M"], "65", "M");
  c.eq(g["R"], "25", "R");
  c.eq(g["S"], "-3", "S");
  c.eq(g["mult_R"], 22, "mult_R");
  c.eq(g["mult_S"], 230, "mult_S");
}

// -- 5 ----------------------------------------------------------------------

void complement_suite(Checker& c) {
  const CliResult r = cli({"--format", "json", "scan", "--v-max", "60"});
  c.eq(r.code, 0, "scan exit code");
  const Json j = Json::parse(r.out);
  std::size_t checked = 0, skipped = 0;
  for (const Json& v : j["verdicts"]) {
    const Json& p = v["params"];
    const std::string name = "(" + std::to_string(p["v"].get<long>()) + "," + std::to_string(p["k"].get<long>()) +
                             "," + std::to_string(p["lambda"].get<long>()) + "," +
                             std::to_string(p["x"].get<long>()) + "," + std::to_string(p["y"].get<long>()) + ")";
    const CliResult cr = cli({"--format", "json", "complement", std::to_string(p["v"].get<long>()),
                              std::to_string(p["k"].get<long>()), std::to_string(p["lambda"].get<long>()),
                              std::to_string(p["x"].get<long>()), std::to_string(p["y"].get<long>())});
    if (cr.code != 0 && p["v"].get<long>() - 2 * p["k"].get<long>() + p["y"].get<long>() < 0) {
      ++skipped;  // complement has a negative intersection number
      continue;
    }
    c.eq(cr.code, 0, name + " complement exit code");
    const Json cj = Json::parse(cr.out);
    const Json& w = cj["verdicts"].at(0);
    c.eq(w["criteria"]["c_value"], v["criteria"]["c_value"], name + " calderbank");
    c.eq(w["criteria"]["h_value"], v["criteria"]["h_value"], name + " hobart");
    c.eq(w["status"], v["status"], name + " status");
    ++checked;
  }
  c.expect(checked > 0, "no survivors checked");
  c.notes.push_back(std::to_string(checked) + " survivors checked, " + std::to_string(skipped) +
                    " without a complement");
}

// -- 6 ----------------------------------------------------------------------

void bh_family(Checker& c) {
  const CliResult r = cli({"--format", "json", "family", "bh", "--q", "2", "--q", "4", "--q", "8", "--q", "16",
                           "--q", "32"});
  c.eq(r.code, 0, "family exit code");
  const Json j = Json::parse(r.out);
  c.eq(j["verdicts"].size(), 5u, "family size");
  for (const Json& v : j["verdicts"]) {
    const std::string q = std::to_string(v["params"]["v"].get<long>());
    c.eq(v["status"], "feasible", "v=" + q + " status");
    for (const char* f : {"r", "b"}) c.expect(is_int_string(v["derived"][f]), "v=" + q + " " + f + " integral");
    for (const char* f : {"K", "R", "S"})
      c.expect(is_int_string(v["block_graph"][f]), "v=" + q + " " + f + " integral");
    for (const char* f : {"d", "e"}) c.expect(is_int_string(v["regular_set"][f]), "v=" + q + " " + f + " integral");
    for (const char* f : {"cc", "n", "c", "h", "krein"}) {
      const Json& verdict = v["criteria"][f];
      c.expect(verdict == "pass" || verdict == "equality", "v=" + q + " criterion " + f);
    }
  }
  // q = 2 against the brute-force K8 edge design.
  const Json& q2 = j["verdicts"].at(0);
  const CliResult o = cli({"--format", "json", "oracle", "--design", "pair8"});
  c.eq(o.code, 0, "pair8 oracle exit code");
  const Json d = Json::parse(o.out)["designs"].at(0);
  c.eq(d["ok"], true, "pair8 oracle ok");
  c.eq(d["params"], q2["params"], "q=2 params vs K8");
  c.eq(d["srg"]["K"].dump(), q2["block_graph"]["K"].get<std::string>(), "q=2 K vs K8");
  c.eq(d["srg"]["Lambda"].dump(), q2["block_graph"]["Lambda"].get<std::string>(), "q=2 Lambda vs K8");
  c.eq(d["srg"]["M"].dump(), q2["block_graph"]["M"].get<std::string>(), "q=2 M vs K8");
  c.eq(d["d"].dump(), q2["regular_set"]["d"].get<std::string>(), "q=2 d vs K8");
  c.eq(d["e"].dump(), q2["regular_set"]["e"].get<std::string>(), "q=2 e vs K8");
  c.eq(std::to_string(d["r"].get<long>()), q2["derived"]["r"].get<std::string>(), "q=2 r vs K8");
  c.eq(std::to_string(d["b"].get<long>()), q2["derived"]["b"].get<std::string>(), "q=2 b vs K8");
}

// -- 7 ----------------------------------------------------------------------

void small_designs(Checker& c) {
  for (const char* name : {"pair8", "632"}) {
    const CliResult r = cli({"--format", "json", "oracle", "--design", name});
    c.eq(r.code, 0, std::string(name) + " exit code");
    const Json d = Json::parse(r.out)["designs"].at(0);
    c.eq(d["ok"], true, std::string(name) + " ok");
    c.eq(d["mismatches"].size(), 0u, std::string(name) + " mismatches");
    c.eq(d["spectrum_verified"], true, std::string(name) + " spectrum");
    c.expect(!d["complement"].is_null(), std::string(name) + " complement verified");
  }
  const Json p8 = Json::parse(cli({"--format", "json", "oracle", "--design", "pair8"}).out)["designs"].at(0);
  c.eq(p8["srg"]["K"], 12, "pair8 K");
  c.eq(p8["srg"]["Lambda"], 6, "pair8 Lambda");
  c.eq(p8["srg"]["M"], 4, "pair8 M");
  c.eq(p8["mult_R"], 7, "pair8 mult_R");
  c.eq(p8["mult_S"], 20, "pair8 mult_S");
  c.eq(p8["d"], 6, "pair8 d");
  c.eq(p8["e"], 2, "pair8 e");
  c.eq(p8["triple_sums"]["A"], 42, "pair8 A");
  c.eq(p8["triple_sums"]["B"], 0, "pair8 B");
  c.eq(p8["triple_sums"]["C"], 0, "pair8 C");
  const Json d6 = Json::parse(cli({"--format", "json", "oracle", "--design", "632"}).out)["designs"].at(0);
  c.eq(d6["srg"]["K"], 3, "632 K");
  c.eq(d6["srg"]["Lambda"], 0, "632 Lambda");
  c.eq(d6["srg"]["M"], 1, "632 M");
  c.eq(d6["mult_R"], 5, "632 mult_R");
  c.eq(d6["mult_S"], 4, "632 mult_S");
  c.eq(d6["d"], 2, "632 d");
  c.eq(d6["e"], 1, "632 e");
  c.eq(d6["triple_sums"]["A"], 20, "632 A");
  c.eq(d6["triple_sums"]["B"], 10, "632 B");
  c.eq(d6["triple_sums"]["C"], 0, "632 C");
  c.eq(d6["n_slack"], "100", "632 n_slack");
  c.eq(d6["c_value"], "4", "632 c_value");
  c.eq(d6["h_value"], "16/27", "632 h_value");
}

}  // namespace

int main() {
  int failed = 0;

  failed += report(1, "S(4,7,23) parameters via check", 0.001, [](Checker& c) {
    witt_check(c, cli({"--format", "json", "check", "23", "7", "21", "3", "1"}));
  });
  // Same content in text form (not timed against the 1 ms budget above).
  {
    const CliResult t = cli({"check", "23", "7", "21", "3", "1"});
    if (t.out.find("140^1 25^22 (-3)^230") == std::string::npos) {
      std::cout << "        text spectrum line missing\n";
      ++failed;
    }
  }

  failed += report(2, "Witt design oracle", 30.0, [](Checker& c) {
    const CliResult r = cli({"--format", "json", "oracle", "--design", "witt"});
    c.eq(r.code, 0, "exit code");
    const Json d = Json::parse(r.out)["designs"].at(0);
    c.eq(d["ok"], true, "ok");
    c.eq(d["mismatches"].size(), 0u, "mismatches");
    c.eq(d["v"], 23, "v");
    c.eq(d["b"], 253, "b");
    c.eq(d["r"], 77, "r");
    c.eq(d["lambda"], 21, "lambda");
    c.eq(d["intersection_sizes"], Json::parse("[1,3]"), "intersections");
    c.eq(d["srg"]["V"], 253, "V");
    c.eq(d["srg"]["K"], 140, "K");
    c.eq(d["srg"]["Lambda"], 87, "Lambda");
    c.eq(d["srg"]["M"], 65, "M");
    c.eq(d["spectrum_verified"], true, "spectrum");
    c.eq(d["d"], 60, "d");
    c.eq(d["e"], 35, "e");
    c.eq(d["triple_sums"]["A"], 462, "A");
    c.eq(d["triple_sums"]["B"], 2310, "B");
    c.eq(d["triple_sums"]["C"], 9240, "C");
    c.eq(d["n_slack"], "0", "N equality");
    c.eq(d["c_value"], "0", "C equality");
    c.eq(d["h_value"], "0", "H equality");
    c.eq(d["is_3design"], true, "3-design");
  });

  failed += report(3, "Table reproduction", 1.0, [](Checker& c) {
    const CliResult r = cli({"--format", "json", "tables"});
    c.eq(r.code, 0, "exit code");
    const Json j = Json::parse(r.out);
    c.eq(j["rows"].size(), 14u, "row count");
    int shrikhande = 0;
    for (const Json& row : j["rows"]) {
      const std::string name = std::to_string(row["v"].get<long>());
      // r = lambda(v-1)/(k-1), b = vr/k, evaluated here in integers.
      const long v = row["v"], k = row["k"], l = row["lambda"];
      const bool divisible = (l * (v - 1)) % (k - 1) == 0;
      c.expect(divisible, name + " r integral");
      const long rr = l * (v - 1) / (k - 1);
      c.expect((v * rr) % k == 0, name + " b integral");
      c.eq(row["r"], std::to_string(rr), name + " r");
      c.eq(row["b"], std::to_string(v * rr / k), name + " b");
      if (!row["printed_r"].is_null()) c.eq(row["printed_r"].get<long>(), rr, name + " printed r");
      if (!row["printed_b"].is_null()) c.eq(row["printed_b"].get<long>(), v * rr / k, name + " printed b");
      c.eq(row["arithmetic_ok"], true, name + " arithmetic");
      c.eq(row["inequalities_pass"], true, name + " (N),(C),(H)");
      for (const char* f : {"n", "c", "h"}) c.eq(row["verdict"]["criteria"][f], "pass", name + " " + f);
      if (row["shrikhande_excluded"].get<bool>()) {
        ++shrikhande;
        c.eq(v, 5292L, "Shrikhande row");
        c.eq(row["verdict"]["status"], "externally-excluded", "ARD row status");
      }
    }
    c.eq(shrikhande, 1, "Shrikhande exclusions");
  });

  failed += report(4, "Equivalence chain, seed 42, 10000 samples", 60.0, [](Checker& c) {
    const CliResult r = cli({"--format", "json", "equivalence", "--seed", "42", "--samples", "10000"});
    c.eq(r.code, 0, "exit code");
    const Json j = Json::parse(r.out);
    c.eq(j["samples"], 10000, "samples");
    c.eq(j["failures"], 0, "failures");
    c.eq(j["grid_mismatches"], 0, "grid mismatches");
    c.expect(j["grid_points"].get<long>() > 0, "grid evaluated");
  });

  failed += report(5, "Complement invariance over scan --v-max 60", 60.0, complement_suite);

  failed += report(6, "Blokhuis-Haemers family q = 2..32", 1.0, bh_family);

  failed += report(7, "Pair design and 2-(6,3,2) oracles", 1.0, small_designs);

  failed += report(8, "Deterministic scan output", 60.0, [](Checker& c) {
    const CliResult a = cli({"--format", "json", "scan", "--v-max", "40"});
    const CliResult b = cli({"--format", "json", "scan", "--v-max", "40"});
    const CliResult t1 = cli({"--format", "json", "--threads", "1", "scan", "--v-max", "40"});
    const CliResult t8 = cli({"--format", "json", "--threads", "8", "scan", "--v-max", "40"});
    c.eq(a.code, 0, "exit code");
    c.expect(a.out == b.out, "two runs differ");
    c.expect(t1.out == t8.out, "--threads 1 and --threads 8 differ");
    c.expect(a.out == t1.out, "default and --threads 1 differ");
    c.expect(!Json::parse(a.out)["verdicts"].empty(), "no survivors");
  });

  std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
