#include "qsd/scanner.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "parallel.hpp"
#include "qsd/error.hpp"

namespace qsd {
namespace {

constexpr std::array<std::pair<Filter, std::string_view>, 9> kFilterNames{{
    {Filter::kIntegrality, "integrality"},
    {Filter::kSrgIntegrality, "srg-integrality"},
    {Filter::kRegularSetIntegrality, "regular-set-integrality"},
    {Filter::kCalderbankCowen, "CC"},
    {Filter::kNeumaier, "N"},
    {Filter::kCalderbank, "C"},
    {Filter::kHobart, "H"},
    {Filter::kKrein, "Krein"},
    {Filter::kShrikhande, "Shrikhande"},
}};

constexpr std::int64_t kMaxScanV = 100000;

std::string shrikhande_citation(const ArdParams& a, bool of_complement) {
  return std::string(of_complement ? "complement " : "") + "ARD(" + std::to_string(a.n) + "," +
         std::to_string(a.t) +
         "): Shrikhande, n = 2 (mod 4) with a prime = 3 (mod 4) in the squarefree part of n";
}

}  // namespace

std::string_view to_string(Filter f) {
  for (const auto& [filter, name] : kFilterNames) {
    if (filter == f) return name;
  }
  return "?";
}

std::optional<Filter> parse_filter(std::string_view name) {
  for (const auto& [filter, known] : kFilterNames) {
    if (known == name) return filter;
  }
  return std::nullopt;
}

FilterSet all_filters() {
  FilterSet s;
  for (const auto& entry : kFilterNames) s.insert(entry.first);
  return s;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kFeasible:
      return "feasible";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kExternallyExcluded:
      return "externally-excluded";
  }
  return "?";
}

FeasibilityVerdict classify(const QsdParams& p, const FilterSet& filters) {
  const DerivedParams d = derive_params(p);
  FeasibilityVerdict out{p, d, std::nullopt, std::nullopt, evaluate_criteria(p, d),
                         Status::kInfeasible, {}, {}};
  const CriterionReport& rep = out.report;
  auto on = [&](Filter f) { return filters.contains(f); };
  auto fail = [&](std::string_view filter, std::string detail) {
    out.reasons.push_back({std::string(filter), std::move(detail)});
  };

  if (!d.integral && on(Filter::kIntegrality)) {
    fail(to_string(Filter::kIntegrality), "r=" + to_string(d.r) + " b=" + to_string(d.b));
  }
  if (d.integral) {
    if (d.b <= p.v()) {
      fail("block-graph", "b=" + to_string(d.b) + " <= v=" + std::to_string(p.v()));
    } else {
      const SrgParams& s = out.srg.emplace(block_graph_params(p, d));
      if (s.K == 0) fail("block-graph", "K=0: intersection number x never occurs");
      if (s.V - s.K - 1 == 0) fail("block-graph", "b-K-1=0: intersection number y never occurs");
      if (on(Filter::kSrgIntegrality)) {
        std::string bad;
        for (const auto& [name, value] :
             {std::pair<const char*, const Rational*>{"K", &s.K}, {"R", &s.R}, {"S", &s.S},
              {"Lambda", &s.Lambda}, {"M", &s.M}}) {
          if (!is_integer(*value)) bad += std::string(bad.empty() ? "" : " ") + name + "=" + to_string(*value);
        }
        if (!bad.empty()) fail(to_string(Filter::kSrgIntegrality), "non-integral " + bad);
        if (!(s.K > s.R && s.R > s.S)) {
          fail(to_string(Filter::kSrgIntegrality),
               "eigenvalues not ordered K > R > S: " + spectrum_string(s));
        }
      }
      const RegularSetParams& rs = out.regular_set.emplace(regular_set_params(p, d));
      if (on(Filter::kRegularSetIntegrality)) {
        if (!is_integer(rs.degree) || !is_integer(rs.nexus)) {
          fail(to_string(Filter::kRegularSetIntegrality),
               "d=" + to_string(rs.degree) + " e=" + to_string(rs.nexus));
        } else if (rs.degree < 0 || rs.degree > rs.size - 1 || rs.nexus < 0 ||
                   rs.nexus > rs.size) {
          fail(to_string(Filter::kRegularSetIntegrality),
               "d=" + to_string(rs.degree) + " e=" + to_string(rs.nexus) + " out of range for r=" +
                   std::to_string(rs.size));
        }
      }
    }
  }
  if (on(Filter::kCalderbankCowen) && rep.cc_slack != 0) {
    fail(to_string(Filter::kCalderbankCowen),
         "slack=" + to_string(rep.cc_slack) +
             (sign(rep.cc_slack) > 0 ? " (strict: not a 2-design)" : " (violated)"));
  }
  if (on(Filter::kNeumaier) && rep.n_verdict == Verdict::kFail) {
    fail(to_string(Filter::kNeumaier), "n_slack=" + to_string(rep.neumaier.slack));
  }
  if (on(Filter::kCalderbank) && rep.c_verdict == Verdict::kFail) {
    fail(to_string(Filter::kCalderbank), "c_value=" + to_string(rep.c_value));
  }
  if (on(Filter::kHobart) && rep.h_verdict == Verdict::kFail) {
    fail(to_string(Filter::kHobart), "h_value=" + to_string(*rep.h_value));
  }
  if (on(Filter::kKrein) && rep.krein_verdict == Verdict::kFail) {
    fail(to_string(Filter::kKrein), "krein_margin=" + to_string(rep.krein->margin()));
  }

  // External exclusions, for p and for its complement.
  if (on(Filter::kShrikhande) && rep.ard && rep.shrikhande == ShrikhandeVerdict::kExcluded) {
    out.citations.push_back(shrikhande_citation(*rep.ard, false));
  }
  for (const auto& c : rep.external_citations) out.citations.push_back(c);
  if (d.integral) {
    try {
      const QsdParams comp = complement(p, d).first;
      if (on(Filter::kShrikhande)) {
        if (auto a = detect_ard(comp); a && shrikhande_ard(*a) == ShrikhandeVerdict::kExcluded) {
          out.citations.push_back(shrikhande_citation(*a, true));
        }
      }
      if (const TableRow* row = find_table_row(comp); row && !row->comment.empty()) {
        out.citations.push_back("complement " + comp.to_string() + ": " + row->comment);
      }
    } catch (const Error&) {
      // No valid complement, nothing to inherit.
    }
  }

  if (!out.reasons.empty()) {
    out.status = Status::kInfeasible;
  } else if (!out.citations.empty()) {
    out.status = Status::kExternallyExcluded;
  } else {
    out.status = Status::kFeasible;
  }
  return out;
}

namespace {

void validate(const ScanRange& range) {
  if (range.v_min < 4) throw InvalidParameters("scan needs v_min >= 4");
  if (range.v_max > kMaxScanV) {
    throw InvalidParameters("scan supports v_max <= " + std::to_string(kMaxScanV));
  }
  if (range.filters.empty()) throw InvalidParameters("scan needs at least one filter");
  if (range.lambda_max < 1) throw InvalidParameters("scan needs lambda_max >= 1");
}

bool solves_lambda(const ScanRange& range) {
  return range.survivors_only && range.filters.contains(Filter::kCalderbankCowen);
}

std::int64_t k_limit(const ScanRange& range, std::int64_t v) {
  std::int64_t k_hi = range.canonical_half ? v / 2 : v - 1;
  if (range.k_max) k_hi = std::min(k_hi, *range.k_max);
  return k_hi;
}

// The unique lambda at which Calderbank-Cowen holds with equality, if it is a
// positive integer. b = D/(D-N) with T = N/D, and lambda = b k(k-1)/(v(v-1)).
std::optional<std::int64_t> lambda_from_cc(std::int64_t v, std::int64_t k, std::int64_t x,
                                           std::int64_t y) {
  __extension__ typedef __int128 i128;
  const i128 kk = static_cast<i128>(k) * (v - k);
  const i128 num = kk * ((v - 1) * (2 * k - x - y) - kk);
  const i128 den = static_cast<i128>(v) * (v - 1) * (k - x) * (k - y);
  const i128 gap = den - num;
  if (gap <= 0) return std::nullopt;  // T >= 1: no positive b gives equality
  const i128 top = den * k * (k - 1);
  const i128 bottom = gap * v * (v - 1);
  if (top % bottom != 0) return std::nullopt;
  const i128 lambda = top / bottom;
  if (lambda < 1 || lambda > INT64_MAX) return std::nullopt;
  return static_cast<std::int64_t>(lambda);
}

std::vector<FeasibilityVerdict> scan_one_v(const ScanRange& range, std::int64_t v) {
  std::vector<FeasibilityVerdict> out;
  const std::int64_t k_hi = k_limit(range, v);
  auto consider = [&](std::int64_t k, std::int64_t lambda, std::int64_t x, std::int64_t y) {
    FeasibilityVerdict verdict = classify(QsdParams::make(v, k, lambda, x, y), range.filters);
    if (!range.survivors_only || verdict.survives()) out.push_back(std::move(verdict));
  };
  for (std::int64_t k = 2; k <= k_hi; ++k) {
    if (solves_lambda(range)) {
      for (std::int64_t x = 1; x < k; ++x) {
        for (std::int64_t y = 0; y < x; ++y) {
          const auto lambda = lambda_from_cc(v, k, x, y);
          if (lambda && *lambda <= range.lambda_max) consider(k, *lambda, x, y);
        }
      }
    } else {
      for (std::int64_t lambda = 1; lambda <= range.lambda_max; ++lambda) {
        for (std::int64_t x = 1; x < k; ++x) {
          for (std::int64_t y = 0; y < x; ++y) consider(k, lambda, x, y);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.params < b.params; });
  return out;
}

}  // namespace

std::size_t count_candidates(const ScanRange& range) {
  validate(range);
  const bool solved = solves_lambda(range);
  std::size_t total = 0;
  for (std::int64_t v = range.v_min; v <= range.v_max; ++v) {
    for (std::int64_t k = 2; k <= k_limit(range, v); ++k) {
      const auto pairs = static_cast<std::size_t>(k * (k - 1) / 2);
      total += solved ? pairs : pairs * static_cast<std::size_t>(range.lambda_max);
      if (total > range.candidate_cap) return total;
    }
  }
  return total;
}

std::vector<FeasibilityVerdict> scan(const ScanRange& range) {
  const std::size_t candidates = count_candidates(range);
  if (candidates > range.candidate_cap) {
    throw ResourceLimit("scan would examine more than " + std::to_string(range.candidate_cap) +
                        " candidates; narrow the range or lower lambda_max");
  }
  if (range.v_max < range.v_min) return {};
  const auto n = static_cast<std::size_t>(range.v_max - range.v_min + 1);
  std::vector<std::vector<FeasibilityVerdict>> per_v(n);
  // Largest v first: those carry most of the work.
  detail::parallel_for(n, range.threads, [&](std::size_t i) {
    const std::size_t slot = n - 1 - i;
    per_v[slot] = scan_one_v(range, range.v_min + static_cast<std::int64_t>(slot));
  });
  std::vector<FeasibilityVerdict> out;
  for (auto& chunk : per_v) {
    for (auto& verdict : chunk) out.push_back(std::move(verdict));
  }
  return out;
}

TableReport reproduce_tables() {
  TableReport report;
  for (const TableRow& row : embedded_tables()) {
    const QsdParams p = row.params();
    TableCheck check{row, p, derive_params(p), classify(p)};
    const std::string tag = p.to_string();
    auto fail = [&](const std::string& what) { report.failures.push_back(tag + ": " + what); };

    if (row.r && check.derived.r != *row.r) {
      check.printed_rb_match = false;
      fail("r=" + to_string(check.derived.r) + " but printed " + std::to_string(*row.r));
    }
    if (row.b && check.derived.b != *row.b) {
      check.printed_rb_match = false;
      fail("b=" + to_string(check.derived.b) + " but printed " + std::to_string(*row.b));
    }

    const FeasibilityVerdict& fv = check.verdict;
    check.arithmetic_ok = check.derived.integral && fv.srg && fv.srg->all_integral() &&
                          fv.regular_set && is_integer(fv.regular_set->degree) &&
                          is_integer(fv.regular_set->nexus);
    if (!check.arithmetic_ok) fail("r, b, block graph or regular set not integral");

    const CriterionReport& rep = fv.report;
    check.inequalities_pass = rep.n_verdict != Verdict::kFail &&
                                rep.c_verdict != Verdict::kFail && rep.h_verdict &&
                                *rep.h_verdict != Verdict::kFail;
    if (!check.inequalities_pass) fail("(N), (C) or (H) violated");
    if (fv.status == Status::kInfeasible) {
      fail("classified infeasible: " + fv.reasons.front().filter + " " + fv.reasons.front().detail);
    }

    check.shrikhande_excluded = rep.shrikhande == ShrikhandeVerdict::kExcluded;
    const bool is_ard_row = row.comment.find("Shrikhande") != std::string::npos;
    if (check.shrikhande_excluded != is_ard_row) {
      fail(is_ard_row ? "ARD(14,2) row not Shrikhande-excluded"
                      : "unexpected Shrikhande exclusion");
    }
    if (is_ard_row && (!rep.ard || rep.ard->n != 14 || rep.ard->t != 2)) {
      fail("ARD shape not detected as (14,2)");
    }
    report.rows.push_back(std::move(check));
  }
  return report;
}

}  // namespace qsd
