#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qsd/block_graph.hpp"
#include "qsd/criteria.hpp"
#include "qsd/params.hpp"
#include "qsd/tables.hpp"

namespace qsd {

enum class Filter {
  kIntegrality,            // r, b integers
  kSrgIntegrality,         // K, R, S, Lambda, M integers and K > R > S
  kRegularSetIntegrality,  // d, e integers with 0 <= d <= r-1, 0 <= e <= r
  kCalderbankCowen,        // 2-design equality
  kNeumaier,
  kCalderbank,
  kHobart,
  kKrein,
  kShrikhande,
};
std::string_view to_string(Filter f);
std::optional<Filter> parse_filter(std::string_view name);

using FilterSet = std::set<Filter>;
FilterSet all_filters();

enum class Status { kFeasible, kInfeasible, kExternallyExcluded };
std::string_view to_string(Status s);

struct Reason {
  std::string filter;  // filter name, or "block-graph" for structural degeneracy
  std::string detail;  // includes the exact failing value
};

struct FeasibilityVerdict {
  QsdParams params;
  DerivedParams derived;
  std::optional<SrgParams> srg;
  std::optional<RegularSetParams> regular_set;
  CriterionReport report;
  Status status = Status::kInfeasible;
  std::vector<Reason> reasons;          // non-empty iff kInfeasible
  std::vector<std::string> citations;   // external exclusions and table comments

  /// Not ruled out by any criterion evaluated here (feasible or externally excluded).
  bool survives() const { return status != Status::kInfeasible; }
};

/// Runs every enabled filter, in order: integrality of r and b; b > v and the block
/// graph; integrality of K, R, S, Lambda, M; integrality and range of d, e; the
/// Calderbank-Cowen equality; the signs of (N), (C), (H) and the Krein form; ARD
/// shape plus the Shrikhande exclusion. All failures are collected.
///
/// The Shrikhande exclusion and embedded-table citations are applied to the
/// complementary parameters as well, so the status is complement-invariant.
FeasibilityVerdict classify(const QsdParams& p, const FilterSet& filters = all_filters());

struct ScanRange {
  std::int64_t v_min = 4;
  std::int64_t v_max = 4;
  std::optional<std::int64_t> k_max;
  std::int64_t lambda_max = 100000;
  FilterSet filters = all_filters();
  bool canonical_half = true;  // only k <= v/2; every criterion is complement-invariant
  bool survivors_only = true;
  std::size_t candidate_cap = 20'000'000;
  unsigned threads = 1;
};

/// Enumerates (v,k,lambda,x,y) with v_min <= v <= v_max, 1 < k < v (k <= v/2 in
/// canonical-half mode, k <= k_max), 1 <= lambda <= lambda_max, 0 <= y < x < k and
/// classifies each candidate. Output is sorted by (v,k,lambda,x,y) and does not
/// depend on the thread count.
///
/// In survivors-only mode with the integrality and Calderbank-Cowen filters on,
/// lambda is solved from (v,k,x,y) instead of enumerated: Calderbank-Cowen equality
/// fixes b, hence r and lambda, so no other lambda can survive.
///
/// Throws InvalidParameters for v_min < 4 or an empty filter set and ResourceLimit
/// when the number of candidates exceeds candidate_cap.
std::vector<FeasibilityVerdict> scan(const ScanRange& range);

/// Number of candidates scan() would examine.
std::size_t count_candidates(const ScanRange& range);

struct TableCheck {
  TableRow row;
  QsdParams params;
  DerivedParams derived;
  FeasibilityVerdict verdict;
  bool printed_rb_match = true;  // vacuous for rows without printed r, b
  bool arithmetic_ok = false;    // integral r, b, block graph and regular set
  bool inequalities_pass = false;  // (N), (C), (H) hold strictly or with equality
  bool shrikhande_excluded = false;
};

struct TableReport {
  std::vector<TableCheck> rows;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Recomputes every embedded row and confirms: printed r, b agree; r, b, K, R, S,
/// Lambda, M, d, e are integral; (N), (C), (H) are not violated; exactly the
/// ARD(14,2) row is Shrikhande-excluded.
TableReport reproduce_tables();

}  // namespace qsd
