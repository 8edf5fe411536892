#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qsd/equivalence.hpp"
#include "qsd/oracle.hpp"
#include "qsd/scanner.hpp"

namespace qsd::cli {

using Json = nlohmann::ordered_json;

enum class Format { kText, kCsv, kJson };

/// Rationals are serialised as canonical "p/q" strings ("p" when q = 1).
Json rational_json(const Rational& q);

Json params_json(const QsdParams& p);
Json verdict_json(const FeasibilityVerdict& v);
Json table_report_json(const TableReport& t);
Json oracle_json(const std::string& name, const OracleReport& r);
Json equivalence_json(std::uint64_t seed, const EquivalenceSummary& s);

/// Fixed CSV column list shared by check, scan, family and complement.
std::string_view csv_header();
std::string csv_row(const FeasibilityVerdict& v);

/// Multi-line human-readable report.
void write_verdict_text(std::ostream& out, const FeasibilityVerdict& v);
/// One line: parameters, r, b, status and reasons.
std::string verdict_line(const FeasibilityVerdict& v);

/// Two-space indented dump followed by a newline. Parsing and dumping again
/// reproduces the same bytes.
std::string dump(const Json& j);

}  // namespace qsd::cli
