#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsd/params.hpp"

namespace qsd {

enum class TableId {
  kBlokhuisCalderbank,  // larger sets, columns v k lambda y x comment
  kSmallerSets,         // columns v k lambda y x r b comment
};

/// One row of the embedded parameter tables. Columns mirror the source tables,
/// including the literal comment string (which may be empty).
struct TableRow {
  TableId table = TableId::kBlokhuisCalderbank;
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t y = 0;
  std::int64_t x = 0;
  std::optional<std::int64_t> r;  // printed only in the smaller-sets table
  std::optional<std::int64_t> b;
  std::string comment;

  QsdParams params() const { return QsdParams::make(v, k, lambda, x, y); }
};

/// Parses a TSV resource with a header line. Throws InvalidParameters on malformed rows.
std::vector<TableRow> parse_table_tsv(std::string_view tsv, TableId table);

/// Both tables, 7 + 7 rows, in source order.
const std::vector<TableRow>& embedded_tables();

/// Raw TSV text of an embedded table.
std::string_view table_resource(TableId table);

/// Row whose parameters equal p, if any.
const TableRow* find_table_row(const QsdParams& p);

}  // namespace qsd
