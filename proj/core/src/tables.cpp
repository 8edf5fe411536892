#include "qsd/tables.hpp"

#include <charconv>

#include "qsd/error.hpp"
#include "table_resources.hpp"

namespace qsd {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_int(std::string_view field) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw InvalidParameters("bad integer field '" + std::string(field) + "' in table");
  }
  return value;
}

}  // namespace

std::vector<TableRow> parse_table_tsv(std::string_view tsv, TableId table) {
  const std::size_t columns = table == TableId::kBlokhuisCalderbank ? 6 : 8;
  std::vector<TableRow> rows;
  bool header = true;
  for (std::string_view line : split(tsv, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const auto fields = split(line, '\t');
    if (fields.size() != columns) {
      throw InvalidParameters("table row has " + std::to_string(fields.size()) +
                              " columns, expected " + std::to_string(columns));
    }
    TableRow row;
    row.table = table;
    row.v = parse_int(fields[0]);
    row.k = parse_int(fields[1]);
    row.lambda = parse_int(fields[2]);
    row.y = parse_int(fields[3]);
    row.x = parse_int(fields[4]);
    if (table == TableId::kSmallerSets) {
      row.r = parse_int(fields[5]);
      row.b = parse_int(fields[6]);
    }
    row.comment = std::string(fields.back());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string_view table_resource(TableId table) {
  return table == TableId::kBlokhuisCalderbank ? resources::kBc92TableTsv
                                               : resources::kSmallTableTsv;
}

const std::vector<TableRow>& embedded_tables() {
  static const std::vector<TableRow> rows = [] {
    auto all = parse_table_tsv(table_resource(TableId::kBlokhuisCalderbank),
                               TableId::kBlokhuisCalderbank);
    auto small = parse_table_tsv(table_resource(TableId::kSmallerSets), TableId::kSmallerSets);
    all.insert(all.end(), small.begin(), small.end());
    return all;
  }();
  return rows;
}

const TableRow* find_table_row(const QsdParams& p) {
  for (const TableRow& row : embedded_tables()) {
    if (row.v == p.v() && row.k == p.k() && row.lambda == p.lambda() && row.x == p.x() &&
        row.y == p.y()) {
      return &row;
    }
  }
  return nullptr;
}

}  // namespace qsd
