#pragma once

#include <string>
#include <vector>

#include "vgt/recurrence.hpp"

namespace vgt {

inline constexpr const char* kToolVersion = "1.0.0";

enum class TableId { Constants, Deltas, Epsilons, Alphas, AlphasRevised };
std::string table_id_name(TableId id);
TableId table_id_from_string(const std::string& s);

enum class CellFlag { Ok, ErratumSuspect, Overlay };
std::string flag_name(CellFlag f);

struct TableCell {
  bool populated = false;
  std::string value;      // rendered value; exact "0"/"1/2" for overlay cells
  std::string published;  // the reference print when it disagrees, else ""
  CellFlag flag = CellFlag::Ok;
};

// Grid of rendered cells in the published layout: rows n, columns k, dashes
// where the reference tables have them.
struct TableDoc {
  TableId id = TableId::Constants;
  unsigned kmax = 3;
  unsigned nmax = 10;
  unsigned digits = 3;
  Variant variant = Variant::Section3;
  std::string tool_version = kToolVersion;
  std::vector<std::vector<TableCell>> cells;  // [n-1][k-1]

  const TableCell& at(unsigned k, unsigned n) const;
};

// Computes every populated cell. Cells whose recomputed value disagrees with
// the reference print beyond display rounding are flagged erratum-suspect
// and carry both values.
TableDoc make_table(TableId id, unsigned kmax, unsigned nmax, Variant v, unsigned digits);

enum class RenderFormat { Csv, Markdown };
RenderFormat render_format_from_string(const std::string& s);

// CSV: header "k,n,value,flag", one row per populated cell. Markdown: the
// published grid layout. Both byte-stable for fixed inputs.
std::string render(const TableDoc& doc, RenderFormat format);

// Reference prints (3 significant digits as published); nullptr when the
// cell has no published value. Alphas share the Epsilons data.
const char* published_value(TableId id, unsigned k, unsigned n);

}  // namespace vgt
