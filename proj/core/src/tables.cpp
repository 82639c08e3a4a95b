#include "vgt/tables.hpp"

#include <array>
#include <sstream>
#include <utility>

#include "vgt/beta.hpp"
#include "vgt/scidec.hpp"

namespace vgt {

namespace {

struct Ref {
  unsigned k, n;
  const char* text;
};

// C_{k,n} as published (Section3 recurrence)
constexpr std::array<Ref, 27> kConstants{{
    {1, 1, "2.40e1"},    {1, 2, "3.84e2"},    {1, 3, "6.14e3"},    {1, 4, "9.83e4"},
    {1, 5, "1.57e6"},    {1, 6, "2.51e7"},    {1, 7, "4.03e8"},    {1, 8, "6.44e9"},
    {1, 9, "1.03e11"},   {1, 10, "1.65e12"},  {2, 2, "1.89e8"},    {2, 3, "1.52e17"},
    {2, 4, "1.25e29"},   {2, 5, "1.06e44"},   {2, 6, "9.15e61"},   {2, 7, "8.10e82"},
    {2, 8, "7.35e106"},  {2, 9, "6.82e133"},  {2, 10, "6.49e163"}, {3, 3, "1.36e60"},
    {3, 4, "1.00e133"},  {3, 5, "9.53e248"},  {3, 6, "1.43e418"},  {3, 7, "4.12e650"},
    {3, 8, "2.80e956"},  {3, 9, "5.50e1345"}, {3, 10, "3.81e1828"},
}};

constexpr std::array<Ref, 27> kDeltas{{
    {1, 1, "4.17e-5"},    {1, 2, "2.60e-6"},    {1, 3, "1.63e-7"},    {1, 4, "1.02e-8"},
    {1, 5, "6.36e-10"},   {1, 6, "3.97e-11"},   {1, 7, "2.48e-12"},   {1, 8, "1.55e-13"},
    {1, 9, "9.70e-15"},   {1, 10, "6.06e-16"},  {2, 2, "5.29e-13"},   {2, 3, "6.58e-22"},
    {2, 4, "7.98e-34"},   {2, 5, "9.45e-49"},   {2, 6, "1.09e-66"},   {2, 7, "1.23e-87"},
    {2, 8, "1.36e-111"},  {2, 9, "1.47e-138"},  {2, 10, "1.54e-168"}, {3, 3, "7.34e-66"},
    {3, 4, "9.96e-139"},  {3, 5, "1.05e-254"},  {3, 6, "7.01e-424"},  {3, 7, "2.43e-656"},
    {3, 8, "3.57e-962"},  {3, 9, "1.81e-1351"}, {3, 10, "2.62e-1834"},
}};

constexpr std::array<Ref, 27> kEpsilons{{
    {1, 1, "1.04e-5"},    {1, 2, "4.24e-13"},   {1, 3, "6.74e-23"},    {1, 4, "4.18e-35"},
    {1, 5, "1.01e-49"},   {1, 6, "9.61e-67"},   {1, 7, "3.56e-86"},    {1, 8, "5.14e-108"},
    {1, 9, "2.90e-132"},  {1, 10, "6.41e-159"}, {2, 2, "1.89e-37"},    {2, 3, "1.92e-86"},
    {2, 4, "1.70e-167"},  {2, 5, "7.64e-290"},  {2, 6, "1.64e-462"},   {2, 7, "1.55e-694"},
    {2, 8, "6.06e-995"},  {2, 9, "9.08e-1373"}, {2, 10, "4.87e-1837"}, {3, 3, "3.52e-284"},
    {3, 4, "1.29e-722"},  {3, 5, "1.25e-1563"}, {3, 6, "4.16e-3006"},  {3, 7, "2.75e-5289"},
    {3, 8, "9.42e-8693"}, {3, 9, "1.94e-13536"}, {3, 10, "1.24e-20180"},
}};

// |computed - published| within half a unit in the last compared digit
bool consistent_at(const Rat& computed, const SciDec& published, unsigned digits) {
  Rat ref = published.one_minus ? Rat(1) - published.value() : published.value();
  Rat tol = Rat(Int(1), Int(2)) *
            Rat(Int(1), Int::ten_pow(digits - 1));  // half-ulp in mantissa units
  Int e = published.exp10;
  Rat scale = e.sgn() >= 0 ? Rat(Int::ten_pow(static_cast<unsigned long>(e.to_long())))
                           : Rat(Int(1), Int::ten_pow(static_cast<unsigned long>((-e).to_long())));
  return (computed - ref).abs() <= tol * scale;
}

Rat rel_for_digits(unsigned digits) {
  unsigned d = digits < 6 ? 6 : digits;
  return Rat(Int(1), Int::ten_pow(d + 3));
}

// retries with tighter enclosures until every requested digit is determined
template <typename ComputeFn>
std::pair<SciDec, Enc> render_adaptive(ComputeFn&& compute, unsigned digits, bool one_minus) {
  Rat rel = rel_for_digits(digits);
  for (int attempt = 0;; ++attempt) {
    Enc enc = compute(rel);
    try {
      return {to_scidec(enc, digits, one_minus), enc};
    } catch (const precision_error&) {
      if (attempt >= 4) throw;
      rel = rel / Rat(Int::ten_pow(6));
    }
  }
}

const std::array<Ref, 27>* reference_table(TableId id) {
  switch (id) {
    case TableId::Constants: return &kConstants;
    case TableId::Deltas: return &kDeltas;
    case TableId::Epsilons:
    case TableId::Alphas:
    case TableId::AlphasRevised: return &kEpsilons;
  }
  return nullptr;
}

}  // namespace

std::string table_id_name(TableId id) {
  switch (id) {
    case TableId::Constants: return "constants";
    case TableId::Deltas: return "deltas";
    case TableId::Epsilons: return "epsilons";
    case TableId::Alphas: return "alphas";
    case TableId::AlphasRevised: return "alphas-revised";
  }
  return "?";
}

TableId table_id_from_string(const std::string& s) {
  if (s == "constants") return TableId::Constants;
  if (s == "deltas") return TableId::Deltas;
  if (s == "epsilons") return TableId::Epsilons;
  if (s == "alphas") return TableId::Alphas;
  if (s == "alphas-revised") return TableId::AlphasRevised;
  throw usage_error("unknown table id '" + s + "'");
}

std::string flag_name(CellFlag f) {
  switch (f) {
    case CellFlag::Ok: return "ok";
    case CellFlag::ErratumSuspect: return "erratum-suspect";
    case CellFlag::Overlay: return "overlay";
  }
  return "?";
}

RenderFormat render_format_from_string(const std::string& s) {
  if (s == "csv") return RenderFormat::Csv;
  if (s == "markdown") return RenderFormat::Markdown;
  throw usage_error("unknown table format '" + s + "' (expected csv or markdown)");
}

const char* published_value(TableId id, unsigned k, unsigned n) {
  const auto* table = reference_table(id);
  if (!table) return nullptr;
  for (const auto& ref : *table)
    if (ref.k == k && ref.n == n) return ref.text;
  return nullptr;
}

const TableCell& TableDoc::at(unsigned k, unsigned n) const {
  if (k < 1 || k > kmax || n < 1 || n > nmax) throw usage_error("table cell out of range");
  return cells[n - 1][k - 1];
}

TableDoc make_table(TableId id, unsigned kmax, unsigned nmax, Variant v, unsigned digits) {
  if (kmax < 1 || nmax < 1) throw domain_error("kmax and nmax must be at least 1");
  if (digits < 1) throw usage_error("at least one significant digit required");
  TableDoc doc;
  doc.id = id;
  doc.kmax = kmax;
  doc.nmax = nmax;
  doc.digits = digits;
  doc.variant = v;
  doc.cells.assign(nmax, std::vector<TableCell>(kmax));

  // the reference prints carry 3 digits; epsilon/alpha entries are only
  // reliable to 2, so disagreement is measured there
  const unsigned compare_digits =
      (id == TableId::Constants || id == TableId::Deltas) ? 3 : 2;

  for (unsigned n = 1; n <= nmax; ++n) {
    for (unsigned k = 1; k <= kmax; ++k) {
      TableCell& cell = doc.cells[n - 1][k - 1];
      if (n < k) continue;

      if (id == TableId::AlphasRevised) {
        RevisedCell rc = alpha_revised(k, n, v, rel_for_digits(digits));
        switch (rc.kind) {
          case RevisedKind::NotApplicable: continue;
          case RevisedKind::Zero:
            cell = {true, "0", "", CellFlag::Overlay};
            continue;
          case RevisedKind::Half:
            cell = {true, "1/2", "", CellFlag::Overlay};
            continue;
          case RevisedKind::Value: break;
        }
      }

      cell.populated = true;
      Rat computed_mid;
      switch (id) {
        case TableId::Constants: {
          Rat c(c_kn(k, n, k, v));
          cell.value = to_scidec(c, digits).str();
          computed_mid = c;
          break;
        }
        case TableId::Deltas: {
          auto [sd, enc] = render_adaptive(
              [&](const Rat& rel) { return delta_kn(k, n, v, rel); }, digits, false);
          cell.value = sd.str();
          computed_mid = enc.mid();
          break;
        }
        case TableId::Epsilons: {
          auto [sd, enc] = render_adaptive(
              [&](const Rat& rel) { return epsilon_kn(k, n, v, rel); }, digits, false);
          cell.value = sd.str();
          computed_mid = enc.mid();
          break;
        }
        case TableId::Alphas:
        case TableId::AlphasRevised: {
          auto [sd, enc] = render_adaptive(
              [&](const Rat& rel) { return alpha_kn(k, n, v, rel); }, digits, true);
          cell.value = sd.str();
          computed_mid = Rat(1) - enc.mid();  // compare in epsilon space
          break;
        }
      }

      // only the Section3 pipeline reproduces the reference prints
      if (v == Variant::Section3) {
        if (const char* pub = published_value(id, k, n)) {
          SciDec ref = SciDec::parse(pub);
          if (!consistent_at(computed_mid, ref, compare_digits)) {
            cell.flag = CellFlag::ErratumSuspect;
            cell.published = (id == TableId::Alphas || id == TableId::AlphasRevised)
                                 ? "1 - " + std::string(pub)
                                 : pub;
          }
        }
      }
    }
  }
  return doc;
}

std::string render(const TableDoc& doc, RenderFormat format) {
  std::ostringstream os;
  if (format == RenderFormat::Csv) {
    os << "k,n,value,flag\n";
    for (unsigned n = 1; n <= doc.nmax; ++n) {
      for (unsigned k = 1; k <= doc.kmax; ++k) {
        const TableCell& cell = doc.cells[n - 1][k - 1];
        if (!cell.populated) continue;
        os << k << "," << n << "," << cell.value << "," << flag_name(cell.flag) << "\n";
      }
    }
    return os.str();
  }

  os << "# " << table_id_name(doc.id) << " (variant=" << variant_name(doc.variant)
     << ", digits=" << doc.digits << ", vgt " << doc.tool_version << ")\n\n";
  os << "| n\\k |";
  for (unsigned k = 1; k <= doc.kmax; ++k) os << " " << k << " |";
  os << "\n|";
  for (unsigned k = 0; k <= doc.kmax; ++k) os << " --- |";
  os << "\n";
  for (unsigned n = 1; n <= doc.nmax; ++n) {
    os << "| " << n << " |";
    for (unsigned k = 1; k <= doc.kmax; ++k) {
      const TableCell& cell = doc.cells[n - 1][k - 1];
      if (!cell.populated) {
        os << " - |";
      } else if (cell.flag == CellFlag::ErratumSuspect) {
        os << " " << cell.value << " (published " << cell.published << ") [erratum-suspect] |";
      } else {
        os << " " << cell.value << " |";
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace vgt
