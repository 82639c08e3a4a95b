#include "vgt/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "vgt/barrier.hpp"
#include "vgt/beta.hpp"
#include "vgt/recurrence.hpp"
#include "vgt/scan.hpp"
#include "vgt/scidec.hpp"
#include "vgt/tables.hpp"

namespace vgt {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitPrecision = 4;

Rat rel_for_display(unsigned digits) {
  unsigned d = digits < 6 ? 6 : digits;
  return Rat(Int(1), Int::ten_pow(d + 3));
}

struct CommonOpts {
  unsigned digits = 3;
  std::string variant;  // empty until set; per-command default applied after parsing
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& o, const std::string& default_variant = "section3") {
  cmd->add_option("--digits", o.digits, "significant digits to display")
      ->check(CLI::Range(1u, 60u))
      ->capture_default_str();
  cmd->add_option("--variant", o.variant, "recurrence variant")
      ->check(CLI::IsMember({"section3", "appendix"}))
      ->default_str(default_variant);
}

struct Request {
  std::string command;
  CommonOpts common;
  unsigned k = 1, n = 1, i = 0;
  bool has_i = false;
  std::string c_text, eps_text, d0_text;
  bool revised = false;
  bool gap = false;
  bool exact = false;
  std::string table_id;
  unsigned kmax = 3, nmax = 10;
  std::string c_min_text = "1.001";
  std::string c_max_text = "1000000001";
  unsigned steps = 49;
  std::string spacing = "log";
};

int run_request(const Request& rq, std::ostream& out) {
  const Variant variant = variant_from_string(rq.common.variant);
  const unsigned digits = rq.common.digits;
  const Rat rel = rel_for_display(digits);

  if (rq.command == "constants") {
    unsigned i = rq.has_i ? rq.i : rq.k;
    Int c = c_kn(rq.k, rq.n, i, variant);
    if (rq.exact) {
      out << c.str() << "\n";
    } else {
      out << to_scidec(Rat(c), digits).str() << "\n";
    }
    return kExitOk;
  }
  if (rq.command == "delta") {
    out << enc_str(delta_kn(rq.k, rq.n, variant, rel), digits) << "\n";
    return kExitOk;
  }
  if (rq.command == "h-inv") {
    Rat c = parse_rational(rq.c_text);
    out << enc_str(h_inv(rq.k, rq.n, variant, c, rel), digits) << "\n";
    return kExitOk;
  }
  if (rq.command == "gamma") {
    Rat c = parse_rational(rq.c_text);
    Rat eps = parse_rational(rq.eps_text);
    out << to_scidec(gamma(c, eps, rq.n), digits).str() << "\n";
    return kExitOk;
  }
  if (rq.command == "beta") {
    Rat c = parse_rational(rq.c_text);
    BetaResult res = beta_eval(rq.k, rq.n, c, variant, rel);
    out << "beta(" << rq.k << ", " << c.str() << ", " << rq.n << ") = "
        << enc_str(res.value, digits, true) << "\n";
    for (const auto& cv : res.chains) {
      out << "  chain " << cv.chain.str() << ": " << enc_str(cv.value, digits, true)
          << "  (gamma " << enc_str(cv.gamma_term, digits) << ")\n";
    }
    out << "  argmax:";
    for (const auto& ch : res.argmax) out << " " << ch.str();
    if (res.tie) out << "  [tie at precision cap]";
    out << "\n";
    return res.tie ? kExitPrecision : kExitOk;
  }
  if (rq.command == "epsilon") {
    out << enc_str(epsilon_kn(rq.k, rq.n, variant, rel), digits) << "\n";
    return kExitOk;
  }
  if (rq.command == "alpha") {
    if (rq.revised) {
      RevisedCell cell = alpha_revised(rq.k, rq.n, variant, rel);
      switch (cell.kind) {
        case RevisedKind::NotApplicable: out << "-\n"; break;
        case RevisedKind::Zero: out << "0\n"; break;
        case RevisedKind::Half: out << "1/2\n"; break;
        case RevisedKind::Value: out << enc_str(cell.value, digits, true) << "\n"; break;
      }
      return kExitOk;
    }
    out << enc_str(alpha_kn(rq.k, rq.n, variant, rel), digits, true) << "\n";
    return kExitOk;
  }
  if (rq.command == "audit") {
    std::vector<Rat> samples;
    if (!rq.d0_text.empty()) {
      samples.push_back(parse_rational(rq.d0_text));
    } else {
      Rat dlo = delta_kn(rq.k, rq.n, variant, Rat(Int(1), Int::ten_pow(6))).lo();
      samples.push_back(dlo / Rat(10));
      samples.push_back(dlo / Rat(2));
      samples.push_back(dlo * Rat(9) / Rat(10));
    }
    for (const Rat& d0 : samples) {
      AuditReport rep = audit(rq.k, rq.n, variant, d0);
      out << (rq.common.format == "csv" ? rep.csv() : rep.text());
    }
    return kExitOk;
  }
  if (rq.command == "scan") {
    GridSpec grid;
    grid.c_min = parse_rational(rq.c_min_text);
    grid.c_max = parse_rational(rq.c_max_text);
    grid.steps = rq.steps;
    grid.spacing = spacing_from_string(rq.spacing);
    ScanResult res = scan(rq.k, rq.n, variant, grid, rel);
    if (rq.common.format == "csv") {
      out << res.csv(digits);
    } else {
      out << "scan k=" << rq.k << " n=" << rq.n << " variant=" << variant_name(variant)
          << " points=" << res.profile.size() + res.refined.size() << "\n";
      if (!res.unimodal)
        out << "  warning: profile not unimodal, refinement skipped\n";
      out << "  best c = " << res.best_c.str() << "\n";
      out << "  best beta = " << enc_str(res.best_beta, digits, true) << "\n";
    }
    if (rq.gap) out << gap_report(rq.k, rq.n, variant).text(digits);
    return kExitOk;
  }
  if (rq.command == "tables") {
    RenderFormat fmt = rq.common.format == "csv" ? RenderFormat::Csv : RenderFormat::Markdown;
    std::vector<TableId> ids;
    if (rq.table_id.empty()) {
      ids = {TableId::Constants, TableId::Deltas, TableId::Epsilons, TableId::Alphas,
             TableId::AlphasRevised};
    } else {
      ids = {table_id_from_string(rq.table_id)};
    }
    bool first = true;
    for (TableId id : ids) {
      if (!first) out << "\n";
      first = false;
      if (fmt == RenderFormat::Csv && ids.size() > 1)
        out << "# " << table_id_name(id) << "\n";
      out << render(make_table(id, rq.kmax, rq.nmax, variant, digits), fmt);
    }
    return kExitOk;
  }
  throw usage_error("unknown command '" + rq.command + "'");
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"volume-growth thresholds for vanishing homotopy groups"};
  app.set_help_flag("-h,--help", "print help");

  Request rq;

  auto* constants = app.add_subcommand("constants", "net-diameter constant C_{k,n}(i)");
  constants->add_option("--k", rq.k, "sphere dimension")->required()->check(CLI::PositiveNumber);
  constants->add_option("--n", rq.n, "manifold dimension")->required()->check(CLI::PositiveNumber);
  constants->add_option("--i", rq.i, "iteration index (default k)")
      ->check(CLI::NonNegativeNumber);
  constants->add_flag("--exact", rq.exact, "print the full integer");
  add_common(constants, rq.common);

  auto* delta = app.add_subcommand("delta", "asymptote abscissa delta_{k,n}");
  delta->add_option("--k", rq.k)->required()->check(CLI::PositiveNumber);
  delta->add_option("--n", rq.n)->required()->check(CLI::PositiveNumber);
  add_common(delta, rq.common);

  auto* hinv = app.add_subcommand("h-inv", "inverse barrier value h^-1_{k,n}(c)");
  hinv->add_option("--k", rq.k)->required()->check(CLI::PositiveNumber);
  hinv->add_option("--n", rq.n)->required()->check(CLI::PositiveNumber);
  hinv->add_option("--c", rq.c_text, "argument c > 1 (rational or decimal)")->required();
  add_common(hinv, rq.common);

  auto* gam = app.add_subcommand("gamma", "volume-defect threshold gamma(c, eps, n)");
  gam->add_option("--c", rq.c_text)->required();
  gam->add_option("--eps", rq.eps_text)->required();
  gam->add_option("--n", rq.n)->required()->check(CLI::PositiveNumber);
  add_common(gam, rq.common);

  auto* beta = app.add_subcommand("beta", "volume growth bound beta(k, c, n)");
  beta->add_option("--k", rq.k)->required()->check(CLI::PositiveNumber);
  beta->add_option("--n", rq.n)->required()->check(CLI::PositiveNumber);
  beta->add_option("--c", rq.c_text)->required();
  add_common(beta, rq.common);

  auto* eps = app.add_subcommand("epsilon", "limit defect epsilon_{k,n}");
  eps->add_option("--k", rq.k)->required()->check(CLI::PositiveNumber);
  eps->add_option("--n", rq.n)->required()->check(CLI::PositiveNumber);
  add_common(eps, rq.common);

  auto* alpha = app.add_subcommand("alpha", "threshold alpha(k,n) = 1 - epsilon_{k,n}");
  alpha->add_option("--k", rq.k)->required()->check(CLI::PositiveNumber);
  alpha->add_option("--n", rq.n)->required()->check(CLI::PositiveNumber);
  alpha->add_flag("--revised", rq.revised, "apply the revised-table overlay");
  add_common(alpha, rq.common);

  auto* scan_cmd = app.add_subcommand("scan", "minimize beta(k, c, n) over c");
  scan_cmd->add_option("--k", rq.k)->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--n", rq.n)->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--c-min", rq.c_min_text)->capture_default_str();
  scan_cmd->add_option("--c-max", rq.c_max_text)->capture_default_str();
  scan_cmd->add_option("--steps", rq.steps)->check(CLI::PositiveNumber)->capture_default_str();
  scan_cmd->add_option("--spacing", rq.spacing)
      ->check(CLI::IsMember({"linear-c", "linear-inv", "log"}))
      ->capture_default_str();
  scan_cmd->add_flag("--gap", rq.gap, "also print the gap report (k >= 2)");
  scan_cmd->add_option("--format", rq.common.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
  add_common(scan_cmd, rq.common);

  auto* audit_cmd = app.add_subcommand("audit", "identity/inequality system audit");
  audit_cmd->add_option("--k", rq.k)->required()->check(CLI::PositiveNumber);
  audit_cmd->add_option("--n", rq.n)->required()->check(CLI::PositiveNumber);
  audit_cmd->add_option("--d0", rq.d0_text, "scale d0 in (0, delta); default three samples");
  audit_cmd->add_option("--format", rq.common.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
  add_common(audit_cmd, rq.common, "appendix");

  auto* tables_cmd = app.add_subcommand("tables", "reproduce the published tables");
  tables_cmd->add_option("--id", rq.table_id,
                         "constants, deltas, epsilons, alphas or alphas-revised");
  tables_cmd->add_option("--kmax", rq.kmax)->check(CLI::PositiveNumber)->capture_default_str();
  tables_cmd->add_option("--nmax", rq.nmax)->check(CLI::PositiveNumber)->capture_default_str();
  tables_cmd->add_option("--format", rq.common.format, "markdown or csv")
      ->check(CLI::IsMember({"markdown", "csv"}))
      ->capture_default_str();
  add_common(tables_cmd, rq.common);

  app.require_subcommand(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  rq.has_i = constants->count("--i") > 0;
  for (auto* sub : {constants, delta, hinv, gam, beta, eps, alpha, scan_cmd, audit_cmd,
                    tables_cmd}) {
    if (sub->parsed()) rq.command = sub->get_name();
  }
  if (rq.common.variant.empty())
    rq.common.variant = rq.command == "audit" ? "appendix" : "section3";

  try {
    return run_request(rq, out);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const precision_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecision;
  }
}

}  // namespace vgt
