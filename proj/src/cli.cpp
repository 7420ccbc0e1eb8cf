#include "supercontact/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "supercontact/embedding.hpp"
#include "supercontact/expr.hpp"
#include "supercontact/verifier.hpp"

namespace supercontact {

namespace {

constexpr int kCapL = 6;
constexpr int kCapN = 8;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  int l = -1;
  int n = -1;
  bool json = false;
  bool force = false;
  std::uint64_t seed = 0;
  std::string report_path;

  Dims dims() const {
    if (l < 0 || n < 0) throw UsageError("both -l and -n are required");
    const Dims d = Dims::make(l, n);
    if (!force && (l > kCapL || n > kCapN))
      throw UsageError("resource limits exceeded: l <= " + std::to_string(kCapL) + " and n <= " + std::to_string(kCapN) +
                       " unless --force is given");
    return d;
  }
};

void write_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

void maybe_write_report(const Common& c, const nlohmann::json& j) {
  if (c.report_path.empty()) return;
  std::ofstream f(c.report_path);
  if (!f) throw UsageError("cannot write report to '" + c.report_path + "'");
  f << j.dump(2) << "\n";
}

int run_verify(const Common& c, std::ostream& out) {
  const Dims d = c.dims();
  SuiteOptions opt;
  opt.seed = c.seed;
  const Report report = run_suite(d, opt);
  const nlohmann::json j = to_json(report);
  maybe_write_report(c, j);
  if (c.json) {
    write_json(out, j);
  } else {
    out << "verification suite for R^{" << 2 * d.l + 1 << "|" << d.n << "} (l=" << d.l << ", n=" << d.n
        << ", seed=" << c.seed << ")\n";
    out << "dim spo = " << report.dim_spo << ", dim quadratic = " << report.dim_quadratic << "\n";
    std::size_t passed = 0;
    for (const auto& chk : report.checks) {
      out << (chk.passed ? "[PASS] " : "[FAIL] ") << chk.name << " (" << chk.elapsed_ms << " ms)\n";
      if (!chk.passed) out << "       " << chk.details << "\n";
      passed += chk.passed ? 1 : 0;
    }
    out << passed << "/" << report.checks.size() << " checks passed\n";
  }
  return report.all_passed ? kExitOk : kExitVerificationFailed;
}

int run_xf(const Common& c, const std::string& expr, std::ostream& out) {
  const Dims d = c.dims();
  const ContactContext ctx = make_context(d);
  const Superfunction f = parse_expr(expr, d);
  const SuperVectorField x = contact_field(ctx, f);
  const nlohmann::json j = {{"l", d.l}, {"n", d.n}, {"hamiltonian", format_expr(f)}, {"field", format_field(x)}};
  maybe_write_report(c, j);
  if (c.json)
    write_json(out, j);
  else
    out << format_field(x) << "\n";
  return kExitOk;
}

int run_bracket(const Common& c, const std::string& fs, const std::string& gs, std::ostream& out) {
  const Dims d = c.dims();
  const ContactContext ctx = make_context(d);
  const Superfunction f = parse_expr(fs, d);
  const Superfunction g = parse_expr(gs, d);
  const Superfunction h = lagrange_bracket(ctx, f, g);
  const nlohmann::json j = {
      {"l", d.l}, {"n", d.n}, {"f", format_expr(f)}, {"g", format_expr(g)}, {"bracket", format_expr(h)}};
  maybe_write_report(c, j);
  if (c.json)
    write_json(out, j);
  else
    out << format_expr(h) << "\n";
  return kExitOk;
}

void print_matrix(std::ostream& out, const GradedMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j) {
      cells.push_back(to_short_string(m.entry(i, j)));
      width = std::max(width, cells.back().size());
    }
  std::size_t k = 0;
  for (int i = 1; i <= m.size(); ++i) {
    out << "  ";
    for (int j = 1; j <= m.size(); ++j) {
      if (j == 2 * m.dims().l + 3) out << " |";
      const std::string& s = cells[k++];
      out << " " << std::string(width - s.size(), ' ') << s;
    }
    out << "\n";
  }
}

int run_basis(const Common& c, std::ostream& out) {
  const Dims d = c.dims();
  const auto basis = spo_basis(d);
  const nlohmann::json j = basis_to_json(basis);
  maybe_write_report(c, j);
  if (c.json) {
    write_json(out, j);
    return kExitOk;
  }
  out << "spo(" << d.matrix_size() - d.n << "|" << d.n << ") basis, " << basis.size() << " elements\n";
  for (const auto& b : basis) {
    out << to_string(b.label) << "\n";
    print_matrix(out, b.matrix);
  }
  return kExitOk;
}

int run_embed(const Common& c, const std::string& family, int i, int j_index, std::ostream& out) {
  const Dims d = c.dims();
  const ContactContext ctx = make_context(d);
  SpoBasisLabel label{};
  try {
    label = {parse_family(family), i, j_index};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!label_in_range(d, label)) throw UsageError("basis label " + to_string(label) + " out of range for " + to_string(d));
  const SuperVectorField x = embed_spo(ctx, spo_basis_matrix(d, label));
  const Superfunction h = hamiltonian_of(ctx, x);
  const nlohmann::json j = {{"family", family_name(label.family)},
                            {"i", label.i},
                            {"j", label.j},
                            {"field", format_field(x)},
                            {"hamiltonian", format_expr(h)}};
  maybe_write_report(c, j);
  if (c.json) {
    write_json(out, j);
  } else {
    out << to_string(label) << "\n";
    out << "  field:       " << format_field(x) << "\n";
    out << "  hamiltonian: " << format_expr(h) << "\n";
  }
  return kExitOk;
}

int run_table(const Common& c, std::ostream& out) {
  const Dims d = c.dims();
  const ContactContext ctx = make_context(d);
  const auto rows = correspondence_table(ctx);
  const nlohmann::json j = table_to_json(rows);
  maybe_write_report(c, j);
  if (c.json) {
    write_json(out, j);
    return kExitOk;
  }
  for (const auto& row : rows)
    out << to_string(row.label) << "  H = " << format_expr(row.hamiltonian) << "  X = " << format_field(row.field) << "\n";
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact contact supergeometry on R^{2l+1|n}: contact fields, Lagrange bracket, spo(2l+2|n)", "supercontact"};
  app.require_subcommand(1);

  Common common;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("-l", common.l, "half the even dimension minus one: R^{2l+1|n}")->check(CLI::NonNegativeNumber);
    sub->add_option("-n", common.n, "number of odd coordinates")->check(CLI::PositiveNumber);
    sub->add_flag("--json", common.json, "print JSON instead of text");
    sub->add_flag("--force", common.force, "lift the l <= 6, n <= 8 cap");
    sub->add_option("--report", common.report_path, "also write the JSON output to this file");
  };

  std::string expr_f;
  std::string expr_g;
  std::string family;
  int bi = 0;
  int bj = 0;

  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  add_common(verify);
  verify->add_option("--seed", common.seed, "seed for the randomized checks (default 0)");

  auto* xf = app.add_subcommand("xf", "print the contact vector field X_f");
  add_common(xf);
  xf->add_option("f", expr_f, "Hamiltonian superfunction")->required();

  auto* br = app.add_subcommand("bracket", "Lagrange bracket {f, g}");
  add_common(br);
  br->add_option("f", expr_f, "first superfunction")->required();
  br->add_option("g", expr_g, "second superfunction")->required();

  auto* basis = app.add_subcommand("basis", "dump the spo(2l+2|n) basis");
  add_common(basis);

  auto* embed = app.add_subcommand("embed", "embed one spo basis element as a vector field");
  add_common(embed);
  embed->add_option("family", family, "Sp1, Sp2, Sp3, OddA, OddB or O")->required();
  embed->add_option("i", bi, "first label index")->required();
  embed->add_option("j", bj, "second label index")->required();

  auto* table = app.add_subcommand("table", "full spo -> contact field correspondence table");
  add_common(table);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(common, out);
    if (xf->parsed()) return run_xf(common, expr_f, out);
    if (br->parsed()) return run_bracket(common, expr_f, expr_g, out);
    if (basis->parsed()) return run_basis(common, out);
    if (embed->parsed()) return run_embed(common, family, bi, bj, out);
    if (table->parsed()) return run_table(common, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace supercontact
