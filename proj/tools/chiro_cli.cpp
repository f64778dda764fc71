#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>

#include "chirocalc/chirocalc.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Owned {
  char* s = nullptr;
  ~Owned() { chc_string_free(s); }
};

class Cli {
 public:
  Cli() : ctx_(chc_context_new(), chc_context_free) {}

  chc_context* ctx() { return ctx_.get(); }

  // Prints the error for a failed call; returns the exit code.
  int check(chc_status s) {
    if (s == CHC_OK) return 0;
    std::cerr << "error: " << chc_status_name(s) << ": " << chc_last_error(ctx()) << "\n";
    return s == CHC_E_INVALID_ARGUMENT ? kExitUsage : kExitDomain;
  }

 private:
  std::unique_ptr<chc_context, void (*)(chc_context*)> ctx_;
};

bool is_file(const std::string& arg) {
  std::error_code ec;
  return std::filesystem::is_regular_file(arg, ec);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// A file argument becomes load("path"[, root]); anything else is an expression.
std::string as_expr(const std::string& arg, int root) {
  if (!is_file(arg)) return arg;
  return "load(\"" + escape(arg) + "\"" + (root >= 0 ? ", " + std::to_string(root) : "") + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chirotope composition and triangulation-counting workbench"};
  app.require_subcommand(1);

  int threads = 1, precision = 50, oracle_cap = 12;
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--precision", precision, "Significant digits for numeric analytics")->check(CLI::Range(20, 10000));
  app.add_option("--oracle-cap", oracle_cap, "Largest element count for enumeration")->check(CLI::Range(3, 22));

  std::string input;
  int root = -1;
  bool as_json = false;
  auto* axioms = app.add_subcommand("axioms", "Check the chirotope axioms");
  axioms->add_option("input", input, "Expression, .chi or .pts file")->required();
  axioms->add_option("--root", root, "Root label for a file input");
  axioms->add_flag("--json", as_json, "Print the full report as JSON");

  std::string method = "brute";
  bool drop_root = false, weak = false;
  auto* count = app.add_subcommand("count", "Count triangulations");
  count->add_option("input", input, "Expression, .chi or .pts file")->required();
  count->add_option("--method", method, "brute or poly")->check(CLI::IsMember({"brute", "poly"}));
  count->add_option("--root", root, "Root label for a file input");
  count->add_flag("--drop-root", drop_root, "Count the chirotope without its root");
  count->add_flag("--weak", weak, "Count weak triangulations");

  std::string which = "P", out_format = "json", poly_method = "poly";
  auto* poly = app.add_subcommand("poly", "Weak-triangulation polynomial P or triangulation polynomial Q");
  poly->add_option("input", input, "Expression, .chi or .pts file")->required();
  poly->add_option("--which", which, "P or Q")->check(CLI::IsMember({"P", "Q"}));
  poly->add_option("--out", out_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  poly->add_option("--method", poly_method, "poly or brute")->check(CLI::IsMember({"brute", "poly"}));
  poly->add_option("--root", root, "Root label for a file input");

  int kmax = 0;
  std::string table_format = "csv";
  auto* dc = app.add_subcommand("dc-table", "Double-circle counts against the asymptotic estimate");
  dc->add_option("--kmax", kmax, "Largest k")->required();
  dc->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::string x;
  int terms = 80;
  auto* kr = app.add_subcommand("kernel-report", "Kernel roots and closed forms against the series");
  kr->add_option("--x", x, "Rational x in (0, 1/12)")->required();
  kr->add_option("--terms", terms, "Series terms");

  std::string db, metric = "weak";
  int n = 10, width = 0, levels = 6, top = 0;
  bool lenient = false;
  auto* search = app.add_subcommand("search", "Rank Koch-chain variants seeded from an order-type database");
  search->add_option("--db", db, "Order-type database file")->required();
  search->add_option("--n", n, "Points per record");
  search->add_option("--width", width, "Coordinate width in bits (8 or 16; default by n)");
  search->add_option("--levels", levels, "Final level (3..8)");
  search->add_option("--top", top, "Rows to print (0 = all)");
  search->add_option("--metric", metric, "weak or count")->check(CLI::IsMember({"weak", "count"}));
  search->add_flag("--lenient", lenient, "Skip degenerate records instead of failing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Cli cli;
  if (int rc = cli.check(chc_set_threads(cli.ctx(), threads))) return rc;
  if (int rc = cli.check(chc_set_precision(cli.ctx(), precision))) return rc;
  if (int rc = cli.check(chc_set_oracle_cap(cli.ctx(), oracle_cap))) return rc;

  if (*axioms) {
    chc_chirotope* chi = nullptr;
    const chc_status s = is_file(input) ? chc_chirotope_load(cli.ctx(), input.c_str(), root, &chi)
                                        : chc_chirotope_eval(cli.ctx(), input.c_str(), &chi);
    if (int rc = cli.check(s)) return rc;
    std::unique_ptr<chc_chirotope, void (*)(chc_chirotope*)> guard(chi, chc_chirotope_free);
    int ok = 0;
    Owned report;
    if (int rc = cli.check(chc_check_axioms(cli.ctx(), chi, &ok, &report.s))) return rc;
    if (as_json)
      std::cout << report.s << "\n";
    else
      std::cout << (ok ? "ok" : "violations found") << "\n";
    return ok ? 0 : kExitDomain;
  }

  if (*count) {
    Owned out;
    const chc_method m = method == "poly" ? CHC_METHOD_POLY : CHC_METHOD_BRUTE;
    if (int rc = cli.check(chc_count_expr(cli.ctx(), as_expr(input, root).c_str(), m, drop_root, weak, &out.s)))
      return rc;
    std::cout << out.s << "\n";
    return 0;
  }

  if (*poly) {
    chc_poly* p = nullptr;
    const chc_method m = poly_method == "poly" ? CHC_METHOD_POLY : CHC_METHOD_BRUTE;
    if (int rc = cli.check(chc_poly_eval(cli.ctx(), as_expr(input, root).c_str(), m, &p))) return rc;
    std::unique_ptr<chc_poly, void (*)(chc_poly*)> guard(p, chc_poly_free);
    Owned out;
    if (int rc = cli.check(chc_poly_render(cli.ctx(), p, which == "Q" ? CHC_POLY_Q : CHC_POLY_P,
                                           out_format == "json" ? CHC_FORMAT_JSON : CHC_FORMAT_TEXT, &out.s)))
      return rc;
    std::cout << out.s << "\n";
    return 0;
  }

  if (*dc) {
    Owned out;
    if (int rc = cli.check(
            chc_dc_table(cli.ctx(), kmax, table_format == "json" ? CHC_FORMAT_JSON : CHC_FORMAT_CSV, &out.s)))
      return rc;
    std::cout << out.s;
    return 0;
  }

  if (*kr) {
    Owned out;
    if (int rc = cli.check(chc_kernel_report(cli.ctx(), x.c_str(), terms, &out.s))) return rc;
    std::cout << out.s;
    return 0;
  }

  if (*search) {
    if (width == 0) width = n <= 8 ? 8 : 16;
    Owned csv, notes;
    if (int rc = cli.check(chc_search(cli.ctx(), db.c_str(), n, width, levels, top,
                                      metric == "count" ? CHC_METRIC_COUNT : CHC_METRIC_WEAK, lenient, &csv.s,
                                      &notes.s)))
      return rc;
    if (notes.s && *notes.s) std::cerr << notes.s;
    std::cout << csv.s;
    return 0;
  }
  return kExitUsage;
}
