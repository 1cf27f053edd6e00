// Command-line front end. Talks to the shared library exclusively through the
// C API in pia.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pia.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// a table argument is a catalog name, "rees:<file>", or a file path
int load_semigroup(const std::string& arg, pia_semigroup** out) {
  if (pia_semigroup_from_name(arg.c_str(), out) == PIA_OK) return kExitOk;
  if (arg.rfind("rees:", 0) == 0) {
    std::string text;
    if (!read_file(arg.substr(5), text)) {
      std::cerr << "error: cannot read " << arg.substr(5) << "\n";
      return kExitUsage;
    }
    if (pia_semigroup_from_rees(text.c_str(), out) != PIA_OK) {
      std::cerr << "error: " << pia_last_error() << "\n";
      return kExitUsage;
    }
    return kExitOk;
  }
  std::string text;
  if (!read_file(arg, text)) {
    std::cerr << "error: '" << arg << "' is neither a catalog name nor a readable file\n";
    return kExitUsage;
  }
  if (pia_semigroup_from_table(text.c_str(), out) != PIA_OK) {
    std::cerr << "error: " << pia_last_error() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int emit(pia_status st, char* text, int failures) {
  if (st != PIA_OK) {
    std::cerr << "error: " << pia_last_error() << "\n";
    return st == PIA_ERR_PARSE || st == PIA_ERR_INVALID ? kExitUsage : kExitPropertyFailure;
  }
  std::cout << text;
  pia_string_free(text);
  return failures > 0 ? kExitPropertyFailure : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-semigroup conjugacy and partial inner automorphism toolkit"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of text");

  std::string table_arg;
  long limit = 0;
  bool export_cayley = false;
  int tx_n = 3;
  bool tx_full = false;
  std::string file_arg;
  int max_order = 4;

  auto* validate = app.add_subcommand("validate", "check a Cayley table");
  validate->add_option("table", table_arg, "catalog name or table file")->required();

  auto* green = app.add_subcommand("green", "Green's relations");
  green->add_option("table", table_arg)->required();

  auto* conj = app.add_subcommand("conj", "natural conjugacy classes and witnesses");
  conj->add_option("table", table_arg)->required();

  auto* inn = app.add_subcommand("inn", "partial inner automorphism monoid");
  inn->add_option("table", table_arg)->required();
  inn->add_option("--limit", limit, "closure size cap");
  inn->add_flag("--export-cayley", export_cayley, "include the abstract Cayley table");

  auto* tx = app.add_subcommand("tx", "full transformation monoid structure");
  auto* tx_classify = tx->add_subcommand("classify", "generator and member statistics");
  tx_classify->add_option("-n", tx_n, "carrier size")->required();
  tx_classify->add_flag("--full", tx_full, "force the full closure");
  auto* tx_verify = tx->add_subcommand("verify", "run the structure checks");
  tx_verify->add_option("-n", tx_n, "carrier size")->required();
  tx_verify->add_flag("--full", tx_full, "force the full closure");
  tx->require_subcommand(1);

  auto* gset = app.add_subcommand("gset", "abelian group action endomorphisms");
  auto* gset_inn = gset->add_subcommand("inn", "partial inner automorphisms of the endomorphisms");
  gset_inn->add_option("file", file_arg, "G-set file")->required();
  auto* gset_verify = gset->add_subcommand("verify", "run the structure checks");
  gset_verify->add_option("file", file_arg, "G-set file")->required();
  gset->require_subcommand(1);

  auto* rees = app.add_subcommand("rees", "Rees matrix semigroups");
  auto* rees_verify = rees->add_subcommand("verify", "run the structure checks");
  rees_verify->add_option("file", file_arg, "Rees spec file")->required();
  rees->require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run property suites");
  auto* verify_all = verify->add_subcommand("all", "every suite");
  verify_all->add_option("--max-order", max_order, "corpus bound for random tables");
  verify_all->add_flag("--tx-full", tx_full, "full closure for the order-4 transformation pass");
  verify->require_subcommand(1);

  for (CLI::App* sub : {validate, green, conj, inn, tx, tx_classify, tx_verify, gset, gset_inn,
                        gset_verify, rees, rees_verify, verify, verify_all})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  char* text = nullptr;
  int failures = 0;
  pia_status st = PIA_OK;

  if (*validate || *green || *conj || *inn) {
    pia_semigroup* s = nullptr;
    if (int rc = load_semigroup(table_arg, &s)) return rc;
    if (*validate)
      st = pia_report_validate(s, table_arg.c_str(), json, &text);
    else if (*green)
      st = pia_report_green(s, table_arg.c_str(), json, &text);
    else if (*conj)
      st = pia_report_conj(s, table_arg.c_str(), json, &text);
    else
      st = pia_report_inn(s, table_arg.c_str(), limit, export_cayley, json, &text);
    pia_semigroup_free(s);
    return emit(st, text, 0);
  }
  if (*tx_classify) {
    st = pia_report_tx_classify(tx_n, tx_full, json, &text);
    return emit(st, text, 0);
  }
  if (*tx_verify) {
    st = pia_report_tx_verify(tx_n, tx_full, json, &text, &failures);
    return emit(st, text, failures);
  }
  if (*gset_inn || *gset_verify || *rees_verify) {
    std::string content;
    if (!read_file(file_arg, content)) {
      std::cerr << "error: cannot read " << file_arg << "\n";
      return kExitUsage;
    }
    if (*gset_inn)
      st = pia_report_gset_inn(content.c_str(), file_arg.c_str(), json, &text);
    else if (*gset_verify)
      st = pia_report_gset_verify(content.c_str(), file_arg.c_str(), json, &text, &failures);
    else
      st = pia_report_rees_verify(content.c_str(), file_arg.c_str(), json, &text, &failures);
    return emit(st, text, failures);
  }
  if (*verify_all) {
    st = pia_report_verify_all(max_order, 4, tx_full, json, &text, &failures);
    return emit(st, text, failures);
  }
  return kExitUsage;
}
