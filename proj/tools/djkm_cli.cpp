// Command line front end; talks to the library through the C API only.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "djkm.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kUsage =
    "usage: djkm <command> [options]\n"
    "\n"
    "commands:\n"
    "  families        print one coefficient family as CSV or JSON\n"
    "  reduce          reduce a one-form to the canonical central basis\n"
    "  psi             print the canonical class Psi(k)\n"
    "  bracket         bracket two basis keys, or dump a window table\n"
    "  verify-algebra  antisymmetry / Jacobi / backend-agreement sweeps\n"
    "  verify-fock     oscillator, Heisenberg, realization, enumeration checks\n"
    "  report          combined algebra + Fock verification report\n"
    "  snapshot        compare a command's output against a golden file\n"
    "\n"
    "run `djkm <command> --help` for the options of one command.\n"
    "exit codes: 0 ok, 1 verification failure or snapshot mismatch,\n"
    "2 usage error, 3 internal error.\n";

struct Ctx {
  djkm_ctx* p = nullptr;
  Ctx() : p(djkm_ctx_new()) {}
  ~Ctx() { djkm_ctx_free(p); }
  Ctx(const Ctx&) = delete;
  Ctx& operator=(const Ctx&) = delete;
};

std::string take(char* s) {
  if (s == nullptr) return {};
  std::string owned(s);
  djkm_string_free(s);
  return owned;
}

int exit_code(int rc) {
  switch (rc) {
    case DJKM_OK:
      return 0;
    case DJKM_EVERIFY:
      return 1;
    case DJKM_EINVAL:
      return 2;
    default:
      return 3;
  }
}

/// Options shared by every command that runs verification sweeps.
struct Common {
  int workers = 1;
  std::string seed;
  std::string heisenberg_variant = "standard";
  std::string psi_index = "standard";
  std::string e1_product = "normal_ordered";
};

void add_common(CLI::App& app, Common& common) {
  if (const char* env = std::getenv("DJKM_WORKERS")) {
    int parsed = std::atoi(env);
    if (parsed > 0) common.workers = parsed;
  }
  app.add_option("--workers", common.workers,
                 "worker threads (env DJKM_WORKERS sets the default)");
  app.add_option("--seed", common.seed, "seed for sampled checks");
  app.add_option("--heisenberg-variant", common.heisenberg_variant,
                 "standard | alternate")
      ->check(CLI::IsMember({"standard", "alternate"}));
  app.add_option("--psi-index", common.psi_index, "standard | alternate")
      ->check(CLI::IsMember({"standard", "alternate"}));
  app.add_option("--e1-product", common.e1_product, "normal_ordered | plain")
      ->check(CLI::IsMember({"normal_ordered", "plain"}));
}

bool apply_common(djkm_ctx* ctx, const Common& common, std::string& err) {
  auto set = [&](const char* key, const std::string& value) {
    if (value.empty()) return true;
    if (djkm_ctx_set_option(ctx, key, value.c_str()) != DJKM_OK) {
      err = djkm_last_error(ctx);
      return false;
    }
    return true;
  };
  return set("workers", std::to_string(common.workers)) &&
         set("seed", common.seed) &&
         set("heisenberg_variant", common.heisenberg_variant) &&
         set("psi_index", common.psi_index) &&
         set("e1_product", common.e1_product);
}

std::vector<std::string> split_csv_row(const std::string& row) {
  std::vector<std::string> cells;
  std::stringstream stream(row);
  std::string cell;
  while (std::getline(stream, cell, ',')) {
    size_t first = cell.find_first_not_of(" \t");
    size_t last = cell.find_last_not_of(" \t");
    cells.push_back(first == std::string::npos
                        ? std::string()
                        : cell.substr(first, last - first + 1));
  }
  return cells;
}

int parse_sub(CLI::App& app, std::vector<std::string> rest, std::string& out,
              std::string& err) {
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(std::move(rest));
  } catch (const CLI::CallForHelp&) {
    out = app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err = std::string("error: ") + e.what();
    return 2;
  }
  return -1;  // parsed; command should continue
}

int run(const std::vector<std::string>& args, std::string& out,
        std::string& err);

int cmd_families(const std::vector<std::string>& rest, std::string& out,
                 std::string& err) {
  CLI::App app("coefficient family table", "djkm families");
  int which = 0;
  int kmax = 20;
  std::string format = "csv";
  app.add_option("--which", which, "family index: -4, -3, -2 or -1")
      ->required();
  app.add_option("--kmax", kmax, "largest k to tabulate");
  app.add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  if (int rc = parse_sub(app, rest, out, err); rc >= 0) return rc;

  Ctx ctx;
  char* text = nullptr;
  int rc = djkm_families_table(ctx.p, which, kmax, format.c_str(), &text);
  if (rc != DJKM_OK) {
    err = std::string("error: ") + djkm_last_error(ctx.p);
    return exit_code(rc);
  }
  out = take(text);
  return 0;
}

int cmd_reduce(const std::vector<std::string>& rest, std::string& out,
               std::string& err) {
  CLI::App app("reduce a one-form to the central basis", "djkm reduce");
  std::string form;
  app.add_option("form", form, "e.g. \"t^3 u dt\" or \"t^-2 du\"")->required();
  if (int rc = parse_sub(app, rest, out, err); rc >= 0) return rc;

  Ctx ctx;
  char* text = nullptr;
  int rc = djkm_reduce_form(ctx.p, form.c_str(), &text);
  if (rc != DJKM_OK) {
    err = std::string("error: ") + djkm_last_error(ctx.p);
    return exit_code(rc);
  }
  out = take(text);
  return 0;
}

int cmd_psi(const std::vector<std::string>& rest, std::string& out,
            std::string& err) {
  CLI::App app("canonical class Psi(k)", "djkm psi");
  int k = 0;
  std::string psi_index = "standard";
  app.add_option("--k", k, "index")->required();
  app.add_option("--psi-index", psi_index, "standard | alternate")
      ->check(CLI::IsMember({"standard", "alternate"}));
  if (int rc = parse_sub(app, rest, out, err); rc >= 0) return rc;

  Ctx ctx;
  if (djkm_ctx_set_option(ctx.p, "psi_index", psi_index.c_str()) != DJKM_OK) {
    err = std::string("error: ") + djkm_last_error(ctx.p);
    return 2;
  }
  char* text = nullptr;
  int rc = djkm_psi(ctx.p, k, &text);
  if (rc != DJKM_OK) {
    err = std::string("error: ") + djkm_last_error(ctx.p);
    return exit_code(rc);
  }
  out = take(text);
  return 0;
}

int cmd_bracket(const std::vector<std::string>& rest, std::string& out,
                std::string& err) {
  CLI::App app("bracket of two basis keys, or a full window table",
               "djkm bracket");
  std::string key_a, key_b;
  bool table = false;
  int window = 2;
  app.add_option("key_a", key_a, "e.g. e:1, h1:-2, w:0, w:-4");
  app.add_option("key_b", key_b, "second key");
  app.add_flag("--table", table, "dump all pairs from the mode window");
  app.add_option("--window", window, "mode window for --table");
  if (int rc = parse_sub(app, rest, out, err); rc >= 0) return rc;

  Ctx ctx;
  char* text = nullptr;
  int rc;
  if (table) {
    if (!key_a.empty() || !key_b.empty()) {
      err = "error: --table takes no positional keys";
      return 2;
    }
    rc = djkm_bracket_table(ctx.p, window, &text);
  } else {
    if (key_a.empty() || key_b.empty()) {
      err = "error: bracket needs two basis keys (or --table)";
      return 2;
    }
    rc = djkm_bracket(ctx.p, key_a.c_str(), key_b.c_str(), &text);
  }
  if (rc != DJKM_OK) {
    err = std::string("error: ") + djkm_last_error(ctx.p);
    return exit_code(rc);
  }
  out = take(text);
  return 0;
}

int cmd_verify_algebra(const std::vector<std::string>& rest, std::string& out,
                       std::string& err) {
  CLI::App app("bracket verification sweeps", "djkm verify-algebra");
  int antisym = 12, jacobi = 6, agreement = 12;
  Common common;
  app.add_option("--antisym-window", antisym, "antisymmetry mode window");
  app.add_option("--jacobi-window", jacobi, "Jacobi mode window");
  app.add_option("--agreement-window", agreement,
                 "closed-form vs cocycle window");
  add_common(app, common);
  if (int rc = parse_sub(app, rest, out, err); rc >= 0) return rc;

  Ctx ctx;
  if (!apply_common(ctx.p, common, err)) return 2;
  char* text = nullptr;
  int rc = djkm_verify_algebra(ctx.p, antisym, jacobi, agreement, &text);
  if (text != nullptr) out = take(text);
  if (rc == DJKM_EVERIFY) {
    err = std::string("FAIL: ") + djkm_last_error(ctx.p);
  } else if (rc != DJKM_OK) {
    err = std::string("error: ") + djkm_last_error(ctx.p);
  }
  return exit_code(rc);
}

/// Flags -> the JSON config djkm_verify_fock understands. Keys the user
/// didn't set are left out so the library defaults apply.
struct FockFlags {
  int window = -1, osc_window = -1, heis_window = -1, samples = -1;
  std::vector<std::string> c0, kappa0, borel, checks;
  std::string r = "both";
  std::string states_file;
};

void add_fock_flags(CLI::App& app, FockFlags& flags) {
  app.add_option("--window", flags.window, "realization mode window");
  app.add_option("--oscillator-window", flags.osc_window,
                 "oscillator CCR mode window");
  app.add_option("--heisenberg-window", flags.heis_window,
                 "Heisenberg relation mode window");
  app.add_option("--samples", flags.samples, "enumeration soundness samples");
  app.add_option("--c0", flags.c0, "ring parameter value, e.g. 3/5 (repeat)");
  app.add_option("--kappa0", flags.kappa0, "central value (repeat)");
  app.add_option("--params", flags.borel,
                 "Borel row lambda,mu,nu,varkappa (repeat)");
  app.add_option("--r", flags.r, "0 | 1 | both")
      ->check(CLI::IsMember({"0", "1", "both"}));
  app.add_option("--states", flags.states_file,
                 "JSON file with the test states");
  app.add_option("--checks", flags.checks,
                 "subset of: oscillator heisenberg realization enumeration");
}

bool fock_config(const FockFlags& flags, Json& config, std::string& err) {
  config = Json::object();
  if (flags.window >= 0) config["window"] = flags.window;
  if (flags.osc_window >= 0) config["oscillator_window"] = flags.osc_window;
  if (flags.heis_window >= 0) config["heisenberg_window"] = flags.heis_window;
  if (flags.samples >= 0) config["soundness_samples"] = flags.samples;
  if (!flags.c0.empty()) config["c0"] = flags.c0;
  if (!flags.kappa0.empty()) config["kappa0"] = flags.kappa0;
  if (!flags.borel.empty()) {
    Json rows = Json::array();
    for (const std::string& row : flags.borel) {
      auto cells = split_csv_row(row);
      if (cells.size() != 4) {
        err = "error: --params wants lambda,mu,nu,varkappa";
        return false;
      }
      rows.push_back(cells);
    }
    config["borel"] = std::move(rows);
  }
  if (flags.r != "both") config["r"] = Json::array({std::stoi(flags.r)});
  if (!flags.states_file.empty()) {
    std::ifstream in(flags.states_file);
    if (!in) {
      err = "error: cannot read states file " + flags.states_file;
      return false;
    }
    try {
      config["states"] = Json::parse(in);
    } catch (const Json::exception& e) {
      err = std::string("error: states file: ") + e.what();
      return false;
    }
  }
  if (!flags.checks.empty()) config["checks"] = flags.checks;
  return true;
}

int cmd_verify_fock(const std::vector<std::string>& rest, std::string& out,
                    std::string& err) {
  CLI::App app("free-field realization verification", "djkm verify-fock");
  FockFlags flags;
  Common common;
  add_fock_flags(app, flags);
  add_common(app, common);
  if (int rc = parse_sub(app, rest, out, err); rc >= 0) return rc;

  Json config;
  if (!fock_config(flags, config, err)) return 2;
  Ctx ctx;
  if (!apply_common(ctx.p, common, err)) return 2;
  char* text = nullptr;
  int rc = djkm_verify_fock(ctx.p, config.dump().c_str(), &text);
  if (text != nullptr) out = take(text);
  if (rc == DJKM_EVERIFY) {
    err = std::string("FAIL: ") + djkm_last_error(ctx.p);
  } else if (rc != DJKM_OK) {
    err = std::string("error: ") + djkm_last_error(ctx.p);
  }
  return exit_code(rc);
}

int cmd_report(const std::vector<std::string>& rest, std::string& out,
               std::string& err) {
  CLI::App app("combined verification report", "djkm report");
  int antisym = 10, jacobi = 5, agreement = 10;
  FockFlags flags;
  flags.window = 2;
  flags.osc_window = 3;
  flags.heis_window = 5;
  flags.samples = 25;
  Common common;
  app.add_option("--antisym-window", antisym, "antisymmetry mode window");
  app.add_option("--jacobi-window", jacobi, "Jacobi mode window");
  app.add_option("--agreement-window", agreement,
                 "closed-form vs cocycle window");
  add_fock_flags(app, flags);
  add_common(app, common);
  if (int rc = parse_sub(app, rest, out, err); rc >= 0) return rc;

  Json config;
  if (!fock_config(flags, config, err)) return 2;
  Ctx ctx;
  if (!apply_common(ctx.p, common, err)) return 2;

  char* algebra_text = nullptr;
  int algebra_rc =
      djkm_verify_algebra(ctx.p, antisym, jacobi, agreement, &algebra_text);
  if (algebra_rc != DJKM_OK && algebra_rc != DJKM_EVERIFY) {
    err = std::string("error: ") + djkm_last_error(ctx.p);
    return exit_code(algebra_rc);
  }
  char* fock_text = nullptr;
  int fock_rc = djkm_verify_fock(ctx.p, config.dump().c_str(), &fock_text);
  if (fock_rc != DJKM_OK && fock_rc != DJKM_EVERIFY) {
    err = std::string("error: ") + djkm_last_error(ctx.p);
    djkm_string_free(algebra_text);
    return exit_code(fock_rc);
  }

  Json doc;
  doc["schema"] = 1;
  doc["ok"] = algebra_rc == DJKM_OK && fock_rc == DJKM_OK;
  doc["algebra"] = Json::parse(take(algebra_text));
  doc["fock"] = Json::parse(take(fock_text));
  out = doc.dump(2);
  if (!doc["ok"].get<bool>()) {
    err = "FAIL: see report";
    return 1;
  }
  return 0;
}

int cmd_snapshot(const std::vector<std::string>& rest, std::string& out,
                 std::string& err) {
  auto divider = std::find(rest.begin(), rest.end(), "--");
  std::vector<std::string> own(rest.begin(), divider);
  std::vector<std::string> inner;
  if (divider != rest.end()) inner.assign(divider + 1, rest.end());

  CLI::App app("byte-compare a command's output against a golden file",
               "djkm snapshot");
  std::string golden;
  bool update = false;
  app.add_option("--golden", golden, "golden file path")->required();
  app.add_flag("--update", update, "write the output instead of comparing");
  app.footer("pass the command to run after --, e.g.\n"
             "  djkm snapshot --golden families.csv -- families --which -3");
  if (int rc = parse_sub(app, own, out, err); rc >= 0) return rc;
  if (inner.empty()) {
    err = "error: snapshot needs a command after --";
    return 2;
  }

  std::string inner_out, inner_err;
  int rc = run(inner, inner_out, inner_err);
  if (rc != 0) {
    err = inner_err.empty() ? "error: inner command failed" : inner_err;
    return rc == 1 ? 1 : 2;
  }

  if (update) {
    std::ofstream file(golden, std::ios::binary);
    if (!file) {
      err = "error: cannot write " + golden;
      return 2;
    }
    file << inner_out;
    out = "updated " + golden;
    return 0;
  }

  std::ifstream file(golden, std::ios::binary);
  if (!file) {
    err = "error: cannot read " + golden;
    return 2;
  }
  std::stringstream want;
  want << file.rdbuf();
  if (want.str() != inner_out) {
    err = "snapshot mismatch: " + golden;
    return 1;
  }
  out = "snapshot ok: " + golden;
  return 0;
}

int run(const std::vector<std::string>& args, std::string& out,
        std::string& err) {
  if (args.empty()) {
    err = kUsage;
    return 2;
  }
  const std::string& cmd = args[0];
  std::vector<std::string> rest(args.begin() + 1, args.end());
  if (cmd == "help" || cmd == "--help" || cmd == "-h") {
    out = kUsage;
    return 0;
  }
  if (cmd == "families") return cmd_families(rest, out, err);
  if (cmd == "reduce") return cmd_reduce(rest, out, err);
  if (cmd == "psi") return cmd_psi(rest, out, err);
  if (cmd == "bracket") return cmd_bracket(rest, out, err);
  if (cmd == "verify-algebra") return cmd_verify_algebra(rest, out, err);
  if (cmd == "verify-fock") return cmd_verify_fock(rest, out, err);
  if (cmd == "report") return cmd_report(rest, out, err);
  if (cmd == "snapshot") return cmd_snapshot(rest, out, err);
  err = "error: unknown command '" + cmd + "'\n\n" + kUsage;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string out, err;
  int rc = run(args, out, err);
  if (!out.empty()) {
    std::cout << out;
    if (out.back() != '\n') std::cout << '\n';
  }
  if (!err.empty()) {
    std::cerr << err;
    if (err.back() != '\n') std::cerr << '\n';
  }
  return rc;
}
