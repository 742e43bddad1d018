#include "djkm.h"

#include <cstring>
#include <string>
#include <vector>

#include "djkm/realization.hpp"
#include "djkm/serialize.hpp"

struct djkm_ctx {
  int workers = 1;
  uint64_t seed = 2026;
  djkm::Conventions conventions;
  std::string last_error;
};

namespace {

using djkm::Json;

char* copy_out(const std::string& text) {
  char* buffer = new char[text.size() + 1];
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return buffer;
}

int fill(char** out, const std::string& text) {
  if (out == nullptr) return DJKM_EINVAL;
  *out = copy_out(text);
  return DJKM_OK;
}

template <class Fn>
int guarded(djkm_ctx* ctx, Fn&& fn) {
  if (ctx == nullptr) return DJKM_EINVAL;
  ctx->last_error.clear();
  try {
    return fn();
  } catch (const djkm::ParseError& e) {
    ctx->last_error = e.what();
    return DJKM_EINVAL;
  } catch (const djkm::InvalidParameter& e) {
    ctx->last_error = e.what();
    return DJKM_EINVAL;
  } catch (const djkm::WrongFamily& e) {
    ctx->last_error = e.what();
    return DJKM_EINVAL;
  } catch (const Json::exception& e) {
    ctx->last_error = e.what();
    return DJKM_EINVAL;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return DJKM_EINTERNAL;
  }
}

/// Report rows -> {"schema":1,"ok":...,"results":[...]}; fills *out and
/// picks the return code.
int finish_reports(djkm_ctx* ctx,
                   const std::vector<std::pair<std::string, djkm::Report>>& rows,
                   char** out) {
  bool ok = true;
  Json results = Json::array();
  for (const auto& [name, report] : rows) {
    ok = ok && report.ok();
    results.push_back(djkm::report_json(name, report));
  }
  Json doc{{"schema", 1}, {"ok", ok}, {"results", std::move(results)}};
  int rc = fill(out, doc.dump(2));
  if (rc != DJKM_OK) return rc;
  if (!ok) {
    for (const auto& [name, report] : rows) {
      if (!report.ok()) {
        ctx->last_error = name + ": " + (report.witnesses.empty()
                                             ? "verification failed"
                                             : report.witnesses.front());
        break;
      }
    }
    return DJKM_EVERIFY;
  }
  return DJKM_OK;
}

std::vector<djkm::Rational> rationals_from(const Json& j) {
  std::vector<djkm::Rational> out;
  for (const auto& cell : j) out.push_back(djkm::rational_from_json(cell));
  return out;
}

}  // namespace

extern "C" {

djkm_ctx* djkm_ctx_new(void) { return new djkm_ctx; }

void djkm_ctx_free(djkm_ctx* ctx) { delete ctx; }

int djkm_ctx_set_option(djkm_ctx* ctx, const char* key, const char* value) {
  return guarded(ctx, [&]() -> int {
    if (key == nullptr || value == nullptr) {
      ctx->last_error = "null option";
      return DJKM_EINVAL;
    }
    const std::string k(key), v(value);
    if (k == "workers") {
      int parsed = 0;
      try {
        parsed = std::stoi(v);
      } catch (const std::exception&) {
        parsed = 0;
      }
      if (parsed <= 0 || parsed > 256) {
        ctx->last_error = "workers must be in [1, 256]";
        return DJKM_EINVAL;
      }
      ctx->workers = parsed;
    } else if (k == "seed") {
      try {
        ctx->seed = std::stoull(v);
      } catch (const std::exception&) {
        ctx->last_error = "seed must be an unsigned integer";
        return DJKM_EINVAL;
      }
    } else if (k == "heisenberg_variant") {
      if (v != "standard" && v != "alternate") {
        ctx->last_error = "heisenberg_variant: standard or alternate";
        return DJKM_EINVAL;
      }
      ctx->conventions.heisenberg_standard_signs = v == "standard";
    } else if (k == "psi_index") {
      if (v != "standard" && v != "alternate") {
        ctx->last_error = "psi_index: standard or alternate";
        return DJKM_EINVAL;
      }
      ctx->conventions.psi_standard_index = v == "standard";
    } else if (k == "e1_product") {
      if (v != "normal_ordered" && v != "plain") {
        ctx->last_error = "e1_product: normal_ordered or plain";
        return DJKM_EINVAL;
      }
      ctx->conventions.e1_normal_ordered = v == "normal_ordered";
    } else {
      ctx->last_error = "unknown option '" + k + "'";
      return DJKM_EINVAL;
    }
    return DJKM_OK;
  });
}

const char* djkm_last_error(const djkm_ctx* ctx) {
  return ctx == nullptr ? "null context" : ctx->last_error.c_str();
}

int djkm_families_table(djkm_ctx* ctx, int which, int kmax, const char* format,
                        char** out) {
  return guarded(ctx, [&]() -> int {
    const std::string fmt = format == nullptr ? "json" : format;
    djkm::FamilyTable table = djkm::family_by_recursion(which, kmax);
    if (fmt == "csv") return fill(out, djkm::family_csv(table));
    if (fmt == "json") return fill(out, djkm::family_json(table).dump(2));
    ctx->last_error = "format must be csv or json";
    return DJKM_EINVAL;
  });
}

int djkm_reduce_form(djkm_ctx* ctx, const char* form, char** out) {
  return guarded(ctx, [&]() -> int {
    if (form == nullptr) {
      ctx->last_error = "null form";
      return DJKM_EINVAL;
    }
    djkm::OneForm<djkm::PolyC> parsed = djkm::parse_one_form(form);
    return fill(out,
                djkm::central_json(djkm::reduce(parsed, djkm::PolyC::variable()))
                    .dump(2));
  });
}

int djkm_psi(djkm_ctx* ctx, int k, char** out) {
  return guarded(ctx, [&]() -> int {
    return fill(
        out,
        djkm::central_json(
            djkm::psi_table(k, ctx->conventions.psi_standard_index))
            .dump(2));
  });
}

int djkm_bracket(djkm_ctx* ctx, const char* key_a, const char* key_b,
                 char** out) {
  return guarded(ctx, [&]() -> int {
    if (key_a == nullptr || key_b == nullptr) {
      ctx->last_error = "null basis key";
      return DJKM_EINVAL;
    }
    djkm::BracketContext<djkm::PolyC> bc(djkm::PolyC::variable(),
                                         ctx->conventions.psi_standard_index);
    auto result = djkm::bracket_closed(
        bc,
        djkm::AlgebraElement<djkm::PolyC>::single(djkm::BasisKey::parse(key_a)),
        djkm::AlgebraElement<djkm::PolyC>::single(
            djkm::BasisKey::parse(key_b)));
    return fill(out, djkm::algebra_json(result).dump(2));
  });
}

int djkm_bracket_table(djkm_ctx* ctx, int window, char** out) {
  return guarded(ctx, [&]() -> int {
    if (window < 0 || window > 16) {
      ctx->last_error = "bracket table window must be in [0, 16]";
      return DJKM_EINVAL;
    }
    djkm::BracketContext<djkm::PolyC> bc(djkm::PolyC::variable(),
                                         ctx->conventions.psi_standard_index);
    auto basis = djkm::basis_window(window);
    Json rows = Json::array();
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        auto result = djkm::bracket_closed(
            bc, djkm::AlgebraElement<djkm::PolyC>::single(a),
            djkm::AlgebraElement<djkm::PolyC>::single(b));
        rows.push_back({{"a", a.to_string()},
                        {"b", b.to_string()},
                        {"bracket", djkm::algebra_json(result)}});
      }
    }
    return fill(out, rows.dump(2));
  });
}

int djkm_verify_algebra(djkm_ctx* ctx, int antisym_window, int jacobi_window,
                        int agreement_window, char** out) {
  return guarded(ctx, [&]() -> int {
    for (int w : {antisym_window, jacobi_window, agreement_window}) {
      if (w < 0 || w > 64) {
        ctx->last_error = "verification windows must be in [0, 64]";
        return DJKM_EINVAL;
      }
    }
    djkm::BracketContext<djkm::PolyC> bc(djkm::PolyC::variable(),
                                         ctx->conventions.psi_standard_index);
    std::vector<std::pair<std::string, djkm::Report>> rows;
    rows.emplace_back("antisymmetry", djkm::verify_antisymmetry(
                                          bc, antisym_window, ctx->workers));
    rows.emplace_back("jacobi",
                      djkm::verify_jacobi(bc, jacobi_window, ctx->workers));
    rows.emplace_back("backend_agreement",
                      djkm::verify_backend_agreement(bc, agreement_window,
                                                     ctx->workers));
    return finish_reports(ctx, rows, out);
  });
}

int djkm_verify_fock(djkm_ctx* ctx, const char* config_json, char** out) {
  return guarded(ctx, [&]() -> int {
    Json config = Json::object();
    if (config_json != nullptr && config_json[0] != '\0') {
      config = Json::parse(config_json);
    }
    const int window = config.value("window", 4);
    const int osc_window = config.value("oscillator_window", 4);
    const int heis_window = config.value("heisenberg_window", 6);
    const int samples = config.value("soundness_samples", 64);
    if (window < 0 || window > 16 || osc_window < 0 || osc_window > 16 ||
        heis_window < 0 || heis_window > 32 || samples < 0 ||
        samples > 100000) {
      ctx->last_error = "fock config windows out of range";
      return DJKM_EINVAL;
    }

    std::vector<djkm::Rational> c0s = {djkm::Rational(2), djkm::Rational(3, 5),
                                       djkm::Rational(-7, 3)};
    if (config.contains("c0")) c0s = rationals_from(config["c0"]);
    std::vector<djkm::Rational> kappas = {djkm::Rational(0), djkm::Rational(1),
                                          djkm::Rational(-4)};
    if (config.contains("kappa0")) kappas = rationals_from(config["kappa0"]);
    std::vector<std::array<djkm::Rational, 4>> borels = {
        {djkm::Rational(5), djkm::Rational(1), djkm::Rational(2),
         djkm::Rational(3)},
        {djkm::Rational(0), djkm::Rational(0), djkm::Rational(0),
         djkm::Rational(0)}};
    if (config.contains("borel")) {
      borels.clear();
      for (const auto& row : config["borel"]) {
        auto cells = rationals_from(row);
        if (cells.size() != 4) {
          ctx->last_error = "borel rows are (lambda, mu, nu, varkappa)";
          return DJKM_EINVAL;
        }
        borels.push_back({cells[0], cells[1], cells[2], cells[3]});
      }
    }
    std::vector<int> flavors = {0, 1};
    if (config.contains("r")) {
      flavors.clear();
      for (const auto& cell : config["r"]) flavors.push_back(cell.get<int>());
    }

    std::vector<djkm::RealizationParams> params;
    for (const auto& c0 : c0s) {
      for (const auto& kappa : kappas) {
        for (const auto& borel : borels) {
          for (int r : flavors) {
            djkm::RealizationParams p(c0, r, kappa, borel[0], borel[1],
                                      borel[2], borel[3]);
            p.conventions = ctx->conventions;
            params.push_back(std::move(p));
          }
        }
      }
    }
    if (params.empty()) {
      ctx->last_error = "empty parameter battery";
      return DJKM_EINVAL;
    }

    std::vector<djkm::FockState> states =
        config.contains("states")
            ? djkm::fock_states_from_json(config["states"])
            : djkm::default_state_suite(ctx->seed);
    if (states.empty()) {
      ctx->last_error = "empty state battery";
      return DJKM_EINVAL;
    }

    std::vector<std::string> checks = {"oscillator", "heisenberg",
                                       "realization", "enumeration"};
    if (config.contains("checks")) {
      checks.clear();
      for (const auto& cell : config["checks"]) {
        checks.push_back(cell.get<std::string>());
      }
    }

    std::vector<std::pair<std::string, djkm::Report>> rows;
    for (const std::string& check : checks) {
      if (check == "oscillator") {
        djkm::Report merged;
        for (const auto& p : params) {
          merged.merge(djkm::oscillator_ccr_check(osc_window, states, p));
        }
        rows.emplace_back("oscillator_ccr", std::move(merged));
      } else if (check == "heisenberg") {
        djkm::Report merged;
        for (const auto& p : params) {
          for (int m = -heis_window; m <= heis_window; ++m) {
            for (int n = -heis_window; n <= heis_window; ++n) {
              merged.merge(djkm::heisenberg_relation_check(m, n, states, p));
            }
          }
        }
        rows.emplace_back("heisenberg_relations", std::move(merged));
      } else if (check == "realization") {
        djkm::RealizationCheckConfig rc;
        rc.window = window;
        rc.states = states;
        rc.params = params;
        rc.workers = ctx->workers;
        rows.emplace_back("realization_commutators",
                          djkm::verify_realization(rc));
      } else if (check == "enumeration") {
        rows.emplace_back(
            "enumeration_soundness",
            djkm::verify_enumeration_soundness(samples, ctx->seed, window,
                                               states, params));
      } else {
        ctx->last_error = "unknown check '" + check + "'";
        return DJKM_EINVAL;
      }
    }
    return finish_reports(ctx, rows, out);
  });
}

void djkm_string_free(char* text) { delete[] text; }

}  // extern "C"
