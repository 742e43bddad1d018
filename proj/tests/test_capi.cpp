// Exercises the shared-library C API end to end, including the
// machine-readable sign-convention ledger in data/.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <string>

#include "djkm.h"
#include "json.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Ctx {
  djkm_ctx* p = nullptr;
  Ctx() : p(djkm_ctx_new()) {}
  ~Ctx() { djkm_ctx_free(p); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string owned(s);
  djkm_string_free(s);
  return owned;
}

// A one-point parameter battery keeps the verify calls fast.
const char* kTinyFock =
    R"({"c0": ["2"], "kappa0": ["1"], "borel": [["5","1","2","3"]],)"
    R"( "r": [0], "window": 1, "oscillator_window": 2,)"
    R"( "heisenberg_window": 3, "soundness_samples": 4})";

}  // namespace

TEST_CASE("context lifecycle and option validation") {
  Ctx ctx;
  REQUIRE(ctx.p != nullptr);
  CHECK(std::string(djkm_last_error(ctx.p)) == "");

  CHECK(djkm_ctx_set_option(ctx.p, "workers", "4") == DJKM_OK);
  CHECK(djkm_ctx_set_option(ctx.p, "seed", "12345") == DJKM_OK);
  CHECK(djkm_ctx_set_option(ctx.p, "heisenberg_variant", "alternate") ==
        DJKM_OK);
  CHECK(djkm_ctx_set_option(ctx.p, "psi_index", "standard") == DJKM_OK);
  CHECK(djkm_ctx_set_option(ctx.p, "e1_product", "plain") == DJKM_OK);

  CHECK(djkm_ctx_set_option(ctx.p, "workers", "0") == DJKM_EINVAL);
  CHECK(std::string(djkm_last_error(ctx.p)).find("workers") !=
        std::string::npos);
  CHECK(djkm_ctx_set_option(ctx.p, "workers", "many") == DJKM_EINVAL);
  CHECK(djkm_ctx_set_option(ctx.p, "psi_index", "odd") == DJKM_EINVAL);
  CHECK(djkm_ctx_set_option(ctx.p, "no_such_option", "1") == DJKM_EINVAL);
  CHECK(djkm_ctx_set_option(ctx.p, nullptr, "1") == DJKM_EINVAL);

  // A failed set leaves earlier settings intact and the error readable.
  CHECK(std::string(djkm_last_error(ctx.p)).find("null") !=
        std::string::npos);

  djkm_string_free(nullptr);  // must be a no-op
}

TEST_CASE("families table in both formats") {
  Ctx ctx;
  char* text = nullptr;
  REQUIRE(djkm_families_table(ctx.p, -3, 5, "csv", &text) == DJKM_OK);
  std::string csv = take(text);
  CHECK(csv.rfind("k,c0,c1,c2\n", 0) == 0);
  CHECK(csv.find("\n1,1/2,0,0\n") != std::string::npos);

  REQUIRE(djkm_families_table(ctx.p, -4, 6, "json", &text) == DJKM_OK);
  Json doc = Json::parse(take(text));
  CHECK(doc["family"] == Json(-4));
  CHECK(doc["entries"].size() == 11);

  CHECK(djkm_families_table(ctx.p, 0, 5, "csv", &text) == DJKM_EINVAL);
  CHECK(djkm_families_table(ctx.p, -3, 5, "yaml", &text) == DJKM_EINVAL);
  CHECK(std::string(djkm_last_error(ctx.p)).find("format") !=
        std::string::npos);
}

TEST_CASE("reduce and psi endpoints") {
  Ctx ctx;
  char* text = nullptr;
  REQUIRE(djkm_reduce_form(ctx.p, "t^-1 dt", &text) == DJKM_OK);
  Json w0 = Json::parse(take(text));
  CHECK(w0["w0"] == Json("1"));
  CHECK(w0["w-2"] == Json("0"));

  REQUIRE(djkm_psi(ctx.p, 2, &text) == DJKM_OK);
  Json psi2 = Json::parse(take(text));
  CHECK(psi2["w-4"] == Json("4c/5"));
  CHECK(psi2["w-2"] == Json("1/5"));

  // The alternate index convention reads odd k <= -5 as zero.
  REQUIRE(djkm_psi(ctx.p, -5, &text) == DJKM_OK);
  CHECK(Json::parse(take(text))["w-3"] == Json("c/2"));
  REQUIRE(djkm_ctx_set_option(ctx.p, "psi_index", "alternate") == DJKM_OK);
  REQUIRE(djkm_psi(ctx.p, -5, &text) == DJKM_OK);
  Json alt = Json::parse(take(text));
  for (const char* key : {"w0", "w-4", "w-3", "w-2", "w-1"}) {
    CHECK(alt[key] == Json("0"));
  }

  CHECK(djkm_reduce_form(ctx.p, "t^q dt", &text) == DJKM_EINVAL);
  CHECK(djkm_reduce_form(ctx.p, nullptr, &text) == DJKM_EINVAL);
}

TEST_CASE("bracket endpoints") {
  Ctx ctx;
  char* text = nullptr;
  REQUIRE(djkm_bracket(ctx.p, "e:1", "f:-1", &text) == DJKM_OK);
  Json b = Json::parse(take(text));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == Json::array({"h:0", "1"}));
  CHECK(b[1] == Json::array({"w:0", "-1"}));

  REQUIRE(djkm_bracket(ctx.p, "h1:0", "h1:-2", &text) == DJKM_OK);
  Json central = Json::parse(take(text));
  REQUIRE(central.size() == 1);
  CHECK(central[0] == Json::array({"w:0", "4c"}));

  REQUIRE(djkm_bracket_table(ctx.p, 0, &text) == DJKM_OK);
  CHECK(Json::parse(take(text)).size() == 36);

  CHECK(djkm_bracket(ctx.p, "e:1", "bogus", &text) == DJKM_EINVAL);
  CHECK(djkm_bracket_table(ctx.p, -1, &text) == DJKM_EINVAL);
  CHECK(djkm_bracket_table(ctx.p, 99, &text) == DJKM_EINVAL);
}

TEST_CASE("verify-algebra endpoint") {
  Ctx ctx;
  REQUIRE(djkm_ctx_set_option(ctx.p, "workers", "2") == DJKM_OK);
  char* text = nullptr;
  REQUIRE(djkm_verify_algebra(ctx.p, 3, 2, 3, &text) == DJKM_OK);
  Json doc = Json::parse(take(text));
  CHECK(doc["schema"] == Json(1));
  CHECK(doc["ok"] == Json(true));
  REQUIRE(doc["results"].size() == 3);
  CHECK(doc["results"][0]["name"] == Json("antisymmetry"));
  CHECK(doc["results"][1]["name"] == Json("jacobi"));
  CHECK(doc["results"][2]["name"] == Json("backend_agreement"));
  for (const auto& row : doc["results"]) {
    CHECK(row["failed"] == Json(0));
    CHECK(row["checked"].get<long long>() > 0);
  }

  CHECK(djkm_verify_algebra(ctx.p, -1, 2, 3, &text) == DJKM_EINVAL);
}

TEST_CASE("verify-algebra catches the alternate psi convention") {
  Ctx ctx;
  REQUIRE(djkm_ctx_set_option(ctx.p, "psi_index", "alternate") == DJKM_OK);
  char* text = nullptr;
  int rc = djkm_verify_algebra(ctx.p, 4, 0, 4, &text);
  CHECK(rc == DJKM_EVERIFY);
  Json doc = Json::parse(take(text));
  CHECK(doc["ok"] == Json(false));
  // The closed-form and cocycle backends must disagree somewhere; the
  // antisymmetry sweep alone cannot see a consistent index change.
  CHECK(doc["results"][2]["failed"].get<long long>() > 0);
  CHECK(std::string(djkm_last_error(ctx.p)).find("backend_agreement") !=
        std::string::npos);
}

TEST_CASE("verify-fock endpoint with a tiny battery") {
  Ctx ctx;
  char* text = nullptr;
  REQUIRE(djkm_verify_fock(ctx.p, kTinyFock, &text) == DJKM_OK);
  Json doc = Json::parse(take(text));
  CHECK(doc["ok"] == Json(true));
  REQUIRE(doc["results"].size() == 4);
  CHECK(doc["results"][0]["name"] == Json("oscillator_ccr"));
  CHECK(doc["results"][1]["name"] == Json("heisenberg_relations"));
  CHECK(doc["results"][2]["name"] == Json("realization_commutators"));
  CHECK(doc["results"][3]["name"] == Json("enumeration_soundness"));
  CHECK(doc["results"][2]["checked"] == Json(21 * 9 * 5));
}

TEST_CASE("verify-fock honors explicit states and check subsets") {
  Ctx ctx;
  Json config = Json::parse(kTinyFock);
  config["checks"] = Json::array({"realization"});
  config["states"] = Json::array(
      {Json::array({Json{{"v", 0}, {"vars", Json::array()}, {"coeff", "1"}}}),
       Json::array({Json{
           {"v", 1},
           {"vars", Json::array({Json::array({"x1", -1, 1})})},
           {"coeff", "-2/3"}}})});
  char* text = nullptr;
  REQUIRE(djkm_verify_fock(ctx.p, config.dump().c_str(), &text) == DJKM_OK);
  Json doc = Json::parse(take(text));
  REQUIRE(doc["results"].size() == 1);
  CHECK(doc["results"][0]["checked"] == Json(21 * 9 * 2));
}

TEST_CASE("verify-fock rejects malformed configs") {
  Ctx ctx;
  char* text = nullptr;
  CHECK(djkm_verify_fock(ctx.p, "{nope", &text) == DJKM_EINVAL);
  CHECK(djkm_verify_fock(ctx.p, R"({"checks": ["wrong"]})", &text) ==
        DJKM_EINVAL);
  CHECK(djkm_verify_fock(ctx.p, R"({"window": 99})", &text) == DJKM_EINVAL);
  CHECK(djkm_verify_fock(ctx.p, R"({"c0": ["1"]})", &text) == DJKM_EINVAL);
  CHECK(std::string(djkm_last_error(ctx.p)).find("c0") != std::string::npos);
  CHECK(djkm_verify_fock(ctx.p, R"({"borel": [["1","2"]]})", &text) ==
        DJKM_EINVAL);
  CHECK(djkm_verify_fock(ctx.p, R"({"r": [2]})", &text) == DJKM_EINVAL);
}

TEST_CASE("sign-convention ledger drives the verifier as documented") {
  std::ifstream in(std::string(DJKM_SOURCE_DIR) +
                   "/data/heisenberg_sign_conventions.json");
  REQUIRE(in.good());
  Json ledger = Json::parse(in);
  CHECK(ledger["schema"] == Json(1));
  CHECK(ledger["option"]["key"] == Json("heisenberg_variant"));

  Json config = Json::parse(kTinyFock);
  config["checks"] = Json::array({"heisenberg"});
  for (const auto& [variant, meta] : ledger["variants"].items()) {
    Ctx ctx;
    REQUIRE(djkm_ctx_set_option(ctx.p, "heisenberg_variant",
                                variant.c_str()) == DJKM_OK);
    char* text = nullptr;
    int rc = djkm_verify_fock(ctx.p, config.dump().c_str(), &text);
    Json doc = Json::parse(take(text));
    if (meta["satisfies_relations"].get<bool>()) {
      CHECK(rc == DJKM_OK);
      CHECK(doc["ok"] == Json(true));
    } else {
      CHECK(rc == DJKM_EVERIFY);
      CHECK(doc["ok"] == Json(false));
      // The advertised witness bracket is among the reported failures.
      const std::string want = meta["witness_bracket"].get<std::string>();
      bool seen = false;
      for (const auto& w : doc["results"][0]["witnesses"]) {
        if (w.get<std::string>().find(want) != std::string::npos) seen = true;
      }
      CHECK(seen);
    }
  }
}
