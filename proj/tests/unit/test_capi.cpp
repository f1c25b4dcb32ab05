#include <doctest.h>

#include <string>

#include "agbcyl/agbcyl.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  agb_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("series through the C interface") {
  agb_series* s = nullptr;
  REQUIRE(agb_series_compute("borodin", R"({"weight":[3,0],"order":8})", &s) == AGB_OK);
  CHECK(agb_series_truncation(s) == 8);
  char* c = nullptr;
  REQUIRE(agb_series_coeff(s, 8, &c) == AGB_OK);
  CHECK(take(c) == "57");
  CHECK(agb_series_coeff(s, 9, &c) == AGB_E_INVALID_ARGUMENT);

  agb_series* b = nullptr;
  REQUIRE(agb_series_compute("brute", R"({"weight":[3,0],"order":8})", &b) == AGB_OK);
  CHECK(agb_series_equal(s, b) == 1);
  agb_series* inv = nullptr;
  REQUIRE(agb_series_invert(s, &inv) == AGB_OK);
  agb_series* prod = nullptr;
  REQUIRE(agb_series_mul(s, inv, &prod) == AGB_OK);
  char* text = nullptr;
  REQUIRE(agb_series_to_json(prod, &text) == AGB_OK);
  CHECK(take(text) == R"({"truncation":8,"coeffs":["1","0","0","0","0","0","0","0","0"]})");
  agb_series* parsed = nullptr;
  REQUIRE(agb_series_from_json(R"({"truncation":1,"coeffs":["2","1"]})", &parsed) == AGB_OK);
  agb_series* none = nullptr;
  CHECK(agb_series_invert(parsed, &none) == AGB_E_NON_UNIT_SERIES);
  CHECK(std::string(agb_status_name(AGB_E_NON_UNIT_SERIES)) == "NonUnitSeries");
  CHECK(agb_series_equal(nullptr, s) == -1);
  for (auto* x : {s, b, inv, prod, parsed}) agb_series_free(x);

  CHECK(agb_series_compute("nope", "{}", &s) == AGB_E_USAGE);
  CHECK(std::string(agb_last_error_message()).find("nope") != std::string::npos);
  CHECK(agb_series_compute("brute", "{bad", &s) == AGB_E_PARSE);
  CHECK(agb_series_compute(nullptr, "{}", &s) == AGB_E_USAGE);
}

TEST_CASE("verify, enumerate, map and render through the C interface") {
  char* report = nullptr;
  int ok = 0;
  REQUIRE(agb_verify("rr", R"({"order":20})", &report, &ok) == AGB_OK);
  CHECK(ok == 1);
  CHECK(take(report).find("\"ok\":true") != std::string::npos);
  CHECK(agb_verify("nope", "{}", &report, &ok) == AGB_E_USAGE);

  agb_enum* it = nullptr;
  REQUIRE(agb_enum_open("cyl", R"({"weight":[3,0],"max_norm":3,"max_entry":1})", &it) == AGB_OK);
  CHECK(agb_enum_size(it) == 6);
  char* line = nullptr;
  int n = 0;
  while (agb_enum_next(it, &line) == AGB_OK) {
    take(line);
    ++n;
  }
  CHECK(n == 6);
  CHECK(agb_enum_next(it, &line) == AGB_DONE);
  agb_enum_free(it);

  char* out = nullptr;
  REQUIRE(agb_map("cyl", "multipartition", R"({"r":4,"d":3,"mu":[2],"rows":[[10,4,1],[10,9,7,4],[10,9,1],[8,1]]})",
                  "{}", &out) == AGB_OK);
  CHECK(take(out) == R"({"r":4,"gammas":[2,2,3],"components":[[10,10,8,4,4],[9,9,1,1],[10,7,1]]})");
  REQUIRE(agb_map("cyl", "path", R"({"r":2,"d":3,"mu":[],"rows":[[],[]]})", "{}", &out) == AGB_OK);
  CHECK(take(out) == R"({"k":1,"heights":[1,0],"deaks":[]})");
  REQUIRE(agb_map("path", "cyl", R"({"k":1,"heights":[1,0],"deaks":[[0,1],[1,1],[3,1]]})",
                  R"({"weight":[3,0]})", &out) == AGB_OK);
  CHECK(take(out) == R"({"r":2,"d":3,"mu":[],"rows":[[2,1],[1]]})");
  CHECK(agb_map("abacus", "cyl", R"({"tail":[2,0],"yokel":[[0,2]],"formation":[1]})", "{}", &out) ==
        AGB_E_INADMISSIBLE_PAIR);
  CHECK(agb_map("cyl", "nothing", "{}", "{}", &out) == AGB_E_USAGE);
  REQUIRE(agb_render("path", R"({"k":1,"heights":[1,0],"deaks":[]})", &out) == AGB_OK);
  CHECK(take(out).find("np=0 wt=0") != std::string::npos);
}
