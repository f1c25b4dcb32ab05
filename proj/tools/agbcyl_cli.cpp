// Command-line front end over the C interface.
//
// Exit codes: 0 success or verified, 1 verification failure or a conversion
// that legitimately fails, 2 usage or input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "agbcyl/agbcyl.h"

namespace {

using json = nlohmann::ordered_json;

struct Flags {
  std::optional<int> r, d, order, max_entry, max_norm, k, b, a;
  std::string weight, xi;
  bool even = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--r", f.r, "rank r");
  cmd->add_option("--d", f.d, "level d");
  cmd->add_option("--weight", f.weight, "affine weight m0,m1,...");
  cmd->add_option("--xi", f.xi, "relaxation weight n0,n1,...");
  cmd->add_option("--order", f.order, "q-truncation N");
  cmd->add_option("--max-entry", f.max_entry, "largest entry a");
  cmd->add_option("--max-norm", f.max_norm, "largest norm or path weight");
  cmd->add_option("--k", f.k, "path ceiling k");
  cmd->add_option("--b", f.b, "path start b");
  cmd->add_option("--a", f.a, "number of peaks and deaks");
  cmd->add_flag("--even", f.even, "even path family");
}

std::vector<int> int_list(const std::string& s, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw CLI::ValidationError(flag, "expected comma-separated integers, got '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

std::string params_json(const Flags& f) {
  json j = json::object();
  auto put = [&](const char* key, const std::optional<int>& v) {
    if (v) j[key] = *v;
  };
  put("r", f.r);
  put("d", f.d);
  if (!f.weight.empty()) j["weight"] = int_list(f.weight, "--weight");
  if (!f.xi.empty()) j["xi"] = int_list(f.xi, "--xi");
  put("order", f.order);
  put("max_entry", f.max_entry);
  put("max_norm", f.max_norm);
  put("k", f.k);
  put("b", f.b);
  put("a", f.a);
  if (f.even) j["even"] = true;
  return j.dump();
}

std::string read_stdin() {
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

bool input_error(agb_status s) {
  switch (s) {
    case AGB_E_PARSE:
    case AGB_E_USAGE:
    case AGB_E_INVALID_ARGUMENT:
    case AGB_E_RANK_ERROR:
    case AGB_E_INVALID_LEVELS:
    case AGB_E_NOT_COPRIME:
      return true;
    default:
      return false;
  }
}

int report(agb_status s, bool conversion) {
  std::cerr << "error: " << agb_last_error_message() << '\n';
  if (s == AGB_E_PARSE || s == AGB_E_USAGE) return 2;
  if (!conversion && input_error(s)) return 2;
  return 1;
}

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  agb_string_free(s);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cylindric partitions, Bressoud paths and Andrews-Gordon-Bressoud identities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(agb_version()));

  Flags f;
  std::string method = "brute", check, object = "cyl", from, to;

  auto* gf = app.add_subcommand("gf", "print a generating function as JSON");
  add_common(gf, f);
  gf->add_option("--method", method, "brute | general | borodin | determinant | limit | bosonic | "
                                     "product | fermionic | cpag | principal | highest-lift");

  auto* verify = app.add_subcommand("verify", "run a named identity check");
  add_common(verify, f);
  verify->add_option("--check", check, "borodin | macdonald | cpinh | hischar | lemmas | bijection | "
                                       "cpag | agb | rr | wr | determinant | denominator | chain | "
                                       "kyoto | abacus")
      ->required();

  auto* en = app.add_subcommand("enum", "stream objects as JSON lines");
  add_common(en, f);
  en->add_option("--object", object, "cyl | hl | gcyl | abacus | multipartition | path | bpath");

  auto* map = app.add_subcommand("map", "convert a JSON object read from stdin");
  add_common(map, f);
  map->add_option("--from", from, "cyl | path | abacus | multipartition | peaklist")->required();
  map->add_option("--to", to, "cyl | path | abacus | multipartition | peaklist")->required();

  auto* render = app.add_subcommand("render", "draw a JSON object read from stdin");
  add_common(render, f);
  render->add_option("--object,--from", object, "cyl | path | abacus | multipartition");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string params;
  try {
    params = params_json(f);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (gf->parsed()) {
    agb_series* s = nullptr;
    const agb_status st = agb_series_compute(method.c_str(), params.c_str(), &s);
    if (st != AGB_OK) return report(st, false);
    char* text = nullptr;
    agb_series_to_json(s, &text);
    agb_series_free(s);
    std::cout << take(text) << '\n';
    return 0;
  }

  if (verify->parsed()) {
    char* text = nullptr;
    int ok = 0;
    const agb_status st = agb_verify(check.c_str(), params.c_str(), &text, &ok);
    if (st != AGB_OK) return report(st, false);
    std::cout << take(text) << '\n';
    return ok ? 0 : 1;
  }

  if (en->parsed()) {
    agb_enum* it = nullptr;
    const agb_status st = agb_enum_open(object.c_str(), params.c_str(), &it);
    if (st != AGB_OK) return report(st, false);
    char* line = nullptr;
    agb_status next;
    while ((next = agb_enum_next(it, &line)) == AGB_OK) std::cout << take(line) << '\n';
    agb_enum_free(it);
    if (next != AGB_DONE) return report(next, false);
    return 0;
  }

  if (map->parsed()) {
    const std::string input = read_stdin();
    char* text = nullptr;
    const agb_status st = agb_map(from.c_str(), to.c_str(), input.c_str(), params.c_str(), &text);
    if (st != AGB_OK) return report(st, true);
    std::cout << take(text) << '\n';
    return 0;
  }

  if (render->parsed()) {
    const std::string input = read_stdin();
    char* text = nullptr;
    const agb_status st = agb_render(object.c_str(), input.c_str(), &text);
    if (st != AGB_OK) return report(st, true);
    std::cout << take(text);
    return 0;
  }
  return 2;
}
