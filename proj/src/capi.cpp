#include "agbcyl/agbcyl.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "agbcyl/abacus.hpp"
#include "agbcyl/bijection.hpp"
#include "agbcyl/error.hpp"
#include "agbcyl/json_io.hpp"
#include "agbcyl/kyoto.hpp"
#include "agbcyl/paths.hpp"
#include "agbcyl/render.hpp"
#include "agbcyl/verify.hpp"

using namespace agbcyl;

struct agb_series {
  QSeries value;
};

struct agb_enum {
  std::vector<std::string> docs;
  std::size_t next = 0;
};

namespace {

thread_local std::string last_error;

// Thrown for bad names or null pointers.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
agb_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return AGB_OK;
  } catch (const error& e) {
    last_error = e.what();
    return static_cast<agb_status>(static_cast<int>(e.code()));
  } catch (const parse_error& e) {
    last_error = e.what();
    return AGB_E_PARSE;
  } catch (const usage_error& e) {
    last_error = e.what();
    return AGB_E_USAGE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return AGB_E_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return AGB_E_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) throw usage_error(std::string(what) + " must not be null");
}

RunParams params_of(const char* params_json) {
  if (!params_json || !*params_json) return {};
  return RunParams::from_json(parse_document(params_json));
}

AffineWeight weight_of(const RunParams& p) {
  if (!p.weight) throw usage_error("a weight is required");
  try {
    AffineWeight w{*p.weight};
    check_weight(w);
    return w;
  } catch (const error& e) {
    throw parse_error(e.what());
  }
}

// Every object is funnelled through a cylindric partition.
CylPart to_cyl(const std::string& from, const json& doc, const RunParams& p) {
  if (from == "cyl") return cyl_from_json(doc);
  if (from == "abacus") return abacus_to_cyl(abacus_from_json(doc));
  if (from == "multipartition") return multipartition_to_cyl(multipartition_from_json(doc));
  if (from == "path") return path_to_cyl(path_from_json(doc), weight_of(p));
  if (from == "peaklist") {
    const AffineWeight w = weight_of(p);
    const PeakList pl = peaklist_from_json(doc);
    const bool even = w.level() % 2 == 0;
    return path_to_cyl(from_peaklist(pl, even), w);
  }
  throw usage_error("unknown source object \"" + from + "\"");
}

json from_cyl(const std::string& to, const CylPart& pi, const RunParams& p) {
  if (to == "cyl") return to_json(pi);
  if (to == "abacus") return to_json(cyl_to_abacus(pi));
  if (to == "multipartition") return to_json(cyl_to_multipartition(pi));
  if (to == "path") return to_json(cyl_to_path(pi, p.a ? *p.a : -1));
  if (to == "peaklist") return to_json(to_peaklist(cyl_to_path(pi, p.a ? *p.a : -1)));
  throw usage_error("unknown target object \"" + to + "\"");
}

}  // namespace

extern "C" {

const char* agb_version(void) { return "1.0.0"; }

const char* agb_last_error_message(void) { return last_error.c_str(); }

const char* agb_status_name(agb_status status) {
  switch (status) {
    case AGB_OK: return "Ok";
    case AGB_E_PARSE: return "ParseError";
    case AGB_E_USAGE: return "UsageError";
    case AGB_E_INTERNAL: return "InternalError";
    case AGB_DONE: return "Done";
    default:
      if (status >= AGB_E_NON_UNIT_SERIES && status <= AGB_E_INVALID_ARGUMENT)
        return errc_name(static_cast<errc>(static_cast<int>(status)));
      return "Unknown";
  }
}

void agb_string_free(char* s) { std::free(s); }

agb_status agb_series_compute(const char* method, const char* params_json, agb_series** out) {
  return guard([&] {
    need(method, "method");
    need(out, "out");
    *out = nullptr;
    bool known = false;
    for (const auto& m : gf_methods()) known = known || m == method;
    if (!known) throw usage_error(std::string("unknown method \"") + method + "\"");
    *out = new agb_series{compute_gf(method, params_of(params_json))};
  });
}

agb_status agb_series_from_json(const char* series_json, agb_series** out) {
  return guard([&] {
    need(series_json, "series_json");
    need(out, "out");
    *out = nullptr;
    *out = new agb_series{series_from_json(parse_document(series_json))};
  });
}

int agb_series_truncation(const agb_series* s) { return s ? s->value.truncation() : -1; }

agb_status agb_series_coeff(const agb_series* s, int n, char** out) {
  return guard([&] {
    need(s, "series");
    need(out, "out");
    if (n < 0 || n > s->value.truncation())
      fail(errc::invalid_argument, "exponent outside the truncation");
    *out = dup_string(s->value[n].get_str());
  });
}

agb_status agb_series_to_json(const agb_series* s, char** out) {
  return guard([&] {
    need(s, "series");
    need(out, "out");
    *out = dup_string(to_json(s->value).dump());
  });
}

int agb_series_equal(const agb_series* x, const agb_series* y) {
  if (!x || !y) return -1;
  return compare_series(x->value, y->value) ? 0 : 1;
}

agb_status agb_series_mul(const agb_series* x, const agb_series* y, agb_series** out) {
  return guard([&] {
    need(x, "x");
    need(y, "y");
    need(out, "out");
    *out = new agb_series{x->value * y->value};
  });
}

agb_status agb_series_invert(const agb_series* x, agb_series** out) {
  return guard([&] {
    need(x, "x");
    need(out, "out");
    *out = new agb_series{invert(x->value)};
  });
}

void agb_series_free(agb_series* s) { delete s; }

agb_status agb_verify(const char* check, const char* params_json, char** report_json, int* ok) {
  return guard([&] {
    need(check, "check");
    need(report_json, "report_json");
    bool known = false;
    for (const auto& c : check_names()) known = known || c == check;
    if (!known) throw usage_error(std::string("unknown check \"") + check + "\"");
    const VerificationReport rep = run_check(check, params_of(params_json));
    *report_json = dup_string(rep.to_json().dump());
    if (ok) *ok = rep.ok ? 1 : 0;
  });
}

agb_status agb_enum_open(const char* object, const char* params_json, agb_enum** out) {
  return guard([&] {
    need(object, "object");
    need(out, "out");
    *out = nullptr;
    const std::string obj = object;
    const RunParams p = params_of(params_json);
    const int n = p.max_norm ? *p.max_norm : (p.order ? *p.order : 5);
    auto it = std::make_unique<agb_enum>();
    if (obj == "cyl" || obj == "hl" || obj == "abacus" || obj == "multipartition") {
      const auto all = enumerate(weight_of(p), n, p.max_entry ? *p.max_entry : UNBOUNDED);
      for (const auto& pi : all) {
        if (obj == "cyl") it->docs.push_back(to_json(pi).dump());
        else if (obj == "hl") {
          if (is_highest_lift(pi)) it->docs.push_back(to_json(pi).dump());
        } else if (obj == "abacus") it->docs.push_back(to_json(cyl_to_abacus(pi)).dump());
        else it->docs.push_back(to_json(cyl_to_multipartition(pi)).dump());
      }
    } else if (obj == "gcyl") {
      if (!p.xi) throw usage_error("gcyl enumeration needs xi");
      AffineWeight xi{*p.xi};
      for (const auto& pi : enumerate_general(xi, weight_of(p), n))
        it->docs.push_back(to_json(GeneralCylPart{pi, xi.marks}).dump());
    } else if (obj == "path" || obj == "bpath") {
      if (!p.k) throw usage_error("path enumeration needs k");
      const int k = *p.k, b = p.b ? *p.b : k, a = p.a ? *p.a : 1;
      if (obj == "path")
        for (const auto& h : enumerate_paths(k, b, a, n, p.even)) it->docs.push_back(to_json(h).dump());
      else
        for (const auto& h : enumerate_bpaths(k, b, a, n, p.even)) it->docs.push_back(to_json(h).dump());
    } else {
      throw usage_error("unknown object \"" + obj + "\"");
    }
    *out = it.release();
  });
}

agb_status agb_enum_next(agb_enum* it, char** out) {
  if (!it || !out) {
    last_error = "iterator and out must not be null";
    return AGB_E_USAGE;
  }
  if (it->next >= it->docs.size()) return AGB_DONE;
  return guard([&] { *out = dup_string(it->docs[it->next++]); });
}

size_t agb_enum_size(const agb_enum* it) { return it ? it->docs.size() : 0; }

void agb_enum_free(agb_enum* it) { delete it; }

agb_status agb_map(const char* from, const char* to, const char* input_json, const char* params_json,
                   char** out) {
  return guard([&] {
    need(from, "from");
    need(to, "to");
    need(input_json, "input_json");
    need(out, "out");
    const RunParams p = params_of(params_json);
    const json doc = parse_document(input_json);
    const std::string src = from, dst = to;
    static const std::vector<std::string> kinds = {"cyl", "path", "abacus", "multipartition", "peaklist"};
    auto known = [&](const std::string& s) {
      return std::find(kinds.begin(), kinds.end(), s) != kinds.end();
    };
    if (!known(src)) throw usage_error("unknown source object \"" + src + "\"");
    if (!known(dst)) throw usage_error("unknown target object \"" + dst + "\"");
    if (src == "path" && dst == "peaklist") {
      *out = dup_string(to_json(to_peaklist(path_from_json(doc))).dump());
      return;
    }
    if (src == "peaklist" && dst == "path") {
      const PeakList pl = peaklist_from_json(doc);
      *out = dup_string(to_json(from_peaklist(pl, p.even)).dump());
      return;
    }
    *out = dup_string(from_cyl(dst, to_cyl(src, doc, p), p).dump());
  });
}

agb_status agb_render(const char* object, const char* input_json, char** out) {
  return guard([&] {
    need(object, "object");
    need(input_json, "input_json");
    need(out, "out");
    const std::string obj = object;
    const json doc = parse_document(input_json);
    std::string text;
    if (obj == "cyl") text = render_cyl(cyl_from_json(doc));
    else if (obj == "multipartition") text = render_cyl(multipartition_to_cyl(multipartition_from_json(doc)));
    else if (obj == "path") text = render_path(path_from_json(doc));
    else if (obj == "abacus")
      text = render_abacus(doc.contains("tail") ? abacus_to_cyl(abacus_from_json(doc)) : cyl_from_json(doc));
    else throw usage_error("unknown object \"" + obj + "\"");
    *out = dup_string(text);
  });
}

}  // extern "C"
