#include "agbcyl/json_io.hpp"
#include "agbcyl/error.hpp"

#include <algorithm>

namespace agbcyl {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(as_int(v, what));
  return out;
}

std::vector<std::vector<int>> int_lists(const json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& v : j) out.push_back(int_list(v, what));
  return out;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const error& e) {
    throw parse_error(e.what());
  } catch (const json::exception& e) {
    throw parse_error(e.what());
  }
}

}  // namespace

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

json to_json(const QSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
  return json{{"truncation", s.truncation()}, {"coeffs", coeffs}};
}

json to_json(const AffineWeight& w) { return json(w.marks); }

json to_json(const CylPart& p) {
  return json{{"r", p.r}, {"d", p.d}, {"mu", p.mu}, {"rows", p.rows}};
}

json to_json(const GeneralCylPart& p) {
  json j = to_json(p.base);
  j["xi"] = p.xi;
  return j;
}

json to_json(const AbacusState& s) {
  json yokel = json::array();
  for (auto it = s.yokel.rbegin(); it != s.yokel.rend(); ++it) yokel.push_back(it->marks);
  std::vector<int> formation(s.formation.rbegin(), s.formation.rend());
  return json{{"tail", s.tail.marks}, {"yokel", yokel}, {"formation", formation}};
}

json to_json(const BPath& h) {
  return json{{"k", h.k}, {"heights", h.heights}, {"deaks", json::array()}};
}

json to_json(const DecoratedPath& h) {
  json deaks = json::array();
  for (const auto& [i, m] : h.deaks) deaks.push_back({i, m});
  return json{{"k", h.path.k}, {"heights", h.path.heights}, {"deaks", deaks}};
}

json to_json(const PeakList& pl) {
  json pts = json::array();
  for (const auto& [i, b] : pl.points) pts.push_back({i, b});
  return json{{"k", pl.k}, {"b", pl.b}, {"points", pts}};
}

json to_json(const Multipartition& m) {
  return json{{"r", m.r}, {"gammas", m.gammas}, {"components", m.components}};
}

json to_json(const rational& q) {
  return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

json to_json(const XQLaurent& x) {
  json out = json::array();
  for (const auto& [e, s] : x.terms) out.push_back(json{{"exps", e}, {"series", to_json(s)}});
  return out;
}

QSeries series_from_json(const json& j) {
  return guarded([&] {
    const json& c = field(j, "coeffs");
    if (!c.is_array() || c.empty()) throw parse_error("coeffs must be a non-empty array");
    std::vector<bigint> v;
    for (const auto& e : c) {
      bigint z;
      if (e.is_string()) {
        if (z.set_str(e.get<std::string>(), 10) != 0) throw parse_error("bad coefficient");
      } else if (e.is_number_integer()) {
        z = e.get<long>();
      } else {
        throw parse_error("coefficients must be decimal strings");
      }
      v.push_back(z);
    }
    int n = static_cast<int>(v.size()) - 1;
    if (j.contains("truncation")) {
      n = as_int(j.at("truncation"), "truncation");
      if (n < 0 || n + 1 != static_cast<int>(v.size()))
        throw parse_error("truncation does not match the coefficient count");
    }
    return QSeries(n, std::move(v));
  });
}

AffineWeight weight_from_json(const json& j) {
  return guarded([&] {
    AffineWeight w{int_list(j, "weight")};
    check_weight(w);
    return w;
  });
}

CylPart cyl_from_json(const json& j) {
  return guarded([&] {
    CylPart p;
    p.r = as_int(field(j, "r"), "r");
    p.d = as_int(field(j, "d"), "d");
    p.mu = int_list(field(j, "mu"), "mu");
    p.rows = int_lists(field(j, "rows"), "rows");
    const auto rep = validate(p);
    if (!rep.ok) throw parse_error("invalid cylindric partition: " + rep.message);
    return p;
  });
}

GeneralCylPart general_cyl_from_json(const json& j) {
  return guarded([&] {
    GeneralCylPart g;
    g.base.r = as_int(field(j, "r"), "r");
    g.base.d = as_int(field(j, "d"), "d");
    g.base.mu = int_list(field(j, "mu"), "mu");
    g.base.rows = int_lists(field(j, "rows"), "rows");
    g.xi = int_list(field(j, "xi"), "xi");
    const auto rep = validate(g);
    if (!rep.ok) throw parse_error("invalid generalised cylindric partition: " + rep.message);
    return g;
  });
}

AbacusState abacus_from_json(const json& j) {
  return guarded([&] {
    AbacusState s;
    s.tail = AffineWeight{int_list(field(j, "tail"), "tail")};
    check_weight(s.tail);
    const auto yokel = int_lists(field(j, "yokel"), "yokel");
    for (auto it = yokel.rbegin(); it != yokel.rend(); ++it) s.yokel.push_back(AffineWeight{*it});
    const auto formation = int_list(field(j, "formation"), "formation");
    s.formation.assign(formation.rbegin(), formation.rend());
    if (s.yokel.size() != s.formation.size())
      throw parse_error("yokel and formation must have equal length");
    return s;
  });
}

DecoratedPath path_from_json(const json& j) {
  return guarded([&] {
    DecoratedPath h;
    h.path.k = as_int(field(j, "k"), "k");
    h.path.heights = int_list(field(j, "heights"), "heights");
    if (h.path.heights.empty()) throw parse_error("heights must be non-empty");
    h.path = make_path(h.path.k, h.path.heights);
    if (j.contains("deaks")) {
      for (const auto& e : int_lists(j.at("deaks"), "deaks")) {
        if (e.size() != 2) throw parse_error("deaks entries are [position, multiplicity]");
        if (e[1] == 0) continue;
        h.deaks[e[0]] += e[1];
      }
    }
    if (auto err = check_path(h)) throw parse_error("invalid path: " + *err);
    return h;
  });
}

PeakList peaklist_from_json(const json& j) {
  return guarded([&] {
    PeakList pl;
    pl.k = as_int(field(j, "k"), "k");
    pl.b = as_int(field(j, "b"), "b");
    for (const auto& e : int_lists(field(j, "points"), "points")) {
      if (e.size() != 2) throw parse_error("points are [position, height]");
      pl.points.emplace_back(e[0], e[1]);
    }
    return pl;
  });
}

Multipartition multipartition_from_json(const json& j) {
  return guarded([&] {
    Multipartition m;
    m.r = as_int(field(j, "r"), "r");
    m.gammas = int_list(field(j, "gammas"), "gammas");
    m.components = int_lists(field(j, "components"), "components");
    return m;
  });
}

}  // namespace agbcyl
