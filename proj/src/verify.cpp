#include "agbcyl/verify.hpp"
#include "agbcyl/abacus.hpp"
#include "agbcyl/bijection.hpp"
#include "agbcyl/charformulas.hpp"
#include "agbcyl/cylindric.hpp"
#include "agbcyl/error.hpp"
#include "agbcyl/kyoto.hpp"
#include "agbcyl/paths.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace agbcyl {

RunParams RunParams::from_json(const json& j) {
  RunParams p;
  if (j.is_null()) return p;
  if (!j.is_object()) throw parse_error("parameters must be a JSON object");
  auto opt_int = [&](const char* key, std::optional<int>& dst) {
    if (!j.contains(key) || j.at(key).is_null()) return;
    if (!j.at(key).is_number_integer()) throw parse_error(std::string(key) + " must be an integer");
    dst = j.at(key).get<int>();
  };
  auto opt_list = [&](const char* key, std::optional<std::vector<int>>& dst) {
    if (!j.contains(key) || j.at(key).is_null()) return;
    const auto& v = j.at(key);
    if (!v.is_array()) throw parse_error(std::string(key) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& e : v) {
      if (!e.is_number_integer()) throw parse_error(std::string(key) + " must be an array of integers");
      out.push_back(e.get<int>());
    }
    dst = out;
  };
  opt_int("r", p.r);
  opt_int("d", p.d);
  opt_int("order", p.order);
  opt_int("max_entry", p.max_entry);
  opt_int("max_norm", p.max_norm);
  opt_int("k", p.k);
  opt_int("b", p.b);
  opt_int("a", p.a);
  opt_list("weight", p.weight);
  opt_list("xi", p.xi);
  if (j.contains("even")) {
    if (!j.at("even").is_boolean()) throw parse_error("even must be a boolean");
    p.even = j.at("even").get<bool>();
  }
  return p;
}

json RunParams::to_json() const {
  json j = json::object();
  auto put = [&](const char* key, const std::optional<int>& v) {
    if (v) j[key] = *v;
  };
  put("r", r);
  put("d", d);
  if (weight) j["weight"] = *weight;
  if (xi) j["xi"] = *xi;
  put("order", order);
  put("max_entry", max_entry);
  put("max_norm", max_norm);
  put("k", k);
  put("b", b);
  put("a", a);
  if (even) j["even"] = true;
  return j;
}

json VerificationReport::to_json() const {
  json j{{"check", check}, {"params", params}, {"truncation", truncation}, {"ok", ok}};
  if (first_mismatch)
    j["first_mismatch"] = json{{"exponent", first_mismatch->exponent},
                               {"lhs", first_mismatch->lhs},
                               {"rhs", first_mismatch->rhs}};
  else
    j["first_mismatch"] = nullptr;
  if (!detail.empty()) j["detail"] = detail;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::optional<Mismatch> compare_series(const QSeries& lhs, const QSeries& rhs) {
  const int n = std::min(lhs.truncation(), rhs.truncation());
  for (int e = 0; e <= n; ++e)
    if (lhs[e] != rhs[e]) return Mismatch{e, lhs[e].get_str(), rhs[e].get_str()};
  return std::nullopt;
}

namespace {

// Records the first failure of a check.
class Checker {
 public:
  explicit Checker(VerificationReport& rep) : rep_(rep) {}

  bool series(const std::string& label, const QSeries& lhs, const QSeries& rhs) {
    if (!rep_.ok) return false;
    if (auto m = compare_series(lhs, rhs)) {
      rep_.ok = false;
      rep_.first_mismatch = m;
      rep_.detail = label;
      return false;
    }
    return true;
  }

  bool fact(const std::string& label, bool cond) {
    if (!rep_.ok) return false;
    if (!cond) {
      rep_.ok = false;
      rep_.detail = label;
    }
    return cond;
  }

  bool ok() const { return rep_.ok; }

 private:
  VerificationReport& rep_;
};

std::vector<int> range_or(const std::optional<int>& v, int lo, int hi) {
  if (v) return {*v};
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

std::vector<AffineWeight> weights_for(const RunParams& p, std::vector<int> ranks,
                                      std::vector<int> levels) {
  if (p.weight) return {AffineWeight{*p.weight}};
  std::vector<AffineWeight> out;
  for (int r : ranks)
    for (int d : levels)
      for (auto& w : all_weights(r, d)) out.push_back(w);
  return out;
}

std::string label(const std::string& what, const AffineWeight& w) {
  return what + " " + to_string(w);
}

// Generating functions of path populations, cached per (k, b, a, even).
class PathTables {
 public:
  explicit PathTables(int n) : n_(n) {}
  const QSeries& plain(int k, int b, int a, bool even) {
    auto key = std::make_tuple(k, b, a, even);
    auto it = plain_.find(key);
    if (it == plain_.end())
      it = plain_.emplace(key, path_gf(enumerate_bpaths(k, b, a, n_, even), n_)).first;
    return it->second;
  }
  const QSeries& decorated(int k, int b, int a, bool even) {
    auto key = std::make_tuple(k, b, a, even);
    auto it = deco_.find(key);
    if (it == deco_.end())
      it = deco_.emplace(key, path_gf(enumerate_paths(k, b, a, n_, even), n_)).first;
    return it->second;
  }

 private:
  int n_;
  std::map<std::tuple<int, int, int, bool>, QSeries> plain_, deco_;
};

std::string kba(const char* name, int k, int b, int a) {
  std::ostringstream os;
  os << name << " k=" << k << " b=" << b << " a=" << a;
  return os.str();
}

void check_borodin(const RunParams& p, int n, Checker& ck) {
  for (const auto& w : weights_for(p, range_or(p.r, 2, 3), range_or(p.d, 1, 4)))
    if (!ck.series(label("borodin", w), gf_brute(w, n), borodin_product(w, n))) return;
}

void check_determinant(const RunParams& p, int n, Checker& ck) {
  for (const auto& w : weights_for(p, range_or(p.r, 2, 3), range_or(p.d, 1, 3)))
    for (int a : range_or(p.a ? p.a : p.max_entry, 1, 3))
      if (!ck.series(label("determinant a=" + std::to_string(a), w), gf_brute(w, n, a),
                     gk_determinant_gf(w, a, n)))
        return;
}

void check_macdonald(const RunParams& p, Checker& ck, int& trunc) {
  for (int r : range_or(p.r, 2, 3)) {
    const int n = p.order ? *p.order : (r == 2 ? 8 : 6);
    trunc = std::max(trunc, n);
    const auto sides = macdonald_sides(r, n);
    const auto wider = macdonald_sides(r, n, 2);
    if (!ck.fact("macdonald r=" + std::to_string(r), sides.lhs == sides.rhs)) return;
    if (!ck.fact("macdonald window stability r=" + std::to_string(r),
                 wider.lhs == sides.lhs && wider.rhs == sides.rhs))
      return;
  }
}

void check_denominator(const RunParams& p, int n, Checker& ck) {
  for (int r : range_or(p.r, 2, 3)) {
    const QSeries rhs = power(pochhammer({1, 1, INFINITE}, n), r) *
                        inverse_pochhammer({r, r, INFINITE}, n);
    if (!ck.series("principal denominator r=" + std::to_string(r),
                   principal_numerator(AffineWeight{std::vector<int>(r, 0)}, n), rhs))
      return;
  }
}

void check_cpinh(const RunParams& p, int n, Checker& ck) {
  for (const auto& w : weights_for(p, range_or(p.r, 2, 3), range_or(p.d, 1, 3))) {
    const int r = w.rank();
    const QSeries lhs = inverse_pochhammer({r, r, INFINITE}, n) * hl_gf_brute(w, n);
    if (!ck.series(label("highest-lift fibres", w), lhs, gf_brute(w, n))) return;
  }
}

void check_hischar(const RunParams& p, int n, Checker& ck) {
  for (const auto& w : weights_for(p, range_or(p.r, 2, 3), range_or(p.d, 1, 3)))
    if (!ck.series(label("highest-lift character", w), hl_gf_brute(w, n), principal_char(w, n)))
      return;
}

QSeries chain_sum(PathTables& t, int k, int b, int a, bool even, int n, bool step_b_eq_k) {
  // sum_m q^{m^2 (+m)} / (q;q)_{a-m} * decorated(k-1, b', m)
  QSeries s(n);
  for (int m = 0; m <= a; ++m) {
    const int e = m * m + (step_b_eq_k ? m : 0);
    if (e > n) break;
    const int bb = step_b_eq_k ? k - 1 : b;
    s.add_scaled_shifted(inverse_pochhammer({1, 1, a - m}, n) * t.decorated(k - 1, bb, m, even), e, 1);
  }
  return s;
}

void check_lemmas(const RunParams& p, int n, Checker& ck) {
  const int kmax = p.k ? *p.k : 3;
  const int amax = p.a ? *p.a : 3;
  PathTables t(n);
  for (bool even : {false, true}) {
    const std::string tag = even ? "B" : "A";
    for (int k = 0; k <= kmax; ++k)
      for (int b = 0; b <= k; ++b)
        for (int a = 0; a <= amax; ++a) {
          if (k > 0 && b == k &&
              !ck.series(kba(even ? "U2" : "U1", k, b, a), t.plain(k, k, a, even),
                         t.plain(k, k - 1, a, even).shifted(a)))
            return;
          if (k > 0 || !even) {
            QSeries rhs(n);
            for (int m = 0; m <= a; ++m)
              rhs += inverse_pochhammer({1, 1, a - m}, n) * t.plain(k, b, m, even);
            if (!ck.series(kba(even ? "B2" : "A2", k, b, a), t.decorated(k, b, a, even), rhs))
              return;
          }
          if (k + 1 <= kmax) {
            const QSeries rhs = t.decorated(k, b, a, even).shifted(a * a);
            if (!ck.series(kba(even ? "B1" : "A1", k + 1, b, a), t.plain(k + 1, b, a, even), rhs))
              return;
          }
          if (k > 0 && !ck.series(kba(even ? "B1GF" : "A1GF", k, b, a), t.decorated(k, b, a, even),
                                  chain_sum(t, k, b, a, even, n, b == k)))
            return;
        }
    // transform parameters and inverse on every decorated path below the top ceiling
    for (int k = 0; k < kmax; ++k)
      for (int b = 0; b <= k; ++b)
        for (int a = 0; a <= amax; ++a)
          for (const auto& h : enumerate_paths(k, b, a, n, even)) {
            const BPath hp = b_transform(h);
            const auto s0 = path_stats(h), s1 = path_stats(hp);
            if (!ck.fact(kba((tag + " transform parameters").c_str(), k, b, a),
                         s1.np == s0.np && s1.wt == s0.wt + static_cast<long>(a) * a &&
                             !check_path(hp, even)))
              return;
            if (!ck.fact(kba((tag + " transform inverse").c_str(), k, b, a),
                         inverse_b_transform(hp) == h))
              return;
          }
  }
}

void check_chain(const RunParams& p, int n, Checker& ck) {
  const int amax = p.a ? *p.a : 3;
  PathTables t(n);
  for (bool even : {false, true})
    for (int k : range_or(p.k, 1, 3))
      for (int b = 0; b <= k; ++b)
        for (int a = 0; a <= amax; ++a)
          if (!ck.series(kba(even ? "Bchain" : "Achain", k, b, a), fermionic_sum(k, b, a, even, n),
                         t.decorated(k, b, a, even)))
            return;
}

std::string cyl_label(const std::string& what, const CylPart& pi) {
  return what + " on " + to_json(pi).dump();
}

void check_bijection(const RunParams& p, int n, Checker& ck) {
  const int amax = p.a ? *p.a : 3;
  for (int d : range_or(p.d, 2, 5))
    for (const auto& w : p.weight ? std::vector<AffineWeight>{AffineWeight{*p.weight}} : all_weights(2, d)) {
      const bool mirrored = w.level() % 2 == 0 && w.marks[1] > w.level() / 2;
      const BijectionParams bp = bijection_params(mirrored ? mirror_weight(w) : w);
      for (const auto& pi : enumerate(w, n)) {
        const int a = pi.max_entry();
        for (int extra = 0; extra <= 1; ++extra) {
          DecoratedPath h;
          CylPart back;
          try {
            h = cyl_to_path(pi, a + extra);
            back = path_to_cyl(h, w);
          } catch (const error& e) {
            ck.fact(cyl_label(std::string("bijection raised ") + e.what(), pi), false);
            return;
          }
          const auto st = path_stats(h);
          if (!ck.fact(cyl_label("image outside the path family", pi),
                       h.path.k == bp.k && h.path.start() == bp.b && !check_path(h, bp.even())))
            return;
          if (!ck.fact(cyl_label("weight not preserved", pi), st.wt == norm(pi))) return;
          if (!ck.fact(cyl_label("peak count differs from a", pi), st.np == a + extra)) return;
          if (!ck.fact(cyl_label("round trip failed", pi), back == pi)) return;
        }
      }
      for (int a = 0; a <= amax; ++a) {
        const auto paths = enumerate_paths(bp.k, bp.b, a, n, bp.even());
        for (const auto& h : paths) {
          CylPart pi;
          try {
            pi = path_to_cyl(h, w);
          } catch (const error& e) {
            ck.fact(std::string("inverse bijection raised ") + e.what() + " on " + to_json(h).dump(), false);
            return;
          }
          const bool good = validate(pi).ok && norm(pi) == path_stats(h).wt && pi.max_entry() <= a &&
                            cyl_to_path(pi, a) == h;
          if (!ck.fact("path round trip failed on " + to_json(h).dump(), good)) return;
        }
        if (!ck.series(label("bijection count a=" + std::to_string(a), w), gf_brute(w, n, a),
                       path_gf(paths, n)))
          return;
      }
    }
}

void check_cpag(const RunParams& p, int n, Checker& ck) {
  const int amax = p.a ? *p.a : 3;
  for (int d : range_or(p.d, 2, 5)) {
    const int k = d / 2;
    const bool even = d % 2 == 0;
    for (int i = 0; i <= k; ++i)
      for (int a = 0; a <= amax; ++a) {
        const AffineWeight w{{d - i, i}};
        const QSeries brute = gf_brute(w, n, a);
        if (!ck.series(label("cpag a=" + std::to_string(a), w), cpag_sum(d, i, a, n), brute)) return;
        if (!ck.series(label("fermionic a=" + std::to_string(a), w), fermionic_sum(k, k - i, a, even, n),
                       brute))
          return;
      }
  }
}

void check_agb(const RunParams& p, int n, Checker& ck) {
  const QSeries euler = pochhammer({1, 1, INFINITE}, n);
  for (int d : range_or(p.d, 2, 5)) {
    const int k = d / 2;
    for (int i = 0; i <= k; ++i) {
      const AffineWeight w{{d - i, i}};
      const QSeries sum_side = euler * fermionic_sum(k, k - i, INFINITE, d % 2 == 0, n);
      const QSeries product_side = euler * product_r2(w, n);
      if (!ck.series(label("sum side vs product side", w), sum_side, product_side)) return;
    }
  }
}

void check_rr(int n, Checker& ck) {
  for (int s = 0; s <= 1; ++s) {
    QSeries sum(n);
    for (int m = 0; m * m + s * m <= n; ++m)
      sum.add_scaled_shifted(inverse_pochhammer({1, 1, m}, n), m * m + s * m, 1);
    const QSeries prod = inverse_pochhammer({1 + s, 5, INFINITE}, n) *
                         inverse_pochhammer({4 - s, 5, INFINITE}, n);
    if (!ck.series("Rogers-Ramanujan s=" + std::to_string(s), sum, prod)) return;
  }
}

void check_wr(int n, Checker& ck) {
  struct Case {
    int p, pp;
    AffineWeight xi, zeta;
    rational expected;
  };
  const std::vector<Case> cases = {{3, 4, AffineWeight{{1, 0}}, AffineWeight{{2, 0}}, rational(-1, 48)},
                                   {2, 5, AffineWeight{{0, 0}}, AffineWeight{{3, 0}}, rational(11, 60)}};
  const QSeries euler = pochhammer({1, 1, INFINITE}, n);
  for (const auto& c : cases) {
    const std::string tag = "W_r p=" + std::to_string(c.p) + " p'=" + std::to_string(c.pp);
    if (!ck.series(tag, wr_normalized_char(c.xi, c.zeta, c.p, c.pp, n),
                   euler * gf_general_brute(c.xi, c.zeta, n)))
      return;
    if (!ck.fact(tag + " conformal weight", conformal_weight(c.xi, c.zeta, c.p, c.pp) == c.expected))
      return;
  }
}

void check_kyoto(const RunParams& p, int n, Checker& ck) {
  const Multipartition ex{4, {2, 2, 3}, {{10, 10, 8, 4, 4}, {9, 9, 1, 1}, {10, 7, 1}}};
  const CylPart pi = multipartition_to_cyl(ex);
  const std::vector<std::vector<int>> rows = {{10, 4, 1}, {10, 9, 7, 4}, {10, 9, 1}, {8, 1}};
  if (!ck.fact("appendix example rows", pi.rows == rows && pi.mu == Partition{2})) return;
  if (!ck.fact("appendix example inverse", cyl_to_multipartition(pi) == ex)) return;
  for (const auto& w : weights_for(p, range_or(p.r, 2, 3), range_or(p.d, 1, 3)))
    for (const auto& c : enumerate(w, n)) {
      if (!ck.fact(cyl_label("highest-lift criteria disagree", c),
                   pattern_highest_lift(c) == is_highest_lift(c)))
        return;
      if (!ck.fact(cyl_label("multipartition round trip", c),
                   multipartition_to_cyl(cyl_to_multipartition(c)) == c))
        return;
    }
}

void check_abacus(const RunParams& p, int n, Checker& ck) {
  for (const auto& w : weights_for(p, range_or(p.r, 2, 3), range_or(p.d, 1, 4)))
    for (const auto& c : enumerate(w, n)) {
      const AbacusState s = cyl_to_abacus(c);
      if (!ck.fact(cyl_label("abacus round trip", c), abacus_to_cyl(s) == c)) return;
      if (!ck.fact(cyl_label("formation norm law", c), abacus_norm(s) == norm(c))) return;
      for (std::size_t j = 0; j < s.yokel.size(); ++j) {
        const AffineWeight& right = s.yokel[j];
        const AffineWeight& left = j + 1 < s.yokel.size() ? s.yokel[j + 1] : s.tail;
        const int excess = s.formation[j] - delta_min(left, right);
        if (!ck.fact(cyl_label("distance law", c), excess >= 0 && excess % w.rank() == 0)) return;
      }
    }
}

using CheckFn = std::function<void(const RunParams&, int, Checker&, int&)>;

struct CheckDef {
  int default_order;
  CheckFn run;
};

const std::map<std::string, CheckDef>& registry() {
  static const std::map<std::string, CheckDef> reg = {
      {"borodin", {16, [](const RunParams& p, int n, Checker& c, int&) { check_borodin(p, n, c); }}},
      {"determinant", {14, [](const RunParams& p, int n, Checker& c, int&) { check_determinant(p, n, c); }}},
      {"macdonald", {-1, [](const RunParams& p, int, Checker& c, int& t) { check_macdonald(p, c, t); }}},
      {"denominator", {20, [](const RunParams& p, int n, Checker& c, int&) { check_denominator(p, n, c); }}},
      {"cpinh", {12, [](const RunParams& p, int n, Checker& c, int&) { check_cpinh(p, n, c); }}},
      {"hischar", {12, [](const RunParams& p, int n, Checker& c, int&) { check_hischar(p, n, c); }}},
      {"lemmas", {15, [](const RunParams& p, int n, Checker& c, int&) { check_lemmas(p, n, c); }}},
      {"chain", {15, [](const RunParams& p, int n, Checker& c, int&) { check_chain(p, n, c); }}},
      {"bijection", {12, [](const RunParams& p, int n, Checker& c, int&) { check_bijection(p, n, c); }}},
      {"cpag", {14, [](const RunParams& p, int n, Checker& c, int&) { check_cpag(p, n, c); }}},
      {"agb", {40, [](const RunParams& p, int n, Checker& c, int&) { check_agb(p, n, c); }}},
      {"rr", {40, [](const RunParams&, int n, Checker& c, int&) { check_rr(n, c); }}},
      {"wr", {12, [](const RunParams&, int n, Checker& c, int&) { check_wr(n, c); }}},
      {"kyoto", {10, [](const RunParams& p, int n, Checker& c, int&) { check_kyoto(p, n, c); }}},
      {"abacus", {10, [](const RunParams& p, int n, Checker& c, int&) { check_abacus(p, n, c); }}},
  };
  return reg;
}

AffineWeight weight_param(const RunParams& p) {
  if (!p.weight) fail(errc::invalid_argument, "this method needs --weight");
  AffineWeight w{*p.weight};
  check_weight(w);
  if (p.r && *p.r != w.rank()) fail(errc::rank_error, "--r does not match the weight");
  if (p.d && *p.d != w.level()) fail(errc::invalid_levels, "--d does not match the weight");
  return w;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

VerificationReport run_check(const std::string& name, const RunParams& params) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) fail(errc::invalid_argument, "unknown check \"" + name + "\"");
  VerificationReport rep;
  rep.check = name;
  rep.params = params.to_json();
  const int n = params.order ? *params.order : it->second.default_order;
  if (params.order && *params.order < 0) fail(errc::invalid_argument, "order must be >= 0");
  rep.truncation = std::max(n, 0);
  const auto t0 = std::chrono::steady_clock::now();
  Checker ck(rep);
  int trunc = rep.truncation;
  it->second.run(params, n, ck, trunc);
  rep.truncation = trunc;
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

const std::vector<std::string>& gf_methods() {
  static const std::vector<std::string> m = {"brute",   "general",   "borodin", "determinant",
                                             "limit",   "bosonic",   "product", "fermionic",
                                             "cpag",    "principal", "highest-lift"};
  return m;
}

QSeries compute_gf(const std::string& method, const RunParams& p) {
  const int n = p.order ? *p.order : 10;
  if (n < 0) fail(errc::invalid_argument, "order must be >= 0");
  const std::optional<int> a = p.max_entry ? p.max_entry : p.a;
  const int a_or_inf = a ? *a : INFINITE;
  if (a && *a < 0) fail(errc::invalid_argument, "max entry must be >= 0");
  if (method == "brute") return gf_brute(weight_param(p), n, a ? *a : UNBOUNDED);
  if (method == "general") {
    if (!p.xi) fail(errc::invalid_argument, "method general needs --xi");
    const AffineWeight w = weight_param(p);
    return gf_general_brute(AffineWeight{*p.xi}, w, n);
  }
  if (method == "borodin") return borodin_product(weight_param(p), n);
  if (method == "determinant") {
    const AffineWeight w = weight_param(p);
    return a ? gk_determinant_gf(w, *a, n) : gk_limit_gf(w, n);
  }
  if (method == "limit") return gk_limit_gf(weight_param(p), n);
  if (method == "bosonic") return bosonic_r2(weight_param(p), a_or_inf, n);
  if (method == "product") return product_r2(weight_param(p), n);
  if (method == "principal") return principal_char(weight_param(p), n);
  if (method == "highest-lift") return hl_gf_brute(weight_param(p), n);
  if (method == "fermionic" || method == "cpag") {
    AffineWeight w = weight_param(p);
    if (w.rank() != 2) fail(errc::rank_error, "method " + method + " needs rank 2");
    const int d = w.level(), k = d / 2;
    if (d % 2 == 0 && w.marks[1] > k) w = mirror_weight(w);
    const int x = w.marks[1];
    if (method == "cpag") {
      if (!a) fail(errc::invalid_argument, "method cpag needs --max-entry");
      if (d < 2) fail(errc::invalid_levels, "method cpag needs d >= 2");
      return cpag_sum(d, std::min(x, d - x), *a, n);
    }
    return fermionic_sum(k, side_b(k, x), a_or_inf, d % 2 == 0, n);
  }
  fail(errc::invalid_argument, "unknown method \"" + method + "\"");
}

}  // namespace agbcyl
