#include "hurwitz/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace hurwitz::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("malformed json: " + what); }

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(what);
  return j.get<int>();
}

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) malformed("rational must be a string");
  return parse_rational(j.get<std::string>());
}

Json to_json(const Partition& p) { return Json(std::vector<int>(p.parts().begin(), p.parts().end())); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) malformed("partition must be an array");
  std::vector<int> parts;
  for (const auto& x : j) parts.push_back(as_int(x, "partition part"));
  return Partition(std::move(parts));
}

Json to_json(const Truncation& t) {
  Json j = Json::object();
  for (std::size_t a = 0; a < kAlphabetCount; ++a) {
    auto alpha = static_cast<Alphabet>(a);
    if (auto b = t.bound(alpha)) j[std::string(alphabet_name(alpha))] = *b;
  }
  return j;
}

Truncation truncation_from_json(const Json& j) {
  if (!j.is_object()) malformed("truncation must be an object");
  Truncation t;
  for (const auto& [name, bound] : j.items()) {
    auto a = alphabet_from_name(name);
    if (!a) malformed("unknown alphabet '" + name + "'");
    t = t.with(*a, as_int(bound, "truncation bound"));
  }
  return t;
}

Json to_json(const Monomial& m) {
  Json j = Json::array();
  for (const auto& [v, e] : m.factors()) {
    const std::string name(alphabet_name(v.alphabet));
    switch (v.alphabet) {
      case Alphabet::Q:
      case Alphabet::P: j.push_back(Json::array({name, v.i, e})); break;
      case Alphabet::T: j.push_back(Json::array({name, v.i, v.j, e})); break;
      default: j.push_back(Json::array({name, e})); break;
    }
  }
  return j;
}

Monomial monomial_from_json(const Json& j) {
  if (!j.is_array()) malformed("monomial must be an array");
  std::vector<Monomial::Factor> f;
  for (const auto& x : j) {
    if (!x.is_array() || x.empty() || !x[0].is_string()) malformed("monomial factor");
    auto a = alphabet_from_name(x[0].get<std::string>());
    if (!a) malformed("unknown alphabet in monomial");
    if ((*a == Alphabet::Q || *a == Alphabet::P) && x.size() == 3)
      f.emplace_back(VarId{*a, as_int(x[1], "index"), 0}, as_int(x[2], "exponent"));
    else if (*a == Alphabet::T && x.size() == 4)
      f.emplace_back(VarId::t(as_int(x[1], "index"), as_int(x[2], "index")), as_int(x[3], "exponent"));
    else if (x.size() == 2 && *a != Alphabet::Q && *a != Alphabet::P && *a != Alphabet::T)
      f.emplace_back(VarId{*a, 0, 0}, as_int(x[1], "exponent"));
    else
      malformed("monomial factor arity");
  }
  return Monomial(std::move(f));
}

Json to_json(const GradedSeries& s) {
  Json terms = Json::array();
  for (const auto& [m, c] : s.terms()) terms.push_back(Json{{"monomial", to_json(m)}, {"coeff", to_json(c)}});
  return Json{{"truncation", to_json(s.truncation())}, {"terms", std::move(terms)}};
}

GradedSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("truncation") || !j.contains("terms")) malformed("series");
  GradedSeries s(truncation_from_json(j["truncation"]));
  for (const auto& t : j["terms"]) {
    if (!t.contains("monomial") || !t.contains("coeff")) malformed("series term");
    Monomial m = monomial_from_json(t["monomial"]);
    if (!s.truncation().admits(m)) malformed("term outside truncation");
    s.add_term(m, rational_from_json(t["coeff"]));
  }
  return s;
}

Json to_json(const ZPoly& p) {
  Json out = Json::array();
  for (const auto& [key, c] : p.terms()) {
    Json gens = Json::array();
    for (auto it = key.rbegin(); it != key.rend(); ++it) gens.push_back(Json::array({it->d, it->r}));
    out.push_back(Json{{"gens", std::move(gens)}, {"coeff", to_json(c)}});
  }
  return out;
}

ZPoly zpoly_from_json(const Json& j) {
  if (!j.is_array()) malformed("zpoly must be an array");
  ZPoly p;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("gens") || !t.contains("coeff")) malformed("zpoly term");
    ZPoly::Key key;
    for (const auto& g : t["gens"]) {
      if (!g.is_array() || g.size() != 2) malformed("zpoly generator");
      key.push_back({as_int(g[0], "d"), as_int(g[1], "r")});
    }
    p.add_term(std::move(key), rational_from_json(t["coeff"]));
  }
  return p;
}

Json to_json(const CharTable& t) {
  Json parts = Json::array();
  for (const auto& p : t.partitions()) parts.push_back(to_json(p));
  Json rows = Json::array();
  Json z = Json::array();
  const std::size_t n = t.partitions().size();
  for (std::size_t r = 0; r < n; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < n; ++c) row.push_back(t.value(r, c));
    rows.push_back(std::move(row));
    z.push_back(t.centralizer(r).get_str());
  }
  return Json{{"K", t.degree()}, {"partitions", std::move(parts)}, {"z", std::move(z)}, {"values", std::move(rows)}};
}

}  // namespace hurwitz::io
