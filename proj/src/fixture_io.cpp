#include "subjetlab/fixture_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace subjetlab {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw SchemaError(path + ": " + msg);
}

const Json& need(const Json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing required field '") + key + "'");
  return *it;
}

void reject_unknown(const Json& j, std::initializer_list<const char*> known,
                    const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) fail(path, "unknown field '" + it.key() + "'");
  }
}

Rational rat_at(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a rational as a string like \"3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const SchemaError& e) {
    fail(path, e.what());
  }
}

RatVec vec_at(const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rationals");
  if (j.size() != n)
    fail(path, "expected " + std::to_string(n) + " entries, found " +
                   std::to_string(j.size()));
  RatVec v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(rat_at(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

Polynomial poly_at(const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object with 'monomials'");
  reject_unknown(j, {"monomials"}, path);
  const Json& ms = need(j, "monomials", path);
  if (!ms.is_array()) fail(path + ".monomials", "expected an array");
  Polynomial p(n);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    std::string mp = path + ".monomials[" + std::to_string(i) + "]";
    const Json& m = ms[i];
    if (!m.is_object()) fail(mp, "expected an object");
    reject_unknown(m, {"exp", "coef"}, mp);
    const Json& ex = need(m, "exp", mp);
    if (!ex.is_array() || ex.size() != n)
      fail(mp + ".exp", "expected " + std::to_string(n) + " integer exponents");
    std::vector<int> exp;
    for (std::size_t k = 0; k < ex.size(); ++k) {
      if (!ex[k].is_number_integer() || ex[k].get<int>() < 0)
        fail(mp + ".exp[" + std::to_string(k) + "]", "expected a nonnegative integer");
      exp.push_back(ex[k].get<int>());
    }
    p.add_term(exp, rat_at(need(m, "coef", mp), mp + ".coef"));
  }
  return p;
}

LinCon lincon_at(const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object with 'a' and 'b'");
  reject_unknown(j, {"a", "b"}, path);
  return LinCon{vec_at(need(j, "a", path), n, path + ".a"),
                rat_at(need(j, "b", path), path + ".b")};
}

Cell cell_at(const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a cell object");
  reject_unknown(j, {"ineqs", "eqs", "poly", "sign_ineqs", "adjacency_at"}, path);
  Cell c;
  c.region = HPolyhedron::whole_space(n);
  if (auto it = j.find("ineqs"); it != j.end()) {
    if (!it->is_array()) fail(path + ".ineqs", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i)
      c.region.ineqs.push_back(
          lincon_at((*it)[i], n, path + ".ineqs[" + std::to_string(i) + "]"));
  }
  if (auto it = j.find("eqs"); it != j.end()) {
    if (!it->is_array()) fail(path + ".eqs", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i)
      c.region.eqs.push_back(
          lincon_at((*it)[i], n, path + ".eqs[" + std::to_string(i) + "]"));
  }
  c.poly = poly_at(need(j, "poly", path), n, path + ".poly");
  if (auto it = j.find("sign_ineqs"); it != j.end()) {
    if (!it->is_array()) fail(path + ".sign_ineqs", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::string sp = path + ".sign_ineqs[" + std::to_string(i) + "]";
      const Json& s = (*it)[i];
      if (!s.is_object()) fail(sp, "expected an object with 'q'");
      reject_unknown(s, {"q", "strict"}, sp);
      SignCon sc;
      sc.q = poly_at(need(s, "q", sp), n, sp + ".q");
      if (auto st = s.find("strict"); st != s.end()) {
        if (!st->is_boolean()) fail(sp + ".strict", "expected a boolean");
        sc.strict = st->get<bool>();
      }
      c.sign_ineqs.push_back(std::move(sc));
    }
  }
  if (auto it = j.find("adjacency_at"); it != j.end()) {
    if (!it->is_array()) fail(path + ".adjacency_at", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::string ap = path + ".adjacency_at[" + std::to_string(i) + "]";
      const Json& a = (*it)[i];
      if (!a.is_object()) fail(ap, "expected an object");
      reject_unknown(a, {"point", "witness_seq"}, ap);
      AdjacencyDecl d;
      d.point = vec_at(need(a, "point", ap), n, ap + ".point");
      const Json& ws = need(a, "witness_seq", ap);
      if (!ws.is_array() || ws.empty())
        fail(ap + ".witness_seq", "expected a nonempty array of points");
      for (std::size_t k = 0; k < ws.size(); ++k)
        d.witness_seq.push_back(
            vec_at(ws[k], n, ap + ".witness_seq[" + std::to_string(k) + "]"));
      c.adjacency_at.push_back(std::move(d));
    }
  }
  return c;
}

Json poly_json(const Polynomial& p) {
  Json ms = Json::array();
  for (const auto& [exp, coef] : p.terms()) {
    Json m;
    m["exp"] = exp;
    m["coef"] = rat_str(coef);
    ms.push_back(std::move(m));
  }
  Json j;
  j["monomials"] = std::move(ms);
  return j;
}

Json vec_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(rat_str(r));
  return a;
}

Json lincon_json(const LinCon& c) {
  Json j;
  j["a"] = vec_json(c.a);
  j["b"] = rat_str(c.b);
  return j;
}

}  // namespace

Fixture parse_fixture(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("fixture is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("fixture: expected a JSON object");
  reject_unknown(j, {"name", "ambient_dim", "tier", "cells", "special_oracle", "pullback"},
                 "fixture");

  Fixture fx;
  const Json& nm = need(j, "name", "fixture");
  if (!nm.is_string()) fail("fixture.name", "expected a string");
  fx.fn.name = nm.get<std::string>();

  const Json& ad = need(j, "ambient_dim", "fixture");
  if (!ad.is_number_integer() || ad.get<int>() < 1)
    fail("fixture.ambient_dim", "expected a positive integer");
  fx.fn.n = static_cast<std::size_t>(ad.get<int>());

  const Json& tr = need(j, "tier", "fixture");
  if (!tr.is_string()) fail("fixture.tier", "expected \"affine\" or \"polynomial\"");
  std::string tier = tr.get<std::string>();
  if (tier == "affine")
    fx.fn.tier = Tier::affine;
  else if (tier == "polynomial")
    fx.fn.tier = Tier::polynomial;
  else
    fail("fixture.tier", "expected \"affine\" or \"polynomial\", found \"" + tier + "\"");

  const Json& cs = need(j, "cells", "fixture");
  if (!cs.is_array() || cs.empty()) fail("fixture.cells", "expected a nonempty array");
  for (std::size_t i = 0; i < cs.size(); ++i)
    fx.fn.cells.push_back(cell_at(cs[i], fx.fn.n, "cells[" + std::to_string(i) + "]"));

  if (auto it = j.find("special_oracle"); it != j.end()) {
    if (!it->is_string()) fail("fixture.special_oracle", "expected a string");
    fx.fn.special_oracle = it->get<std::string>();
  }

  if (fx.fn.tier == Tier::affine) {
    for (std::size_t i = 0; i < fx.fn.cells.size(); ++i) {
      if (!fx.fn.cells[i].sign_ineqs.empty())
        fail("cells[" + std::to_string(i) + "].sign_ineqs",
             "polynomial sign conditions need tier \"polynomial\"");
      if (!fx.fn.cells[i].poly.is_affine())
        fail("cells[" + std::to_string(i) + "].poly",
             "affine tier requires degree at most 1");
    }
  }

  if (auto it = j.find("pullback"); it != j.end()) {
    const Json& pb = *it;
    if (!pb.is_object()) fail("fixture.pullback", "expected an object");
    reject_unknown(pb, {"A", "c"}, "fixture.pullback");
    PullbackDecl d;
    const Json& A = need(pb, "A", "fixture.pullback");
    if (!A.is_array() || A.size() != fx.fn.n)
      fail("fixture.pullback.A",
           "expected one row per ambient dimension (" + std::to_string(fx.fn.n) + ")");
    std::size_t m = 0;
    for (std::size_t i = 0; i < A.size(); ++i) {
      std::string rp = "fixture.pullback.A[" + std::to_string(i) + "]";
      if (!A[i].is_array() || A[i].empty()) fail(rp, "expected a nonempty row");
      if (i == 0)
        m = A[i].size();
      else if (A[i].size() != m)
        fail(rp, "rows must share one length");
      d.A.push_back(vec_at(A[i], m, rp));
    }
    d.c = vec_at(need(pb, "c", "fixture.pullback"), fx.fn.n, "fixture.pullback.c");
    fx.pullback = std::move(d);
  }
  return fx;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open fixture file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fixture(ss.str());
}

std::string fixture_to_json(const Fixture& fx) {
  Json j;
  j["name"] = fx.fn.name;
  j["ambient_dim"] = static_cast<int>(fx.fn.n);
  j["tier"] = fx.fn.tier == Tier::affine ? "affine" : "polynomial";
  Json cells = Json::array();
  for (const auto& c : fx.fn.cells) {
    Json cj;
    if (!c.region.ineqs.empty()) {
      Json arr = Json::array();
      for (const auto& con : c.region.ineqs) arr.push_back(lincon_json(con));
      cj["ineqs"] = std::move(arr);
    }
    if (!c.region.eqs.empty()) {
      Json arr = Json::array();
      for (const auto& con : c.region.eqs) arr.push_back(lincon_json(con));
      cj["eqs"] = std::move(arr);
    }
    cj["poly"] = poly_json(c.poly);
    if (!c.sign_ineqs.empty()) {
      Json arr = Json::array();
      for (const auto& s : c.sign_ineqs) {
        Json sj;
        sj["q"] = poly_json(s.q);
        if (s.strict) sj["strict"] = true;
        arr.push_back(std::move(sj));
      }
      cj["sign_ineqs"] = std::move(arr);
    }
    if (!c.adjacency_at.empty()) {
      Json arr = Json::array();
      for (const auto& a : c.adjacency_at) {
        Json aj;
        aj["point"] = vec_json(a.point);
        Json ws = Json::array();
        for (const auto& w : a.witness_seq) ws.push_back(vec_json(w));
        aj["witness_seq"] = std::move(ws);
        arr.push_back(std::move(aj));
      }
      cj["adjacency_at"] = std::move(arr);
    }
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  if (!fx.fn.special_oracle.empty()) j["special_oracle"] = fx.fn.special_oracle;
  if (fx.pullback) {
    Json pb;
    Json A = Json::array();
    for (const auto& row : fx.pullback->A) A.push_back(vec_json(row));
    pb["A"] = std::move(A);
    pb["c"] = vec_json(fx.pullback->c);
    j["pullback"] = std::move(pb);
  }
  return j.dump(2) + "\n";
}

void save_fixture(const Fixture& fx, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write fixture file: " + path);
  out << fixture_to_json(fx);
}

std::string resolve_fixture_path(const std::string& arg) {
  namespace fs = std::filesystem;
  std::vector<std::string> tried;
  auto attempt = [&](const std::string& cand) -> std::optional<std::string> {
    tried.push_back(cand);
    if (fs::exists(cand) && fs::is_regular_file(cand)) return cand;
    return std::nullopt;
  };
  if (auto r = attempt(arg)) return *r;
  if (auto r = attempt(arg + ".json")) return *r;
  if (const char* env = std::getenv("SUBJET_CORPUS")) {
    if (auto r = attempt(std::string(env) + "/" + arg)) return *r;
    if (auto r = attempt(std::string(env) + "/" + arg + ".json")) return *r;
  }
  std::string msg = "fixture not found: " + arg + " (tried";
  for (const auto& t : tried) msg += " " + t;
  msg += "; set SUBJET_CORPUS to the fixture directory)";
  throw SchemaError(msg);
}

std::uint64_t fixture_digest(const Fixture& fx) {
  std::string s = fixture_to_json(fx);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace subjetlab
