#include "subjetlab/double_description.hpp"

#include <bitset>
#include <map>
#include <stdexcept>

namespace subjetlab {

namespace {

constexpr std::size_t kMaxRows = 192;
using Tight = std::bitset<kMaxRows>;

struct DDRay {
  RatVec v;
  Tight tight;
};

bool subset_of(const Tight& a, const Tight& b) { return (a & ~b).none(); }

// Incremental double description with an explicit lineality basis.
// Invariants after processing rows 0..k-1:
//  * span(lines) is the lineality space of the current cone, and every
//    line is orthogonal to every processed row;
//  * rays are exactly the extreme rays modulo the lineality space;
//  * each ray's tight set records the processed rows it satisfies with 0.
struct DDState {
  std::vector<RatVec> lines;
  std::vector<DDRay> rays;

  void add_row(const RatVec& a, std::size_t k) {
    std::size_t l0 = lines.size();
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (dot(a, lines[i]) != 0) {
        l0 = i;
        break;
      }
    }
    if (l0 < lines.size()) {
      resolve_line(a, k, l0);
    } else {
      resolve_rays(a, k);
    }
    dedupe();
  }

  void resolve_line(const RatVec& a, std::size_t k, std::size_t idx) {
    RatVec l0 = lines[idx];
    Rational al0 = dot(a, l0);
    if (al0 > 0) {
      l0 = vec_scale(Rational(-1), l0);
      al0 = -al0;
    }
    lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(idx));
    for (auto& l : lines) {
      Rational t = dot(a, l) / al0;
      if (t != 0) l = primitive_direction(vec_sub(l, vec_scale(t, l0)));
    }
    for (auto& r : rays) {
      Rational t = dot(a, r.v) / al0;
      if (t != 0) r.v = primitive_ray(vec_sub(r.v, vec_scale(t, l0)));
      r.tight.set(k);
    }
    DDRay nr;
    nr.v = primitive_ray(l0);
    for (std::size_t j = 0; j < k; ++j) nr.tight.set(j);
    rays.push_back(std::move(nr));
  }

  void resolve_rays(const RatVec& a, std::size_t k) {
    std::vector<std::size_t> pos, neg;
    std::vector<Rational> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      int s = rat_sign(val[i]);
      if (s > 0)
        pos.push_back(i);
      else if (s < 0)
        neg.push_back(i);
      else
        rays[i].tight.set(k);
    }
    if (pos.empty()) return;
    std::vector<DDRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (rat_sign(val[i]) <= 0) next.push_back(rays[i]);
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        if (!adjacent(p, q)) continue;
        DDRay w;
        w.v = primitive_ray(
            vec_sub(vec_scale(val[p], rays[q].v), vec_scale(val[q], rays[p].v)));
        w.tight = (rays[p].tight & rays[q].tight);
        w.tight.set(k);
        next.push_back(std::move(w));
      }
    }
    rays = std::move(next);
  }

  bool adjacent(std::size_t p, std::size_t q) const {
    Tight t = rays[p].tight & rays[q].tight;
    for (std::size_t s = 0; s < rays.size(); ++s) {
      if (s == p || s == q) continue;
      if (subset_of(t, rays[s].tight)) return false;
    }
    return true;
  }

  void dedupe() {
    std::map<RatVec, std::size_t> seen;
    std::vector<DDRay> out;
    for (auto& r : rays) {
      auto [it, fresh] = seen.emplace(r.v, out.size());
      if (fresh) out.push_back(std::move(r));
    }
    rays = std::move(out);
  }
};

}  // namespace

ConeGen cone_generators(const std::vector<RatVec>& ineq_rows,
                        const std::vector<RatVec>& eq_rows, std::size_t n) {
  if (ineq_rows.size() > kMaxRows)
    throw std::logic_error("cone_generators: too many rows");
  DDState st;
  if (eq_rows.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      RatVec e(n, Rational(0));
      e[i] = 1;
      st.lines.push_back(std::move(e));
    }
  } else {
    RatMat M(eq_rows.size(), n);
    for (std::size_t i = 0; i < eq_rows.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) M.at(i, j) = eq_rows[i][j];
    for (auto& v : null_space(M)) st.lines.push_back(primitive_direction(v));
  }
  for (std::size_t k = 0; k < ineq_rows.size(); ++k) st.add_row(ineq_rows[k], k);
  ConeGen out;
  for (auto& r : st.rays) out.rays.push_back(std::move(r.v));
  out.lines = std::move(st.lines);
  return out;
}

ConeGen cone_constraints(const std::vector<RatVec>& rays,
                         const std::vector<RatVec>& lines, std::size_t n) {
  // The polar cone of cone(rays)+span(lines) is cut out by the generators;
  // its generators, in turn, are the constraint rows of the original cone.
  return cone_generators(rays, lines, n);
}

VRep dd_vrep(const HPolyhedron& P) {
  std::size_t m = P.n + 1;
  std::vector<RatVec> rows, eqrows;
  for (const auto& c : P.ineqs) {
    RatVec r = c.a;
    r.push_back(-c.b);
    rows.push_back(std::move(r));
  }
  RatVec tr(m, Rational(0));
  tr[P.n] = -1;
  rows.push_back(std::move(tr));
  for (const auto& c : P.eqs) {
    RatVec r = c.a;
    r.push_back(-c.b);
    eqrows.push_back(std::move(r));
  }
  ConeGen cg = cone_generators(rows, eqrows, m);
  VRep out;
  for (const auto& l : cg.lines) {
    if (l[P.n] != 0) throw std::logic_error("dd_vrep: line escapes t=0");
    out.lines.emplace_back(l.begin(), l.end() - 1);
  }
  for (const auto& r : cg.rays) {
    Rational t = r[P.n];
    RatVec x(r.begin(), r.end() - 1);
    if (t > 0)
      out.vertices.push_back(vec_scale(Rational(1) / t, x));
    else
      out.rays.push_back(std::move(x));
  }
  return out;
}

HPolyhedron dd_hrep(const VRep& V, std::size_t n) {
  if (V.empty()) return HPolyhedron::empty_set(n);
  std::vector<RatVec> hr, hl;
  for (const auto& v : V.vertices) {
    RatVec g = v;
    g.push_back(Rational(1));
    hr.push_back(std::move(g));
  }
  for (const auto& r : V.rays) {
    RatVec g = r;
    g.push_back(Rational(0));
    hr.push_back(std::move(g));
  }
  for (const auto& l : V.lines) {
    RatVec g = l;
    g.push_back(Rational(0));
    hl.push_back(std::move(g));
  }
  ConeGen cc = cone_constraints(hr, hl, n + 1);
  HPolyhedron P = HPolyhedron::whole_space(n);
  for (const auto& w : cc.rays) {
    RatVec a(w.begin(), w.end() - 1);
    if (vec_is_zero(a)) continue;
    P.add_ineq(std::move(a), -w[n]);
  }
  for (const auto& w : cc.lines) {
    RatVec a(w.begin(), w.end() - 1);
    if (vec_is_zero(a)) continue;
    P.add_eq(std::move(a), -w[n]);
  }
  return P;
}

}  // namespace subjetlab
