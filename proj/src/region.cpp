#include "subjetlab/region.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "subjetlab/double_description.hpp"

namespace subjetlab {

RatVec hyperplane_key(const RatVec& a, const Rational& b) {
  RatVec k = a;
  k.push_back(b);
  return primitive_direction(k);
}

std::vector<LinCon> union_cut_list(const std::vector<HPolyhedron>& U) {
  std::set<RatVec> seen;
  std::vector<LinCon> cuts;
  auto push = [&](const LinCon& c) {
    if (vec_is_zero(c.a)) return;
    RatVec key = hyperplane_key(c.a, c.b);
    if (!seen.insert(key).second) return;
    RatVec a(key.begin(), key.end() - 1);
    cuts.push_back(LinCon{std::move(a), key.back()});
  };
  for (const auto& P : U) {
    for (const auto& c : P.ineqs) push(c);
    for (const auto& c : P.eqs) push(c);
  }
  return cuts;
}

namespace {

// Which closed sides of a·x ≤/≥ b contain the whole cell.
struct SideTest {
  bool le = true, ge = true;
};

SideTest side_of(const VRep& V, const RatVec& a, const Rational& b) {
  SideTest s;
  for (const auto& v : V.vertices) {
    Rational t = dot(a, v);
    if (t > b) s.le = false;
    if (t < b) s.ge = false;
  }
  for (const auto& r : V.rays) {
    int g = rat_sign(dot(a, r));
    if (g > 0) s.le = false;
    if (g < 0) s.ge = false;
  }
  for (const auto& l : V.lines) {
    if (dot(a, l) != 0) {
      s.le = false;
      s.ge = false;
    }
  }
  return s;
}

}  // namespace

std::vector<RefCell> refine_against(const HPolyhedron& P,
                                    const std::vector<LinCon>& cuts) {
  std::vector<RefCell> cells;
  {
    VRep V = dd_vrep(P);
    if (V.empty()) return cells;
    cells.push_back(RefCell{P, std::move(V)});
  }
  for (const auto& c : cuts) {
    std::vector<RefCell> next;
    for (auto& cell : cells) {
      SideTest s = side_of(cell.vrep, c.a, c.b);
      if (s.le || s.ge) {
        next.push_back(std::move(cell));
        continue;
      }
      HPolyhedron lo = cell.poly;
      lo.add_ineq(c.a, c.b);
      HPolyhedron hi = cell.poly;
      hi.add_ineq(vec_scale(Rational(-1), c.a), -c.b);
      next.push_back(RefCell{lo, dd_vrep(lo)});
      next.push_back(RefCell{hi, dd_vrep(hi)});
    }
    cells = std::move(next);
  }
  return cells;
}

bool poly_subset(const VRep& V, const HPolyhedron& Q) {
  for (const auto& v : V.vertices)
    if (!contains(Q, v)) return false;
  for (const auto& r : V.rays) {
    for (const auto& c : Q.ineqs)
      if (dot(c.a, r) > 0) return false;
    for (const auto& c : Q.eqs)
      if (dot(c.a, r) != 0) return false;
  }
  for (const auto& l : V.lines) {
    for (const auto& c : Q.ineqs)
      if (dot(c.a, l) != 0) return false;
    for (const auto& c : Q.eqs)
      if (dot(c.a, l) != 0) return false;
  }
  return true;
}

bool union_member(const RatVec& x, const std::vector<HPolyhedron>& U) {
  for (const auto& P : U)
    if (contains(P, x)) return true;
  return false;
}

InclusionResult union_contains(const HPolyhedron& Q,
                               const std::vector<HPolyhedron>& U) {
  std::vector<LinCon> cuts = union_cut_list(U);
  std::vector<RefCell> cells = refine_against(Q, cuts);
  // Each cell lies in one closed side of every member constraint, so a
  // cell is inside a member iff its relative interior point is.
  for (const auto& cell : cells) {
    RatVec p = relint_point(cell.vrep);
    if (!union_member(p, U)) return InclusionResult{false, std::move(p)};
  }
  return InclusionResult{true, std::nullopt};
}

std::vector<RefCell> full_dim_sign_cones(const std::vector<RatVec>& normals,
                                         std::size_t n) {
  HPolyhedron all = HPolyhedron::whole_space(n);
  std::vector<LinCon> cuts;
  std::set<RatVec> seen;
  for (const auto& a : normals) {
    if (vec_is_zero(a)) continue;
    RatVec key = primitive_direction(a);
    if (seen.insert(key).second) cuts.push_back(LinCon{key, Rational(0)});
  }
  return refine_against(all, cuts);
}

bool point_in_union_interior(const RatVec& x, const std::vector<HPolyhedron>& U) {
  if (U.empty()) return false;
  std::size_t n = U.front().n;
  // Near x the union looks like x + (union of tangent cones of the members
  // containing x); x is interior iff those cones cover all directions.
  std::vector<HPolyhedron> tangents;
  std::vector<RatVec> normals;
  for (const auto& P : U) {
    if (!contains(P, x)) continue;
    HPolyhedron T = tangent_cone_at(P, x);
    for (const auto& c : T.ineqs) normals.push_back(c.a);
    for (const auto& c : T.eqs) normals.push_back(c.a);
    tangents.push_back(std::move(T));
  }
  if (tangents.empty()) return false;
  for (const auto& cone : full_dim_sign_cones(normals, n)) {
    RatVec d = relint_point(cone.vrep);
    bool covered = false;
    for (const auto& T : tangents) {
      if (contains(T, d)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace subjetlab
