#include "subjetlab/special.hpp"

#include <stdexcept>

#include "subjetlab/double_description.hpp"

namespace subjetlab {

namespace {

constexpr const char* kComposite = "min_quadratic_composite";
constexpr const char* kDisc = "open_disc_plus_point";

Rational rat(int v) { return Rational(v); }

RatVec v3(const Rational& a, const Rational& b, const Rational& c) { return {a, b, c}; }
RatVec v3i(int a, int b, int c) { return {rat(a), rat(b), rat(c)}; }

HPolyhedron hull_of(std::vector<RatVec> pts) {
  VRep V;
  std::size_t n = pts.front().size();
  V.vertices = std::move(pts);
  return dd_hrep(V, n);
}

HPolyhedron ray_of(const RatVec& origin, const RatVec& dir) {
  VRep V;
  V.vertices = {origin};
  V.rays = {dir};
  return dd_hrep(V, origin.size());
}

// ---------------------------------------------------------------------------
// Catalog: min_quadratic_composite on R^3.
//
//   f(x) = min{x, y, z^2}    on the orthant x, y, z >= 0,
//   f(x) = min{-x, -y, z^2}  on the orthant x, y, z <= 0,
//   f(x) = 0                 elsewhere.
//
// f >= 0 everywhere, f is locally Lipschitz, and f vanishes exactly on the
// union of the six closed orthants that are neither all-nonnegative nor
// all-nonpositive. All answers below come from the sign pattern of the
// point and, inside the definable orthants, from which of the three
// branches attain the minimum.
// ---------------------------------------------------------------------------

struct Pattern {
  int sa, sb, sc;  // signs of the coordinates
};

Pattern pattern_of(const RatVec& x) {
  return {rat_sign(x[0]), rat_sign(x[1]), rat_sign(x[2])};
}

// Active branches of min{x, y, z^2} at a point of the open positive
// orthant (mirrored for the negative one): 0 = first coordinate branch,
// 1 = second, 2 = quadratic.
std::vector<int> actives_at(const RatVec& x, bool positive) {
  Rational u = positive ? x[0] : -x[0];
  Rational v = positive ? x[1] : -x[1];
  Rational w = x[2] * x[2];
  Rational m = std::min(std::min(u, v), w);
  std::vector<int> act;
  if (u == m) act.push_back(0);
  if (v == m) act.push_back(1);
  if (w == m) act.push_back(2);
  return act;
}

RatVec branch_grad(int branch, const RatVec& x, bool positive) {
  int s = positive ? 1 : -1;
  if (branch == 0) return v3i(s, 0, 0);
  if (branch == 1) return v3i(0, s, 0);
  return v3(rat(0), rat(0), rat(2) * x[2]);
}

SubdiffResult composite_subdiff(Kind k, const RatVec& x) {
  SubdiffResult r;
  Pattern p = pattern_of(x);
  const RatVec zero = v3i(0, 0, 0);
  const RatVec e1 = v3i(1, 0, 0), e2 = v3i(0, 1, 0);
  const RatVec m1 = v3i(-1, 0, 0), m2 = v3i(0, -1, 0);

  bool all_pos = p.sa > 0 && p.sb > 0 && p.sc > 0;
  bool all_neg = p.sa < 0 && p.sb < 0 && p.sc < 0;
  if (all_pos || all_neg) {
    std::vector<int> act = actives_at(x, all_pos);
    if (k == Kind::frechet) {
      if (act.size() == 1) r.pieces.push_back(hull_of({branch_grad(act[0], x, all_pos)}));
      return r;
    }
    if (k == Kind::limiting) {
      for (int b : act) r.pieces.push_back(hull_of({branch_grad(b, x, all_pos)}));
      return r;
    }
    std::vector<RatVec> grads;
    for (int b : act) grads.push_back(branch_grad(b, x, all_pos));
    r.pieces.push_back(hull_of(std::move(grads)));
    return r;
  }

  bool has_pos = p.sa > 0 || p.sb > 0 || p.sc > 0;
  bool has_neg = p.sa < 0 || p.sb < 0 || p.sc < 0;
  if (has_pos && has_neg) {
    // Mixed strict signs: f vanishes identically on a neighborhood.
    r.pieces.push_back(hull_of({zero}));
    return r;
  }

  // From here the nonzero coordinates share one sign; mirror to >= 0.
  bool mirror = has_neg;
  int qa = mirror ? -p.sa : p.sa, qb = mirror ? -p.sb : p.sb, qc = mirror ? -p.sc : p.sc;
  const RatVec g1 = mirror ? m1 : e1;
  const RatVec g2 = mirror ? m2 : e2;

  auto seg_to = [&](const RatVec& g) { return hull_of({zero, g}); };

  if (qa == 0 && qb > 0 && qc > 0) {
    r.pieces.push_back(seg_to(g1));  // locally f = max(+-x, 0)
    return r;
  }
  if (qa > 0 && qb == 0 && qc > 0) {
    r.pieces.push_back(seg_to(g2));
    return r;
  }
  if (k == Kind::frechet) {
    // Every remaining pattern leaves only the zero gradient.
    r.pieces.push_back(hull_of({zero}));
    return r;
  }
  if (qa == 0 && qb == 0 && qc > 0) {
    if (k == Kind::limiting) {
      r.pieces.push_back(seg_to(g1));
      r.pieces.push_back(seg_to(g2));
    } else {
      r.pieces.push_back(hull_of({zero, g1, g2}));
    }
    return r;
  }
  if (qa == 0 && qb > 0 && qc == 0) {
    r.pieces.push_back(seg_to(g1));
    return r;
  }
  if (qa > 0 && qb == 0 && qc == 0) {
    r.pieces.push_back(seg_to(g2));
    return r;
  }
  if (qa == 0 && qb == 0 && qc == 0) {
    if (k == Kind::limiting) {
      r.pieces.push_back(hull_of({m1, e1}));
      r.pieces.push_back(hull_of({m2, e2}));
    } else {
      r.pieces.push_back(hull_of({e1, e2, m1, m2}));
    }
    return r;
  }
  // (+,+,0) pattern and its mirror: locally f = max(z,0)^2, smooth.
  r.pieces.push_back(hull_of({zero}));
  return r;
}

// --- graph pieces ----------------------------------------------------------

using MemberFn = std::function<bool(const RatVec&, const RatVec&)>;

GraphPiece cat_piece(std::string label, int d, MemberFn member, MemberFn closure) {
  GraphPiece p;
  p.label = std::move(label);
  p.dim = d;
  p.member = std::move(member);
  p.closure_member = closure ? std::move(closure) : p.member;
  return p;
}

bool is_nonneg(const Rational& r) { return rat_sign(r) >= 0; }

// Closure of the branch cells.
bool in_c1(const RatVec& x, int s) {  // branch f = s*x1 on the s-orthant
  Rational a = rat(s) * x[0], b = rat(s) * x[1], c = rat(s) * x[2];
  return is_nonneg(a) && b >= a && is_nonneg(c) && a <= x[2] * x[2];
}
bool in_c2(const RatVec& x, int s) {
  Rational a = rat(s) * x[0], b = rat(s) * x[1], c = rat(s) * x[2];
  return is_nonneg(b) && a >= b && is_nonneg(c) && b <= x[2] * x[2];
}
bool in_c3(const RatVec& x, int s) {
  Rational a = rat(s) * x[0], b = rat(s) * x[1], c = rat(s) * x[2];
  return is_nonneg(c) && a >= x[2] * x[2] && b >= x[2] * x[2];
}
// Strict sets where the regular subdifferential is the branch gradient.
bool in_c1_strict(const RatVec& x, int s) {
  Rational a = rat(s) * x[0], b = rat(s) * x[1], c = rat(s) * x[2];
  return rat_sign(a) > 0 && b > a && rat_sign(c) > 0 && a < x[2] * x[2];
}
bool in_c2_strict(const RatVec& x, int s) {
  Rational a = rat(s) * x[0], b = rat(s) * x[1], c = rat(s) * x[2];
  return rat_sign(b) > 0 && a > b && rat_sign(c) > 0 && b < x[2] * x[2];
}
bool in_c3_strict(const RatVec& x, int s) {
  Rational a = rat(s) * x[0], b = rat(s) * x[1], c = rat(s) * x[2];
  return rat_sign(c) > 0 && a > x[2] * x[2] && b > x[2] * x[2];
}

bool veq(const RatVec& v, const RatVec& w) { return v == w; }

HPolyhedron orthant_poly(int sx, int sy, int sz) {
  HPolyhedron P = HPolyhedron::whole_space(3);
  P.add_ineq(v3i(-sx, 0, 0), rat(0));
  P.add_ineq(v3i(0, -sy, 0), rat(0));
  P.add_ineq(v3i(0, 0, -sz), rat(0));
  return P;
}

HPolyhedron plane_face_poly(int axis, int s) {
  // {x_axis = 0, the other two coordinates on the s side}.
  HPolyhedron P = HPolyhedron::whole_space(3);
  RatVec e(3, rat(0));
  e[axis] = rat(1);
  P.add_eq(e, rat(0));
  for (int i = 0; i < 3; ++i) {
    if (i == axis) continue;
    RatVec a(3, rat(0));
    a[i] = rat(-s);
    P.add_ineq(std::move(a), rat(0));
  }
  return P;
}

void add_zero_orthant_pieces(std::vector<GraphPiece>& out) {
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) {
        if (sx == sy && sy == sz) continue;
        GraphPiece p = product_piece(orthant_poly(sx, sy, sz),
                                     hull_of({v3i(0, 0, 0)}), false, "");
        p.label = std::string("{ ") + (sx > 0 ? "x>=0" : "x<=0") + ", " +
                  (sy > 0 ? "y>=0" : "y<=0") + ", " + (sz > 0 ? "z>=0" : "z<=0") +
                  " }  x  { 0 }";
        out.push_back(std::move(p));
      }
}

void add_branch_cell_pieces(std::vector<GraphPiece>& out) {
  for (int s : {1, -1}) {
    std::string sgn = s > 0 ? "" : "-";
    std::string orth = s > 0 ? "on x,y,z>=0" : "on x,y,z<=0";
    RatVec g1 = v3i(s, 0, 0), g2 = v3i(0, s, 0);
    out.push_back(cat_piece(
        "{ " + sgn + "x smallest branch " + orth + " }  x  { " + sgn + "e1 }", 3,
        [s, g1](const RatVec& x, const RatVec& v) { return in_c1(x, s) && veq(v, g1); },
        nullptr));
    out.push_back(cat_piece(
        "{ " + sgn + "y smallest branch " + orth + " }  x  { " + sgn + "e2 }", 3,
        [s, g2](const RatVec& x, const RatVec& v) { return in_c2(x, s) && veq(v, g2); },
        nullptr));
    out.push_back(cat_piece(
        "{ z^2 smallest branch " + orth + " }  x  { (0,0,2z) }", 3,
        [s](const RatVec& x, const RatVec& v) {
          return in_c3(x, s) && veq(v, v3(rat(0), rat(0), rat(2) * x[2]));
        },
        nullptr));
  }
}

void add_plane_face_pieces(std::vector<GraphPiece>& out) {
  for (int s : {1, -1}) {
    std::string sg = s > 0 ? "" : "-";
    GraphPiece px = product_piece(plane_face_poly(0, s),
                                  hull_of({v3i(0, 0, 0), v3i(s, 0, 0)}), false, "");
    px.label = "{ x=0, " + std::string(s > 0 ? "y,z>=0" : "y,z<=0") + " }  x  conv{0," +
               sg + "e1}";
    out.push_back(std::move(px));
    GraphPiece py = product_piece(plane_face_poly(1, s),
                                  hull_of({v3i(0, 0, 0), v3i(0, s, 0)}), false, "");
    py.label = "{ y=0, " + std::string(s > 0 ? "x,z>=0" : "x,z<=0") + " }  x  conv{0," +
               sg + "e2}";
    out.push_back(std::move(py));
  }
}

std::vector<GraphPiece> composite_graph(Kind k) {
  std::vector<GraphPiece> out;

  if (k == Kind::frechet) {
    add_zero_orthant_pieces(out);
    for (int s : {1, -1}) {
      std::string sg = s > 0 ? "" : "-";
      std::string orth = s > 0 ? "x,y,z>0" : "x,y,z<0";
      out.push_back(cat_piece(
          "{ " + sg + "x strictly smallest branch, " + orth + " }  x  { " + sg + "e1 }",
          3,
          [s](const RatVec& x, const RatVec& v) {
            return in_c1_strict(x, s) && veq(v, v3i(s, 0, 0));
          },
          [s](const RatVec& x, const RatVec& v) {
            return in_c1(x, s) && veq(v, v3i(s, 0, 0));
          }));
      out.push_back(cat_piece(
          "{ " + sg + "y strictly smallest branch, " + orth + " }  x  { " + sg + "e2 }",
          3,
          [s](const RatVec& x, const RatVec& v) {
            return in_c2_strict(x, s) && veq(v, v3i(0, s, 0));
          },
          [s](const RatVec& x, const RatVec& v) {
            return in_c2(x, s) && veq(v, v3i(0, s, 0));
          }));
      out.push_back(cat_piece(
          "{ z^2 strictly smallest branch, " + orth + " }  x  { (0,0,2z) }", 3,
          [s](const RatVec& x, const RatVec& v) {
            return in_c3_strict(x, s) && veq(v, v3(rat(0), rat(0), rat(2) * x[2]));
          },
          [s](const RatVec& x, const RatVec& v) {
            return in_c3(x, s) && veq(v, v3(rat(0), rat(0), rat(2) * x[2]));
          }));
      // Relative interiors of the coordinate-plane faces carry the full
      // segment fibers.
      GraphPiece gx = product_piece(plane_face_poly(0, s),
                                    hull_of({v3i(0, 0, 0), v3i(s, 0, 0)}), true, "");
      gx.label = "relint{ x=0, " + std::string(s > 0 ? "y,z>=0" : "y,z<=0") +
                 " }  x  conv{0," + sg + "e1}";
      out.push_back(std::move(gx));
      GraphPiece gy = product_piece(plane_face_poly(1, s),
                                    hull_of({v3i(0, 0, 0), v3i(0, s, 0)}), true, "");
      gy.label = "relint{ y=0, " + std::string(s > 0 ? "x,z>=0" : "x,z<=0") +
                 " }  x  conv{0," + sg + "e2}";
      out.push_back(std::move(gy));
    }
    return out;
  }

  // Limiting pieces; the Clarke graph extends them below.
  add_branch_cell_pieces(out);
  add_zero_orthant_pieces(out);
  add_plane_face_pieces(out);
  if (k == Kind::limiting) return out;

  for (int s : {1, -1}) {
    std::string sg = s > 0 ? "" : "-";
    out.push_back(cat_piece(
        "{ " + sg + "x=" + sg + "y<=z^2 branch tie }  x  conv{" + sg + "e1," + sg +
            "e2}",
        3,
        [s](const RatVec& x, const RatVec& v) {
          Rational a = rat(s) * x[0];
          return x[0] == x[1] && is_nonneg(a) && a <= x[2] * x[2] &&
                 is_nonneg(rat(s) * x[2]) && v[2] == 0 && is_nonneg(rat(s) * v[0]) &&
                 is_nonneg(rat(s) * v[1]) && rat(s) * (v[0] + v[1]) == 1;
        },
        nullptr));
    out.push_back(cat_piece(
        "{ " + sg + "x=z^2 branch tie }  x  conv{" + sg + "e1,(0,0,2z)}", 3,
        [s](const RatVec& x, const RatVec& v) {
          Rational a = rat(s) * x[0], b = rat(s) * x[1];
          return a == x[2] * x[2] && b >= a && is_nonneg(rat(s) * x[2]) && v[1] == 0 &&
                 is_nonneg(rat(s) * v[0]) && rat(s) * v[0] <= 1 &&
                 v[2] == (rat(1) - rat(s) * v[0]) * rat(2) * x[2];
        },
        nullptr));
    out.push_back(cat_piece(
        "{ " + sg + "y=z^2 branch tie }  x  conv{" + sg + "e2,(0,0,2z)}", 3,
        [s](const RatVec& x, const RatVec& v) {
          Rational a = rat(s) * x[0], b = rat(s) * x[1];
          return b == x[2] * x[2] && a >= b && is_nonneg(rat(s) * x[2]) && v[0] == 0 &&
                 is_nonneg(rat(s) * v[1]) && rat(s) * v[1] <= 1 &&
                 v[2] == (rat(1) - rat(s) * v[1]) * rat(2) * x[2];
        },
        nullptr));
    out.push_back(cat_piece(
        "{ " + sg + "x=" + sg + "y=z^2 triple tie }  x  conv{" + sg + "e1," + sg +
            "e2,(0,0,2z)}",
        3,
        [s](const RatVec& x, const RatVec& v) {
          Rational a = rat(s) * x[0], b = rat(s) * x[1];
          return a == x[2] * x[2] && b == x[2] * x[2] && is_nonneg(rat(s) * x[2]) &&
                 is_nonneg(rat(s) * v[0]) && is_nonneg(rat(s) * v[1]) &&
                 rat(s) * (v[0] + v[1]) <= 1 &&
                 v[2] == (rat(1) - rat(s) * (v[0] + v[1])) * rat(2) * x[2];
        },
        nullptr));
    // z-axis ray x triangle.
    HPolyhedron axis = HPolyhedron::whole_space(3);
    axis.add_eq(v3i(1, 0, 0), rat(0));
    axis.add_eq(v3i(0, 1, 0), rat(0));
    axis.add_ineq(v3i(0, 0, -s), rat(0));
    GraphPiece ez = product_piece(
        std::move(axis), hull_of({v3i(0, 0, 0), v3i(s, 0, 0), v3i(0, s, 0)}), false, "");
    ez.label = std::string("{ x=y=0, ") + (s > 0 ? "z>=0" : "z<=0") + " }  x  conv{0," +
               sg + "e1," + sg + "e2}";
    out.push_back(std::move(ez));
  }
  GraphPiece origin = product_piece(
      hull_of({v3i(0, 0, 0)}), hull_of({v3i(1, 0, 0), v3i(-1, 0, 0), v3i(0, 1, 0),
                                        v3i(0, -1, 0)}),
      false, "");
  origin.label = "{ 0 }  x  conv{e1,-e1,e2,-e2}";
  out.push_back(std::move(origin));
  return out;
}

// ---------------------------------------------------------------------------
// Catalog: open_disc_plus_point on R^2. The function is the indicator of
// S = { x^2+y^2 < 1 } united with the single boundary point (1,0).
// ---------------------------------------------------------------------------

Rational disc_radius_sq(const RatVec& x) { return x[0] * x[0] + x[1] * x[1]; }

bool disc_interior(const RatVec& x) { return disc_radius_sq(x) < 1; }
bool disc_kept_point(const RatVec& x) { return x[0] == 1 && x[1] == 0; }

SubdiffResult disc_subdiff(Kind k, const RatVec& x) {
  SubdiffResult r;
  if (k == Kind::clarke) {
    if (!disc_interior(x)) {
      r.defined = false;
      r.refusal = "the Clarke construction needs local Lipschitz continuity, "
                  "which fails at this point";
      return r;
    }
    r.pieces.push_back(hull_of({RatVec{rat(0), rat(0)}}));
    return r;
  }
  if (disc_interior(x)) {
    r.pieces.push_back(hull_of({RatVec{rat(0), rat(0)}}));
    return r;
  }
  if (disc_kept_point(x)) {
    r.pieces.push_back(ray_of(RatVec{rat(0), rat(0)}, RatVec{rat(1), rat(0)}));
    return r;
  }
  return r;  // value is +infinity: empty subdifferential
}

std::vector<GraphPiece> disc_graph(Kind k) {
  std::vector<GraphPiece> out;
  out.push_back(cat_piece(
      "{ x^2+y^2<1 }  x  { 0 }", 2,
      [](const RatVec& x, const RatVec& v) {
        return disc_interior(x) && v[0] == 0 && v[1] == 0;
      },
      [](const RatVec& x, const RatVec& v) {
        return disc_radius_sq(x) <= 1 && v[0] == 0 && v[1] == 0;
      }));
  if (k == Kind::clarke) return out;
  HPolyhedron pt = HPolyhedron::whole_space(2);
  pt.add_eq(RatVec{rat(1), rat(0)}, rat(1));
  pt.add_eq(RatVec{rat(0), rat(1)}, rat(0));
  GraphPiece ray = product_piece(
      std::move(pt), ray_of(RatVec{rat(0), rat(0)}, RatVec{rat(1), rat(0)}), false, "");
  ray.label = "{ (1,0) }  x  { t*(1,0), t>=0 }";
  out.push_back(std::move(ray));
  return out;
}

ValidationReport disc_validate(const PiecewiseFunction& f) {
  ValidationReport rep;
  rep.proper = true;
  rep.continuous = true;  // identically zero on its domain
  rep.interiors_disjoint = true;
  rep.lsc = false;
  RatVec w{Rational(3, 5), Rational(4, 5)};
  rep.issues.push_back(
      {"lsc",
       "the domain omits its boundary except at (1,0): approaching this circle "
       "point from inside the disc keeps the value 0 while the point itself "
       "carries +infinity",
       w});
  (void)f;
  return rep;
}

}  // namespace

bool has_special(const PiecewiseFunction& f) { return !f.special_oracle.empty(); }

ValidationReport special_validate(const PiecewiseFunction& f) {
  if (f.special_oracle == kComposite) return validate_generic(f);
  if (f.special_oracle == kDisc) return disc_validate(f);
  throw std::logic_error("unknown catalog: " + f.special_oracle);
}

SubdiffResult special_subdiff(const PiecewiseFunction& f, Kind k, const RatVec& x) {
  if (f.special_oracle == kComposite) {
    if (f.n != 3 || x.size() != 3) throw std::logic_error("catalog expects R^3");
    return composite_subdiff(k, x);
  }
  if (f.special_oracle == kDisc) {
    if (f.n != 2 || x.size() != 2) throw std::logic_error("catalog expects R^2");
    return disc_subdiff(k, x);
  }
  throw std::logic_error("unknown catalog: " + f.special_oracle);
}

std::vector<GraphPiece> special_graph(const PiecewiseFunction& f, Kind k) {
  if (f.special_oracle == kComposite) return composite_graph(k);
  if (f.special_oracle == kDisc) return disc_graph(k);
  throw std::logic_error("unknown catalog: " + f.special_oracle);
}

bool special_locally_lipschitz(const PiecewiseFunction& f, const RatVec& x) {
  if (f.special_oracle == kComposite) return true;
  if (f.special_oracle == kDisc) return disc_interior(x);
  throw std::logic_error("unknown catalog: " + f.special_oracle);
}

}  // namespace subjetlab
