#include "subjetlab/subdiff.hpp"

#include <algorithm>
#include <stdexcept>

#include "subjetlab/double_description.hpp"
#include "subjetlab/region.hpp"
#include "subjetlab/special.hpp"

namespace subjetlab {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::frechet: return "frechet";
    case Kind::limiting: return "limiting";
    case Kind::clarke: return "clarke";
  }
  return "?";
}

std::optional<Kind> parse_kind(const std::string& s) {
  if (s == "frechet") return Kind::frechet;
  if (s == "limiting") return Kind::limiting;
  if (s == "clarke") return Kind::clarke;
  return std::nullopt;
}

bool result_contains(const SubdiffResult& r, const RatVec& v) {
  return r.defined && union_member(v, r.pieces);
}

GraphPiece product_piece(HPolyhedron base, HPolyhedron fiber, bool base_relint,
                         std::string label) {
  GraphPiece p;
  p.label = std::move(label);
  p.base = std::move(base);
  p.fiber = std::move(fiber);
  p.base_relint = base_relint;
  p.dim = dim(*p.base) + dim(*p.fiber);
  HPolyhedron B = *p.base, F = *p.fiber;
  p.member = [B, F, base_relint](const RatVec& x, const RatVec& v) {
    return (base_relint ? relint_contains(B, x) : contains(B, x)) && contains(F, v);
  };
  p.closure_member = [B, F](const RatVec& x, const RatVec& v) {
    return contains(B, x) && contains(F, v);
  };
  return p;
}

bool graph_member(const std::vector<GraphPiece>& pieces, const RatVec& x,
                  const RatVec& v) {
  for (const auto& p : pieces)
    if (p.member(x, v)) return true;
  return false;
}

bool locally_lipschitz_at(const PiecewiseFunction& f, const RatVec& x) {
  if (has_special(f)) return special_locally_lipschitz(f, x);
  if (f.tier != Tier::affine)
    throw std::logic_error("locally_lipschitz_at: no catalog for this function");
  std::vector<HPolyhedron> regions;
  for (const auto& c : f.cells) regions.push_back(c.region);
  return point_in_union_interior(x, regions);
}

namespace {

// Gradient-space set {grad f_C + N_C(x)} for a cell containing x.
HPolyhedron shifted_normal_cone(const Cell& c, const RatVec& x) {
  return translate(normal_cone_at(c.region, x), c.poly.gradient_at(x));
}

HPolyhedron frechet_at(const PiecewiseFunction& f, const RatVec& x) {
  HPolyhedron H = HPolyhedron::whole_space(f.n);
  for (const auto& c : f.cells)
    if (contains(c.region, x)) H = intersect(H, shifted_normal_cone(c, x));
  return H;
}

struct FaceEntry {
  HPolyhedron poly;
  VRep key;   // canonical generator form, dedupe and order key
  RatVec rel; // relative-interior point
};

// Deduplicated faces of all cells of a refined function; together with the
// refined cells these form a polyhedral complex.
std::vector<FaceEntry> complex_faces(const PiecewiseFunction& rf) {
  std::vector<FaceEntry> out;
  for (const auto& c : rf.cells) {
    for (auto& fc : faces(c.region)) {
      VRep key = canonical_form(dd_vrep(fc.poly));
      bool dup = false;
      for (const auto& e : out)
        if (!vrep_less(e.key, key) && !vrep_less(key, e.key)) {
          dup = true;
          break;
        }
      if (dup) continue;
      RatVec rel = relint_point(key);
      out.push_back(FaceEntry{std::move(fc.poly), std::move(key), std::move(rel)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FaceEntry& a, const FaceEntry& b) { return vrep_less(a.key, b.key); });
  return out;
}

// Fiber of the limiting subdifferential over relint F: intersect the
// shifted normal cones of every refined cell whose closure contains F.
HPolyhedron limiting_fiber(const PiecewiseFunction& rf, const RatVec& rel) {
  return frechet_at(rf, rel);
}

std::vector<HPolyhedron> domain_regions(const PiecewiseFunction& f) {
  std::vector<HPolyhedron> regions;
  for (const auto& c : f.cells) regions.push_back(c.region);
  return regions;
}

// Convex hull of the gradients of the full-dimensional cells containing x.
HPolyhedron clarke_hull(const PiecewiseFunction& f, const RatVec& x) {
  VRep V;
  for (const auto& c : f.cells) {
    if (dim(c.region) != static_cast<int>(f.n)) continue;
    if (!contains(c.region, x)) continue;
    V.vertices.push_back(c.poly.gradient_at(x));
  }
  if (V.empty()) throw std::logic_error("clarke_hull: no full-dimensional cell at x");
  return dd_hrep(V, f.n);
}

// True when the whole face P lies in the interior of the domain union; the
// interior is a union of relative interiors of complex faces, so it is
// enough to test one relative-interior point of every face of P.
bool closure_in_interior(const HPolyhedron& P, const std::vector<HPolyhedron>& regions) {
  for (const auto& fc : faces(P))
    if (!point_in_union_interior(relint_point(fc.poly), regions)) return false;
  return true;
}

std::string piece_label(const GraphPiece& p) {
  std::string s = p.base_relint ? "relint{ " : "{ ";
  s += poly_str(*p.base);
  s += " }  x  { ";
  s += poly_str(*p.fiber);
  s += " }";
  return s;
}

// Drops pieces whose exact set is contained in another piece; equal pieces
// keep their first representative. Containment is factorwise, which is
// exact for nonempty products.
void prune_pieces(std::vector<GraphPiece>& pieces) {
  std::vector<VRep> bases, fibers;
  for (const auto& p : pieces) {
    bases.push_back(dd_vrep(*p.base));
    fibers.push_back(dd_vrep(*p.fiber));
  }
  auto subset = [&](std::size_t i, std::size_t j) {
    if (pieces[i].base_relint != pieces[j].base_relint) return false;
    return poly_subset(bases[i], *pieces[j].base) && poly_subset(fibers[i], *pieces[j].fiber);
  };
  std::vector<bool> drop(pieces.size(), false);
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      if (i == j || drop[i] || drop[j]) continue;
      if (subset(i, j) && (!subset(j, i) || j < i)) drop[i] = true;
    }
  std::vector<GraphPiece> kept;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (!drop[i]) kept.push_back(std::move(pieces[i]));
  pieces = std::move(kept);
}

void sort_pieces(std::vector<GraphPiece>& pieces) {
  std::vector<std::pair<VRep, VRep>> keys;
  for (const auto& p : pieces)
    keys.push_back({canonical_form(dd_vrep(*p.base)), canonical_form(dd_vrep(*p.fiber))});
  std::vector<std::size_t> order(pieces.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (vrep_less(keys[i].first, keys[j].first)) return true;
    if (vrep_less(keys[j].first, keys[i].first)) return false;
    return vrep_less(keys[i].second, keys[j].second);
  });
  std::vector<GraphPiece> sorted;
  for (auto i : order) sorted.push_back(std::move(pieces[i]));
  pieces = std::move(sorted);
}

std::vector<GraphPiece> affine_graph(const PiecewiseFunction& f, Kind k) {
  PiecewiseFunction rf = refine(f);
  std::vector<HPolyhedron> regions = domain_regions(rf);
  std::vector<GraphPiece> pieces;
  for (const auto& fe : complex_faces(rf)) {
    if (k == Kind::clarke) {
      if (!point_in_union_interior(fe.rel, regions)) continue;
      HPolyhedron fiber = clarke_hull(rf, fe.rel);
      bool rel_only = !closure_in_interior(fe.poly, regions);
      GraphPiece p = product_piece(fe.poly, std::move(fiber), rel_only, "");
      p.label = piece_label(p);
      pieces.push_back(std::move(p));
      continue;
    }
    HPolyhedron fiber = limiting_fiber(rf, fe.rel);
    if (!feasible(fiber)) continue;
    GraphPiece p = product_piece(fe.poly, std::move(fiber), k == Kind::frechet, "");
    p.label = piece_label(p);
    pieces.push_back(std::move(p));
  }
  if (k != Kind::frechet) prune_pieces(pieces);
  sort_pieces(pieces);
  return pieces;
}

}  // namespace

SubdiffResult subdifferential(const PiecewiseFunction& f, Kind k, const RatVec& x) {
  if (x.size() != f.n) throw std::logic_error("subdifferential: dimension mismatch");
  if (has_special(f)) return special_subdiff(f, k, x);
  if (f.tier != Tier::affine)
    throw std::logic_error("subdifferential: no catalog for this function");

  SubdiffResult r;
  if (k == Kind::clarke) {
    if (!locally_lipschitz_at(f, x)) {
      r.defined = false;
      r.refusal = "the Clarke construction needs local Lipschitz continuity, "
                  "which fails at this point";
      return r;
    }
    r.pieces.push_back(clarke_hull(f, x));
    return r;
  }

  if (!evaluate(f, x).finite) return r;  // empty set at points outside the domain

  if (k == Kind::frechet) {
    HPolyhedron H = frechet_at(f, x);
    if (feasible(H)) r.pieces.push_back(std::move(H));
    return r;
  }

  // Limiting: union of face fibers over the complex faces containing x.
  // Fibers swallowed by another fiber add nothing to the union and are dropped.
  PiecewiseFunction rf = refine(f);
  std::vector<HPolyhedron> fibers;
  std::vector<VRep> reps;
  for (const auto& fe : complex_faces(rf)) {
    if (!contains(fe.poly, x)) continue;
    HPolyhedron fiber = limiting_fiber(rf, fe.rel);
    if (!feasible(fiber)) continue;
    fibers.push_back(std::move(fiber));
    reps.push_back(dd_vrep(fibers.back()));
  }
  std::vector<bool> keep(fibers.size(), true);
  for (std::size_t i = 0; i < fibers.size(); ++i)
    for (std::size_t j = 0; j < fibers.size() && keep[i]; ++j) {
      if (i == j || !keep[j] || !poly_subset(reps[i], fibers[j])) continue;
      // Ties (equal sets) keep only the first copy.
      keep[i] = poly_subset(reps[j], fibers[i]) && i < j;
    }
  for (std::size_t i = 0; i < fibers.size(); ++i)
    if (keep[i]) r.pieces.push_back(std::move(fibers[i]));
  return r;
}

std::vector<GraphPiece> subjet_graph(const PiecewiseFunction& f, Kind k) {
  if (has_special(f)) return special_graph(f, k);
  if (f.tier != Tier::affine)
    throw std::logic_error("subjet_graph: no catalog for this function");
  return affine_graph(f, k);
}

std::vector<GraphPiece> pullback_graph(const PiecewiseFunction& g,
                                       const std::vector<RatVec>& A, const RatVec& c) {
  if (g.tier != Tier::affine || has_special(g))
    throw std::logic_error("pullback_graph: affine tier only");
  if (A.size() != g.n || c.size() != g.n)
    throw std::logic_error("pullback_graph: shape mismatch");
  std::size_t m = A.empty() ? 0 : A[0].size();
  for (const auto& row : A)
    if (row.size() != m) throw std::logic_error("pullback_graph: ragged matrix");

  // Rows of A^T, mapping gradient space of g onto the composite's space.
  std::vector<RatVec> At(m, RatVec(A.size(), Rational(0)));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) At[j][i] = A[i][j];
  RatVec zero(m, Rational(0));

  auto pull_con = [&](const LinCon& con) {
    RatVec a2(m, Rational(0));
    for (std::size_t i = 0; i < A.size(); ++i)
      a2 = vec_add(a2, vec_scale(con.a[i], A[i]));
    return LinCon{std::move(a2), con.b - dot(con.a, c)};
  };

  std::vector<GraphPiece> pieces;
  for (const auto& gp : subjet_graph(g, Kind::limiting)) {
    HPolyhedron base = HPolyhedron::whole_space(m);
    for (const auto& con : gp.base->ineqs) base.ineqs.push_back(pull_con(con));
    for (const auto& con : gp.base->eqs) base.eqs.push_back(pull_con(con));
    if (!feasible(base)) continue;
    HPolyhedron fiber = dd_hrep(affine_image(dd_vrep(*gp.fiber), At, zero), m);
    GraphPiece p = product_piece(std::move(base), std::move(fiber), false, "");
    p.label = piece_label(p);
    pieces.push_back(std::move(p));
  }
  prune_pieces(pieces);
  sort_pieces(pieces);
  return pieces;
}

}  // namespace subjetlab
