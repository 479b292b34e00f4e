#include "subjetlab/report.hpp"

namespace subjetlab {

namespace {

Json dim_json(int d) {
  if (d == kDimEmpty) return Json(nullptr);
  return Json(d);
}

Json lincon_json(const LinCon& c) {
  Json j;
  j["a"] = vec_json(c.a);
  j["b"] = rat_str(c.b);
  return j;
}

}  // namespace

Json vec_json(const RatVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(rat_str(x));
  return j;
}

Json hpoly_json(const HPolyhedron& P) {
  Json j;
  j["ambient_dim"] = P.n;
  Json ineqs = Json::array();
  for (const auto& c : P.ineqs) ineqs.push_back(lincon_json(c));
  j["ineqs"] = std::move(ineqs);
  Json eqs = Json::array();
  for (const auto& c : P.eqs) eqs.push_back(lincon_json(c));
  j["eqs"] = std::move(eqs);
  return j;
}

Json vrep_json(const VRep& V) {
  Json j;
  Json verts = Json::array();
  for (const auto& v : V.vertices) verts.push_back(vec_json(v));
  j["vertices"] = std::move(verts);
  Json rays = Json::array();
  for (const auto& r : V.rays) rays.push_back(vec_json(r));
  j["rays"] = std::move(rays);
  Json lines = Json::array();
  for (const auto& l : V.lines) lines.push_back(vec_json(l));
  j["lines"] = std::move(lines);
  return j;
}

Json subdiff_json(const SubdiffResult& r) {
  Json j;
  j["defined"] = r.defined;
  if (!r.defined) {
    j["refusal"] = r.refusal;
    return j;
  }
  Json pieces = Json::array();
  for (const auto& P : r.pieces) {
    Json p = hpoly_json(P);
    p["dim"] = dim_json(dim(P));
    pieces.push_back(std::move(p));
  }
  j["pieces"] = std::move(pieces);
  j["empty"] = r.pieces.empty();
  return j;
}

Json graph_json(const std::vector<GraphPiece>& pieces) {
  Json arr = Json::array();
  for (const auto& p : pieces) {
    Json j;
    j["label"] = p.label;
    j["dim"] = dim_json(p.dim);
    if (p.base && p.fiber) {
      j["form"] = "product";
      j["base"] = hpoly_json(*p.base);
      j["base_relint"] = p.base_relint;
      j["fiber"] = hpoly_json(*p.fiber);
    } else {
      j["form"] = "catalog";
    }
    arr.push_back(std::move(j));
  }
  Json out;
  out["piece_count"] = pieces.size();
  out["global_dim"] = dim_json(global_dim(pieces));
  out["pieces"] = std::move(arr);
  return out;
}

Json local_dim_json(const LocalDimReport& rep, const std::vector<GraphPiece>& pieces) {
  Json j;
  j["member"] = rep.member;
  j["local_dim"] = dim_json(rep.local_dim);
  Json cls = Json::array();
  for (std::size_t i : rep.closure_pieces) cls.push_back(pieces[i].label);
  j["closure_pieces"] = std::move(cls);
  Json wit = Json::array();
  for (std::size_t i : rep.witnesses) wit.push_back(pieces[i].label);
  j["witnesses"] = std::move(wit);
  return j;
}

Json numeric_dim_json(const NumericDimEstimate& est) {
  Json j;
  j["supported"] = est.supported;
  j["partial"] = est.partial;
  j["stable"] = est.stable;
  j["dim"] = est.supported ? dim_json(est.dim) : Json(nullptr);
  return j;
}

Json validation_json(const ValidationReport& rep) {
  Json j;
  j["ok"] = rep.ok();
  j["proper"] = rep.proper;
  j["continuous_on_domain"] = rep.continuous;
  j["lower_semicontinuous"] = rep.lsc;
  j["cell_interiors_disjoint"] = rep.interiors_disjoint;
  Json issues = Json::array();
  for (const auto& issue : rep.issues) {
    Json i;
    i["check"] = issue.check;
    i["message"] = issue.message;
    if (!issue.witness.empty()) i["witness"] = vec_json(issue.witness);
    issues.push_back(std::move(i));
  }
  j["issues"] = std::move(issues);
  return j;
}

Json minty_certificate_json(const MintyCertificate& cert) {
  Json j;
  j["finite_to_one"] = cert.finite_to_one;
  j["preimage_bound"] = cert.preimage_bound;
  Json pieces = Json::array();
  for (const auto& p : cert.pieces) {
    Json pj;
    pj["piece"] = p.piece;
    pj["dim"] = dim_json(p.piece_dim);
    pj["injective"] = p.injective;
    pieces.push_back(std::move(pj));
  }
  j["pieces"] = std::move(pieces);
  return j;
}

Json dense_diffeo_json(const DenseDiffeoReport& rep) {
  Json j;
  j["dense"] = rep.dense;
  j["injective_pieces"] = rep.injective_pieces;
  if (rep.failing_piece) j["failing_piece"] = *rep.failing_piece;
  if (rep.failure_witness) j["failure_witness"] = vec_json(*rep.failure_witness);
  return j;
}

Json solve_json(const SolveReport& rep, std::size_t n) {
  Json j;
  j["empty"] = rep.empty;
  j["finite"] = rep.finite;
  j["any_infinite"] = rep.any_infinite;
  Json outcomes = Json::array();
  for (const auto& o : rep.outcomes) {
    Json oj;
    oj["piece"] = o.piece;
    oj["dim"] = dim_json(o.dim);
    oj["set"] = vrep_json(o.set);
    outcomes.push_back(std::move(oj));
  }
  j["outcomes"] = std::move(outcomes);
  Json pts = Json::array();
  for (const auto& p : rep.points) {
    Json pj;
    pj["x"] = vec_json(RatVec(p.begin(), p.begin() + n));
    pj["v"] = vec_json(RatVec(p.begin() + n, p.end()));
    pts.push_back(std::move(pj));
  }
  j["points"] = std::move(pts);
  return j;
}

Json sensitivity_json(const SensitivityReport& rep) {
  Json j;
  j["seed"] = rep.seed;
  j["trials"] = rep.trials;
  j["eps"] = rat_str(rep.eps);
  j["delta"] = rat_str(rep.delta);
  j["grid_step"] = rat_str(rep.grid_step);
  j["anchor_class"] = rep.anchor_class;
  j["count_empty"] = rep.count_empty;
  j["count_infinite"] = rep.count_infinite;
  j["count_finite"] = rep.count_finite;
  j["count_near_subgradient"] = rep.count_near_subgradient;
  j["count_joint_ball"] = rep.count_joint_ball;
  j["frac_infinite"] = rep.frac_infinite;
  j["frac_near_subgradient"] = rep.frac_near_subgradient;
  j["frac_joint_ball"] = rep.frac_joint_ball;
  return j;
}

Json access_json(const AccessReport& rep) {
  Json j;
  switch (rep.route) {
    case AccessRoute::proximal: j["route"] = "proximal"; break;
    case AccessRoute::piece: j["route"] = "piece"; break;
    case AccessRoute::refused: j["route"] = "refused"; break;
  }
  j["success"] = rep.success;
  j["explanation"] = rep.explanation;
  j["limiting_member"] = rep.limiting_member;
  j["frechet_member"] = rep.frechet_member;
  j["on_boundary"] = rep.on_boundary;
  j["fiber_dim"] = dim_json(rep.fiber_dim);
  Json ws = Json::array();
  for (const auto& w : rep.witnesses) {
    Json wj;
    wj["x"] = vec_json(w.x);
    wj["f"] = rat_str(w.fx);
    wj["v"] = vec_json(w.v);
    wj["dist_sq"] = rat_str(w.dist_sq);
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  j["distances_decreasing"] = rep.distances_decreasing;
  if (!rep.witnesses.empty()) j["final_dist_sq"] = rat_str(rep.final_dist_sq);
  return j;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace subjetlab
