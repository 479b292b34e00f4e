#include "subjetlab/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "subjetlab/linalg.hpp"
#include "subjetlab/rng.hpp"

namespace subjetlab {

namespace {

RatVec join_point(const RatVec& x, const RatVec& v) {
  RatVec u = x;
  u.insert(u.end(), v.begin(), v.end());
  return u;
}

std::pair<RatVec, RatVec> split_point(const RatVec& u, std::size_t n) {
  return {RatVec(u.begin(), u.begin() + n), RatVec(u.begin() + n, u.end())};
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
// descending. Sizes here are tiny (ambient is 2n with n <= 3).
std::vector<double> sym_eigenvalues(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += m[p][q] * m[p][q];
    if (off < 1e-32) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(m[p][q]) < 1e-18) continue;
        double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = m[i][i];
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

}  // namespace

LocalDimReport local_dim_at(const std::vector<GraphPiece>& pieces, const RatVec& x,
                            const RatVec& v) {
  LocalDimReport rep;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].member && pieces[i].member(x, v)) rep.member = true;
    if (pieces[i].closure_member && pieces[i].closure_member(x, v)) {
      rep.closure_pieces.push_back(i);
      rep.local_dim = std::max(rep.local_dim, pieces[i].dim);
    }
  }
  for (std::size_t i : rep.closure_pieces) {
    if (pieces[i].dim == rep.local_dim) {
      rep.witnesses.push_back(i);
      if (rep.witness_label.empty()) rep.witness_label = pieces[i].label;
    }
  }
  return rep;
}

int global_dim(const std::vector<GraphPiece>& pieces) {
  int d = kDimEmpty;
  for (const auto& p : pieces) d = std::max(d, p.dim);
  return d;
}

std::vector<std::pair<RatVec, RatVec>> covering_points(const std::vector<GraphPiece>& pieces,
                                                       std::size_t n) {
  std::vector<HPolyhedron> prods;
  for (const auto& p : pieces) {
    if (p.base && p.fiber) prods.push_back(product(*p.base, *p.fiber));
  }
  std::vector<RatVec> pts;
  for (const auto& P : prods) {
    for (const auto& f : faces(P)) pts.push_back(relint_point(f.poly));
  }
  for (std::size_t i = 0; i < prods.size(); ++i) {
    for (std::size_t j = i + 1; j < prods.size(); ++j) {
      HPolyhedron I = intersect(prods[i], prods[j]);
      if (feasible(I)) pts.push_back(relint_point(I));
    }
  }
  std::sort(pts.begin(), pts.end(), rat_vec_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::pair<RatVec, RatVec>> out;
  out.reserve(pts.size());
  for (const auto& u : pts) out.push_back(split_point(u, n));
  return out;
}

std::vector<DimViolation> verify_local_dim(const std::vector<GraphPiece>& pieces,
                                           const std::vector<std::pair<RatVec, RatVec>>& points,
                                           int expected) {
  std::vector<DimViolation> bad;
  for (const auto& [x, v] : points) {
    LocalDimReport rep = local_dim_at(pieces, x, v);
    if (rep.local_dim != expected) bad.push_back({x, v, rep.local_dim});
  }
  return bad;
}

NumericDimEstimate estimate_local_dim_numeric(const std::vector<GraphPiece>& pieces,
                                              const RatVec& x, const RatVec& v,
                                              std::uint64_t seed) {
  constexpr std::size_t kSamplesPerRadius = 60;  // 4 radii -> 240 samples per piece
  constexpr int kRadii = 4;
  NumericDimEstimate est;
  const RatVec u = join_point(x, v);
  const std::size_t N = u.size();
  Rng rng(seed);
  std::uint64_t stream_id = 0;
  int best = kDimEmpty;
  bool all_stable = true;
  for (const auto& piece : pieces) {
    if (!piece.closure_member || !piece.closure_member(x, v)) continue;
    if (!(piece.base && piece.fiber)) {
      est.partial = true;
      continue;
    }
    est.supported = true;
    HPolyhedron P = product(*piece.base, *piece.fiber);
    Rng sub = rng.stream(stream_id++);
    int first_rank = -1;
    bool stable = true;
    for (int r = 0; r < kRadii; ++r) {
      Rational rad(1, 8LL << r);
      std::vector<std::vector<double>> samples;
      samples.reserve(kSamplesPerRadius);
      for (std::size_t s = 0; s < kSamplesPerRadius; ++s) {
        RatVec q = u;
        for (std::size_t i = 0; i < N; ++i) q[i] += rad * Rational(sub.range(-64, 64), 64);
        RatVec p = project(P, q);
        std::vector<double> pd(N);
        for (std::size_t i = 0; i < N; ++i) pd[i] = rat_double(p[i]);
        samples.push_back(std::move(pd));
      }
      std::vector<double> mean(N, 0.0);
      for (const auto& sp : samples)
        for (std::size_t i = 0; i < N; ++i) mean[i] += sp[i];
      for (auto& mi : mean) mi /= static_cast<double>(samples.size());
      std::vector<std::vector<double>> cov(N, std::vector<double>(N, 0.0));
      for (const auto& sp : samples) {
        for (std::size_t i = 0; i < N; ++i)
          for (std::size_t j = 0; j < N; ++j)
            cov[i][j] += (sp[i] - mean[i]) * (sp[j] - mean[j]);
      }
      for (auto& row : cov)
        for (auto& c : row) c /= static_cast<double>(samples.size());
      std::vector<double> ev = sym_eigenvalues(cov);
      int rank = 0;
      if (!ev.empty() && ev[0] > 1e-24) {
        for (double lambda : ev)
          if (lambda > 1e-6 * ev[0]) ++rank;
      }
      if (r == 0)
        first_rank = rank;
      else if (rank != first_rank)
        stable = false;
    }
    if (!stable) all_stable = false;
    best = std::max(best, first_rank);
  }
  est.stable = est.supported && all_stable;
  if (est.supported) est.dim = best;
  return est;
}

}  // namespace subjetlab
