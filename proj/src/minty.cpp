#include "subjetlab/minty.hpp"

#include <stdexcept>
#include <utility>

#include "subjetlab/double_description.hpp"
#include "subjetlab/linalg.hpp"
#include "subjetlab/region.hpp"

namespace subjetlab {

namespace {

// Basis of the direction space of a polyhedron from its generators:
// differences of vertices, rays, and lines span it.
std::vector<RatVec> direction_basis(const VRep& V) {
  std::vector<RatVec> dirs;
  for (std::size_t i = 1; i < V.vertices.size(); ++i)
    dirs.push_back(vec_sub(V.vertices[i], V.vertices[0]));
  for (const auto& r : V.rays) dirs.push_back(r);
  for (const auto& l : V.lines) dirs.push_back(l);
  if (dirs.empty()) return {};
  // Reduce to a basis by row reduction; keep pivot rows.
  RatMat M(dirs.size(), dirs[0].size());
  for (std::size_t r = 0; r < dirs.size(); ++r)
    for (std::size_t c = 0; c < dirs[r].size(); ++c) M.at(r, c) = dirs[r][c];
  std::vector<std::size_t> pivots = rref(M);
  std::vector<RatVec> basis;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    RatVec row(M.cols);
    for (std::size_t c = 0; c < M.cols; ++c) row[c] = M.at(r, c);
    basis.push_back(std::move(row));
  }
  return basis;
}

// Image of a direction d = (dx, dv) under (x,v) -> Ax + v.
RatVec project_dir(const std::vector<RatVec>& A, const RatVec& d, std::size_t n) {
  RatVec out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < n; ++j) s += A[i][j] * d[j];
    out[i] = s + d[n + i];
  }
  return out;
}

}  // namespace

MintyAnalyzer::MintyAnalyzer(std::vector<GraphPiece> graph, std::size_t n)
    : n_(n), graph_(std::move(graph)) {
  products_.reserve(graph_.size());
  for (const auto& p : graph_) {
    if (!(p.base && p.fiber))
      throw std::runtime_error("MintyAnalyzer: every piece must be a product of polyhedra");
    products_.push_back(product(*p.base, *p.fiber));
  }
  directions_.reserve(products_.size());
  for (const auto& P : products_) directions_.push_back(direction_basis(dd_vrep(P)));

  // Atoms: refine each piece against all pieces' constraint hyperplanes.
  // Every atom keeps the dimension of its piece; an atom is a single-piece
  // atom exactly when its relative-interior point avoids the other pieces'
  // closures, and those atoms cover the closure of (relint of the piece)
  // minus the other closures.
  std::vector<LinCon> cuts = union_cut_list(products_);
  good_atoms_.resize(products_.size());
  for (std::size_t i = 0; i < products_.size(); ++i) {
    for (auto& atom : refine_against(products_[i], cuts)) {
      RatVec rp = relint_point(atom.poly);
      bool covered = false;
      for (std::size_t j = 0; j < products_.size() && !covered; ++j) {
        if (j != i && contains(products_[j], rp)) covered = true;
      }
      if (!covered) good_atoms_[i].push_back(std::move(atom.poly));
    }
  }
}

bool MintyAnalyzer::injective_on_piece(const std::vector<RatVec>& A, std::size_t i) const {
  const auto& basis = directions_[i];
  if (basis.empty()) return true;  // a point piece
  std::vector<RatVec> images;
  images.reserve(basis.size());
  for (const auto& d : basis) images.push_back(project_dir(A, d, n_));
  return span_rank(images) == basis.size();
}

MintyCertificate MintyAnalyzer::certify(const std::vector<RatVec>& A) const {
  MintyCertificate cert;
  cert.finite_to_one = true;
  for (std::size_t i = 0; i < graph_.size(); ++i) {
    bool inj = injective_on_piece(A, i);
    cert.pieces.push_back({i, graph_[i].dim, inj});
    if (!inj) cert.finite_to_one = false;
  }
  cert.preimage_bound = cert.finite_to_one ? graph_.size() : 0;
  return cert;
}

DenseDiffeoReport MintyAnalyzer::dense_local_diffeo(const std::vector<RatVec>& A) {
  std::vector<bool> mask(graph_.size(), false);
  for (std::size_t i = 0; i < graph_.size(); ++i) mask[i] = injective_on_piece(A, i);
  auto it = cache_.find(mask);
  if (it != cache_.end()) return it->second;

  DenseDiffeoReport rep;
  std::vector<HPolyhedron> cover;
  for (std::size_t i = 0; i < graph_.size(); ++i) {
    if (!mask[i]) continue;
    rep.injective_pieces.push_back(i);
    for (const auto& atom : good_atoms_[i]) cover.push_back(atom);
  }
  rep.dense = true;
  for (std::size_t q = 0; q < products_.size(); ++q) {
    InclusionResult inc = union_contains(products_[q], cover);
    if (!inc.contained) {
      rep.dense = false;
      rep.failing_piece = q;
      rep.failure_witness = inc.witness;
      break;
    }
  }
  cache_.emplace(std::move(mask), rep);
  return rep;
}

std::vector<RatVec> sample_generic_matrix(std::size_t n, Rng& rng) {
  std::vector<RatVec> A(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = sample_nonzero_rational(rng);
  return A;
}

bool dimension_preserved(const std::vector<GraphPiece>& graph, const std::vector<RatVec>& A) {
  for (const auto& p : graph) {
    if (!(p.base && p.fiber)) return false;
    std::size_t n = A.size();
    std::vector<RatVec> rows(n, RatVec(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = A[i][j];
      rows[i][n + i] = Rational(1);
    }
    VRep V = dd_vrep(product(*p.base, *p.fiber));
    VRep image = affine_image(V, rows, RatVec(n, Rational(0)));
    if (dim(image) != p.dim) return false;
  }
  return true;
}

}  // namespace subjetlab
