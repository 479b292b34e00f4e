#include "subjetlab/gen.hpp"

#include <string>
#include <utility>

#include "subjetlab/linalg.hpp"
#include "subjetlab/region.hpp"

namespace subjetlab {

Fixture generate_fixture(std::uint64_t seed, std::size_t n, std::size_t cuts, bool with_box) {
  Rng rng(seed);
  std::size_t count = 2 + rng.below(3);
  std::vector<std::pair<RatVec, Rational>> affs;
  for (std::size_t k = 0; k < count; ++k) {
    RatVec a(n);
    for (auto& ai : a) ai = Rational(rng.range(-4, 4), rng.range(1, 2));
    affs.emplace_back(std::move(a), Rational(rng.range(-8, 8), rng.range(1, 2)));
  }
  PiecewiseFunction f = min_of_affine(affs);

  if (with_box) {
    HPolyhedron box = HPolyhedron::whole_space(n);
    for (std::size_t i = 0; i < n; ++i) {
      RatVec e(n, Rational(0));
      e[i] = Rational(1);
      box.add_ineq(e, Rational(2));
      e[i] = Rational(-1);
      box.add_ineq(e, Rational(2));
    }
    f = sum(f, indicator(box));
  }

  if (cuts > 0) {
    std::vector<LinCon> cons;
    for (std::size_t c = 0; c < cuts; ++c) {
      RatVec a(n, Rational(0));
      while (vec_is_zero(a))
        for (auto& ai : a) ai = Rational(rng.range(-3, 3));
      cons.push_back({std::move(a), Rational(rng.range(-2, 2))});
    }
    PiecewiseFunction split = f;
    split.cells.clear();
    for (const auto& cell : f.cells) {
      for (auto& sub : refine_against(cell.region, cons))
        split.cells.push_back({std::move(sub.poly), cell.sign_ineqs, cell.poly, {}});
    }
    f = std::move(split);
  }

  f.name = "gen_s" + std::to_string(seed) + "_n" + std::to_string(n) +
           (with_box ? "_box" : "") + (cuts > 0 ? "_c" + std::to_string(cuts) : "");
  Fixture fx;
  fx.fn = std::move(f);
  return fx;
}

}  // namespace subjetlab
