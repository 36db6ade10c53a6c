#include <doctest.h>

#include "dgk/complex.hpp"
#include "dgk/errors.hpp"
#include "dgk/koszul.hpp"
#include "dgk/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace dgk;
using dgk::test::matrix;
using dgk::test::P;
using dgk::test::Ps;

namespace {

FreeComplex koszul_complex(const RingPtr& r, const std::vector<std::string>& seq) {
  return to_free_complex(KoszulAlgebra(r, Ps(r, seq)));
}

}  // namespace

TEST_CASE("validation") {
  auto r = test::ring({"x", "y"});
  CHECK_FALSE(validate_complex(koszul_complex(r, {"x", "y"})));
  FreeComplex bad(r, 0, {1, 1, 1}, {matrix(r, 1, 1, {"x"}), matrix(r, 1, 1, {"1"})});
  auto v = validate_complex(bad);
  REQUIRE(v);
  CHECK(v->degree == 1);
  CHECK(v->row == 1);
  CHECK(v->col == 1);
  CHECK(v->entry == P(r, "x"));
  CHECK_FALSE(validate_complex(FreeComplex(r, 0, {0}, {})));
  CHECK_THROWS_AS(FreeComplex(r, 0, {1, 2}, {matrix(r, 1, 1, {"x"})}), StructuralError);
}

TEST_CASE("homology of the Koszul complex on (x, y)") {
  auto r = test::ring({"x", "y"});
  HomologyTable h(koszul_complex(r, {"x", "y"}));
  CHECK(same_ideal(h.at(0).fitting, IdealPresentation(r, Ps(r, {"x", "y"}))));
  CHECK(h.at(1).is_zero());
  CHECK(h.at(2).is_zero());
  CHECK(h.at(0).dim == ExtInt(0));
}

TEST_CASE("homology of the free model of 0 -> R -> k -> 0") {
  auto r = test::ring({"T"});
  FreeComplex x = test::free_line_over_residue_field(r);
  HomologyTable h(x);
  // H_1 = R: one generator, no relations
  CHECK(h.at(1).module.generators() == 1);
  CHECK(h.at(1).fitting.generators().empty());
  CHECK(h.at(1).dim == ExtInt(1));
  CHECK(same_ideal(h.at(0).fitting, IdealPresentation(r, Ps(r, {"T"}))));
  CHECK(h.at(0).dim == ExtInt(0));
  CHECK(complex_inf(x) == ExtInt(0));
}

TEST_CASE("zero differentials give free homology") {
  auto r = test::ring({"x"});
  FreeComplex x(r, 0, {2, 3}, {PolyMatrix(r, 2, 3)});
  HomologyTable h(x);
  CHECK(h.at(0).module.generators() == 2);
  CHECK(h.at(1).module.generators() == 3);
  CHECK(h.at(1).module.relations().cols() == 0);
}

TEST_CASE("infimum") {
  auto r = test::ring({"T"});
  FreeComplex x = test::free_line_over_residue_field(r);
  CHECK(complex_inf(x.shifted(3)) == ExtInt(3));
  FreeComplex exact(r, 0, {1, 1}, {matrix(r, 1, 1, {"1"})});
  CHECK(complex_inf(exact).is_pos_inf());
  CHECK_FALSE(validate_complex(x.shifted(1)));
}

TEST_CASE("fitting ideals and dimension") {
  auto r = test::ring({"x", "y"});
  auto k = ModulePresentation::cyclic(IdealPresentation(r, Ps(r, {"x", "y"})));
  CHECK(same_ideal(fitting_support(k), IdealPresentation(r, Ps(r, {"x", "y"}))));
  CHECK(fitting_support(ModulePresentation::free(r, 1)).generators().empty());
  ModulePresentation m(r, 2, matrix(r, 2, 2, {"x", "y", "0", "x"}));
  auto want = oracle::det2(P(r, "x"), P(r, "y"), P(r, "0"), P(r, "x"));
  CHECK(same_ideal(fitting_support(m), IdealPresentation(r, {want})));
  CHECK(module_dim(m) == ExtInt(1));
  CHECK(module_dim(ModulePresentation::free(r, 1)) == ExtInt(2));
  CHECK(module_dim(ModulePresentation::free(r, 0)).is_neg_inf());
  CHECK(is_finite_length(k));
  CHECK(is_finite_length(ModulePresentation::free(r, 0)));
  auto rt = test::ring({"T"});
  CHECK_FALSE(is_finite_length(ModulePresentation::free(rt, 1)));
  CHECK(module_dim(ModulePresentation::cyclic(IdealPresentation(rt, Ps(rt, {"T"})))) == ExtInt(0));
}

TEST_CASE("pruning keeps the module") {
  auto r = test::ring({"x", "y"});
  // coker [1 x; 0 y; 0 0] = R/(y) (+) R
  ModulePresentation m(r, 3, matrix(r, 3, 2, {"1", "x", "0", "y", "0", "0"}));
  auto p = m.pruned();
  CHECK(p.generators() == 2);
  CHECK(same_ideal(fitting_support(p), fitting_support(m)));
  CHECK(module_dim(p) == ExtInt(2));
}

TEST_CASE("tensor with a Koszul complex") {
  auto rt = test::ring({"T"});
  FreeComplex x = test::free_line_over_residue_field(rt);
  FreeComplex same = tensor_with_koszul(x, {});
  CHECK(same.ranks() == x.ranks());
  FreeComplex t = tensor_with_koszul(x, Ps(rt, {"T"}));
  CHECK_FALSE(validate_complex(t));
  CHECK(t.ranks() == std::vector<std::size_t>{1, 3, 2});

  auto r = test::ring({"x1", "x2"});
  FreeComplex k = tensor_with_koszul(FreeComplex::concentrated(r, 0, 1), Ps(r, {"x1"}));
  CHECK(k.ranks() == std::vector<std::size_t>{1, 1});
  CHECK(k.differential(1) == matrix(r, 1, 1, {"x1"}));
}

TEST_CASE("empty tensor preserves homology") {
  auto r = test::ring({"x", "y"});
  std::vector<FreeComplex> corpus = {koszul_complex(r, {"x"}), koszul_complex(r, {"x*y", "y^2"}),
                                     test::free_line_over_residue_field(test::ring({"T"}))};
  for (const auto& x : corpus) {
    HomologyTable a(x), b(tensor_with_koszul(x, {}));
    for (int i = x.lo(); i <= x.hi(); ++i) {
      CHECK(a.at(i).dim == b.at(i).dim);
      CHECK(same_ideal(a.at(i).fitting, b.at(i).fitting));
    }
  }
}

TEST_CASE("tensoring twice matches tensoring once") {
  auto r = test::ring({"x", "y", "z"});
  FreeComplex base = koszul_complex(r, {"x*y"});
  FreeComplex twice = tensor_with_koszul(tensor_with_koszul(base, Ps(r, {"z"})), Ps(r, {"y"}));
  FreeComplex once = tensor_with_koszul(base, Ps(r, {"z", "y"}));
  REQUIRE_FALSE(validate_complex(twice));
  HomologyTable a(twice), b(once);
  REQUIRE(a.hi() == b.hi());
  for (int i = a.lo(); i <= a.hi(); ++i) {
    CHECK(a.at(i).dim == b.at(i).dim);
    CHECK(same_ideal(a.at(i).fitting, b.at(i).fitting));
  }
}

TEST_CASE("regular sequences have acyclic Koszul complexes") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    auto r = test::ring(names);
    HomologyTable h(koszul_complex(r, names));
    for (int i = 1; i <= static_cast<int>(n); ++i) CHECK(h.at(i).is_zero());
    CHECK(h.at(0).dim == ExtInt(0));
  }
}

TEST_CASE("support tested through Fitting ideals matches annihilators") {
  // coker [x y; 0 x]: annihilator contains x^2, support is V(x).
  auto r = test::ring({"x", "y", "z"});
  ModulePresentation m(r, 2, matrix(r, 2, 2, {"x", "y", "0", "x"}));
  auto fit = fitting_support(m).generators();
  std::vector<Polynomial> ann = {P(r, "x^2")};
  for (std::uint64_t mask = 0; mask < 8; ++mask)
    CHECK(oracle::prime_contains(mask, fit) == oracle::prime_contains(mask, ann));
}
