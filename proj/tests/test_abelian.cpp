#include "coxstack/abelian.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace coxstack;

namespace {

GroupElement elem(std::initializer_list<long long> cs) {
  std::vector<Int> v;
  for (long long c : cs) v.emplace_back(c);
  return {v};
}

// |Z^n / L| via the determinant of a Hermite basis of the lattice L,
// cross-checking cokernel orders independently of invariant factors.
Int lattice_index(const IntMatrix& columns) {
  IntMatrix basis = hermite_row_basis(columns.transposed());
  if (basis.rows() != columns.rows()) return 0;  // not finite index
  Int d = 1;
  // The Hermite basis is echelon; the index is the product of pivots.
  std::size_t col = 0;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    while (col < basis.cols() && basis.at(i, col) == 0) ++col;
    d *= basis.at(i, col);
  }
  return d;
}

}  // namespace

TEST_CASE("cokernel of diag(2,3) is Z/6") {
  CokernelResult r = cokernel(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(r.group.to_string() == "Z/6");
  CHECK(oracle::torsion_by_minors(IntMatrix::from_rows({{2, 0}, {0, 3}})) ==
        std::vector<Int>{6});
  // Projection kills the columns and hits every canonical generator.
  for (std::size_t j = 0; j < 2; ++j) {
    auto img =
        r.projection.matrix * IntMatrix::from_rows({{2, 0}, {0, 3}}).column(j);
    CHECK(r.group.is_zero(r.group.reduce(img)));
  }
  CHECK((r.projection.matrix * r.section) == IntMatrix::identity(1));
}

TEST_CASE("cokernel of an empty relation set is free") {
  CokernelResult r = cokernel(IntMatrix(2, 0));
  CHECK(r.group.free_rank() == 2);
  CHECK(r.group.torsion().empty());
}

TEST_CASE("cokernel kills a basis vector") {
  CokernelResult r = cokernel(IntMatrix::from_rows({{1}, {0}}));
  CHECK(r.group.to_string() == "Z");
}

TEST_CASE("cokernel matches the minor-gcd oracle on random matrices") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 5);
    IntMatrix m = oracle::random_matrix(rng, size(rng), size(rng), -12, 12);
    CokernelResult r = cokernel(m);
    CHECK(r.group.torsion() == oracle::torsion_by_minors(m));
    // Finite case: order equals the lattice index.
    Int idx = lattice_index(m);
    if (r.group.is_finite()) {
      CHECK(idx != 0);
      CHECK(abs(idx) == r.group.order());
    } else {
      CHECK(idx == 0);
    }
    // The projection composed with its section is the identity.
    CHECK((r.projection.matrix * r.section) ==
          IntMatrix::identity(r.group.dim()));
  }
}

TEST_CASE("pushout_root adjoins a square root of 1 in Z") {
  AbelianGroup z = AbelianGroup::free(1);
  PushoutRootResult r = pushout_root(z, elem({1}), 2);
  CHECK(r.group.to_string() == "Z");
  // iota(1) = 2t: the generator maps onto twice the tautological class.
  GroupElement img = r.inclusion.apply(elem({1}));
  CHECK(img == r.group.scale(2, r.tautological));
  CHECK(kernel_subgroup(r.inclusion).is_trivial());
}

TEST_CASE("pushout_root on the trivial group gives Z/r") {
  AbelianGroup zero = AbelianGroup::trivial();
  PushoutRootResult r = pushout_root(zero, elem({}), 5);
  CHECK(r.group.to_string() == "Z/5");
  CHECK(r.group.element_order(r.tautological) == 5);
}

TEST_CASE("pushout_root with order 1 changes nothing structurally") {
  AbelianGroup a({2}, 1);
  PushoutRootResult r = pushout_root(a, elem({1, 3}), 1);
  CHECK(r.group.same_structure(a));
  CHECK(r.tautological == r.inclusion.apply(elem({1, 3})));
}

TEST_CASE("pushout_root invariants on random groups") {
  std::mt19937_64 rng(909);
  std::vector<AbelianGroup> groups = {
      AbelianGroup::free(1), AbelianGroup::free(2), AbelianGroup({2}, 1),
      AbelianGroup({2, 4}, 0), AbelianGroup({3}, 2), AbelianGroup::trivial()};
  std::uniform_int_distribution<int> coord(-5, 5);
  std::uniform_int_distribution<int> order(1, 6);
  for (int trial = 0; trial < 120; ++trial) {
    const AbelianGroup& a = groups[trial % groups.size()];
    std::vector<Int> c(a.dim());
    for (auto& x : c) x = coord(rng);
    GroupElement d = a.reduce(c);
    Int r = order(rng);
    PushoutRootResult p = pushout_root(a, d, r);

    CHECK(p.inclusion.is_well_defined());
    CHECK(kernel_subgroup(p.inclusion).is_trivial());
    // r * t = iota(d)
    CHECK(p.group.scale(r, p.tautological) == p.inclusion.apply(d));
    // A' / iota(A) is cyclic of order exactly r.
    std::vector<GroupElement> image;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      std::vector<Int> e(a.dim());
      e[j] = 1;
      image.push_back(p.inclusion.apply(a.reduce(e)));
    }
    SubgroupCokernelResult q = subgroup_cokernel(p.group, image);
    CHECK(q.quotient.order() == r);
  }
}

TEST_CASE("dual groups of Picard-type gradings") {
  CHECK(dual_group(AbelianGroup({2}, 1)) ==
        DiagonalizableGroupDescriptor{1, {2}});
  CHECK(dual_group(AbelianGroup::trivial()) ==
        DiagonalizableGroupDescriptor{0, {}});
  CHECK(dual_group(AbelianGroup({2, 2}, 0)) ==
        DiagonalizableGroupDescriptor{0, {2, 2}});
}

TEST_CASE("subgroup_cokernel: 2Z inside Z") {
  AbelianGroup z = AbelianGroup::free(1);
  SubgroupCokernelResult r = subgroup_cokernel(z, {elem({2})});
  CHECK(r.subgroup.to_string() == "Z");
  CHECK(r.quotient.to_string() == "Z/2");
  REQUIRE(r.lifts.size() == 1);
  // The lift projects onto the generator and twice the lift lands in 2Z.
  CHECK(r.quotient.element_order(r.quotient_map.apply(r.lifts[0])) == 2);
  GroupElement doubled = z.scale(2, r.lifts[0]);
  CHECK(r.inclusion.preimage(doubled).has_value());
}

TEST_CASE("subgroup_cokernel: full generating set has trivial quotient") {
  AbelianGroup a({4}, 1);
  SubgroupCokernelResult r = subgroup_cokernel(a, {elem({1, 0}), elem({0, 1})});
  CHECK(r.quotient.is_trivial());
  CHECK(r.lifts.empty());
  CHECK(r.subgroup.same_structure(a));
}

TEST_CASE("subgroup_cokernel: <2> inside Z/4") {
  AbelianGroup a({4}, 0);
  SubgroupCokernelResult r = subgroup_cokernel(a, {elem({2})});
  CHECK(r.subgroup.to_string() == "Z/2");
  CHECK(r.quotient.to_string() == "Z/2");
  REQUIRE(r.lifts.size() == 1);
  // 2 * lift lies in the subgroup <2>.
  GroupElement doubled = a.scale(2, r.lifts[0]);
  CHECK(r.inclusion.preimage(doubled).has_value());
  CHECK_FALSE(a.is_zero(r.lifts[0]));
}

TEST_CASE("subgroup_cokernel invariants on random data") {
  std::mt19937_64 rng(31337);
  std::vector<AbelianGroup> groups = {AbelianGroup::free(2),
                                      AbelianGroup({2, 6}, 1),
                                      AbelianGroup({3}, 0),
                                      AbelianGroup::free(3)};
  std::uniform_int_distribution<int> coord(-4, 4);
  std::uniform_int_distribution<std::size_t> count(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const AbelianGroup& a = groups[trial % groups.size()];
    std::vector<GroupElement> gens;
    std::size_t g = count(rng);
    for (std::size_t i = 0; i < g; ++i) {
      std::vector<Int> c(a.dim());
      for (auto& x : c) x = coord(rng);
      gens.push_back(a.reduce(c));
    }
    SubgroupCokernelResult r = subgroup_cokernel(a, gens);

    CHECK(r.inclusion.is_well_defined());
    CHECK(r.quotient_map.is_well_defined());
    CHECK(kernel_subgroup(r.inclusion).is_trivial());
    REQUIRE(r.gen_images.size() == gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      CHECK(r.inclusion.apply(r.gen_images[i]) == gens[i]);
      CHECK(r.quotient.is_zero(r.quotient_map.apply(gens[i])));
    }
    REQUIRE(r.lifts.size() == r.quotient.dim());
    for (std::size_t j = 0; j < r.lifts.size(); ++j) {
      GroupElement q = r.quotient_map.apply(r.lifts[j]);
      std::vector<Int> expect(r.quotient.dim());
      expect[j] = 1;
      CHECK(q == r.quotient.reduce(expect));
      if (j < r.quotient.torsion().size()) {
        GroupElement scaled = a.scale(r.quotient.torsion()[j], r.lifts[j]);
        CHECK(r.inclusion.preimage(scaled).has_value());
      }
    }
    // Orders multiply: |A| = |subgroup| * |quotient| in the finite case.
    if (a.is_finite())
      CHECK(a.order() == r.subgroup.order() * r.quotient.order());
  }
}
