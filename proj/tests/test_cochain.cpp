#include "pinned.hpp"

#include <gtest/gtest.h>

using namespace metriclie;
namespace fx = metriclie::fixtures;
using namespace metriclie::testing;

namespace {

struct Pair {
  LieAlgebra l;
  OrthogonalModule a;
};

std::vector<Pair> complexes() {
  std::vector<Pair> out;
  for (auto l : {fx::h1(), fx::g41(), fx::g52(), fx::g64(), fx::g65(), fx::h1_plus_r(),
                 fx::abelian(4), fx::n5()}) {
    out.push_back({l, fx::orthonormal(1, 1)});
    out.push_back({l, fx::orthonormal(0, 1)});
  }
  out.push_back({fx::h1(), nil_module_h1()});
  auto ab2 = fx::abelian(2);
  out.push_back({ab2, OrthogonalModule::with_action(ab2, antidiag3(),
                                                    {nil_skew(), Scalar(2) * nil_skew()})});
  return out;
}

}  // namespace

TEST(Module, RejectsBadData) {
  auto l = fx::h1();
  EXPECT_THROW(OrthogonalModule::trivial(Matrix{{1, 1}, {0, 1}}), Error);
  EXPECT_THROW(OrthogonalModule::trivial(Matrix{{1, 0}, {0, 0}}), Error);
  // not skew
  EXPECT_THROW(OrthogonalModule::with_action(l, Matrix::identity(2),
                                             {Matrix{{1, 0}, {0, 0}}, Matrix(2, 2), Matrix(2, 2)}),
               Error);
  // skew but [ρ(X1), ρ(X2)] != ρ(Y)
  Matrix j{{0, 1}, {-1, 0}};
  EXPECT_THROW(OrthogonalModule::with_action(l, Matrix::identity(2), {j, Matrix(2, 2), j}), Error);
}

TEST(Module, InvariantsOfNilpotentSkew) {
  auto a = nil_module_h1();
  EXPECT_FALSE(a.is_trivial());
  EXPECT_EQ(a.invariants(), Subspace::span(3, {{1, 0, 0}}));
  EXPECT_EQ(a.rho_kernel(3), Subspace::span(3, {{0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(fx::orthonormal(1, 1).invariants(), Subspace::whole(2));
}

TEST(Cochain, AlternatingStorage) {
  Cochain c = Cochain::scalar(4, 2);
  c.add({2, 0}, Scalar(3));
  EXPECT_EQ(c.scalar_at({0, 2}), -3);
  EXPECT_EQ(c.scalar_at({2, 0}), 3);
  EXPECT_EQ(c.scalar_at({1, 1}), 0);
  EXPECT_THROW(c.add({1, 1}, Scalar(1)), Error);
  c.add({0, 2}, Scalar(3));
  EXPECT_TRUE(c.is_zero());
  EXPECT_THROW(c.add({0, 4}, Scalar(1)), DimensionError);
  EXPECT_THROW(c.add({0}, Scalar(1)), DimensionError);
}

TEST(Cochain, DegreeZeroAndTooHighDegree) {
  Cochain c0 = Cochain::scalar(3, 0);
  c0.add({}, Scalar(5));
  EXPECT_EQ(c0.evaluate({}), (Vector{5}));
  Cochain big = Cochain::scalar(2, 3);
  EXPECT_TRUE(big.is_zero());
  EXPECT_TRUE(differential(fx::abelian(2), big).is_zero());
}

TEST(Cochain, EvaluateIsMultilinear) {
  Gen g(31);
  for (int t = 0; t < 30; ++t) {
    Cochain c = g.module_cochain(4, 2, 2);
    Vector x = g.vector(4), y = g.vector(4), z = g.vector(4);
    Scalar s = g.scalar(0);
    EXPECT_EQ(c.evaluate({x + s * z, y}), c.evaluate({x, y}) + s * c.evaluate({z, y}));
    EXPECT_EQ(c.evaluate({x, y}), -c.evaluate({y, x}));
  }
}

TEST(Differential, N6Display) {
  auto l = n6();
  Gen g(32);
  for (int t = 0; t < 10; ++t) {
    Cochain a = g.module_cochain(l.dim(), 2, 2);
    Cochain d = differential(l, fx::orthonormal(1, 1), a);
    EXPECT_EQ(ev(d, l, {"X1", "X2", "X3"}), -ev(a, l, {"Y", "X3"}) + ev(a, l, {"Z", "X2"}));
    EXPECT_EQ(ev(d, l, {"X1", "X2", "X4"}), -ev(a, l, {"Y", "X4"}));
    EXPECT_EQ(ev(d, l, {"X1", "X3", "X4"}), -ev(a, l, {"Z", "X4"}) - ev(a, l, {"Z", "X1"}));
    EXPECT_EQ(ev(d, l, {"X2", "X3", "X4"}), -ev(a, l, {"Z", "X2"}));
  }
}

TEST(Differential, N7aDisplays) {
  Gen g(33);
  for (auto [y, z] : {std::pair{1, 1}, std::pair{0, 2}, std::pair{-3, 1}}) {
    auto l = n7a(y, z);
    Vector yz = Scalar(y) * e(l, "Y") + Scalar(z) * e(l, "Z");
    for (int t = 0; t < 5; ++t) {
      Cochain a = g.module_cochain(l.dim(), 2, 2);
      Cochain d = differential(l, fx::orthonormal(0, 2), a);
      EXPECT_EQ(ev(d, l, {"X1", "X2", "X3"}), -ev(a, l, {"Y", "X3"}) + ev(a, l, {"Z", "X2"}));
      EXPECT_EQ(ev(d, l, {"X2", "X3", "X4"}), -ev(a, l, {"Y", "X2"}));
      EXPECT_EQ(ev(d, l, {"X2", "X3", "X5"}), -ev(a, l, {"Z", "X2"}));
      EXPECT_EQ(ev(d, l, {"X1", "X3", "X5"}), -ev(a, l, {"Z", "X5"}) - ev(a, l, {"Z", "X1"}));
      EXPECT_EQ(ev(d, l, {"X1", "X3", "X4"}), -ev(a, l, {"Z", "X4"}) - ev(a, l, {"Y", "X1"}));
      EXPECT_EQ(ev(d, l, {"X1", "X4", "X5"}), ev(a, {e(l, "X1"), yz}));
      EXPECT_EQ(ev(d, l, {"X3", "X4", "X5"}),
                -ev(a, l, {"Y", "X5"}) - ev(a, {yz, e(l, "X3")}) + ev(a, l, {"Z", "X4"}));
    }
  }
}

TEST(Differential, N7bDisplays) {
  Gen g(34);
  auto l = n7b(1, 1);
  for (int t = 0; t < 5; ++t) {
    Cochain a = g.module_cochain(l.dim(), 2, 1);
    Cochain d = differential(l, fx::orthonormal(0, 1), a);
    EXPECT_EQ(ev(d, l, {"X1", "X2", "X3"}), -ev(a, l, {"Y", "X3"}) + ev(a, l, {"Z", "X2"}));
    EXPECT_EQ(ev(d, l, {"X1", "X2", "X4"}), -ev(a, l, {"Y", "X4"}) - ev(a, l, {"Z", "X1"}));
  }
  auto l2 = n7b(1, 0);
  for (int t = 0; t < 5; ++t) {
    Cochain a = g.module_cochain(l2.dim(), 2, 1);
    Cochain d = differential(l2, fx::orthonormal(0, 1), a);
    EXPECT_EQ(ev(d, l2, {"X2", "X4", "X3"}), -ev(a, l2, {"Z", "X3"}));
    EXPECT_EQ(ev(d, l2, {"X1", "X3", "X4"}), -ev(a, l2, {"Z", "X4"}));
    EXPECT_EQ(ev(d, l2, {"X1", "X3", "X5"}), -ev(a, l2, {"Z", "X5"}) - ev(a, l2, {"Y", "X1"}));
  }
}

TEST(Differential, N5Equations) {
  auto l = fx::n5();
  Gen g(35);
  for (int t = 0; t < 10; ++t) {
    Cochain a = g.module_cochain(l.dim(), 2, 2);
    Cochain d = differential(l, fx::orthonormal(1, 1), a);
    EXPECT_EQ(ev(d, l, {"X2", "X3", "Z"}), -ev(a, l, {"Y", "Z"}));
    EXPECT_EQ(ev(d, l, {"X1", "X2", "X3"}), -ev(a, l, {"Z", "X3"}) - ev(a, l, {"Y", "X1"}));
    EXPECT_EQ(ev(d, l, {"X1", "Z", "X2"}), -ev(a, l, {"Y", "X2"}));
    EXPECT_EQ(ev(d, l, {"X1", "Z", "X3"}), -ev(a, l, {"Y", "X3"}));
    EXPECT_EQ(ev(d, l, {"X1", "Z", "Y"}), -ev(a, l, {"Y", "Y"}));
    Cochain gamma = g.scalar_cochain(l.dim(), 3);
    Cochain dg = differential(l, gamma);
    EXPECT_EQ(ev(dg, l, {"X1", "X3", "Y", "Z"}), -ev(gamma, l, {"Y", "X3", "Y"}));
    EXPECT_EQ(ev(dg, l, {"X1", "X3", "Y", "Z"}), (Vector{0}));
  }
}

TEST(Differential, N5WedgeNormalization) {
  // <α∧α>(X1,X3,Y,Z) = 2 [<α13,αYZ> + <α3Y,α1Z> + <αY1,α3Z>]
  auto l = fx::n5();
  Gen g(36);
  auto a = fx::orthonormal(1, 2);
  for (int t = 0; t < 10; ++t) {
    Cochain al = g.module_cochain(l.dim(), 2, 3);
    Cochain w = wedge_pair(a, al, al);
    Scalar rhs = a.pair(ev(al, l, {"X1", "X3"}), ev(al, l, {"Y", "Z"})) +
                 a.pair(ev(al, l, {"X3", "Y"}), ev(al, l, {"X1", "Z"})) +
                 a.pair(ev(al, l, {"Y", "X1"}), ev(al, l, {"X3", "Z"}));
    EXPECT_EQ(ev(w, l, {"X1", "X3", "Y", "Z"}).front(), 2 * rhs);
  }
}

TEST(Differential, PinnedExpansionsShared) {
  Gen g(39);
  EXPECT_EQ(pinned_mismatches(g, 3), std::vector<std::string>{});
}

TEST(Differential, Anchors) {
  Gen g(37);
  auto ab = fx::abelian(4);
  for (std::size_t p = 0; p <= 4; ++p)
    EXPECT_TRUE(differential(ab, fx::orthonormal(0, 2), g.module_cochain(4, p, 2)).is_zero());
  auto g41 = fx::g41();
  for (const auto& key : increasing_tuples(4, 3))
    EXPECT_TRUE(differential(g41, basis_form(4, key)).is_zero());
  for (int t = 0; t < 10; ++t) EXPECT_TRUE(differential(g41, g.scalar_cochain(4, 3, 0)).is_zero());
}

TEST(Differential, RhoTermOnDegreeZero) {
  auto l = fx::h1();
  auto a = nil_module_h1();
  Cochain c = Cochain::module_valued(3, 0, 3);
  c.add({}, Vector{0, 0, 1});
  Cochain d = differential(l, a, c);
  EXPECT_EQ(d.at({0}), (Vector{0, -1, 0}));
  EXPECT_EQ(d.at({1}), zero_vector(3));
}

TEST(Differential, SquareIsZero) {
  Gen g(38);
  for (const auto& [l, a] : complexes())
    for (std::size_t p = 0; p <= 3; ++p)
      for (int t = 0; t < 4; ++t) {
        Cochain c = g.module_cochain(l.dim(), p, a.dim());
        EXPECT_TRUE(differential(l, a, differential(l, a, c)).is_zero());
        Cochain s = g.scalar_cochain(l.dim(), p);
        EXPECT_TRUE(differential(l, differential(l, s)).is_zero());
      }
}

TEST(Differential, ShapeMismatch) {
  EXPECT_THROW(differential(fx::h1(), fx::orthonormal(0, 2), Cochain::module_valued(4, 1, 2)),
               DimensionError);
  EXPECT_THROW(differential(fx::h1(), fx::orthonormal(0, 2), Cochain::module_valued(3, 1, 3)),
               DimensionError);
}

TEST(Wedge, G6AlphaIsIsotropic) {
  for (auto inst : {fx::cocycle_g64(), fx::cocycle_g65()}) {
    EXPECT_TRUE(wedge_pair(inst.module, inst.cocycle.alpha(), inst.cocycle.alpha()).is_zero());
    EXPECT_TRUE(differential(inst.algebra, inst.module, inst.cocycle.alpha()).is_zero());
  }
}

TEST(Wedge, ZeroAndNonzero) {
  auto l = fx::abelian(4);
  auto a = fx::orthonormal(0, 1);
  Cochain c = Gen(39).module_cochain(4, 2, 1);
  EXPECT_TRUE(wedge_pair(a, Cochain::module_valued(4, 1, 1), c).is_zero());
  Cochain ap = fx::module_form(l, 2, 1, {{1, {"X1", "X3"}, 0}, {1, {"X2", "X4"}, 0}});
  Cochain w = wedge_pair(a, ap, ap);
  EXPECT_FALSE(w.is_zero());
  EXPECT_EQ(w.scalar_at({0, 1, 2, 3}), -2);
}

TEST(Wedge, OneForms) {
  Gen g(40);
  auto a = fx::orthonormal(1, 2);
  for (int t = 0; t < 20; ++t) {
    Cochain t1 = g.module_cochain(4, 1, 3), t2 = g.module_cochain(4, 1, 3);
    Cochain w = wedge_pair(a, t1, t2);
    Vector x = g.vector(4), y = g.vector(4);
    Scalar expect = a.pair(t1.evaluate({x}), t2.evaluate({y})) - a.pair(t1.evaluate({y}), t2.evaluate({x}));
    EXPECT_EQ(w.evaluate({x, y}).front(), expect);
    EXPECT_EQ(w.evaluate({y, x}).front(), -expect);
  }
}

TEST(Wedge, BilinearAndGradedSymmetric) {
  Gen g(41);
  auto a = fx::orthonormal(1, 1);
  for (auto [p, q] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 2}, {2, 1}, {1, 3}})
    for (int t = 0; t < 8; ++t) {
      Cochain c1 = g.module_cochain(5, p, 2), c2 = g.module_cochain(5, q, 2);
      Cochain c3 = g.module_cochain(5, p, 2);
      Scalar s = g.scalar(0);
      Scalar sign = (p * q) % 2 ? -1 : 1;
      EXPECT_EQ(wedge_pair(a, c1, c2), sign * wedge_pair(a, c2, c1));
      EXPECT_EQ(wedge_pair(a, c1 + s * c3, c2), wedge_pair(a, c1, c2) + s * wedge_pair(a, c3, c2));
    }
}

TEST(Wedge, ScalarWedgeOfBasisForms) {
  Cochain w = wedge(basis_form(4, {0}), basis_form(4, {2}));
  EXPECT_EQ(w, basis_form(4, {0, 2}));
  EXPECT_EQ(wedge(basis_form(4, {2}), basis_form(4, {0})), Scalar(-1) * basis_form(4, {0, 2}));
  EXPECT_EQ(wedge(basis_form(4, {0, 1}), basis_form(4, {2, 3})), basis_form(4, {0, 1, 2, 3}));
}

TEST(Wedge, LeibnizRule) {
  Gen g(42);
  for (const auto& [l, a] : complexes()) {
    if (!a.is_trivial()) continue;
    for (std::size_t p = 1; p <= 2; ++p) {
      Cochain x = g.module_cochain(l.dim(), p, a.dim());
      Cochain y = g.module_cochain(l.dim(), 2, a.dim());
      Scalar sign = p % 2 ? -1 : 1;
      EXPECT_EQ(differential(l, wedge_pair(a, x, y)),
                wedge_pair(a, differential(l, a, x), y) + sign * wedge_pair(a, x, differential(l, a, y)));
    }
  }
}

TEST(Cohomology, Examples) {
  EXPECT_EQ(cohomology_dim(fx::abelian(5), OrthogonalModule::scalar(), 3), 10u);
  for (std::size_t m : {1, 2, 3})
    EXPECT_EQ(cohomology_dim(fx::h1_plus_r(), fx::orthonormal(0, m), 2), 4 * m);
  for (const auto& l : {fx::h1(), fx::g41(), fx::g65(), fx::abelian(3)})
    EXPECT_EQ(cohomology_dim(l, OrthogonalModule::scalar(), 0), 1u);
  EXPECT_EQ(cohomology_dim(fx::h1(), OrthogonalModule::scalar(), 1), 2u);
  EXPECT_EQ(cohomology_dim(fx::h1(), OrthogonalModule::scalar(), 4), 0u);
}

TEST(Cohomology, NontrivialModuleDegreeZeroIsInvariants) {
  EXPECT_EQ(cohomology_dim(fx::h1(), nil_module_h1(), 0), 1u);
}

TEST(Pullback, LhDiagonal) {
  auto l = fx::h1_plus_r();
  auto a = fx::orthonormal(0, 2);
  Cochain a6 = fx::named_alpha(l, 6, false, 2);
  for (Scalar c : {Scalar(2), Scalar(3), Scalar(1, 2)}) {
    Isomap iso{Matrix::diagonal({c, 1 / (c * c), 1 / c, c * c}), Matrix::identity(2)};
    ASSERT_EQ(check_isomap(iso, l, l, a, a), "");
    EXPECT_EQ(pullback(iso, a6), a6);
    EXPECT_EQ(pullback(iso, c * fx::gamma0(l)), fx::gamma0(l));
  }
}

TEST(Pullback, LhS5) {
  auto l = fx::h1_plus_r();
  auto a = fx::orthonormal(1, 1);
  Cochain a5 = fx::named_alpha(l, 5, false, 2);
  Scalar c = 16, s = 2;
  Isomap iso{Matrix::diagonal({s, 1 / (s * s), 1 / s, 1 / s}), Matrix::diagonal({1, 1})};
  ASSERT_EQ(check_isomap(iso, l, l, a, a), "");
  EXPECT_EQ(pullback(iso, a5), a5);
  EXPECT_EQ(pullback(iso, c * fx::gamma0(l)), fx::gamma0(l));
  Scalar cn = -16;
  Isomap neg{Matrix::diagonal({s, 1 / (s * s), 1 / s, -1 / s}), Matrix::diagonal({1, -1})};
  ASSERT_EQ(check_isomap(neg, l, l, a, a), "");
  EXPECT_EQ(pullback(neg, a5), a5);
  EXPECT_EQ(pullback(neg, cn * fx::gamma0(l)), fx::gamma0(l));
}

TEST(Pullback, Identity) {
  Gen g(43);
  auto l = fx::g52();
  Isomap id{Matrix::identity(5), Matrix::identity(2)};
  for (std::size_t p = 0; p <= 3; ++p) {
    Cochain c = g.module_cochain(5, p, 2);
    EXPECT_EQ(pullback(id, c), c);
  }
}

TEST(Pullback, RejectsNonHomomorphism) {
  auto l = fx::h1();
  auto a = fx::orthonormal(0, 1);
  Isomap bad{Matrix::diagonal({1, 1, 2}), Matrix::identity(1)};
  EXPECT_NE(check_isomap(bad, l, l, a, a), "");
  Isomap nonisometric{Matrix::identity(3), Matrix{{2}}};
  EXPECT_NE(check_isomap(nonisometric, l, l, a, a), "");
}

TEST(Pullback, CommutesWithDifferentialAndWedge) {
  Gen g(44);
  auto l = fx::g41();
  auto a = fx::orthonormal(1, 1);
  Matrix sw = Matrix::diagonal({-1, 1});
  for (int t = 0; t < 20; ++t) {
    Scalar aa = g.scalar(0), bb = g.scalar(0);
    if (sgn(aa) == 0 || sgn(bb) == 0) continue;
    Isomap iso{aut_g41(aa, bb, g.scalar(), {g.scalar(), g.scalar(), g.scalar(), g.scalar()}), sw};
    ASSERT_EQ(check_isomap(iso, l, l, a, a), "");
    for (std::size_t p = 0; p <= 3; ++p) {
      Cochain c = g.module_cochain(4, p, 2);
      EXPECT_EQ(pullback(iso, differential(l, a, c)), differential(l, a, pullback(iso, c)));
    }
    Cochain c1 = g.module_cochain(4, 2, 2), c2 = g.module_cochain(4, 1, 2);
    EXPECT_EQ(wedge_pair(a, pullback(iso, c1), pullback(iso, c2)), pullback(iso, wedge_pair(a, c1, c2)));
  }
}

TEST(Pullback, PreservesCohomologyDimensions) {
  Gen g(45);
  auto l = fx::g41();
  auto a = fx::orthonormal(0, 1);
  Isomap iso{aut_g41(2, -1, 3, {1, 0, -2, 5}), Matrix::identity(1)};
  ASSERT_EQ(check_isomap(iso, l, l, a, a), "");
  for (std::size_t p = 0; p <= 4; ++p) {
    // rank of d_p is unchanged by the change of basis S^* on both sides
    Matrix dp = differential_matrix(l, a, p);
    Cochain shape = Cochain::module_valued(4, p, 1);
    auto tuples = increasing_tuples(4, p).size();
    Matrix pulled(dp.rows(), tuples);
    for (std::size_t col = 0; col < tuples; ++col) {
      Cochain c = pullback(iso, from_coordinates(shape, unit_vector(tuples, col)));
      Vector img = to_coordinates(differential(l, a, c));
      for (std::size_t r = 0; r < img.size(); ++r) pulled(r, col) = img[r];
    }
    EXPECT_EQ(rank(pulled), rank(dp));
  }
}
