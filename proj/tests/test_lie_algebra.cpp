#include "support.hpp"

#include <gtest/gtest.h>

using namespace metriclie;
namespace fx = metriclie::fixtures;
using metriclie::testing::Gen;

namespace {

Vector e(const LieAlgebra& l, const std::string& s) { return unit_vector(l.dim(), l.index_of(s)); }

Subspace span_of(const LieAlgebra& l, std::vector<std::string> labels) {
  std::vector<Vector> vs;
  for (const auto& s : labels) vs.push_back(e(l, s));
  return Subspace::span(l.dim(), vs);
}

std::vector<LieAlgebra> all_fixtures() {
  return {fx::h1(),        fx::g41(),      fx::g52(),       fx::g64(),
          fx::g65(),       fx::h1_plus_r(), fx::abelian(3), fx::n5(),
          direct_sum(fx::h1(), fx::h1())};
}

}  // namespace

TEST(Subspace, CanonicalBasis) {
  auto a = Subspace::span(3, {{2, 2, 0}, {0, 0, 5}, {1, 1, 5}});
  auto b = Subspace::span(3, {{1, 1, 1}, {0, 0, 1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_TRUE(a.contains({3, 3, -1}));
  EXPECT_FALSE(a.contains({1, 0, 0}));
  auto c = a.coordinates({3, 3, -1});
  ASSERT_TRUE(c);
  EXPECT_EQ(a.from_coordinates(*c), (Vector{3, 3, -1}));
}

TEST(Subspace, SumAndIntersection) {
  auto x = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
  auto y = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(x.intersect(y), Subspace::span(3, {{0, 1, 0}}));
  EXPECT_EQ(x.sum(y), Subspace::whole(3));
  EXPECT_EQ(x.intersect(Subspace(3)).dim(), 0u);
}

TEST(Jacobi, Examples) {
  EXPECT_TRUE(fx::h1().validate_jacobi().ok);
  EXPECT_TRUE(fx::abelian(4).validate_jacobi().ok);
  auto bad = make_lie_algebra({"X1", "X2", "X3"},
                              {{"X1", "X2", {{1, "X3"}}}, {"X1", "X3", {{1, "X1"}}}}, false);
  auto rep = bad.validate_jacobi();
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.triple, (std::array<std::size_t, 3>{0, 1, 2}));
  EXPECT_EQ(rep.defect, (Vector{0, 0, 1}));
}

TEST(Jacobi, CreateRejectsViolation) {
  EXPECT_THROW(make_lie_algebra({"X1", "X2", "X3"},
                                {{"X1", "X2", {{1, "X3"}}}, {"X1", "X3", {{1, "X1"}}}}),
               Error);
}

TEST(LieAlgebra, RejectsBadKeys) {
  EXPECT_THROW(LieAlgebra::unchecked({"A", "B"}, {{1, 0, {1, 0}}}), Error);
  EXPECT_THROW(LieAlgebra::unchecked({"A", "B"}, {{0, 1, {1, 0}}, {0, 1, {0, 1}}}), Error);
  EXPECT_THROW(LieAlgebra::unchecked({"A", "B"}, {{0, 1, {1}}}), Error);
}

TEST(Bracket, Examples) {
  auto g65 = fx::g65();
  EXPECT_EQ(g65.bracket(e(g65, "X3"), e(g65, "X4")), Scalar(-1) * e(g65, "Y"));
  auto g41 = fx::g41();
  EXPECT_EQ(g41.bracket(e(g41, "X1"), e(g41, "Z")), e(g41, "Y"));
  Gen g(21);
  for (int t = 0; t < 20; ++t) {
    Vector v = g.vector(6);
    EXPECT_TRUE(is_zero(g65.bracket(v, v)));
  }
  EXPECT_THROW(g65.bracket(Vector(5), Vector(6)), DimensionError);
}

TEST(Bracket, BilinearJacobiOnRandomTriples) {
  Gen g(22);
  for (const auto& l : all_fixtures())
    for (int t = 0; t < 15; ++t) {
      Vector x = g.vector(l.dim()), y = g.vector(l.dim()), z = g.vector(l.dim());
      Vector s = l.bracket(x, l.bracket(y, z)) + l.bracket(y, l.bracket(z, x)) +
                 l.bracket(z, l.bracket(x, y));
      EXPECT_TRUE(is_zero(s));
    }
}

TEST(Series, Examples) {
  EXPECT_EQ(lower_central_series(fx::g41()).profile.dims, (std::vector<std::size_t>{4, 2, 1, 0}));
  EXPECT_EQ(lower_central_series(fx::g52()).profile.dims, (std::vector<std::size_t>{5, 2, 0}));
  EXPECT_EQ(lower_central_series(fx::abelian(3)).profile.dims, (std::vector<std::size_t>{3, 0}));
  auto g41 = fx::g41();
  auto s = lower_central_series(g41);
  EXPECT_EQ(s.terms[1], span_of(g41, {"Y", "Z"}));
  EXPECT_EQ(s.terms[2], span_of(g41, {"Y"}));
}

TEST(Series, StopsOnStabilization) {
  auto l = make_lie_algebra({"X1", "X2"}, {{"X1", "X2", {{1, "X2"}}}});
  EXPECT_EQ(lower_central_series(l).profile.dims, (std::vector<std::size_t>{2, 1}));
  EXPECT_FALSE(is_nilpotent(l));
  EXPECT_THROW(nilpotency_index(l), Error);
  EXPECT_THROW(filtration_spaces(l, Subspace::whole(2)), Error);
}

TEST(Center, Examples) {
  auto g52 = fx::g52();
  EXPECT_EQ(center(g52), span_of(g52, {"Y", "Z"}));
  EXPECT_EQ(center(fx::abelian(4)), Subspace::whole(4));
  auto h = fx::h1();
  EXPECT_EQ(center(h), span_of(h, {"Y"}));
}

TEST(Filtration, Examples) {
  auto g41 = fx::g41();
  auto f = filtration_spaces(g41, Subspace::whole(4));
  ASSERT_EQ(f.size(), 3u);
  for (const auto& s : f) EXPECT_EQ(s, span_of(g41, {"Y"}));

  auto ab = filtration_spaces(fx::abelian(3), Subspace::whole(3));
  ASSERT_EQ(ab.size(), 1u);
  EXPECT_EQ(ab[0], Subspace::whole(3));

  auto g64 = fx::g64();
  auto f64 = filtration_spaces(g64, Subspace::whole(6));
  ASSERT_EQ(f64.size(), 2u);
  EXPECT_EQ(f64[0], span_of(g64, {"Y", "Z"}));
  EXPECT_EQ(f64[1], span_of(g64, {"Y", "Z"}));
}

TEST(Filtration, RhoKernelCutsLevelZero) {
  auto h = fx::h1();
  auto f = filtration_spaces(h, span_of(h, {"X1", "X2"}));
  EXPECT_EQ(f[0].dim(), 0u);
  EXPECT_EQ(f[1], span_of(h, {"Y"}));
}

TEST(DirectSum, Examples) {
  auto hr = direct_sum(fx::h1(), fx::abelian(1));
  EXPECT_EQ(hr.dim(), 4u);
  EXPECT_EQ(lower_central_series(hr).profile.dims, (std::vector<std::size_t>{4, 1, 0}));
  EXPECT_TRUE(direct_sum(fx::abelian(2), fx::abelian(3)).is_abelian());
  EXPECT_EQ(direct_sum(fx::abelian(2), fx::abelian(3)).dim(), 5u);
  auto hh = direct_sum(fx::h1(), fx::h1());
  EXPECT_EQ(hh.dim(), 6u);
  EXPECT_EQ(derived_algebra(hh).dim(), 2u);
  EXPECT_EQ(hh.labels()[0], "a.X1");
  EXPECT_EQ(hh.labels()[3], "b.X1");
}

TEST(DirectSum, SeriesAndCenterAreComponentwise) {
  auto parts = all_fixtures();
  for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
    const auto& a = parts[i];
    const auto& b = parts[i + 1];
    auto s = direct_sum(a, b);
    auto da = lower_central_series(a).profile.dims;
    auto db = lower_central_series(b).profile.dims;
    auto ds = lower_central_series(s).profile.dims;
    for (std::size_t k = 0; k < ds.size(); ++k) {
      std::size_t x = k < da.size() ? da[k] : 0, y = k < db.size() ? db[k] : 0;
      EXPECT_EQ(ds[k], x + y);
    }
    std::vector<Vector> zc;
    auto za = center(a), zb = center(b);
    for (const auto& v : za.basis()) {
      Vector w = zero_vector(s.dim());
      std::copy(v.begin(), v.end(), w.begin());
      zc.push_back(w);
    }
    for (const auto& v : zb.basis()) {
      Vector w = zero_vector(s.dim());
      std::copy(v.begin(), v.end(), w.begin() + a.dim());
      zc.push_back(w);
    }
    EXPECT_EQ(center(s), Subspace::span(s.dim(), zc));
  }
}

TEST(Nilpotent, Fixtures) {
  for (const auto& l : all_fixtures()) {
    EXPECT_TRUE(is_nilpotent(l));
    if (!l.is_abelian()) {
      EXPECT_GE(l.dim() - derived_algebra(l).dim(), 2u);
    }
  }
  EXPECT_EQ(nilpotency_index(fx::g41()), 2u);
  EXPECT_EQ(nilpotency_index(fx::h1()), 1u);
  EXPECT_EQ(nilpotency_index(fx::abelian(3)), 0u);
}

TEST(Ad, ColumnsAreBrackets) {
  auto l = fx::g65();
  for (std::size_t i = 0; i < l.dim(); ++i) {
    Matrix a = l.ad(i);
    for (std::size_t j = 0; j < l.dim(); ++j) EXPECT_EQ(a.column(j), l.structure(i, j));
  }
}
