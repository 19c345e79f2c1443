#include "doctest.h"
#include "sullivan/errors.hpp"
#include "sullivan/lie.hpp"
#include "sullivan/models.hpp"

using namespace sullivan;

namespace {

SparseVector unit(std::size_t i) { return {{i, Rational(1)}}; }

SparseVector elementary(const LiePresentation& l, const std::string& name) { return unit(l.index_of(name)); }

// BA - AB for elementary strictly lower triangular matrices; the bracket
// convention on u(n) is the opposite of the matrix commutator.
std::vector<std::vector<int>> matrix_commutator(int n, int i, int j, int s, int t) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0)), b = a, c = a;
  a[i - 1][j - 1] = 1;
  b[s - 1][t - 1] = 1;
  for (int r = 0; r < n; ++r)
    for (int q = 0; q < n; ++q)
      for (int m = 0; m < n; ++m) c[r][q] += b[r][m] * a[m][q] - a[r][m] * b[m][q];
  return c;
}

}  // namespace

TEST_SUITE("lie") {
  TEST_CASE("u(n) brackets follow the matrix commutator") {
    for (int n = 2; n <= 6; ++n) {
      const auto l = u_n_presentation(n);
      CHECK(l.dimension() == static_cast<std::size_t>(n * (n - 1) / 2));
      CHECK(l.nilpotent());
      for (std::size_t p = 0; p < l.dimension(); ++p)
        for (std::size_t q = 0; q < l.dimension(); ++q) {
          int i, j, s, t;
          std::sscanf(l.basis()[p].c_str(), "X_%d_%d", &i, &j);
          std::sscanf(l.basis()[q].c_str(), "X_%d_%d", &s, &t);
          const auto c = matrix_commutator(n, i, j, s, t);
          SparseVector expected;
          for (std::size_t r = 0; r < l.dimension(); ++r) {
            int a, b;
            std::sscanf(l.basis()[r].c_str(), "X_%d_%d", &a, &b);
            if (c[a - 1][b - 1] != 0) expected.emplace_back(r, Rational(c[a - 1][b - 1]));
          }
          CHECK(l.bracket(p, q) == expected);
        }
    }
  }

  TEST_CASE("named brackets in u(4)") {
    const auto l = u_n_presentation(4);
    CHECK(l.basis() == std::vector<std::string>{"X_2_1", "X_3_2", "X_4_3", "X_3_1", "X_4_2", "X_4_1"});
    CHECK(l.format(l.bracket(elementary(l, "X_2_1"), elementary(l, "X_3_2"))) == "X_3_1");
    CHECK(l.format(l.bracket(elementary(l, "X_3_2"), elementary(l, "X_2_1"))) == "-X_3_1");
    CHECK(l.format(l.bracket(elementary(l, "X_3_1"), elementary(l, "X_4_3"))) == "X_4_1");
    CHECK(l.bracket(elementary(l, "X_2_1"), elementary(l, "X_4_3")).empty());
  }

  TEST_CASE("presentation validation") {
    CHECK_THROWS_AS(LiePresentation::make("j", {"X1", "X2", "X3"},
                                          {{0, 1, unit(0)}, {0, 2, unit(1)}}),
                    ValidationError);
    CHECK_THROWS_AS(LiePresentation::make("d", {"X1", "X2", "X3"},
                                          {{0, 1, unit(2)}, {1, 0, unit(2)}}),
                    UsageError);
    CHECK_THROWS_AS(LiePresentation::make("s", {"X1", "X2"}, {{0, 0, unit(1)}}), UsageError);
    const auto h = LiePresentation::make("heis", {"X", "Y", "Z"}, {{1, 0, unit(2)}});
    CHECK(h.format(h.bracket(0, 1)) == "-Z");
    CHECK(h.nilpotent());
    CHECK_THROWS_AS((void)h.index_of("W"), UsageError);
  }

  TEST_CASE("centers") {
    for (int n = 2; n <= 8; ++n) {
      const auto c = center(u_n_presentation(n));
      CHECK(c.dimension == 1);
      REQUIRE(c.rendered.size() == 1);
      CHECK(c.rendered[0] == "X_" + std::to_string(n) + "_1");
    }
    CHECK(center(abelian_lie(4)).dimension == 4);
    for (int r = 1; r <= 6; ++r) {
      const auto dual = dual_homotopy_lie(xr_model(r));
      const auto c = center(dual.lie);
      CHECK(c.dimension == 1);
      CHECK(c.rendered[0] == "X" + std::to_string(r));
    }
    // X_0 is abelian on A, B.
    CHECK(center(dual_homotopy_lie(xr_model(0)).lie).dimension == 2);
  }

  TEST_CASE("lower central series") {
    const auto s3 = lower_central_series(u_n_presentation(3));
    CHECK(s3.dimensions == std::vector<std::size_t>{3, 1, 0});
    CHECK(s3.nilpotency_class == 2);
    for (int n = 2; n <= 7; ++n) {
      const auto s = lower_central_series(u_n_presentation(n));
      CHECK(s.nilpotent);
      CHECK(s.nilpotency_class == static_cast<std::size_t>(n - 1));
    }
    CHECK(lower_central_series(abelian_lie(3)).dimensions == std::vector<std::size_t>{3, 0});
    const auto xr = lower_central_series(dual_homotopy_lie(xr_model(4)).lie);
    CHECK(xr.nilpotency_class == 5);
  }

  TEST_CASE("so(3) is not nilpotent") {
    const auto so3 = LiePresentation::make("so3", {"X", "Y", "Z"},
                                           {{0, 1, unit(2)}, {1, 2, unit(0)}, {2, 0, unit(1)}});
    CHECK_FALSE(so3.nilpotent());
    const auto s = lower_central_series(so3);
    CHECK_FALSE(s.nilpotent);
    CHECK_FALSE(s.nilpotency_class);
    CHECK(center(so3).dimension == 0);
    CHECK_THROWS_AS(chevalley_eilenberg(so3), UsageError);
  }

  TEST_CASE("Chevalley-Eilenberg of u(n) is the upper triangular model") {
    for (int n = 2; n <= 6; ++n) {
      const Cdga ce = chevalley_eilenberg(u_n_presentation(n));
      const Cdga ut = upper_tri_model(n);
      CHECK(ce.sig() == ut.sig());
      for (std::size_t g = 0; g < ce.size(); ++g) CHECK(ce.d(g).to_string() == ut.d(g).to_string());
    }
  }

  TEST_CASE("first Betti number of u(n) is n - 1") {
    for (int n = 2; n <= 7; ++n) {
      const auto h1 = representatives(chevalley_eilenberg(u_n_presentation(n)), 1);
      CHECK(h1.size() == static_cast<std::size_t>(n - 1));
    }
  }

  TEST_CASE("dual and Chevalley-Eilenberg are inverse") {
    for (int n = 2; n <= 5; ++n) {
      const auto l = u_n_presentation(n);
      const auto back = dual_homotopy_lie(chevalley_eilenberg(l));
      CHECK(back.lie.basis() == l.basis());
      CHECK(back.lie.structure_constants() == l.structure_constants());
      CHECK(back.degrees == std::vector<int>(l.dimension(), 0));
    }
    const Cdga x3 = xr_model(3);
    const Cdga again = chevalley_eilenberg(dual_homotopy_lie(x3).lie);
    CHECK(again.sig() == x3.sig());
    for (std::size_t g = 0; g < x3.size(); ++g) CHECK(again.d(g).to_string() == x3.d(g).to_string());
  }

  TEST_CASE("dual of X_r") {
    const auto d = dual_homotopy_lie(xr_model(3)).lie;
    CHECK(d.basis() == std::vector<std::string>{"A", "B", "X1", "X2", "X3"});
    CHECK(d.format(d.bracket(0, 1)) == "-X1");
    CHECK(d.format(d.bracket(0, 2)) == "-X2");
    CHECK(d.format(d.bracket(0, 3)) == "-X3");
    CHECK(d.bracket(1, 2).empty());
    CHECK(d.bracket(0, 4).empty());
    const auto sig = Signature::make({{"u", 2}});
    CHECK_THROWS_AS(dual_homotopy_lie(make_cdga("p", sig, {Element(sig)})), UsageError);
    const auto s3 = Signature::make({{"a", 1}, {"y", 3}});
    CHECK(dual_homotopy_lie(make_cdga("q", s3, {Element(s3), Element(s3)})).degrees == std::vector<int>{0, 2});
  }
}
