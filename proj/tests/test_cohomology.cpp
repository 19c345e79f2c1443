#include <random>

#include "doctest.h"
#include "random_models.hpp"
#include "sullivan/cohomology.hpp"
#include "sullivan/dsl.hpp"
#include "sullivan/errors.hpp"
#include "sullivan/lie.hpp"
#include "sullivan/models.hpp"

using namespace sullivan;

namespace {

std::vector<Element> parse_all(const Cdga& c, const std::vector<std::string>& texts) {
  std::vector<Element> out;
  for (const auto& t : texts) out.push_back(dsl::parse_expression(c.signature(), t));
  return out;
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_SUITE("cohomology") {
  TEST_CASE("Betti tables of the basic families") {
    const auto x5 = betti(xr_model(5));
    CHECK(x5.total == 26);
    CHECK(x5.per_degree == std::vector<std::size_t>{1, 2, 4, 6, 6, 4, 2, 1});
    CHECK_FALSE(x5.truncated_at);
    CHECK(betti(xr_model(4)).total == 16);
    CHECK(betti(xr_model(9)).total == 180);
    CHECK(betti(torus_model(3)).per_degree == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(betti(torus_model(0)).per_degree == std::vector<std::size_t>{1});
  }

  TEST_CASE("representatives") {
    const Cdga x5 = xr_model(5);
    const auto r0 = representatives(x5, 0);
    REQUIRE(r0.size() == 1);
    CHECK(r0[0].to_string() == "1");
    const auto r1 = representatives(x5, 1);
    CHECK(r1.size() == 2);
    const auto v = verify_classes(x5, r1);
    CHECK(v.closed);
    CHECK(v.independent);
    CHECK(representatives(chevalley_eilenberg(u_n_presentation(3)), 1).size() == 2);
    CHECK(representatives(x5, 9).empty());
    // Every degree: closed, independent, and as many as b_n.
    std::vector<Element> all;
    const auto table = betti(x5);
    for (int n = 0; n <= 7; ++n) {
      const auto r = representatives(x5, n);
      CHECK(r.size() == table.per_degree[static_cast<std::size_t>(n)]);
      all.insert(all.end(), r.begin(), r.end());
    }
    CHECK(verify_classes(x5, all).ok());
  }

  TEST_CASE("verify_classes witnesses") {
    const Cdga x5 = xr_model(5);
    const auto dep = verify_classes(x5, parse_all(x5, {"a", "2*a"}));
    CHECK(dep.closed);
    CHECK_FALSE(dep.independent);
    REQUIRE(dep.dependence_witness);
    CHECK(*dep.dependence_witness == "2*[a] - [2*a] = 0 in H^1");
    CHECK_FALSE(dep.spanning);

    const auto exact = verify_classes(x5, parse_all(x5, {"a*b"}));
    CHECK(exact.closed);
    CHECK_FALSE(exact.independent);
    REQUIRE(exact.dependence_witness);
    CHECK(*exact.dependence_witness == "[a*b] = 0 in H^2");

    const auto open = verify_classes(x5, parse_all(x5, {"x1"}));
    CHECK_FALSE(open.closed);
    REQUIRE(open.closed_witness);
    CHECK(*open.closed_witness == "d(x1) = a*b");

    const auto zero = verify_classes(x5, std::vector<Element>{Element(x5.signature())});
    CHECK_FALSE(zero.independent);
    CHECK_THROWS_AS(verify_classes(x5, parse_all(x5, {"a + a*b"})), UsageError);
  }

  TEST_CASE("tensor products") {
    const auto t11 = tensor_product(torus_model(1), torus_model(1));
    CHECK(betti(t11).per_degree == std::vector<std::size_t>{1, 2, 1});
    CHECK(t11.sig()[0].name == "x1_1");
    CHECK(t11.sig()[1].name == "x1_2");
    CHECK_THROWS_AS(tensor_product(torus_model(1), torus_model(1), RenamePolicy::strict), UsageError);
    CHECK(betti(tensor_product(xr_model(5), torus_model(1))).total == 52);
    CHECK(betti(tensor_product(xr_model(5), xr_model(5))).total == 676);
    const auto mixed = tensor_product(xr_model(1), upper_tri_model(3), RenamePolicy::strict);
    CHECK(mixed.size() == 6);
  }

  TEST_CASE("property: Kunneth on random small products") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 12; ++t) {
      const Cdga a = testing_support::random_model(rng, 3 + t % 3, t % 2 == 0);
      const Cdga b = testing_support::random_model(rng, 2 + t % 4, t % 3 == 0);
      const auto ba = betti(a), bb = betti(b);
      const auto bp = betti(tensor_product(a, b));
      CHECK(bp.total == ba.total * bb.total);
      CHECK(bp.per_degree == convolve(ba.per_degree, bb.per_degree));
    }
  }

  TEST_CASE("rank strategy and parallelism do not change results") {
    CohomologyOptions mm;
    mm.method = RankMethod::multimodular_confirmed;
    CohomologyOptions par;
    par.jobs = 4;
    for (const Cdga& c : {xr_model(7), upper_tri_model(5), chevalley_eilenberg(u_n_presentation(4))}) {
      const auto ref = betti(c);
      CHECK(betti(c, mm) == ref);
      CHECK(betti(c, par) == ref);
    }
  }

  TEST_CASE("truncated models") {
    // x odd with dx = u: a contractible pair, only H^0 survives.
    const auto sig = Signature::make({{"x", 1}, {"u", 2}});
    const Cdga c = make_cdga("pair", sig, {Element::generator(sig, "u"), Element(sig)});
    const auto b = betti(c);
    REQUIRE(b.truncated_at);
    CHECK(*b.truncated_at == 5);
    CHECK(b.per_degree == std::vector<std::size_t>{1, 0, 0, 0, 0});
    CHECK(b.total == 1);
    CHECK_THROWS_AS(representatives(c, 5), RangeError);
    // A free polynomial generator contributes one class every 2 degrees.
    const auto poly = make_cdga("poly", Signature::make({{"u", 2}}), {Element(Signature::make({{"u", 2}}))}, 9);
    CHECK(betti(poly).per_degree == std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1, 0, 1});
    // An explicit truncation only narrows the reported window.
    const auto cut = make_cdga("cut", xr_model(3).signature(), xr_model(3).differentials(), 3);
    CHECK(betti(cut).per_degree == std::vector<std::size_t>{1, 2, 3});
  }

  TEST_CASE("JSON form") {
    const auto b = betti(torus_model(2));
    const auto j = to_json(b);
    CHECK(j.dump() == R"({"per_degree":[1,2,1],"total":4,"truncated_at":null})");
    CHECK(betti_from_json(j) == b);
    const auto sig = Signature::make({{"u", 2}});
    const auto t = betti(make_cdga("poly", sig, {Element(sig)}, 4));
    CHECK(to_json(t)["truncated_at"] == 4);
    CHECK(betti_from_json(to_json(t)) == t);
  }

  TEST_CASE("embedding into a product") {
    const auto p = tensor_product(xr_model(1), torus_model(2));
    const Cdga t2 = torus_model(2);
    const Element e = Element::generator(t2.signature(), 0) * Element::generator(t2.signature(), 1);
    CHECK(embed(e, p.signature(), 3).to_string() == "x1_2*x2_2");
    CHECK_THROWS_AS(embed(e, p.signature(), 4), UsageError);
  }
}
