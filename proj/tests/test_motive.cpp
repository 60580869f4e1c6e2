#include "doctest.h"
#include "graphhyp/class_poly.hpp"
#include "graphhyp/count.hpp"
#include "support.hpp"

using namespace graphhyp;

TEST_SUITE("motive") {
  TEST_CASE("class polynomial arithmetic and printing") {
    const ClassPoly p({1, 1});
    CHECK(p.to_string() == "1 + 1*L");
    CHECK(p.to_json() == "[1,1]");
    CHECK(ClassPoly({0, 0, 0}).is_zero());
    CHECK(ClassPoly().to_string() == "0");
    CHECK(ClassPoly({1, 3, -2}).to_string() == "1 + 3*L - 2*L^2");
    CHECK((p * p) == ClassPoly({1, 2, 1}));
    CHECK((p - p).is_zero());
    CHECK(ClassPoly::lefschetz_power(3).evaluate(5) == 125);
    CHECK(ClassPoly({2, 0, 1}).coefficient(2) == 1);
    CHECK(ClassPoly({2, 0, 1}).coefficient(7) == 0);
    CHECK(ClassPoly::lefschetz_power(40).evaluate(16) == BigInt(1) << 160);
  }

  TEST_CASE("projective spaces") {
    CHECK(proj_space(0) == ClassPoly::constant(1));
    CHECK(proj_space(2) == ClassPoly({1, 1, 1}));
    for (std::int64_t q : {2, 3, 4, 5, 7}) {
      BigInt expected = 0;
      BigInt power = 1;
      for (int i = 0; i <= 5; ++i) {
        expected += power;
        power *= q;
      }
      CHECK(proj_space(5).evaluate(q) == expected);
    }
  }

  TEST_CASE("Grassmannians against subspace enumeration") {
    CHECK(grassmann(1, 2) == proj_space(1));
    CHECK(grassmann(2, 4).evaluate(2) == 35);
    CHECK(grassmann(3, 2).is_zero());
    for (int b = 0; b <= 5; ++b) {
      for (int a = 0; a <= b; ++a) {
        CHECK(grassmann(a, b) == grassmann(b - a, b));
        for (std::uint64_t q : {2, 3}) {
          if (a * b > 12 && q == 3) continue;
          CHECK(grassmann(a, b).evaluate(static_cast<std::int64_t>(q)) == oracle::subspace_count(a, b, q));
        }
      }
    }
    for (int b = 1; b <= 8; ++b) CHECK(grassmann(1, b) == proj_space(b - 1));
  }

  TEST_CASE("symmetric rank strata against matrix enumeration") {
    CHECK(sym_rank_stratum(2, 2).evaluate(2) == 4);
    CHECK(sym_rank_stratum(1, 1) == ClassPoly::constant(1));
    CHECK_THROWS(sym_rank_stratum(3, 0));
    CHECK_THROWS(sym_rank_stratum(2, 3));
    for (int n = 1; n <= 3; ++n) {
      for (int r = 1; r <= n; ++r) {
        for (std::uint64_t q : {2, 3}) {
          CHECK(sym_rank_stratum(n, r).evaluate(static_cast<std::int64_t>(q)) ==
                oracle::symmetric_rank_count(n, r, q));
        }
      }
    }
    CHECK(sym_rank_stratum(4, 2).evaluate(2) == oracle::symmetric_rank_count(4, 2, 2));
  }

  TEST_CASE("rank strata partition the space of symmetric matrices") {
    for (int n = 1; n <= 7; ++n) {
      ClassPoly total;
      for (int r = 1; r <= n; ++r) total += sym_rank_stratum(n, r);
      CHECK(total == proj_space(n * (n + 1) / 2 - 1));
    }
  }

  TEST_CASE("predicted dual classes match direct counts") {
    CHECK(dual_complete_class(3) == proj_space(1));
    CHECK_THROWS(dual_complete_class(2));
    for (std::uint32_t n = 3; n <= 4; ++n) {
      for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        const std::uint64_t measured =
            count_projective(psi_dual(complete_graph(n)), FiniteField::of_order(q)).projective_count;
        CHECK(dual_complete_class(static_cast<int>(n)).evaluate(static_cast<std::int64_t>(q)) == measured);
      }
    }
    for (std::uint64_t q : {2, 3}) {
      CHECK(dual_complete_class(4).evaluate(static_cast<std::int64_t>(q)) ==
            oracle::projective_count_mod(psi_dual(complete_graph(4)), q));
    }
  }

  TEST_CASE("cones") {
    CHECK(cone_class(ClassPoly::constant(3)) == ClassPoly({1, 3}));
    CHECK(cone_class(ClassPoly()) == ClassPoly::constant(1));
    CHECK(cone_class(proj_space(1)) == proj_space(2));
  }

  TEST_CASE("interpolation recovers L + 1") {
    const InterpolationVerdict v = interpolate_counts({{2, 3}, {3, 4}}, 1, {{5, 6}, {7, 8}, {8, 9}, {9, 10}});
    CHECK(v.status == VerdictStatus::kPolynomial);
    REQUIRE(v.fitted);
    CHECK(*v.fitted == ClassPoly({1, 1}));
    CHECK(v.reason.empty());
  }

  TEST_CASE("interpolation with surplus nodes") {
    std::vector<CountNode> nodes;
    for (std::uint64_t q : {2, 3, 4, 5, 7}) nodes.push_back({q, q * q + 1});
    const InterpolationVerdict fine = interpolate_counts(nodes, 2, {});
    CHECK(fine.status == VerdictStatus::kPolynomial);
    CHECK(*fine.fitted == ClassPoly({1, 0, 1}));
    nodes.back().count += 1;
    CHECK(interpolate_counts(nodes, 2, {}).status == VerdictStatus::kInconsistent);
  }

  TEST_CASE("interpolation rejects bad data") {
    const InterpolationVerdict holdout = interpolate_counts({{2, 3}, {3, 4}}, 1, {{5, 7}});
    CHECK(holdout.status == VerdictStatus::kInconsistent);
    CHECK_FALSE(holdout.fitted);
    CHECK_FALSE(holdout.reason.empty());

    const InterpolationVerdict fractional = interpolate_counts({{2, 0}, {4, 1}}, 1, {});
    CHECK(fractional.status == VerdictStatus::kInconsistent);

    const InterpolationVerdict too_high = interpolate_counts({{2, 1}, {3, 2}, {4, 5}}, 1, {});
    CHECK(too_high.status == VerdictStatus::kInconsistent);

    CHECK_THROWS_AS(interpolate_counts({{2, 3}}, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(interpolate_counts({{2, 3}, {2, 3}}, 1, {}), std::invalid_argument);
  }
}
