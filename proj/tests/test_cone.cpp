#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "qstab/cone.hpp"
#include "qstab/linalg.hpp"
#include "qstab/sampling.hpp"

using namespace qstab;

namespace {

rational_vector ones(int n) { return rational_vector(static_cast<std::size_t>(n), rational(1)); }

std::vector<int> violations(const type_a_quiver& q, const rational_vector& w,
                            const rational_vector& r) {
  const central_charge z(w, r);
  const auto sys = total_stability_inequalities(q);
  std::vector<int> out;
  for (std::size_t i = 0; i < sys.items.size(); ++i)
    if (!record_holds(z, sys.items[i])) out.push_back(static_cast<int>(i) + 1);
  return out;
}

}  // namespace

TEST_CASE("exact row reduction") {
  // inconsistent system is reported, not silently solved
  const rational_matrix a = {{rational(1), rational(1)}, {rational(1), rational(1)}};
  CHECK_THROWS_AS(solve_particular(a, {rational(1), rational(2)}, 2), std::logic_error);
  CHECK(solve_particular(a, {rational(3), rational(3)}, 2) ==
        std::vector<rational>{rational(3), rational(0)});

  const auto basis = kernel_basis({{rational(1), rational(1)}}, 2);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == std::vector<rational>{rational(-1), rational(1)});

  const auto rr = reduced_row_echelon({{rational(0), rational(0)}, {rational(2), rational(4)}}, 2);
  CHECK(rr.rank == 1);
  CHECK(rr.pivot_cols == std::vector<int>{0});
  CHECK(rr.mat[0] == std::vector<rational>{rational(1), rational(2)});
}

TEST_CASE("linear forms of the defining inequalities") {
  const auto rr = inequality_matrix(parse_quiver("RR"), ones(3));
  REQUIRE(rr.forms.size() == 2);
  CHECK(rr.forms[0] == std::vector<rational>{rational(1), rational(-1), rational(0)});
  CHECK(rr.forms[1] == std::vector<rational>{rational(0), rational(1), rational(-1)});

  const auto rl = inequality_matrix(parse_quiver("RL"), ones(3));
  REQUIRE(rl.forms.size() == 2);
  CHECK(rl.forms[0] == std::vector<rational>{rational(1), rational(-1, 2), rational(-1, 2)});
  CHECK(rl.forms[1] == std::vector<rational>{rational(-1, 2), rational(-1, 2), rational(1)});

  CHECK_THROWS_AS(inequality_matrix(parse_quiver("RR"), rational_vector{rational(1), rational(0), rational(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(inequality_matrix(parse_quiver("RR"), ones(2)), std::invalid_argument);
}

TEST_CASE("forms vanish at w = r and reproduce slope differences") {
  charge_sampler sampler(31);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& q : all_orientations(n)) {
      const auto r = sampler.positive_vector(n);
      const auto sys = inequality_matrix(q, r);
      for (const auto& form : sys.forms) CHECK(evaluate_form(form, r) == rational(0));

      const auto records = total_stability_inequalities(q);
      const auto w = sampler.weight_vector(n);
      const central_charge z(w, r);
      for (std::size_t i = 0; i < sys.forms.size(); ++i) {
        const rational expected =
            slope_of_support(z, records.items[i].lhs) - slope_of_support(z, records.items[i].rhs);
        CHECK(evaluate_form(sys.forms[i], w) == expected);
      }
    }
  }
}

TEST_CASE("interior point construction") {
  CHECK(construct_total_weight(parse_quiver(""), {rational(7)}) == rational_vector{rational(0)});
  CHECK(construct_total_weight(parse_quiver("RR"), ones(3)) ==
        rational_vector{rational(2), rational(1), rational(0)});
  CHECK(construct_total_weight(parse_quiver("RL"), ones(3)) ==
        rational_vector{rational(0), rational(-2), rational(0)});

  charge_sampler sampler(32);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& q : all_orientations(n)) {
      for (const auto& r : {ones(n), sampler.positive_vector(n)}) {
        const auto w = construct_total_weight(q, r);
        const central_charge z(w, r);
        CHECK(is_totally_stable_fast(q, z));
        CHECK(is_totally_stable_oracle(q, z));
        // every form evaluates to exactly 1
        const auto sys = inequality_matrix(q, r);
        for (const auto& form : sys.forms) CHECK(evaluate_form(form, w) == rational(1));
      }
    }
  }
}

TEST_CASE("interior points stay interior under translation along r") {
  charge_sampler sampler(33);
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(sampler.rng.in_range(1, 6));
    const auto q = sampler.quiver(n);
    const auto r = sampler.positive_vector(n);
    const rational c = sampler.weight_entry();
    auto w = construct_total_weight(q, r);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] += c * r[j];
    CHECK(is_totally_stable_fast(q, central_charge(w, r)));
  }
}

TEST_CASE("minimality witnesses violate exactly one record") {
  const auto rr = parse_quiver("RR");
  CHECK(minimality_witness(rr, ones(3), 1) ==
        rational_vector{rational(0), rational(1), rational(0)});
  CHECK(minimality_witness(rr, ones(3), 2) ==
        rational_vector{rational(0), rational(-1), rational(0)});
  CHECK(violations(rr, minimality_witness(rr, ones(3), 1), ones(3)) == std::vector<int>{1});
  CHECK(violations(rr, minimality_witness(rr, ones(3), 2), ones(3)) == std::vector<int>{2});

  const auto big = parse_quiver("RRLRRLR");
  for (int k = 1; k <= 7; ++k) {
    const auto w = minimality_witness(big, ones(8), k);
    CHECK(violations(big, w, ones(8)) == std::vector<int>{k});
    const auto sys = inequality_matrix(big, ones(8));
    for (std::size_t j = 0; j < sys.forms.size(); ++j)
      CHECK(evaluate_form(sys.forms[j], w) ==
            (static_cast<int>(j) + 1 == k ? rational(-1) : rational(1)));
  }

  CHECK_THROWS_AS(minimality_witness(rr, ones(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(minimality_witness(rr, ones(3), 3), std::invalid_argument);
  CHECK_THROWS_AS(minimality_witness(parse_quiver(""), {rational(1)}, 1), std::invalid_argument);
}

TEST_CASE("rank and lineality of the form matrix") {
  const auto one = lineality_check(parse_quiver(""), {rational(5, 2)});
  CHECK(one.rank == 0);
  REQUIRE(one.kernel_basis.size() == 1);
  CHECK(one.is_chart);

  const auto rr = lineality_check(parse_quiver("RR"), ones(3));
  CHECK(rr.rank == 2);
  REQUIRE(rr.kernel_basis.size() == 1);
  CHECK(rr.kernel_basis[0] == rational_vector{rational(1), rational(1), rational(1)});
  CHECK(rr.is_chart);

  charge_sampler sampler(34);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& q : all_orientations(n)) {
      const auto r = sampler.positive_vector(n);
      const auto report = lineality_check(q, r);
      CHECK(report.rank == n - 1);
      REQUIRE(report.kernel_basis.size() == 1);
      CHECK(proportional(report.kernel_basis[0], r));
      CHECK(report.is_chart);
    }
  }
}
