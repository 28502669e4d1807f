#include "hpa/bench.hpp"
#include "hpa/oracle.hpp"
#include "hpa/reductions.hpp"
#include "hpa/solver.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace hpa;
using hpa::test::iv;

TEST_CASE("NormKind parsing") {
  CHECK(NormKind::parse("l1").tag == NormKind::Tag::L1);
  CHECK(NormKind::parse("linf").tag == NormKind::Tag::Linf);
  auto p = NormKind::parse("lp:3/2");
  CHECK(p.tag == NormKind::Tag::Lp);
  CHECK(p.num == 3);
  CHECK(p.den == 2);
  CHECK(NormKind::parse("lp:2").integral_p());
  CHECK_THROWS_AS(NormKind::parse("lp:1/2"), std::invalid_argument);
  CHECK_THROWS_AS(NormKind::parse("lp:x"), std::invalid_argument);
  CHECK_THROWS_AS(NormKind::parse("l2"), std::invalid_argument);
}

TEST_CASE("exact_solve examples") {
  auto one = exact_solve(test::make_instance(1, {{{1}, 0}}), NormKind::l1());
  CHECK(one.norm1 == 1);
  CHECK(abs(one.y[0]) == 1);

  auto tight = exact_solve(tight_family(1, 2), NormKind::l1());
  CHECK(tight.norm1 == 3);

  auto k3 = exact_solve(encode_coloring(Graph::complete(3)), NormKind::linf());
  CHECK(linf_norm(k3.y) == 2);
}

TEST_CASE("exact_solve matches box enumeration and dominates the solver") {
  for (std::uint64_t s = 0; s < 150; ++s) {
    auto inst = random_instance_in(1, 3, 0, 8, 3, s % 2 == 0, 0xabc + s);
    const auto opt = exact_solve(inst, NormKind::l1());
    CHECK(test::feasible_wide(inst, opt.y));
    const long cap = static_cast<long>((inst.m() + inst.n()) / 2);
    CHECK(opt.norm1 == test::brute_min_l1(inst, cap));
    CHECK(opt.norm1 <= solve(inst).norm1);
  }
}

TEST_CASE("Linf and Lp optima") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    auto inst = random_instance_in(1, 3, 0, 6, 3, false, 0x77 + s);
    const long cap = static_cast<long>((inst.m() + inst.n()) / 2);
    long best_inf = -1, best_sq = -1;
    test::for_each_box(inst.n(), cap, [&](const std::vector<long>& x) {
      if (!test::feasible_wide(inst, test::to_iv(x))) return;
      long inf = 0, sq = 0;
      for (long v : x) {
        inf = std::max(inf, v < 0 ? -v : v);
        sq += v * v;
      }
      if (best_inf < 0 || inf < best_inf) best_inf = inf;
      if (best_sq < 0 || sq < best_sq) best_sq = sq;
    });
    CHECK(linf_norm(exact_solve(inst, NormKind::linf()).y) == best_inf);
    CHECK(lp_power_sum(exact_solve(inst, NormKind::lp(2)).y, 2) == best_sq);
    // p = 1 through the Lp path agrees with the L1 shells.
    CHECK(exact_solve(inst, NormKind::lp(1)).norm1 == exact_solve(inst, NormKind::l1()).norm1);
  }
}

TEST_CASE("vertex cover instances: the optimum value is the same for every p") {
  for (const auto& g : {Graph::complete(2), Graph::path(3), Graph::complete(3), Graph::cycle(5), Graph::complete(4)}) {
    auto inst = encode_vertex_cover(g);
    const auto cover = min_vertex_cover_brute(g);
    CHECK(exact_solve(inst, NormKind::l1()).norm1 == static_cast<long>(cover));
    CHECK(lp_power_sum(exact_solve(inst, NormKind::lp(2)).y, 2) == static_cast<long>(cover));
    CHECK(lp_power_sum(exact_solve(inst, NormKind::lp(3)).y, 3) == static_cast<long>(cover));
    // Non-integral p: the optimum is a 0/1 vector of the same support size.
    auto y = exact_solve(inst, NormKind::lp(3, 2)).y;
    CHECK(decode_vertex_cover(g, y).size() == cover);
    CHECK(linf_norm(y) == 1);
  }
}

TEST_CASE("exact_lex_solve examples") {
  CHECK(exact_lex_solve(test::make_instance(2, {{{1, 1}, 1}, {{1, 0}, 0}})).y == iv({1, 1}));
  CHECK(exact_lex_solve(AvoidanceInstance(2, {})).y == iv({0, 0}));
  CHECK(exact_lex_solve(tight_family(2, 1)).y == iv({2, 2}));
}

TEST_CASE("budget exhaustion") {
  CHECK_THROWS_AS(exact_solve(tight_family(3, 3), NormKind::l1(), 10), BudgetExceeded);
  CHECK_THROWS_AS(exact_lex_solve(tight_family(3, 3), 10), BudgetExceeded);
}

TEST_CASE("count_l1_ball closed form") {
  CHECK(count_l1_ball(4, 0) == 1);
  CHECK(count_l1_ball(2, 1) == 5);
  for (std::size_t r = 0; r < 10; ++r) CHECK(count_l1_ball(1, r) == static_cast<long>(2 * r + 1));
  for (std::size_t n = 1; n <= 4; ++n) {
    for (long r = 0; r <= 6; ++r) {
      CHECK(count_l1_ball(n, static_cast<std::size_t>(r)) == static_cast<unsigned long>(test::enumerate_ball(n, r)));
    }
  }
}
