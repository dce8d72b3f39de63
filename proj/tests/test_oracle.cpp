#include <catch_amalgamated.hpp>

#include <random>

#include "qsched/anneal.hpp"
#include "qsched/errors.hpp"
#include "qsched/oracle.hpp"
#include "support.hpp"

using namespace qsched;
using qsched::test::naive_energy;
using qsched::test::random_model;

TEST_CASE("brute force on small models") {
  SECTION("unique minimum") {
    const CompiledModel m(2, {{0, 1.0}, {1, 1.0}}, {{{0, 1}, 1.0}}, 0.0);
    const auto r = oracle::brute_force_min(m);
    CHECK(r.min_energy == 0.0);
    CHECK(r.argmins == std::vector<Assignment>{{0, 0}});
    CHECK_FALSE(r.truncated);
  }
  SECTION("one-hot minima in lexicographic order") {
    auto reg = make_registry();
    Expr sum = binary(reg, "a") + binary(reg, "b") + binary(reg, "c");
    const auto r = oracle::brute_force_min(compile(square(sum - 1.0)));
    CHECK(r.min_energy == 0.0);
    CHECK(r.argmins == std::vector<Assignment>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  }
  SECTION("constant model") {
    const auto r = oracle::brute_force_min(CompiledModel(0, {}, {}, 7.0));
    CHECK(r.min_energy == 7.0);
    CHECK(r.argmins == std::vector<Assignment>{Assignment{}});
  }
  SECTION("argmin cap") {
    const auto r = oracle::brute_force_min(CompiledModel(11, {}, {}, 0.0));
    CHECK(r.argmins.size() == oracle::kArgminCap);
    CHECK(r.truncated);
  }
  SECTION("size limit") {
    CHECK_THROWS_AS(oracle::brute_force_min(CompiledModel(23, {}, {}, 0.0)), SizeError);
    CHECK_NOTHROW(oracle::brute_force_min(CompiledModel(3, {}, {}, 0.0), 3));
    CHECK_THROWS_AS(oracle::brute_force_min(CompiledModel(4, {}, {}, 0.0), 3), SizeError);
  }
}

TEST_CASE("brute force agrees with a naive scan") {
  std::mt19937_64 rng(23);
  for (std::size_t n = 1; n <= 14; ++n) {
    const CompiledModel m = random_model(rng, n, 0.5);
    double want = std::numeric_limits<double>::infinity();
    test::for_each_assignment(n, [&](const Assignment& a) { want = std::min(want, naive_energy(m, a)); });
    const auto r = oracle::brute_force_min(m);
    CHECK(r.min_energy == Catch::Approx(want).margin(1e-9));
    for (const Assignment& a : r.argmins) CHECK(naive_energy(m, a) == Catch::Approx(want).margin(1e-9));
  }
}

TEST_CASE("projected minima") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 8;
    const CompiledModel m = random_model(rng, n, 0.5);
    const std::vector<VarIndex> kept{5, 1};
    const auto got = oracle::projected_minima(m, kept);
    REQUIRE(got.size() == 4);
    std::vector<double> want(4, std::numeric_limits<double>::infinity());
    test::for_each_assignment(n, [&](const Assignment& a) {
      const std::size_t key = (a[5] << 1) | a[1];
      want[key] = std::min(want[key], naive_energy(m, a));
    });
    for (std::size_t k = 0; k < 4; ++k) CHECK(got[k] == Catch::Approx(want[k]).margin(1e-9));
  }
}

TEST_CASE("sampler never beats the exact minimum") {
  std::mt19937_64 rng(31);
  for (std::size_t n = 2; n <= 16; n += 2) {
    const CompiledModel m = random_model(rng, n, 0.5);
    const double exact = oracle::brute_force_min(m).min_energy;
    anneal::AnnealParams p;
    p.num_reads = 5;
    p.num_sweeps = 500;
    const double found = anneal::best(anneal::sample(m, p)).energy;
    CHECK(found >= exact - 1e-9);
    CHECK(found == Catch::Approx(exact).margin(1e-9));
  }
}

TEST_CASE("feasible schedule enumeration") {
  nsp::Instance two;
  two.nurses = 2;
  two.graveyard_size = 2;
  two.graveyard_per_day = 1;
  two.max_consecutive = 2;
  two.days = 2;

  SECTION("one nurse covers both days") {
    const auto all = oracle::enumerate_feasible(two);
    REQUIRE(all.size() == 2);
    CHECK(all[0] == nsp::Schedule(2, 2, {0, 0, 1, 1}));
    CHECK(all[1] == nsp::Schedule(2, 2, {1, 1, 0, 0}));
  }
  SECTION("invalid instance") {
    nsp::Instance bad = two;
    bad.graveyard_per_day = 2;
    CHECK_THROWS_AS(oracle::enumerate_feasible(bad), InstanceError);
  }
  SECTION("single day cannot host a run of two") {
    nsp::Instance one = two;
    one.days = 1;
    CHECK(oracle::enumerate_feasible(one).empty());
  }
  SECTION("cell limit") {
    nsp::Instance big = two;
    big.days = 11;
    CHECK_THROWS_AS(oracle::enumerate_feasible(big), SizeError);
  }
}
