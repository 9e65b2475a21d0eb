#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "harmonic/lattice.hpp"

using namespace harmonic;
using lattice::InitialCondition;

TEST_CASE("rule evaluation matches the closed forms") {
  const auto sign = InitialCondition::sign();
  CHECK(lattice::evaluate_ic(sign, 0) == 0.0);
  CHECK(lattice::evaluate_ic(sign, 7) == 1.0);
  CHECK(lattice::evaluate_ic(sign, -3) == -1.0);

  const auto spike = InitialCondition::spike(3.0);
  CHECK(lattice::evaluate_ic(spike, 0) == 3.0);
  CHECK(lattice::evaluate_ic(spike, 5) == 1.0);
  CHECK(lattice::evaluate_ic(spike, -2) == 1.0);

  const auto alt = InitialCondition::alternating();
  CHECK(lattice::evaluate_ic(alt, 4) == 1.0);
  CHECK(lattice::evaluate_ic(alt, -5) == -1.0);

  const auto ld = InitialCondition::log_decay();
  CHECK(lattice::evaluate_ic(ld, 0) == 0.0);
  CHECK(lattice::evaluate_ic(ld, 1) == 0.0);
  CHECK(lattice::evaluate_ic(ld, -1) == 0.0);
  const double l7 = std::log(7.0);
  CHECK(lattice::evaluate_ic(ld, 7) ==
        Catch::Approx(std::sin(std::log(l7)) / (l7 * l7)).epsilon(1e-15));
  CHECK(lattice::evaluate_ic(ld, -7) == lattice::evaluate_ic(ld, 7));

  CHECK(lattice::evaluate_ic(InitialCondition::constant(2.5), 123) == 2.5);
}

TEST_CASE("every rule is bounded on its window") {
  for (const auto& ic :
       {InitialCondition::sign(), InitialCondition::spike(-4.0),
        InitialCondition::alternating(), InitialCondition::log_decay(256),
        InitialCondition::constant(7.0),
        InitialCondition::sampled([](double x) { return std::exp(-x * x / 100.0); })}) {
    double sup = 0.0;
    for (long k = -ic.window; k <= ic.window; ++k) {
      const double v = lattice::evaluate_ic(ic, k);
      REQUIRE(std::isfinite(v));
      sup = std::max(sup, std::abs(v));
    }
    CHECK(sup < 1e3);
  }
}

TEST_CASE("discrete Laplacian of sign has support {-1, 0, 1}") {
  const auto q = lattice::sample(InitialCondition::sign(), -3, 3);
  const auto qd = lattice::discrete_laplacian(q);
  REQUIRE(qd.lo() == -2);
  REQUIRE(qd.hi() == 2);
  CHECK(qd.at(-2) == 0.0);
  CHECK(qd.at(-1) == -1.0);
  CHECK(qd.at(0) == 0.0);
  CHECK(qd.at(1) == 1.0);
  CHECK(qd.at(2) == 0.0);
}

TEST_CASE("discrete Laplacian: constants vanish, alternating is -4q") {
  const auto c = lattice::sample(InitialCondition::constant(3.25), -5, 5);
  for (double v : lattice::discrete_laplacian(c).values) CHECK(v == 0.0);

  const auto a = lattice::sample(InitialCondition::alternating(), -6, 6);
  const auto ad = lattice::discrete_laplacian(a);
  double sup = 0.0;
  for (long k = ad.lo(); k <= ad.hi(); ++k) {
    CHECK(ad.at(k) == 4.0 * ((k % 2 == 0) ? 1.0 : -1.0));
    sup = std::max(sup, std::abs(ad.at(k)));
  }
  CHECK(sup == 4.0);  // no decay
}

TEST_CASE("first difference of sign and alternating") {
  const auto q = lattice::sample(InitialCondition::sign(), -2, 2);
  const auto d = lattice::first_difference(q);
  REQUIRE(d.lo() == -1);
  REQUIRE(d.hi() == 2);
  CHECK(d.at(-1) == 0.0);
  CHECK(d.at(0) == 1.0);
  CHECK(d.at(1) == 1.0);
  CHECK(d.at(2) == 0.0);

  const auto a = lattice::sample(InitialCondition::alternating(), 0, 3);
  const auto da = lattice::first_difference(a);
  CHECK(da.at(1) == -2.0);
  CHECK(da.at(2) == 2.0);
  CHECK(da.at(3) == -2.0);
}

TEST_CASE("q^Delta = -(delta_{k+1} - delta_k) exactly") {
  std::mt19937 rng(20260809);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int rep = 0; rep < 50; ++rep) {
    lattice::LatticeSlice q;
    q.offset = -12;
    for (int i = 0; i < 25; ++i) q.values.push_back(u(rng));
    const auto qd = lattice::discrete_laplacian(q);
    const auto d = lattice::first_difference(q);
    for (long k = qd.lo(); k <= qd.hi(); ++k)
      CHECK(qd.at(k) ==
            Catch::Approx(-(d.at(k + 1) - d.at(k))).epsilon(1e-15).margin(1e-15));
  }
}

TEST_CASE("discrete Laplacian is linear") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int rep = 0; rep < 25; ++rep) {
    lattice::LatticeSlice q, r;
    q.offset = r.offset = -8;
    for (int i = 0; i < 17; ++i) {
      q.values.push_back(u(rng));
      r.values.push_back(u(rng));
    }
    const double alpha = u(rng), beta = u(rng);
    lattice::LatticeSlice mix;
    mix.offset = -8;
    for (int i = 0; i < 17; ++i)
      mix.values.push_back(alpha * q.values[i] + beta * r.values[i]);
    const auto lhs = lattice::discrete_laplacian(mix);
    const auto lq = lattice::discrete_laplacian(q);
    const auto lr = lattice::discrete_laplacian(r);
    for (long k = lhs.lo(); k <= lhs.hi(); ++k)
      CHECK(lhs.at(k) ==
            Catch::Approx(alpha * lq.at(k) + beta * lr.at(k)).margin(1e-14));
  }
}

TEST_CASE("window too small raises") {
  lattice::LatticeSlice tiny;
  tiny.offset = 0;
  tiny.values = {1.0, 2.0};
  CHECK_THROWS_AS(lattice::discrete_laplacian(tiny), std::invalid_argument);
  tiny.values = {1.0};
  CHECK_THROWS_AS(lattice::first_difference(tiny), std::invalid_argument);
}

TEST_CASE("initial conditions round-trip through JSON") {
  for (const std::string spec : {"sign", "alternating", "logdecay", "spike:3",
                                 "constant:2", "sampled:gaussian"}) {
    const auto ic = lattice::parse_ic_spec(spec);
    const auto j = lattice::to_json(ic);
    const auto back = lattice::ic_from_json(j);
    CHECK(back.rule == ic.rule);
    CHECK(back.window == ic.window);
    for (long k : {-5L, -1L, 0L, 1L, 9L})
      CHECK(lattice::evaluate_ic(back, k) == lattice::evaluate_ic(ic, k));
  }
  const auto custom = lattice::parse_ic_spec(R"({"rule":"custom","params":{"table":
      {"-1":0.5,"2":-3.0}},"window":16})");
  CHECK(lattice::evaluate_ic(custom, -1) == 0.5);
  CHECK(lattice::evaluate_ic(custom, 2) == -3.0);
  CHECK(lattice::evaluate_ic(custom, 3) == 0.0);
  const auto back = lattice::ic_from_json(lattice::to_json(custom));
  CHECK(lattice::evaluate_ic(back, 2) == -3.0);

  // a top-level table is accepted too
  const auto flat = lattice::parse_ic_spec(R"({"rule":"custom","table":{"4":7.0}})");
  CHECK(lattice::evaluate_ic(flat, 4) == 7.0);
  CHECK(lattice::evaluate_ic(flat, 0) == 0.0);

  CHECK_THROWS_AS(lattice::parse_ic_spec("nonsense"), std::invalid_argument);
}
