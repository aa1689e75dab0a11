#include "splab/lab/campaigns.hpp"
#include "splab/lab/genus_one.hpp"
#include "splab/lab/json_io.hpp"
#include "splab/lab/sampling.hpp"

#include <doctest.h>

using namespace splab;
using namespace splab::lab;

TEST_SUITE("lab") {

TEST_CASE("random_sp is deterministic and symplectic") {
  const SampleParams sp{3, 12, 2, 99, true};
  const SymplecticMap a = random_sp(sp);
  CHECK(a == random_sp(sp));
  CHECK(a.is_integral());
  CHECK(is_symplectic(a.matrix(), 3));
  SampleParams other = sp;
  other.seed = 100;
  CHECK_FALSE(a == random_sp(other));
  other.integral = false;
  CHECK(is_symplectic(random_sp(other).matrix(), 3));
  SampleParams bad = sp;
  bad.g = 0;
  CHECK_THROWS_AS(random_sp(bad), std::invalid_argument);
}

TEST_CASE("genus-one classification") {
  CHECK(classify_sl2(SymplecticMap::identity(1)) == Sl2Case::Identity);
  CHECK(classify_sl2(SymplecticMap(1, QMatrix{{1, 5}, {0, 1}})) == Sl2Case::UpperUnipotent);
  CHECK(classify_sl2(SymplecticMap(1, QMatrix{{-2, 3}, {0, Rational(-1, 2)}})) == Sl2Case::UpperA);
  CHECK(classify_sl2(SymplecticMap(1, QMatrix{{0, 1}, {-1, 0}})) == Sl2Case::CNonzeroGeneric);
  // a + d = 2, b = (a-1)(d-1)/c
  CHECK(classify_sl2(SymplecticMap(1, QMatrix{{2, Rational(-1, 2)}, {2, 0}})) == Sl2Case::CNonzeroBCritical);
  CHECK(to_string(Sl2Case::CNonzeroBCritical) == "C_NONZERO_B_CRITICAL");
  CHECK_THROWS_AS(classify_sl2(SymplecticMap::identity(2)), std::invalid_argument);

  CHECK(predicted_n_sl2(SymplecticMap(1, QMatrix{{1, 1}, {1, 2}})) == -1);
  CHECK(predicted_n_sl2(SymplecticMap(1, QMatrix{{0, 1}, {-1, 0}})) == -3);
  CHECK(predicted_s_sl2(SymplecticMap(1, QMatrix{{0, 1}, {-1, 0}})) == FourthRoot::i_pow(3L));
}

TEST_CASE("each genus-one sampler hits its case and matches the closed forms") {
  Rng rng(61);
  for (const Sl2Case c : kAllSl2Cases)
    for (int k = 0; k < 20; ++k) {
      const SymplecticMap f = sample_sl2_case(c, rng, 3);
      CHECK(classify_sl2(f) == c);
      CHECK(n_of_map(f) == predicted_n_sl2(f));
      CHECK(s_of_map(f) == predicted_s_sl2(f));
    }
}

TEST_CASE("coboundary1") {
  const SymplecticMap t(1, QMatrix{{1, 1}, {0, 1}});
  const Cochain zero = [](const SymplecticMap&) { return 0L; };
  CHECK(coboundary1(zero, t, t) == 0);
  const Cochain entry = [](const SymplecticMap& f) { return f.matrix()(0, 1).get_num().get_si(); };
  CHECK(coboundary1(entry, t, t) == 0);  // 1 + 1 - 2
  CHECK(coboundary1(k_of_map, t, t) == -1);
}

TEST_CASE("json round trip") {
  const SymplecticMap f = random_sp({2, 8, 2, 5, false});
  CHECK(matrix_from_json(matrix_to_json(f)) == f);
  CHECK(matrix_from_json(Json::parse(matrix_to_json(f).dump())) == f);
  const auto l = OrientedLagrangian(1, {Vec{Rational(2, 3), -1}});
  CHECK(lagrangian_from_json(lagrangian_to_json(l)).same_oriented(l));
  CHECK(rational_to_json(make_rational(6, -4)) == "-3/2");
  CHECK(rational_from_json(Json(3)) == 3);
  CHECK(rational_from_json(Json("10/4")) == Rational(5, 2));
  const Json e = ext_to_json(ExtElement{f, -7});
  CHECK(e.at("level") == "-7");

  CHECK_THROWS_AS(rational_from_json(Json(1.5)), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(Json("0.5")), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"g":1,"rows":[["2","0"],["0","2"]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"g":1,"rows":[["1","0"]]})")), std::invalid_argument);
  CHECK_THROWS_AS(lagrangian_from_json(Json::parse(R"({"g":1,"basis":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), std::runtime_error);
}

TEST_CASE("campaign registry") {
  CHECK(campaign_names().size() == 15);
  CHECK(is_campaign("main_theorem"));
  CHECK_FALSE(is_campaign("nope"));
  CHECK(is_conjecture_campaign("conjecture_real"));
  CHECK(is_conjecture_campaign("walker_mod4_real"));
  CHECK(is_conjecture_campaign("character_r_real"));
  CHECK_FALSE(is_conjecture_campaign("main_theorem"));
  CHECK_THROWS_AS(run_campaign("nope", {}), std::invalid_argument);
}

TEST_CASE("campaign reports are deterministic and well formed") {
  CampaignParams p{2, 40, 7, 10, 2, 10, 1};
  for (const auto name : campaign_names()) {
    CAPTURE(name);
    const Report r1 = run_campaign(name, p);
    CampaignParams p4 = p;
    p4.threads = 4;
    const Report r2 = run_campaign(name, p4);
    CHECK(r1.failures_json().dump() == r2.failures_json().dump());
    const Json j = r1.to_json();
    CHECK(j.at("campaign") == std::string(name));
    CHECK(j.at("trials").get<std::size_t>() == r1.trials);
    CHECK(j.at("failures").is_array());
    CHECK(r1.trials >= p.trials);
    if (!is_conjecture_campaign(name)) CHECK(r1.passed());
  }
}

TEST_CASE("genus1_table covers every case") {
  const Report r = run_campaign("genus1_table", CampaignParams{1, 12, 3, 12, 2, 10, 0});
  CHECK(r.passed());
  for (const Sl2Case c : kAllSl2Cases) CHECK(r.coverage.at(std::string(to_string(c))) >= 10);
  CHECK(r.trials >= 60);
}

}  // TEST_SUITE
