#include <doctest.h>

#include <cmath>
#include <random>

#include "scn/config.hpp"
#include "scn/errors.hpp"
#include "scn/model.hpp"

using namespace scn;

TEST_CASE("3GPP Case 1 preset parameters") {
  const NetworkEnvironment env = preset_3gpp_case1();
  CHECK(env.tx_power_mw == doctest::Approx(251.188643150958).epsilon(1e-12));
  CHECK(env.noise_mw == doctest::Approx(std::pow(10.0, -9.5)).epsilon(1e-12));
  REQUIRE(env.model.segments.size() == 2);
  CHECK(env.model.segments[0].d_hi == 0.3);
  CHECK(env.model.segments[1].d_lo == 0.3);

  // The field-test constants 10^-4.11 / 10^-3.29 are referenced to r = 1 m;
  // evaluating the gain laws there recovers them.
  CHECK(path_gain(env.model, 1e-3, true) ==
        doctest::Approx(std::pow(10.0, -4.11)).epsilon(1e-12));
  CHECK(path_gain(env.model, 1e-3, false) ==
        doctest::Approx(std::pow(10.0, -3.29)).epsilon(1e-12));

  // At the 1 km reference the gain equals the segment's A constant.
  CHECK(path_gain(env.model, 1.0, false) == env.model.segments[1].a_nlos);
  CHECK(path_gain(env.model, 1.0, true) == env.model.segments[1].a_los);
}

TEST_CASE("preset LoS probability follows the linear law") {
  const NetworkEnvironment env = preset_3gpp_case1();
  CHECK(los_probability(env.model, 0.3) == 0.0);
  CHECK(los_probability(env.model, 0.15) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(los_probability(env.model, 1.0) == 0.0);
  CHECK(los_probability(env.model, 0.03) == doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("single-slope preset") {
  const NetworkEnvironment env =
      preset_single_slope(3.75, std::pow(10.0, -14.54), 251.19, 3.16e-10);
  CHECK(env.model.segments.size() == 1);
  CHECK(path_gain(env.model, 1.0, false) ==
        doctest::Approx(std::pow(10.0, -14.54)).epsilon(1e-12));
  for (double r : {0.01, 0.2, 0.5, 5.0}) {
    CHECK(los_probability(env.model, r) == 0.0);
    // LoS and NLoS branches coincide by construction.
    CHECK(path_gain(env.model, r, true) == path_gain(env.model, r, false));
  }
  CHECK_THROWS_AS(preset_single_slope(2.0, 1e-14, 251.19, 3.16e-10), ParameterError);
  CHECK_THROWS_AS(preset_single_slope(1.5, 1e-14, 251.19, 3.16e-10), ParameterError);
}

TEST_CASE("domain errors on non-positive distances") {
  const NetworkEnvironment env = preset_3gpp_case1();
  CHECK_THROWS_AS(path_gain(env.model, 0.0, true), DomainError);
  CHECK_THROWS_AS(path_gain(env.model, -0.5, false), DomainError);
  CHECK_THROWS_AS(los_probability(env.model, 0.0), DomainError);
}

TEST_CASE("segment boundary convention: r belongs to (d_lo, d_hi]") {
  const NetworkEnvironment env = preset_3gpp_case1();
  CHECK(env.model.segment_index(0.3) == 0);
  CHECK(env.model.segment_index(0.3000001) == 1);
  CHECK(env.model.segment_index(1e-9) == 0);
}

TEST_CASE("tiling property over random models and radii") {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    // Random 1-4 segment model with random boundaries and laws.
    const int n = 1 + static_cast<int>(u(gen) * 4.0);
    std::vector<double> bounds;
    for (int i = 0; i + 1 < n; ++i) bounds.push_back(0.01 + 2.0 * u(gen));
    std::sort(bounds.begin(), bounds.end());
    PathLossModel model;
    double lo = 0.0;
    for (int i = 0; i < n; ++i) {
      const double hi = (i + 1 < n) ? bounds[i]
                                    : std::numeric_limits<double>::infinity();
      PathLossSegment seg{lo,
                          hi,
                          std::pow(10.0, -8.0 - 4.0 * u(gen)),
                          2.05 + u(gen),
                          std::pow(10.0, -10.0 - 6.0 * u(gen)),
                          2.5 + 2.0 * u(gen),
                          ConstantLos{u(gen)}};
      model.segments.push_back(seg);
      lo = hi;
    }
    validate(model);

    for (int k = 0; k < 40; ++k) {
      const double r = std::pow(10.0, -3.0 + 4.5 * u(gen));
      // Exactly one segment contains r.
      int containing = 0;
      for (const auto& seg : model.segments) {
        if (r > seg.d_lo && r <= seg.d_hi) ++containing;
      }
      CHECK(containing == 1);
      CHECK(model.segments[model.segment_index(r)].d_lo < r);

      // Gain decreases within a segment and LoS probability stays in [0,1].
      const auto& seg = model.segments[model.segment_index(r)];
      const double r2 = std::min(r * 1.1, seg.d_hi);
      if (r2 > r && std::isfinite(r2)) {
        CHECK(path_gain(model, r2, true) < path_gain(model, r, true));
        CHECK(path_gain(model, r2, false) < path_gain(model, r, false));
      }
      const double p = los_probability(model, r);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
    }
  }
}

TEST_CASE("model validation rejects broken tilings") {
  PathLossModel gapped;
  gapped.segments = {
      PathLossSegment{0.0, 0.3, 1e-10, 2.1, 1e-14, 3.7, ConstantLos{0.0}},
      PathLossSegment{0.4, std::numeric_limits<double>::infinity(), 1e-10, 2.1,
                      1e-14, 3.7, ConstantLos{0.0}}};
  CHECK_THROWS_AS(validate(gapped), ParameterError);

  PathLossModel bounded;
  bounded.segments = {
      PathLossSegment{0.0, 5.0, 1e-10, 2.1, 1e-14, 3.7, ConstantLos{0.0}}};
  CHECK_THROWS_AS(validate(bounded), ParameterError);

  CHECK_THROWS_AS(validate(PathLossModel{}), ParameterError);
}

TEST_CASE("config defaults mirror the 3GPP preset") {
  const ModelConfig cfg;
  const NetworkEnvironment from_cfg = to_environment(cfg);
  const NetworkEnvironment preset = preset_3gpp_case1();
  CHECK(from_cfg.tx_power_mw == preset.tx_power_mw);
  CHECK(from_cfg.noise_mw == preset.noise_mw);
  REQUIRE(from_cfg.model.segments.size() == 2);
  CHECK(from_cfg.model.segments[0].a_los == preset.model.segments[0].a_los);
  CHECK(from_cfg.model.segments[0].a_nlos == preset.model.segments[0].a_nlos);
  CHECK(from_cfg.model.segments[0].alpha_los == preset.model.segments[0].alpha_los);
  CHECK(from_cfg.model.segments[0].alpha_nlos == preset.model.segments[0].alpha_nlos);
}

TEST_CASE("config round-trip is bit-exact") {
  ModelConfig cfg;
  cfg.d1_km = 0.3;
  cfg.alpha_los = 2.09;
  cfg.alpha_nlos = 3.75;
  cfg.a_los_db = -41.1;
  cfg.a_nlos_db = -32.9;
  cfg.tx_power_dbm = 24.0;
  cfg.noise_dbm = -95.0;

  const ModelConfig reparsed = parse_config(serialize_config(cfg));
  CHECK(reparsed.model == cfg.model);
  CHECK(reparsed.d1_km == cfg.d1_km);
  CHECK(reparsed.alpha_los == cfg.alpha_los);
  CHECK(reparsed.alpha_nlos == cfg.alpha_nlos);
  CHECK(reparsed.a_los_db == cfg.a_los_db);
  CHECK(reparsed.a_nlos_db == cfg.a_nlos_db);
  CHECK(reparsed.tx_power_dbm == cfg.tx_power_dbm);
  CHECK(reparsed.noise_dbm == cfg.noise_dbm);

  // And the rebuilt environments match bit for bit.
  const NetworkEnvironment a = to_environment(cfg);
  const NetworkEnvironment b = to_environment(reparsed);
  CHECK(a.tx_power_mw == b.tx_power_mw);
  CHECK(a.noise_mw == b.noise_mw);
  CHECK(a.model.segments[0].a_los == b.model.segments[0].a_los);
  CHECK(a.model.segments[0].a_nlos == b.model.segments[0].a_nlos);

  // Awkward doubles survive the round trip too.
  cfg.d1_km = 0.1 + 0.2;
  cfg.a_los_db = -41.1000000000001;
  const ModelConfig reparsed2 = parse_config(serialize_config(cfg));
  CHECK(reparsed2.d1_km == cfg.d1_km);
  CHECK(reparsed2.a_los_db == cfg.a_los_db);
}

TEST_CASE("config parser reports line numbers") {
  CHECK_THROWS_WITH_AS(parse_config("model=3gpp_case1\nbogus line\n"),
                       doctest::Contains("line 2"), UsageError);
  CHECK_THROWS_WITH_AS(parse_config("unknown_key=3\n"),
                       doctest::Contains("line 1"), UsageError);
  CHECK_THROWS_WITH_AS(parse_config("d1_km=abc\n"), doctest::Contains("line 1"),
                       UsageError);
  CHECK_THROWS_WITH_AS(parse_config("d1_km=0.3\nd1_km=0.4\n"),
                       doctest::Contains("line 2"), UsageError);
  CHECK_THROWS_WITH_AS(parse_config("model=other\n"), doctest::Contains("line 1"),
                       UsageError);
}

TEST_CASE("config accepts comments and blank lines") {
  const ModelConfig cfg = parse_config(
      "# pico cell setup\n\nmodel=single_slope\nalpha_nlos=3.75\na_nlos_db=-32.9\n");
  CHECK(cfg.model == "single_slope");
  const NetworkEnvironment env = to_environment(cfg);
  CHECK(env.model.segments.size() == 1);
}
