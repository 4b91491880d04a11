#include <catch2/catch_amalgamated.hpp>

#include <metriclab/generators.hpp>

using namespace metriclab;

TEST_CASE("generators are deterministic") {
    auto a = gen_two_intervals(8);
    auto b = gen_two_intervals(8);
    CHECK(a.space.flat() == b.space.flat());
    CHECK(a.space.labels() == b.space.labels());
    auto ra = run_bundle(a);
    auto rb = run_bundle(b);
    REQUIRE(ra.size() == rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
        CHECK(ra[i].claim == rb[i].claim);
        CHECK(ra[i].pass == rb[i].pass);
        CHECK(ra[i].details == rb[i].details);
    }

    auto p = gen_parallel_lines(1.0, 8.0, 16);
    auto q = gen_parallel_lines(1.0, 8.0, 16);
    CHECK(p.space.flat() == q.space.flat());
}

TEST_CASE("two sampled intervals across a vanishing gap") {
    auto b = gen_two_intervals(8);
    CHECK(b.space.n() == 8);
    CHECK(b.params.at("n") == "8");
    REQUIRE(b.covers.size() == 1);
    CHECK(b.covers[0].first == "two-halves");

    double cross = kInf;
    for (int i = 0; i < 4; ++i)
        for (int j = 4; j < 8; ++j) cross = std::min(cross, b.space.d(i, j));
    auto rep = lebesgue_exact(b.space, b.cover("two-halves"));
    CHECK(rep.exact == cross);
    CHECK(rep.exact <= 4.0 / 8);

    CHECK_THROWS_AS(gen_two_intervals(7), std::invalid_argument);
    CHECK_THROWS_AS(gen_two_intervals(2), std::invalid_argument);
    CHECK_THROWS_AS(b.cover("no-such-cover"), std::invalid_argument);
}

TEST_CASE("harmonic points with exactly-fitting balls") {
    auto b = gen_harmonic_in_02(3);
    REQUIRE(b.space.n() == 3);
    auto members = realize(b.space, b.cover("shrinking-balls"));
    REQUIRE(members.size() == 3);
    CHECK(members[0].points == PointSet{0});  // radius reaches exactly the next point
    CHECK(members[1].points == PointSet{1});
    CHECK(members[2].points == PointSet{2});
    CHECK_THROWS_AS(gen_harmonic_in_02(1), std::invalid_argument);
}

TEST_CASE("axis family distances follow the closed form") {
    auto b = gen_l1_family(8, 8);
    REQUIRE(b.space.n() == 65);
    CHECK(b.space.label(0) == "e1/1");
    CHECK(b.space.label(8) == "e2/1");
    CHECK(b.space.label(64) == "0");
    CHECK(b.space.d(0, 8) == 2.0);                         // distinct axes at depth 1
    CHECK(b.space.d(1, 2) == std::abs(0.5 - 1.0 / 3));     // same axis, depths 2 and 3
    CHECK(b.space.d(0, 64) == 1.0);                        // to the origin
    CHECK_THROWS_AS(gen_l1_family(0, 3), std::invalid_argument);
}

TEST_CASE("parallel line samples and their pinned witnesses") {
    auto b = gen_parallel_lines(1.0, 8.0, 16);
    CHECK(b.space.n() == 32);
    CHECK(b.params.at("gap") == "1");
    CHECK(b.params.at("halfwidth") == "8");
    CHECK(b.space.d(8, 24) == 1.0);  // the aligned cross-line pair used by the claims
    CHECK_THROWS_AS(gen_parallel_lines(0.0, 8.0, 16), std::invalid_argument);
    CHECK_THROWS_AS(gen_parallel_lines(1.0, 8.0, 1), std::invalid_argument);
}

TEST_CASE("punctured grid drops exactly the circle neighborhood") {
    auto b = gen_punctured_square_maxmetric(8);
    const double step = 4.0 / 8;
    int kept = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (detail::cheb_dist_to_unit_circle(-2.0 + i * step, -2.0 + j * step) >= step / 2) ++kept;
    CHECK(b.space.n() == kept);
    CHECK(b.space.n() < 64);
    CHECK(b.space.n() > 0);
    CHECK_THROWS_AS(gen_punctured_square_maxmetric(7), std::invalid_argument);

    SECTION("the moat splits the space at one grid step") {
        auto parts = eps_components(b.space, step);
        CHECK(parts.size() >= 2);
    }
}

TEST_CASE("adversarial bundle composes the shrinking-ball cover") {
    auto base = gen_unit_left_open(16);
    auto b = gen_adversarial_from(base.space, 0.1);
    CHECK(b.params.at("eps") == "0.1");
    CHECK(b.params.count("witness-size") == 1);
    REQUIRE(b.covers.size() == 1);
    CHECK(b.covers[0].first == "adversarial");
    CHECK_FALSE(covers_check(b.space, b.cover("adversarial")).has_value());

    auto tiny = build_space_from_points({{0.0}, {0.01}}, MetricName::l1, 0.0);
    CHECK_THROWS_AS(gen_adversarial_from(tiny, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(gen_adversarial_from(base.space, 0.0), std::invalid_argument);
}

TEST_CASE("every registered example passes its own expectations") {
    for (const auto& name : example_names()) {
        auto b = make_example(name, {});
        CAPTURE(name);
        auto results = run_bundle(b);
        REQUIRE_FALSE(results.empty());
        for (const auto& r : results) {
            CAPTURE(r.claim, r.details);
            CHECK(r.pass);
        }
    }
    CHECK_THROWS_AS(make_example("no-such-example", {}), std::invalid_argument);
}

TEST_CASE("clipped alpha grid at the default resolution") {
    auto b = make_example("adversarial-cover", {});
    auto results = run_bundle(b);
    for (const auto& r : results)
        if (r.claim == "adversarial-cover/witness-at-each-alpha") {
            CHECK(r.details == "alpha=0.09 alpha=0.05 alpha=0.02 ");
            CHECK(r.pass);
        }
}

TEST_CASE("fault injection flips exactly the targeted claim") {
    for (const auto& name : example_names()) {
        auto b = make_example(name, {});
        std::vector<std::string> claims;
        for (const auto& e : b.expectations) claims.push_back(e.claim);
        for (const auto& victim : claims) {
            CAPTURE(name, victim);
            auto results = run_bundle(b, victim);
            for (const auto& r : results) {
                CAPTURE(r.claim, r.details);
                CHECK(r.pass == (r.claim != victim));
            }
        }
    }
}

TEST_CASE("example parameters override the defaults") {
    auto b = make_example("two-intervals", {{"n", "12"}});
    CHECK(b.space.n() == 12);
    auto l = make_example("l1-axes", {{"m", "3"}, {"n", "2"}});
    CHECK(l.space.n() == 7);
}

TEST_CASE("batch presets cover every example at each scale") {
    for (const std::string scale : {"small", "medium", "large"}) {
        auto presets = verify_presets(scale);
        REQUIRE(presets.size() == example_names().size());
        for (std::size_t i = 0; i < presets.size(); ++i) CHECK(presets[i].example == example_names()[i]);
    }
    auto small = verify_presets("small");
    CHECK(small[0].params.at("n") == "32");
    auto large = verify_presets("large");
    CHECK(large[0].params.at("n") == "512");
    CHECK_THROWS_AS(verify_presets("huge"), std::invalid_argument);
}
