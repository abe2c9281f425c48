#include <doctest.h>

#include "banditdp/outcome.hpp"

using namespace banditdp;

TEST_CASE("effort worked values") {
    CHECK(effort(1000, true, 0.01, 0.1) == 10.0);
    CHECK(effort(1000, false, 0.01, 0.25) == 2.5);
    CHECK(effort(3300, true, 0.01, 0.1) == 33.0);
    CHECK(effort(2900, true, 0.01, 0.1) == 29.0);
    CHECK(effort(180, true, 0.01, 0.1) + effort(200, true, 0.01, 0.1) == doctest::Approx(3.8).epsilon(1e-15));
    CHECK(effort(742, true, 1.0, 0.1) == 742.0);
}

TEST_CASE("effort ratio between positive and negative prediction") {
    for (double s : {1.0, 37.0, 1000.0})
        for (double c : {0.01, 1.0, 3.5})
            for (double r : {0.1, 0.25, 0.5, 1.0})
                CHECK(effort(s, true, c, r) / effort(s, false, c, r) == doctest::Approx(1.0 / r).epsilon(1e-12));
}

TEST_CASE("effort rejects bad arguments") {
    CHECK_THROWS_AS(effort(0, true, 1, 0.5), ValidationError);
    CHECK_THROWS_AS(effort(-5, true, 1, 0.5), ValidationError);
    CHECK_THROWS_AS(effort(10, true, 0, 0.5), ValidationError);
    CHECK_THROWS_AS(effort(10, false, 1, 0.0), ValidationError);
    CHECK_THROWS_AS(effort(10, false, 1, 1.5), ValidationError);
}

TEST_CASE("clean modules never report a defect") {
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        CHECK(observe_outcome(false, i % 2, 0.1, 0.2, rng) == ObservedOutcome{false, OverlookKind::None});
    }
}

TEST_CASE("Type 2 disabled means positive predictions always find the defect") {
    Rng rng(2);
    for (int i = 0; i < 1000; ++i)
        CHECK(observe_outcome(true, true, 0.1, 0.0, rng) == ObservedOutcome{true, OverlookKind::None});
}

TEST_CASE("full effort ratio disables Type 1") {
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        const auto o = observe_outcome(true, false, 1.0, 0.5, rng);
        CHECK(o.overlook != OverlookKind::Type1);
        CHECK(o.observed_defective);
    }
}

TEST_CASE("overlooking rates match their probabilities") {
    for (double ratio : {0.1, 0.25, 0.5}) {
        Rng rng(100 + static_cast<std::uint64_t>(ratio * 100));
        int missed = 0;
        const int trials = 10000;
        for (int i = 0; i < trials; ++i) {
            const auto o = observe_outcome(true, false, ratio, 0.2, rng);
            if (!o.observed_defective) {
                ++missed;
                CHECK(o.overlook == OverlookKind::Type1);
            }
        }
        CHECK(std::abs(missed / double(trials) - (1.0 - ratio)) <= 0.02);
    }
    Rng rng(7);
    int missed = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto o = observe_outcome(true, true, 0.25, 0.2, rng);
        if (!o.observed_defective) {
            ++missed;
            CHECK(o.overlook == OverlookKind::Type2);
        }
    }
    CHECK(std::abs(missed / 10000.0 - 0.2) <= 0.02);
}

TEST_CASE("observed never exceeds truth and seeds reproduce") {
    Rng a(9), b(9);
    for (int i = 0; i < 5000; ++i) {
        const bool truth = i % 3 == 0;
        const bool pred = i % 2 == 0;
        const auto oa = observe_outcome(truth, pred, 0.25, 0.2, a);
        const auto ob = observe_outcome(truth, pred, 0.25, 0.2, b);
        CHECK(oa == ob);
        CHECK(oa.observed_defective <= truth);
        if (oa.overlook != OverlookKind::None) {
            CHECK(truth);
            CHECK_FALSE(oa.observed_defective);
        }
    }
}
