#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "banditdp/strategy.hpp"
#include "support/oracles.hpp"

using namespace banditdp;

namespace {

Dataset make(const std::vector<std::pair<std::string, double>>& mods) {
    Dataset d;
    for (const auto& [id, size] : mods) d.modules.push_back({id, size, false});
    return d;
}

Arm arm_of(const std::string& name, const Dataset& d, const std::set<std::string>& positives) {
    Arm a{name, {}};
    for (const auto& m : d.modules) a.predictions[m.id] = positives.contains(m.id);
    return a;
}

}  // namespace

TEST_CASE("PF tests flagged modules first, largest first") {
    auto d = make({{"t44", 1964}, {"t10", 500}, {"t48", 2742}, {"t49", 1523}, {"t11", 3000}});
    auto a = arm_of("A", d, {"t48", "t49"});
    auto b = arm_of("B", d, {"t44"});
    const auto order = order_modules(d, {a, b}, Strategy::PositiveFirst);
    CHECK(order == std::vector<std::string>{"t48", "t44", "t49", "t11", "t10"});
}

TEST_CASE("SF and LF sort by size") {
    auto d = make({{"t21", 3300}, {"t31", 180}, {"t29", 2900}, {"t35", 200}});
    auto a = arm_of("A", d, {});
    CHECK(order_modules(d, {a}, Strategy::SmallestFirst) == std::vector<std::string>{"t31", "t35", "t29", "t21"});
    CHECK(order_modules(d, {a}, Strategy::LargestFirst) == std::vector<std::string>{"t21", "t29", "t35", "t31"});
}

TEST_CASE("single module") {
    auto d = make({{"only", 7}});
    auto a = arm_of("A", d, {"only"});
    for (auto s : {Strategy::SmallestFirst, Strategy::LargestFirst, Strategy::PositiveFirst})
        CHECK(order_modules(d, {a}, s) == std::vector<std::string>{"only"});
}

TEST_CASE("size ties break by module id") {
    auto d = make({{"b", 10}, {"a", 10}, {"c", 5}});
    auto a = arm_of("A", d, {});
    CHECK(order_modules(d, {a}, Strategy::SmallestFirst) == std::vector<std::string>{"c", "a", "b"});
    CHECK(order_modules(d, {a}, Strategy::LargestFirst) == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("coverage violations are rejected") {
    auto d = make({{"x", 1}, {"y", 2}});
    Arm partial{"A", {{"x", true}}};
    CHECK_THROWS_AS(order_modules(d, {partial}, Strategy::SmallestFirst), ValidationError);
    Arm extra{"B", {{"x", true}, {"y", false}, {"z", true}}};
    CHECK_THROWS_AS(order_modules(d, {extra}, Strategy::PositiveFirst), ValidationError);
    CHECK_THROWS_AS(order_modules(Dataset{}, {}, Strategy::PositiveFirst), ValidationError);
}

TEST_CASE("random datasets: permutation and sort predicate by brute force") {
    std::mt19937_64 gen(21);
    for (int trial = 0; trial < 40; ++trial) {
        Dataset d;
        for (int i = 0; i < 50; ++i)
            d.modules.push_back({"m" + std::to_string(i), static_cast<double>(1 + gen() % 30), false});
        std::vector<Arm> arms;
        for (int k = 0; k < 3; ++k) {
            Arm a{"arm" + std::to_string(k), {}};
            for (const auto& m : d.modules) a.predictions[m.id] = gen() % 5 == 0;
            arms.push_back(a);
        }
        std::map<std::string, double> size;
        std::map<std::string, bool> flagged;
        for (const auto& m : d.modules) {
            size[m.id] = m.size;
            flagged[m.id] = std::any_of(arms.begin(), arms.end(), [&](const Arm& a) { return a.predictions.at(m.id); });
        }

        const auto sf = order_modules(d, arms, Strategy::SmallestFirst);
        const auto lf = order_modules(d, arms, Strategy::LargestFirst);
        const auto pf = order_modules(d, arms, Strategy::PositiveFirst);

        for (const auto* order : {&sf, &lf, &pf}) {
            std::set<std::string> ids(order->begin(), order->end());
            CHECK(order->size() == d.size());
            CHECK(ids.size() == d.size());
        }

        auto asc = [&](const std::string& a, const std::string& b) {
            return size[a] < size[b] || (size[a] == size[b] && a < b);
        };
        auto desc = [&](const std::string& a, const std::string& b) {
            return size[a] > size[b] || (size[a] == size[b] && a < b);
        };
        auto pf_less = [&](const std::string& a, const std::string& b) {
            if (flagged[a] != flagged[b]) return flagged[a];
            return desc(a, b);
        };
        CHECK(oracle::pairwise_sorted(sf, asc));
        CHECK(oracle::pairwise_sorted(lf, desc));
        CHECK(oracle::pairwise_sorted(pf, pf_less));

        // every flagged module precedes every unflagged one
        bool seen_unflagged = false;
        for (const auto& id : pf) {
            if (!flagged[id]) seen_unflagged = true;
            else CHECK_FALSE(seen_unflagged);
        }
    }
}

TEST_CASE("SF is the reverse of LF when sizes are distinct") {
    std::mt19937_64 gen(22);
    Dataset d;
    std::vector<double> sizes(60);
    std::iota(sizes.begin(), sizes.end(), 1.0);
    std::shuffle(sizes.begin(), sizes.end(), gen);
    for (int i = 0; i < 60; ++i) d.modules.push_back({"m" + std::to_string(i), sizes[i], false});
    Arm a{"A", {}};
    for (const auto& m : d.modules) a.predictions[m.id] = false;
    auto sf = order_modules(d, {a}, Strategy::SmallestFirst);
    auto lf = order_modules(d, {a}, Strategy::LargestFirst);
    std::reverse(lf.begin(), lf.end());
    CHECK(sf == lf);
}
