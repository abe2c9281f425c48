#include <doctest.h>

#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "banditdp/io.hpp"
#include "support/tempdir.hpp"

namespace {

const std::string kCli = BANDITDP_CLI;
const std::string kFixtures = BANDITDP_FIXTURES;

int run(const std::string& args, const std::string& log = "/dev/null") {
    const int status = std::system((kCli + " " + args + " > " + log + " 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string base_flags() {
    return "--dataset " + kFixtures + "/modules.csv --arms " + kFixtures + "/arms.csv ";
}

}  // namespace

TEST_CASE("simulate writes its files and prints the metrics") {
    TempDir dir;
    const auto log = (dir / "log.txt").string();
    REQUIRE(run("simulate " + base_flags() + "--policy egreedy --epsilon 0.1 --strategy pf --effort-ratio 0.1 "
                "--seed 5 --out " + (dir / "out").string(), log) == 0);
    CHECK(std::filesystem::exists(dir / "out" / "run.csv"));
    CHECK(std::filesystem::exists(dir / "out" / "steps.csv"));
    CHECK(std::filesystem::exists(dir / "out" / "config.json"));
    const auto out = slurp(log);
    CHECK(out.find("final AUC") != std::string::npos);
    CHECK(out.find("total effort") != std::string::npos);
    CHECK(out.find("found defects") != std::string::npos);

    // defaults: c = 1, type2 = 0.2, banp = 0.1
    const auto echoed = slurp(dir / "out" / "config.json");
    CHECK(echoed.find("\"effort_constant\": 1.0") != std::string::npos);
    CHECK(echoed.find("\"type2_prob\": 0.2") != std::string::npos);
    CHECK(echoed.find("\"banp_fraction\": 0.1") != std::string::npos);

    std::istringstream runs(slurp(dir / "out" / "run.csv"));
    CHECK(banditdp::read_runs(runs).size() == 1);
}

TEST_CASE("simulate is reproducible") {
    TempDir dir;
    const auto flags = "simulate " + base_flags() + "--policy ucb --strategy sf --effort-ratio 0.25 --seed 9 --out ";
    REQUIRE(run(flags + (dir / "a").string()) == 0);
    REQUIRE(run(flags + (dir / "b").string()) == 0);
    CHECK(slurp(dir / "a" / "run.csv") == slurp(dir / "b" / "run.csv"));
    CHECK(slurp(dir / "a" / "steps.csv") == slurp(dir / "b" / "steps.csv"));
}

TEST_CASE("usage errors exit with 1") {
    TempDir dir;
    const auto out = " --out " + (dir / "o").string();
    CHECK(run("simulate --arms " + kFixtures + "/arms.csv --policy ucb --strategy sf --effort-ratio 0.1 --seed 1" +
              out) == 1);
    CHECK(run("simulate " + base_flags() + "--policy ucb --epsilon 0.1 --strategy sf --effort-ratio 0.1 --seed 1" +
              out) == 1);
    CHECK(run("simulate " + base_flags() + "--policy egreedy --strategy xf --effort-ratio 0.1 --seed 1" + out) == 1);
    CHECK(run("simulate " + base_flags() + "--policy egreedy --strategy sf --effort-ratio 0 --seed 1" + out) == 1);
    CHECK(run("") == 1);
    CHECK(run("--help") == 0);
}

TEST_CASE("data errors exit with 2") {
    TempDir dir;
    spit(dir / "bad.csv", "module_id,size,defective\nm1,10,1\nm1,20,0\n");
    CHECK(run("simulate --dataset " + (dir / "bad.csv").string() + " --arms " + kFixtures +
              "/arms.csv --policy ucb --strategy sf --effort-ratio 0.1 --seed 1 --out " + (dir / "o").string()) == 2);
    CHECK(run("simulate --dataset /nonexistent.csv --arms " + kFixtures +
              "/arms.csv --policy ucb --strategy sf --effort-ratio 0.1 --seed 1 --out " + (dir / "o").string()) == 2);
}

TEST_CASE("experiment runs a config and inspect reads the result") {
    TempDir dir;
    REQUIRE(run("experiment " + kFixtures + "/experiment.json " + (dir / "rep").string() + " --jobs 2") == 0);
    for (const char* f : {"runs.csv", "cells.csv", "tables.md", "config.json"})
        CHECK(std::filesystem::exists(dir / "rep" / f));
    std::istringstream runs(slurp(dir / "rep" / "runs.csv"));
    CHECK(banditdp::read_runs(runs).size() == 18 * 5);

    REQUIRE(run("experiment " + kFixtures + "/experiment.json " + (dir / "serial").string() + " --serial") == 0);
    CHECK(slurp(dir / "rep" / "runs.csv") == slurp(dir / "serial" / "runs.csv"));

    const auto log = (dir / "inspect.txt").string();
    CHECK(run("inspect " + (dir / "rep" / "runs.csv").string(), log) == 0);
    CHECK(slurp(log).find("synthetic") != std::string::npos);
}

TEST_CASE("config errors exit with 1") {
    TempDir dir;
    spit(dir / "cfg.json", R"({"strategies": ["zz"], "datasets": [{"name":"d","modules":"m.csv","arms":"a.csv"}]})");
    const auto log = (dir / "log.txt").string();
    CHECK(run("experiment " + (dir / "cfg.json").string() + " " + (dir / "out").string(), log) == 1);
    CHECK(slurp(log).find("zz") != std::string::npos);
    spit(dir / "cfg2.json", R"({"colour": "red", "datasets": [{"name":"d","modules":"m.csv","arms":"a.csv"}]})");
    CHECK(run("experiment " + (dir / "cfg2.json").string() + " " + (dir / "out").string(), log) == 1);
    CHECK(slurp(log).find("colour") != std::string::npos);
    CHECK_FALSE(std::filesystem::exists(dir / "out"));
}

TEST_CASE("synth output is accepted by the loaders") {
    TempDir dir;
    REQUIRE(run("synth --modules 50 --seed 3 --out " + (dir / "s").string()) == 0);
    const auto d = banditdp::load_dataset(dir / "s" / "modules.csv");
    const auto arms = banditdp::load_arms(dir / "s" / "arms.csv");
    CHECK(d.size() == 50);
    CHECK_NOTHROW(banditdp::validate_coverage(d, arms));
}
