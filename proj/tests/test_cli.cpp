#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "lorenz/cli.hpp"
#include "lorenz/symbolic.hpp"

using namespace lorenz;

namespace {

cli::RunResult run(std::initializer_list<std::string> args) {
    return cli::run(std::vector<std::string>(args));
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

struct EnvGuard {
    std::string key;
    EnvGuard(const std::string& k, const std::string& v) : key(k) {
        setenv(k.c_str(), v.c_str(), 1);
    }
    ~EnvGuard() { unsetenv(key.c_str()); }
};

} // namespace

TEST_CASE("admissible subcommand") {
    auto r = run({"admissible", "LR0,RL0"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "admissible: true\n");

    auto bad = run({"admissible", "LL0,R0"});
    CHECK(bad.exit_code == 0); // the check itself succeeded
    CHECK(bad.out == "admissible: false\n");
}

TEST_CASE("star subcommand reproduces the worked product") {
    auto r = run({"star", "LRRRL0,RLLR0", "LRR0,RL0"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(LRRRLRLLRRLLR0,RLLRLRRRL0)\n");
}

TEST_CASE("template subcommand prints the worked matrices") {
    auto r = run({"template", "LRR0,RL0"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("points: L0 LRR0 RL0 R0 RR0") != std::string::npos);
    CHECK(r.out.find("transition:\n0 1 1\n1 0 0\n0 1 0\n") !=
          std::string::npos);
    CHECK(r.out.find("labels:\n0 L L\nR 0 0\n0 R 0\n") != std::string::npos);
}

TEST_CASE("zeta subcommands") {
    auto w = run({"zeta-w", "LR0,RL0"});
    CHECK(w.exit_code == 0);
    CHECK(w.out == "link-det = 1 - (LR)\n");

    auto s = run({"zeta-s", "LRR0,RL0", "--order", "12"});
    CHECK(s.exit_code == 0);
    CHECK(s.out ==
          "zeta-s = 1 + t^4 + t^6 + t^8 + 2*t^10 + 2*t^12 + O(t^13)\n");
}

TEST_CASE("orbits subcommand") {
    auto r = run({"orbits", "LRR0,RL0", "--order", "6"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("O_2 = 1\n") != std::string::npos);
    CHECK(r.out.find("O_3 = 1\n") != std::string::npos);
    CHECK(r.out.find("T_4 = 1\n") != std::string::npos);
    CHECK(r.out.find("ScriptT_4 = 4\n") != std::string::npos);
}

TEST_CASE("verify subcommands pass on the worked examples") {
    auto w = run({"verify", "williams", "LRRRL0,RLLR0", "LRR0,RL0"});
    CHECK(w.exit_code == 0);
    CHECK(w.out.find("verify williams: PASS") != std::string::npos);

    auto s = run({"verify", "sullivan", "LRRRL0,RLLR0", "LRR0,RL0"});
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("verify sullivan: PASS") != std::string::npos);

    auto ew = run({"verify", "exp-w", "LRR0,RL0", "--order", "12"});
    CHECK(ew.exit_code == 0);
    CHECK(ew.out.find("verify exp-w: PASS") != std::string::npos);

    auto es = run({"verify", "exp-s", "LRR0,RL0"});
    CHECK(es.exit_code == 0);
    CHECK(es.out.find("verify exp-s: PASS") != std::string::npos);
}

TEST_CASE("exit status contract") {
    // 2: usage and parse errors.
    CHECK(run({"template"}).exit_code == 2);
    CHECK(run({"no-such-command"}).exit_code == 2);
    CHECK(run({"admissible", "LX0,R0"}).exit_code == 2);
    CHECK(run({"template", "LL0,R0"}).exit_code == 2); // not admissible
    CHECK(run({"verify", "nonsense", "LR0,RL0"}).exit_code == 2);
    CHECK(run({"verify", "williams", "LR0,RL0"}).exit_code == 2);

    // 3: computational errors.
    CHECK(run({"template", "L0,R0"}).exit_code == 3);        // too small
    CHECK(run({"template", "LRL0,RLL0"}).exit_code == 3);    // duplicate point
    CHECK(run({"zeta-w", "LRR0,RL0", "--budget", "1"}).exit_code == 3);

    // 0: help.
    CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("JSON outputs are valid documents") {
    for (auto args : {std::vector<std::string>{"template", "LRR0,RL0"},
                      {"zeta-w", "LRR0,RL0"},
                      {"zeta-s", "LRR0,RL0"},
                      {"orbits", "LRR0,RL0"},
                      {"admissible", "LRR0,RL0"},
                      {"star", "LR0,RL0", "LR0,RL0"},
                      {"verify", "exp-s", "LRR0,RL0"}}) {
        args.push_back("--json");
        auto r = cli::run(args);
        CHECK(r.exit_code == 0);
        nlohmann::json j = nlohmann::json::parse(r.out, nullptr, false);
        CHECK_FALSE(j.is_discarded());
    }

    auto w = cli::run({"zeta-w", "LR0,RL0", "--json"});
    nlohmann::json j = nlohmann::json::parse(w.out);
    CHECK(j["terms"].size() == 2);
}

TEST_CASE("corpus generation round-trips") {
    auto path = temp_file("lorenz_corpus_test.txt");
    auto r = cli::run({"corpus", "2", "2", "--out", path.string()});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");

    std::ifstream in(path);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "(L0,R0)");
    CHECK(lines[1] == "(LR0,RL0)");
    for (const auto& l : lines) {
        KneadingPair p = parse_pair(l);
        CHECK(is_admissible_pair(p));
        CHECK(format_pair(p) == l);
    }
    std::filesystem::remove(path);

    // Bound violations surface as usage errors.
    CHECK(cli::run({"corpus", "9", "9", "--out", path.string()}).exit_code ==
          2);
}

TEST_CASE("configuration precedence") {
    auto order_of = [](const cli::RunResult& r) {
        return nlohmann::json::parse(r.out)["order"].get<int>();
    };

    // Default truncation order.
    CHECK(order_of(run({"zeta-s", "LR0,RL0", "--json"})) == 24);

    // Flag beats default.
    CHECK(order_of(run({"zeta-s", "LR0,RL0", "--json", "--order", "4"})) == 4);

    {
        // Environment beats default; flag beats environment.
        EnvGuard env("LORENZ_ZETA_ORDER", "8");
        CHECK(order_of(run({"zeta-s", "LR0,RL0", "--json"})) == 8);
        CHECK(order_of(run({"zeta-s", "LR0,RL0", "--json", "--order", "4"})) ==
              4);
    }

    auto cfg_path = temp_file("lorenz_cli_test.cfg");
    {
        std::ofstream cfg(cfg_path);
        cfg << "# test configuration\norder=10\n";
    }
    // Config file beats default; environment beats config file.
    CHECK(order_of(run({"zeta-s", "LR0,RL0", "--json", "--config",
                        cfg_path.string()})) == 10);
    {
        EnvGuard env("LORENZ_ZETA_ORDER", "8");
        CHECK(order_of(run({"zeta-s", "LR0,RL0", "--json", "--config",
                            cfg_path.string()})) == 8);
    }
    std::filesystem::remove(cfg_path);
}
