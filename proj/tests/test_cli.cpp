#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BFREE_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gen examples and validation") {
    CHECK(run("gen --b 3,5,7 --range 0..12").out == "011111011111\n");
    CHECK(run("gen --b 3,5,7 --range 1..2").out == "1\n");
    CHECK(run("gen --b 3,9 --range 0..12").code == 1);
    CHECK(run("gen --b 3,5,7 --range 0..20").code == 2);
    CHECK(run("gen --b 3,5,7 --range 0..20 --extend").code == 0);
    CHECK(run("gen --range nonsense").code == 1);
    CHECK(run("").code == 1);
    CHECK(run("--help").code == 0);
  }

  TEST_CASE("module wrappers") {
    const auto holes = nlohmann::json::parse(run("holes --b 3,5,7 --t 2").out);
    CHECK(holes.at("holes") == nlohmann::json::array({4, 8, 16, 28, 32, 44, 52, 56}));
    CHECK(nlohmann::json::parse(run("gaps --t 3").out).at("k_t") == 8);
    CHECK(nlohmann::json::parse(run("stabilizer --t 1 --kprime 0").out).at("stabilizer") == nlohmann::json::array({0}));
    const auto taut = nlohmann::json::parse(run("taut --t 3").out);
    CHECK(taut.at("taut") == true);
    const auto skel = nlohmann::json::parse(run("skeleton --t 2").out);
    CHECK(skel.at("p_t") == 60);
  }

  TEST_CASE("exit codes for refusal and depth") {
    CHECK(run("autosearch --t 3 --k 5 --anchors 200 --budget 10").code == 3);
    CHECK(run("--budget 0 holes --t 1").code == 1);
    CHECK(run("lift --t 1 --width 2 --n 0").code == 2);
  }

  TEST_CASE("identical flags give identical bytes") {
    for (const char* args : {"autosearch --t 3 --k 3 --anchors 3 --horizon 16",
                             "autosearch --source counterexample --k 1 --anchors 1 --horizon 6",
                             "odometer --n 17 --classify --skeleton 2 --point -5..30", "counterexample --closure 6"}) {
      const auto a = run(args);
      const auto b = run(std::string(args) + " --threads 3");
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
      CHECK(a.out == run(args).out);
    }
  }
}
