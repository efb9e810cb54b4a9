#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "persym");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = persym::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("census subcommands") {
  auto g = run({"census", "gamma", "--s", "2", "--k", "3"});
  REQUIRE(g.code == 0);
  CHECK(json_of(g) == nlohmann::json::parse(R"({"0":1,"1":3,"2":12})"));

  auto st = run({"census", "stacked", "--n", "1", "--m", "2", "--k", "3"});
  REQUIRE(st.code == 0);
  CHECK(json_of(st) == nlohmann::json::parse(R"({"0":1,"1":13,"2":66,"3":176})"));

  auto q = run({"census", "quad", "--s", "2", "--k", "2"});
  REQUIRE(q.code == 0);
  CHECK(json_of(q)["0,0,0,0"] == 1);

  auto sg = run({"census", "sigma", "--m", "0", "--k", "1"});
  REQUIRE(sg.code == 0);
  CHECK(json_of(sg) == nlohmann::json::parse(R"({"equal":{"0":1,"1":2},"increment":{"1":1}})"));

  auto csv = run({"census", "gamma", "--s", "2", "--k", "3", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("rank,count\n", 0) == 0);
  CHECK(csv.out.find("2,12") != std::string::npos);
}

TEST_CASE("expsum subcommand") {
  auto h = run({"expsum", "h", "--s", "2", "--k", "2", "--t", "100"});
  CHECK(h.code == 0);
  CHECK(h.out.find("direct=8 closed=8 agree=true") != std::string::npos);
  auto g = run({"expsum", "g", "--s", "2", "--k", "2", "--t", "001"});
  CHECK(g.out.find("direct=-4") != std::string::npos);
  auto z = run({"expsum", "h", "--s", "2", "--k", "2", "--t", "000"});
  CHECK(z.out.find("direct=16") != std::string::npos);
}

TEST_CASE("repcount subcommand") {
  CHECK(run({"repcount", "--mode", "brute", "--q", "1", "--n", "1", "--k", "3", "--m", "2"}).out.find("23") !=
        std::string::npos);
  CHECK(run({"repcount", "--mode", "formula", "--q", "3", "--n", "5", "--k", "4", "--m", "2"}).out.find("24413824") !=
        std::string::npos);
  CHECK(run({"repcount", "--mode", "formula", "--q", "2", "--n", "0", "--k", "2", "--m", "1"}).out.find("64") !=
        std::string::npos);
  auto c = run({"repcount", "--check", "--q", "2", "--n", "1", "--k", "3", "--m", "2"});
  CHECK(c.code == 0);
  CHECK(c.out.find("agree=true") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  for (auto args : std::vector<std::vector<std::string>>{{"verify", "thm3.1", "--s", "2", "--k", "3"},
                                                         {"verify", "thm3.9", "--n", "1", "--m", "2", "--k", "3"},
                                                         {"verify", "landsberg", "--rows", "2", "--k", "3"},
                                                         {"verify", "sigma6.x", "--m", "1", "--k", "2"},
                                                         {"verify", "lemmas5.x", "--s", "3", "--k", "4"}}) {
    auto r = run(args);
    CAPTURE(r.out);
    CAPTURE(r.err);
    CHECK(r.code == 0);
    CHECK(json_of(r)["match"] == true);
  }
  auto bad = run({"verify", "thm3.8", "--m", "1", "--k", "3"});
  CHECK(bad.code == 1);
  CHECK(json_of(bad)["match"] == false);
}

TEST_CASE("errors and usage") {
  auto budget = run({"census", "gamma", "--s", "20", "--k", "20"});
  CHECK(budget.code == 2);
  CHECK(budget.err.find("error:") != std::string::npos);
  CHECK(run({"census", "gamma", "--s", "2"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output does not depend on thread count") {
  auto one = run({"--threads", "1", "verify", "thm3.9", "--n", "2", "--m", "1", "--k", "3", "--no-runtime"});
  auto four = run({"--threads", "4", "verify", "thm3.9", "--n", "2", "--m", "1", "--k", "3", "--no-runtime"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
}
