#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "persym/checkpoint.hpp"
#include "persym/errors.hpp"

using namespace persym;

TEST_CASE("line format round trip") {
  CheckpointChunk c{256, 512, {{"0", 1}, {"1,1,2,2", 40}}};
  const auto line = CheckpointLog::format_line(c);
  CHECK(line == "256 512 0:1 1,1,2,2:40");
  CHECK(CheckpointLog::parse_line(line) == c);
  CHECK(CheckpointLog::parse_line("0 4").counts.empty());
  CHECK(CheckpointLog::header_line("gamma s=2 k=3") == "# persym-census gamma s=2 k=3");
}

TEST_CASE("malformed lines") {
  CHECK_THROWS_AS(CheckpointLog::parse_line("12"), ParseError);
  CHECK_THROWS_AS(CheckpointLog::parse_line("8 4"), ParseError);
  CHECK_THROWS_AS(CheckpointLog::parse_line("0 4 x"), ParseError);
  CHECK_THROWS_AS(CheckpointLog::parse_line("0 4 :3"), ParseError);
  CHECK_THROWS_AS(CheckpointLog::parse_line("0 4 a:b"), ParseError);
  CHECK_THROWS_AS(CheckpointLog::parse_line("0 -4"), ParseError);
}

TEST_CASE("log persists and validates its header") {
  const auto path = std::filesystem::temp_directory_path() / "persym_checkpoint_log.txt";
  std::filesystem::remove(path);
  {
    CheckpointLog log(path, "demo a=1");
    CHECK(log.completed().empty());
    log.append({0, 8, {{"0", 3}}});
    log.append({8, 16, {{"1", 5}}});
  }
  {
    CheckpointLog log(path, "demo a=1");
    REQUIRE(log.completed().size() == 2);
    CHECK(log.completed()[1] == CheckpointChunk{8, 16, {{"1", 5}}});
  }
  CHECK_THROWS_AS(CheckpointLog(path, "demo a=2"), ParseError);
  std::filesystem::remove(path);
}
