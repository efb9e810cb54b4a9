#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace persym {

// One finished index range of a census and its partial tally.
struct CheckpointChunk {
  std::uint64_t start = 0;
  std::uint64_t end = 0;  // exclusive
  std::vector<std::pair<std::string, std::uint64_t>> counts;

  friend bool operator==(const CheckpointChunk&, const CheckpointChunk&) = default;
};

// Append-only census checkpoint. Text format, one line per chunk:
//
//   # persym-census <description>
//   <range_start> <range_end> <key>:<count> <key>:<count> ...
//
// The header pins what is being enumerated; reopening a file whose header
// differs throws ParseError instead of mixing tallies from different runs.
class CheckpointLog {
 public:
  CheckpointLog(std::filesystem::path path, std::string description);

  const std::vector<CheckpointChunk>& completed() const noexcept { return completed_; }

  // Thread-safe; flushed before returning.
  void append(const CheckpointChunk& chunk);

  static std::string header_line(std::string_view description);
  static std::string format_line(const CheckpointChunk& chunk);
  static CheckpointChunk parse_line(std::string_view line);

 private:
  std::filesystem::path path_;
  std::vector<CheckpointChunk> completed_;
  std::ofstream out_;
  std::mutex mu_;
};

}  // namespace persym
