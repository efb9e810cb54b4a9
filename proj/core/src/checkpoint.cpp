#include "persym/checkpoint.hpp"

#include <charconv>
#include <sstream>

#include "persym/errors.hpp"

namespace persym {

namespace {

constexpr std::string_view kHeaderPrefix = "# persym-census ";

std::uint64_t parse_u64(std::string_view s, std::string_view line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ParseError("checkpoint: bad number '" + std::string(s) + "' in line '" + std::string(line) + "'");
  return v;
}

}  // namespace

std::string CheckpointLog::header_line(std::string_view description) {
  return std::string(kHeaderPrefix) + std::string(description);
}

std::string CheckpointLog::format_line(const CheckpointChunk& chunk) {
  std::string s = std::to_string(chunk.start) + " " + std::to_string(chunk.end);
  for (const auto& [key, count] : chunk.counts) s += " " + key + ":" + std::to_string(count);
  return s;
}

CheckpointChunk CheckpointLog::parse_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ') ++end;
    if (end > pos) fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  if (fields.size() < 2) throw ParseError("checkpoint: short line '" + std::string(line) + "'");
  CheckpointChunk c;
  c.start = parse_u64(fields[0], line);
  c.end = parse_u64(fields[1], line);
  if (c.end < c.start) throw ParseError("checkpoint: reversed range in '" + std::string(line) + "'");
  for (std::size_t i = 2; i < fields.size(); ++i) {
    const auto colon = fields[i].rfind(':');
    if (colon == std::string_view::npos || colon == 0)
      throw ParseError("checkpoint: bad tally '" + std::string(fields[i]) + "'");
    c.counts.emplace_back(std::string(fields[i].substr(0, colon)), parse_u64(fields[i].substr(colon + 1), line));
  }
  return c;
}

CheckpointLog::CheckpointLog(std::filesystem::path path, std::string description) : path_(std::move(path)) {
  const std::string header = header_line(description);
  bool fresh = true;
  if (std::ifstream in(path_); in) {
    std::string line;
    if (std::getline(in, line)) {
      fresh = false;
      if (line != header)
        throw ParseError("checkpoint " + path_.string() + " belongs to a different census: '" + line + "'");
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        completed_.push_back(parse_line(line));
      }
    }
  }
  out_.open(path_, std::ios::app);
  if (!out_) throw Error("cannot open checkpoint file " + path_.string());
  if (fresh) out_ << header << '\n' << std::flush;
}

void CheckpointLog::append(const CheckpointChunk& chunk) {
  std::lock_guard lock(mu_);
  out_ << format_line(chunk) << '\n' << std::flush;
}

}  // namespace persym
