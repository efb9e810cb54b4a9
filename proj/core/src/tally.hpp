#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "persym/census.hpp"
#include "persym/checkpoint.hpp"
#include "persym/errors.hpp"

namespace persym::detail {

struct TallySpec {
  std::string description;  // checkpoint header, e.g. "gamma s=2 k=3"
  unsigned domain_bits = 0;
  std::size_t key_count = 0;
  std::function<std::string(std::size_t)> key_name;
};

inline void check_budget(unsigned bits, const CensusOptions& opts, const std::string& what) {
  if (bits > opts.budget_bits || bits > 62)
    throw BudgetExceeded(what + " needs 2^" + std::to_string(bits) + " points, budget is 2^" +
                         std::to_string(opts.budget_bits));
}

// Counts classify(x) over x in [0, 2^domain_bits). classify must be safe to
// call concurrently and return a value below key_count.
template <class Classify>
std::vector<std::uint64_t> run_tally(const TallySpec& spec, const CensusOptions& opts, const Classify& classify) {
  check_budget(spec.domain_bits, opts, spec.description);
  const std::uint64_t domain = std::uint64_t{1} << spec.domain_bits;
  const std::uint64_t chunk = std::uint64_t{1} << std::min(opts.chunk_bits, spec.domain_bits);
  const std::uint64_t chunks = domain / chunk;

  std::vector<std::uint64_t> totals(spec.key_count, 0);
  std::vector<char> done(chunks, 0);

  std::optional<CheckpointLog> log;
  if (opts.checkpoint) {
    log.emplace(*opts.checkpoint, spec.description + " bits=" + std::to_string(spec.domain_bits) +
                                      " chunk=" + std::to_string(chunk));
    std::unordered_map<std::string, std::size_t> ids;
    for (std::size_t id = 0; id < spec.key_count; ++id) ids.emplace(spec.key_name(id), id);
    for (const auto& c : log->completed()) {
      if (c.start % chunk != 0 || c.end != c.start + chunk || c.end > domain)
        throw ParseError("checkpoint range " + std::to_string(c.start) + ".." + std::to_string(c.end) +
                         " does not match the chunk grid");
      if (done[c.start / chunk]) continue;
      done[c.start / chunk] = 1;
      for (const auto& [key, count] : c.counts) {
        auto it = ids.find(key);
        if (it == ids.end()) throw ParseError("checkpoint: unknown key '" + key + "'");
        totals[it->second] += count;
      }
    }
  }

  std::atomic<std::uint64_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;

  auto worker = [&] {
    std::vector<std::uint64_t> local(spec.key_count);
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      if (done[c]) continue;
      std::fill(local.begin(), local.end(), 0);
      const std::uint64_t start = c * chunk;
      try {
        for (std::uint64_t x = start; x < start + chunk; ++x) ++local[classify(x)];
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
      std::lock_guard lock(mu);
      for (std::size_t i = 0; i < local.size(); ++i) totals[i] += local[i];
      if (log) {
        CheckpointChunk record{start, start + chunk, {}};
        for (std::size_t i = 0; i < local.size(); ++i)
          if (local[i] != 0) record.counts.emplace_back(spec.key_name(i), local[i]);
        log->append(record);
      }
    }
  };

  unsigned threads = opts.threads != 0 ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return totals;
}

}  // namespace persym::detail
