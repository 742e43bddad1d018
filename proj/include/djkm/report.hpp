#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace djkm {

/// Outcome of a verification sweep: how many checks ran, how many failed,
/// and a capped list of witnesses in deterministic (check-index) order.
struct Report {
  static constexpr size_t kMaxWitnesses = 100;

  uint64_t checked = 0;
  uint64_t failed = 0;
  std::vector<std::string> witnesses;

  bool ok() const { return failed == 0; }

  void note_failure(std::string witness) {
    ++failed;
    if (witnesses.size() < kMaxWitnesses) {
      witnesses.push_back(std::move(witness));
    }
  }

  void merge(Report&& o) {
    checked += o.checked;
    failed += o.failed;
    for (auto& w : o.witnesses) {
      if (witnesses.size() >= kMaxWitnesses) break;
      witnesses.push_back(std::move(w));
    }
  }
};

/// Splits [0, total) into contiguous chunks, one worker thread per chunk,
/// and merges the per-chunk reports in chunk order, so the result is
/// identical for every worker count.
inline Report run_chunked(uint64_t total, int workers,
                          const std::function<void(uint64_t, uint64_t, Report&)>& body) {
  if (workers < 1) workers = 1;
  if (static_cast<uint64_t>(workers) > total) {
    workers = static_cast<int>(total == 0 ? 1 : total);
  }
  std::vector<Report> parts(static_cast<size_t>(workers));
  if (workers == 1) {
    body(0, total, parts[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(workers));
    uint64_t chunk = total / static_cast<uint64_t>(workers);
    uint64_t rest = total % static_cast<uint64_t>(workers);
    uint64_t begin = 0;
    for (int w = 0; w < workers; ++w) {
      uint64_t len = chunk + (static_cast<uint64_t>(w) < rest ? 1 : 0);
      uint64_t end = begin + len;
      threads.emplace_back(
          [&body, &parts, w, begin, end] { body(begin, end, parts[static_cast<size_t>(w)]); });
      begin = end;
    }
    for (auto& t : threads) t.join();
  }
  Report out;
  for (auto& p : parts) out.merge(std::move(p));
  return out;
}

}  // namespace djkm
