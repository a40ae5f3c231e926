#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace hyperham {

/// Worker count from an explicit request, else HYPERHAM_JOBS, else 1.
int resolve_jobs(int requested);

/// Wall-clock deadline shared by all workers of one search.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(std::optional<std::chrono::milliseconds> budget)
      : end_(budget ? std::optional(std::chrono::steady_clock::now() + *budget) : std::nullopt) {}

  bool passed() const {
    if (expired_.load(std::memory_order_relaxed)) return true;
    if (end_ && std::chrono::steady_clock::now() >= *end_) {
      expired_.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
  bool expired() const { return expired_.load(std::memory_order_relaxed); }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
  mutable std::atomic<bool> expired_{false};
};

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Exceptions are rethrown
/// (the first one wins) after every worker has joined.
template <class Body>
void parallel_for(std::size_t count, int jobs, Body&& body) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w + 1 < std::min(workers, count); ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

/**
 * Cooperative stop signal for one top-level branch of a search.
 *
 * In deterministic mode a branch stops once some lower-indexed branch has
 * succeeded; in fast mode any success stops everyone.
 */
class BranchControl {
 public:
  BranchControl(const std::atomic<std::size_t>& best, std::size_t index, bool deterministic, const Deadline& deadline)
      : best_(best), index_(index), deterministic_(deterministic), deadline_(deadline) {}

  bool should_stop() const {
    const std::size_t best = best_.load(std::memory_order_relaxed);
    if (deterministic_ ? best < index_ : best != kNone) return true;
    return deadline_.passed();
  }
  const Deadline& deadline() const { return deadline_; }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

 private:
  const std::atomic<std::size_t>& best_;
  std::size_t index_;
  bool deterministic_;
  const Deadline& deadline_;
};

/**
 * Evaluates branch(i, control) -> std::optional<T> over i in [0, count) and returns
 * the success with the smallest index (deterministic) or whichever success arrived
 * first (fast). With deterministic = true the answer equals a sequential scan.
 */
template <class T, class Branch>
std::optional<std::pair<std::size_t, T>> first_success(std::size_t count, int jobs, bool deterministic,
                                                       const Deadline& deadline, Branch&& branch) {
  std::atomic<std::size_t> best{BranchControl::kNone};
  std::vector<std::optional<T>> found(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    const std::size_t current = best.load();
    if (deterministic ? current < i : current != BranchControl::kNone) return;
    if (deadline.passed()) return;
    BranchControl control(best, i, deterministic, deadline);
    auto result = branch(i, control);
    if (!result) return;
    found[i] = std::move(result);
    std::size_t expected = best.load();
    while (i < expected && !best.compare_exchange_weak(expected, i)) {
    }
  });
  const std::size_t winner = best.load();
  if (winner == BranchControl::kNone) return std::nullopt;
  return std::pair<std::size_t, T>{winner, std::move(*found[winner])};
}

}  // namespace hyperham
