#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace factorinv {

/// Per-thread execution settings. Library functions stay pure; these only
/// control how much work they may do and how many workers they may use.
struct ExecutionSettings {
  /// Worker threads for candidate-set maxima; 0 and 1 both mean serial.
  unsigned threads = 1;
  /// Cap on nodes visited by a single kernel completion; 0 means unlimited.
  std::uint64_t max_steps = 0;
};

const ExecutionSettings& current_settings() noexcept;

/// Installs settings for the current thread for the lifetime of the object.
class ScopedSettings {
 public:
  explicit ScopedSettings(ExecutionSettings settings);
  ~ScopedSettings();
  ScopedSettings(const ScopedSettings&) = delete;
  ScopedSettings& operator=(const ScopedSettings&) = delete;

 private:
  ExecutionSettings previous_;
};

/// Evaluates fn(i) for i in [0, count) and returns the results in index
/// order. Workers inherit the caller's settings. The exception of the
/// smallest failing index is rethrown.
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn) {
  const ExecutionSettings settings = current_settings();
  std::vector<T> results(count);
  const std::size_t workers = std::min<std::size_t>(settings.threads > 1 ? settings.threads : 1, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      ScopedSettings scope(settings);
      for (std::size_t i = w; i < count; i += workers) {
        try {
          results[i] = fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace factorinv
