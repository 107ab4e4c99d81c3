#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <semaphore>
#include <thread>
#include <vector>

namespace ambipun {

// Applies `fn` to 0..count-1 with at most `max_in_flight` calls running at
// once. Results come back in index order whatever the completion order. The
// first exception (by index) is rethrown after every task has finished.
template <typename Result>
std::vector<Result> ordered_parallel_map(std::size_t count, int max_in_flight,
                                         const std::function<Result(std::size_t)>& fn) {
  std::vector<Result> out;
  out.reserve(count);
  if (max_in_flight <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
    return out;
  }
  std::counting_semaphore<> slots(max_in_flight);
  std::vector<std::optional<Result>> results(count);
  std::vector<std::exception_ptr> errors(count);
  {
    std::vector<std::jthread> workers;
    workers.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      slots.acquire();
      workers.emplace_back([&, i] {
        try {
          results[i].emplace(fn(i));
        } catch (...) {
          errors[i] = std::current_exception();
        }
        slots.release();
      });
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*results[i]));
  }
  return out;
}

}  // namespace ambipun
