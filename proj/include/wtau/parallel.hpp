#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace wtau {

/// Worker count for the per-term parallel maps. Results never depend on it:
/// partial sums are merged in a fixed chunk order over exact coefficients.
void set_thread_count(int n);
int thread_count();

/// Calls fn(key, value, partial) for every entry of `terms`, accumulating into
/// copies of `zero`, then merges the partials in chunk order.
template <class Out, class Map, class Fn>
Out parallel_accumulate(const Map& terms, const Out& zero, Fn fn) {
  const int threads = thread_count();
  constexpr std::size_t kMinPerThread = 16;
  if (threads <= 1 || terms.size() < 2 * kMinPerThread) {
    Out out = zero;
    for (const auto& [k, v] : terms) fn(k, v, out);
    return out;
  }
  std::vector<typename Map::const_iterator> items;
  items.reserve(terms.size());
  for (auto it = terms.begin(); it != terms.end(); ++it) items.push_back(it);
  const std::size_t chunks =
      std::min<std::size_t>(static_cast<std::size_t>(threads), items.size() / kMinPerThread);
  std::vector<Out> partial(chunks, zero);
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    workers.emplace_back([&, c] {
      const std::size_t begin = items.size() * c / chunks;
      const std::size_t end = items.size() * (c + 1) / chunks;
      try {
        for (std::size_t i = begin; i < end; ++i) fn(items[i]->first, items[i]->second, partial[c]);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Out out = zero;
  for (auto& p : partial) out += p;
  return out;
}

}  // namespace wtau
