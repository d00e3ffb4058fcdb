#include "ipdclust/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace ipdclust {

namespace {

std::atomic<unsigned> g_thread_count{0};

unsigned resolve(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return std::min(hw, 8u);
}

}  // namespace

void set_thread_count(unsigned count) { g_thread_count.store(count); }

unsigned thread_count() { return resolve(g_thread_count.load()); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  unsigned workers = thread_count();
  if (workers <= 1 || n < 2 * workers) {
    fn(0, n);
    return;
  }
  std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    std::size_t end = std::min(begin + chunk, n);
    pool.emplace_back(fn, begin, end);
  }
  for (auto& t : pool) t.join();
}

}  // namespace ipdclust
