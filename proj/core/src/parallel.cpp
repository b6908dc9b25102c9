#include "nisg/parallel.hpp"

namespace nisg {

namespace {
std::atomic<int> g_threads{0};
}

void set_thread_count(int n) { g_threads.store(n < 0 ? 0 : n); }

int thread_count() { return g_threads.load(); }

int effective_thread_count() {
  const int setting = g_threads.load();
  if (setting > 0) return setting;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace nisg
