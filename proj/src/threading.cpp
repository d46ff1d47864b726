#include "ewens/threading.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace ewens {

int worker_count(std::uint64_t work_items) {
  if (work_items <= 1) return 1;
  unsigned long workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* env = std::getenv("EWENS_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1 && static_cast<unsigned long>(cap) < workers) {
        workers = static_cast<unsigned long>(cap);
      }
    } catch (...) {
      // unparsable cap: ignore
    }
  }
  if (workers > work_items) workers = work_items;
  return static_cast<int>(workers);
}

}  // namespace ewens
