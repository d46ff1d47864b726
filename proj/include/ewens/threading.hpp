#pragma once

#include <cstdint>

namespace ewens {

// Worker count for internally parallel operations: the EWENS_THREADS
// environment variable caps it, hardware concurrency is the default, and
// the result never exceeds work_items. Always >= 1. Callers guarantee that
// results do not depend on this number.
int worker_count(std::uint64_t work_items);

}  // namespace ewens
