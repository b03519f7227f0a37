#pragma once

#include <functional>

// Row-parallel grid evaluation.  Each row writes only its own slice, so the
// result is bitwise independent of the schedule.  LINESPACE_THREADS caps the
// worker count (1 disables threading).

namespace linespace {

int max_threads();

void parallel_for_rows(int rows, const std::function<void(int)>& body);

}  // namespace linespace
