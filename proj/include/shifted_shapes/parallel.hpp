#pragma once

namespace shs {

// Worker count: an explicit positive request wins, then SHIFTED_SHAPES_THREADS, then the
// OpenMP default.
int resolve_threads(int requested = 0);

}  // namespace shs
