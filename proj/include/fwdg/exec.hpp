#pragma once

// Execution policy for the cell/interface kernels.  Every kernel has a plain
// serial loop (the reference implementation) and an OpenMP loop; both write
// per-cell results into disjoint slots and accumulate reductions from per-cell
// partials in a fixed serial order, so the two modes produce bitwise identical
// results regardless of thread count.

namespace fwdg {

enum class Exec {
  serial,  // reference loops
  openmp,  // parallel loops (falls back to serial when built without OpenMP)
};

// True when the library was compiled with OpenMP support.
bool openmp_enabled();

// Number of threads the openmp policy would use (1 when unavailable).
int max_threads();

}  // namespace fwdg
