#pragma once

namespace roofrisk {

/// Number of threads the OpenMP kernels may use.
///
/// Defaults to the OpenMP maximum; the ROOFRISK_THREADS environment variable
/// caps it. The value is read once and cached. All kernels assign each output
/// element to exactly one thread and keep a fixed per-element accumulation
/// order, so results are bit-identical for any thread count.
int thread_count();

} // namespace roofrisk
