#pragma once

namespace specenv {

/// Resolve the thread cap: SPECENV_THREADS if set, otherwise the hardware
/// count. Applies the cap to OpenMP and the BLAS backend and returns it.
int configure_threads();

/// The cap currently in effect (calls configure_threads on first use).
int thread_count();

}  // namespace specenv
