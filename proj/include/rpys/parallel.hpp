#pragma once

namespace rpys {

/// Selects between the OpenMP kernels and their serial reference versions.
/// Both produce identical results; the serial path exists for testing and
/// benchmarking.
enum class Exec { serial, parallel };

/// Caps OpenMP worker threads from the RPYS_THREADS environment variable.
/// Returns the thread count in effect.
int configure_threads_from_env();

int max_threads();

}  // namespace rpys
