#pragma once

namespace l21 {

/// Selects the serial reference or the OpenMP version of a kernel.
enum class Exec { Serial, Parallel };

/// Worker count: L21_WORKERS if set to a positive integer, otherwise the OpenMP default.
int worker_count();

} // namespace l21
