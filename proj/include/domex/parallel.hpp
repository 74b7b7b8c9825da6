#pragma once

namespace domex::parallel {

// Number of OpenMP workers used by the parallel kernels (1 when built without OpenMP).
int max_threads();

// Caps the worker count; n <= 0 restores the runtime default.
void set_threads(int n);

// Reads DOMEX_JOBS and applies it when set to a positive integer. Returns the applied value or 0.
int apply_env_threads();

}  // namespace domex::parallel
