#pragma once

namespace chromap {

// Thread cap from CHROMAP_THREADS (0 or unset = library default).
int thread_cap();

// Applies the cap to the OpenMP runtime. No-op without OpenMP.
void apply_thread_cap();

enum class ExecutionPolicy { Serial, Parallel };

}  // namespace chromap
