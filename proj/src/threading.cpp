#include "chromap/threading.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chromap {

int thread_cap() {
    const char* env = std::getenv("CHROMAP_THREADS");
    if (!env) return 0;
    try {
        int n = std::stoi(env);
        return n > 0 ? n : 0;
    } catch (...) {
        return 0;
    }
}

void apply_thread_cap() {
#ifdef _OPENMP
    int cap = thread_cap();
    if (cap > 0) omp_set_num_threads(cap);
#endif
}

}  // namespace chromap
