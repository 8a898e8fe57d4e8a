#include "roofrisk/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace roofrisk {

static int detect_thread_count() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("ROOFRISK_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1 && cap < n) n = cap;
        } catch (...) {
            // unparsable value: keep the default
        }
    }
    return n < 1 ? 1 : n;
}

int thread_count() {
    static int n = detect_thread_count();
    return n;
}

} // namespace roofrisk
