#include "domex/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace domex::parallel {

namespace {
#ifdef _OPENMP
const int kDefaultThreads = omp_get_max_threads();
#endif
}  // namespace

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n > 0 ? n : kDefaultThreads);
#else
    (void)n;
#endif
}

int apply_env_threads() {
    const char* raw = std::getenv("DOMEX_JOBS");
    if (!raw) return 0;
    try {
        int n = std::stoi(raw);
        if (n > 0) {
            set_threads(n);
            return n;
        }
    } catch (const std::exception&) {
    }
    return 0;
}

}  // namespace domex::parallel
