#include "gsvr/threads.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gsvr {

namespace {
std::atomic<int> g_cap{-1}; // -1: not set yet, consult env
} // namespace

void set_thread_cap(int threads) {
    g_cap.store(threads < 0 ? 0 : threads);
}

int thread_cap() {
    int cap = g_cap.load();
    if (cap < 0) {
        cap = 0;
        if (const char* env = std::getenv("GSVR_THREADS")) {
            cap = std::atoi(env);
            if (cap < 0) cap = 0;
        }
        g_cap.store(cap);
    }
    return cap;
}

int effective_threads() {
    int cap = thread_cap();
#ifdef _OPENMP
    int hw = omp_get_max_threads();
#else
    int hw = static_cast<int>(std::thread::hardware_concurrency());
#endif
    if (hw < 1) hw = 1;
    if (cap == 0 || cap > hw) return hw;
    return cap;
}

} // namespace gsvr
