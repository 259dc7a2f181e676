#ifndef GSVR_THREADS_HPP
#define GSVR_THREADS_HPP

namespace gsvr {

// Global worker-thread cap. 0 means "all available cores".
// Resolution order: set_thread_cap() > GSVR_THREADS env var > hardware.
void set_thread_cap(int threads);
int thread_cap();

// Effective thread count for a parallel region (>= 1).
int effective_threads();

} // namespace gsvr

#endif // GSVR_THREADS_HPP
