#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef RAINBOW_HAVE_OPENMP
#include <omp.h>
#endif

namespace rainbow {

/// jobs <= 0 means "all available workers".
int resolve_jobs(int jobs);

/// Runs body(i) for i in [0, count) on up to `jobs` workers, dynamic
/// schedule. The first exception thrown by any iteration is rethrown after
/// the loop; later iterations still run.
template <typename Body>
void parallel_for(std::size_t count, int jobs, Body&& body)
{
    const int workers = resolve_jobs(jobs);
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_lock;
#ifdef RAINBOW_HAVE_OPENMP
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (long long i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> hold(failure_lock);
            if (!failure) failure = std::current_exception();
        }
    }
#else
    for (std::size_t i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
            if (!failure) failure = std::current_exception();
        }
    }
#endif
    if (failure) std::rethrow_exception(failure);
}

} // namespace rainbow
