#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace epslab {

/**
 * Run fn(i) for i in [0, n) and collect results in index order, so output is
 * independent of execution order. jobs == 1 is the serial reference path;
 * jobs == 0 lets the runtime pick a thread count; jobs > 1 caps it. The
 * first exception thrown by any index is rethrown after the loop finishes.
 */
template <class R>
std::vector<R> indexed_map(std::size_t n, unsigned jobs, const std::function<R(std::size_t)>& fn) {
    std::vector<R> out(n);
    if (n == 0) return out;
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }

    std::exception_ptr first_error = nullptr;
#ifdef _OPENMP
    int threads = jobs == 0 ? omp_get_max_threads() : static_cast<int>(jobs);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < n; ++i) {
        try {
            out[i] = fn(i);
        } catch (...) {
#pragma omp critical(epslab_indexed_map_error)
            if (!first_error) first_error = std::current_exception();
        }
    }
#else
    for (std::size_t i = 0; i < n; ++i) {
        try {
            out[i] = fn(i);
        } catch (...) {
            if (!first_error) first_error = std::current_exception();
        }
    }
#endif
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

}  // namespace epslab
