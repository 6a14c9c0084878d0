#pragma once

#include "telinv/execution.hpp"

#include <exception>

namespace telinv::detail {

// Runs body(i) for i in [0, count).  The first exception raised by any
// iteration is rethrown after the loop.
template <class Body>
void for_each_index(int count, Execution exec, Body&& body) {
    if (exec == Execution::Serial) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
#pragma omp critical(telinv_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace telinv::detail
