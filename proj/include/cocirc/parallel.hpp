#pragma once

namespace cocirc {

/// Worker count for the OpenMP kernels: COCIRC_THREADS if set and positive,
/// otherwise the OpenMP default (1 when built without OpenMP).
int thread_count();

}  // namespace cocirc
