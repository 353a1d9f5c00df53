#pragma once

// OpenMP shim. Include this instead of <omp.h>; builds without OpenMP get
// serial fallbacks and the pragmas vanish.

#if defined(_MSC_VER)
#define VPT_PRAGMIZE(X) __pragma(X)
#else
#define VPT_PRAGMIZE(X) _Pragma(#X)
#endif

#ifdef _OPENMP
#include <omp.h>
#define VPT_OMP(ARGS) VPT_PRAGMIZE(omp ARGS)
#else
#define VPT_OMP(ARGS)
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
inline void omp_set_num_threads(int) {}
#endif

#include <exception>
#include <mutex>

namespace vpt {

/// Exceptions must not leave an OpenMP region. Loop bodies run through
/// run(); the first failure is kept and rethrown after the region.
class FirstError {
 public:
  template <typename F>
  void run(F&& body) {
    try {
      body();
    } catch (...) {
      std::lock_guard lock(mu_);
      if (!err_) err_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (err_) std::rethrow_exception(err_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr err_;
};

/// Loops with fewer multiply-adds than this stay serial.
inline constexpr long kParallelWorkThreshold = 1L << 15;

}  // namespace vpt
