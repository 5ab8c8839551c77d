#include "rpys/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace rpys {

int configure_threads_from_env() {
  if (const char* env = std::getenv("RPYS_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) omp_set_num_threads(n);
    } catch (const std::exception&) {
      // ignored: malformed value leaves the OpenMP default
    }
  }
  return omp_get_max_threads();
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace rpys
