#include "cpsample/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cpsample {

unsigned default_thread_count() {
  if (const char* env = std::getenv("CPSAMPLE_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace cpsample
