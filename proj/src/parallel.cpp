#include "pentagon/parallel.hpp"

#include <cstdlib>
#include <string>

namespace pentagon {

std::size_t thread_count() {
  if (const char* env = std::getenv("PENTAGON_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace pentagon
