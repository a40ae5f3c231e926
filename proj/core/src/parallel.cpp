#include "hyperham/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hyperham {

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HYPERHAM_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace hyperham
