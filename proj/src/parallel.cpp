#include "loewy/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace loewy {

unsigned thread_budget() {
  if (const char* env = std::getenv("LOEWY_LAB_THREADS")) {
    unsigned value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace loewy
