#include "aecc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace aecc {

std::size_t worker_count() {
    if (const char* env = std::getenv("ANALOG_ECC_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace aecc
