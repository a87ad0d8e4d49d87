#include "zerosum/parallel.hpp"

#include <cstdlib>
#include <string>

namespace zerosum {

unsigned default_jobs()
{
    if (const char* env = std::getenv("ZEROSUM_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1)
                return static_cast<unsigned>(v);
        } catch (...) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

} // namespace zerosum
