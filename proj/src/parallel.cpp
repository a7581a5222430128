#include "zsl/parallel.hpp"

#include <cstdlib>
#include <string>

namespace zsl {

int default_workers() noexcept
{
    if (const char* env = std::getenv("ZSLAB_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0)
            return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace zsl
