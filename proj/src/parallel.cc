#include <l21/parallel.hh>

#include <cstdlib>
#include <string>

#include <omp.h>

namespace l21 {

int worker_count()
{
    if (const char* env = std::getenv("L21_WORKERS")) {
        try {
            int n = std::stoi(env);
            if (n > 0)
                return n;
        }
        catch (const std::exception&) {
        }
    }
    return omp_get_max_threads();
}

} // namespace l21
