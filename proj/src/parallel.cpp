#include "rainbow/parallel.hpp"

namespace rainbow {

int resolve_jobs(int jobs)
{
    if (jobs > 0) return jobs;
#ifdef RAINBOW_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace rainbow
