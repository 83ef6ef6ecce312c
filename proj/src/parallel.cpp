#include "esakia/parallel/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace esakia {

int sweep_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace esakia
