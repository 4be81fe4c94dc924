#include "indukt/types.hpp"

#include <atomic>
#include <stdexcept>

namespace indukt {

namespace {
std::atomic<double> g_tolerance{1e-9};
}

double default_tolerance() { return g_tolerance.load(); }

void set_default_tolerance(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  g_tolerance.store(tol);
}

}  // namespace indukt
