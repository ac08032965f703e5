#include "netcert/config.hpp"

#include <atomic>

namespace netcert {

namespace {
std::atomic<double> g_tolerance{1e-9};
}

double tolerance() { return g_tolerance.load(); }

void set_tolerance(double tol) {
  if (!(tol > 0)) throw argument_error("tolerance must be positive");
  g_tolerance.store(tol);
}

}  // namespace netcert
