#pragma once

#include <stdexcept>
#include <string>

namespace netcert {

// Global numerical tolerance used by invariant checks (default 1e-9).
// The CLI wires --tol / NETCERT_TOL into this.
double tolerance();
void set_tolerance(double tol);

// Error taxonomy.  The CLI maps these onto its exit codes.
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct schema_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct scenario_mismatch_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct unsupported_topology_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an enumeration oracle exceeds its search budget; carries the
// best value found so far.
struct resource_error : std::runtime_error {
  double partial_maximum;
  explicit resource_error(const std::string& what, double partial)
      : std::runtime_error(what), partial_maximum(partial) {}
};

}  // namespace netcert
