#pragma once

#include <string>

#include "dirac_edge/grid.hpp"

namespace dirac_edge {

// Raw little-endian float64 snapshot, [re b1, im b1, re b2, im b2] per grid
// point in x1-fastest order, with a JSON sidecar holding bounds, sizes, time
// and the geometry tag. Returns the path of the .bin file.
std::string write_snapshot(const std::string& dir, const std::string& tag,
                           const SpinorField& f, double t,
                           const std::string& geometry_tag);

struct Snapshot {
  SpinorField field;
  double t = 0.0;
  std::string geometry_tag;
};

Snapshot read_snapshot(const std::string& bin_path);

}  // namespace dirac_edge
