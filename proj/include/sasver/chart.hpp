#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace sasver {

using Point = Eigen::VectorXd;

// A single global coordinate chart: an ordered list of coordinate names.
struct Chart {
  std::vector<std::string> vars;

  int dim() const { return static_cast<int>(vars.size()); }
  // Returns -1 when the name is not a coordinate of this chart.
  int index_of(const std::string& name) const;
};

}  // namespace sasver
