#include "sasver/chart.hpp"

namespace sasver {

int Chart::index_of(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (vars[i] == name) return i;
  return -1;
}

}  // namespace sasver
