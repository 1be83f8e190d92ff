#include "qtop/weight.hpp"

namespace qtop {

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

}  // namespace qtop
