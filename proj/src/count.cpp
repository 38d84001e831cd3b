#include <algorithm>

#include "pentagon/count.hpp"

namespace pentagon {

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace pentagon
