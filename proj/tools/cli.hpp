#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace urysohn::cli {

  // Exit codes: 0 success or the property holds, 1 the property fails,
  // 2 invalid input, 3 internal error or contradicted theorem.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace urysohn::cli
