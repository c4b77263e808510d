#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gk {

// Full command-line driver; args exclude the program name.  Returns the
// process exit code: 0 accept/success, 1 principled reject, 2 malformed
// input, capacity or search-bound exhaustion.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gk
