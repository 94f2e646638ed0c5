#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genus {

// Runs one CLI invocation. args excludes the program name. All regular
// output goes to out, diagnostics to err. Returns the process exit code:
//   0  affirmative verdict / success
//   1  negative verdict (no essential map, not realizable, inconsistent,
//      not equivalent, no embedding)
//   2  usage or parse error
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace genus
