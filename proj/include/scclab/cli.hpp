#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scclab {

/// Runs the scc-lab command line (args excludes the program name). Results go
/// to out, diagnostics to err. Returns 0 on success, 1 on invalid input or a
/// failed verification, 2 when a resource limit is hit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scclab
