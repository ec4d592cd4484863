#ifndef EBC_CLI_HPP
#define EBC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ebc {

/// Run one CLI invocation. args excludes the program name. JSON goes to out,
/// nothing else is written. Returns the process exit code: 0 success,
/// 1 domain error ({"error", "clause"}), 2 parse/usage error ({"error",
/// "pos"?}).
int dispatch(const std::vector<std::string>& args, std::ostream& out);

} // namespace ebc

#endif
