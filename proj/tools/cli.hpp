#ifndef SPECGRAPH_CLI_HPP
#define SPECGRAPH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace specgraph::cli {

// Exit codes: 0 success, 1 verification failure (identity mismatch, mate
// found, distinctness broken), 2 usage error, 3 resource-ceiling refusal.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace specgraph::cli

#endif
