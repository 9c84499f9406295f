#ifndef LIERED_CLI_HPP
#define LIERED_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace liered {
namespace cli {

/// Runs one CLI command. Exit codes: 0 success (or positive verdict),
/// 1 negative mathematical verdict, 2 usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cli
}  // namespace liered

#endif
