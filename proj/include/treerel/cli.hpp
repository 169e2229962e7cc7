#ifndef TREEREL_CLI_HPP
#define TREEREL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace treerel {

/// Dispatches the CLI. Exit status 0 on success, 1 on negative domain
/// verdicts (inconsistent, unsatisfiable, axiom violations, not amalgamable),
/// 2 on usage and input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace treerel

#endif
