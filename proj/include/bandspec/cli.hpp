#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bandspec {

/// Entry point behind the bandspec binary. Subcommands: validate,
/// spectral, inverse, roundtrip, lanczos, householder, equivalence, toda.
/// Returns 0 on success, 1 on validation failure, 2 on numerical error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace bandspec
