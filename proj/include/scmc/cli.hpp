#pragma once

namespace scmc {

// exit codes: 0 success, 2 bad input, 3 numerical failure
int run_cli(int argc, char** argv);

}  // namespace scmc
