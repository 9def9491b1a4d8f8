#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cassoc::cli {

// exit codes
constexpr int ok = 0;
constexpr int check_failed = 1;
constexpr int usage_error = 2;

// default directory for output files when --output is not given
constexpr char const *output_dir_env = "CASSOC_OUTPUT_DIR";

// args exclude the program name
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);
int run(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace cassoc::cli
