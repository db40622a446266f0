#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace selfext {

// Exit status: 0 success, 1 UNKNOWN or mismatch, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string default_data_dir();

} // namespace selfext
