#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kdw::cli {

/// Runs the command line; returns 0 on success, 2 on invalid input, 1 on
/// internal failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests: args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3,1,-3" -> {3, 1, -3}; throws kdw::Error(InvalidArgument) when malformed.
std::vector<std::int64_t> parse_int_list(const std::string& text);

}  // namespace kdw::cli
