// Command line front end of the conflux tool.
//
// Exit status: 0 success or property holds, 1 property fails, 2 usage or
// document error, 3 search budget exhausted.
#pragma once

#include <ostream>

namespace conflux::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conflux::cli
