#pragma once

namespace poslab {

// Full command-line surface of positroid-lab.  Returns the process exit
// code: 0 success (or smooth), 1 singular verdict, 2 unusable input,
// 3 invariant breach, 4 guard refusal.
int run_cli(int argc, const char* const* argv);

}  // namespace poslab
