#pragma once

#include <hexcount/geometry.hpp>

#include <nlohmann/json.hpp>

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hexcount::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

// Parses argv (argv[0] is the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// HEXCOUNT_THREADS if set (must be a positive integer), else the hardware count.
// Throws std::invalid_argument on a malformed value.
std::size_t thread_cap();

// Runs job(0..count-1) on up to `threads` workers; results land at their own index.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& job);

// One grid case of `verify`. When fault is set the lower half's first axis
// weight is flipped before counting, which must break the factorization.
nlohmann::json verify_case(const geometry::HexSpec& spec, bool fault);

}  // namespace hexcount::cli
