#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "segre/ideal_io.hpp"
#include "segre/segre.hpp"

namespace segre::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kInternalFailure = 1,
  kInvalidInput = 2,
  kResourceLimit = 3,
  kInconsistentRuns = 4,
};

using Json = nlohmann::ordered_json;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Errors are also written to `out` as
/// {"error": {"kind": ..., "message": ...}}. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// JSON report of a Segre computation. chern_fulton and euler are included
/// when `with_chern_fulton` is set. Timings live under "timings" only.
Json segre_report(const std::string& command, const IdealFile& input, const SegreResult& result,
                  bool with_chern_fulton, unsigned repeats, double total_seconds);

/// Copy of a report without its "timings" block, for byte comparisons.
Json without_timings(Json report);

}  // namespace segre::cli
