#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nw/json.hpp"

namespace nw::cli {

enum ExitCode : int {
    kExitPass = 0,
    kExitCheckFail = 1,
    kExitSearchExhausted = 2,
    kExitUsage = 64,
    kExitData = 65,
};

/// Runs the command line `args` (without the program name). Reports go to `out`
/// (or to --out), diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"kind", "version": "v1", "payload"}.
Json make_report(const std::string& kind, Json payload);

/// False iff some object anywhere in `j` carries "pass": false.
bool all_checks_pass(const Json& j);

/// Human-readable rendering of a report, derived from its JSON.
std::string render_text(const Json& report);

struct MnDemoOptions {
    long samples = 1000;
    std::uint64_t seed = 1;
};

/// Payload of the mn-demo report: contexts, degree identities, center spot checks
/// and pass counts of the sampled ring identities.
Json mn_demo_payload(const MnDemoOptions& opts);

}  // namespace nw::cli
