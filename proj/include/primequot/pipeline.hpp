/*
   Copyright 2026 The primequot Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primequot/checks.hpp"
#include "primequot/instance.hpp"

namespace primequot {

enum class Command { analyze, untwist, twist_extract, peirce, verify_all };

/// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitVerification = 2, kExitObstruction = 3, kExitHypothesis = 4 };

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command c);

struct RunOptions {
    std::optional<std::uint64_t> seed;  // overrides the instance seed
    std::string oracle;                 // "", "all", "none", "radical", "prime", "morita", "matrix-control"
};

/// One pipeline stage: status is pass, fail, obstruction, hypothesis or skipped.
struct StageResult {
    std::string name;
    std::string status;
    Json data = Json::object();
    CheckList checks;
};

struct InstanceRun {
    InstanceSpec spec;
    std::uint64_t seed = 0;
    std::vector<StageResult> stages;
    std::string outcome;  // pass, fail, obstruction, hypothesis, expected-obstruction
    int exit_code = kExitOk;

    Json to_json() const;
};

InstanceRun run_instance(Command cmd, const InstanceSpec& spec, const RunOptions& opt);

/// Instance-independent oracle cross-checks (Morita transfer, matrix control).
StageResult run_global_oracles(const RunOptions& opt);

struct CommandResult {
    Json report;
    int exit_code = kExitOk;
    std::vector<InstanceRun> runs;
    std::optional<StageResult> global;
};
/// verify-all accepts any number of instances (none is a successful no-op);
/// the other commands expect exactly one.
CommandResult run_command(Command cmd, const std::vector<InstanceSpec>& specs, const RunOptions& opt);

/// Plain-text table of stage outcomes.
std::string summary_table(const CommandResult& r);

/// Library and report format versions.
Json versions();

}  // namespace primequot
