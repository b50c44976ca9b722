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

// primequot command-line driver.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "primequot/pipeline.hpp"

using namespace primequot;

namespace {

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Untwisting and ideal-control verification for finite group algebras"};
    std::string command, instance_file, corpus, json_path, oracle;
    std::uint64_t seed = 0;
    bool summary = false;
    app.add_option("command", command, "analyze | untwist | twist-extract | peirce | verify-all")
        ->required()
        ->check(CLI::IsMember({"analyze", "untwist", "twist-extract", "peirce", "verify-all"}));
    auto* inst = app.add_option("--instance", instance_file, "instance JSON file");
    auto* corp = app.add_option("--corpus", corpus, "built-in instance name (verify-all: comma-separated list)");
    inst->excludes(corp);
    auto* seed_opt = app.add_option("--seed", seed, "seed overriding the instance seed");
    app.add_option("--json", json_path, "write the JSON report to this path");
    app.add_option("--oracle", oracle, "oracle family: all, none, radical, prime, morita, matrix-control")
        ->check(CLI::IsMember({"all", "none", "radical", "prime", "morita", "matrix-control"}));
    app.add_flag("--summary", summary, "print a table instead of the JSON report");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    const Command cmd = *parse_command(command);
    RunOptions opt;
    if (*seed_opt) opt.seed = seed;
    opt.oracle = oracle;

    std::vector<InstanceSpec> specs;
    try {
        if (*inst) {
            std::ifstream in(instance_file, std::ios::binary);
            if (!in) {
                std::cerr << "cannot read " << instance_file << "\n";
                return kExitUsage;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            specs.push_back(parse_instance_text(buf.str()));
        } else if (*corp) {
            for (const auto& n : split_names(corpus)) specs.push_back(corpus_instance(n));
        } else if (cmd == Command::verify_all) {
            for (const auto& n : corpus_names()) specs.push_back(corpus_instance(n));
        }
    } catch (const InstanceError& e) {
        std::cerr << "instance error at " << e.what() << "\n";
        return kExitUsage;
    }
    if (cmd != Command::verify_all && specs.size() != 1) {
        std::cerr << command << " needs exactly one instance (--instance FILE or --corpus NAME)\n";
        return kExitUsage;
    }

    CommandResult result;
    try {
        result = run_command(cmd, specs, opt);
    } catch (const InstanceError& e) {
        std::cerr << "instance error at " << e.what() << "\n";
        return kExitUsage;
    }
    const std::string text = result.report.dump(2) + "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return kExitUsage;
        }
        out << text;
    }
    if (summary) std::cout << summary_table(result);
    else if (json_path.empty()) std::cout << text;
    return result.exit_code;
}
