/*
   Copyright 2026 The orefrob Authors

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

#ifndef OREFROB_CLI_HPP
#define OREFROB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "orefrob/decide.hpp"

namespace orefrob {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_validation = 3, exit_budget = 4 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string format_report(const OreExtension& ext, const AnalysisReport& report, bool witness);

std::string format_tensor(const Algebra& a, const TensorSquareElement& p);

}  // namespace orefrob

#endif  // OREFROB_CLI_HPP
