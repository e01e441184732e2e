/* Copyright 2026 The roughsig Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Batch command-line surface.

#ifndef ROUGHSIG_CLI_CLI_HPP
#define ROUGHSIG_CLI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace roughsig::cli {

    enum ExitCode : int {
        kOk = 0,
        kInternalFailure = 1,
        kBadInput = 2,
    };

    /* Runs one job. args excludes the program name, e.g. {"sig", "--depth", "2", "--input", "x.csv"}.
     * The JSON report goes to --output when given and to out otherwise; diagnostics go to err.
     */
    int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

    // The category labels the insider demo expects, in letter order.
    const std::vector<std::string>& insider_labels();

}  // namespace roughsig::cli

#endif  // ROUGHSIG_CLI_CLI_HPP
