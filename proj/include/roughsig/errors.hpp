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
// Exception hierarchy shared by every module.

#ifndef ROUGHSIG_ERRORS_HPP
#define ROUGHSIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace roughsig {

    struct Error : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    // Bad arguments or bad data supplied by the caller. The CLI maps these to exit code 2.
    struct InputError : Error {
        using Error::Error;
    };

    enum class ParseIssue {
        Empty,
        NonNumeric,
        NonFinite,
        DuplicateTime,
        DecreasingTime,
        Ragged,
        UnknownLabel,
        NoObservations,
    };

    // A text table or tick file could not be read. row is 1-based and counts physical lines.
    struct ParseError : InputError {
        ParseError(ParseIssue issue_, const std::string& what, long row_)
            : InputError("row " + std::to_string(row_) + ": " + what), issue{issue_}, row{row_} {}
        ParseIssue issue;
        long row;
    };

    // Something went wrong inside a computation (non-finite values, failed projections).
    struct NumericalError : Error {
        using Error::Error;
    };

    // The tensor handed to the Lyndon projection was not a Lie element.
    struct ProjectionError : NumericalError {
        ProjectionError(const std::string& worst_word_, double residual_)
            : NumericalError("tensor is not a Lie element: residual " + std::to_string(residual_) +
                             " at word \"" + worst_word_ + "\""),
              worst_word{worst_word_}, residual{residual_} {}
        std::string worst_word;
        double residual;
    };

}  // namespace roughsig

#endif  // ROUGHSIG_ERRORS_HPP
