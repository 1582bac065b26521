/*
 *   Copyright 2026 The tropsolve Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * The tropsolve command line.
 *
 *     tropsolve [--format text|json] [--timings] COMMAND ...
 *
 *     eigen FILE
 *     normal-form FILE
 *     solve component|composite FILE [--no-prune] [--max-candidates N]
 *     check component|composite FILE X1 ... Xn
 *     verify component|composite FILE [--grid LO:HI:STEP] [--no-prune]
 *                                     [--max-candidates N]
 *
 * Negative scalars may be given directly as trailing vector entries
 * (`check component a.trop 0 -1 -inf`). The default candidate cap comes from
 * TROPSOLVE_MAX_CANDIDATES when set.
 */

#ifndef TROPSOLVE_CLI_HPP
#define TROPSOLVE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace tropsolve::cli {

enum ExitCode : int {
  kOk = 0,
  kDisagreement = 1,
  kInvalidInput = 2,
  kHypothesis = 3,
  kInconsistency = 4,
  kCapExceeded = 5,
};

/// Runs one command; `args` excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropsolve::cli

#endif  // TROPSOLVE_CLI_HPP
