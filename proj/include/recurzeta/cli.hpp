// Copyright 2026 the recurzeta authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace recurzeta {

struct RecurrenceSpec;

/// Builtin registry for the CLI: fibonacci, lucas, tribonacci,
/// nbonacci(N <= 12), geometric(c, b) for a_n = c b^n.
RecurrenceSpec resolve_builtin(const std::string& name);

/// Exact decimal-string parser ("1.5", "-3e-2", ...) -> rational.
mpq_class parse_decimal(const std::string& text);

/// Entry point shared by the binary and the tests. Returns the exit code:
/// 0 success, 2 hypothesis failure, 1 other errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace recurzeta
