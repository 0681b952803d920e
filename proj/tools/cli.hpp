// Copyright 2026 The ensemble-shapley Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ensemble_shapley::cli {

/// Runs one command line. Returns 0 on success, 1 on data/validation errors,
/// 2 on usage errors (unknown subcommand or flag, bad flag value).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ensemble_shapley::cli
