/*
   Copyright 2026 The scatplane authors

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

#ifndef SCATPLANE_CLI_HPP
#define SCATPLANE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace scatplane::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Dispatches one command line (without the program name) and writes the JSON
/// report. Exit code 0 on success/pass, 1 on verification failure, 2 on usage,
/// spec or guard errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scatplane::cli

#endif
