// Copyright 2026 The qlb authors
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

#include <stdexcept>
#include <string>

namespace qlb {

/// A backend was asked to do something its descriptor says it cannot do
/// (e.g. batch submission to a non-batching backend). Maps to exit code 3
/// in the CLI.
class capability_error : public std::runtime_error {
public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent data in a file or payload. Maps to exit code 4
/// in the CLI.
class data_error : public std::runtime_error {
public:
  explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

/// Command line contract violation beyond what the parser catches.
/// Maps to exit code 2 in the CLI.
class usage_error : public std::runtime_error {
public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qlb
