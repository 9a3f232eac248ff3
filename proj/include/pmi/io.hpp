// Copyright 2026 The Authors.
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

#ifndef PMI_IO_HPP
#define PMI_IO_HPP

#include <string>
#include <string_view>

#include "pmi/framework.hpp"
#include "pmi/instance.hpp"

namespace pmi {

// Instance and result files are JSON documents. Every rational is a string
// "num/den" or "num"; half-spaces are {gradient, constant, sense: "ge"} and
// mean gradient·λ + constant >= 0. Unknown keys are rejected.

/// Throws InputError naming the byte offset or the JSON path at fault.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

ApproximationResult parse_result(std::string_view text);
std::string serialize_result(const ApproximationResult& result);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace pmi

#endif  // PMI_IO_HPP
