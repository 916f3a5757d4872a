// Copyright 2026 The toolfuzz Authors
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

#include <cstddef>
#include <string>
#include <string_view>

namespace toolfuzz::utf8 {

// Decodes UTF-8. Invalid sequences throw Error{MalformedInput}.
std::u32string decode(std::string_view text);
std::string encode(std::u32string_view code_points);

// Number of code points in valid UTF-8.
std::size_t length(std::string_view text);

bool is_combining(char32_t cp);

// Largest cut <= budget (in code points) that does not separate a base
// character from the combining marks / joiners that follow it.
std::size_t safe_cut(std::u32string_view text, std::size_t budget);

}  // namespace toolfuzz::utf8
