// Copyright 2026 The Veilbreak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VEILBREAK_LOGGING_H_
#define VEILBREAK_LOGGING_H_

#include <string_view>

namespace veilbreak::log {

// Reads VEILBREAK_LOG (trace|debug|info|warn|error|off, default warn).
void ConfigureFromEnv();

void Debug(std::string_view message);
void Info(std::string_view message);
void Warn(std::string_view message);

}  // namespace veilbreak::log

#endif  // VEILBREAK_LOGGING_H_
