// Copyright 2026 The snakelp Authors
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

#include <string_view>

namespace snakelp {

/// Diagnostic verbosity, selected by the SNAKELP_LOG environment variable
/// ("error", "warn", "info", "debug"); defaults to warn.  All messages go
/// to standard error.
enum class LogLevel { error = 0, warn = 1, info = 2, debug = 3 };

LogLevel log_threshold();
bool log_enabled(LogLevel level);
void log_message(LogLevel level, std::string_view message);

inline void log_error(std::string_view m) { log_message(LogLevel::error, m); }
inline void log_warn(std::string_view m) { log_message(LogLevel::warn, m); }
inline void log_info(std::string_view m) { log_message(LogLevel::info, m); }
inline void log_debug(std::string_view m) { log_message(LogLevel::debug, m); }

}  // namespace snakelp
