// Copyright 2026 The dmix Authors. All Rights Reserved.
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

namespace dmix {

inline constexpr const char* kLogEnvVar = "DECOUPLED_MIX_LOG";

// Sets the global spdlog level from DECOUPLED_MIX_LOG (trace, debug, info,
// warn, error, critical, off). Defaults to warn when unset or unrecognised.
void init_logging();

}  // namespace dmix
