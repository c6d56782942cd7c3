// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace qpenc {

inline constexpr const char* kVersion = "qpenc 0.1.0";

}  // namespace qpenc
