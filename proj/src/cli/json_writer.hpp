// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

namespace lbo::cli {

using Json = nlohmann::json;

/*!
 * Compact serialization with sorted keys and reals printed as %.17g.
 * Non-finite reals are written as null.
 */
void write_json(std::ostream& os, Json const& value);
std::string to_json_string(Json const& value);

//! %.17g, or "null" when not finite.
std::string format_real(double x);

}  // namespace lbo::cli
