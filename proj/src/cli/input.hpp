// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>

#include "lbo/wedge.hpp"

namespace lbo::cli {

struct InputRecord
{
    std::size_t index = 0;
    std::optional<std::string> id;
    Bivector omega;
    std::string error;  //!< non-empty for malformed input

    bool ok() const { return error.empty(); }
};

/*!
 * Parses {"c": [6 reals]} or {"x": [4 reals], "y": [4 reals]} with an
 * optional string "id".
 */
InputRecord parse_record(std::string const& text, std::size_t index);

/*!
 * Streams records from NDJSON or from JSON values spread over several
 * lines. Blank lines are skipped.
 */
class RecordReader
{
  public:
    explicit RecordReader(std::istream& in) : in_(in) {}

    //! False at end of input.
    bool next(InputRecord& record);

  private:
    std::istream& in_;
    std::string pending_line_;
    bool has_pending_ = false;
    std::size_t index_ = 0;
};

}  // namespace lbo::cli
