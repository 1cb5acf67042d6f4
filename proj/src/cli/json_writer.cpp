// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#include "json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace lbo::cli {

std::string format_real(double x)
{
    if (!std::isfinite(x))
        return "null";
    if (x == 0.0)
        x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s(buf);
    // Keep reals distinguishable from integers on re-read.
    if (s.find_first_of(".eE") == std::string::npos)
        s += ".0";
    return s;
}

void write_json(std::ostream& os, Json const& value)
{
    switch (value.type())
    {
        case Json::value_t::object:
        {
            os << '{';
            bool first = true;
            for (auto it = value.begin(); it != value.end(); ++it)
            {
                if (!first)
                    os << ',';
                first = false;
                os << Json(it.key()).dump() << ':';
                write_json(os, it.value());
            }
            os << '}';
            break;
        }
        case Json::value_t::array:
        {
            os << '[';
            bool first = true;
            for (auto const& v : value)
            {
                if (!first)
                    os << ',';
                first = false;
                write_json(os, v);
            }
            os << ']';
            break;
        }
        case Json::value_t::number_float:
            os << format_real(value.get<double>());
            break;
        default:
            os << value.dump();
            break;
    }
}

std::string to_json_string(Json const& value)
{
    std::ostringstream os;
    write_json(os, value);
    return os.str();
}

}  // namespace lbo::cli
