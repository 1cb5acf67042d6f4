// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#include "input.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <json.hpp>

#include "lbo/minkowski.hpp"

namespace lbo::cli {
namespace {

using Json = nlohmann::json;

enum class ParseState
{
    complete,
    incomplete,
    invalid,
};

ParseState probe(std::string const& text)
{
    try
    {
        [[maybe_unused]] Json const j = Json::parse(text);
        return ParseState::complete;
    }
    catch (Json::parse_error const& e)
    {
        if (std::string_view(e.what()).find("unexpected end of input")
            != std::string_view::npos)
        {
            return ParseState::incomplete;
        }
        return ParseState::invalid;
    }
    catch (Json::exception const&)
    {
        return ParseState::complete;
    }
}

bool blank(std::string const& s)
{
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

template<std::size_t N>
Eigen::Matrix<double, N, 1> read_reals(Json const& j, char const* key)
{
    if (!j.is_array() || j.size() != N)
    {
        throw std::invalid_argument(std::string("\"") + key
                                    + "\" must be an array of "
                                    + std::to_string(N) + " reals");
    }
    Eigen::Matrix<double, N, 1> v;
    for (std::size_t k = 0; k < N; ++k)
    {
        if (!j[k].is_number())
        {
            throw std::invalid_argument(std::string("\"") + key
                                        + "\" entries must be numbers");
        }
        v[k] = j[k].get<double>();
        if (!std::isfinite(v[k]))
        {
            throw std::invalid_argument(std::string("\"") + key
                                        + "\" entries must be finite");
        }
    }
    return v;
}

}  // namespace

InputRecord parse_record(std::string const& text, std::size_t index)
{
    InputRecord r;
    r.index = index;
    Json j;
    try
    {
        j = Json::parse(text);
    }
    catch (Json::exception const& e)
    {
        r.error = std::string("invalid JSON: ") + e.what();
        return r;
    }
    try
    {
        if (!j.is_object())
            throw std::invalid_argument("record must be a JSON object");
        if (j.contains("id"))
        {
            if (!j["id"].is_string())
                throw std::invalid_argument("\"id\" must be a string");
            r.id = j["id"].get<std::string>();
        }
        bool const has_c = j.contains("c");
        bool const has_xy = j.contains("x") || j.contains("y");
        if (has_c == has_xy)
        {
            throw std::invalid_argument(
                "record needs exactly one of \"c\" or \"x\"/\"y\"");
        }
        if (has_c)
        {
            r.omega = Bivector(read_reals<6>(j["c"], "c"));
        }
        else
        {
            if (!j.contains("x") || !j.contains("y"))
                throw std::invalid_argument("\"x\" and \"y\" come together");
            r.omega = wedge(read_reals<4>(j["x"], "x"),
                            read_reals<4>(j["y"], "y"));
        }
    }
    catch (std::exception const& e)
    {
        r.error = e.what();
    }
    return r;
}

bool RecordReader::next(InputRecord& record)
{
    std::string buffer;
    std::string line;
    auto fetch = [&]() {
        if (has_pending_)
        {
            line = std::move(pending_line_);
            has_pending_ = false;
            return true;
        }
        return static_cast<bool>(std::getline(in_, line));
    };

    while (fetch())
    {
        if (buffer.empty())
        {
            if (blank(line))
                continue;
            buffer = line;
        }
        else
        {
            // A self-contained line after a truncated value starts a new
            // record; the truncated one is reported on its own.
            auto const first = line.find_first_not_of(" \t\r");
            if (first != std::string::npos && line[first] == '{'
                && probe(line) == ParseState::complete)
            {
                pending_line_ = std::move(line);
                has_pending_ = true;
                record = parse_record(buffer, index_++);
                return true;
            }
            buffer += '\n';
            buffer += line;
        }
        if (probe(buffer) != ParseState::incomplete)
        {
            record = parse_record(buffer, index_++);
            return true;
        }
    }
    if (!buffer.empty())
    {
        record = parse_record(buffer, index_++);
        return true;
    }
    return false;
}

}  // namespace lbo::cli
