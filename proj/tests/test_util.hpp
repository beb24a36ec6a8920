#pragma once

#include <string>

#include "cwc/bench.hpp"

namespace test {

inline std::string read_golden(const std::string& name)
{
    return cwc::read_file(std::filesystem::path(CWC_GOLDEN_DIR) / name);
}

inline std::string trim(std::string s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return s;
}

} // namespace test
