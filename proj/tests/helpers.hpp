#pragma once
// Shared test plumbing: fixture loading and profile literals.

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "mwr/io.hpp"

namespace mwrt {

inline mwr::ParsedGame fixture(const std::string& name) {
    return mwr::load_game(std::string(MWR_FIXTURES_DIR) + "/" + name);
}

inline std::string fixture_text(const std::string& name) {
    std::ifstream in(std::string(MWR_FIXTURES_DIR) + "/" + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline mwr::CostProfile P(std::initializer_list<std::uint64_t> xs) {
    mwr::CostProfile p;
    for (std::uint64_t x : xs) p.c.push_back(mwr::ExtNat(x));
    return p;
}

inline mwr::CostProfile TOP(int d) { return mwr::CostProfile::top(d); }

}  // namespace mwrt
