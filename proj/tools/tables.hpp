#pragma once

#include <string>

#include "nmdec/ewds.hpp"

// Text renderings of the worked tables for the shipped fixtures.
namespace nmdec::tables {

// TV, VT* and TT of fix_a.tv; columns are 0-based.
std::string fig_a(TtMode mode = TtMode::Strict);
// TBase, TBaseAddr, TVP, VT*' and TTP of fix_b.tv.
std::string fig_b(TtMode mode = TtMode::Strict);
// CC, VBase, FVV, FTT, TAddr, IIBND, IITAddr, implicit TVP, TVPP and the
// implicit VT* with the branch taken.
std::string fig_b_opt(TtMode mode = TtMode::Strict);

std::string render(const std::string& name, TtMode mode);  // throws Io for unknown names

}  // namespace nmdec::tables
