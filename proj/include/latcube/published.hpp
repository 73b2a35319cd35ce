#pragma once

// Previously published values of NC(n), n = 1, 2, ... Two lists circulate and
// they disagree from n = 15 on; neither is used as ground truth beyond n = 14.

#include <array>
#include <span>

#include "latcube/arith.hpp"

namespace latcube::published {

/// The 100-term list given in the article body.
std::span<const i64> text_sequence();

/// The 50-term list given as output of the accompanying Maple worksheet.
std::span<const i64> worksheet_sequence();

}  // namespace latcube::published
