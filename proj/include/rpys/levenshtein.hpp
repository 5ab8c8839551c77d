#pragma once

#include <cstddef>
#include <string_view>

namespace rpys {

/// Unit-cost edit distance (insert, delete, substitute), two-row DP.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

/// Edit distance if it is <= max_distance, otherwise any value
/// > max_distance. Only the diagonal band of width 2*max_distance+1 is
/// evaluated and the scan stops once a whole row exceeds the bound.
std::size_t levenshtein_bounded(std::u32string_view a, std::u32string_view b, std::size_t max_distance);

}  // namespace rpys
