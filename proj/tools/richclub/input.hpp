#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "richclub/characteristic.hpp"
#include "richclub/types.hpp"

namespace richclub {
class Graph;
}

namespace richclub::cli {

/// Reads "label<TAB>0|1" lines. Every graph node must appear exactly once.
Characteristic read_characteristic(std::istream& in, const Graph& g,
                                   const std::string& source = {});

/// Whitespace-separated integers; '#' starts a comment running to end of line.
std::vector<std::int64_t> read_degree_list(std::istream& in, const std::string& source = {});
std::vector<std::int64_t> parse_degree_list(const std::string& text);

/// "0,2,5" -> {0, 2, 5}.
std::vector<Count> parse_count_list(const std::string& text);

}  // namespace richclub::cli
