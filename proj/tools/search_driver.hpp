#pragma once

#include "ipset/search.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>

namespace ipset::cli {

enum class RecordFormat { Json, Matrix };

struct SearchRun {
    SearchConfig config;
    std::size_t jobs = 1;
    std::optional<std::filesystem::path> checkpoint;
    bool resume = false;
    RecordFormat format = RecordFormat::Json;
};

struct SearchSummary {
    std::size_t results = 0;
    std::size_t keys = 0;
    std::size_t skipped = 0;
};

/// Diameters are handed to `jobs` workers; finished diameters are written in
/// increasing order, so output does not depend on the job count. For each
/// diameter the records go out before its checkpoint keys.
SearchSummary run_search(const SearchRun& run, std::ostream& out);

} // namespace ipset::cli
