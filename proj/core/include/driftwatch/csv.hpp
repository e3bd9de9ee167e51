#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "driftwatch/types.hpp"

namespace driftwatch {

/// What the loader dropped or rejected, emitted as JSON next to results.
struct LoadReport {
  std::vector<std::string> dropped_columns;  // non-numeric feature columns
  std::size_t rows = 0;
  std::size_t retained_features = 0;
};

struct LoadResult {
  Dataset dataset;
  LoadReport report;
};

/// Loads a UTF-8, header-row CSV with one sample per row. The timestamp
/// column must parse as integer seconds or an ISO date (YYYY-MM-DD, with
/// optional THH:MM:SS / " HH:MM:SS" and trailing Z). Every other column
/// except the label column is a feature candidate; columns whose first data
/// cell is not a finite number are dropped silently and recorded in the
/// report. A non-numeric cell in a retained column is a hard error naming
/// row and column.
LoadResult load_csv(const std::filesystem::path& path,
                    const std::string& timestamp_column,
                    const std::string& label_column);

/// Subset of the rows carrying the given family label, order preserved.
/// A multi-family file is loaded once and filtered per family.
Dataset filter_family(const Dataset& dataset, const std::string& family);

/// Writes a dataset in the same format load_csv reads: sample_id, the
/// timestamp column, the label column, then one column per feature.
/// Floats are written with shortest round-trip precision, so
/// write -> load_csv reproduces values bit-exactly.
void write_csv(const Dataset& dataset, const std::filesystem::path& path,
               const std::string& timestamp_column = "timestamp",
               const std::string& label_column = "family");

}  // namespace driftwatch
