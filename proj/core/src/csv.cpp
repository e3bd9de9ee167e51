#include "driftwatch/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "driftwatch/errors.hpp"
#include "driftwatch/log.hpp"

namespace driftwatch {

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  return cells;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::optional<double> parse_finite(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<std::int64_t> parse_int(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Days since 1970-01-01 for a proleptic Gregorian date (Hinnant's
// days-from-civil), so date parsing never depends on the host timezone.
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const int era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy =
      (153 * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 +
      static_cast<unsigned>(d) - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return static_cast<std::int64_t>(era) * 146097 +
         static_cast<std::int64_t>(doe) - 719468;
}

std::optional<std::int64_t> parse_timestamp(const std::string& raw) {
  if (auto i = parse_int(raw)) return i;
  const std::string s = trim(raw);
  // YYYY-MM-DD[{T| }HH:MM:SS][Z]
  int y, mo, d, h = 0, mi = 0, se = 0;
  char sep = 0;
  int n = std::sscanf(s.c_str(), "%4d-%2d-%2d%c%2d:%2d:%2d", &y, &mo, &d, &sep,
                      &h, &mi, &se);
  if (n == 3) {
    // date only; verify nothing trails
    if (s.size() != 10) return std::nullopt;
  } else if (n == 7) {
    if (sep != 'T' && sep != ' ') return std::nullopt;
    if (s.size() != 19 && !(s.size() == 20 && s.back() == 'Z'))
      return std::nullopt;
  } else {
    return std::nullopt;
  }
  if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || se > 60)
    return std::nullopt;
  return days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + se;
}

}  // namespace

LoadResult load_csv(const std::filesystem::path& path,
                    const std::string& timestamp_column,
                    const std::string& label_column) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open CSV file: " + path.string());

  std::string line;
  if (!std::getline(in, line)) throw DataError("empty CSV file: " + path.string());
  const std::vector<std::string> header = split_row(line);

  std::size_t ts_col = header.size();
  std::size_t label_col = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string name = trim(header[i]);
    if (name == timestamp_column) ts_col = i;
    if (name == label_column) label_col = i;
  }
  if (ts_col == header.size())
    throw ConfigError("timestamp column '" + timestamp_column +
                      "' not found in " + path.string());
  if (label_col == header.size())
    throw ConfigError("label column '" + label_column + "' not found in " +
                      path.string());

  // Raw rows first; column typing is decided by the first data row.
  std::vector<std::vector<std::string>> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
    std::vector<std::string> cells = split_row(line);
    if (cells.size() != header.size()) {
      throw DataError("row " + std::to_string(lineno) + " has " +
                      std::to_string(cells.size()) + " cells, expected " +
                      std::to_string(header.size()));
    }
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw DataError("CSV has no data rows: " + path.string());

  LoadResult out;
  std::vector<std::size_t> numeric_cols;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c == ts_col || c == label_col) continue;
    if (parse_finite(rows[0][c]).has_value()) {
      numeric_cols.push_back(c);
      out.dataset.feature_names.push_back(trim(header[c]));
    } else {
      out.report.dropped_columns.push_back(trim(header[c]));
    }
  }
  if (numeric_cols.empty())
    throw DataError("no numeric feature columns retained from " +
                    path.string());

  out.dataset.dim = numeric_cols.size();
  out.dataset.samples.reserve(rows.size());
  char idbuf[32];
  for (std::size_t r = 0; r < rows.size(); ++r) {
    FeatureVector fv;
    std::snprintf(idbuf, sizeof(idbuf), "row%06zu", r + 1);
    fv.sample_id = idbuf;
    auto ts = parse_timestamp(rows[r][ts_col]);
    if (!ts) {
      throw DataError("row " + std::to_string(r + 2) +
                      ": unparseable timestamp '" + rows[r][ts_col] + "'");
    }
    fv.timestamp = *ts;
    fv.family = trim(rows[r][label_col]);
    fv.values.reserve(numeric_cols.size());
    for (std::size_t c : numeric_cols) {
      auto v = parse_finite(rows[r][c]);
      if (!v) {
        throw DataError("row " + std::to_string(r + 2) + ", column '" +
                        trim(header[c]) + "': unparseable numeric cell '" +
                        rows[r][c] + "'");
      }
      fv.values.push_back(*v);
    }
    out.dataset.samples.push_back(std::move(fv));
  }

  out.dataset.family = out.dataset.samples.front().family;
  out.dataset.sort_samples();
  out.report.rows = out.dataset.samples.size();
  out.report.retained_features = out.dataset.dim;
  log::info("loaded ", path.string(), ": ", out.report.rows, " rows, ",
            out.dataset.dim, " features, ", out.report.dropped_columns.size(),
            " non-numeric columns dropped");
  return out;
}

Dataset filter_family(const Dataset& dataset, const std::string& family) {
  Dataset out;
  out.family = family;
  out.dim = dataset.dim;
  out.feature_names = dataset.feature_names;
  for (const FeatureVector& s : dataset.samples) {
    if (s.family == family) out.samples.push_back(s);
  }
  if (out.samples.empty())
    throw DataError("no samples with family '" + family + "'");
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

void write_csv(const Dataset& dataset, const std::filesystem::path& path,
               const std::string& timestamp_column,
               const std::string& label_column) {
  std::ofstream outf(path);
  if (!outf) throw DataError("cannot write CSV file: " + path.string());
  outf << "sample_id," << timestamp_column << "," << label_column;
  for (const std::string& n : dataset.feature_names) outf << "," << n;
  outf << "\n";
  for (const FeatureVector& s : dataset.samples) {
    outf << s.sample_id << "," << s.timestamp << "," << s.family;
    for (double v : s.values) outf << "," << format_double(v);
    outf << "\n";
  }
  if (!outf) throw DataError("write failed: " + path.string());
}

}  // namespace driftwatch
