#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "fovisc/models.hpp"

namespace fovisc {

/// Formats with 12 significant digits ("%.12g").
std::string format_number(double v);

/// Reads a two-column `time_s,value` CSV with a header row. Time stamps must
/// be strictly increasing and uniformly spaced (relative jitter <= 1e-6);
/// t_samp is their mean spacing. Throws DomainError on malformed input.
TimeSeries read_series_csv(std::istream& in);
TimeSeries read_series_csv(const std::filesystem::path& path);

void write_series_csv(std::ostream& out, const TimeSeries& series,
                      const std::string& value_column = "value");

}  // namespace fovisc
