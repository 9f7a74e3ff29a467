#include "fovisc/series_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "fovisc/error.hpp"

namespace fovisc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_field(std::string_view s, std::size_t line) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw DomainError("line " + std::to_string(line) + ": not a number: '" +
                      std::string(s) + "'");
  return v;
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

TimeSeries read_series_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("empty series file");
  const auto header = trim(line);
  const auto comma = header.find(',');
  if (comma == std::string_view::npos || trim(header.substr(0, comma)) != "time_s")
    throw DomainError("series header must be 'time_s,value'");

  TimeSeries ts;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const auto row = trim(line);
    if (row.empty()) continue;
    const auto c = row.find(',');
    if (c == std::string_view::npos || row.find(',', c + 1) != std::string_view::npos)
      throw DomainError("line " + std::to_string(lineno) + ": expected two columns");
    ts.time.push_back(parse_field(row.substr(0, c), lineno));
    ts.value.push_back(parse_field(row.substr(c + 1), lineno));
  }
  if (ts.time.size() < 2) throw DomainError("series needs at least two rows");

  const double span = ts.time.back() - ts.time.front();
  ts.t_samp = span / static_cast<double>(ts.time.size() - 1);
  if (!(ts.t_samp > 0.0)) throw DomainError("time stamps must be strictly increasing");
  for (std::size_t i = 1; i < ts.time.size(); ++i) {
    const double dt = ts.time[i] - ts.time[i - 1];
    if (!(dt > 0.0)) throw DomainError("time stamps must be strictly increasing");
    if (std::abs(dt - ts.t_samp) > 1e-6 * ts.t_samp + 1e-12 * std::abs(ts.time[i]))
      throw DomainError("time stamps must be uniformly spaced");
  }
  return ts;
}

TimeSeries read_series_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path.string());
  return read_series_csv(in);
}

void write_series_csv(std::ostream& out, const TimeSeries& series,
                      const std::string& value_column) {
  out << "time_s," << value_column << '\n';
  for (std::size_t i = 0; i < series.size(); ++i)
    out << format_number(series.time[i]) << ',' << format_number(series.value[i]) << '\n';
}

}  // namespace fovisc
