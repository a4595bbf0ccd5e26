#include "gaplab/records.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <tuple>

#include <fmt/format.h>
#include <json.hpp>

#include "csv_util.hpp"
#include "gaplab/error.hpp"

namespace gaplab {

using nlohmann::ordered_json;

std::string to_json_line(const RunRecord& record, bool include_wall_time) {
  ordered_json j;
  j["model"] = record.model;
  j["params"] = record.params;
  j["n"] = record.n;
  j["instance"] = record.instance_id;
  j["seed"] = record.seed;
  j["status"] = record.status;
  j["delta"] = record.delta;
  j["inverse_delta"] = record.inverse_delta;
  j["s_star"] = record.s_star;
  j["lambda0"] = record.lambda0;
  j["lambda1"] = record.lambda1;
  j["solver"] = record.solver;
  if (!record.ok()) j["error"] = record.message;
  if (include_wall_time && record.wall_time) j["wall_time"] = *record.wall_time;
  return j.dump();
}

RunRecord parse_json_line(std::string_view line) {
  try {
    const ordered_json j = ordered_json::parse(line);
    RunRecord r;
    r.model = j.at("model").get<std::string>();
    r.params = j.at("params").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.instance_id = j.at("instance").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.status = j.at("status").get<std::string>();
    r.delta = j.at("delta").get<double>();
    r.inverse_delta = j.at("inverse_delta").get<double>();
    r.s_star = j.at("s_star").get<double>();
    r.lambda0 = j.at("lambda0").get<double>();
    r.lambda1 = j.at("lambda1").get<double>();
    r.solver = j.at("solver").get<std::string>();
    if (j.contains("error")) r.message = j.at("error").get<std::string>();
    if (j.contains("wall_time")) r.wall_time = j.at("wall_time").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::io, fmt::format("malformed record: {}", e.what()));
  }
}

std::vector<RunRecord> read_records(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  std::vector<RunRecord> records;
  records.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      records.push_back(parse_json_line(lines[i]));
    } catch (const Error&) {
      if (i + 1 == lines.size()) break;
      throw;
    }
  }
  return records;
}

std::vector<RunRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::io, "cannot open records " + path.string());
  return read_records(in);
}

void sort_records(std::vector<RunRecord>& records) {
  std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tie(a.n, a.instance_id) < std::tie(b.n, b.instance_id);
  });
}

std::vector<SizeSummary> summarize(std::span<const RunRecord> records) {
  require(!records.empty(), ErrorKind::empty_input, "summarize: no records");
  std::map<std::size_t, std::vector<double>> by_size;
  std::map<std::size_t, std::size_t> errors;
  for (const RunRecord& r : records) {
    if (r.ok()) by_size[r.n].push_back(r.inverse_delta);
    else {
      ++errors[r.n];
      by_size.try_emplace(r.n);
    }
  }

  std::vector<SizeSummary> summaries;
  for (const auto& [n, values] : by_size) {
    require(!values.empty(), ErrorKind::empty_input,
            fmt::format("summarize: size {} has only error rows", n));
    SizeSummary s;
    s.n = n;
    s.count = values.size();
    s.errors = errors.contains(n) ? errors.at(n) : 0;
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(s.count);
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.std_dev = s.count > 1 ? std::sqrt(sq / static_cast<double>(s.count - 1)) : 0.0;
    s.std_error = s.std_dev / std::sqrt(static_cast<double>(s.count));
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.min = *lo;
    s.max = *hi;
    summaries.push_back(s);
  }

  const std::vector<double>& largest = by_size.rbegin()->second;
  summaries.back().histogram = value_histogram(largest, freedman_diaconis_width(largest));
  return summaries;
}

std::vector<ScalingPoint> scaling_points(std::span<const SizeSummary> summaries) {
  std::vector<ScalingPoint> points;
  points.reserve(summaries.size());
  for (const SizeSummary& s : summaries) points.push_back({static_cast<double>(s.n), s.mean});
  return points;
}

void write_summary_csv(std::ostream& out, std::span<const SizeSummary> summaries) {
  out << "n,mean,std,count,stderr,min,max,errors\n";
  for (const SizeSummary& s : summaries)
    out << fmt::format("{},{:.17g},{:.17g},{},{:.17g},{:.17g},{:.17g},{}\n", s.n, s.mean,
                       s.std_dev, s.count, s.std_error, s.min, s.max, s.errors);
}

std::vector<SizeSummary> read_summary_csv(std::istream& in) {
  std::vector<SizeSummary> summaries;
  for (const auto& row : detail::read_csv_rows(in, "n,mean,std,count,stderr,min,max,errors")) {
    SizeSummary s;
    s.n = static_cast<std::size_t>(detail::parse_number(row[0]));
    s.mean = detail::parse_number(row[1]);
    s.std_dev = detail::parse_number(row[2]);
    s.count = static_cast<std::size_t>(detail::parse_number(row[3]));
    s.std_error = detail::parse_number(row[4]);
    s.min = detail::parse_number(row[5]);
    s.max = detail::parse_number(row[6]);
    s.errors = static_cast<std::size_t>(detail::parse_number(row[7]));
    summaries.push_back(s);
  }
  return summaries;
}

}  // namespace gaplab
