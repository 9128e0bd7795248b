#include "fastdd/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>

#include "fastdd/error.hpp"

namespace fdd {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool parse_double(std::string_view s, double& v) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(v);
}

struct Record {
  double t;
  double value;
};

struct Series {
  std::vector<Record> records;
  std::optional<Label> label;
  bool anyUnlabeled = false;
  std::size_t firstLine = 0;
};

}  // namespace

FunctionalDataset read_long_csv(std::istream& in) {
  std::vector<std::string> order;
  std::unordered_map<std::string, Series> series;
  std::string line;
  std::size_t lineNo = 0;
  bool sawData = false;
  while (std::getline(in, line)) {
    ++lineNo;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto fields = split_fields(view);
    double t = 0.0, value = 0.0;
    if (!sawData && fields.size() >= 3 && !parse_double(fields[1], t)) {
      sawData = true;  // header line
      continue;
    }
    sawData = true;
    if (fields.size() < 3 || fields.size() > 4) throw ParseError("expected id,t,value[,label]", lineNo);
    if (fields[0].empty()) throw ParseError("empty observation id", lineNo);
    if (!parse_double(fields[1], t)) throw ParseError("invalid time value '" + std::string(fields[1]) + "'", lineNo);
    if (!parse_double(fields[2], value)) throw ParseError("invalid observation value '" + std::string(fields[2]) + "'", lineNo);

    const std::string id(fields[0]);
    auto [it, inserted] = series.try_emplace(id);
    Series& s = it->second;
    if (inserted) {
      order.push_back(id);
      s.firstLine = lineNo;
    }
    if (fields.size() == 4 && !fields[3].empty()) {
      Label label;
      if (fields[3] == "0") {
        label = 0;
      } else if (fields[3] == "1") {
        label = 1;
      } else {
        throw ParseError("label must be 0 or 1", lineNo);
      }
      if (s.label && *s.label != label)
        throw ValidationError("observation '" + id + "' has conflicting labels (line " + std::to_string(lineNo) + ")");
      if (s.anyUnlabeled || (!s.label && !s.records.empty()))
        throw ValidationError("observation '" + id + "' is only partly labeled (line " + std::to_string(lineNo) + ")");
      s.label = label;
    } else {
      if (s.label) throw ValidationError("observation '" + id + "' is only partly labeled (line " + std::to_string(lineNo) + ")");
      s.anyUnlabeled = true;
    }
    s.records.push_back({t, value});
  }
  if (order.empty()) throw ParseError("no records found", lineNo);

  std::vector<DiscretizedFunction> obs;
  obs.reserve(order.size());
  for (const auto& id : order) {
    Series& s = series.at(id);
    std::stable_sort(s.records.begin(), s.records.end(), [](const Record& a, const Record& b) { return a.t < b.t; });
    DiscretizedFunction f;
    for (const auto& r : s.records) {
      f.times.push_back(r.t);
      f.values.push_back(r.value);
    }
    f.label = s.label;
    obs.push_back(std::move(f));
  }
  return FunctionalDataset::from_observations(std::move(obs), std::move(order));
}

FunctionalDataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  return read_long_csv(in);
}

void write_long_csv(std::ostream& out, const FunctionalDataset& data) {
  const auto old = out.precision(17);
  const bool labeled = data.fully_labeled();
  out << (labeled ? "id,t,value,label\n" : "id,t,value\n");
  for (std::size_t i = 0; i < data.size(); ++i) {
    const DiscretizedFunction& f = data.raw()[i];
    for (std::size_t j = 0; j < f.times.size(); ++j) {
      out << data.ids()[i] << ',' << f.times[j] << ',' << f.values[j];
      if (labeled) out << ',' << *f.label;
      out << '\n';
    }
  }
  out.precision(old);
}

void save_dataset(const std::filesystem::path& path, const FunctionalDataset& data) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  write_long_csv(out, data);
}

void write_ddplot_csv(std::ostream& out, std::span<const DDPoint> points) {
  const auto old = out.precision(17);
  out << "z0,z1,label\n";
  for (const auto& z : points) {
    out << z.z0 << ',' << z.z1 << ',';
    if (z.label) out << *z.label;
    out << '\n';
  }
  out.precision(old);
}

void write_selection_csv(std::ostream& out, std::span<const PairScore> scores) {
  const auto old = out.precision(17);
  out << "L,S,epsilon,epsilon_max,cv_error,selected\n";
  for (const auto& s : scores) {
    out << s.config.L << ',' << s.config.S << ',' << s.epsilon << ',' << s.epsilonMax << ',';
    if (s.cvError) out << *s.cvError;
    out << ',' << (s.selected ? 1 : 0) << '\n';
  }
  out.precision(old);
}

}  // namespace fdd
