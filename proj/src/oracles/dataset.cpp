#include "sgdol/oracles/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>

#include "sgdol/core/error.hpp"

namespace sgdol {

Dataset::Dataset(std::size_t n_features, bool has_bias)
    : n_features_(n_features), has_bias_(has_bias) {}

void Dataset::add_row(std::span<const double> features, double label) {
  if (features.size() != n_features_) {
    throw ContractViolation("Dataset::add_row: expected " + std::to_string(n_features_) +
                            " features, got " + std::to_string(features.size()));
  }
  values_.insert(values_.end(), features.begin(), features.end());
  labels_.push_back(label);
}

Dataset Dataset::subset(std::span<const std::size_t> rows) const {
  Dataset out(n_features_, has_bias_);
  out.values_.reserve(rows.size() * n_features_);
  out.labels_.reserve(rows.size());
  for (std::size_t r : rows) out.add_row(features(r), label(r));
  return out;
}

namespace {

bool parse_real(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  if (token.empty()) return false;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

bool parse_index(std::string_view token, std::size_t& out) {
  if (token.empty()) return false;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

struct SparseRow {
  double label;
  std::vector<std::pair<std::size_t, double>> entries;
};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Dataset parse_libsvm(std::istream& in, const LibsvmOptions& options) {
  std::vector<SparseRow> rows;
  std::size_t max_index = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    const auto tokens = split_ws(view);
    if (tokens.empty()) continue;

    SparseRow row{};
    if (!parse_real(tokens[0], row.label)) {
      throw ParseError(line_no, "bad label '" + std::string(tokens[0]) + "'");
    }
    if (options.binary && row.label != 1.0 && row.label != -1.0) {
      throw ParseError(line_no, "label must be +1 or -1, got '" + std::string(tokens[0]) + "'");
    }
    std::size_t prev = 0;
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      const auto colon = tokens[k].find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(line_no, "expected index:value, got '" + std::string(tokens[k]) + "'");
      }
      std::size_t index = 0;
      double value = 0.0;
      if (!parse_index(tokens[k].substr(0, colon), index) || index == 0) {
        throw ParseError(line_no, "bad feature index in '" + std::string(tokens[k]) + "'");
      }
      if (!parse_real(tokens[k].substr(colon + 1), value) || !std::isfinite(value)) {
        throw ParseError(line_no, "bad feature value in '" + std::string(tokens[k]) + "'");
      }
      if (index <= prev) {
        throw ParseError(line_no, "feature indices must be strictly increasing");
      }
      if (options.n_features != 0 && index > options.n_features) {
        throw ParseError(line_no, "feature index " + std::to_string(index) + " exceeds " +
                                      std::to_string(options.n_features));
      }
      prev = index;
      row.entries.emplace_back(index, value);
    }
    max_index = std::max(max_index, prev);
    rows.push_back(std::move(row));
  }

  const std::size_t width = options.n_features != 0 ? options.n_features : max_index;
  Dataset data(width + (options.append_bias ? 1 : 0), options.append_bias);
  std::vector<double> dense(data.n_features());
  for (const auto& row : rows) {
    std::fill(dense.begin(), dense.end(), 0.0);
    for (const auto& [index, value] : row.entries) dense[index - 1] = value;
    if (options.append_bias) dense.back() = 1.0;
    data.add_row(dense, row.label);
  }
  return data;
}

Dataset parse_libsvm(std::string_view text, const LibsvmOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_libsvm(in, options);
}

Dataset load_libsvm(const std::filesystem::path& path, const LibsvmOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset '" + path.string() + "'");
  return parse_libsvm(in, options);
}

namespace {

std::string shortest(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

void write_libsvm(const Dataset& data, std::ostream& out) {
  const std::size_t width = data.n_features() - (data.has_bias() ? 1 : 0);
  for (std::size_t r = 0; r < data.size(); ++r) {
    out << (data.label(r) > 0 ? "+" : "") << shortest(data.label(r));
    const auto row = data.features(r);
    for (std::size_t i = 0; i < width; ++i) {
      if (row[i] != 0.0) out << ' ' << (i + 1) << ':' << shortest(row[i]);
    }
    out << '\n';
  }
}

void write_libsvm(const Dataset& data, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write dataset '" + path.string() + "'");
  write_libsvm(data, out);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

namespace {

void shuffle(std::vector<std::size_t>& v, RngStream& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.uniform_index(i)]);
}

}  // namespace

Dataset balance_subsample(const Dataset& data, RngStream& rng) {
  std::vector<std::size_t> pos, neg;
  for (std::size_t r = 0; r < data.size(); ++r) (data.label(r) > 0 ? pos : neg).push_back(r);
  if (pos.empty() || neg.empty()) {
    throw ContractViolation("balance_subsample: both label classes must be present");
  }
  auto& majority = pos.size() >= neg.size() ? pos : neg;
  auto& minority = pos.size() >= neg.size() ? neg : pos;
  shuffle(majority, rng);
  majority.resize(minority.size());

  std::vector<std::size_t> keep;
  keep.reserve(2 * minority.size());
  // Keep the original relative order before the final shuffle so the result
  // depends only on which rows were chosen and on rng.
  std::sort(majority.begin(), majority.end());
  std::merge(majority.begin(), majority.end(), minority.begin(), minority.end(),
             std::back_inserter(keep));
  shuffle(keep, rng);
  return data.subset(keep);
}

}  // namespace sgdol
