#include <charconv>
#include <cmath>
#include <fstream>

#include "hitratio/error.hpp"
#include "hitratio/vectorize.hpp"

namespace hitratio {
namespace {

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

EmbeddingTable::EmbeddingTable(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw ConfigError("embedding dimension must be positive");
}

bool EmbeddingTable::add(std::string word, std::span<const float> vector) {
  if (vector.size() != dimension_) throw DimensionMismatch(dimension_, vector.size());
  for (float v : vector) {
    if (!std::isfinite(v)) throw ConfigError("non-finite embedding component for '" + word + "'");
  }
  const auto row = index_.size();
  if (!index_.try_emplace(std::move(word), row).second) return false;
  data_.insert(data_.end(), vector.begin(), vector.end());
  return true;
}

const float* EmbeddingTable::find(std::string_view word) const {
  auto it = index_.find(word);
  return it == index_.end() ? nullptr : data_.data() + it->second * dimension_;
}

EmbeddingTable load_embeddings(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;

  std::size_t declared = 0;
  std::size_t dimension = 0;
  bool have_header = false;
  while (!have_header && std::getline(in, line)) {
    ++lineno;
    auto f = fields(line);
    if (f.empty()) continue;
    if (f.size() != 2 || !parse_number(f[0], declared) || !parse_number(f[1], dimension) ||
        dimension == 0) {
      throw ParseError(source, lineno, "expected header '<vocab_size> <dimension>'");
    }
    have_header = true;
  }
  if (!have_header) throw ParseError(source + ": empty embedding file");

  EmbeddingTable table(dimension);
  std::vector<float> row(dimension);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto f = fields(line);
    if (f.empty()) continue;
    if (f.size() != dimension + 1) {
      throw ParseError(source, lineno,
                       "expected " + std::to_string(dimension) + " components, found " +
                           std::to_string(f.size() - 1));
    }
    for (std::size_t i = 0; i < dimension; ++i) {
      if (!parse_number(f[i + 1], row[i]) || !std::isfinite(row[i])) {
        throw ParseError(source, lineno,
                         "component " + std::to_string(i + 1) + " is not a finite number: '" +
                             std::string(f[i + 1]) + "'");
      }
    }
    // Repeated words keep their first vector.
    table.add(std::string(f[0]), row);
    ++rows;
  }
  if (rows != declared) {
    throw ParseError(source, lineno,
                     "header declares " + std::to_string(declared) + " words, found " +
                         std::to_string(rows));
  }
  return table;
}

EmbeddingTable load_embeddings_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open embedding file");
  return load_embeddings(in, path);
}

}  // namespace hitratio
