#include "toric/matrix_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace toric {

namespace {

[[noreturn]] void parse_error(const std::string& message) { throw Error(ErrorKind::Parse, message); }

std::vector<Int> parse_integers(std::string_view line, std::size_t line_number) {
  std::vector<Int> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    std::string_view token = line.substr(i, j - i);
    if (token.size() > 1 && token.front() == '+') token.remove_prefix(1);
    Int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) parse_error("line " + std::to_string(line_number) + ": integer out of 64-bit range");
    if (ec != std::errc() || end != token.data() + token.size())
      parse_error("line " + std::to_string(line_number) + ": expected an integer, got '" + std::string(token) + "'");
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

IntegerMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Int>> lines;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find('\n', start), text.size());
    ++line_number;
    auto values = parse_integers(text.substr(start, stop - start), line_number);
    if (!values.empty()) lines.push_back(std::move(values));
    start = stop + 1;
  }
  if (lines.empty()) parse_error("empty matrix file");
  if (lines.front().size() != 2) parse_error("header must be 'rows cols'");
  const Int m = lines.front()[0];
  const Int n = lines.front()[1];
  if (m < 0 || n < 0) parse_error("negative matrix dimensions");
  if (static_cast<Int>(lines.size()) - 1 != m)
    parse_error("header announces " + std::to_string(m) + " rows, found " + std::to_string(lines.size() - 1));
  std::vector<Int> entries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (static_cast<Int>(lines[i].size()) != n)
      parse_error("row " + std::to_string(i) + " has " + std::to_string(lines[i].size()) + " entries, expected " + std::to_string(n));
    entries.insert(entries.end(), lines[i].begin(), lines[i].end());
  }
  return IntegerMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n), std::move(entries));
}

IntegerMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open matrix file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_matrix(buffer.str());
  } catch (const Error& e) {
    parse_error(path + ": " + e.what());
  }
}

std::string render_matrix(const IntegerMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) out << to_string(m.row_vector(i)) << '\n';
  return out.str();
}

std::string render_vectors(const VectorSet& vectors, std::size_t length) {
  std::ostringstream out;
  out << vectors.size() << ' ' << length << '\n';
  for (const auto& v : vectors) out << to_string(v) << '\n';
  return out.str();
}

LatticeVector parse_vector(std::string_view text) {
  std::string normalized(text);
  for (char& c : normalized)
    if (c == '\n' || c == ',') c = ' ';
  auto values = parse_integers(normalized, 1);
  if (values.empty()) parse_error("empty vector");
  return LatticeVector(std::move(values));
}

}  // namespace toric
