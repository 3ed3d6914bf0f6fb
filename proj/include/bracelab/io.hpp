#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bracelab/brace.hpp"
#include "bracelab/errors.hpp"
#include "bracelab/solution.hpp"

namespace bracelab {

struct BraceFile {
  std::string name;  // empty when the file carries no name
  FiniteBrace brace;
};

enum class FileKind { brace, solution };

namespace detail {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

/// Non-empty lines with `#` comments stripped, tokenized on whitespace.
inline std::vector<Line> tokenize_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

inline bool is_key(const Line& l, const std::string& key) {
  return !l.tokens.empty() && l.tokens[0] == key + ":";
}

inline int parse_positive(const Line& l, const std::string& what) {
  if (l.tokens.size() != 2)
    throw ParseError(l.number, what + " line needs exactly one value");
  try {
    size_t pos = 0;
    int v = std::stoi(l.tokens[1], &pos);
    if (pos != l.tokens[1].size() || v < 1) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(l.number, "invalid " + what + " value \"" + l.tokens[1] + "\"");
  }
}

/// Reads n rows of n entries, mapping tokens through `to_index`.
template <typename Fn>
Table read_rows(const std::vector<Line>& lines, size_t& i, int n, Fn to_index) {
  Table rows;
  for (int r = 0; r < n; ++r) {
    if (i >= lines.size())
      throw ParseError(lines.empty() ? 0 : lines.back().number,
                       "unexpected end of file inside table");
    const Line& l = lines[i++];
    if (static_cast<int>(l.tokens.size()) != n)
      throw ParseError(l.number, "expected " + std::to_string(n) +
                                     " entries, got " +
                                     std::to_string(l.tokens.size()));
    std::vector<int> row;
    row.reserve(n);
    for (const std::string& tok : l.tokens) row.push_back(to_index(l, tok));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void expect_section(const std::vector<Line>& lines, size_t& i,
                           const std::string& which) {
  if (i >= lines.size())
    throw ParseError(lines.empty() ? 0 : lines.back().number,
                     "missing \"section: " + which + "\"");
  const Line& l = lines[i];
  if (!is_key(l, "section") || l.tokens.size() != 2 || l.tokens[1] != which)
    throw ParseError(l.number, "expected \"section: " + which + "\"");
  ++i;
}

/// Reindex so the additive identity sits at 0; the remaining elements keep
/// their relative order. Used for files with symbolic labels.
inline void normalize_identity(Table& add, Table& mul) {
  const int n = static_cast<int>(add.size());
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int j = 0; j < n; ++j)
      if (add[e][j] != j) {
        ok = false;
        break;
      }
    if (ok) identity = e;
  }
  if (identity <= 0) return;  // already first, or absent (validation will fail)
  std::vector<int> sigma(n);
  sigma[identity] = 0;
  int next = 1;
  for (int e = 0; e < n; ++e)
    if (e != identity) sigma[e] = next++;
  auto apply = [&](const Table& t) {
    Table out(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[sigma[i]][sigma[j]] = sigma[t[i][j]];
    return out;
  };
  add = apply(add);
  mul = apply(mul);
}

}  // namespace detail

/// Peeks at the header to tell brace files (order:) from solutions (size:).
inline FileKind detect_file_kind(const std::string& path) {
  for (const detail::Line& l : detail::tokenize_file(path)) {
    if (detail::is_key(l, "order")) return FileKind::brace;
    if (detail::is_key(l, "size")) return FileKind::solution;
    if (detail::is_key(l, "version") || detail::is_key(l, "name")) continue;
    throw ParseError(l.number, "expected \"order:\" or \"size:\" header");
  }
  throw ParseError(0, "empty file");
}

/// Brace file layout: optional version/name, `order: n`, optional
/// `labels:` list, then `section: add` and `section: mul` with n rows of n
/// entries each. Entries are decimal indices unless a label list is given,
/// in which case they are normalized so the additive identity becomes 0.
inline BraceFile load_brace_file(const std::string& path) {
  auto lines = detail::tokenize_file(path);
  size_t i = 0;
  std::string name;
  int order = -1;
  std::optional<std::vector<std::string>> labels;

  while (i < lines.size()) {
    const detail::Line& l = lines[i];
    if (detail::is_key(l, "version")) {
      if (detail::parse_positive(l, "version") != 1)
        throw ParseError(l.number, "unsupported format version");
      ++i;
    } else if (detail::is_key(l, "name")) {
      if (l.tokens.size() != 2) throw ParseError(l.number, "name must be one token");
      name = l.tokens[1];
      ++i;
    } else if (detail::is_key(l, "order")) {
      order = detail::parse_positive(l, "order");
      ++i;
    } else if (detail::is_key(l, "labels")) {
      if (order < 0) throw ParseError(l.number, "labels must follow order");
      if (static_cast<int>(l.tokens.size()) != order + 1)
        throw ParseError(l.number, "labels line needs " + std::to_string(order) +
                                       " entries");
      labels = std::vector<std::string>(l.tokens.begin() + 1, l.tokens.end());
      ++i;
    } else {
      break;
    }
  }
  if (order < 0)
    throw ParseError(lines.empty() ? 0 : lines[0].number, "missing \"order:\" header");

  auto to_index = [&](const detail::Line& l, const std::string& tok) -> int {
    if (labels) {
      for (size_t k = 0; k < labels->size(); ++k)
        if ((*labels)[k] == tok) return static_cast<int>(k);
      throw ParseError(l.number, "unknown label \"" + tok + "\"");
    }
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size() || v < 0 || v >= order) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ParseError(l.number, "entry \"" + tok + "\" is not an index in 0.." +
                                     std::to_string(order - 1));
    }
  };

  detail::expect_section(lines, i, "add");
  Table add = detail::read_rows(lines, i, order, to_index);
  detail::expect_section(lines, i, "mul");
  Table mul = detail::read_rows(lines, i, order, to_index);
  if (i < lines.size())
    throw ParseError(lines[i].number, "trailing content after tables");

  if (labels) detail::normalize_identity(add, mul);
  return BraceFile{std::move(name), validate_brace(add, mul)};
}

inline FiniteBrace load_brace(const std::string& path) {
  return load_brace_file(path).brace;
}

inline void save_brace(const FiniteBrace& b, const std::string& path,
                       const std::string& name = "") {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << "version: 1\n";
  if (!name.empty()) out << "name: " << name << "\n";
  out << "order: " << b.order() << "\n";
  for (const char* which : {"add", "mul"}) {
    out << "section: " << which << "\n";
    for (int i = 0; i < b.order(); ++i) {
      const auto& row = std::string(which) == "add" ? b.add_row(i) : b.mul_row(i);
      for (int j = 0; j < b.order(); ++j) out << (j ? " " : "") << row[j];
      out << "\n";
    }
  }
  if (!out) throw Error("write failed: " + path);
}

/// Solution file layout: `size: n`, then `section: lambda` and
/// `section: rho`, each with n permutation rows.
inline Solution load_solution(const std::string& path) {
  auto lines = detail::tokenize_file(path);
  size_t i = 0;
  int size = -1;
  while (i < lines.size()) {
    const detail::Line& l = lines[i];
    if (detail::is_key(l, "version")) {
      if (detail::parse_positive(l, "version") != 1)
        throw ParseError(l.number, "unsupported format version");
      ++i;
    } else if (detail::is_key(l, "size")) {
      size = detail::parse_positive(l, "size");
      ++i;
    } else {
      break;
    }
  }
  if (size < 0)
    throw ParseError(lines.empty() ? 0 : lines[0].number, "missing \"size:\" header");

  auto to_index = [&](const detail::Line& l, const std::string& tok) -> int {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size() || v < 0 || v >= size) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ParseError(l.number, "entry \"" + tok + "\" is not an index in 0.." +
                                     std::to_string(size - 1));
    }
  };

  detail::expect_section(lines, i, "lambda");
  Table lambda = detail::read_rows(lines, i, size, to_index);
  detail::expect_section(lines, i, "rho");
  Table rho = detail::read_rows(lines, i, size, to_index);
  if (i < lines.size())
    throw ParseError(lines[i].number, "trailing content after tables");
  return validate_solution(std::move(lambda), std::move(rho));
}

inline void save_solution(const Solution& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << "version: 1\n";
  out << "size: " << s.size << "\n";
  out << "section: lambda\n";
  for (const auto& row : s.lambda_maps) {
    for (int j = 0; j < s.size; ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
  out << "section: rho\n";
  for (const auto& row : s.rho_maps) {
    for (int j = 0; j < s.size; ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
  if (!out) throw Error("write failed: " + path);
}

}  // namespace bracelab
