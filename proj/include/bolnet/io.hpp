#ifndef BOLNET_IO_HPP
#define BOLNET_IO_HPP

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "loop.hpp"

namespace bolnet {

/// Reads a loop in the text format
///
///     # comment
///     order N
///     r0c0 r0c1 ... (N rows of N integers in [0, N))
///
/// Entry (r, c) is r*c. Blank lines and everything after '#' are ignored.
/// Malformed input, including a repeated symbol in a row or column, raises
/// ParseFailure with the position of the offending token. With `normalize`
/// a unit other than 0 is moved to 0, otherwise it is rejected with NoUnit.
inline LoopTable parse_loop(std::istream& in, bool normalize = false) {
  struct Token {
    std::string text;
    std::size_t line, column;
  };
  std::vector<std::vector<Token>> lines;
  std::string raw;
  for (std::size_t line_no = 1; std::getline(in, raw); ++line_no) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < raw.size();) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      tokens.push_back({raw.substr(i, j - i), line_no, i + 1});
      i = j;
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  if (lines.empty()) throw ParseFailure(1, 1, "empty input, expected 'order N'");

  auto to_int = [](const Token& t, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      throw ParseFailure(t.line, t.column, std::string("expected ") + what + ", got '" + t.text + "'");
    return v;
  };

  const auto& header = lines.front();
  if (header[0].text != "order")
    throw ParseFailure(header[0].line, header[0].column, "expected 'order N', got '" + header[0].text + "'");
  if (header.size() != 2) {
    const Token& t = header.size() < 2 ? header[0] : header[2];
    throw ParseFailure(t.line, t.column, "expected exactly one integer after 'order'");
  }
  const int n = to_int(header[1], "the order");
  if (n < 1 || n > 256) throw ParseFailure(header[1].line, header[1].column, "order must be in 1..256");

  const std::size_t rows_seen = lines.size() - 1;
  if (rows_seen != static_cast<std::size_t>(n)) {
    const Token& t = rows_seen > static_cast<std::size_t>(n) ? lines[n + 1][0] : lines.back().back();
    throw ParseFailure(t.line, t.column, "expected " + std::to_string(n) + " rows, found " +
                                             std::to_string(rows_seen));
  }

  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  std::vector<std::vector<bool>> in_column(n, std::vector<bool>(n, false));
  for (int r = 0; r < n; ++r) {
    const auto& toks = lines[r + 1];
    if (toks.size() != static_cast<std::size_t>(n)) {
      const Token& t = toks.size() > static_cast<std::size_t>(n) ? toks[n] : toks.back();
      throw ParseFailure(t.line, t.column, "row " + std::to_string(r) + " has " +
                                               std::to_string(toks.size()) + " entries, expected " +
                                               std::to_string(n));
    }
    std::vector<bool> in_row(n, false);
    for (int c = 0; c < n; ++c) {
      int v = to_int(toks[c], "an integer entry");
      if (v < 0 || v >= n)
        throw ParseFailure(toks[c].line, toks[c].column,
                           "entry " + std::to_string(v) + " is outside [0, " + std::to_string(n) + ")");
      if (in_row[v])
        throw ParseFailure(toks[c].line, toks[c].column,
                           "not a Latin square: " + std::to_string(v) + " repeats in row " + std::to_string(r));
      if (in_column[c][v])
        throw ParseFailure(toks[c].line, toks[c].column,
                           "not a Latin square: " + std::to_string(v) + " repeats in column " +
                               std::to_string(c));
      in_row[v] = in_column[c][v] = true;
      rows[r][c] = v;
    }
  }
  return LoopTable::from_rows(rows, normalize);
}

inline LoopTable parse_loop(const std::string& text, bool normalize = false) {
  std::istringstream in(text);
  return parse_loop(in, normalize);
}

inline LoopTable read_loop_file(const std::string& path, bool normalize = false) {
  std::ifstream in(path);
  if (!in) throw ParseFailure(0, 0, "cannot open '" + path + "'");
  return parse_loop(in, normalize);
}

inline std::string format_loop(const LoopTable& l) {
  std::ostringstream os;
  os << "order " << l.order() << '\n';
  for (Element x = 0; x < l.order(); ++x) {
    for (Element y = 0; y < l.order(); ++y) os << (y ? " " : "") << l.mul(x, y);
    os << '\n';
  }
  return os.str();
}

}  // namespace bolnet

#endif  // BOLNET_IO_HPP
