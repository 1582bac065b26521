/*
 *   Copyright 2026 The tropsolve Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "tropsolve/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace tropsolve {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1, i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++column;
      ++i;
    } else {
      const std::size_t start = i, start_col = column;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') {
        ++i;
        ++column;
      }
      out.push_back({text.substr(start, i - start), line, start_col});
    }
  }
  return out;
}

Index parse_count(const Token& t, const char* what) {
  long value = 0;
  const auto* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 1)
    throw ParseError(std::string(what) + " must be a positive integer, got '" + std::string(t.text) + "'",
                     t.line, t.column);
  return static_cast<Index>(value);
}

}  // namespace

TropMatrix parse_matrix(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  if (tokens.size() < 2) {
    const std::size_t line = tokens.empty() ? 1 : tokens.back().line;
    throw ParseError("missing header 'rows cols'", line, 1);
  }
  const Index rows = parse_count(tokens[0], "row count");
  const Index cols = parse_count(tokens[1], "column count");
  const std::size_t expected = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  const std::size_t body = tokens.size() - 2;
  if (body > expected) {
    const Token& t = tokens[2 + expected];
    throw ParseError("unexpected token '" + std::string(t.text) + "' after " +
                         std::to_string(expected) + " entries",
                     t.line, t.column);
  }
  if (body < expected) {
    const Token& t = tokens.back();
    throw ParseError("expected " + std::to_string(expected) + " entries, found " +
                         std::to_string(body),
                     t.line, t.column + t.text.size());
  }
  TropMatrix m(rows, cols);
  for (std::size_t k = 0; k < expected; ++k) {
    const Token& t = tokens[2 + k];
    try {
      m(static_cast<Index>(k) / cols, static_cast<Index>(k) % cols) = parse_scalar<MaxPlus>(t.text);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), t.line, t.column);
    }
  }
  return m;
}

TropMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

TropVector parse_vector(const std::vector<std::string>& tokens) {
  TropVector v(static_cast<Index>(tokens.size()));
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    try {
      v(static_cast<Index>(k)) = parse_scalar<MaxPlus>(tokens[k]);
    } catch (const ParseError& e) {
      throw ParseError(std::string("vector entry ") + std::to_string(k + 1) + ": " + e.what());
    }
  }
  return v;
}

std::string format_rows(const TropMatrix& m, std::string_view indent) {
  std::vector<std::size_t> width(static_cast<std::size_t>(m.cols()), 0);
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) width[j] = std::max(width[j], to_string(m(i, j)).size());
  std::string out;
  for (Index i = 0; i < m.rows(); ++i) {
    out += indent;
    for (Index j = 0; j < m.cols(); ++j) {
      const std::string s = to_string(m(i, j));
      if (j > 0) out += ' ';
      out.append(width[j] - s.size(), ' ');
      out += s;
    }
    out += '\n';
  }
  return out;
}

std::string format_matrix(const TropMatrix& m) {
  return std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n" + format_rows(m, "");
}

std::string format_vector(const TropVector& v) {
  std::string out = "(";
  for (Index i = 0; i < v.rows(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(v(i));
  }
  return out + ")";
}

}  // namespace tropsolve
