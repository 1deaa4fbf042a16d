// Copyright 2026 The cdifflab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text forms shared by the CLI and config files.
//
// Element literals:
//   0            the zero element
//   w, w^k       powers of the canonical primitive element (k may be negative)
//   [d0,d1,..]   base-p coefficient digits, constant term first
//   n, -n        the integer n embedded in the prime subfield
//
// Polynomials are sums of terms `COEFF x^EXP`, e.g. "w^3 x^17 + x - 2x^2 + w^0".
// COEFF is an element literal and may be followed by '*'; either part of a
// term may be omitted.
//
// Tables are CSV files with header `x,Fx`, both columns element literals.
#pragma once

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cdiff/poly.hpp"

namespace cdiff {

inline std::string format_element(const Field& f, Index x) {
  if (x == 0) return "0";
  return "w^" + std::to_string(f.log(x));
}

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::int64_t integer() {
    skip_ws();
    bool negative = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) negative = s_[pos_++] == '-';
    skip_ws();
    std::uint64_t v = 0;
    const char* b = s_.data() + pos_;
    auto [ptr, ec] = std::from_chars(b, s_.data() + s_.size(), v);
    if (ec != std::errc() || ptr == b) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - b);
    if (v > static_cast<std::uint64_t>(INT64_MAX)) fail("integer too large");
    return negative ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::ParseError, msg + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

/// Element literal without sign; cursor positioned at its first character.
inline Index parse_element_at(const Field& f, Cursor& cur) {
  const char c = cur.peek();
  if (c == 'w') {
    cur.accept('w');
    if (!cur.accept('^')) return f.exp(1);
    return f.exp(cur.integer());
  }
  if (c == '[') {
    cur.accept('[');
    std::vector<std::uint32_t> digits;
    if (!cur.accept(']')) {
      do {
        const auto d = cur.integer();
        if (d < 0) cur.fail("negative digit");
        digits.push_back(static_cast<std::uint32_t>(d));
      } while (cur.accept(','));
      cur.expect(']');
    }
    return f.from_digits(digits);
  }
  if (std::isdigit(static_cast<unsigned char>(c))) return f.from_int(cur.integer());
  cur.fail("expected an element literal");
}

}  // namespace detail

inline Index parse_element(const Field& f, std::string_view s) {
  detail::Cursor cur(s);
  const bool negative = cur.accept('-');
  Index v = detail::parse_element_at(f, cur);
  if (!cur.done()) cur.fail("trailing characters");
  return negative ? f.neg(v) : v;
}

/// Comma-separated element literals; commas inside [..] do not split.
inline std::vector<Index> parse_element_list(const Field& f, std::string_view s) {
  std::vector<Index> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '[') ++depth;
    if (i < s.size() && s[i] == ']') --depth;
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.push_back(parse_element(f, s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

inline SparsePoly parse_poly(const Field& f, std::string_view s) {
  detail::Cursor cur(s);
  std::vector<Term> terms;
  if (cur.done()) cur.fail("empty polynomial");
  bool first = true;
  while (!cur.done()) {
    bool negative = false;
    if (cur.accept('-'))
      negative = true;
    else if (!cur.accept('+') && !first)
      cur.fail("expected '+' or '-'");
    first = false;

    Index coeff = 1;
    bool have_coeff = false;
    if (cur.peek() != 'x') {
      coeff = detail::parse_element_at(f, cur);
      have_coeff = true;
      cur.accept('*');
    }
    std::uint64_t e = 0;
    if (cur.accept('x')) {
      e = 1;
      if (cur.accept('^')) {
        const auto v = cur.integer();
        if (v < 0) cur.fail("negative exponent");
        e = static_cast<std::uint64_t>(v);
      }
    } else if (!have_coeff) {
      cur.fail("empty term");
    }
    terms.push_back({e, negative ? f.neg(coeff) : coeff});
  }
  return SparsePoly::from_terms(f, std::move(terms));
}

inline std::string format_poly(const Field& f, const SparsePoly& g) {
  if (g.is_zero()) return "0";
  std::string out;
  for (const auto& t : g.terms()) {
    if (!out.empty()) out += " + ";
    const bool unit = t.coeff == 1;
    if (!unit || t.exp == 0) out += format_element(f, t.coeff);
    if (t.exp == 0) continue;
    if (!unit) out += ' ';
    out += t.exp == 1 ? "x" : "x^" + std::to_string(t.exp);
  }
  return out;
}

inline void write_table_csv(const Field& f, const FuncTable& t, std::ostream& os) {
  os << "x,Fx\n";
  for (Index x = 0; x < t.size(); ++x) os << format_element(f, x) << ',' << format_element(f, t[x]) << '\n';
}

/// Rows may come in any order but every x must appear exactly once.
inline FuncTable read_table_csv(const Field& f, std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error(Errc::ParseError, "empty table file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,Fx") throw Error(Errc::ParseError, "table header must be 'x,Fx'");
  FuncTable t;
  t.values.assign(f.q(), 0);
  std::vector<bool> seen(f.q(), false);
  std::size_t rows = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(Errc::ParseError, "malformed row: " + line);
    const Index x = parse_element(f, std::string_view(line).substr(0, comma));
    const Index y = parse_element(f, std::string_view(line).substr(comma + 1));
    if (seen[x]) throw Error(Errc::ParseError, "duplicate row for x = " + line.substr(0, comma));
    seen[x] = true;
    t.values[x] = y;
    ++rows;
  }
  if (rows != f.q()) throw Error(Errc::ParseError, "table must have exactly q rows");
  return t;
}

}  // namespace cdiff
