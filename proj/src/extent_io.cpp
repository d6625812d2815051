/* Copyright 2026 The ddm-match Authors
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

#include "ddm/extent_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace ddm {

namespace {

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view s, T& value) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  return ec == std::errc{} && ptr == end;
}

void put_double(std::ostream& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, ptr - buf);
}

struct ParsedExtent {
  std::size_t id;
  std::vector<std::pair<double, double>> bounds;
};

std::vector<Extent> assemble(std::vector<ParsedExtent> parsed, ExtentKind kind) {
  std::sort(parsed.begin(), parsed.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  std::vector<Extent> out;
  out.reserve(parsed.size());
  for (std::size_t pos = 0; pos < parsed.size(); ++pos) {
    if (parsed[pos].id != pos + 1) {
      throw std::runtime_error(std::string(to_string(kind)) + " ids are not exactly 1.." +
                               std::to_string(parsed.size()) + " (missing or duplicate id near " +
                               std::to_string(pos + 1) + ")");
    }
    out.emplace_back(parsed[pos].id, kind, parsed[pos].bounds);
  }
  return out;
}

}  // namespace

void write_extents(std::ostream& out, const MatchInstance& inst) {
  out << "# d=" << inst.dims() << '\n';
  auto emit = [&](const Extent& e) {
    out << e.id() << ',' << to_string(e.kind());
    for (const Interval1D& iv : e.projections()) {
      out << ',';
      put_double(out, iv.low());
      out << ',';
      put_double(out, iv.high());
    }
    out << '\n';
  };
  for (const Extent& e : inst.subscriptions()) emit(e);
  for (const Extent& e : inst.updates()) emit(e);
}

MatchInstance read_extents(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t dims = 0;
  std::vector<ParsedExtent> subs;
  std::vector<ParsedExtent> upds;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = trim(line);
    if (text.empty()) continue;
    if (dims == 0) {
      constexpr std::string_view prefix = "# d=";
      if (!text.starts_with(prefix) || !parse_number(trim(text.substr(prefix.size())), dims) || dims == 0) {
        parse_error(line_no, "expected header '# d=<dims>'");
      }
      continue;
    }
    if (text.front() == '#') continue;

    auto fields = split(text, ',');
    if (fields.size() != 2 + 2 * dims) {
      parse_error(line_no, "expected " + std::to_string(2 + 2 * dims) + " fields, got " +
                               std::to_string(fields.size()));
    }
    ParsedExtent pe;
    if (!parse_number(fields[0], pe.id) || pe.id == 0) parse_error(line_no, "bad id");
    const bool is_sub = fields[1] == "S";
    if (!is_sub && fields[1] != "U") parse_error(line_no, "kind must be S or U");
    for (std::size_t k = 0; k < dims; ++k) {
      double lo = 0;
      double hi = 0;
      if (!parse_number(fields[2 + 2 * k], lo) || !parse_number(fields[3 + 2 * k], hi)) {
        parse_error(line_no, "bad coordinate on axis " + std::to_string(k + 1));
      }
      if (!(lo < hi)) parse_error(line_no, "empty interval on axis " + std::to_string(k + 1));
      pe.bounds.emplace_back(lo, hi);
    }
    (is_sub ? subs : upds).push_back(std::move(pe));
  }
  if (dims == 0) throw std::runtime_error("missing '# d=<dims>' header");

  return MatchInstance(assemble(std::move(subs), ExtentKind::Subscription),
                       assemble(std::move(upds), ExtentKind::Update), dims);
}

void write_extents_file(const std::string& path, const MatchInstance& inst) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_extents(out, inst);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

MatchInstance read_extents_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_extents(in);
}

void write_matrix(std::ostream& out, const IntersectionMatrix& matrix) {
  const auto pairs = matrix.set_pairs();
  out << matrix.rows() << ' ' << matrix.cols() << ' ' << pairs.size() << '\n';
  for (const auto& [i, j] : pairs) out << i << ',' << j << '\n';
}

IntersectionMatrix read_matrix(std::istream& in) {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  if (!(in >> n >> m >> k)) throw std::runtime_error("matrix header must be 'n m K'");
  IntersectionMatrix matrix(n, m);
  std::string line;
  std::getline(in, line);
  for (std::size_t e = 0; e < k; ++e) {
    if (!std::getline(in, line)) throw std::runtime_error("matrix truncated after " + std::to_string(e) + " pairs");
    auto fields = split(trim(line), ',');
    std::size_t i = 0;
    std::size_t j = 0;
    if (fields.size() != 2 || !parse_number(fields[0], i) || !parse_number(fields[1], j)) {
      throw std::runtime_error("bad matrix entry '" + line + "'");
    }
    matrix.set(i, j);
  }
  if (matrix.popcount() != k) throw std::runtime_error("matrix header K does not match distinct entries");
  return matrix;
}

}  // namespace ddm
