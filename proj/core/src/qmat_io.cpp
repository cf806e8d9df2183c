#include "quatinv/qmat_io.hpp"

#include <array>
#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "quatinv/errors.hpp"

namespace quatinv {

namespace {

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r") == std::string_view::npos; }

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const std::size_t start = line.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    const std::size_t end = line.find_first_of(" \t\r", start);
    out.push_back(line.substr(start, end == std::string_view::npos ? end : end - start));
    pos = end == std::string_view::npos ? line.size() : end;
  }
  return out;
}

double parse_double(std::string_view tok, std::size_t line_no) {
  const std::string s(tok);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty()) {
    throw FormatError("qmat line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return v;
}

std::size_t parse_dim(std::string_view tok, std::size_t line_no) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw FormatError("qmat line " + std::to_string(line_no) + ": bad dimension '" +
                      std::string(tok) + "'");
  }
  return v;
}

}  // namespace

QMatrix read_qmat(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.starts_with('#') || blank(line)) continue;
    const auto tok = split(line);
    if (tok.size() != 3 || tok[0] != "QMAT") {
      throw FormatError("qmat line " + std::to_string(line_no) + ": expected 'QMAT <m> <n>'");
    }
    m = parse_dim(tok[1], line_no);
    n = parse_dim(tok[2], line_no);
    have_header = true;
    break;
  }
  if (!have_header) throw FormatError("qmat: missing QMAT header");

  QMatrix a(m, n);
  std::size_t count = 0;
  while (count < m * n && std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const auto tok = split(line);
    if (tok.size() != 4) {
      throw FormatError("qmat line " + std::to_string(line_no) + ": expected 4 components, got " +
                        std::to_string(tok.size()));
    }
    const Quaternion q{parse_double(tok[0], line_no), parse_double(tok[1], line_no),
                       parse_double(tok[2], line_no), parse_double(tok[3], line_no)};
    a.set(count / n, count % n, q);
    ++count;
  }
  if (count != m * n) {
    throw FormatError("qmat: expected " + std::to_string(m * n) + " entries, found " +
                      std::to_string(count));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line)) {
      throw FormatError("qmat line " + std::to_string(line_no) + ": trailing data");
    }
  }
  return a;
}

QMatrix read_qmat(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_qmat(in);
}

void write_qmat(std::ostream& out, const QMatrix& a) {
  out << "QMAT " << a.rows() << ' ' << a.cols() << '\n';
  std::array<char, 128> buf{};
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Quaternion q = a(r, c);
      std::snprintf(buf.data(), buf.size(), "%.17g %.17g %.17g %.17g\n", q.w, q.x, q.y, q.z);
      out << buf.data();
    }
  }
  if (!out) throw FormatError("qmat: write failed");
}

void write_qmat(const std::filesystem::path& path, const QMatrix& a) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  write_qmat(out, a);
}

}  // namespace quatinv
