#pragma once

#include <filesystem>
#include <iosfwd>

#include "quatinv/qmatrix.hpp"

namespace quatinv {

// `.qmat` text format:
//
//   # optional comment lines
//   QMAT <m> <n>
//   w x y z          (m*n lines, row-major)
//
// Writers emit 17 significant digits so every double re-reads bitwise.

QMatrix read_qmat(std::istream& in);
QMatrix read_qmat(const std::filesystem::path& path);

void write_qmat(std::ostream& out, const QMatrix& a);
void write_qmat(const std::filesystem::path& path, const QMatrix& a);

}  // namespace quatinv
