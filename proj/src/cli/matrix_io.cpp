// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyapdecay/cli/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace lyapdecay::cli {

namespace {

std::string strip_comments(std::istream& in) {
  std::ostringstream body;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    body << line << '\n';
  }
  return body.str();
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ComplexMatrix read_matrix(std::istream& in) {
  std::istringstream body(strip_comments(in));
  long long rows = 0;
  long long cols = 0;
  std::string kind;
  if (!(body >> rows >> cols >> kind)) {
    throw Error(ErrorCode::invalid_config, "matrix file: expected header 'rows cols real|complex'");
  }
  if (rows < 1 || cols < 1 || (kind != "real" && kind != "complex")) {
    throw Error(ErrorCode::invalid_config, "matrix file: bad header '" + std::to_string(rows) + " " +
                                               std::to_string(cols) + " " + kind + "'");
  }
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      double re = 0.0;
      double im = 0.0;
      if (!(body >> re) || (kind == "complex" && !(body >> im))) {
        throw Error(ErrorCode::invalid_config, "matrix file: too few entries");
      }
      m(i, j) = Complex(re, im);
    }
  }
  std::string extra;
  if (body >> extra) throw Error(ErrorCode::invalid_config, "matrix file: trailing data '" + extra + "'");
  if (!m.allFinite()) throw Error(ErrorCode::non_finite, "matrix file: non-finite entry");
  return m;
}

ComplexMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_config, "cannot open matrix file " + path.string());
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  const bool complex = !m.imag().isZero(0.0);
  out << m.rows() << ' ' << m.cols() << ' ' << (complex ? "complex" : "real") << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << number(m(i, j).real());
      if (complex) out << ' ' << number(m(i, j).imag());
    }
    out << '\n';
  }
}

void write_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_matrix(out, m);
}

}  // namespace lyapdecay::cli
