// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>

#include "lyapdecay/types.hpp"

namespace lyapdecay::cli {

// Text layout: a header "rows cols real|complex", then whitespace-separated entries in
// row-major order; complex entries interleave real and imaginary parts. '#' starts a comment.
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix(const std::filesystem::path& path);

void write_matrix(std::ostream& out, const ComplexMatrix& m);
void write_matrix(const std::filesystem::path& path, const ComplexMatrix& m);

}  // namespace lyapdecay::cli
