#pragma once

#include "rabi/matrix.hpp"

namespace rabi::kernels {

// Serial and OpenMP row-parallel variants share the same per-element
// accumulation order, so results agree bit for bit.
enum class ExecMode { serial, parallel };

// C = A B
Matrix multiply(const Matrix& a, const Matrix& b, ExecMode mode = ExecMode::parallel);

// C = A^T B
Matrix multiply_at_b(const Matrix& a, const Matrix& b, ExecMode mode = ExecMode::parallel);

// B^T A B
Matrix conjugate(const Matrix& a, const Matrix& b, ExecMode mode = ExecMode::parallel);

int max_threads();

}  // namespace rabi::kernels
