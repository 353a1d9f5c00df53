#pragma once

#include "vpt/matrix.hpp"

// Dense kernels used by the autodiff engine and the evaluation code.
//
// Every kernel has an OpenMP version (vpt::kernels) and a serial reference
// (vpt::kernels::ref). Both accumulate each output element in the same
// order, so their results are bit-identical regardless of thread count.

namespace vpt::kernels {

enum class Trans { kNo, kYes };

/// C = op(A) · op(B), or C += ... when accumulate is set.
void gemm(const Matrix& a, Trans ta, const Matrix& b, Trans tb, Matrix& c, bool accumulate = false);

/// Convenience wrappers returning a fresh matrix.
Matrix matmul(const Matrix& a, const Matrix& b);     // A · B
Matrix matmul_nt(const Matrix& a, const Matrix& b);  // A · Bᵀ
Matrix matmul_tn(const Matrix& a, const Matrix& b);  // Aᵀ · B

/// Row-wise numerically stable softmax, in place.
void softmax_rows(Matrix& m);

namespace ref {

void gemm(const Matrix& a, Trans ta, const Matrix& b, Trans tb, Matrix& c, bool accumulate = false);
void softmax_rows(Matrix& m);

}  // namespace ref

}  // namespace vpt::kernels
