#pragma once

namespace sip {

// Row-major C[M x N] = alpha * op(A) * op(B) + beta * C.
//
// op(A) is M x K (stored A is M x K with lda, or K x M when trans_a),
// op(B) is K x N. Work is split over fixed column ranges of C and each
// range is computed by a single-threaded BLAS call, so results are
// bit-identical regardless of how many threads run.
void gemm(bool trans_a, bool trans_b, int m, int n, int k, float alpha,
          const float* a, int lda, const float* b, int ldb, float beta,
          float* c, int ldc);
void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha,
          const double* a, int lda, const double* b, int ldb, double beta,
          double* c, int ldc);

// Number of worker threads used by gemm and the batch-parallel loops.
// Resolved once from SIP_THREADS or hardware concurrency.
int num_threads();

}  // namespace sip
