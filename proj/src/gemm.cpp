#include "sip/gemm.hpp"

#include <cblas.h>
#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <thread>

extern "C" void openblas_set_num_threads(int);

namespace sip {

namespace {

int resolve_threads() {
    if (const char* env = std::getenv("SIP_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct BlasInit {
    BlasInit() {
        // All parallelism is managed here via OpenMP; BLAS calls stay
        // single-threaded so per-element accumulation order is fixed.
        openblas_set_num_threads(1);
        omp_set_num_threads(num_threads());
    }
};

void sgemm_1t(bool ta, bool tb, int m, int n, int k, float alpha, const float* a,
              int lda, const float* b, int ldb, float beta, float* c, int ldc) {
    cblas_sgemm(CblasRowMajor, ta ? CblasTrans : CblasNoTrans,
                tb ? CblasTrans : CblasNoTrans, m, n, k, alpha, a, lda, b, ldb,
                beta, c, ldc);
}

void dgemm_1t(bool ta, bool tb, int m, int n, int k, double alpha, const double* a,
              int lda, const double* b, int ldb, double beta, double* c, int ldc) {
    cblas_dgemm(CblasRowMajor, ta ? CblasTrans : CblasNoTrans,
                tb ? CblasTrans : CblasNoTrans, m, n, k, alpha, a, lda, b, ldb,
                beta, c, ldc);
}

// Column offset of op(B) column n0 in the stored B buffer.
template <typename T>
const T* slice_b(const T* b, bool trans_b, int ldb, int n0) {
    return trans_b ? b + static_cast<std::ptrdiff_t>(n0) * ldb : b + n0;
}

template <typename T, typename Fn>
void gemm_impl(Fn kernel, bool ta, bool tb, int m, int n, int k, T alpha,
               const T* a, int lda, const T* b, int ldb, T beta, T* c, int ldc) {
    static BlasInit init;
    const int threads = num_threads();
    // Small outputs are not worth splitting.
    if (threads == 1 || static_cast<long long>(m) * n < 16384) {
        kernel(ta, tb, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
        return;
    }
    const int chunks = std::min(threads, std::max(1, n / 64));
#pragma omp parallel for schedule(static)
    for (int ci = 0; ci < chunks; ++ci) {
        const int n0 = static_cast<int>(static_cast<long long>(n) * ci / chunks);
        const int n1 = static_cast<int>(static_cast<long long>(n) * (ci + 1) / chunks);
        if (n1 > n0)
            kernel(ta, tb, m, n1 - n0, k, alpha, a, lda, slice_b(b, tb, ldb, n0),
                   ldb, beta, c + n0, ldc);
    }
}

}  // namespace

int num_threads() {
    static const int n = resolve_threads();
    return n;
}

void gemm(bool ta, bool tb, int m, int n, int k, float alpha, const float* a,
          int lda, const float* b, int ldb, float beta, float* c, int ldc) {
    gemm_impl<float>(sgemm_1t, ta, tb, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
}

void gemm(bool ta, bool tb, int m, int n, int k, double alpha, const double* a,
          int lda, const double* b, int ldb, double beta, double* c, int ldc) {
    gemm_impl<double>(dgemm_1t, ta, tb, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
}

}  // namespace sip
