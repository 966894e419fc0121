// Copyright (c) the ers2 project authors. All rights reserved.
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

#ifndef ERS2_KERNELS_H_
#define ERS2_KERNELS_H_

#include <cstdint>

namespace ers2 {
namespace kernels {

// Compute kernels behind the nn layers. The OpenMP versions parallelize only
// over independent output elements and keep the per-element accumulation
// order identical to the serial reference, so results are bit-identical for
// any thread count. The serial twins live in kernels::ref and back the
// kernel tests and the bench_kernels comparison target.

// C[m x n] = A[m x k] * B[k x n]  (+= when accumulate)
void matmul(const double* A, const double* B, double* C, int m, int k, int n,
            bool accumulate);
// C[m x n] = A[m x k] * B^T, B stored [n x k]
void matmul_nt(const double* A, const double* B, double* C, int m, int k,
               int n, bool accumulate);
// C[m x n] = A^T * B, A stored [k x m]
void matmul_tn(const double* A, const double* B, double* C, int m, int k,
               int n, bool accumulate);

// 2-D convolution over (C, H, W) maps, zero padding.
// w: [co, ci, kh, kw]; out dims: oh = (h + 2p - kh)/s + 1.
void conv2d_forward(const double* in, const double* w, const double* bias,
                    double* out, int ci, int h, int wd, int co, int kh, int kw,
                    int stride, int pad);
void conv2d_backward_input(const double* dout, const double* w, double* din,
                           int ci, int h, int wd, int co, int kh, int kw,
                           int stride, int pad);
void conv2d_backward_weight(const double* dout, const double* in, double* dw,
                            double* dbias, int ci, int h, int wd, int co,
                            int kh, int kw, int stride, int pad);

// Transposed 2-D convolution; w: [ci, co, kh, kw];
// oh = (h - 1) * s - 2p + kh + output_pad.
void conv2d_transpose_forward(const double* in, const double* w,
                              const double* bias, double* out, int ci, int h,
                              int wd, int co, int kh, int kw, int stride,
                              int pad, int output_pad);
void conv2d_transpose_backward_input(const double* dout, const double* w,
                                     double* din, int ci, int h, int wd,
                                     int co, int kh, int kw, int stride,
                                     int pad, int output_pad);
void conv2d_transpose_backward_weight(const double* dout, const double* in,
                                      double* dw, double* dbias, int ci, int h,
                                      int wd, int co, int kh, int kw,
                                      int stride, int pad, int output_pad);

inline int conv_out_dim(int in, int k, int stride, int pad) {
  return (in + 2 * pad - k) / stride + 1;
}
inline int conv_transpose_out_dim(int in, int k, int stride, int pad,
                                  int output_pad) {
  return (in - 1) * stride - 2 * pad + k + output_pad;
}

namespace ref {
void matmul(const double* A, const double* B, double* C, int m, int k, int n,
            bool accumulate);
void matmul_nt(const double* A, const double* B, double* C, int m, int k,
               int n, bool accumulate);
void matmul_tn(const double* A, const double* B, double* C, int m, int k,
               int n, bool accumulate);
void conv2d_forward(const double* in, const double* w, const double* bias,
                    double* out, int ci, int h, int wd, int co, int kh, int kw,
                    int stride, int pad);
void conv2d_backward_input(const double* dout, const double* w, double* din,
                           int ci, int h, int wd, int co, int kh, int kw,
                           int stride, int pad);
void conv2d_backward_weight(const double* dout, const double* in, double* dw,
                            double* dbias, int ci, int h, int wd, int co,
                            int kh, int kw, int stride, int pad);
void conv2d_transpose_forward(const double* in, const double* w,
                              const double* bias, double* out, int ci, int h,
                              int wd, int co, int kh, int kw, int stride,
                              int pad, int output_pad);
}  // namespace ref

}  // namespace kernels
}  // namespace ers2

#endif  // ERS2_KERNELS_H_
