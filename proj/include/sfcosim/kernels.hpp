#pragma once

// Data-parallel numeric kernels used by the solvers and the signal path.
//
// Every kernel exists in two versions: a plain serial reference and an
// OpenMP-parallel one. The parallel versions only distribute independent
// output elements across threads (no floating-point reductions are
// reordered), so both versions produce bit-identical results for any
// thread count. The unsuffixed entry points dispatch on the process-wide
// execution mode.

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace sfcosim::kernels {

enum class Exec { serial, parallel };

void set_execution_mode(Exec mode);
Exec execution_mode();

/// True when the binary was compiled with OpenMP support.
bool openmp_enabled();
int thread_count();

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Dense LU with partial pivoting (row-major storage), factorization reusable
// across solves. T is double or std::complex<double>.
// ---------------------------------------------------------------------------

template <class T>
struct LuFactors {
    int n = 0;
    std::vector<T> lu;       // row-major n*n, L below diagonal (unit), U on/above
    std::vector<int> pivots; // row swapped with k at elimination step k
};

template <class T>
LuFactors<T> lu_factor_serial(std::vector<T> a, int n);
template <class T>
LuFactors<T> lu_factor_parallel(std::vector<T> a, int n);
template <class T>
LuFactors<T> lu_factor(std::vector<T> a, int n);

/// In-place solve of A x = b using a prior factorization.
template <class T>
void lu_solve(const LuFactors<T>& f, std::span<T> b);

// ---------------------------------------------------------------------------
// Discrete Fourier transform, out[k] = sum_j in[j] e^{-2*pi*i*j*k/N}.
// O(N^2); record lengths in this project are small enough that the direct
// form beats maintaining an FFT. Parallel over output bins.
// ---------------------------------------------------------------------------

std::vector<std::complex<double>> dft_serial(std::span<const std::complex<double>> in);
std::vector<std::complex<double>> dft_parallel(std::span<const std::complex<double>> in);
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> in);

// ---------------------------------------------------------------------------
// Companion-branch state update: the per-step inner loop of the nodal
// solvers. For each branch b with terminal nodes (from, to):
//   dv   = v[from] - v[to]
//   i_b  = g[b] * dv + ih[b]
//   ih[b] = alpha[b] * i_b + beta[b] * dv
// v is indexed by node id with v[0] = ground = 0. Parallel over branches.
// ---------------------------------------------------------------------------

template <class T>
void update_companion_state_serial(std::span<const T> g, std::span<const T> alpha,
                                   std::span<const T> beta, std::span<const int> from,
                                   std::span<const int> to, std::span<const T> node_v,
                                   std::span<T> ih, std::span<T> current);
template <class T>
void update_companion_state_parallel(std::span<const T> g, std::span<const T> alpha,
                                     std::span<const T> beta, std::span<const int> from,
                                     std::span<const int> to, std::span<const T> node_v,
                                     std::span<T> ih, std::span<T> current);
template <class T>
void update_companion_state(std::span<const T> g, std::span<const T> alpha,
                            std::span<const T> beta, std::span<const int> from,
                            std::span<const int> to, std::span<const T> node_v,
                            std::span<T> ih, std::span<T> current);

// ---------------------------------------------------------------------------
// Envelope demodulation, out[i] = Re(env[i] * e^{j*omega_s*(t0 + i*dt)}).
// ---------------------------------------------------------------------------

void demodulate_serial(std::span<const std::complex<double>> env, double omega_s,
                       double t0, double dt, std::span<double> out);
void demodulate_parallel(std::span<const std::complex<double>> env, double omega_s,
                         double t0, double dt, std::span<double> out);
void demodulate(std::span<const std::complex<double>> env, double omega_s, double t0,
                double dt, std::span<double> out);

// ---------------------------------------------------------------------------
// Batched multi-tone synthesis over a uniform time grid:
//   out[i] = sum_c amp[c] * trig(2*pi*freq[c]*(t0 + i*dt) + phase[c])
// trig is cos (quadrature = false) or sin (quadrature = true).
// ---------------------------------------------------------------------------

void trig_sum_batch_serial(std::span<const double> freq, std::span<const double> amp,
                           std::span<const double> phase, double t0, double dt,
                           bool quadrature, std::span<double> out);
void trig_sum_batch_parallel(std::span<const double> freq, std::span<const double> amp,
                             std::span<const double> phase, double t0, double dt,
                             bool quadrature, std::span<double> out);
void trig_sum_batch(std::span<const double> freq, std::span<const double> amp,
                    std::span<const double> phase, double t0, double dt, bool quadrature,
                    std::span<double> out);

// ---------------------------------------------------------------------------
// Chunked sum of squares. Both versions accumulate fixed-size chunks and
// combine the partial sums in index order, so the result does not depend on
// the thread count.
// ---------------------------------------------------------------------------

double sum_squares_serial(std::span<const double> x);
double sum_squares_parallel(std::span<const double> x);
double sum_squares(std::span<const double> x);

} // namespace sfcosim::kernels
