#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace wigner::spectral {

// Radix-2 complex FFT of fixed power-of-two length.
class Fft {
public:
    explicit Fft(std::size_t n);

    std::size_t size() const { return n_; }
    // X_k = sum_j x_j exp(-2 pi i jk / n)
    void forward(std::span<std::complex<double>> data) const;
    // Unnormalised inverse (sign flipped, no 1/n).
    void backward(std::span<std::complex<double>> data) const;

private:
    void transform(std::span<std::complex<double>> data, bool inverse) const;

    std::size_t n_;
    std::vector<std::complex<double>> twiddle_;
    std::vector<std::size_t> bitrev_;
};

std::size_t next_pow2(std::size_t n);

// Chirp-z evaluation of
//   out_m = sum_j in_j exp(-i (w0 + m dw)(y0 + j dy)),  j < n_in, m < n_out,
// by Bluestein convolution. Exact discrete sum up to FFT rounding.
class ChirpZ {
public:
    ChirpZ(std::size_t n_in, double y0, double dy, std::size_t n_out, double w0, double dw);

    void apply(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const;

private:
    std::size_t n_in_;
    std::size_t n_out_;
    Fft fft_;
    std::vector<std::complex<double>> pre_;
    std::vector<std::complex<double>> post_;
    std::vector<std::complex<double>> kernel_hat_;
};

// exp(i * phase) with the phase reduced in extended precision.
std::complex<double> unit_phase(long double phase);

}  // namespace wigner::spectral
