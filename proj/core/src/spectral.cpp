#include "wigner/spectral.hpp"

#include <cmath>
#include <utility>

#include "wigner/errors.hpp"

namespace wigner::spectral {

namespace {

constexpr long double kTwoPi = 6.283185307179586476925286766559005768L;

}  // namespace

std::complex<double> unit_phase(long double phase) {
    // the libm long-double routines reduce exactly; fmod by a rounded 2 pi would drift with |phase|
    return {static_cast<double>(std::cos(phase)), static_cast<double>(std::sin(phase))};
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

Fft::Fft(std::size_t n) : n_(n) {
    if (n == 0 || (n & (n - 1)) != 0) {
        throw ConfigurationError("FFT length must be a power of two");
    }
    twiddle_.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        twiddle_[k] = unit_phase(-kTwoPi * static_cast<long double>(k) / static_cast<long double>(n));
    }
    bitrev_.resize(n);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) {
        ++bits;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < bits; ++b) {
            r |= ((i >> b) & 1U) << (bits - 1 - b);
        }
        bitrev_[i] = r;
    }
}

void Fft::forward(std::span<std::complex<double>> data) const { transform(data, false); }

void Fft::backward(std::span<std::complex<double>> data) const { transform(data, true); }

void Fft::transform(std::span<std::complex<double>> data, bool inverse) const {
    if (data.size() != n_) {
        throw ConfigurationError("FFT buffer length mismatch");
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (i < bitrev_[i]) {
            std::swap(data[i], data[bitrev_[i]]);
        }
    }
    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n_ / len;
        for (std::size_t start = 0; start < n_; start += len) {
            for (std::size_t k = 0; k < half; ++k) {
                std::complex<double> w = twiddle_[k * stride];
                if (inverse) {
                    w = std::conj(w);
                }
                const std::complex<double> u = data[start + k];
                const std::complex<double> v = data[start + k + half] * w;
                data[start + k] = u + v;
                data[start + k + half] = u - v;
            }
        }
    }
}

ChirpZ::ChirpZ(std::size_t n_in, double y0, double dy, std::size_t n_out, double w0, double dw)
    : n_in_(n_in), n_out_(n_out), fft_(next_pow2(n_in + n_out - 1)) {
    const std::size_t len = fft_.size();
    const long double theta = static_cast<long double>(dw) * static_cast<long double>(dy);

    pre_.resize(n_in);
    for (std::size_t j = 0; j < n_in; ++j) {
        const long double jj = static_cast<long double>(j);
        pre_[j] = unit_phase(-(static_cast<long double>(w0) * jj * dy + 0.5L * theta * jj * jj));
    }
    post_.resize(n_out);
    for (std::size_t m = 0; m < n_out; ++m) {
        const long double mm = static_cast<long double>(m);
        post_[m] = unit_phase(-(static_cast<long double>(w0) * y0 + mm * dw * y0 + 0.5L * theta * mm * mm));
    }
    // kernel k in [-(n_in-1), n_out-1] stored cyclically
    kernel_hat_.assign(len, {0.0, 0.0});
    for (std::size_t k = 0; k < n_out; ++k) {
        const long double kk = static_cast<long double>(k);
        kernel_hat_[k] = unit_phase(0.5L * theta * kk * kk);
    }
    for (std::size_t k = 1; k < n_in; ++k) {
        const long double kk = static_cast<long double>(k);
        kernel_hat_[len - k] = unit_phase(0.5L * theta * kk * kk);
    }
    fft_.forward(kernel_hat_);
}

void ChirpZ::apply(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const {
    if (in.size() != n_in_ || out.size() != n_out_) {
        throw ConfigurationError("chirp-z buffer length mismatch");
    }
    const std::size_t len = fft_.size();
    std::vector<std::complex<double>> buf(len, {0.0, 0.0});
    for (std::size_t j = 0; j < n_in_; ++j) {
        buf[j] = in[j] * pre_[j];
    }
    fft_.forward(buf);
    for (std::size_t k = 0; k < len; ++k) {
        buf[k] *= kernel_hat_[k];
    }
    fft_.backward(buf);
    const double scale = 1.0 / static_cast<double>(len);
    for (std::size_t m = 0; m < n_out_; ++m) {
        out[m] = buf[m] * post_[m] * scale;
    }
}

}  // namespace wigner::spectral
