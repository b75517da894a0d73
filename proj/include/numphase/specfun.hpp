// Copyright 2026 The numphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "numphase/errors.hpp"

namespace numphase {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr unsigned kDefaultHermiteMaxOrder = 512;
inline constexpr std::size_t kMinGridPoints = 16;
inline constexpr std::size_t kDefaultGridPoints = 2048;

namespace detail {
template <class T>
struct ScalarPart {
    using type = T;
    static constexpr bool is_complex = false;
};
template <class T>
struct ScalarPart<std::complex<T>> {
    using type = T;
    static constexpr bool is_complex = true;
};
}  // namespace detail

/// Neumaier compensated accumulator. Works for real and std::complex scalars.
template <class T>
class CompensatedSum {
   public:
    void add(T value) {
        if constexpr (detail::ScalarPart<T>::is_complex) {
            add_part(re_, re_c_, value.real());
            add_part(im_, im_c_, value.imag());
        } else {
            add_part(re_, re_c_, value);
        }
    }

    T value() const {
        if constexpr (detail::ScalarPart<T>::is_complex) {
            return T(re_ + re_c_, im_ + im_c_);
        } else {
            return re_ + re_c_;
        }
    }

   private:
    using Part = typename detail::ScalarPart<T>::type;

    static void add_part(Part& sum, Part& carry, Part x) {
        Part t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }

    Part re_{};
    Part re_c_{};
    Part im_{};
    Part im_c_{};
};

/// ln(n!). For n <= 20 the factorial is formed exactly in 64-bit integers first.
inline double log_factorial(std::uint64_t n) {
    if (n <= 20) {
        std::uint64_t f = 1;
        for (std::uint64_t k = 2; k <= n; ++k) f *= k;
        return std::log(static_cast<long double>(f));
    }
    return std::lgamma(static_cast<double>(n) + 1.0);
}

/// Cached ln(k!) for k = 0..n, used in the inner loops of the scenario kernels.
class LogFactorialTable {
   public:
    explicit LogFactorialTable(std::size_t n) : table_(n + 1) {
        for (std::size_t k = 0; k <= n; ++k) table_[k] = log_factorial(k);
    }

    double operator[](std::size_t k) const { return k < table_.size() ? table_[k] : log_factorial(k); }

    std::size_t size() const { return table_.size(); }

   private:
    std::vector<double> table_;
};

/// Physicists' Hermite polynomial H_n(z) by forward recurrence
/// H_{n+1} = 2z H_n - 2n H_{n-1}, carried in extended precision.
inline Complex hermite(unsigned n, Complex z, unsigned max_order = kDefaultHermiteMaxOrder) {
    if (n > max_order) {
        fail(ErrorCode::OrderTooLarge,
             "hermite order " + std::to_string(n) + " exceeds max order " + std::to_string(max_order));
    }
    using Wide = std::complex<long double>;
    const Wide zw(z.real(), z.imag());
    Wide prev(1.0L, 0.0L);
    if (n == 0) return Complex(1.0, 0.0);
    Wide cur = 2.0L * zw;
    for (unsigned k = 1; k < n; ++k) {
        Wide next = 2.0L * zw * cur - 2.0L * static_cast<long double>(k) * prev;
        prev = cur;
        cur = next;
    }
    Complex out(static_cast<double>(cur.real()), static_cast<double>(cur.imag()));
    if (!std::isfinite(out.real()) || !std::isfinite(out.imag())) {
        fail(ErrorCode::Overflow, "hermite H_" + std::to_string(n) + " overflows double");
    }
    return out;
}

/// u_k = H_k(z) w^k / sqrt(2^k k!) for k = 0..n.
///
/// The weight w is folded into the recurrence so that the sequence stays in range
/// when the bare polynomials would overflow; this is the form in which Hermite
/// polynomials enter squeezed-state number amplitudes.
inline std::vector<Complex> scaled_hermite_sequence(std::size_t n, Complex z, Complex w) {
    std::vector<Complex> u(n + 1);
    u[0] = 1.0;
    if (n == 0) return u;
    u[1] = std::sqrt(2.0) * z * w;
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        u[k + 1] = std::sqrt(2.0 / (kk + 1.0)) * z * w * u[k] - std::sqrt(kk / (kk + 1.0)) * w * w * u[k - 1];
    }
    for (std::size_t k = 0; k <= n; ++k) {
        if (!std::isfinite(u[k].real()) || !std::isfinite(u[k].imag())) {
            fail(ErrorCode::Overflow, "scaled hermite sequence overflows at order " + std::to_string(k));
        }
    }
    return u;
}

template <class T>
struct SeriesValue {
    T value;
    long double max_abs_term;  // largest |term|; max_abs_term / |value| bounds the cancellation
};

namespace detail {

inline void check_terminating_poles(unsigned p, unsigned m, double c) {
    const unsigned terms = std::min(p, m);
    if (c <= 0.0 && c == std::floor(c) && -c < static_cast<double>(terms)) {
        fail(ErrorCode::PoleInSeries, "2F1 denominator (c)_k vanishes at c = " + std::to_string(c) +
                                          " before the series terminates at k = " + std::to_string(terms));
    }
}

template <class Wide, class Out>
SeriesValue<Out> hyp2f1_terminating_impl(unsigned p, unsigned m, double c, Wide x) {
    check_terminating_poles(p, m, c);
    const unsigned terms = std::min(p, m);
    CompensatedSum<Wide> sum;
    Wide term = Wide(1.0L);
    long double max_abs = 1.0L;
    sum.add(term);
    for (unsigned k = 0; k < terms; ++k) {
        const long double kk = k;
        const long double ratio =
            (kk - p) * (kk - m) / ((static_cast<long double>(c) + kk) * (kk + 1.0L));
        term = term * ratio * x;
        max_abs = std::max(max_abs, static_cast<long double>(std::abs(term)));
        sum.add(term);
    }
    const Wide v = sum.value();
    if constexpr (ScalarPart<Wide>::is_complex) {
        return {Out(static_cast<double>(v.real()), static_cast<double>(v.imag())), max_abs};
    } else {
        return {static_cast<Out>(v), max_abs};
    }
}

}  // namespace detail

/// Terminating Gauss hypergeometric series 2F1(-p, -m; c; x), with its cancellation diagnostic.
inline SeriesValue<double> hyp2f1_terminating_series(unsigned p, unsigned m, double c, double x) {
    return detail::hyp2f1_terminating_impl<long double, double>(p, m, c, static_cast<long double>(x));
}

inline SeriesValue<Complex> hyp2f1_terminating_series(unsigned p, unsigned m, double c, Complex x) {
    using Wide = std::complex<long double>;
    return detail::hyp2f1_terminating_impl<Wide, Complex>(p, m, c, Wide(x.real(), x.imag()));
}

/// 2F1(-p, -m; c; x) = sum_{k=0}^{min(p,m)} (-p)_k (-m)_k / ((c)_k k!) x^k.
inline double hyp2f1_terminating(unsigned p, unsigned m, double c, double x) {
    return hyp2f1_terminating_series(p, m, c, x).value;
}

inline Complex hyp2f1_terminating(unsigned p, unsigned m, double c, Complex x) {
    return hyp2f1_terminating_series(p, m, c, x).value;
}

/// w^(p+m) * 2F1(-p, -m; c; x), summed term by term as c_k (x w^2)^k w^(p+m-2k).
///
/// In the dissipative kernels x grows like e^{rate*t} while |w| < 1 decays, and the
/// product stays bounded even where the two factors do not fit in a double.
/// Requires c > 0 (every use has c = l + 1).
inline Complex hyp2f1_terminating_weighted(unsigned p, unsigned m, double c, Complex x, Complex w) {
    if (!(c > 0.0)) fail(ErrorCode::DomainError, "weighted 2F1 requires c > 0");
    const unsigned power = p + m;
    if (w == Complex(0.0)) return power == 0 ? Complex(1.0) : Complex(0.0);
    const unsigned terms = (x == Complex(0.0)) ? 0U : std::min(p, m);
    const Complex log_w = std::log(w);
    const double lead_log = static_cast<double>(power) * log_w.real();

    CompensatedSum<Complex> sum;
    if (lead_log > -600.0) {
        // Direct recurrence; the leading term is representable.
        Complex term = std::exp(static_cast<double>(power) * log_w);
        const Complex step = x * w * w;
        const Complex inv_w2 = 1.0 / (w * w);
        sum.add(term);
        for (unsigned k = 0; k < terms; ++k) {
            const double kk = k;
            const double ratio = (kk - p) * (kk - m) / ((c + kk) * (kk + 1.0));
            term *= ratio * step * inv_w2;
            sum.add(term);
        }
        return sum.value();
    }
    const Complex log_x = terms > 0 ? std::log(x) : Complex(0.0);
    double log_coeff = 0.0;
    for (unsigned k = 0; k <= terms; ++k) {
        if (k > 0) {
            const double kk = k - 1;
            log_coeff += std::log((p - kk) * (m - kk)) - std::log((c + kk) * (kk + 1.0));
        }
        sum.add(std::exp(static_cast<double>(power) * log_w + log_coeff + static_cast<double>(k) * log_x));
    }
    return sum.value();
}

/// Samples of a 2*pi periodic function on theta_k = 2*pi*k/n, k = 0..n-1.
class PeriodicGrid {
   public:
    explicit PeriodicGrid(std::vector<double> values) : values_(std::move(values)) {
        if (values_.size() < kMinGridPoints) {
            fail(ErrorCode::DomainError, "periodic grid needs at least " + std::to_string(kMinGridPoints) +
                                             " points, got " + std::to_string(values_.size()));
        }
        for (double v : values_) {
            if (!std::isfinite(v)) fail(ErrorCode::DomainError, "periodic grid sample is not finite");
        }
    }

    template <class F>
    static PeriodicGrid sample(std::size_t n_points, F&& f) {
        std::vector<double> v(n_points);
        for (std::size_t k = 0; k < n_points; ++k) v[k] = f(theta_at(k, n_points));
        return PeriodicGrid(std::move(v));
    }

    static double theta_at(std::size_t k, std::size_t n_points) {
        return kTwoPi * static_cast<double>(k) / static_cast<double>(n_points);
    }

    std::size_t size() const { return values_.size(); }
    double step() const { return kTwoPi / static_cast<double>(values_.size()); }
    double theta(std::size_t k) const { return theta_at(k, values_.size()); }
    std::span<const double> values() const { return values_; }
    double operator[](std::size_t k) const { return values_[k]; }

   private:
    std::vector<double> values_;
};

/// Periodic trapezoid rule; exact for trigonometric polynomials of degree < n/2.
inline double trapezoid_periodic(const PeriodicGrid& grid) {
    CompensatedSum<double> sum;
    for (double v : grid.values()) sum.add(v);
    return grid.step() * sum.value();
}

/// P(theta) from a Fock cutoff n_max is a trigonometric polynomial of degree <= 2*n_max
/// once both parity sectors are present; the grid must resolve it without aliasing.
inline void require_alias_free(std::size_t grid_points, std::size_t n_max) {
    if (grid_points <= 4 * n_max + 1) {
        fail(ErrorCode::DomainError, "grid_points = " + std::to_string(grid_points) +
                                         " must exceed 4*n_max + 1 = " + std::to_string(4 * n_max + 1));
    }
}

}  // namespace numphase
