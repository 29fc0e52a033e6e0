#include "horn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <optional>
#include <stdexcept>

#include "horn/errors.hpp"

namespace horn {

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("matrix size mismatch");
    Matrix z(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
        for (std::size_t k = 0; k < x.n_; ++k) {
            const double a = x(i, k);
            for (std::size_t j = 0; j < x.n_; ++j) z(i, j) += a * y(k, j);
        }
    return z;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("matrix size mismatch");
    Matrix z(x);
    for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
    return z;
}

Matrix operator-(const Matrix& x, const Matrix& y) { return x + (-y); }

Matrix operator-(const Matrix& x) {
    Matrix z(x);
    for (double& v : z.a_) v = -v;
    return z;
}

double Matrix::max_abs() const noexcept {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

double Matrix::determinant() const {
    Matrix lu(*this);
    double det = 1.0;
    for (std::size_t k = 0; k < n_; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n_; ++i)
            if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
        if (lu(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(lu(k, j), lu(piv, j));
            det = -det;
        }
        det *= lu(k, k);
        for (std::size_t i = k + 1; i < n_; ++i) {
            const double f = lu(i, k) / lu(k, k);
            for (std::size_t j = k; j < n_; ++j) lu(i, j) -= f * lu(k, j);
        }
    }
    return det;
}

OrthogonalMatrix::OrthogonalMatrix(Matrix m) : m_(std::move(m)) {
    if ((m_.transposed() * m_ - Matrix::identity(m_.size())).max_abs() > 1e-12)
        throw std::invalid_argument("matrix is not orthogonal");
}

ComplexStructure::ComplexStructure(Matrix j) : j_(std::move(j)) {
    const auto id = Matrix::identity(j_.size());
    if ((j_ * j_ + id).max_abs() > 1e-12) throw std::invalid_argument("J^2 != -Id");
    if ((j_.transposed() * j_ - id).max_abs() > 1e-12) throw std::invalid_argument("J is not orthogonal");
}

ComplexStructure ComplexStructure::conjugated(const OrthogonalMatrix& r) {
    const auto& m = r.matrix();
    if (m.size() % 2 != 0) throw std::invalid_argument("complex structures need even dimension");
    Matrix j = m.transposed() * standard_j0(m.size() / 2).matrix() * m;
    return ComplexStructure(std::move(j));
}

ComplexStructure standard_j0(std::size_t p) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    Matrix j(2 * p);
    for (std::size_t i = 0; i < p; ++i) {
        j(i, p + i) = -1.0;
        j(p + i, i) = 1.0;
    }
    return ComplexStructure(std::move(j));
}

// ---------------------------------------------------------------------------
// Random numbers

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

Rng Rng::for_stream(std::uint64_t seed, std::uint64_t index) { return Rng(splitmix64(seed + splitmix64(index))); }

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

OrthogonalMatrix random_rotation(std::size_t n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("rotation dimension must be >= 1");
    Matrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.gaussian();

    // Modified Gram-Schmidt on columns, two passes; the implied triangular
    // factor has a positive diagonal, which makes the factorization unique.
    Matrix q(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = g(i, c);
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < c; ++k) {
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += q(i, k) * v[i];
                for (std::size_t i = 0; i < n; ++i) v[i] -= dot * q(i, k);
            }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) q(i, c) = v[i] / norm;
    }
    if (q.determinant() < 0)
        for (std::size_t i = 0; i < n; ++i) q(i, 0) = -q(i, 0);
    return OrthogonalMatrix(std::move(q));
}

OrthogonalMatrix random_rotation(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return random_rotation(n, rng);
}

// ---------------------------------------------------------------------------
// Eigenvalues

Eigensystem jacobi_eigenvalues(Matrix a, int max_sweeps) {
    const std::size_t n = a.size();
    const double scale = std::max(1.0, a.max_abs());
    const double threshold = 1e-13 * scale;
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    Eigensystem out;
    while (off_norm() >= threshold) {
        if (out.sweeps == max_sweeps)
            throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) + " sweeps");
        ++out.sweeps;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                // Rotation angle from the stable tan formula.
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    for (std::size_t i = 0; i < n; ++i) out.values.push_back(a(i, i));
    std::sort(out.values.begin(), out.values.end(), std::greater<>());
    return out;
}

// ---------------------------------------------------------------------------
// Spectra

SpectrumSample make_sample(std::vector<double> eigenvalues) {
    if (eigenvalues.size() % 2 != 0) throw std::invalid_argument("spectrum length must be even");
    std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
    SpectrumSample s;
    s.raw = std::move(eigenvalues);
    for (std::size_t i = 0; i < s.raw.size(); i += 2) {
        s.collapsed.push_back((s.raw[i] + s.raw[i + 1]) / 2.0);
        s.pairing_defect = std::max(s.pairing_defect, std::abs(s.raw[i] - s.raw[i + 1]));
    }
    return s;
}

double spectral_scale(std::span<const double> sigma) { return std::max(1.0, sigma.empty() ? 0.0 : sigma[0]); }

namespace {

void check_sigma(std::span<const double> sigma) {
    if (sigma.empty() || sigma.size() % 2 != 0) throw std::invalid_argument("sigma must have positive even length");
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
        if (sigma[i] < sigma[i + 1]) throw std::invalid_argument("sigma must be weakly decreasing");
}

// Symmetric part, so round-off asymmetry does not reach the solver.
Matrix symmetrized(const Matrix& m) {
    Matrix s(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) s(i, j) = 0.5 * (m(i, j) + m(j, i));
    return s;
}

}  // namespace

SpectrumSample sum_spectrum(std::span<const double> sigma, const ComplexStructure& j) {
    check_sigma(sigma);
    const auto& jm = j.matrix();
    if (jm.size() != sigma.size()) throw std::invalid_argument("J and sigma dimensions differ");
    const Matrix s = Matrix::diagonal(sigma);
    return make_sample(jacobi_eigenvalues(symmetrized(s + jm.transposed() * s * jm)).values);
}

SpectrumSample rotation_spectrum(std::span<const double> sigma, const OrthogonalMatrix& r) {
    check_sigma(sigma);
    const auto& rm = r.matrix();
    if (rm.size() != sigma.size()) throw std::invalid_argument("R and sigma dimensions differ");
    const Matrix s = Matrix::diagonal(sigma);
    return make_sample(jacobi_eigenvalues(symmetrized(s + rm.transposed() * s * rm)).values);
}

BlockIdentityReport block_identity_check(std::span<const double> sigma, const OrthogonalMatrix& rho) {
    check_sigma(sigma);
    const std::size_t p = sigma.size() / 2;
    const Matrix& r = rho.matrix();
    if (r.size() != p) throw std::invalid_argument("rho must be p x p");

    std::vector<double> minus, plus, both;
    for (std::size_t i = 0; i < p; ++i) {
        minus.push_back(sigma[2 * i]);
        plus.push_back(sigma[2 * i + 1]);
    }
    both = minus;
    both.insert(both.end(), plus.begin(), plus.end());

    const Matrix d = Matrix::diagonal(both);
    Matrix k(2 * p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            k(i, p + j) = -r(j, i);  // -rho^{-1} = -rho^T
            k(p + i, j) = r(i, j);
        }
    const Matrix k_inv = k.transposed();
    const Matrix lhs = d + k_inv * d * k;

    const Matrix sm = Matrix::diagonal(minus), sp = Matrix::diagonal(plus);
    const Matrix rt = r.transposed();
    const Matrix upper = sm + rt * sp * r;
    const Matrix lower = r * sm * rt + sp;
    Matrix rhs(2 * p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            rhs(i, j) = upper(i, j);
            rhs(p + i, p + j) = lower(i, j);
        }

    BlockIdentityReport out;
    out.max_discrepancy = (lhs - rhs).max_abs();
    out.sample = make_sample(jacobi_eigenvalues(symmetrized(lhs)).values);
    out.small_spectrum = jacobi_eigenvalues(symmetrized(upper)).values;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t h = 0; h < 2; ++h)
            out.spectrum_discrepancy =
                std::max(out.spectrum_discrepancy, std::abs(out.sample.raw[2 * i + h] - out.small_spectrum[i]));
    return out;
}

std::vector<SampleRecord> monte_carlo_q(std::span<const double> sigma, std::size_t samples, std::uint64_t seed,
                                        SamplingMode mode, Execution execution) {
    check_sigma(sigma);
    const std::size_t n = sigma.size();
    std::vector<SampleRecord> out(samples);
    auto draw = [&](std::size_t i) {
        Rng rng = Rng::for_stream(seed, i);
        SampleRecord rec;
        rec.index = i;
        switch (mode) {
            case SamplingMode::random:
                rec.spectrum = sum_spectrum(sigma, ComplexStructure::conjugated(random_rotation(n, rng)));
                break;
            case SamplingMode::block: {
                auto check = block_identity_check(sigma, random_rotation(n / 2, rng));
                rec.block_discrepancy = check.spectrum_discrepancy;
                rec.spectrum = std::move(check.sample);
                break;
            }
            case SamplingMode::rotation:
                rec.spectrum = rotation_spectrum(sigma, random_rotation(n, rng));
                break;
        }
        out[i] = std::move(rec);
    };
    if (execution == Execution::parallel) {
        const auto count = static_cast<std::ptrdiff_t>(samples);
        // ConvergenceError is not expected at these sizes; if it happens the
        // first one is rethrown after the loop.
        std::exception_ptr error;
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            try {
                draw(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
    } else {
        for (std::size_t i = 0; i < samples; ++i) draw(i);
    }
    return out;
}

SampleSummary summarize(std::span<const double> sigma, std::span<const SampleRecord> records, SamplingMode mode,
                        double hull_tolerance) {
    check_sigma(sigma);
    const std::size_t p = sigma.size() / 2;
    SampleSummary sum;
    sum.samples = records.size();
    sum.collapsed_min.assign(p, std::numeric_limits<double>::infinity());
    sum.collapsed_max.assign(p, -std::numeric_limits<double>::infinity());
    double trace = 0.0;
    for (double x : sigma) trace += x;

    const bool integral = std::all_of(sigma.begin(), sigma.end(), [](double x) { return x >= 0 && x == std::floor(x); });
    std::optional<LatticeHull> hull;
    // The 2p-dimensional hull is built by brute force; only small p.
    if (integral && (mode != SamplingMode::rotation || p <= 2)) {
        std::vector<int> parts;
        for (double x : sigma) parts.push_back(static_cast<int>(x));
        const Partition s(parts);
        hull = mode == SamplingMode::rotation ? p_points(s).hull() : p1_points(s).hull();
        sum.hull_checked = true;
    }

    for (const auto& rec : records) {
        const auto& sp = rec.spectrum;
        for (std::size_t i = 0; i < p; ++i) {
            sum.collapsed_min[i] = std::min(sum.collapsed_min[i], sp.collapsed[i]);
            sum.collapsed_max[i] = std::max(sum.collapsed_max[i], sp.collapsed[i]);
        }
        sum.max_pairing_defect = std::max(sum.max_pairing_defect, sp.pairing_defect);
        double s = 0.0;
        for (double x : sp.raw) s += x;
        sum.max_trace_error = std::max(sum.max_trace_error, std::abs(s - 2.0 * trace));
        sum.max_block_discrepancy = std::max(sum.max_block_discrepancy, rec.block_discrepancy);
        if (hull) {
            const auto& point = mode == SamplingMode::rotation ? sp.raw : sp.collapsed;
            if (hull->contains_approx(point, hull_tolerance)) ++sum.inside_hull;
        }
    }
    return sum;
}

std::string to_string(SamplingMode mode) {
    switch (mode) {
        case SamplingMode::random: return "random";
        case SamplingMode::block: return "block";
        case SamplingMode::rotation: return "rotation";
    }
    return "?";
}

SamplingMode parse_sampling_mode(const std::string& text) {
    if (text == "random") return SamplingMode::random;
    if (text == "block") return SamplingMode::block;
    if (text == "rotation") return SamplingMode::rotation;
    throw std::invalid_argument("unknown sampling mode '" + text + "'");
}

}  // namespace horn
