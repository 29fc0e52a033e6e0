#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "horn/horn_polytopes.hpp"
#include "horn/sweep.hpp"

namespace horn {

/// Dense square matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> d);

    std::size_t size() const noexcept { return n_; }
    double& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }

    Matrix transposed() const;
    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Matrix operator+(const Matrix& x, const Matrix& y);
    friend Matrix operator-(const Matrix& x, const Matrix& y);
    friend Matrix operator-(const Matrix& x);

    double max_abs() const noexcept;
    /// Determinant by LU with partial pivoting.
    double determinant() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

/// R with R^T R = Id (1e-12).
class OrthogonalMatrix {
public:
    explicit OrthogonalMatrix(Matrix m);
    const Matrix& matrix() const noexcept { return m_; }

private:
    Matrix m_;
};

/// J with J^2 = -Id and J^T J = Id (1e-12).
class ComplexStructure {
public:
    explicit ComplexStructure(Matrix j);
    const Matrix& matrix() const noexcept { return j_; }

    /// R^{-1} J0 R.
    static ComplexStructure conjugated(const OrthogonalMatrix& r);

private:
    Matrix j_;
};

/// [[0, -Id], [Id, 0]] in dimension 2p.
ComplexStructure standard_j0(std::size_t p);

/// std::mt19937_64 (whose output sequence is fixed by the standard) with
/// normals from the Box-Muller transform, so a seed gives the same stream on
/// every platform. uniform() takes the top 53 bits of one engine output;
/// gaussian() consumes two uniforms per pair and caches the second value.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Stream for item `index` of a run seeded with `seed`: the engine seed
    /// is splitmix64(seed + splitmix64(index)).
    static Rng for_stream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next() { return engine_(); }
    double uniform();  // [0, 1)
    double gaussian();

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-distributed element of SO(n): Gram-Schmidt on a Gaussian matrix
/// (positive diagonal in the triangular factor), then the first column is
/// negated if the determinant is -1.
OrthogonalMatrix random_rotation(std::size_t n, Rng& rng);
OrthogonalMatrix random_rotation(std::size_t n, std::uint64_t seed);

struct Eigensystem {
    std::vector<double> values;  // descending
    int sweeps = 0;
};

/// Cyclic Jacobi rotations on a symmetric matrix until the off-diagonal
/// Frobenius norm drops below 1e-13 * scale, scale = max(1, max |a_ij|).
/// Throws ConvergenceError after `max_sweeps`.
Eigensystem jacobi_eigenvalues(Matrix a, int max_sweeps = 100);

/// An ordered spectrum of a 2p x 2p matrix and its pair averages.
struct SpectrumSample {
    std::vector<double> raw;        // descending, length 2p
    std::vector<double> collapsed;  // (raw[2i] + raw[2i+1]) / 2
    double pairing_defect = 0.0;    // max |raw[2i] - raw[2i+1]|
};

SpectrumSample make_sample(std::vector<double> eigenvalues);

/// max(1, sigma_1).
double spectral_scale(std::span<const double> sigma);

/// Spectrum of S + J^{-1} S J with S = diag(sigma).
SpectrumSample sum_spectrum(std::span<const double> sigma, const ComplexStructure& j);
/// Spectrum of S + R^{-1} S R with S = diag(sigma).
SpectrumSample rotation_spectrum(std::span<const double> sigma, const OrthogonalMatrix& r);

/// Both sides of the block identity for K = [[0, -rho^{-1}], [rho, 0]] and
/// D = diag(sigma_-, sigma_+):
///   D + K^{-1} D K  =  blockdiag(s- + rho^{-1} s+ rho, rho s- rho^{-1} + s+).
struct BlockIdentityReport {
    double max_discrepancy = 0.0;          // entrywise, lhs vs rhs
    double spectrum_discrepancy = 0.0;     // 2p-spectrum vs doubled p-spectrum
    SpectrumSample sample;                 // spectrum of the left side
    std::vector<double> small_spectrum;    // spectrum of s- + rho^{-1} s+ rho
};
BlockIdentityReport block_identity_check(std::span<const double> sigma, const OrthogonalMatrix& rho);

enum class SamplingMode { random, block, rotation };

struct SampleRecord {
    std::uint64_t index = 0;
    SpectrumSample spectrum;
    double block_discrepancy = 0.0;  // block mode only: spectrum vs doubled p-spectrum
};

/// `samples` spectra; sample i uses Rng::for_stream(seed, i), so the output
/// is independent of the thread count.
///   random:   J = R^{-1} J0 R, R Haar in SO(2p); spectrum of S + J^{-1} S J.
///   block:    rho Haar in SO(p); spectrum of D + K^{-1} D K.
///   rotation: R Haar in SO(2p); spectrum of S + R^{-1} S R.
std::vector<SampleRecord> monte_carlo_q(std::span<const double> sigma, std::size_t samples, std::uint64_t seed,
                                        SamplingMode mode = SamplingMode::random,
                                        Execution execution = Execution::parallel);

/// Aggregates of a sample run against the lattice polytopes of an integer
/// sigma. Hull tests use `hull_tolerance`; the target is hull(P1) in p
/// coordinates for random and block modes and hull(P) in 2p coordinates for
/// rotation mode.
struct SampleSummary {
    std::size_t samples = 0;
    std::vector<double> collapsed_min, collapsed_max;
    double max_pairing_defect = 0.0;
    double max_trace_error = 0.0;
    double max_block_discrepancy = 0.0;
    std::size_t inside_hull = 0;
    bool hull_checked = false;

    double hull_pass_rate() const { return samples == 0 ? 1.0 : static_cast<double>(inside_hull) / samples; }
};

SampleSummary summarize(std::span<const double> sigma, std::span<const SampleRecord> records, SamplingMode mode,
                        double hull_tolerance = 1e-7);

std::string to_string(SamplingMode mode);
SamplingMode parse_sampling_mode(const std::string& text);

}  // namespace horn
