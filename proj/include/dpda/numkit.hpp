#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace dpda::numkit {

// Flat parameter/gradient vector. One ParamVector spans all model
// parameters; its length is fixed for the lifetime of a training run.
using ParamVector = std::vector<double>;

// Deterministic pseudo-random generator: xoshiro256++ with state seeded
// through the splitmix64 finalizer over (seed, stream). The algorithm is
// fixed so that a given (seed, stream) pair produces the identical value
// sequence on every platform; all derived draws (uniform, normal,
// integers) are built only from next_u64(), never from std::
// distributions. A generator instance is single-owner: do not share one
// across threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform();
    // Uniform on [lo, hi).
    double uniform(double lo, double hi);
    // Standard normal via Box-Muller; the second deviate of each pair is
    // cached, so draws come in a deterministic order.
    double normal();
    // Uniform integer in [0, n) via 128-bit multiply reduction.
    std::uint64_t uniform_int(std::uint64_t n);

    // Deterministic Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_int(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::array<std::uint64_t, 4> state_{};
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

// Inner product, accumulated in 64-bit floats. Throws DimensionError on
// length mismatch.
double dot(const ParamVector& a, const ParamVector& b);

// Euclidean norm.
double norm(const ParamVector& a);

// Cosine similarity, clamped to [-1, 1] to absorb rounding. Throws
// DegenerateGradientError when either vector has zero norm.
double cosine(const ParamVector& a, const ParamVector& b);

// Gram-Schmidt orthonormalization of a pair: first output is d1/|d1|,
// second is the normalized residual of d2 against d1. Guarantees
// |<u1,u2>| <= 1e-10 and unit norms within 1e-12. Throws
// ResampleRequiredError when the residual norm falls below 1e-12 * |d2|
// (near-parallel inputs).
std::pair<ParamVector, ParamVector> orthonormalize_pair(const ParamVector& d1,
                                                        const ParamVector& d2);

// Golden-section minimizer for a continuous unimodal f on [lo, hi].
// Returns w* with |w* - argmin| <= tol. Throws InputError on a bad
// bracket and NumericError if f evaluates non-finite.
double minimize_scalar(const std::function<double(double)>& f, double lo,
                       double hi, double tol);

// --- small vector helpers ---

// y += a * x
void axpy(double a, const ParamVector& x, ParamVector& y);

// ca*a + cb*b
ParamVector lincomb(double ca, const ParamVector& a, double cb,
                    const ParamVector& b);

// 0.5*(a[i] + b[i]) elementwise
ParamVector mean_pair(const ParamVector& a, const ParamVector& b);

bool all_finite(const ParamVector& a);

} // namespace dpda::numkit
