#include "dpda/numkit.hpp"

#include <algorithm>
#include <cmath>

#include "dpda/errors.hpp"

namespace dpda::numkit {

namespace {

constexpr std::uint64_t kGolden64 = 0x9e3779b97f4a7c15ULL;

// splitmix64 step; also used as a standalone finalizer.
std::uint64_t splitmix_next(std::uint64_t& x) {
    x += kGolden64;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t mix64(std::uint64_t z) {
    return splitmix_next(z);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = mix64(seed) ^ mix64(stream ^ 0x5851f42d4c957f2dULL);
    for (auto& s : state_) s = splitmix_next(x);
    // all-zero state is the one forbidden xoshiro state
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = kGolden64;
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl64(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl64(state_[3], 45);
    return result;
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double Rng::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double u1 = 1.0 - uniform(); // (0, 1], keeps log() finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    cached_normal_ = r * std::sin(theta);
    has_cached_normal_ = true;
    return r * std::cos(theta);
}

std::uint64_t Rng::uniform_int(std::uint64_t n) {
    if (n == 0) throw InputError("Rng::uniform_int: n must be positive");
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

double dot(const ParamVector& a, const ParamVector& b) {
    if (a.size() != b.size())
        throw DimensionError("dot: length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double norm(const ParamVector& a) {
    return std::sqrt(dot(a, a));
}

double cosine(const ParamVector& a, const ParamVector& b) {
    const double na = norm(a);
    const double nb = norm(b);
    if (na == 0.0 || nb == 0.0)
        throw DegenerateGradientError("cosine: zero-norm input");
    return std::clamp(dot(a, b) / (na * nb), -1.0, 1.0);
}

std::pair<ParamVector, ParamVector> orthonormalize_pair(const ParamVector& d1,
                                                        const ParamVector& d2) {
    if (d1.size() != d2.size())
        throw DimensionError("orthonormalize_pair: length mismatch");
    const double n1 = norm(d1);
    const double n2 = norm(d2);
    if (n1 == 0.0 || n2 == 0.0)
        throw DegenerateGradientError("orthonormalize_pair: zero input");

    ParamVector u1 = d1;
    for (auto& v : u1) v /= n1;

    ParamVector r = d2;
    axpy(-dot(r, u1), u1, r);
    if (norm(r) < 1e-12 * n2)
        throw ResampleRequiredError("orthonormalize_pair: near-parallel inputs");
    // second pass removes the rounding residue left by the first
    axpy(-dot(r, u1), u1, r);

    const double nr = norm(r);
    for (auto& v : r) v /= nr;
    return {std::move(u1), std::move(r)};
}

double minimize_scalar(const std::function<double(double)>& f, double lo,
                       double hi, double tol) {
    if (!(lo < hi)) throw InputError("minimize_scalar: requires lo < hi");
    if (!(tol > 0.0)) throw InputError("minimize_scalar: tol must be positive");

    auto eval = [&](double w) {
        const double v = f(w);
        if (!std::isfinite(v))
            throw NumericError("minimize_scalar: non-finite objective value");
        return v;
    };

    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = eval(c);
    double fd = eval(d);
    // 200 iterations shrink the bracket by ~1e-41; the cap only guards
    // against tol below the floating-point resolution of the interval
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = eval(d);
        }
    }
    return 0.5 * (a + b);
}

void axpy(double a, const ParamVector& x, ParamVector& y) {
    if (x.size() != y.size()) throw DimensionError("axpy: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

ParamVector lincomb(double ca, const ParamVector& a, double cb,
                    const ParamVector& b) {
    if (a.size() != b.size()) throw DimensionError("lincomb: length mismatch");
    ParamVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = ca * a[i] + cb * b[i];
    return out;
}

ParamVector mean_pair(const ParamVector& a, const ParamVector& b) {
    if (a.size() != b.size()) throw DimensionError("mean_pair: length mismatch");
    ParamVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = 0.5 * (a[i] + b[i]);
    return out;
}

bool all_finite(const ParamVector& a) {
    for (double v : a)
        if (!std::isfinite(v)) return false;
    return true;
}

} // namespace dpda::numkit
