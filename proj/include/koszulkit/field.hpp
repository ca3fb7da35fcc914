#ifndef KOSZULKIT_FIELD_HPP
#define KOSZULKIT_FIELD_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace koszulkit {

/// Malformed user input: files, flags, inconsistent presentations.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computation would exceed the configured degree/ambient guards.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A modular computation hit the prime in a denominator or pivot cascade.
/// The result would be silently wrong; the caller must retry with a fresh
/// prime or escalate to exact arithmetic.
struct ModularDegeneracy : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal consistency violation (a bug, not a user error).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Arithmetic in Z/p for an odd prime p < 2^62. Values live in [0, p).
class Zp {
  public:
    explicit Zp(std::uint64_t p) : p_(p) {}

    std::uint64_t modulus() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    std::uint64_t inv(std::uint64_t a) const;

    /// Reduce an exact rational mod p. Throws ModularDegeneracy if p divides
    /// the denominator.
    std::uint64_t reduce(const mpq_class& q) const;
    std::uint64_t reduce(const mpz_class& z) const;

  private:
    std::uint64_t p_;
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Uniform random prime in [2^59, 2^60).
std::uint64_t random_prime_60(std::mt19937_64& rng);

/// Field selector for the linear algebra kernel.
struct FieldSpec {
    enum class Mode { rational, modular };
    Mode mode = Mode::rational;
    std::uint64_t prime = 0;  // modular mode only

    static FieldSpec exact() { return {Mode::rational, 0}; }
    static FieldSpec mod_p(std::uint64_t p);

    bool is_modular() const { return mode == Mode::modular; }
    std::string describe() const;
};

/// Default seed for the prime source; CLI --seed overrides it.
inline constexpr std::uint64_t kDefaultSeed = 0x6b6f737a756c6bULL;

/// Two independently drawn certificate primes.
struct PrimePair {
    std::uint64_t p1 = 0;
    std::uint64_t p2 = 0;
};
PrimePair draw_prime_pair(std::uint64_t seed);

}  // namespace koszulkit

#endif
