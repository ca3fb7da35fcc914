#include "koszulkit/field.hpp"

namespace koszulkit {

std::uint64_t Zp::inv(std::uint64_t a) const {
    if (a == 0) throw InternalError("Zp::inv of zero");
    // extended Euclid on signed 128-bit to stay safe near 2^62
    __int128 t = 0, new_t = 1;
    __int128 r = p_, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw ModularDegeneracy("element not invertible mod p");
    if (t < 0) t += p_;
    return static_cast<std::uint64_t>(t);
}

std::uint64_t Zp::reduce(const mpz_class& z) const {
    mpz_class r = z % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    return r.get_ui();
}

std::uint64_t Zp::reduce(const mpq_class& q) const {
    std::uint64_t den = reduce(q.get_den());
    if (den == 0)
        throw ModularDegeneracy("prime divides a denominator; retry with a fresh prime");
    std::uint64_t num = reduce(q.get_num());
    return mul(num, inv(den));
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 acc = 1, base = b % m;
    while (e) {
        if (e & 1) acc = acc * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this base set is a proven deterministic witness set for n < 3.3e24
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * x) % n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t random_prime_60(std::mt19937_64& rng) {
    const std::uint64_t lo = 1ull << 59, hi = 1ull << 60;
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi - 1);
    for (;;) {
        std::uint64_t c = dist(rng) | 1;
        if (is_prime_u64(c)) return c;
    }
}

FieldSpec FieldSpec::mod_p(std::uint64_t p) {
    if (p < 3 || !is_prime_u64(p)) throw InputError("FieldSpec: modulus must be an odd prime");
    return {Mode::modular, p};
}

std::string FieldSpec::describe() const {
    if (mode == Mode::rational) return "rational";
    return "mod " + std::to_string(prime);
}

PrimePair draw_prime_pair(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    PrimePair pp;
    pp.p1 = random_prime_60(rng);
    do {
        pp.p2 = random_prime_60(rng);
    } while (pp.p2 == pp.p1);
    return pp;
}

}  // namespace koszulkit
