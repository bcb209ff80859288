#include "gqlrc/gf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gqlrc {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

namespace {

using Poly = std::vector<unsigned>; // little-endian coefficients over F_p

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    const std::size_t dm = m.size() - 1; // m monic, trimmed
    if (a.size() <= dm) return trim(std::move(a));
    for (std::size_t i = a.size(); i-- > dm;) {
        unsigned lead = a[i] % p;
        if (lead == 0) continue;
        std::size_t shift = i - dm;
        for (std::size_t j = 0; j <= dm; ++j) {
            unsigned s = static_cast<unsigned>(
                static_cast<std::uint64_t>(m[j]) * lead % p);
            a[j + shift] = (a[j + shift] + p - s) % p;
        }
    }
    a.resize(dm);
    return trim(std::move(a));
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<unsigned>(
                (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    return trim(std::move(c));
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, unsigned p) {
    Poly r{1};
    base = poly_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

bool poly_is_irreducible(const Poly& m, unsigned p) {
    const std::size_t h = m.size() - 1;
    if (h == 0) return false;
    if (h == 1) return true;
    // trial division by every monic polynomial of degree 1..h/2
    for (std::size_t d = 1; 2 * d <= h; ++d) {
        Poly g(d + 1, 0);
        g[d] = 1;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(c % p);
                c /= p;
            }
            if (poly_mod(m, g, p).empty()) return false;
        }
    }
    return true;
}

// x generates the full multiplicative group mod m
bool poly_is_primitive(const Poly& m, unsigned p) {
    std::size_t h = m.size() - 1;
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < h; ++i) q *= p;
    const Poly x{0, 1};
    if (poly_powmod(x, q - 1, m, p) != Poly{1}) return false;
    for (std::uint64_t f : prime_factors(q - 1))
        if (poly_powmod(x, (q - 1) / f, m, p) == Poly{1}) return false;
    return true;
}

// Conway polynomials for small (p, h), little-endian including the leading 1.
const std::map<std::pair<unsigned, unsigned>, Poly>& conway_table() {
    static const std::map<std::pair<unsigned, unsigned>, Poly> t = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{7, 2}, {3, 6, 1}},
        {{11, 2}, {2, 7, 1}},
        {{13, 2}, {2, 12, 1}},
    };
    return t;
}

} // namespace

Field::Field() { init(2, 1, {0, 1}); }

Field Field::create(unsigned p, unsigned h) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (h < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < h; ++i) {
        q *= p;
        if (q > max_order) throw std::invalid_argument("field order exceeds supported bound 2^20");
    }
    Field f;
    if (h == 1) {
        f.init(p, h, {0, 1});
        return f;
    }
    auto it = conway_table().find({p, h});
    if (it != conway_table().end()) {
        f.init(p, h, it->second);
        return f;
    }
    // first primitive polynomial by coefficient order
    std::uint64_t count = 1;
    for (unsigned i = 0; i < h; ++i) count *= p;
    Poly m(h + 1, 0);
    m[h] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < h; ++i) {
            m[i] = static_cast<unsigned>(c % p);
            c /= p;
        }
        if (poly_is_irreducible(m, p) && poly_is_primitive(m, p)) {
            f.init(p, h, m);
            return f;
        }
    }
    throw std::logic_error("no primitive polynomial found"); // unreachable
}

Field Field::with_modulus(unsigned p, const std::vector<unsigned>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    Poly m = trim(modulus);
    if (m.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
    if (m.back() != 1) throw std::invalid_argument("modulus must be monic");
    for (unsigned c : m)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!poly_is_irreducible(m, p))
        throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));
    unsigned h = static_cast<unsigned>(m.size() - 1);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < h; ++i) {
        q *= p;
        if (q > max_order) throw std::invalid_argument("field order exceeds supported bound 2^20");
    }
    Field f;
    f.init(p, h, m);
    return f;
}

void Field::init(unsigned p, unsigned h, std::vector<unsigned> modulus) {
    p_ = p;
    h_ = h;
    mod_ = std::move(modulus);
    q_ = 1;
    for (unsigned i = 0; i < h; ++i) q_ *= p;
    tables_ = false;
    log_.clear();
    alog_.clear();
    if (h_ < 2 || q_ > max_table_order) return;

    // find a generator of the multiplicative group (x itself whenever the
    // modulus is primitive) and fill log/antilog tables with its powers
    auto order_of = [&](felem g) {
        felem b = g;
        std::uint64_t n = 1;
        while (b != 1) {
            b = mul_slow(b, g);
            ++n;
            if (n > q_) return std::uint64_t{0}; // safety
        }
        return n;
    };
    felem g = 0;
    for (felem cand = p_; cand < q_; ++cand) {
        if (order_of(cand) == q_ - 1) {
            g = cand;
            break;
        }
    }
    if (g == 0) throw std::logic_error("no multiplicative generator found");
    log_.assign(q_, 0);
    alog_.assign(q_ - 1, 0);
    felem b = 1;
    for (std::uint64_t e = 0; e < q_ - 1; ++e) {
        alog_[e] = b;
        log_[b] = static_cast<std::uint32_t>(e);
        b = mul_slow(b, g);
    }
    tables_ = true;
}

felem Field::add(felem a, felem b) const {
    if (p_ == 2) return a ^ b;
    if (h_ == 1) return (a + b) % p_;
    felem r = 0, mult = 1;
    for (unsigned i = 0; i < h_; ++i) {
        unsigned da = a % p_, db = b % p_;
        r += ((da + db) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

felem Field::neg(felem a) const {
    if (p_ == 2) return a;
    if (h_ == 1) return a == 0 ? 0 : p_ - a;
    felem r = 0, mult = 1;
    for (unsigned i = 0; i < h_; ++i) {
        unsigned d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

felem Field::sub(felem a, felem b) const { return add(a, neg(b)); }

felem Field::mul_slow(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    if (h_ == 1) return static_cast<felem>(static_cast<std::uint64_t>(a) * b % p_);
    Poly pa = coeffs(a), pb = coeffs(b);
    Poly pr = poly_mod(poly_mul(trim(pa), trim(pb), p_), mod_, p_);
    pr.resize(h_, 0);
    return from_coeffs(pr);
}

felem Field::mul(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    if (h_ == 1) return static_cast<felem>(static_cast<std::uint64_t>(a) * b % p_);
    if (tables_) {
        std::uint64_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return alog_[e];
    }
    return mul_slow(a, b);
}

felem Field::inv(felem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (h_ == 1) {
        // Fermat
        felem r = 1, b = a;
        unsigned e = p_ - 2;
        while (e > 0) {
            if (e & 1) r = static_cast<felem>(static_cast<std::uint64_t>(r) * b % p_);
            b = static_cast<felem>(static_cast<std::uint64_t>(b) * b % p_);
            e >>= 1;
        }
        return r;
    }
    if (tables_) return log_[a] == 0 ? 1 : alog_[q_ - 1 - log_[a]];
    return pow(a, static_cast<std::int64_t>(q_) - 2);
}

felem Field::pow(felem a, std::int64_t e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw std::domain_error("negative power of zero");
    }
    std::int64_t m = static_cast<std::int64_t>(q_) - 1;
    std::int64_t r = e % m;
    if (r < 0) r += m;
    felem result = 1, b = a;
    std::uint64_t k = static_cast<std::uint64_t>(r);
    while (k > 0) {
        if (k & 1) result = mul(result, b);
        b = mul(b, b);
        k >>= 1;
    }
    return result;
}

felem Field::frobenius(felem a, unsigned e) const {
    e %= h_;
    std::uint64_t exp = 1;
    for (unsigned i = 0; i < e; ++i) exp *= p_;
    return pow(a, static_cast<std::int64_t>(exp));
}

std::uint64_t Field::element_order(felem a) const {
    if (a == 0) throw std::domain_error("order of zero");
    felem b = a;
    std::uint64_t n = 1;
    while (b != 1) {
        b = mul(b, a);
        ++n;
    }
    return n;
}

std::vector<unsigned> Field::coeffs(felem a) const {
    std::vector<unsigned> c(h_, 0);
    for (unsigned i = 0; i < h_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

felem Field::from_coeffs(const std::vector<unsigned>& c) const {
    if (c.size() > h_) throw std::invalid_argument("coefficient list longer than extension degree");
    felem r = 0, mult = 1;
    for (unsigned i = 0; i < h_; ++i) {
        unsigned d = i < c.size() ? c[i] : 0;
        if (d >= p_) throw std::invalid_argument("coefficient out of range");
        r += d * mult;
        mult *= p_;
    }
    return r;
}

std::string Field::to_string(felem a) const {
    if (h_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::string s;
    auto c = coeffs(a);
    for (unsigned i = h_; i-- > 0;) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c[i]);
        } else {
            if (c[i] != 1) s += std::to_string(c[i]) + "*";
            s += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return s;
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

} // namespace gqlrc
