#ifndef LEIBNIZ_RATIONAL_HPP
#define LEIBNIZ_RATIONAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace leibniz {

/// Exact rational number, always in lowest terms with positive denominator.
///
/// Wraps GMP's mpq_class. GMP keeps arithmetic results canonical but does
/// NOT canonicalize values built from integer pairs or strings, so every
/// construction path here calls canonicalize() explicitly. With that
/// invariant in place, equality is plain coefficient-wise comparison.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(mpz_class(n)) {}

    Rat(long num, long den) : q_(mpz_class(num), mpz_class(den)) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        q_.canonicalize();
    }

    explicit Rat(const mpq_class& q) : q_(q) {
        if (q_.get_den() == 0) throw std::invalid_argument("Rat: zero denominator");
        q_.canonicalize();
    }

    /// Parses "p" or "p/q" in base 10.
    static Rat parse(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Rat: empty string");
        mpq_class q;
        if (q.set_str(std::string(s), 10) != 0)
            throw std::invalid_argument("Rat: malformed rational '" + std::string(s) + "'");
        if (q.get_den() == 0)
            throw std::invalid_argument("Rat: zero denominator in '" + std::string(s) + "'");
        q.canonicalize();
        Rat r;
        r.q_ = std::move(q);
        return r;
    }

    /// Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string str() const { return q_.get_str(); }

    double to_double() const { return q_.get_d(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    Rat operator-() const { return Rat(-q_, already_canonical{}); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.q_; }

private:
    struct already_canonical {};
    Rat(mpq_class q, already_canonical) : q_(std::move(q)) {}

    mpq_class q_;
};

inline Rat inverse(const Rat& r) {
    if (r.is_zero()) throw std::invalid_argument("Rat: inverse of zero");
    return Rat(1) / r;
}

}  // namespace leibniz

#endif
