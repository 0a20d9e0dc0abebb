#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opforge {

// Exact rationals; gmp keeps them in lowest terms with a positive denominator.
using Scalar = mpq_class;

// n/d in lowest terms. mpq_class(n, d) alone does not reduce.
inline Scalar frac(long n, long d) {
    Scalar s(n, d);
    s.canonicalize();
    return s;
}

Scalar parse_scalar(const std::string& text);
std::string format_scalar(const Scalar& s);

class IncompatibleSpaces : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite formal sum over an ordered key type. No stored coefficient is zero.
template <class K>
class LinComb {
public:
    using Map = std::map<K, Scalar>;

    LinComb() = default;
    explicit LinComb(K key, Scalar c = Scalar(1)) { add(std::move(key), c); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Scalar coeff(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add(const K& key, const Scalar& c) {
        if (sgn(c) == 0) return;
        auto [it, fresh] = terms_.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    void add(K&& key, const Scalar& c) {
        if (sgn(c) == 0) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    void axpy(const Scalar& s, const LinComb& other) {
        if (sgn(s) == 0) return;
        for (const auto& [k, c] : other.terms_) add(k, s * c);
    }

    LinComb& operator+=(const LinComb& o) { axpy(Scalar(1), o); return *this; }
    LinComb& operator-=(const LinComb& o) { axpy(Scalar(-1), o); return *this; }
    LinComb& operator*=(const Scalar& s) {
        if (sgn(s) == 0) { terms_.clear(); return *this; }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }
    friend LinComb operator*(const Scalar& s, LinComb a) { a *= s; return a; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    // Apply a linear map given on keys.
    template <class K2, class F>
    LinComb<K2> map_linear(F&& f) const {
        LinComb<K2> out;
        for (const auto& [k, c] : terms_) out.axpy(c, f(k));
        return out;
    }

private:
    Map terms_;
};

// a + s*b, inputs untouched.
template <class K>
LinComb<K> lincomb_combine(const LinComb<K>& a, const Scalar& s, const LinComb<K>& b) {
    LinComb<K> out = a;
    out.axpy(s, b);
    return out;
}

// <a, f> with f read in the dual basis. Both sides must live at the same arity,
// as reported by arity_of.
template <class K, class ArityFn>
Scalar pairing(const LinComb<K>& a, const LinComb<K>& f, ArityFn&& arity_of) {
    int arity = -1;
    auto check = [&](const K& k) {
        int n = arity_of(k);
        if (arity < 0) arity = n;
        else if (n != arity) throw IncompatibleSpaces("pairing across different arities");
    };
    for (const auto& [k, c] : a) check(k);
    for (const auto& [k, c] : f) check(k);
    Scalar s(0);
    for (const auto& [k, c] : a) s += c * f.coeff(k);
    return s;
}

}  // namespace opforge
