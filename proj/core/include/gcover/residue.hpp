#pragma once

#include <memory>
#include <string>

#include "gcover/ideal.hpp"

namespace gcover {

// Q[u]/p for a prime p, represented by the reduced GB of p.
class QuotientDomain {
public:
    // Throws std::invalid_argument if p is the unit ideal.
    QuotientDomain(RingPtr ring, const Gens& p);

    const RingPtr& ring() const { return ring_; }
    const Gens& gb() const { return gb_; }
    bool is_zero_ideal() const { return gb_.empty(); }

    QPoly nf(const QPoly& f) const;
    bool contains(const QPoly& f) const { return nf(f).is_zero(); }

private:
    RingPtr ring_;
    Gens gb_;
};

using DomainPtr = std::shared_ptr<const QuotientDomain>;
DomainPtr make_domain(RingPtr ring, const Gens& p);

// Element of Frac(Q[u]/p). A null domain means a plain rational constant, which is what
// default construction and the Rational constructor give; mixed arithmetic adopts the domain.
class FracElem {
public:
    FracElem() = default;
    FracElem(const Rational& c) : c_(c) {}  // NOLINT(google-explicit-constructor)
    FracElem(int c) : c_(c) {}              // NOLINT(google-explicit-constructor)
    // num/den; throws std::domain_error if den lies in p.
    FracElem(DomainPtr dom, const QPoly& num, const QPoly& den);
    FracElem(DomainPtr dom, const QPoly& num);

    const DomainPtr& domain() const { return dom_; }
    bool is_zero() const;
    bool is_rational() const { return !dom_; }
    // Valid when is_rational().
    const Rational& rational() const { return c_; }
    QPoly num() const;
    QPoly den() const;

    FracElem operator-() const;
    friend FracElem operator+(const FracElem& a, const FracElem& b);
    friend FracElem operator-(const FracElem& a, const FracElem& b);
    friend FracElem operator*(const FracElem& a, const FracElem& b);
    friend FracElem operator/(const FracElem& a, const FracElem& b);
    FracElem& operator+=(const FracElem& b) { return *this = *this + b; }
    FracElem& operator-=(const FracElem& b) { return *this = *this - b; }
    FracElem& operator*=(const FracElem& b) { return *this = *this * b; }

    // a/b == c/d iff ad - bc in p
    friend bool operator==(const FracElem& a, const FracElem& b);
    friend bool operator!=(const FracElem& a, const FracElem& b) { return !(a == b); }

    // Throws std::domain_error on the zero class.
    FracElem inv() const;

private:
    static FracElem make(const DomainPtr& dom, QPoly num, QPoly den);
    static DomainPtr common(const FracElem& a, const FracElem& b);

    DomainPtr dom_;
    Rational c_;
    QPoly num_, den_;
};

inline bool is_zero(const FracElem& a) { return a.is_zero(); }
inline FracElem inv(const FracElem& a) { return a.inv(); }
std::string to_string(const FracElem& a);

}  // namespace gcover
