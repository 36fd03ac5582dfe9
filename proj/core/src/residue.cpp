#include "gcover/residue.hpp"

#include <stdexcept>

#include "gcover/factor.hpp"

namespace gcover {

QuotientDomain::QuotientDomain(RingPtr ring, const Gens& p) : ring_(std::move(ring))
{
    gb_ = groebner(p, ring_);
    if (is_unit(gb_)) throw std::invalid_argument("quotient by the unit ideal");
}

QPoly QuotientDomain::nf(const QPoly& f) const
{
    QPoly g = f.ring() && !f.ring()->same_as(*ring_) ? reorder(f, ring_) : f;
    if (!g.ring()) g.set_ring(ring_);
    return reduce(g, gb_);
}

DomainPtr make_domain(RingPtr ring, const Gens& p) { return std::make_shared<const QuotientDomain>(std::move(ring), p); }

FracElem::FracElem(DomainPtr dom, const QPoly& num, const QPoly& den)
{
    if (!dom) throw std::invalid_argument("fraction without a domain");
    QPoly d = dom->nf(den);
    if (d.is_zero()) throw std::domain_error("denominator lies in the prime");
    *this = make(dom, dom->nf(num), d);
}

FracElem::FracElem(DomainPtr dom, const QPoly& num) : FracElem(dom, num, qone(dom->ring())) {}

// num, den are normal forms, den nonzero mod p
FracElem FracElem::make(const DomainPtr& dom, QPoly num, QPoly den)
{
    FracElem r;
    r.dom_ = dom;
    if (num.is_zero()) {
        r.num_ = QPoly(dom->ring());
        r.den_ = qone(dom->ring());
        return r;
    }
    if (!den.is_constant() && !num.is_constant()) {
        QPoly g = poly_gcd(num, den);
        if (!g.is_constant()) {
            QPoly qn, qd;
            exact_divide(num, g, qn);
            exact_divide(den, g, qd);
            num = dom->nf(qn);
            den = dom->nf(qd);
        }
    }
    Rational l = gcover::inv(den.lc());
    r.num_ = num.scaled(l);
    r.den_ = den.scaled(l);
    return r;
}

DomainPtr FracElem::common(const FracElem& a, const FracElem& b)
{
    if (a.dom_ && b.dom_ && a.dom_ != b.dom_) {
        if (!a.dom_->ring()->same_as(*b.dom_->ring()) || !same_basis(a.dom_->gb(), b.dom_->gb()))
            throw std::invalid_argument("fractions over different domains");
    }
    return a.dom_ ? a.dom_ : b.dom_;
}

bool FracElem::is_zero() const { return dom_ ? num_.is_zero() : sgn(c_) == 0; }

QPoly FracElem::num() const { return dom_ ? num_ : QPoly(); }
QPoly FracElem::den() const { return dom_ ? den_ : QPoly(); }

FracElem FracElem::operator-() const
{
    FracElem r = *this;
    if (dom_)
        r.num_ = -num_;
    else
        r.c_ = -c_;
    return r;
}

namespace {

// Lift a rational into a domain's representation.
void parts(const FracElem& a, const DomainPtr& d, QPoly& n, QPoly& m)
{
    if (a.is_rational()) {
        n = qconst(d->ring(), a.rational());
        m = qone(d->ring());
    } else {
        n = a.num();
        m = a.den();
    }
}

}  // namespace

FracElem operator+(const FracElem& a, const FracElem& b)
{
    DomainPtr d = FracElem::common(a, b);
    if (!d) return FracElem(a.c_ + b.c_);
    QPoly an, ad, bn, bd;
    parts(a, d, an, ad);
    parts(b, d, bn, bd);
    if (ad == bd) return FracElem::make(d, d->nf(an + bn), ad);
    return FracElem::make(d, d->nf(an * bd + bn * ad), d->nf(ad * bd));
}

FracElem operator-(const FracElem& a, const FracElem& b) { return a + (-b); }

FracElem operator*(const FracElem& a, const FracElem& b)
{
    DomainPtr d = FracElem::common(a, b);
    if (!d) return FracElem(a.c_ * b.c_);
    if (a.is_zero() || b.is_zero()) return FracElem::make(d, QPoly(d->ring()), qone(d->ring()));
    QPoly an, ad, bn, bd;
    parts(a, d, an, ad);
    parts(b, d, bn, bd);
    return FracElem::make(d, d->nf(an * bn), d->nf(ad * bd));
}

FracElem operator/(const FracElem& a, const FracElem& b) { return a * b.inv(); }

bool operator==(const FracElem& a, const FracElem& b)
{
    DomainPtr d = FracElem::common(a, b);
    if (!d) return a.c_ == b.c_;
    QPoly an, ad, bn, bd;
    parts(a, d, an, ad);
    parts(b, d, bn, bd);
    return d->nf(an * bd - bn * ad).is_zero();
}

FracElem FracElem::inv() const
{
    if (is_zero()) throw std::domain_error("inversion of the zero class");
    if (!dom_) return FracElem(gcover::inv(c_));
    return make(dom_, den_, num_);
}

std::string to_string(const FracElem& a)
{
    if (a.is_rational()) return to_string(a.rational());
    QPoly n = a.num(), d = a.den();
    if (d.is_constant()) return to_string(n);  // den is monic
    std::string ns = n.size() > 1 ? "(" + to_string(n) + ")" : to_string(n);
    std::string ds = d.size() > 1 ? "(" + to_string(d) + ")" : to_string(d);
    return ns + "/" + ds;
}

}  // namespace gcover
