#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gcover/monomial.hpp"
#include "gcover/rational.hpp"

namespace gcover {

namespace detail {
template <class C>
bool czero(const C& c)
{
    return is_zero(c);
}
}  // namespace detail

template <class C>
struct Term {
    Monomial m;
    C c;
};

template <class C>
struct LeadingData {
    Monomial lt;
    C lc;
};

// Sparse polynomial; terms kept in strictly descending order, no zero coefficients.
// A default-constructed Poly is the zero polynomial of no particular ring.
template <class C>
class Poly {
public:
    using Coeff = C;

    Poly() = default;
    explicit Poly(RingPtr r) : ring_(std::move(r)) {}

    static Poly monomial(RingPtr r, const Monomial& m, C c)
    {
        Poly p(std::move(r));
        if (!detail::czero(c)) p.terms_.push_back(Term<C>{m, std::move(c)});
        return p;
    }
    static Poly constant(RingPtr r, C c) { return monomial(std::move(r), Monomial{}, std::move(c)); }

    // Sorts and combines; drops zeros.
    static Poly from_terms(RingPtr r, std::vector<Term<C>> ts)
    {
        Poly p(std::move(r));
        const TermOrder& ord = p.ring_->order;
        std::sort(ts.begin(), ts.end(),
                  [&](const Term<C>& a, const Term<C>& b) { return ord.cmp(a.m, b.m) > 0; });
        for (auto& t : ts) {
            if (!p.terms_.empty() && p.terms_.back().m == t.m) {
                C s = p.terms_.back().c + t.c;
                p.terms_.back().c = std::move(s);
            } else {
                p.terms_.push_back(std::move(t));
            }
        }
        std::erase_if(p.terms_, [](const Term<C>& t) { return detail::czero(t.c); });
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::vector<Term<C>>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    const Monomial& lt() const
    {
        if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
        return terms_.front().m;
    }
    const C& lc() const
    {
        if (terms_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return terms_.front().c;
    }
    LeadingData<C> leading_data() const { return {lt(), lc()}; }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

    int total_degree() const
    {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.m.degree());
        return d;
    }

    int degree_in(int var) const
    {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.m[var]);
        return d;
    }

    // nullptr if t is not in the support
    const C* coef_ptr(const Monomial& m) const
    {
        const TermOrder& ord = ring_->order;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [&](const Term<C>& t, const Monomial& k) { return ord.cmp(t.m, k) > 0; });
        if (it != terms_.end() && it->m == m) return &it->c;
        return nullptr;
    }

    Poly operator-() const
    {
        Poly r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back(Term<C>{t.m, C(-t.c)});
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
    Poly& operator+=(const Poly& b) { return *this = merge(*this, b, false); }
    Poly& operator-=(const Poly& b) { return *this = merge(*this, b, true); }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return Poly(a.ring_ ? a.ring_ : b.ring_);
        require_same_ring(a.ring_, b.ring_);
        if (a.size() == 1) return b.mul_term(a.terms_[0].m, a.terms_[0].c);
        if (b.size() == 1) return a.mul_term(b.terms_[0].m, b.terms_[0].c);
        std::vector<Term<C>> ts;
        ts.reserve(a.size() * b.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) ts.push_back(Term<C>{x.m * y.m, C(x.c * y.c)});
        return from_terms(a.ring_, std::move(ts));
    }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    Poly scaled(const C& c) const
    {
        Poly r(ring_);
        if (detail::czero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            C v = t.c * c;
            if (!detail::czero(v)) r.terms_.push_back(Term<C>{t.m, std::move(v)});
        }
        return r;
    }

    Poly mul_term(const Monomial& m, const C& c) const
    {
        Poly r(ring_);
        if (detail::czero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            C v = t.c * c;
            if (!detail::czero(v)) r.terms_.push_back(Term<C>{t.m * m, std::move(v)});
        }
        return r;
    }

    Poly div_monomial(const Monomial& m) const
    {
        Poly r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (!m.divides(t.m)) throw std::domain_error("exact division by term failed");
            r.terms_.push_back(Term<C>{t.m / m, t.c});
        }
        return r;
    }

    // this - c*m*g, the reduction step
    Poly sub_mul(const C& c, const Monomial& m, const Poly& g) const
    {
        return merge(*this, g.mul_term(m, c), true);
    }

    // Coefficient-wise map into another ring / coefficient type; f maps C -> D.
    template <class D, class F>
    Poly<D> map_coeffs(RingPtr target, F&& f) const
    {
        std::vector<Term<D>> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) ts.push_back(Term<D>{t.m, f(t.c)});
        return Poly<D>::from_terms(std::move(target), std::move(ts));
    }

    friend bool operator==(const Poly& a, const Poly& b)
    {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].m != b.terms_[i].m || !(a.terms_[i].c == b.terms_[i].c)) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Direct access for hot loops that maintain the invariants themselves.
    std::vector<Term<C>>& mutable_terms() { return terms_; }
    void set_ring(RingPtr r) { ring_ = std::move(r); }

private:
    static Poly merge(const Poly& a, const Poly& b, bool negate_b)
    {
        if (b.is_zero()) {
            Poly r = a;
            if (!r.ring_) r.ring_ = b.ring_;
            return r;
        }
        if (a.is_zero()) {
            Poly r = negate_b ? -b : b;
            if (!r.ring_) r.ring_ = a.ring_;
            return r;
        }
        require_same_ring(a.ring_, b.ring_);
        const TermOrder& ord = a.ring_->order;
        Poly r(a.ring_);
        r.terms_.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = ord.cmp(a.terms_[i].m, b.terms_[j].m);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                const auto& t = b.terms_[j++];
                r.terms_.push_back(negate_b ? Term<C>{t.m, C(-t.c)} : t);
            } else {
                C v = negate_b ? C(a.terms_[i].c - b.terms_[j].c) : C(a.terms_[i].c + b.terms_[j].c);
                if (!detail::czero(v)) r.terms_.push_back(Term<C>{a.terms_[i].m, std::move(v)});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            const auto& t = b.terms_[j];
            r.terms_.push_back(negate_b ? Term<C>{t.m, C(-t.c)} : t);
        }
        return r;
    }

    RingPtr ring_;
    std::vector<Term<C>> terms_;
};

using QPoly = Poly<Rational>;

inline bool is_zero(const QPoly& p) { return p.is_zero(); }

QPoly qvar(const RingPtr& r, int i);
QPoly qconst(const RingPtr& r, const Rational& c);
QPoly qone(const RingPtr& r);

// Rational-coefficient helpers
QPoly make_monic(const QPoly& p);
QPoly make_primitive(const QPoly& p);  // integer coefficients, content 1, positive lc
Rational evaluate(const QPoly& p, const std::vector<Rational>& point);
QPoly derivative(const QPoly& p, int var);
QPoly pow(const QPoly& p, int k);
// Substitute values for some variables; vals[i] used when has[i].
QPoly substitute(const QPoly& p, const std::vector<Rational>& vals, const std::vector<bool>& has);
// Re-express p in ring `to`, mapping variable i of p's ring to index map[i] (must be -1 only for unused vars).
QPoly remap(const QPoly& p, const RingPtr& to, const std::vector<int>& map);
// Same variables and names, different order.
QPoly reorder(const QPoly& p, const RingPtr& to);
// Variables occurring in p.
std::vector<int> support_vars(const QPoly& p);

std::string to_string(const QPoly& p);

// Canonical sort key for ideals/lists: by string form.
bool canonical_less(const QPoly& a, const QPoly& b);

}  // namespace gcover
