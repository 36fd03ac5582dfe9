#pragma once

#include <utility>
#include <vector>

#include "gcover/polynomial.hpp"

namespace gcover {

// Dense univariate integer polynomial, coefficient i belongs to y^i.
using ZUPoly = std::vector<Integer>;

void zu_trim(ZUPoly& f);
int zu_degree(const ZUPoly& f);
ZUPoly zu_mul(const ZUPoly& a, const ZUPoly& b);
ZUPoly zu_primitive(const ZUPoly& f);  // content 1, positive lc

// Irreducible factorization over Z of a nonzero polynomial; content is dropped.
std::vector<std::pair<ZUPoly, int>> factor_zx(const ZUPoly& f);

// Multivariate gcd over Q, normalized by make_primitive (zero only if both are zero).
QPoly poly_gcd(const QPoly& a, const QPoly& b);

// gcd of the coefficients of f viewed as a polynomial in variable v.
QPoly content_in(const QPoly& f, int v);

// Product of the distinct irreducible factors (char 0: f / gcd(f, all partials)).
QPoly squarefree_part(const QPoly& f);

struct Factorization {
    Rational unit;
    std::vector<std::pair<QPoly, int>> factors;  // primitive integer, positive lc, canonically sorted
    QPoly expand(const RingPtr& r) const;
};

Factorization factor(const QPoly& f);
bool is_irreducible(const QPoly& f);

// Rational roots of a univariate polynomial (in variable `var` of its ring).
std::vector<Rational> rational_roots(const QPoly& f, int var);

}  // namespace gcover
