#pragma once

#include "gcover/parametric.hpp"
#include "gcover/parse.hpp"

namespace gcover::testing {

struct Problem {
    ContextPtr ctx;
    Gens I;

    QPoly j(const char* s) const { return parse_poly(s, ctx->joint); }
    QPoly u(const char* s) const { return parse_poly(s, ctx->u); }
    Gens us(std::initializer_list<const char*> src) const
    {
        Gens g;
        for (const char* s : src) g.push_back(u(s));
        return g;
    }
    XPoly x(const char* s) const { return ctx->to_x(j(s)); }
    PrimeComponent prime(std::initializer_list<const char*> src) const { return {groebner(us(src), ctx->u), true}; }
};

inline Problem problem(std::vector<std::string> params, std::vector<std::string> vars, std::initializer_list<const char*> gens,
                OrderKind ord = OrderKind::Lex)
{
    Problem p{make_context(std::move(params), std::move(vars), ord), {}};
    for (const char* s : gens) p.I.push_back(p.j(s));
    return p;
}

inline Problem ex1() { return problem({"u1", "u2"}, {"x"}, {"u1*x", "(u2^2-1)*x^2+x"}); }
inline Problem ex2() { return problem({"u1", "u2", "u3", "u4"}, {"x"}, {"(u2*u3-u4*u1)*x", "u1*x^2+u2*x", "u3*x^2+u4*x"}); }
inline Problem ex3() { return problem({"u"}, {"x"}, {"u*(u*x-1)", "(u*x-1)*x"}); }
inline Problem ex4() { return problem({"u1", "u2"}, {"x", "y"}, {"u1*x+u2", "u1*y^2-1"}, OrderKind::Grevlex); }
inline Problem ex5()
{
    return problem({"a11", "a12", "a21", "a22", "b1", "b2"}, {"x1", "x2"},
                   {"a11*x1+a12*x2-b1", "a21*x1+a22*x2-b2"});
}

}  // namespace gcover::testing
