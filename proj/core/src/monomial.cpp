#include "gcover/monomial.hpp"

#include <sstream>

namespace gcover {

void Monomial::set(int i, int v)
{
    if (v < 0 || v > 0xFFFF)
        throw std::out_of_range("exponent out of range");
    e[i] = static_cast<uint16_t>(v);
}

int Monomial::degree() const
{
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

bool Monomial::is_one() const
{
    for (auto x : e)
        if (x) return false;
    return true;
}

bool Monomial::divides(const Monomial& other) const
{
    for (int i = 0; i < kMaxVars; ++i)
        if (e[i] > other.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        unsigned s = unsigned(e[i]) + o.e[i];
        if (s > 0xFFFF) throw std::overflow_error("exponent overflow");
        r.e[i] = static_cast<uint16_t>(s);
    }
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const
{
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        if (o.e[i] > e[i]) throw std::domain_error("monomial not divisible");
        r.e[i] = static_cast<uint16_t>(e[i] - o.e[i]);
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b)
{
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b)
{
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
}

Monomial Monomial::var(int i, int power)
{
    Monomial r;
    r.set(i, power);
    return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b)
{
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    size_t h = 1469598103934665603ull;
    for (auto x : m.e) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

const char* order_name(OrderKind k)
{
    switch (k) {
    case OrderKind::Lex: return "lex";
    case OrderKind::Grlex: return "grlex";
    case OrderKind::Grevlex: return "grevlex";
    }
    return "?";
}

OrderKind parse_order_kind(const std::string& s)
{
    if (s == "lex") return OrderKind::Lex;
    if (s == "grlex") return OrderKind::Grlex;
    if (s == "grevlex") return OrderKind::Grevlex;
    throw std::invalid_argument("unknown term order '" + s + "'");
}

TermOrder TermOrder::simple(OrderKind kind, int nvars)
{
    return blocks({OrderBlock{0, nvars, kind}});
}

TermOrder TermOrder::blocks(std::vector<OrderBlock> b)
{
    int next = 0;
    for (const auto& blk : b) {
        if (blk.start != next || blk.len < 0)
            throw std::invalid_argument("order blocks must partition the variables");
        next += blk.len;
    }
    if (next > kMaxVars) throw std::invalid_argument("too many variables");
    TermOrder o;
    o.blocks_ = std::move(b);
    return o;
}

int TermOrder::nvars() const
{
    int n = 0;
    for (const auto& b : blocks_) n += b.len;
    return n;
}

static int cmp_block(const Monomial& a, const Monomial& b, const OrderBlock& blk)
{
    const int lo = blk.start, hi = blk.start + blk.len;
    if (blk.kind != OrderKind::Lex) {
        int da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da < db ? -1 : 1;
    }
    if (blk.kind == OrderKind::Grevlex) {
        for (int i = hi - 1; i >= lo; --i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }
    for (int i = lo; i < hi; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

int TermOrder::cmp(const Monomial& a, const Monomial& b) const
{
    for (const auto& blk : blocks_) {
        int c = cmp_block(a, b, blk);
        if (c) return c;
    }
    return 0;
}

bool TermOrder::operator==(const TermOrder& o) const
{
    if (blocks_.size() != o.blocks_.size()) return false;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        const auto &x = blocks_[i], &y = o.blocks_[i];
        if (x.start != y.start || x.len != y.len || x.kind != y.kind) return false;
    }
    return true;
}

std::string TermOrder::describe() const
{
    if (blocks_.size() == 1) return order_name(blocks_[0].kind);
    std::ostringstream os;
    os << "product(";
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) os << ", ";
        os << order_name(blocks_[i].kind) << ":" << blocks_[i].len;
    }
    os << ")";
    return os.str();
}

int Ring::index_of(const std::string& name) const
{
    for (int i = 0; i < nvars(); ++i)
        if (names[i] == name) return i;
    return -1;
}

RingPtr make_ring(std::vector<std::string> names, TermOrder order)
{
    if (static_cast<int>(names.size()) > kMaxVars)
        throw std::invalid_argument("too many variables");
    if (order.nvars() != static_cast<int>(names.size()))
        throw std::invalid_argument("term order does not match variable count");
    auto r = std::make_shared<Ring>();
    r->names = std::move(names);
    r->order = std::move(order);
    return r;
}

RingPtr make_ring(std::vector<std::string> names, OrderKind kind)
{
    int n = static_cast<int>(names.size());
    return make_ring(std::move(names), TermOrder::simple(kind, n));
}

void require_same_ring(const RingPtr& a, const RingPtr& b)
{
    if (a == b) return;
    if (!a || !b || !a->same_as(*b))
        throw std::invalid_argument("mismatched ring contexts");
}

std::string monomial_string(const Monomial& m, const Ring& r)
{
    std::string s;
    for (int i = 0; i < r.nvars(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += '*';
        s += r.names[i];
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace gcover
