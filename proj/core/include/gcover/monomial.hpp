#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcover {

constexpr int kMaxVars = 24;

// Dense exponent vector; slots past the ring's variable count stay zero.
struct Monomial {
    std::array<uint16_t, kMaxVars> e{};

    int operator[](int i) const { return e[i]; }
    void set(int i, int v);

    int degree() const;
    bool is_one() const;
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // requires o | *this
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    static Monomial var(int i, int power = 1);
    static bool coprime(const Monomial& a, const Monomial& b);
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const noexcept;
};

enum class OrderKind { Lex, Grlex, Grevlex };

const char* order_name(OrderKind k);
OrderKind parse_order_kind(const std::string& s);

struct OrderBlock {
    int start;
    int len;
    OrderKind kind;
};

class TermOrder {
public:
    TermOrder() = default;
    static TermOrder simple(OrderKind kind, int nvars);
    static TermOrder blocks(std::vector<OrderBlock> b);

    // -1, 0, 1
    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    const std::vector<OrderBlock>& block_list() const { return blocks_; }
    int nvars() const;
    bool operator==(const TermOrder& o) const;
    std::string describe() const;

private:
    std::vector<OrderBlock> blocks_;
};

struct Ring {
    std::vector<std::string> names;
    TermOrder order;

    int nvars() const { return static_cast<int>(names.size()); }
    int index_of(const std::string& name) const;  // -1 if absent
    bool same_as(const Ring& o) const { return names == o.names && order == o.order; }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, TermOrder order);
RingPtr make_ring(std::vector<std::string> names, OrderKind kind);

void require_same_ring(const RingPtr& a, const RingPtr& b);

std::string monomial_string(const Monomial& m, const Ring& r);

}  // namespace gcover
