#include "biserial/field.hpp"

#include <array>
#include <mutex>

#include "biserial/errors.hpp"

namespace biserial {

namespace {

// irreducible polynomials, bit i = coefficient of x^i
constexpr std::array<std::uint32_t, 9> kModulus = {0,     0x3,  0x7,  0xB,  0x13,
                                                   0x25,  0x43, 0x83, 0x11D};

Elem poly_mul(Elem a, Elem b, int e, std::uint32_t poly) {
    std::uint32_t r = 0, x = a;
    for (int i = 0; i < e; ++i)
        if (b >> i & 1) r ^= x << i;
    for (int i = 2 * e - 2; i >= e; --i)
        if (r >> i & 1) r ^= poly << (i - e);
    return Elem(r);
}

}  // namespace

const Field::Tables* Field::tables_for(int e) {
    static std::array<Tables, 9> all;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int k = 1; k <= 8; ++k) {
            Tables& t = all[k];
            int q = 1 << k;
            t.mul.assign(256 * 256, 0);
            t.inv.assign(256, 0);
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b) {
                    Elem c = poly_mul(Elem(a), Elem(b), k, kModulus[k]);
                    t.mul[(a << 8) | b] = c;
                    if (c == 1) t.inv[a] = Elem(b);
                }
        }
    });
    return &all[e];
}

Field::Field(int e) : e_(e) {
    if (e < 1 || e > 8) throw InvalidParameter("field extension degree must be in 1..8, got " + std::to_string(e));
    poly_ = kModulus[e];
    tab_ = tables_for(e);
}

std::string Field::name() const { return "GF(" + std::to_string(order()) + ")"; }

Elem Field::inv(Elem a) const {
    if (a == 0) throw InvalidParameter("inverse of zero");
    return tab_->inv[a];
}

std::vector<Elem> Field::units() const {
    std::vector<Elem> u;
    for (int a = 1; a < order(); ++a) u.push_back(Elem(a));
    return u;
}

Elem Field::primitive_cube_root() const {
    for (int a = 2; a < order(); ++a) {
        Elem x = Elem(a);
        if (mul(mul(x, x), x) == 1) return x;
    }
    throw InvalidParameter(name() + " has no primitive cube root of unity");
}

}  // namespace biserial
