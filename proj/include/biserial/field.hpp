#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace biserial {

using Elem = std::uint8_t;

// GF(2^e) for 1 <= e <= 8, elements are bit vectors of polynomial coefficients.
class Field {
public:
    explicit Field(int e = 1);

    int degree() const { return e_; }
    int order() const { return 1 << e_; }
    std::uint32_t modulus() const { return poly_; }
    std::string name() const;

    static Elem add(Elem a, Elem b) { return a ^ b; }
    Elem mul(Elem a, Elem b) const { return tab_->mul[(std::size_t(a) << 8) | b]; }
    Elem inv(Elem a) const;
    const Elem* mul_row(Elem a) const { return &tab_->mul[std::size_t(a) << 8]; }

    // nonzero elements in increasing integer order
    std::vector<Elem> units() const;
    // element of multiplicative order 3; only exists when e is even
    Elem primitive_cube_root() const;

    bool operator==(const Field& o) const { return e_ == o.e_; }
    bool operator!=(const Field& o) const { return e_ != o.e_; }

private:
    struct Tables {
        std::vector<Elem> mul;
        std::vector<Elem> inv;
    };
    int e_;
    std::uint32_t poly_;
    const Tables* tab_;

    static const Tables* tables_for(int e);
};

}  // namespace biserial
