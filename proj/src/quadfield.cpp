#include "census/quadfield.hpp"

namespace census {

std::vector<FieldElement> ring_units(const QuadraticField& f) {
    std::vector<FieldElement> out;
    FieldElement g = f.tag == FieldTag::eisenstein ? fe_zeta(f) : fe_lambda(f);
    std::size_t count = f.tag == FieldTag::eisenstein ? 6 : 4;
    FieldElement u = fe_one(f);
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(u);
        u = u * g;
    }
    return out;
}

bool is_ring_unit(const FieldElement& x) {
    return is_integer(x.a) && is_integer(x.b) && norm(x) == 1;
}

std::string fe_str(const FieldElement& x) {
    const char* sym = x.field.tag == FieldTag::eisenstein ? "rho" : "i";
    if (x.b == 0) return rat_str(x.a);
    std::string bpart;
    if (x.b == 1)
        bpart = sym;
    else if (x.b == -1)
        bpart = std::string("-") + sym;
    else
        bpart = rat_str(x.b) + "*" + sym;
    if (x.a == 0) return bpart;
    if (x.b > 0) return rat_str(x.a) + "+" + bpart;
    return rat_str(x.a) + bpart;  // bpart already carries the minus sign
}

}  // namespace census
