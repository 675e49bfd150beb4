#include "mcsub/subfield.hpp"

#include <stdexcept>

namespace mcsub {

SubfieldMap make_subfield_map(FieldPtr big, std::uint32_t subfield_order) {
    const auto [sp, sd] = factor_prime_power(subfield_order);
    if (sp != big->p() || big->m() % sd != 0)
        throw std::invalid_argument("requested subfield does not sit inside the field");
    SubfieldMap map;
    map.big = big;
    map.small = make_field(sp, sd);
    map.ext_degree = big->m() / sd;

    // root of the small modulus in the big field (coefficients of the modulus
    // are prime-field elements, which embed as their own indices)
    const auto& mod = map.small->modulus();
    FElem root = 0;
    bool found = false;
    for (std::uint32_t x = 0; x < big->q() && !found; ++x) {
        FElem acc = 0;  // Horner
        for (std::size_t i = mod.size(); i-- > 0;) acc = big->add(big->mul(acc, FElem(x)), FElem(mod[i]));
        if (acc == 0) {
            root = FElem(x);
            found = true;
        }
    }
    if (!found) throw std::logic_error("subfield modulus has no root in the big field");

    map.embed.assign(map.small->q(), 0);
    map.lower.assign(big->q(), -1);
    for (std::uint32_t e = 0; e < map.small->q(); ++e) {
        FElem acc = 0, power = 1;
        std::uint32_t digits = e;
        for (unsigned i = 0; i < sd; ++i, digits /= sp) {
            acc = big->add(acc, big->mul(FElem(digits % sp), power));
            power = big->mul(power, root);
        }
        map.embed[e] = acc;
        if (map.lower[acc] != -1) throw std::logic_error("subfield embedding not injective");
        map.lower[acc] = std::int32_t(e);
    }
    return map;
}

FElem subfield_trace(const SubfieldMap& map, FElem x) {
    const Field& f = *map.big;
    FElem acc = 0, term = x;
    for (unsigned i = 0; i < map.ext_degree; ++i) {
        acc = f.add(acc, term);
        term = f.pow(term, map.small->q());
    }
    if (!map.in_subfield(acc)) throw std::logic_error("trace left the subfield");
    return acc;
}

LinearCode subfield_subcode(const SubfieldMap& map, const LinearCode& c) {
    if (!(c.field() == *map.big)) throw std::invalid_argument("code not over the big field");
    const Field& f = *map.big;
    const std::size_t n = c.n();

    // Delsarte: (C intersect F'^n) dualizes to the trace of dual(C).  The trace
    // code is spanned over F' by traces of g^u * d for a basis 1, g, ..,
    // g^(m'-1) of the big field over the subfield.
    const LinearCode d = dual(c);
    const FElem g = f.primitive();
    Matrix trace_rows(map.small, d.k() * map.ext_degree, n);
    std::size_t r = 0;
    for (std::size_t v = 0; v < d.k(); ++v) {
        FElem scale = 1;
        for (unsigned u = 0; u < map.ext_degree; ++u, ++r) {
            for (std::size_t j = 0; j < n; ++j)
                trace_rows.at(r, j) = FElem(map.lower[subfield_trace(map, f.mul(scale, d.gen().at(v, j)))]);
            scale = f.mul(scale, g);
        }
    }
    return dual(LinearCode::from_rows(trace_rows));
}

LinearCode extend_scalars(const SubfieldMap& map, const LinearCode& small_code) {
    if (!(small_code.field() == *map.small)) throw std::invalid_argument("code not over the small field");
    Matrix rows(map.big, small_code.k(), small_code.n());
    for (std::size_t i = 0; i < small_code.k(); ++i)
        for (std::size_t j = 0; j < small_code.n(); ++j) rows.at(i, j) = map.embed[small_code.gen().at(i, j)];
    return LinearCode::from_rows(rows);
}

}  // namespace mcsub
