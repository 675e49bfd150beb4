#include "mcsub/grs.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcsub/rng.hpp"

namespace mcsub {

void GrsSpec::validate() const {
    const std::size_t len = a.size();
    if (len == 0 || b.size() != len) throw std::invalid_argument("grs: point/multiplier length mismatch");
    if (len > field->q()) throw std::invalid_argument("grs: more points than field elements");
    if (k >= len) throw std::invalid_argument("grs: dimension must satisfy k < n");
    Vec sorted = a;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("grs: evaluation points must be pairwise distinct");
    for (FElem x : b)
        if (x == 0) throw std::invalid_argument("grs: column multipliers must be nonzero");
}

LinearCode grs_code(const GrsSpec& spec) {
    spec.validate();
    const Field& f = *spec.field;
    const std::size_t n = spec.n();
    Matrix gen(spec.field, spec.k, n);
    if (spec.k > 0) {
        for (std::size_t j = 0; j < n; ++j) gen.at(0, j) = spec.b[j];
        for (std::size_t r = 1; r < spec.k; ++r)
            for (std::size_t j = 0; j < n; ++j) gen.at(r, j) = f.mul(gen.at(r - 1, j), spec.a[j]);
    }
    return LinearCode::from_rows(gen);
}

GrsSpec random_grs_spec(FieldPtr field, std::size_t n, std::size_t k, std::uint64_t seed) {
    if (n > field->q()) throw std::invalid_argument("grs: more points than field elements");
    Rng rng(seed);
    // Fisher-Yates over all field elements, take the first n as points.
    Vec pool(field->q());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = FElem(i);
    for (std::size_t i = pool.size() - 1; i > 0; --i)
        std::swap(pool[i], pool[rng.below(i + 1)]);
    GrsSpec spec;
    spec.field = std::move(field);
    spec.a.assign(pool.begin(), pool.begin() + long(n));
    spec.b.resize(n);
    for (auto& x : spec.b) x = FElem(1 + rng.below(spec.field->q() - 1));
    spec.k = k;
    spec.validate();
    return spec;
}

Vec grs_dual_multipliers(const Field& f, const Vec& a, const Vec& b) {
    const std::size_t n = a.size();
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        FElem prod = b[i];
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) prod = f.mul(prod, f.sub(a[i], a[j]));
        out[i] = f.inv(prod);
    }
    return out;
}

}  // namespace mcsub
