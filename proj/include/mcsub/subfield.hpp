#pragma once

#include "mcsub/linear_code.hpp"

namespace mcsub {

/// Embedding of GF(p^d) into GF(p^m) for d | m, realized by sending the small
/// field's generator to a root of its modulus in the big field.  Deterministic:
/// the first root in index order is used.
struct SubfieldMap {
    FieldPtr big;
    FieldPtr small;
    unsigned ext_degree = 0;        // m / d
    std::vector<FElem> embed;       // small index -> big index
    std::vector<std::int32_t> lower;  // big index -> small index, -1 outside

    bool in_subfield(FElem x) const { return lower[x] >= 0; }
};

SubfieldMap make_subfield_map(FieldPtr big, std::uint32_t subfield_order);

// Trace from the big field onto the subfield image: x + x^q' + x^(q'^2) + ...
FElem subfield_trace(const SubfieldMap& map, FElem x);

// C intersected with vectors over the subfield, as a code over the small
// field (computed through the trace of the dual).
LinearCode subfield_subcode(const SubfieldMap& map, const LinearCode& c);

// Base field extension: the big-field span of a small-field code's generator.
LinearCode extend_scalars(const SubfieldMap& map, const LinearCode& small_code);

}  // namespace mcsub
