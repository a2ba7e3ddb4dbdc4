#pragma once

#include <optional>

#include "k3twist/catalog.hpp"
#include "k3twist/hurwitz_braid.hpp"

namespace k3twist {

/// sigma_i: (.., u, v, ..) -> (.., s_u(v), u, ..); sigma_i^{-1}: (.., u, v, ..) -> (.., v, s_v(u), ..).
/// The rightmost letter acts first. Throws LengthMismatch.
NumericalCollection mutate(const NumericalCollection& c, const BraidWord& b);

/// Elementwise equality up to the sign of each vector.
bool same_up_to_sign(const std::vector<MukaiVector>& a, const std::vector<MukaiVector>& b);

enum class SerreResult { Pass, Fail, NotApplicable };

/// Ordered product of the collection reflections against shift_sign * t_{-index}
/// (3x3) and t_{-index} (Moebius). Not applicable without a full collection.
SerreResult serre_product_check(const CatalogEntry& entry);
bool serre_identity_holds(const MukaiForm& form, const std::vector<MukaiVector>& vectors, long fano_index,
                          int shift_sign);

/// Shortest braid word (ties broken by letter order 1, -1, 2, -2, ...) with
/// mutate(a, word) = b up to signs.
std::optional<BraidWord> find_mutation_path(const NumericalCollection& a, const NumericalCollection& b,
                                            int max_length);

}  // namespace k3twist
