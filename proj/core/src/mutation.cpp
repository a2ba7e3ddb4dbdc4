#include "k3twist/mutation.hpp"

#include <functional>

#include "k3twist/errors.hpp"

namespace k3twist {

NumericalCollection mutate(const NumericalCollection& c, const BraidWord& b) {
  if (static_cast<std::size_t>(b.strands()) != c.vectors.size()) {
    throw LengthMismatch("braid on " + std::to_string(b.strands()) + " strands applied to " +
                         std::to_string(c.vectors.size()) + " vectors");
  }
  NumericalCollection out = c;
  auto& v = out.vectors;
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    const int letter = *it;
    const std::size_t i = static_cast<std::size_t>((letter > 0 ? letter : -letter) - 1);
    MukaiVector left = v[i];
    MukaiVector right = v[i + 1];
    if (letter > 0) {
      v[i] = reflect(c.form, left, right);
      v[i + 1] = left;
    } else {
      v[i] = right;
      v[i + 1] = reflect(c.form, right, left);
    }
  }
  return out;
}

bool same_up_to_sign(const std::vector<MukaiVector>& a, const std::vector<MukaiVector>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sign_normalized(a[i]) != sign_normalized(b[i])) return false;
  }
  return true;
}

bool serre_identity_holds(const MukaiForm& form, const std::vector<MukaiVector>& vectors, long fano_index,
                          int shift_sign) {
  Isometry3 lattice = Isometry3::identity(form);
  MoebiusMap moebius = MoebiusMap::identity();
  for (const auto& v : vectors) {
    lattice = lattice * reflection_matrix(form, v);
    moebius = moebius * reflection_moebius(form, v);
  }
  const Isometry3 expected = translation_matrix(form, Integer(-fano_index));
  const bool lattice_ok = shift_sign > 0 ? lattice == expected : lattice == -expected;
  return lattice_ok && moebius == translation_moebius(Integer(-fano_index));
}

SerreResult serre_product_check(const CatalogEntry& entry) {
  if (!entry.full_collection) return SerreResult::NotApplicable;
  return serre_identity_holds(entry.collection.form, entry.collection.vectors, entry.fano_index,
                              entry.shift_sign)
             ? SerreResult::Pass
             : SerreResult::Fail;
}

std::optional<BraidWord> find_mutation_path(const NumericalCollection& a, const NumericalCollection& b,
                                            int max_length) {
  if (a.vectors.size() != b.vectors.size() || !(a.form == b.form)) return std::nullopt;
  const int n = static_cast<int>(a.vectors.size());
  if (same_up_to_sign(a.vectors, b.vectors)) return BraidWord(std::max(n, 1));
  if (n < 2) return std::nullopt;
  std::vector<int> alphabet;
  for (int i = 1; i < n; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  std::vector<int> word;
  std::optional<BraidWord> found;
  std::function<void(int)> search = [&](int remaining) {
    if (found) return;
    if (remaining == 0) {
      BraidWord candidate(n, word);
      if (same_up_to_sign(mutate(a, candidate).vectors, b.vectors)) found = candidate;
      return;
    }
    for (int x : alphabet) {
      if (!word.empty() && word.back() == -x) continue;
      word.push_back(x);
      search(remaining - 1);
      word.pop_back();
      if (found) return;
    }
  };
  for (int len = 1; len <= max_length && !found; ++len) search(len);
  return found;
}

}  // namespace k3twist
