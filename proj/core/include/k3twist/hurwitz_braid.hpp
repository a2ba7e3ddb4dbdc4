#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k3twist/errors.hpp"
#include "k3twist/free_group.hpp"

namespace k3twist {

/// A group with exact equality, as needed by the Hurwitz action.
template <class G>
concept HurwitzGroup = requires(const G& a, const G& b) {
  { a * b } -> std::convertible_to<G>;
  { a.inverse() } -> std::convertible_to<G>;
  { a == b } -> std::convertible_to<bool>;
};

/// A word in sigma_1^{+-1}, ..., sigma_{n-1}^{+-1}; letter +i is sigma_i,
/// -i its inverse. Adjacent inverse pairs are cancelled on construction.
class BraidWord {
 public:
  BraidWord(int strands, const std::vector<int>& letters);
  explicit BraidWord(int strands) : BraidWord(strands, {}) {}

  /// "1,2,-3" (empty string for the identity).
  static BraidWord parse(int strands, std::string_view text);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  BraidWord operator*(const BraidWord& other) const;
  BraidWord inverse() const;

  bool operator==(const BraidWord&) const = default;
  std::string to_string() const;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// sigma_i: (.., g_i, g_{i+1}, ..) -> (.., g_i g_{i+1} g_i^{-1}, g_i, ..);
/// sigma_i^{-1}: (.., g_i, g_{i+1}, ..) -> (.., g_{i+1}, g_{i+1}^{-1} g_i g_{i+1}, ..).
template <HurwitzGroup G>
void apply_braid_letter(int letter, std::vector<G>& tuple) {
  const std::size_t i = static_cast<std::size_t>((letter > 0 ? letter : -letter) - 1);
  G left = tuple[i];
  G right = tuple[i + 1];
  if (letter > 0) {
    tuple[i] = left * right * left.inverse();
    tuple[i + 1] = std::move(left);
  } else {
    tuple[i + 1] = right.inverse() * left * right;
    tuple[i] = std::move(right);
  }
}

/// Left action: the rightmost letter acts first. Throws LengthMismatch.
template <HurwitzGroup G>
std::vector<G> hurwitz_apply(const BraidWord& b, std::vector<G> tuple) {
  if (tuple.size() != static_cast<std::size_t>(b.strands())) {
    throw LengthMismatch("braid on " + std::to_string(b.strands()) + " strands applied to a " +
                         std::to_string(tuple.size()) + "-tuple");
  }
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    apply_braid_letter(*it, tuple);
  }
  return tuple;
}

/// Ordered product g_1 ... g_n.
template <HurwitzGroup G>
G ordered_product(const std::vector<G>& tuple, G identity) {
  for (const G& g : tuple) identity = identity * g;
  return identity;
}

/// (x_1, ..., x_n) in F_n.
std::vector<FreeWord> free_basis_tuple(int n);

/// Exact word problem in B_n: b is trivial iff it fixes (x_1, ..., x_n).
bool braid_is_trivial(const BraidWord& b);

using FreeTuple = std::vector<FreeWord>;

struct OrbitResult {
  std::vector<FreeTuple> tuples;  // lexicographically sorted
  /// False when some tuple was dropped by the element length cap or the
  /// orbit size cap was reached.
  bool complete = true;
};

/// BFS closure under sigma_i^{+-1}, dropping tuples with an entry longer than
/// element_length_cap and stopping after orbit_cap tuples.
OrbitResult hurwitz_orbit(const FreeTuple& start, std::size_t element_length_cap, std::size_t orbit_cap);

/// Both sides of the orbit characterization for t = (x_{t_1}, ..., x_{t_n}) in F_rank,
/// restricted to entries u x u^{-1} with |u| <= conjugator_bound.
struct OrbitCharacterization {
  std::set<FreeTuple> orbit;        // Hurwitz BFS side
  std::set<FreeTuple> conjugates;   // brute-force side
  bool agree() const { return orbit == conjugates; }
};

/// The BFS may pass through entries with conjugators up to
/// conjugator_bound + bfs_slack before restricting.
OrbitCharacterization characterize_orbit(const std::vector<int>& letters, int rank,
                                         int conjugator_bound, int bfs_slack = 1);

bool orbit_characterization_check(const std::vector<int>& letters, int rank, int conjugator_bound);

/// Visits every freely reduced braid word on `strands` strands of length
/// <= max_length (including the empty word), in shortlex order by letters
/// 1, -1, 2, -2, ...
void enumerate_braid_words(int strands, int max_length,
                           const std::function<void(const BraidWord&)>& visit);

}  // namespace k3twist
