#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "k3twist/moebius.hpp"

namespace k3twist {

/// One syllable g_factor^exponent of a reduced word.
struct Letter {
  int factor = 0;
  long exponent = 0;

  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

/// A reduced word: adjacent letters lie in different factors, exponents are
/// nonzero, and exponents in a finite factor of order k lie in [1, k-1].
struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

/// Free product of cyclic groups; order 0 stands for an infinite cyclic factor.
class FreeProduct {
 public:
  explicit FreeProduct(std::vector<long> factor_orders);

  std::size_t size() const { return orders_.size(); }
  long order(int factor) const { return orders_.at(static_cast<std::size_t>(factor)); }
  const std::vector<long>& orders() const { return orders_; }

  /// The normalized single-syllable word g_factor^exponent (possibly empty).
  Word letter(int factor, long exponent = 1) const;

  Word multiply(const Word& u, const Word& v) const;
  Word inverse(const Word& w) const;
  Word power(const Word& w, long k) const;

  /// Throws std::invalid_argument if w violates the normal-form invariants.
  void check(const Word& w) const;

  /// "g0^2 g1^-1"-style rendering with the given factor names.
  std::string format(const Word& w, const std::vector<std::string>& names) const;
  /// Inverse of format; "1" or "" is the empty word.
  Word parse(std::string_view text, const std::vector<std::string>& names) const;

 private:
  long normalize_exponent(int factor, long exponent) const;
  void append(std::vector<Letter>& letters, Letter next) const;

  std::vector<long> orders_;
};

inline Word multiply(const FreeProduct& fp, const Word& u, const Word& v) { return fp.multiply(u, v); }

/// A homomorphism to Z/m sending factor i's generator to targets[i];
/// modulus 0 means the target group is Z.
struct CyclicHom {
  long modulus = 0;
  std::vector<long> targets;

  /// Throws std::invalid_argument unless order * target == 0 (mod m) for each finite factor.
  void check(const FreeProduct& fp) const;
  long reduce(long value) const;
  /// Smallest k >= 1 with k * target == 0, or 0 if none (infinite image).
  long kernel_exponent(const FreeProduct& fp, int factor) const;
};

long hom_image(const FreeProduct& fp, const CyclicHom& hom, const Word& w);

/// Generators u h_i u^{-1} of the kernel, one per section word u and per
/// factor whose restricted kernel <h_i> is nontrivial; deduplicated and sorted.
/// For modulus m > 0 the section must hit each residue exactly once; for
/// modulus 0 it is a caller-chosen finite truncation and must be injective.
/// Throws BadSection otherwise.
std::vector<Word> kernel_generators(const FreeProduct& fp, const CyclicHom& hom,
                                    const std::vector<Word>& section);

/// Product of the assigned matrices along the word.
MoebiusMap evaluate(const FreeProduct& fp, const Word& w, const std::vector<MoebiusMap>& assignment);

/// Visits every nonempty reduced word of length <= max_length (one atom per
/// syllable of a finite factor, +-1 steps in an infinite factor) in DFS order,
/// with the evaluated product. Stops early when visit returns false.
using WordVisitor = std::function<bool(const std::vector<Letter>& atoms, const MoebiusMap& product)>;
void enumerate_reduced_products(const std::vector<MoebiusMap>& generators,
                                const std::vector<long>& orders, int max_length,
                                const WordVisitor& visit);

/// Throws OrderMismatch unless generators[i]^orders[i] = 1 for each finite order.
void check_generator_orders(const std::vector<MoebiusMap>& generators, const std::vector<long>& orders);

/// Bounded certificate of a free-product structure: no nonempty reduced word
/// of length <= max_length evaluates to the identity.
bool no_relation_up_to_length(const std::vector<MoebiusMap>& generators,
                              const std::vector<long>& orders, int max_length);

}  // namespace k3twist
