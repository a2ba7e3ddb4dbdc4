#pragma once

#include <compare>
#include <string>
#include <vector>

namespace k3twist {

/// A freely reduced word in F_m. Letter +i is x_i, -i is x_i^{-1} (i >= 1).
class FreeWord {
 public:
  FreeWord() = default;
  /// Freely reduces the given letters; zero letters are rejected.
  explicit FreeWord(const std::vector<int>& letters);
  static FreeWord generator(int i) { return FreeWord(std::vector<int>{i}); }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  /// Largest generator index that occurs.
  int rank() const;

  FreeWord operator*(const FreeWord& other) const;
  FreeWord inverse() const;

  bool operator==(const FreeWord&) const = default;
  /// Shortlex: shorter words first, then letters lexicographically.
  std::strong_ordering operator<=>(const FreeWord& other) const;

  /// "x1 x2 x1^-1", or "1" for the identity.
  std::string to_string() const;

 private:
  std::vector<int> letters_;
};

/// k if w = u x_i u^{-1} in reduced form with |u| = k; -1 otherwise.
int conjugator_length(const FreeWord& w, int generator);

/// All reduced words of length <= max_length in F_rank, in shortlex order.
std::vector<FreeWord> words_up_to_length(int rank, int max_length);

/// {u x_i u^{-1} : |u| <= max_conjugator}, deduplicated and sorted.
std::vector<FreeWord> bounded_conjugates(int rank, int generator, int max_conjugator);

}  // namespace k3twist
