#include "k3twist/hurwitz_braid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace k3twist {

BraidWord::BraidWord(int strands, const std::vector<int>& letters) : strands_(strands) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int x : letters) {
    const int i = x < 0 ? -x : x;
    if (i < 1 || i >= strands) {
      throw std::invalid_argument("braid generator " + std::to_string(x) + " out of range for B_" +
                                  std::to_string(strands));
    }
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

BraidWord BraidWord::parse(int strands, std::string_view text) {
  std::vector<int> letters;
  std::string s(text);
  std::erase_if(s, [](char c) { return c == ' '; });
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, ',');) {
    if (!part.empty()) letters.push_back(std::stoi(part));
  }
  return {strands, letters};
}

BraidWord BraidWord::operator*(const BraidWord& other) const {
  if (strands_ != other.strands_) throw std::invalid_argument("strand counts differ");
  std::vector<int> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return {strands_, letters};
}

BraidWord BraidWord::inverse() const {
  std::vector<int> letters;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) letters.push_back(-*it);
  return {strands_, letters};
}

std::string BraidWord::to_string() const {
  std::string out;
  for (int x : letters_) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::vector<FreeWord> free_basis_tuple(int n) {
  std::vector<FreeWord> basis;
  for (int i = 1; i <= n; ++i) basis.push_back(FreeWord::generator(i));
  return basis;
}

bool braid_is_trivial(const BraidWord& b) {
  const auto basis = free_basis_tuple(b.strands());
  return hurwitz_apply(b, basis) == basis;
}

OrbitResult hurwitz_orbit(const FreeTuple& start, std::size_t element_length_cap, std::size_t orbit_cap) {
  OrbitResult result;
  auto fits = [&](const FreeTuple& t) {
    return std::all_of(t.begin(), t.end(),
                       [&](const FreeWord& w) { return w.length() <= element_length_cap; });
  };
  std::set<FreeTuple> seen;
  if (!fits(start) || orbit_cap == 0) {
    result.complete = false;
    return result;
  }
  std::deque<FreeTuple> queue{start};
  seen.insert(start);
  const int n = static_cast<int>(start.size());
  while (!queue.empty()) {
    FreeTuple current = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      for (int letter : {i, -i}) {
        FreeTuple next = current;
        apply_braid_letter(letter, next);
        if (!fits(next)) {
          result.complete = false;
          continue;
        }
        if (seen.contains(next)) continue;
        if (seen.size() >= orbit_cap) {
          result.complete = false;
          continue;
        }
        seen.insert(next);
        queue.push_back(std::move(next));
      }
    }
  }
  result.tuples.assign(seen.begin(), seen.end());
  return result;
}

namespace {

// Distinct rearrangements of the letters.
std::vector<std::vector<int>> distinct_permutations(std::vector<int> letters) {
  std::sort(letters.begin(), letters.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

// All tuples (c_1, ..., c_k) with c_i drawn from choices[i], keyed by product.
std::map<FreeWord, std::vector<FreeTuple>> products_of(
    const std::vector<const std::vector<FreeWord>*>& choices) {
  std::map<FreeWord, std::vector<FreeTuple>> out;
  FreeTuple current;
  std::function<void(std::size_t, const FreeWord&)> walk = [&](std::size_t i, const FreeWord& prefix) {
    if (i == choices.size()) {
      out[prefix].push_back(current);
      return;
    }
    for (const FreeWord& c : *choices[i]) {
      current.push_back(c);
      walk(i + 1, prefix * c);
      current.pop_back();
    }
  };
  walk(0, FreeWord());
  return out;
}

bool entries_within(const FreeTuple& t, int conjugator_bound) {
  for (const FreeWord& w : t) {
    const auto& x = w.letters();
    if (x.size() % 2 == 0) return false;
    const int middle = x[x.size() / 2];
    if (middle < 0) return false;
    const int k = conjugator_length(w, middle);
    if (k < 0 || k > conjugator_bound) return false;
  }
  return true;
}

}  // namespace

OrbitCharacterization characterize_orbit(const std::vector<int>& letters, int rank,
                                         int conjugator_bound, int bfs_slack) {
  for (int x : letters) {
    if (x < 1 || x > rank) throw std::invalid_argument("tuple entries must be basis letters x_1..x_rank");
  }
  OrbitCharacterization out;
  const std::size_t n = letters.size();
  FreeTuple start;
  for (int x : letters) start.push_back(FreeWord::generator(x));
  FreeWord target;
  for (const FreeWord& w : start) target = target * w;

  // Brute force: conjugate tuples of every rearrangement with the right product,
  // split in two halves and matched on the product.
  std::map<int, std::vector<FreeWord>> conjugates;
  for (int x : letters) {
    if (!conjugates.contains(x)) conjugates[x] = bounded_conjugates(rank, x, conjugator_bound);
  }
  for (const auto& perm : distinct_permutations(letters)) {
    const std::size_t half = n / 2;
    std::vector<const std::vector<FreeWord>*> left_choices, right_choices;
    for (std::size_t i = 0; i < n; ++i) {
      (i < half ? left_choices : right_choices).push_back(&conjugates[perm[i]]);
    }
    auto left = products_of(left_choices);
    auto right = products_of(right_choices);
    for (const auto& [prefix, lefts] : left) {
      auto it = right.find(prefix.inverse() * target);
      if (it == right.end()) continue;
      for (const FreeTuple& l : lefts) {
        for (const FreeTuple& r : it->second) {
          FreeTuple t = l;
          t.insert(t.end(), r.begin(), r.end());
          out.conjugates.insert(std::move(t));
        }
      }
    }
  }

  // Hurwitz side: BFS inside the slightly larger box, then restrict.
  std::set<FreeTuple> seen{start};
  std::deque<FreeTuple> queue{start};
  while (!queue.empty()) {
    FreeTuple current = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i < static_cast<int>(n); ++i) {
      for (int letter : {i, -i}) {
        FreeTuple next = current;
        apply_braid_letter(letter, next);
        if (!entries_within(next, conjugator_bound + bfs_slack) || seen.contains(next)) continue;
        seen.insert(next);
        queue.push_back(std::move(next));
      }
    }
  }
  for (const FreeTuple& t : seen) {
    if (entries_within(t, conjugator_bound)) out.orbit.insert(t);
  }
  return out;
}

bool orbit_characterization_check(const std::vector<int>& letters, int rank, int conjugator_bound) {
  return characterize_orbit(letters, rank, conjugator_bound).agree();
}

void enumerate_braid_words(int strands, int max_length,
                           const std::function<void(const BraidWord&)>& visit) {
  std::vector<int> alphabet;
  for (int i = 1; i < strands; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  std::vector<int> word;
  // Iterative deepening keeps shortlex order.
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      visit(BraidWord(strands, word));
      return;
    }
    for (int x : alphabet) {
      if (!word.empty() && word.back() == -x) continue;
      word.push_back(x);
      extend(remaining - 1);
      word.pop_back();
    }
  };
  for (int len = 0; len <= max_length; ++len) extend(len);
}

}  // namespace k3twist
