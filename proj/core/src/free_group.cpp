#include "k3twist/free_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace k3twist {

FreeWord::FreeWord(const std::vector<int>& letters) {
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (x == 0) throw std::invalid_argument("free group letters are nonzero");
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

int FreeWord::rank() const {
  int r = 0;
  for (int x : letters_) r = std::max(r, x < 0 ? -x : x);
  return r;
}

FreeWord FreeWord::operator*(const FreeWord& other) const {
  std::size_t cancel = 0;
  const std::size_t n = letters_.size();
  while (cancel < n && cancel < other.letters_.size() &&
         letters_[n - 1 - cancel] == -other.letters_[cancel]) {
    ++cancel;
  }
  FreeWord out;
  out.letters_.reserve(n + other.letters_.size() - 2 * cancel);
  out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end() - static_cast<long>(cancel));
  out.letters_.insert(out.letters_.end(), other.letters_.begin() + static_cast<long>(cancel),
                      other.letters_.end());
  return out;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

std::strong_ordering FreeWord::operator<=>(const FreeWord& other) const {
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  return letters_ <=> other.letters_;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int x : letters_) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(x < 0 ? -x : x);
    if (x < 0) out += "^-1";
  }
  return out;
}

int conjugator_length(const FreeWord& w, int generator) {
  const auto& x = w.letters();
  if (x.size() % 2 == 0) return -1;
  const std::size_t k = x.size() / 2;
  if (x[k] != generator) return -1;
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i] != -x[x.size() - 1 - i]) return -1;
  }
  return static_cast<int>(k);
}

std::vector<FreeWord> words_up_to_length(int rank, int max_length) {
  std::vector<FreeWord> out{FreeWord()};
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      for (int g = -rank; g <= rank; ++g) {
        if (g == 0 || (!w.empty() && w.back() == -g)) continue;
        auto extended = w;
        extended.push_back(g);
        next.push_back(std::move(extended));
      }
    }
    std::sort(next.begin(), next.end());
    for (const auto& w : next) out.emplace_back(w);
    layer = std::move(next);
  }
  return out;
}

std::vector<FreeWord> bounded_conjugates(int rank, int generator, int max_conjugator) {
  std::set<FreeWord> out;
  const FreeWord x = FreeWord::generator(generator);
  for (const FreeWord& u : words_up_to_length(rank, max_conjugator)) {
    out.insert(u * x * u.inverse());
  }
  return {out.begin(), out.end()};
}

}  // namespace k3twist
