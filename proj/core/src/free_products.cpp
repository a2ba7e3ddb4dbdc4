#include "k3twist/free_products.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "k3twist/errors.hpp"

namespace k3twist {

FreeProduct::FreeProduct(std::vector<long> factor_orders) : orders_(std::move(factor_orders)) {
  for (long k : orders_) {
    if (k != 0 && k < 2) throw std::invalid_argument("factor orders must be 0 or >= 2");
  }
}

long FreeProduct::normalize_exponent(int factor, long exponent) const {
  long k = order(factor);
  if (k == 0) return exponent;
  long e = exponent % k;
  return e < 0 ? e + k : e;
}

void FreeProduct::append(std::vector<Letter>& letters, Letter next) const {
  next.exponent = normalize_exponent(next.factor, next.exponent);
  if (next.exponent == 0) return;
  if (!letters.empty() && letters.back().factor == next.factor) {
    long merged = normalize_exponent(next.factor, letters.back().exponent + next.exponent);
    if (merged == 0) {
      letters.pop_back();
    } else {
      letters.back().exponent = merged;
    }
    return;
  }
  letters.push_back(next);
}

Word FreeProduct::letter(int factor, long exponent) const {
  if (factor < 0 || static_cast<std::size_t>(factor) >= size()) {
    throw std::out_of_range("factor index out of range");
  }
  Word w;
  append(w.letters, {factor, exponent});
  return w;
}

Word FreeProduct::multiply(const Word& u, const Word& v) const {
  Word out = u;
  // Appending v's letters one at a time cascades cancellations correctly
  // because each of u, v is already reduced.
  for (const Letter& x : v.letters) append(out.letters, x);
  return out;
}

Word FreeProduct::inverse(const Word& w) const {
  Word out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    append(out.letters, {it->factor, -it->exponent});
  }
  return out;
}

Word FreeProduct::power(const Word& w, long k) const {
  Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out = multiply(out, base);
  return out;
}

void FreeProduct::check(const Word& w) const {
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const Letter& x = w.letters[i];
    if (x.factor < 0 || static_cast<std::size_t>(x.factor) >= size()) {
      throw std::invalid_argument("letter factor out of range");
    }
    if (x.exponent == 0) throw std::invalid_argument("zero exponent in word");
    long k = order(x.factor);
    if (k != 0 && (x.exponent < 1 || x.exponent >= k)) {
      throw std::invalid_argument("exponent outside [1, k-1] for a finite factor");
    }
    if (i > 0 && w.letters[i - 1].factor == x.factor) {
      throw std::invalid_argument("adjacent letters from the same factor");
    }
  }
}

std::string FreeProduct::format(const Word& w, const std::vector<std::string>& names) const {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& x : w.letters) {
    if (!out.empty()) out += ' ';
    out += names.at(static_cast<std::size_t>(x.factor));
    if (x.exponent != 1) out += "^" + std::to_string(x.exponent);
  }
  return out;
}

Word FreeProduct::parse(std::string_view text, const std::vector<std::string>& names) const {
  std::istringstream in{std::string(text)};
  Word out;
  for (std::string token; in >> token;) {
    if (token == "1") continue;
    std::string name = token;
    long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      exponent = std::stol(token.substr(caret + 1));
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::invalid_argument("unknown generator '" + name + "'");
    append(out.letters, {static_cast<int>(it - names.begin()), exponent});
  }
  return out;
}

void CyclicHom::check(const FreeProduct& fp) const {
  if (modulus < 0) throw std::invalid_argument("modulus must be >= 0");
  if (targets.size() != fp.size()) throw std::invalid_argument("one target per factor required");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    long k = fp.order(static_cast<int>(i));
    if (k != 0 && reduce(k * targets[i]) != 0) {
      throw std::invalid_argument("target of factor " + std::to_string(i) +
                                  " is incompatible with its order");
    }
  }
}

long CyclicHom::reduce(long value) const {
  if (modulus == 0) return value;
  long r = value % modulus;
  return r < 0 ? r + modulus : r;
}

long CyclicHom::kernel_exponent(const FreeProduct& fp, int factor) const {
  long target = targets.at(static_cast<std::size_t>(factor));
  long k = fp.order(factor);
  if (modulus == 0) return target == 0 ? 1 : 0;
  for (long j = 1; j <= modulus; ++j) {
    if (reduce(j * target) == 0) return (k != 0 && j % k == 0) ? k : j;
  }
  return 0;
}

long hom_image(const FreeProduct& fp, const CyclicHom& hom, const Word& w) {
  long total = 0;
  for (const Letter& x : w.letters) {
    total = hom.reduce(total + hom.reduce(x.exponent * hom.targets.at(static_cast<std::size_t>(x.factor))));
  }
  (void)fp;
  return total;
}

std::vector<Word> kernel_generators(const FreeProduct& fp, const CyclicHom& hom,
                                    const std::vector<Word>& section) {
  hom.check(fp);
  std::set<long> images;
  for (const Word& u : section) {
    if (!images.insert(hom_image(fp, hom, u)).second) {
      throw BadSection("two section words have the same image");
    }
  }
  if (hom.modulus > 0 && images.size() != static_cast<std::size_t>(hom.modulus)) {
    throw BadSection("section does not cover Z/" + std::to_string(hom.modulus));
  }

  std::set<Word> generators;
  for (std::size_t i = 0; i < fp.size(); ++i) {
    const int factor = static_cast<int>(i);
    const long j = hom.kernel_exponent(fp, factor);
    if (j == 0) continue;  // restriction is injective: H_i trivial
    const long k = fp.order(factor);
    if (k != 0 && j % k == 0) continue;  // h_i = g_i^k = 1
    const Word h = fp.letter(factor, j);
    for (const Word& u : section) {
      generators.insert(fp.multiply(fp.multiply(u, h), fp.inverse(u)));
    }
  }
  return {generators.begin(), generators.end()};
}

MoebiusMap evaluate(const FreeProduct& fp, const Word& w, const std::vector<MoebiusMap>& assignment) {
  MoebiusMap out = MoebiusMap::identity();
  for (const Letter& x : w.letters) {
    if (static_cast<std::size_t>(x.factor) >= assignment.size()) {
      throw std::invalid_argument("no matrix assigned to factor " + std::to_string(x.factor));
    }
    out = out * assignment[static_cast<std::size_t>(x.factor)].pow(x.exponent);
  }
  (void)fp;
  return out;
}

namespace {

struct Atom {
  int factor;
  long exponent;
  MoebiusMap matrix;
};

}  // namespace

void enumerate_reduced_products(const std::vector<MoebiusMap>& generators,
                                const std::vector<long>& orders, int max_length,
                                const WordVisitor& visit) {
  if (generators.size() != orders.size()) throw std::invalid_argument("one order per generator");
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const long k = orders[i];
    if (k == 0) {
      atoms.push_back({static_cast<int>(i), 1, generators[i]});
      atoms.push_back({static_cast<int>(i), -1, generators[i].inverse()});
    } else {
      for (long e = 1; e < k; ++e) atoms.push_back({static_cast<int>(i), e, generators[i].pow(e)});
    }
  }

  std::vector<Letter> word;
  std::vector<MoebiusMap> products{MoebiusMap::identity()};
  bool stop = false;
  // Reduced: a finite factor never repeats consecutively; an infinite factor
  // may repeat only with the same sign.
  std::function<void()> extend = [&]() {
    if (static_cast<int>(word.size()) == max_length) return;
    for (const Atom& atom : atoms) {
      if (!word.empty() && word.back().factor == atom.factor) {
        if (orders[static_cast<std::size_t>(atom.factor)] != 0 || word.back().exponent != atom.exponent) continue;
      }
      word.push_back({atom.factor, atom.exponent});
      products.push_back(products.back() * atom.matrix);
      if (!visit(word, products.back())) stop = true;
      if (!stop) extend();
      products.pop_back();
      word.pop_back();
      if (stop) return;
    }
  };
  extend();
}

void check_generator_orders(const std::vector<MoebiusMap>& generators, const std::vector<long>& orders) {
  if (generators.size() != orders.size()) throw std::invalid_argument("one order per generator");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (orders[i] != 0 && !generators[i].pow(orders[i]).is_identity()) {
      throw OrderMismatch(generators[i].to_string() + " does not have order dividing " +
                          std::to_string(orders[i]));
    }
  }
}

bool no_relation_up_to_length(const std::vector<MoebiusMap>& generators,
                              const std::vector<long>& orders, int max_length) {
  check_generator_orders(generators, orders);
  bool free = true;
  enumerate_reduced_products(generators, orders, max_length,
                             [&](const std::vector<Letter>&, const MoebiusMap& product) {
                               if (product.is_identity()) free = false;
                               return free;
                             });
  return free;
}

}  // namespace k3twist
