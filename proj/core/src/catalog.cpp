#include "k3twist/catalog.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "k3twist/errors.hpp"
#include "k3twist/mutation.hpp"

namespace k3twist {

using nlohmann::json;

namespace {

class Parser {
 public:
  Parser(const std::map<std::string, MoebiusMap>& elements, std::string_view text)
      : elements_(elements), text_(text) {}

  MoebiusMap parse() {
    MoebiusMap out = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  MoebiusMap sequence() {
    MoebiusMap out = MoebiusMap::identity();
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return out;
      out = out * factor();
    }
  }

  MoebiusMap factor() {
    MoebiusMap base = MoebiusMap::identity();
    if (text_[pos_] == '(') {
      ++pos_;
      base = sequence();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      if (start == pos_) fail("expected a name");
      const std::string name(text_.substr(start, pos_ - start));
      if (name != "1") {
        auto it = elements_.find(name);
        if (it == elements_.end()) fail("unknown element '" + name + "'");
        base = it->second;
      }
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const std::size_t start = pos_;
      if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.empty() || digits == "-") fail("bad exponent");
      base = base.pow(std::stol(digits));
    }
    return base;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("element word \"" + std::string(text_) + "\": " + what);
  }

  const std::map<std::string, MoebiusMap>& elements_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Typed access to a json node with the path kept for error messages.
struct Node {
  const json& value;
  std::string path;

  Node operator[](const std::string& key) const {
    if (!value.is_object()) throw SchemaError(path + ": expected an object");
    auto it = value.find(key);
    if (it == value.end()) throw SchemaError(path + "." + key + ": missing");
    return {*it, path + "." + key};
  }
  Node operator[](std::size_t i) const { return {value.at(i), path + "[" + std::to_string(i) + "]"}; }
  bool has(const std::string& key) const { return value.is_object() && value.contains(key); }

  std::size_t size() const {
    if (!value.is_array()) throw SchemaError(path + ": expected an array");
    return value.size();
  }
  std::string str() const {
    if (!value.is_string()) throw SchemaError(path + ": expected a string");
    return value.get<std::string>();
  }
  long integer() const {
    if (!value.is_number_integer()) throw SchemaError(path + ": expected an integer");
    return value.get<long>();
  }
  bool boolean() const {
    if (!value.is_boolean()) throw SchemaError(path + ": expected a boolean");
    return value.get<bool>();
  }
  long big_integer() const {
    try {
      Integer v = parse_integer(str());
      if (!v.fits_slong_p()) throw SchemaError(path + ": out of range");
      return v.get_si();
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path + ": " + e.what());
    }
  }
  Rational rational() const {
    try {
      return parse_rational(str());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path + ": " + e.what());
    }
  }
  template <class F>
  auto guarded(F&& f) const {
    try {
      return f();
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw SchemaError(path + ": " + e.what());
    }
  }
};

MukaiVector vector_at(const Node& n) {
  return n.guarded([&] { return parse_vector(n.str()); });
}

CatalogEntry parse_entry(const Node& n) {
  CatalogEntry e;
  e.name = n["name"].str();
  e.delta = n["delta"].big_integer();
  if (e.delta < 1) throw SchemaError(n.path + ".delta: must be positive");
  const MukaiForm form(e.delta);
  e.fano_index = n["fano_index"].big_integer();
  e.shift_sign = static_cast<int>(n["shift_sign"].integer());
  if (e.shift_sign != 1 && e.shift_sign != -1) throw SchemaError(n.path + ".shift_sign: must be 1 or -1");
  e.full_collection = n["full_collection"].boolean();

  e.collection.form = form;
  const Node vectors = n["collection"];
  for (std::size_t i = 0; i < vectors.size(); ++i) e.collection.vectors.push_back(vector_at(vectors[i]));
  const Node points = n["expected_points"];
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Node p = points[i];
    Rational x = p["x"].rational();
    Rational y_sq = p["y_sq"].rational();
    e.expected_points.push_back(p.guarded([&] { return HPoint(x, y_sq); }));
  }
  if (n.has("mutation_braid")) {
    const Node b = n["mutation_braid"];
    e.mutation_braid = b.guarded([&] { return BraidWord::parse(static_cast<int>(e.collection.vectors.size()), b.str()); });
  }

  const Node elements = n["elements"];
  if (!elements.value.is_object()) throw SchemaError(elements.path + ": expected an object");
  for (const auto& [key, value] : elements.value.items()) {
    const Node el{value, elements.path + "." + key};
    if (el.has("matrix")) {
      const Node m = el["matrix"];
      e.elements.emplace(key, m.guarded([&] { return parse_moebius(m.str()); }));
    } else if (el.has("reflection")) {
      const MukaiVector rho = vector_at(el["reflection"]);
      e.elements.emplace(key, el.guarded([&] { return reflection_moebius(form, rho); }));
    } else {
      throw SchemaError(el.path + ": expected \"matrix\" or \"reflection\"");
    }
  }
  auto element_word = [&](const Node& w) {
    return w.guarded([&] { return evaluate_element_word(e.elements, w.str()); });
  };

  const Node pres = n["presentation"];
  const Node factors = pres["factors"];
  std::vector<long> orders;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Node f = factors[i];
    e.presentation.names.push_back(f["name"].str());
    orders.push_back(f["order"].integer());
    e.presentation.assignment.push_back(element_word(f["realization"]));
  }
  e.presentation.group = pres.guarded([&] { return FreeProduct(orders); });
  const Node hom = pres["hom"];
  e.presentation.hom.modulus = hom["modulus"].integer();
  const Node targets = hom["targets"];
  for (std::size_t i = 0; i < targets.size(); ++i) e.presentation.hom.targets.push_back(targets[i].integer());
  hom.guarded([&] {
    e.presentation.hom.check(e.presentation.group);
    return 0;
  });
  const Node section = pres["section"];
  for (std::size_t i = 0; i < section.size(); ++i) {
    const Node w = section[i];
    e.presentation.section.push_back(
        w.guarded([&] { return e.presentation.group.parse(w.str(), e.presentation.names); }));
  }

  const Node claimed = n["claimed_generators"];
  for (std::size_t i = 0; i < claimed.size(); ++i) {
    e.claimed_generator_text.push_back(claimed[i].str());
    e.claimed_generators.push_back(element_word(claimed[i]));
  }
  const Node relations = n["relations"];
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const Node r = relations[i];
    Relation rel;
    rel.lhs_text = r["lhs"].str();
    rel.rhs_text = r["rhs"].str();
    rel.lhs = element_word(r["lhs"]);
    rel.rhs = element_word(r["rhs"]);
    e.relations.push_back(rel);
  }

  const Node index = n["expected_index"];
  if (index.str() != "infinite") {
    e.expected_index = index.big_integer();
    if (*e.expected_index < 1) throw SchemaError(index.path + ": must be positive or \"infinite\"");
  }

  const Node sig = n["signature"];
  e.signature.level = e.delta;
  e.signature.genus = sig["genus"].integer();
  e.signature.num_cusps = sig["cusps"].integer();
  const Node elliptic = sig["elliptic"];
  for (std::size_t i = 0; i < elliptic.size(); ++i) {
    e.signature.elliptic.push_back({elliptic[i]["order"].integer(), elliptic[i]["root"].boolean()});
  }
  sig.guarded([&] {
    e.signature.check();
    return 0;
  });

  if (n.has("strip")) {
    const Node s = n["strip"];
    e.strip = Strip{s["left"].rational(), s["width"].rational()};
    if (e.strip->width <= 0) throw SchemaError(s.path + ".width: must be positive");
  }
  e.ford_length = static_cast<int>(n["ford_length"].integer());
  e.free_length = static_cast<int>(n["free_length"].integer());
  e.reconcile_length = static_cast<int>(n["reconcile_length"].integer());
  if (e.ford_length < 1 || e.free_length < 1 || e.reconcile_length < 1) {
    throw SchemaError(n.path + ": check lengths must be positive");
  }
  return e;
}

void check_invariants(CatalogEntry& e) {
  const MukaiForm& form = e.collection.form;
  auto violation = [&](const std::string& what) { throw InvariantViolation(e.name + ": " + what); };
  if (e.collection.vectors.empty()) violation("empty collection");
  for (const auto& v : e.collection.vectors) {
    if (!is_root(form, v)) violation(v.to_string() + " has q = " + to_string(q_value(form, v)) + ", not -1");
  }
  if (e.expected_points.size() != e.collection.vectors.size()) {
    violation("expected one point per collection vector");
  }
  if (e.presentation.hom.targets.size() != e.presentation.group.size()) {
    violation("hom needs one target per factor");
  }
  if (e.mutation_braid) {
    e.mutation_base = mutate(e.collection, e.mutation_braid->inverse()).vectors;
  }
}

}  // namespace

std::vector<MoebiusMap> CatalogEntry::reflections() const {
  std::vector<MoebiusMap> out;
  for (const auto& v : collection.vectors) out.push_back(reflection_moebius(collection.form, v));
  return out;
}

MoebiusMap evaluate_element_word(const std::map<std::string, MoebiusMap>& elements, std::string_view text) {
  return Parser(elements, text).parse();
}

std::vector<CatalogEntry> load_catalog(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("$: ") + e.what());
  }
  const Node root{doc, "$"};
  if (root["schema"].integer() != 1) throw SchemaError("$.schema: unsupported version");
  const Node entries = root["entries"];
  std::vector<CatalogEntry> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CatalogEntry e = parse_entry(entries[i]);
    check_invariants(e);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_catalog(buffer.str());
}

const std::vector<CatalogEntry>& default_catalog() {
  static const std::vector<CatalogEntry> catalog = load_catalog(default_catalog_text());
  return catalog;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, std::string_view name) {
  for (const auto& e : catalog) {
    if (e.name == name) return e;
  }
  throw std::invalid_argument("no catalog entry named " + std::string(name));
}

}  // namespace k3twist
