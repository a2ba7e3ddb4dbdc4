#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3twist/free_products.hpp"
#include "k3twist/hurwitz_braid.hpp"
#include "k3twist/moebius.hpp"
#include "k3twist/mukai_lattice.hpp"
#include "k3twist/reflection_group.hpp"

namespace k3twist {

/// Mukai vectors of the restrictions of an exceptional collection.
struct NumericalCollection {
  MukaiForm form{1};
  std::vector<MukaiVector> vectors;
};

/// A free product of cyclic groups realized by words in named elements,
/// together with a map onto a cyclic group and a section of that map.
struct Presentation {
  FreeProduct group{{}};
  std::vector<std::string> names;
  std::vector<MoebiusMap> assignment;
  CyclicHom hom;
  std::vector<Word> section;
};

/// lhs = rhs, both products of named elements.
struct Relation {
  std::string lhs_text;
  std::string rhs_text;
  MoebiusMap lhs = MoebiusMap::identity();
  MoebiusMap rhs = MoebiusMap::identity();
};

struct CatalogEntry {
  std::string name;
  long delta = 1;
  long fano_index = 1;
  int shift_sign = 1;
  /// Whether the collection is full, so the Serre identity applies.
  bool full_collection = true;

  NumericalCollection collection;
  std::vector<HPoint> expected_points;
  /// When set, collection = mutation_braid applied to mutation_base; the base
  /// is computed at load time by the inverse braid.
  std::optional<BraidWord> mutation_braid;
  std::vector<MukaiVector> mutation_base;

  std::map<std::string, MoebiusMap> elements;
  Presentation presentation;
  std::vector<std::string> claimed_generator_text;
  std::vector<MoebiusMap> claimed_generators;
  std::vector<Relation> relations;

  /// Empty for an infinite index.
  std::optional<long> expected_index;
  SignatureData signature;
  std::optional<Strip> strip;

  int ford_length = 4;
  int free_length = 10;
  int reconcile_length = 9;

  /// Reflections at the collection roots, in order.
  std::vector<MoebiusMap> reflections() const;
};

/// Parses a catalog document. Throws SchemaError (with a field path) or
/// InvariantViolation (with the entry name).
std::vector<CatalogEntry> load_catalog(std::string_view json_text);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);
/// The catalog compiled into the library.
std::string_view default_catalog_text();
const std::vector<CatalogEntry>& default_catalog();

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, std::string_view name);

/// Product of named elements, e.g. "t s0 t^-1"; "1" is the identity.
MoebiusMap evaluate_element_word(const std::map<std::string, MoebiusMap>& elements, std::string_view text);

}  // namespace k3twist
