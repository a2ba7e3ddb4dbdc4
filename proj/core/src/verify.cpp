#include "k3twist/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "k3twist/mutation.hpp"

namespace k3twist {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

CheckResult check_roots(const CatalogEntry& e) {
  std::vector<std::string> bad;
  for (const auto& v : e.collection.vectors) {
    if (!is_root(e.collection.form, v)) bad.push_back(v.to_string());
  }
  if (!bad.empty()) return {"roots", false, "not roots: " + join(bad)};
  return {"roots", true, std::to_string(e.collection.vectors.size()) + " roots with q = -1"};
}

CheckResult check_points(const CatalogEntry& e) {
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < e.collection.vectors.size(); ++i) {
    const MukaiVector v = sign_normalized(e.collection.vectors[i]);
    HPoint p = h_point_of_vector(e.collection.form, v);
    if (i >= e.expected_points.size() || !(p == e.expected_points[i])) {
      bad.push_back(v.to_string() + " -> " + p.to_string());
    }
  }
  if (!bad.empty()) return {"expected_points", false, "mismatch: " + join(bad)};
  return {"expected_points", true, "all points agree"};
}

CheckResult check_relations(const CatalogEntry& e) {
  std::vector<std::string> bad;
  for (const auto& r : e.relations) {
    if (!(r.lhs == r.rhs)) bad.push_back(r.lhs_text + " = " + r.lhs.to_string() + " != " + r.rhs.to_string());
  }
  if (!bad.empty()) return {"relations", false, join(bad, "; ")};
  return {"relations", true, std::to_string(e.relations.size()) + " relations hold"};
}

CheckResult check_orders(const CatalogEntry& e) {
  try {
    check_generator_orders(e.presentation.assignment, e.presentation.group.orders());
    return {"generator_orders", true, "presentation generators have the declared orders"};
  } catch (const OrderMismatch& ex) {
    return {"generator_orders", false, ex.what()};
  }
}

std::vector<MoebiusMap> kernel_matrices(const CatalogEntry& e, std::size_t& count) {
  const auto& p = e.presentation;
  const auto words = kernel_generators(p.group, p.hom, p.section);
  count = words.size();
  std::vector<MoebiusMap> out;
  for (const auto& w : words) out.push_back(evaluate(p.group, w, p.assignment));
  return out;
}

std::string index_text(const std::optional<long>& index) {
  return index ? std::to_string(*index) : std::string("infinite");
}

CheckResult check_kernel_index(const CatalogEntry& e) {
  const auto& p = e.presentation;
  std::size_t count = 0;
  try {
    kernel_matrices(e, count);
  } catch (const Error& ex) {
    return {"kernel_index", false, ex.what()};
  }
  const std::optional<long> index = p.hom.modulus == 0 ? std::nullopt : std::optional<long>(p.hom.modulus);
  const bool pass = index == e.expected_index;
  return {"kernel_index", pass,
          "index " + index_text(index) + " (expected " + index_text(e.expected_index) + "), " +
              std::to_string(count) + " kernel generators" + (index ? "" : " in the truncation")};
}

CheckResult check_signature(const CatalogEntry& e) {
  const bool fg = finitely_generated(e.signature);
  const auto derived = signature_index(e.signature);
  const bool pass = derived == e.expected_index;
  return {"finite_generation", pass,
          std::string(fg ? "finitely generated" : "not finitely generated") + ", signature index " +
              index_text(derived) + " (expected " + index_text(e.expected_index) + ")"};
}

CheckResult check_reconcile(const CatalogEntry& e) {
  std::size_t count = 0;
  std::vector<MoebiusMap> kernel;
  try {
    kernel = kernel_matrices(e, count);
  } catch (const Error& ex) {
    return {"kernel_generators", false, ex.what()};
  }
  const bool pass = same_group_within_bound(kernel, e.claimed_generators, e.reconcile_length);
  return {"kernel_generators", pass,
          std::string(pass ? "kernel and claimed generators agree" : "kernel and claimed generators differ") +
              " within length " + std::to_string(e.reconcile_length)};
}

CheckResult check_collection_generators(const CatalogEntry& e) {
  const bool pass = same_group_within_bound(e.reflections(), e.claimed_generators, e.reconcile_length);
  return {"collection_generators", pass,
          std::string(pass ? "collection reflections and claimed generators agree"
                           : "collection reflections and claimed generators differ") +
              " within length " + std::to_string(e.reconcile_length)};
}

CheckResult check_serre(const CatalogEntry& e) {
  switch (serre_product_check(e)) {
    case SerreResult::Pass:
      return {"serre", true, "ordered product of reflections = t^" + std::to_string(-e.fano_index)};
    case SerreResult::Fail:
      return {"serre", false, "ordered product of reflections != t^" + std::to_string(-e.fano_index)};
    case SerreResult::NotApplicable:
      break;
  }
  return {"serre", true, "not applicable: no full collection"};
}

CheckResult check_ford(const CatalogEntry& e) {
  const auto gens = e.reflections();
  const std::vector<long> orders(gens.size(), 2);
  const FordDomain a = ford_domain(gens, orders, e.ford_length, e.strip);
  const FordDomain b = ford_domain(gens, orders, e.ford_length + 1, e.strip);
  std::vector<std::string> bad;
  for (const auto& p : e.expected_points) {
    const Membership ma = domain_membership(a, p);
    const Membership mb = domain_membership(b, p);
    if (ma == Membership::Exterior || ma != mb) {
      bad.push_back(p.to_string() + ": " + to_string(ma) + "/" + to_string(mb));
    }
  }
  if (!bad.empty()) return {"ford_domain", false, join(bad)};
  return {"ford_domain", true,
          "all points in the closed domain at lengths " + std::to_string(e.ford_length) + " and " +
              std::to_string(e.ford_length + 1) + " (" + std::to_string(b.circles.size()) + " circles)"};
}

CheckResult check_free(const CatalogEntry& e) {
  const auto gens = e.reflections();
  try {
    const bool pass = no_relation_up_to_length(gens, std::vector<long>(gens.size(), 2), e.free_length);
    return {"free_product", pass,
            std::string(pass ? "no relation" : "relation found") + " among reduced words of length <= " +
                std::to_string(e.free_length)};
  } catch (const OrderMismatch& ex) {
    return {"free_product", false, ex.what()};
  }
}

CheckResult check_mutation(const CatalogEntry& e) {
  const NumericalCollection base{e.collection.form, e.mutation_base};
  const auto path = find_mutation_path(base, e.collection, static_cast<int>(e.mutation_braid->length()));
  if (!path) return {"mutation_path", false, "no braid word found"};
  const bool same = same_up_to_sign(mutate(base, *path).vectors, mutate(base, *e.mutation_braid).vectors);
  return {"mutation_path", same, "found braid " + path->to_string() + " for " + e.mutation_braid->to_string()};
}

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& f) {
  try {
    return f();
  } catch (const std::exception& ex) {
    return {name, false, std::string("error: ") + ex.what()};
  }
}

}  // namespace

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.pass) out.push_back(c.name);
  }
  return out;
}

Report verify_entry(const CatalogEntry& e) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.entry = e.name;
  r.checks.push_back(guarded("roots", [&] { return check_roots(e); }));
  r.checks.push_back(guarded("expected_points", [&] { return check_points(e); }));
  r.checks.push_back(guarded("relations", [&] { return check_relations(e); }));
  r.checks.push_back(guarded("generator_orders", [&] { return check_orders(e); }));
  r.checks.push_back(guarded("kernel_index", [&] { return check_kernel_index(e); }));
  r.checks.push_back(guarded("finite_generation", [&] { return check_signature(e); }));
  r.checks.push_back(guarded("kernel_generators", [&] { return check_reconcile(e); }));
  r.checks.push_back(guarded("collection_generators", [&] { return check_collection_generators(e); }));
  r.checks.push_back(guarded("serre", [&] { return check_serre(e); }));
  r.checks.push_back(guarded("ford_domain", [&] { return check_ford(e); }));
  r.checks.push_back(guarded("free_product", [&] { return check_free(e); }));
  if (e.mutation_braid) r.checks.push_back(guarded("mutation_path", [&] { return check_mutation(e); }));
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"entry", r.entry}, {"checks", checks}, {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace

std::string report_json(const Report& report, int indent) { return to_json(report).dump(indent); }

std::string reports_json(const std::vector<Report>& reports, int indent) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out.dump(indent);
}

std::string report_text(const Report& report) {
  std::ostringstream out;
  out << report.entry << " (" << static_cast<long>(report.elapsed_ms) << " ms)\n";
  for (const auto& c : report.checks) {
    out << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  return out.str();
}

}  // namespace k3twist
