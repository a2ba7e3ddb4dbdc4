#include "k3twist/reflection_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "k3twist/errors.hpp"
#include "k3twist/free_products.hpp"

namespace k3twist {

void SignatureData::check() const {
  if (level < 1) throw std::invalid_argument("level must be positive");
  if (genus < 0 || num_cusps < 0) throw std::invalid_argument("genus and cusps must be nonnegative");
  for (const auto& e : elliptic) {
    if (e.order < 2) throw std::invalid_argument("elliptic orders must be at least 2");
  }
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Interior: return "interior";
    case Membership::Boundary: return "boundary";
    case Membership::Exterior: return "exterior";
  }
  return "?";
}

bool root_orbit_connected(const MukaiForm& form, const MukaiVector& rho1, const MukaiVector& rho2,
                          const std::vector<Isometry3>& generators, int depth) {
  if (!is_root(form, rho1)) throw NotARoot(rho1.to_string() + " is not a root");
  if (!is_root(form, rho2)) throw NotARoot(rho2.to_string() + " is not a root");
  std::vector<Isometry3> steps;
  for (const auto& g : generators) {
    steps.push_back(g);
    steps.push_back(g.inverse());
  }
  const MukaiVector target = sign_normalized(rho2);
  std::set<MukaiVector> seen{sign_normalized(rho1)};
  std::vector<MukaiVector> layer{sign_normalized(rho1)};
  for (int level = 0;; ++level) {
    if (seen.contains(target)) return true;
    if (level == depth || layer.empty()) return false;
    std::vector<MukaiVector> next;
    for (const auto& v : layer) {
      for (const auto& g : steps) {
        MukaiVector w = sign_normalized(g.apply(v));
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
}

bool disk_contained(const IsometricCircle& a, const IsometricCircle& b) {
  // |ca - cb| + ra <= rb, squared twice to stay rational.
  if (a.radius_sq > b.radius_sq) return false;
  const Rational delta = a.center - b.center;
  const Rational gap = a.radius_sq + b.radius_sq - delta * delta;
  if (gap < 0) return false;
  return 4 * a.radius_sq * b.radius_sq <= gap * gap;
}

FordDomain ford_domain(const std::vector<MoebiusMap>& generators, const std::vector<long>& orders, int L,
                       std::optional<Strip> strip) {
  if (L < 1) throw std::invalid_argument("word length must be at least 1");
  if (strip && strip->width <= 0) throw std::invalid_argument("strip width must be positive");
  std::set<IsometricCircle> found;
  if (!generators.empty()) {
    enumerate_reduced_products(generators, orders, L, [&](const std::vector<Letter>&, const MoebiusMap& g) {
      if (g.c() != 0) found.insert(isometric_circle(g));
      return true;
    });
  }
  std::vector<IsometricCircle> by_radius(found.begin(), found.end());
  std::stable_sort(by_radius.begin(), by_radius.end(),
                   [](const auto& x, const auto& y) { return x.radius_sq > y.radius_sq; });
  std::vector<IsometricCircle> kept;
  for (const auto& c : by_radius) {
    bool covered = std::any_of(kept.begin(), kept.end(), [&](const auto& k) { return disk_contained(c, k); });
    if (!covered) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end());
  return {kept, L, strip};
}

Membership domain_membership(const FordDomain& dom, const HPoint& p) {
  bool on_edge = false;
  if (dom.strip) {
    const int l = cmp(p.x, dom.strip->left);
    const int r = cmp(p.x, dom.strip->right());
    if (l < 0 || r > 0) return Membership::Exterior;
    on_edge = l == 0 || r == 0;
  }
  for (const auto& c : dom.circles) {
    switch (locate(c, p)) {
      case CircleSide::Inside: return Membership::Exterior;
      case CircleSide::On: on_edge = true; break;
      case CircleSide::Outside: break;
    }
  }
  return on_edge ? Membership::Boundary : Membership::Interior;
}

std::vector<MukaiVector> extract_generator_roots(const MukaiForm& form, const FordDomain& dom,
                                                 const std::vector<MukaiVector>& roots) {
  std::vector<std::pair<HPoint, MukaiVector>> kept;
  for (const auto& rho : roots) {
    HPoint p = h_point_of_vector(form, rho);
    if (domain_membership(dom, p) != Membership::Exterior) kept.emplace_back(p, rho);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& x, const auto& y) {
    if (x.first.x != y.first.x) return x.first.x < y.first.x;
    return x.second.r < y.second.r;
  });
  std::vector<MukaiVector> out;
  for (auto& [p, rho] : kept) out.push_back(rho);
  return out;
}

bool finitely_generated(const SignatureData& sig) {
  if (sig.genus != 0 || sig.num_cusps != 1) return false;
  const auto special = std::count_if(sig.elliptic.begin(), sig.elliptic.end(), [](const EllipticPoint& e) {
    return !e.root_point || e.order > 2;
  });
  return special <= 1;
}

std::optional<long> signature_index(const SignatureData& sig) {
  if (!finitely_generated(sig)) return std::nullopt;
  long index = 1;
  for (const auto& e : sig.elliptic) {
    if (!e.root_point) {
      index *= e.order;
    } else if (e.order > 2) {
      index *= e.order / 2;
    }
  }
  return index;
}

bool generated_within_bound(const std::vector<MoebiusMap>& targets, const std::vector<MoebiusMap>& gens,
                            int L) {
  std::set<MoebiusMap> missing(targets.begin(), targets.end());
  std::vector<MoebiusMap> steps;
  for (const auto& g : gens) {
    steps.push_back(g);
    steps.push_back(g.inverse());
  }
  std::set<MoebiusMap> seen{MoebiusMap::identity()};
  std::vector<MoebiusMap> layer{MoebiusMap::identity()};
  missing.erase(MoebiusMap::identity());
  for (int level = 0; level < L && !missing.empty() && !layer.empty(); ++level) {
    std::vector<MoebiusMap> next;
    for (const auto& x : layer) {
      for (const auto& g : steps) {
        MoebiusMap y = x * g;
        if (seen.insert(y).second) {
          missing.erase(y);
          next.push_back(std::move(y));
        }
      }
    }
    layer = std::move(next);
  }
  return missing.empty();
}

bool same_group_within_bound(const std::vector<MoebiusMap>& gens_a, const std::vector<MoebiusMap>& gens_b,
                             int L) {
  return generated_within_bound(gens_a, gens_b, L) && generated_within_bound(gens_b, gens_a, L);
}

}  // namespace k3twist
