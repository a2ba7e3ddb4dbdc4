// Command line front end for the k3twist library.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3twist/arithmetic_groups.hpp"
#include "k3twist/catalog.hpp"
#include "k3twist/errors.hpp"
#include "k3twist/hurwitz_braid.hpp"
#include "k3twist/mutation.hpp"
#include "k3twist/svg.hpp"
#include "k3twist/verify.hpp"

using namespace k3twist;

namespace {

std::vector<CatalogEntry> load(const std::string& path) {
  return path.empty() ? default_catalog() : load_catalog_file(path);
}

// {"delta": "5", "vectors": ["1,0,1", ...]}
NumericalCollection load_collection(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  const auto doc = nlohmann::json::parse(in);
  NumericalCollection c{MukaiForm(parse_integer(doc.at("delta").get<std::string>())), {}};
  for (const auto& v : doc.at("vectors")) c.vectors.push_back(parse_vector(v.get<std::string>()));
  return c;
}

std::string vectors_text(const std::vector<MukaiVector>& vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : " ") + v.to_string();
  return out;
}

std::vector<int> parse_letters(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ',');) {
    if (!part.empty()) out.push_back(std::stoi(part));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Mukai lattice, Moebius and braid computations"};
  app.require_subcommand(1);
  std::string catalog_path;
  app.add_option("--catalog", catalog_path, "Catalog file (defaults to the built-in catalog)");

  long delta = 1, rmax = 1, lmax = 1;
  auto* roots = app.add_subcommand("roots", "List positive roots");
  roots->add_option("--delta", delta)->required();
  roots->add_option("--rmax", rmax)->required();
  roots->add_option("--lmax", lmax)->required();

  std::string vector_text;
  auto* point = app.add_subcommand("point", "Point of H attached to a negative vector");
  point->add_option("--delta", delta)->required();
  point->add_option("--vector", vector_text, "r,l,s")->required();

  std::string level_text, matrix_text;
  auto* al = app.add_subcommand("al-test", "Atkin-Lehner membership of a matrix");
  al->add_option("--level", level_text)->required();
  al->add_option("--matrix", matrix_text, "a,b,c,d")->required();

  std::string entry_name, svg_path;
  int wordlen = 4;
  auto* ford = app.add_subcommand("ford", "Truncated Ford domain of an entry");
  ford->add_option("--entry", entry_name)->required();
  ford->add_option("--wordlen", wordlen);
  ford->add_option("--svg", svg_path);

  bool all = false, as_json = false;
  auto* verify = app.add_subcommand("verify", "Verify catalog entries");
  auto* verify_entry_opt = verify->add_option("--entry", entry_name);
  verify->add_flag("--all", all)->excludes(verify_entry_opt);
  verify->add_flag("--json", as_json);

  std::string braid_text;
  auto* mut = app.add_subcommand("mutate", "Mutate an entry's collection by a braid word");
  mut->add_option("--entry", entry_name)->required();
  mut->add_option("--braid", braid_text, "e.g. 1,2,-3")->required();

  std::string from_path, to_path;
  int max_len = 3;
  auto* path = app.add_subcommand("path", "Shortest mutation path between collections");
  path->add_option("--from", from_path)->required();
  path->add_option("--to", to_path)->required();
  path->add_option("--max", max_len);

  int rank = 1, cap = 3;
  std::string tuple_text;
  std::size_t orbit_cap = 100000;
  auto* orbit = app.add_subcommand("hurwitz-orbit", "Hurwitz orbit of a tuple of free generators");
  orbit->add_option("--rank", rank)->required();
  orbit->add_option("--tuple", tuple_text, "generator indices, e.g. 1,2,1")->required();
  orbit->add_option("--cap", cap, "element length cap");
  orbit->add_option("--orbit-cap", orbit_cap);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*roots) {
      for (const auto& r : enumerate_roots(MukaiForm(delta), rmax, lmax)) std::cout << r.to_string() << "\n";
    } else if (*point) {
      std::cout << h_point_of_vector(MukaiForm(delta), parse_vector(vector_text)).to_string() << "\n";
    } else if (*al) {
      const Integer n = parse_integer(level_text);
      const MoebiusMap f = parse_moebius(matrix_text);
      const auto e = atkin_lehner_divisor(n, f);
      std::cout << "matrix " << f.to_string() << "\n";
      std::cout << "atkin_lehner " << (e ? to_string(*e) : std::string("none")) << "\n";
      std::cout << "fricke " << (in_fricke(n, f) ? "yes" : "no") << "\n";
      std::cout << "integral " << (integrality_test(MukaiForm(n), f) ? "yes" : "no") << "\n";
      return e ? 0 : 1;
    } else if (*ford) {
      const auto catalog = load(catalog_path);
      const auto& e = find_entry(catalog, entry_name);
      const auto gens = e.reflections();
      const auto dom = ford_domain(gens, std::vector<long>(gens.size(), 2), wordlen, e.strip);
      for (const auto& c : dom.circles) std::cout << "circle " << c.to_string() << "\n";
      for (const auto& p : e.expected_points) {
        std::cout << "point " << p.to_string() << " " << to_string(domain_membership(dom, p)) << "\n";
      }
      if (!svg_path.empty()) {
        double lo = -1, hi = 1, top = 0;
        for (const auto& p : e.expected_points) {
          lo = std::min(lo, p.x.get_d() - 1);
          hi = std::max(hi, p.x.get_d() + 1);
          top = std::max(top, std::sqrt(p.y_sq.get_d()));
        }
        std::ofstream(svg_path) << render_svg(dom, e.expected_points, {lo, hi, 2 * top + 0.5});
      }
    } else if (*verify) {
      const auto catalog = load(catalog_path);
      std::vector<Report> reports;
      if (!all && entry_name.empty()) all = true;
      for (const auto& e : catalog) {
        if (all || e.name == entry_name) reports.push_back(verify_entry(e));
      }
      if (reports.empty()) throw std::invalid_argument("no catalog entry named " + entry_name);
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.all_pass();
      if (as_json) {
        std::cout << reports_json(reports) << "\n";
      } else {
        for (const auto& r : reports) std::cout << report_text(r);
      }
      return ok ? 0 : 1;
    } else if (*mut) {
      const auto catalog = load(catalog_path);
      const auto& e = find_entry(catalog, entry_name);
      const NumericalCollection& c = e.collection;
      const auto result = mutate(c, BraidWord::parse(static_cast<int>(c.vectors.size()), braid_text));
      std::cout << vectors_text(result.vectors) << "\n";
    } else if (*path) {
      const auto a = load_collection(from_path);
      const auto b = load_collection(to_path);
      const auto found = find_mutation_path(a, b, max_len);
      if (!found) {
        std::cout << "none\n";
        return 1;
      }
      std::cout << (found->length() == 0 ? std::string("(empty)") : found->to_string()) << "\n";
    } else if (*orbit) {
      FreeTuple start;
      for (int x : parse_letters(tuple_text)) {
        if (x < 1 || x > rank) throw std::invalid_argument("tuple entries must lie in 1.." + std::to_string(rank));
        start.push_back(FreeWord::generator(x));
      }
      const auto result = hurwitz_orbit(start, static_cast<std::size_t>(cap), orbit_cap);
      for (const auto& t : result.tuples) {
        std::string line;
        for (const auto& w : t) line += (line.empty() ? "(" : ", ") + w.to_string();
        std::cout << line << ")\n";
      }
      std::cout << result.tuples.size() << " tuples, " << (result.complete ? "complete" : "truncated") << "\n";
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
