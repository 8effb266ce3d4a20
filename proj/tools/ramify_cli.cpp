#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramify/automorphism.hpp"
#include "ramify/catalog.hpp"
#include "ramify/error.hpp"
#include "ramify/hurwitz.hpp"
#include "ramify/polygonal.hpp"
#include "ramify/ramification.hpp"
#include "ramify/report.hpp"
#include "ramify/tuples.hpp"

using namespace ramify;

namespace {

struct Globals {
  unsigned jobs = 1;
  std::size_t order_bound = kDefaultOrderBound;
  std::string group_file;
};

// --group is a catalog name or a path; with --group-file it picks a group
// from that file by name (the first one when empty).
GroupTable resolve_group(const Globals& gl, const std::string& name) {
  if (!gl.group_file.empty()) {
    auto all = catalog::ingest_all(gl.group_file, gl.order_bound);
    if (name.empty()) return all.front();
    for (auto& g : all)
      if (g.label() == name) return g;
    throw UnknownName("no group named " + name + " in " + gl.group_file);
  }
  if (name.empty()) throw UnknownName("--group is required");
  if (std::filesystem::is_regular_file(name)) return catalog::ingest(name, gl.order_bound);
  return catalog::build(name, gl.order_bound);
}

std::string format_system(const GroupTable& g, const std::vector<Elem>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + g.element_label(t[i]);
  return s + "]";
}

std::string format_abelian_ull(const std::vector<unsigned long long>& f) { return format_abelian(f); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ramify: ramification structures on finite groups"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--jobs", gl.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--order-bound", gl.order_bound, "largest group order to materialise")
      ->check(CLI::Range(std::size_t{1}, kMaxOrderBound));
  app.add_option("--group-file", gl.group_file, "read groups from this file")->check(CLI::ExistingFile);

  // tuples
  auto* tuples = app.add_subcommand("tuples", "list the admissible branching types of a given length");
  std::string family = "N";
  std::size_t length = 3;
  unsigned bound = kTupleEntryBound;
  tuples->add_option("--family", family, "N or M")->check(CLI::IsMember({"N", "M"}));
  tuples->add_option("--length", length, "tuple length")->required();
  tuples->add_option("--bound", bound, "largest entry considered");

  // polygonal-ab
  auto* pab = app.add_subcommand("polygonal-ab", "abelianization of a polygonal group");
  std::string orders_text;
  std::string pivot = "smallest";
  pab->add_option("orders", orders_text, "e.g. 2,3,8")->required();
  pab->add_option("--pivot", pivot, "smallest or first")->check(CLI::IsMember({"smallest", "first"}));

  // search-unmixed
  auto* su = app.add_subcommand("search-unmixed", "unmixed ramification structures");
  std::string group, type1, type2;
  bool count_only = false, all_orderings = false, no_reps = false;
  std::size_t limit = 0;
  su->add_option("--group", group, "catalog name or group file");
  su->add_option("--type1", type1)->required();
  su->add_option("--type2", type2)->required();
  su->add_flag("--count-only", count_only);
  su->add_flag("--all-orderings", all_orderings, "also rearrange the first type");
  su->add_flag("--no-class-reps", no_reps, "do not restrict the first entry to class representatives");
  su->add_option("--limit", limit, "stop after this many structures");

  // search-mixed
  auto* sm = app.add_subcommand("search-mixed", "mixed ramification structures");
  std::string type;
  sm->add_option("--group", group, "catalog name or group file");
  sm->add_option("--type", type)->required();
  sm->add_flag("--count-only", count_only);
  sm->add_flag("--no-class-reps", no_reps);
  sm->add_option("--limit", limit);

  // orbits
  auto* orb = app.add_subcommand("orbits", "count Hurwitz orbits of structures");
  bool mixed = false;
  orb->add_option("--group", group, "catalog name or group file");
  orb->add_option("--type1", type1)->required();
  orb->add_option("--type2", type2);
  orb->add_flag("--mixed", mixed);

  // aut
  auto* aut = app.add_subcommand("aut", "automorphism group order and generators");
  bool list_gens = false;
  aut->add_option("--group", group, "catalog name or group file");
  aut->add_flag("--generators", list_gens, "print the images of the basis under each generator");

  // catalog
  auto* cat = app.add_subcommand("catalog", "built-in groups");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list the named groups");
  auto* cat_show = cat->add_subcommand("show", "print invariants of a group");
  std::string show_name;
  cat_show->add_option("name", show_name)->required();

  // sweep
  auto* sw = app.add_subcommand("sweep", "test every group of one order");
  std::size_t sweep_order = 0;
  sw->add_option("--order", sweep_order)->required();
  sw->add_option("--type1", type1)->required();
  sw->add_option("--type2", type2);
  sw->add_flag("--mixed", mixed);

  // verify-paper
  auto* vp = app.add_subcommand("verify-paper", "reproduce the classification table");
  bool machine = false;
  vp->add_flag("--machine", machine, "key=value lines instead of a table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*tuples) {
      auto list = family == "N" ? enumerate_N(length, bound) : enumerate_M(length, bound);
      for (const auto& t : list) std::cout << t.subscripted(family == "M") << "\n";
      return 0;
    }
    if (*pab) {
      auto a = parse_type(orders_text);
      auto f = polygonal_abelianization(a.entries(), pivot == "first" ? PivotRule::first_nonzero : PivotRule::smallest);
      std::cout << format_abelian_ull(f) << "\n";
      return 0;
    }
    if (*su) {
      GroupTable g = resolve_group(gl, group);
      SearchOptions o;
      o.jobs = gl.jobs;
      o.all_orderings = all_orderings;
      o.class_reps = !no_reps;
      o.limit = limit;
      auto found = enumerate_unmixed(g, parse_type(type1), parse_type(type2), o);
      if (count_only) {
        std::cout << found.size() << "\n";
      } else {
        for (const auto& s : found)
          std::cout << format_system(g, s.t1.elems) << " " << format_system(g, s.t2.elems) << "\n";
      }
      return 0;
    }
    if (*sm) {
      GroupTable g = resolve_group(gl, group);
      SearchOptions o;
      o.jobs = gl.jobs;
      o.class_reps = !no_reps;
      o.limit = limit;
      auto found = enumerate_mixed(g, parse_type(type), o);
      if (count_only) {
        std::cout << found.size() << "\n";
      } else {
        auto subgroups = index_two_subgroups(g);
        for (const auto& s : found) {
          auto k = std::lower_bound(subgroups.begin(), subgroups.end(), s.h) - subgroups.begin();
          std::cout << "H" << k << " " << format_system(g, s.t.elems) << "\n";
        }
      }
      return 0;
    }
    if (*orb) {
      GroupTable g = resolve_group(gl, group);
      AutGroup a = automorphisms(g, gl.jobs);
      auto t1 = parse_type(type1);
      if (mixed || type2.empty()) {
        auto c = count_orbits_mixed(g, t1, a, gl.jobs);
        std::cout << "orbits=" << c.orbits << " dim=" << dimension_mixed(t1) << "\n";
        for (const auto& s : c.reps) std::cout << format_system(g, s.t.elems) << "\n";
      } else {
        auto t2 = parse_type(type2);
        auto c = count_orbits_unmixed(g, t1, t2, a, gl.jobs);
        std::cout << "orbits=" << c.orbits << " dim=" << dimension_unmixed(t1, t2) << "\n";
        for (const auto& s : c.reps)
          std::cout << format_system(g, s.t1.elems) << " " << format_system(g, s.t2.elems) << "\n";
      }
      return 0;
    }
    if (*aut) {
      GroupTable g = resolve_group(gl, group);
      AutGroup a = automorphisms(g, gl.jobs);
      std::cout << "order=" << a.order() << " generators=" << a.generators.size() << "\n";
      if (list_gens) {
        std::cout << "basis " << format_system(g, a.basis) << "\n";
        for (std::size_t k : a.generators) {
          std::vector<Elem> img;
          for (Elem b : a.basis) img.push_back(a.elements[k](b));
          std::cout << format_system(g, img) << "\n";
        }
      }
      return 0;
    }
    if (*cat) {
      if (*cat_list) {
        for (const auto& e : catalog::entries())
          std::cout << e.name << "\t" << e.expected_order << "\t" << e.description << "\n";
        return 0;
      }
      if (*cat_show) {
        GroupTable g = gl.group_file.empty() ? catalog::build(show_name, gl.order_bound) : resolve_group(gl, show_name);
        auto nc = nilpotency_class(g);
        std::cout << "name=" << g.label() << " order=" << g.order() << " classes=" << g.class_count()
                  << " abelianization=" << format_abelian_ull(abelianization(g))
                  << " center=" << center(g).size() << " derived=" << commutator_subgroup(g).size()
                  << " index2=" << index_two_subgroups(g).size()
                  << " nilpotency=" << (nc ? std::to_string(*nc) : std::string("none")) << "\n";
        return 0;
      }
    }
    if (*sw) {
      std::optional<TupleType> t2;
      if (!mixed) {
        if (type2.empty()) throw ParseError("--type2 is required unless --mixed is given");
        t2 = parse_type(type2);
      }
      std::vector<GroupTable> file_groups;
      const std::vector<GroupTable>* groups = nullptr;
      if (!gl.group_file.empty()) {
        for (auto& g : catalog::ingest_all(gl.group_file, gl.order_bound))
          if (g.order() == sweep_order) file_groups.push_back(std::move(g));
        if (file_groups.empty()) throw MissingCatalog("no group of that order in " + gl.group_file);
        groups = &file_groups;
      }
      auto res = report::sweep(sweep_order, parse_type(type1), t2, groups, gl.jobs);
      std::size_t admitting = 0;
      for (const auto& e : res) {
        std::cout << e.group << "\t" << (e.admits ? "yes" : "no") << (e.filtered ? " (order identity fails)" : "")
                  << "\n";
        admitting += e.admits;
      }
      std::cout << "admitting=" << admitting << " of " << res.size() << "\n";
      return 0;
    }
    if (*vp) {
      auto r = report::verify_table(gl.jobs);
      if (machine) {
        report::print_machine(std::cout, r);
      } else {
        report::print_table(std::cout, r);
      }
      return r.pass() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
