#include "ramify/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "ramify/automorphism.hpp"
#include "ramify/error.hpp"

namespace ramify::catalog {

namespace {

GroupTable permutation_group(std::size_t degree, const std::vector<std::string>& cycles, std::string label,
                             std::size_t bound) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(parse_cycles(c, degree));
  return from_permutations(degree, gens, std::move(label), bound);
}

GroupTable symmetric(std::size_t n, std::size_t bound) {
  if (n == 1) return from_permutations(1, {}, "S1", bound);
  std::string full = "(";
  for (std::size_t i = 1; i <= n; ++i) full += std::to_string(i) + (i < n ? "," : ")");
  return permutation_group(n, {"(1,2)", full}, "S" + std::to_string(n), bound);
}

GroupTable alternating(std::size_t n, std::size_t bound) {
  if (n < 3) return from_permutations(std::max<std::size_t>(n, 1), {}, "A" + std::to_string(n), bound);
  std::string cycle = "(";
  for (std::size_t i = (n % 2 ? 1 : 2); i <= n; ++i) cycle += std::to_string(i) + (i < n ? "," : ")");
  return permutation_group(n, {"(1,2,3)", cycle}, "A" + std::to_string(n), bound);
}

MetabelianData dihedral_data(unsigned n) {
  MetabelianData d;
  d.n_invariants = {n};
  d.q_invariants = {2};
  d.phi = {IntMatrix{{static_cast<long long>(n) - 1}}};
  return d;
}

GroupTable g256(int which, std::size_t bound) {
  return pc_group(g256_presentation(which), which == 1 ? "G256_1" : "G256_2", bound);
}

}  // namespace

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> list = {
      {"A5", 60, "alternating group on 5 letters"},
      {"S4xZ2", 48, "S4 x Z2"},
      {"G32", 32, "Z2^4 semidirect Z2, nilpotency class 2"},
      {"Z5^2", 25, "elementary abelian of order 25"},
      {"S4", 24, "symmetric group on 4 letters"},
      {"G16", 16, "(Z4 x Z2) semidirect Z2 with zxz = xy"},
      {"D4xZ2", 16, "dihedral group of order 8 times Z2"},
      {"Z2^4", 16, "elementary abelian of order 16"},
      {"Z3^2", 9, "elementary abelian of order 9"},
      {"Z2^3", 8, "elementary abelian of order 8"},
      {"G256_1", 256, "Z2^5 by Z2^3, nilpotency class 3 (first)"},
      {"G256_2", 256, "Z2^5 by Z2^3, nilpotency class 3 (second)"},
  };
  return list;
}

GroupTable abelian_group(const std::vector<unsigned>& invariants, std::string label, std::size_t bound) {
  MetabelianData d;
  d.n_invariants = invariants;
  std::size_t n = 1;
  for (unsigned x : invariants) n *= x;
  if (n > bound) throw BoundExceeded("abelian group of order " + std::to_string(n) + " exceeds bound");
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels;
  auto decode = [&](std::size_t idx) {
    std::vector<unsigned> v(invariants.size());
    for (std::size_t i = invariants.size(); i-- > 0;) {
      v[i] = static_cast<unsigned>(idx % invariants[i]);
      idx /= invariants[i];
    }
    return v;
  };
  auto encode = [&](const std::vector<unsigned>& v) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i) idx = idx * invariants[i] + v[i] % invariants[i];
    return static_cast<Elem>(idx);
  };
  for (std::size_t a = 0; a < n; ++a) {
    auto va = decode(a);
    std::string s = "(";
    for (std::size_t i = 0; i < va.size(); ++i) s += (i ? "," : "") + std::to_string(va[i]);
    labels.push_back(s + ")");
    for (std::size_t b = 0; b < n; ++b) {
      auto vb = decode(b);
      for (std::size_t i = 0; i < va.size(); ++i) vb[i] += va[i];
      table[a * n + b] = encode(vb);
    }
  }
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    std::vector<unsigned> v(invariants.size(), 0);
    v[i] = 1;
    if (encode(v) != 0) gens.push_back(encode(v));
  }
  return GroupTable::from_cayley(std::move(label), n, std::move(table), std::move(labels), std::move(gens));
}

MetabelianData g16_data() {
  MetabelianData d;
  d.n_invariants = {4, 2};
  d.q_invariants = {2};
  d.phi = {IntMatrix{{1, 0}, {1, 1}}};
  return d;
}

MetabelianData g32_data() {
  MetabelianData d;
  d.n_invariants = {2, 2, 2, 2};
  d.q_invariants = {2};
  d.phi = {IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}}};
  return d;
}

MetabelianData d4_data() { return dihedral_data(4); }

MetabelianData g256_data(int which) {
  MetabelianData d;
  d.n_invariants = {2, 2, 2, 2, 2};
  d.q_invariants = {2, 2, 2};
  d.phi = {
      IntMatrix{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {1, 1, 0, 1, 0}, {0, 1, 1, 0, 1}},
      IntMatrix{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 1, 1, 0}, {1, 1, 0, 0, 1}},
      IntMatrix{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}},
  };
  d.theta.assign(3, std::vector<IntVector>(3));
  d.theta[0][0] = which == 1 ? IntVector{1, 1, 1, 0, 0} : IntVector{1, 1, 1, 1, 0};
  d.theta[1][1] = {1, 1, 0, 0, 0};
  d.theta[2][2] = {1, 0, 0, 0, 0};
  d.theta[1][0] = {1, 0, 0, 1, 1};
  d.theta[2][0] = {0, 1, 0, 0, 1};
  d.theta[2][1] = {0, 0, 1, 1, 1};
  return d;
}

PcPresentation g16_presentation() { return parse_pc("g1^2=g4, g2^g1=g2*g3", 4); }

PcPresentation g32_presentation() { return parse_pc("g2^g1=g2*g4, g3^g1=g3*g5", 5); }

PcPresentation g256_presentation(int which) {
  std::string rel = which == 1 ? "g1^2=g4*g5*g6," : "g1^2=g4*g5*g6*g7,";
  rel +=
      "g2^2=g4*g5, g3^2=g4,"
      "g2^g1=g2*g4, g3^g1=g3*g5, g3^g2=g3*g6,"
      "g4^g1=g4*g7, g4^g2=g4*g8, g5^g1=g5*g7*g8,"
      "g5^g2=g5*g8, g5^g3=g5*g7, g6^g1=g6*g8,"
      "g6^g2=g6*g7, g6^g3=g6*g8";
  return parse_pc(rel, 8);
}

Elem g256_element(const GroupTable& g, const PcPresentation& pc, const std::vector<long long>& n,
                  const std::vector<long long>& q) {
  if (n.size() != 5 || q.size() != 3) throw IndexOutOfRange("expected coordinates in Z2^5 x Z2^3");
  auto gen = [&](std::size_t k) {
    std::vector<unsigned> e(8, 0);
    e[k] = 1;
    return pc_index(pc, e);
  };
  Elem x = 0;
  for (std::size_t i = 0; i < 5; ++i)
    if (n[i] % 2) x = g.mul(x, gen(3 + i));
  for (std::size_t i = 0; i < 3; ++i)
    if (q[i] % 2) x = g.mul(x, gen(i));
  return x;
}

GroupTable build(std::string_view name, std::size_t bound) {
  const std::string s(name);
  if (s == "A5") return permutation_group(5, {"(1,2,3,4,5)", "(1,2,3)"}, "A5", bound);
  if (s == "S4") return symmetric(4, bound);
  if (s == "S4xZ2") return direct_product(symmetric(4, bound), cyclic_group(2, bound), "S4xZ2", bound);
  if (s == "G16") return metabelian(g16_data(), "G16", bound);
  if (s == "G32") return metabelian(g32_data(), "G32", bound);
  if (s == "G256_1") return g256(1, bound);
  if (s == "G256_2") return g256(2, bound);
  if (s == "D4xZ2") {
    return direct_product(metabelian(d4_data(), "D4", bound), cyclic_group(2, bound), "D4xZ2", bound);
  }
  if (s == "Q8") return pc_group(parse_pc("g1^2=g3, g2^2=g3, g2^g1=g2*g3", 3), "Q8", bound);
  std::smatch m;
  static const std::regex cyclic_power(R"(Z(\d+)(?:\^(\d+))?)");
  static const std::regex dihedral(R"(D(\d+))");
  static const std::regex sym(R"(([SA])(\d+))");
  if (std::regex_match(s, m, cyclic_power)) {
    unsigned n = static_cast<unsigned>(std::stoul(m[1]));
    unsigned k = m[2].matched ? static_cast<unsigned>(std::stoul(m[2])) : 1;
    if (n == 0 || k == 0 || k > 16) throw UnknownName("bad cyclic power: " + s);
    if (k == 1) return cyclic_group(n, bound);
    return abelian_group(std::vector<unsigned>(k, n), s, bound);
  }
  if (std::regex_match(s, m, dihedral)) {
    unsigned n = static_cast<unsigned>(std::stoul(m[1]));
    if (n < 2) throw UnknownName("dihedral groups need n >= 2: " + s);
    return metabelian(dihedral_data(n), s, bound);
  }
  if (std::regex_match(s, m, sym)) {
    std::size_t n = std::stoul(m[2]);
    if (n < 1 || n > 7) throw UnknownName("permutation groups are available up to degree 7: " + s);
    return m[1] == "S" ? symmetric(n, bound) : alternating(n, bound);
  }
  throw UnknownName("unknown group name: " + s);
}

// ---------------------------------------------------------------------------
// Group files

namespace {

std::string strip(const std::string& line) {
  auto hash = line.find('#');
  std::string s = line.substr(0, hash);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

GroupTable table_group(const std::string& name, std::size_t n, const std::vector<std::vector<long long>>& rows,
                       std::size_t line_no) {
  for (const auto& r : rows) {
    if (r.size() != n) throw ParseError("line " + std::to_string(line_no) + ": table row has wrong length");
    for (long long v : r)
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw ParseError("table entry out of range");
  }
  // The identity is the element whose row is 0..n-1.
  std::size_t e = n;
  for (std::size_t a = 0; a < n && e == n; ++a) {
    bool id = true;
    for (std::size_t b = 0; b < n && id; ++b) id = rows[a][b] == static_cast<long long>(b);
    if (id) e = a;
  }
  if (e == n) throw NotAGroup(name + ": no identity element");
  auto relabel = [&](std::size_t x) { return x == e ? 0 : (x == 0 ? e : x); };
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[relabel(a) * n + relabel(b)] = static_cast<Elem>(relabel(static_cast<std::size_t>(rows[a][b])));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[relabel(x)] = std::to_string(x);
  return GroupTable::from_cayley(name, n, std::move(table), std::move(labels));
}

}  // namespace

std::vector<GroupTable> ingest_text(std::string_view text, std::size_t bound) {
  std::istringstream in{std::string(text)};
  std::vector<GroupTable> out;
  std::string raw;
  std::size_t line_no = 0;
  auto next_line = [&](std::string& line) {
    while (std::getline(in, raw)) {
      ++line_no;
      line = strip(raw);
      if (!line.empty()) return true;
    }
    return false;
  };
  std::string line;
  bool have = next_line(line);
  while (have) {
    std::istringstream head(line);
    std::string kw, name, kw2;
    long long n = 0;
    if (!(head >> kw >> name >> kw2 >> n) || kw != "group" || kw2 != "order" || n <= 0) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'group <name> order <n>'");
    }
    if (static_cast<std::size_t>(n) > std::min(bound, kMaxOrderBound)) {
      throw BoundExceeded(name + ": order " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    }
    if (!next_line(line)) throw ParseError("line " + std::to_string(line_no) + ": missing group body");
    std::istringstream body(line);
    std::string kind;
    body >> kind;
    if (kind == "table") {
      std::vector<std::vector<long long>> rows;
      for (long long r = 0; r < n; ++r) {
        if (!next_line(line)) throw ParseError(name + ": table ends early");
        std::istringstream row(line);
        std::vector<long long> v;
        std::string tok;
        while (row >> tok) {
          try {
            std::size_t used = 0;
            v.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
          } catch (const std::logic_error&) {
            throw ParseError("line " + std::to_string(line_no) + ": bad table entry '" + tok + "'");
          }
        }
        rows.push_back(std::move(v));
      }
      out.push_back(table_group(name, static_cast<std::size_t>(n), rows, line_no));
      have = next_line(line);
    } else if (kind == "perm") {
      long long degree = 0;
      if (!(body >> degree) || degree <= 0) throw ParseError("line " + std::to_string(line_no) + ": expected 'perm <degree>'");
      std::vector<Permutation> gens;
      have = next_line(line);
      while (have && line.rfind("group", 0) != 0) {
        gens.push_back(parse_cycles(line, static_cast<std::size_t>(degree)));
        have = next_line(line);
      }
      GroupTable g = from_permutations(static_cast<std::size_t>(degree), gens, name, bound);
      if (g.order() != static_cast<std::size_t>(n)) {
        throw ParseError(name + ": declared order " + std::to_string(n) + " but generators give " +
                         std::to_string(g.order()));
      }
      out.push_back(std::move(g));
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'table' or 'perm <degree>'");
    }
  }
  if (out.empty()) throw ParseError("no group in input");
  return out;
}

std::vector<GroupTable> ingest_all(const std::filesystem::path& path, std::size_t bound) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return ingest_text(ss.str(), bound);
}

GroupTable ingest(const std::filesystem::path& path, std::size_t bound) { return ingest_all(path, bound).front(); }

// ---------------------------------------------------------------------------
// Small orders

std::vector<GroupTable> tiny_order_sweep(std::size_t n) {
  if (n == 0 || n > kTinyOrderLimit) throw MissingCatalog("built-in lists cover orders 1.." + std::to_string(kTinyOrderLimit));
  std::vector<GroupTable> list;
  auto abelian = [&](std::vector<unsigned> inv, const std::string& name) { list.push_back(abelian_group(inv, name)); };
  auto pc = [&](const char* rel, std::size_t gens, std::vector<unsigned> orders, const std::string& name) {
    list.push_back(pc_group(parse_pc(rel, gens, std::move(orders)), name));
  };
  switch (n) {
    case 4:
      abelian({4}, "Z4");
      abelian({2, 2}, "Z2^2");
      break;
    case 6:
      abelian({6}, "Z6");
      list.push_back(build("S3"));
      break;
    case 8:
      abelian({8}, "Z8");
      abelian({4, 2}, "Z4xZ2");
      abelian({2, 2, 2}, "Z2^3");
      list.push_back(build("D4"));
      list.push_back(build("Q8"));
      break;
    case 9:
      abelian({9}, "Z9");
      abelian({3, 3}, "Z3^2");
      break;
    case 10:
      abelian({10}, "Z10");
      list.push_back(build("D5"));
      break;
    case 12:
      abelian({12}, "Z12");
      abelian({6, 2}, "Z6xZ2");
      pc("g2^g1=g3, g3^g1=g2*g3", 3, {3, 2, 2}, "A4");
      list.push_back(build("D6"));
      pc("g1^2=g2, g3^g1=g3^2", 3, {2, 2, 3}, "Dic3");
      break;
    case 14:
      abelian({14}, "Z14");
      list.push_back(build("D7"));
      break;
    case 16:
      abelian({16}, "Z16");
      abelian({4, 4}, "Z4^2");
      list.push_back(pc_group(g16_presentation(), "G16"));
      pc("g1^2=g3, g2^2=g4, g2^g1=g2*g4", 4, {}, "Z4:Z4");
      abelian({8, 2}, "Z8xZ2");
      pc("g2^2=g3, g3^2=g4, g2^g1=g2*g4", 4, {}, "M16");
      pc("g2^2=g3, g3^2=g4, g2^g1=g2*g3*g4, g3^g1=g3*g4", 4, {}, "D8");
      pc("g2^2=g3, g3^2=g4, g2^g1=g2*g3, g3^g1=g3*g4", 4, {}, "SD16");
      pc("g1^2=g4, g2^2=g3, g3^2=g4, g2^g1=g2*g3*g4, g3^g1=g3*g4", 4, {}, "Q16");
      abelian({4, 2, 2}, "Z4xZ2^2");
      list.push_back(build("D4xZ2"));
      list.push_back(direct_product(build("Q8"), cyclic_group(2), "Q8xZ2"));
      pc("g3^2=g4, g2^g1=g2*g4", 4, {}, "Pauli");
      abelian({2, 2, 2, 2}, "Z2^4");
      break;
    default:
      // 1, the primes and 15 are cyclic
      list.push_back(cyclic_group(n).with_label("Z" + std::to_string(n)));
      break;
  }
  std::vector<GroupTable> distinct;
  for (auto& g : list) {
    bool seen = false;
    for (const auto& d : distinct) seen = seen || is_isomorphic(g, d);
    if (!seen) distinct.push_back(std::move(g));
  }
  return distinct;
}

// ---------------------------------------------------------------------------
// Printed generating systems

namespace {

Elem perm_elem(const GroupTable& g, std::size_t degree, const std::string& cycles) {
  auto e = g.find_element(format_cycles(parse_cycles(cycles, degree)));
  if (!e) throw InvalidConstruction("permutation " + cycles + " is not in " + g.label());
  return *e;
}

std::vector<Elem> perms(const GroupTable& g, std::size_t degree, const std::vector<std::string>& list) {
  std::vector<Elem> out;
  for (const auto& c : list) out.push_back(perm_elem(g, degree, c));
  return out;
}

using Coord = std::pair<IntVector, IntVector>;

}  // namespace

std::vector<Fixture> model_fixtures() {
  std::vector<Fixture> out;
  auto add = [&](std::string id, std::string group_name, std::shared_ptr<const GroupTable> g, bool mixed,
                 const char* a1, const char* a2, std::vector<Elem> t1, std::vector<Elem> t2) {
    Fixture f;
    f.id = std::move(id);
    f.group_name = std::move(group_name);
    f.group = std::move(g);
    f.mixed = mixed;
    f.a1 = parse_type(a1);
    if (a2) f.a2 = parse_type(a2);
    f.t1 = std::move(t1);
    f.t2 = std::move(t2);
    out.push_back(std::move(f));
  };

  auto a5 = std::make_shared<const GroupTable>(build("A5"));
  add("A5/1", "A5", a5, false, "3,3,3,3", "2,5,5", perms(*a5, 5, {"(1,2,3)", "(3,4,5)", "(4,3,2)", "(2,1,5)"}),
      perms(*a5, 5, {"(2,4)(3,5)", "(2,1,3,4,5)", "(1,2,3,4,5)"}));
  add("A5/2", "A5", a5, false, "5,5,5", "2,2,2,3", perms(*a5, 5, {"(1,2,5,3,4)", "(1,2,4,5,3)", "(1,2,3,4,5)"}),
      perms(*a5, 5, {"(1,2)(3,4)", "(2,4)(3,5)", "(1,4)(3,5)", "(2,3,4)"}));
  add("A5/3", "A5", a5, false, "2,2,2,2,2", "3,3,5",
      perms(*a5, 5, {"(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)", "(1,4)(2,5)", "(1,4)(2,5)"}),
      perms(*a5, 5, {"(1,2,3)", "(3,4,5)", "(5,4,3,2,1)"}));

  {
    auto d4 = metabelian(d4_data(), "D4");
    auto z2 = cyclic_group(2);
    auto g = std::make_shared<const GroupTable>(direct_product(d4, z2, "D4xZ2"));
    std::unordered_map<char, Elem> sym{{'x', metabelian_index(d4_data(), IntVector{1}, IntVector{0})},
                                       {'y', metabelian_index(d4_data(), IntVector{0}, IntVector{1})}};
    auto el = [&](const char* w, Elem bit) { return product_index(d4, z2, evaluate_word(d4, w, sym), bit); };
    add("D4xZ2", "D4xZ2", g, false, "2,2,2,2,2,2", "2,2,2,4",
        {el("y", 0), el("yx", 1), el("yx^2", 0), el("yx", 1), el("x^2", 1), el("x^2", 1)},
        {el("1", 1), el("y", 1), el("xy", 0), el("x", 0)});
  }

  {
    auto s4 = std::make_shared<const GroupTable>(build("S4"));
    add("S4", "S4", s4, false, "2,2,2,2,2,2", "3,4,4",
        perms(*s4, 4, {"(1,2)", "(1,2)", "(2,3)", "(2,3)", "(3,4)", "(3,4)"}),
        perms(*s4, 4, {"(1,2,3)", "(1,2,3,4)", "(1,2,4,3)"}));
  }

  {
    auto s4 = build("S4");
    auto z2 = cyclic_group(2);
    auto g = std::make_shared<const GroupTable>(direct_product(s4, z2, "S4xZ2"));
    auto el = [&](const char* c, Elem bit) { return product_index(s4, z2, perm_elem(s4, 4, c), bit); };
    add("S4xZ2", "S4xZ2", g, false, "2,4,6", "2,2,2,2,2,2", {el("(1,2)", 0), el("(1,2,3,4)", 1), el("(4,3,2)", 1)},
        {el("(1,2)(3,4)", 1), el("(1,2)", 1), el("(3,4)", 1), el("(2,3)(1,4)", 1), el("(2,3)", 1), el("(1,4)", 1)});
  }

  {
    auto data = g16_data();
    auto g = std::make_shared<const GroupTable>(metabelian(data, "G16"));
    std::unordered_map<char, Elem> sym{{'x', metabelian_index(data, IntVector{1, 0}, IntVector{0})},
                                       {'y', metabelian_index(data, IntVector{0, 1}, IntVector{0})},
                                       {'z', metabelian_index(data, IntVector{0, 0}, IntVector{1})}};
    auto w = [&](const char* s) { return evaluate_word(*g, s, sym); };
    add("G16", "G16", g, false, "2,2,4,4", "2,2,4,4", {w("z"), w("z"), w("x"), w("x^-1")},
        {w("zx^2y"), w("zx^2y"), w("xyz"), g->inv(w("xyz"))});
  }

  {
    auto data = g32_data();
    auto g = std::make_shared<const GroupTable>(metabelian(data, "G32"));
    auto el = [&](IntVector n, long long q) { return metabelian_index(data, n, IntVector{q}); };
    add("G32", "G32", g, false, "2,2,2,4", "2,2,4,4",
        {el({0, 0, 1, 1}, 1), el({1, 1, 1, 1}, 0), el({1, 0, 1, 1}, 0), el({0, 1, 1, 1}, 1)},
        {el({1, 1, 1, 0}, 0), el({1, 0, 0, 0}, 0), el({1, 1, 1, 0}, 1), el({1, 0, 1, 0}, 1)});
  }

  const IntVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  auto sum = [](std::initializer_list<IntVector> qs) {
    IntVector s(3, 0);
    for (const auto& q : qs)
      for (std::size_t i = 0; i < 3; ++i) s[i] = (s[i] + q[i]) % 2;
    return s;
  };
  for (int which : {1, 2}) {
    auto pc = g256_presentation(which);
    auto g = std::make_shared<const GroupTable>(pc_group(pc, which == 1 ? "G256_1" : "G256_2"));
    auto el = [&](const Coord& c) { return g256_element(*g, pc, c.first, c.second); };
    std::vector<std::vector<Coord>> systems;
    if (which == 1) {
      systems = {
          {{{0, 0, 1, 0, 1}, e3}, {{1, 1, 0, 0, 0}, e1}, {{1, 0, 0, 1, 0}, sum({e1, e3})}},
          {{{0, 0, 0, 0, 1}, e2}, {{1, 0, 0, 1, 0}, sum({e1, e2})}, {{0, 0, 1, 0, 1}, e1}},
          {{{0, 0, 0, 1, 0}, e2}, {{1, 1, 0, 1, 0}, sum({e1, e2, e3})}, {{1, 0, 1, 1, 0}, sum({e1, e3})}},
      };
    } else {
      systems = {{{{0, 1, 0, 1, 0}, e3}, {{0, 0, 1, 0, 1}, sum({e2, e3})}, {{0, 0, 0, 0, 0}, e2}}};
    }
    for (std::size_t k = 0; k < systems.size(); ++k) {
      std::vector<Elem> t;
      for (const auto& c : systems[k]) t.push_back(el(c));
      std::string id = g->label() + (systems.size() > 1 ? "/T" + std::to_string(k + 1) : "");
      add(id, g->label(), g, true, "4,4,4", nullptr, t, {});
    }
  }
  return out;
}

}  // namespace ramify::catalog
