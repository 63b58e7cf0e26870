#include "cayleylab/families.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "cayleylab/errors.hpp"
#include "cayleylab/numeric.hpp"

namespace cayleylab {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GroupElement shift_perm(std::size_t n, std::size_t by) {
  std::vector<std::uint16_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint16_t>((i + by) % n);
  return GroupElement::perm(std::move(images));
}

GroupElement identity_perm(std::size_t n) { return shift_perm(n, 0); }

FiniteGroup make_cyclic(std::uint64_t n, const std::string& id, std::uint64_t cap) {
  if (n < 1 || n > 65535) throw LimitError("cyclic order must be in 1..65535");
  if (n > cap) throw LimitError("cyclic order exceeds the enumeration cap");
  return FiniteGroup::from_generators(id, identity_perm(n), {shift_perm(n, 1)}, cap);
}

FiniteGroup make_dihedral(std::uint64_t n, const std::string& id, std::uint64_t cap) {
  // Vertex action is faithful only from n = 3 on.
  if (n < 3 || n > 32767) throw LimitError("dihedral parameter must be in 3..32767");
  if (2 * n > cap) throw LimitError("dihedral order exceeds the enumeration cap");
  std::vector<std::uint16_t> reflect(n);
  for (std::size_t i = 0; i < n; ++i) reflect[i] = static_cast<std::uint16_t>((n - i) % n);
  return FiniteGroup::from_generators(
      id, identity_perm(n), {shift_perm(n, 1), GroupElement::perm(std::move(reflect))}, cap);
}

FiniteGroup make_sym(std::uint64_t d, const std::string& id, std::uint64_t cap) {
  if (d < 2 || d > 8) throw LimitError("sym degree must be in 2..8");
  std::vector<std::uint16_t> swap01(d);
  for (std::size_t i = 0; i < d; ++i) swap01[i] = static_cast<std::uint16_t>(i);
  std::swap(swap01[0], swap01[1]);
  return FiniteGroup::from_generators(
      id, identity_perm(d), {GroupElement::perm(std::move(swap01)), shift_perm(d, 1)}, cap);
}

FiniteGroup make_elemab(std::uint64_t p, std::uint64_t k, const std::string& id,
                        std::uint64_t cap) {
  if (!is_prime(p)) throw LimitError("elemab modulus must be prime");
  if (k < 1) throw LimitError("elemab rank must be positive");
  if (p * k > 65535) throw LimitError("elemab degree too large");
  BigInt order = ipow(BigInt(p), k);
  if (order > cap) throw LimitError("elemab order exceeds the enumeration cap");
  const std::size_t degree = static_cast<std::size_t>(p * k);
  std::vector<GroupElement> gens;
  for (std::uint64_t block = 0; block < k; ++block) {
    std::vector<std::uint16_t> images(degree);
    for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint16_t>(i);
    for (std::uint64_t i = 0; i < p; ++i)
      images[block * p + i] = static_cast<std::uint16_t>(block * p + (i + 1) % p);
    gens.push_back(GroupElement::perm(std::move(images)));
  }
  return FiniteGroup::from_generators(id, identity_perm(degree), std::move(gens), cap);
}

FiniteGroup make_sl2(std::uint64_t p, const std::string& id, std::uint64_t cap) {
  if (!is_prime(p) || p > 13) throw LimitError("sl2 parameter must be a prime at most 13");
  const auto mod = static_cast<std::uint16_t>(p);
  GroupElement upper = GroupElement::mat2({1, 1, 0, 1}, mod);
  GroupElement lower = GroupElement::mat2({1, 0, 1, 1}, mod);
  GroupElement one = GroupElement::mat2({1, 0, 0, 1}, mod);
  return FiniteGroup::from_generators(id, std::move(one), {std::move(upper), std::move(lower)},
                                      cap);
}

FiniteGroup make_wreath(std::uint64_t n, const std::string& id, std::uint64_t cap) {
  if (n < 2 || n > 12) throw LimitError("wreath parameter must be in 2..12");
  if ((std::uint64_t(1) << n) * n > cap)
    throw LimitError("wreath order exceeds the enumeration cap");
  const auto points = static_cast<std::uint8_t>(n);
  GroupElement bitflip = GroupElement::wreath(1, 0, points);
  GroupElement shift = GroupElement::wreath(0, 1, points);
  return FiniteGroup::from_generators(id, GroupElement::wreath(0, 0, points),
                                      {std::move(bitflip), std::move(shift)}, cap);
}

// Quaternion group: elements 1,-1,i,-i,j,-j,k,-k as (sign, axis) pairs,
// realized through the regular representation.
FiniteGroup make_q8(const std::string& id, std::uint64_t cap) {
  struct Unit {
    int sign;
    int axis;  // 0 = 1, 1 = i, 2 = j, 3 = k
  };
  auto unit_mul = [](Unit a, Unit b) -> Unit {
    int s = a.sign * b.sign;
    if (a.axis == 0) return {s, b.axis};
    if (b.axis == 0) return {s, a.axis};
    if (a.axis == b.axis) return {-s, 0};
    static constexpr int third[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    static constexpr int sgn[4][4] = {{0, 0, 0, 0}, {0, 0, 1, -1}, {0, -1, 0, 1}, {0, 1, -1, 0}};
    return {s * sgn[a.axis][b.axis], third[a.axis][b.axis]};
  };
  const Unit units[8] = {{1, 0}, {-1, 0}, {1, 1}, {-1, 1}, {1, 2}, {-1, 2}, {1, 3}, {-1, 3}};
  auto index_of = [&](Unit u) {
    for (int i = 0; i < 8; ++i)
      if (units[i].sign == u.sign && units[i].axis == u.axis) return i;
    throw DomainError("quaternion unit lookup failed");
  };
  auto right_mult_perm = [&](int j) {
    std::vector<std::uint16_t> images(8);
    for (int i = 0; i < 8; ++i)
      images[i] = static_cast<std::uint16_t>(index_of(unit_mul(units[i], units[j])));
    return GroupElement::perm(std::move(images));
  };
  return FiniteGroup::from_generators(id, right_mult_perm(0),
                                      {right_mult_perm(2), right_mult_perm(4)}, cap);
}

struct PermForm {
  std::size_t degree = 0;
  std::vector<std::vector<std::uint16_t>> generators;
};

// A faithful permutation form of G: identity degree for permutation groups,
// the regular representation (right multiplication on sorted keys) otherwise.
PermForm to_perm_form(const FiniteGroup& G) {
  PermForm form;
  if (G.identity().kind() == GroupElement::Kind::perm) {
    form.degree = G.identity().as_perm().images.size();
    for (const auto& g : G.generators()) form.generators.push_back(g.as_perm().images);
    return form;
  }
  const auto& keys = G.sorted_keys();
  form.degree = keys.size();
  if (form.degree > 65535) throw LimitError("regular representation degree too large");
  std::unordered_map<std::string, std::uint16_t> index;
  for (std::size_t i = 0; i < keys.size(); ++i)
    index.emplace(keys[i], static_cast<std::uint16_t>(i));
  for (const auto& g : G.generators()) {
    std::vector<std::uint16_t> images(form.degree);
    for (std::size_t i = 0; i < keys.size(); ++i)
      images[i] = index.at(G.multiply(G.element_for_key(keys[i]), g).canonical_key());
    form.generators.push_back(std::move(images));
  }
  return form;
}

FiniteGroup make_product(const GroupSpec& spec, const std::string& id, std::uint64_t cap) {
  FiniteGroup a = construct(spec.factors[0], cap);
  FiniteGroup b = construct(spec.factors[1], cap);
  PermForm fa = to_perm_form(a);
  PermForm fb = to_perm_form(b);
  const std::size_t degree = fa.degree + fb.degree;
  if (degree > 65535) throw LimitError("product degree too large");

  std::vector<GroupElement> gens;
  for (const auto& ga : fa.generators) {
    std::vector<std::uint16_t> images(degree);
    for (std::size_t i = 0; i < fa.degree; ++i) images[i] = ga[i];
    for (std::size_t i = 0; i < fb.degree; ++i)
      images[fa.degree + i] = static_cast<std::uint16_t>(fa.degree + i);
    gens.push_back(GroupElement::perm(std::move(images)));
  }
  for (const auto& gb : fb.generators) {
    std::vector<std::uint16_t> images(degree);
    for (std::size_t i = 0; i < fa.degree; ++i) images[i] = static_cast<std::uint16_t>(i);
    for (std::size_t i = 0; i < fb.degree; ++i)
      images[fa.degree + i] = static_cast<std::uint16_t>(fa.degree + gb[i]);
    gens.push_back(GroupElement::perm(std::move(images)));
  }
  return FiniteGroup::from_generators(id, identity_perm(degree), std::move(gens), cap);
}

}  // namespace

FiniteGroup construct(const GroupSpec& spec, std::uint64_t order_cap) {
  const std::string id = spec.to_string();
  switch (spec.family) {
    case Family::cyclic: return make_cyclic(spec.params[0], id, order_cap);
    case Family::dihedral: return make_dihedral(spec.params[0], id, order_cap);
    case Family::sym: return make_sym(spec.params[0], id, order_cap);
    case Family::q8: return make_q8(id, order_cap);
    case Family::elemab: return make_elemab(spec.params[0], spec.params[1], id, order_cap);
    case Family::sl2: return make_sl2(spec.params[0], id, order_cap);
    case Family::wreath: return make_wreath(spec.params[0], id, order_cap);
    case Family::product: return make_product(spec, id, order_cap);
    case Family::table: return load_table_group(spec.path, id, order_cap);
  }
  throw DomainError("unknown group family");
}

FiniteGroup construct(const std::string& spec_text, std::uint64_t order_cap) {
  return construct(cli::parse_group_spec(spec_text), order_cap);
}

FiniteGroup load_table_group(const std::string& path, const std::string& id,
                             std::uint64_t order_cap) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open table file: " + path);
  return load_table_group(in, id, order_cap);
}

FiniteGroup load_table_group(std::istream& in, const std::string& id,
                             std::uint64_t order_cap) {
  // Tokenize, dropping '#' comments.
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  if (tokens.empty()) throw FormatError("table file is empty");

  std::size_t at = 0;
  auto next_number = [&](const char* what) -> std::uint64_t {
    if (at >= tokens.size()) throw FormatError(std::string("table file ends before ") + what);
    const std::string& tok = tokens[at++];
    std::uint64_t value = 0;
    for (char c : tok) {
      if (c < '0' || c > '9')
        throw FormatError("non-numeric token '" + tok + "' in table file");
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value > 65535) throw FormatError("table index too large");
    }
    return value;
  };

  const std::uint64_t n = next_number("the order");
  if (n == 0) throw FormatError("table order must be positive");
  if (n > order_cap) throw LimitError("table order exceeds the enumeration cap");
  if (n > 65535) throw FormatError("table order too large");

  std::vector<std::vector<std::uint16_t>> table(n, std::vector<std::uint16_t>(n));
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j) {
      std::uint64_t v = next_number("the table body");
      if (v >= n) throw FormatError("table entry out of range");
      table[i][j] = static_cast<std::uint16_t>(v);
    }

  std::vector<std::uint64_t> gen_indices;
  if (at < tokens.size()) {
    if (tokens[at] != "gens:")
      throw FormatError("unexpected token '" + tokens[at] + "' after table body");
    ++at;
    while (at < tokens.size()) {
      std::uint64_t v = next_number("a generator index");
      if (v >= n) throw FormatError("generator index out of range");
      gen_indices.push_back(v);
    }
    if (gen_indices.empty()) throw FormatError("empty generator list");
  }

  // Element 0 must be the identity.
  for (std::uint64_t i = 0; i < n; ++i)
    if (table[0][i] != i || table[i][0] != i)
      throw FormatError("element 0 is not the identity");

  // Rows and columns must be bijections for the regular representation.
  for (std::uint64_t i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::uint64_t j = 0; j < n; ++j) {
      if (row[table[i][j]]) throw FormatError("row " + std::to_string(i) + " repeats an entry");
      row[table[i][j]] = true;
      if (col[table[j][i]])
        throw FormatError("column " + std::to_string(i) + " repeats an entry");
      col[table[j][i]] = true;
    }
  }

  // Associativity spot check on 1000 deterministic triples.
  std::mt19937_64 rng(0x7ab1e5eed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  for (int t = 0; t < 1000; ++t) {
    const std::uint64_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (table[table[a][b]][c] != table[a][table[b][c]])
      throw FormatError("table is not associative");
  }

  auto right_mult_perm = [&](std::uint64_t j) {
    std::vector<std::uint16_t> images(n);
    for (std::uint64_t i = 0; i < n; ++i) images[i] = table[i][j];
    return GroupElement::perm(std::move(images));
  };

  std::vector<GroupElement> universe;
  universe.reserve(n);
  for (std::uint64_t j = 0; j < n; ++j) universe.push_back(right_mult_perm(j));

  std::vector<GroupElement> gens;
  if (gen_indices.empty()) {
    for (std::uint64_t j = 1; j < n; ++j) gens.push_back(universe[j]);
  } else {
    for (auto j : gen_indices) gens.push_back(universe[j]);
  }

  return FiniteGroup::from_universe(id, universe[0], std::move(gens), std::move(universe),
                                    order_cap);
}

}  // namespace cayleylab
