#include "cayleylab/groupspec.hpp"

#include <cctype>

#include "cayleylab/errors.hpp"

namespace cayleylab {

std::string family_name(Family family) {
  switch (family) {
    case Family::cyclic: return "cyclic";
    case Family::dihedral: return "dihedral";
    case Family::sym: return "sym";
    case Family::q8: return "q8";
    case Family::elemab: return "elemab";
    case Family::sl2: return "sl2";
    case Family::wreath: return "wreath";
    case Family::product: return "product";
    case Family::table: return "table";
  }
  return "?";
}

std::string GroupSpec::to_string() const {
  std::string out = family_name(family);
  if (family == Family::q8) return out;
  if (family == Family::table) return out + ":" + path;
  if (family == Family::product) {
    auto factor = [](const GroupSpec& f) {
      // Nested products need parentheses to parse unambiguously.
      return f.family == Family::product ? "(" + f.to_string() + ")" : f.to_string();
    };
    return out + ":" + factor(factors[0]) + "," + factor(factors[1]);
  }
  for (auto p : params) out += ":" + std::to_string(p);
  return out;
}

std::string GensSpec::to_string() const {
  std::string out;
  switch (kind) {
    case GensKind::standard: out = "standard"; break;
    case GensKind::random:
      out = "random:" + std::to_string(count) + ":" + std::to_string(seed);
      break;
    case GensKind::all_nonid: out = "all-nonid"; break;
    case GensKind::file: out = "file:" + path; break;
  }
  if (modifier == GensModifier::symmetric) out += "+symmetric";
  if (modifier == GensModifier::conj_close) out += "+conj-close";
  return out;
}

namespace cli {
namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  bool consume(char c) {
    if (!done() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!consume(c)) throw ParseError("expected '" + std::string(1, c) + "' " + what, pos);
  }

  std::string word() {
    std::size_t start = pos;
    while (!done() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                       text[pos] == '-' || text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }

  std::uint64_t number(const std::string& what) {
    if (done() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected " + what, pos);
    std::uint64_t value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (value > 1'000'000'000'000ull) throw ParseError(what + " is too large", pos);
      ++pos;
    }
    return value;
  }

  // Everything up to a delimiter that would end the current factor.
  std::string path_until_delim() {
    std::size_t start = pos;
    while (!done() && text[pos] != ',' && text[pos] != ')') ++pos;
    return std::string(text.substr(start, pos - start));
  }
};

GroupSpec parse_spec(Cursor& cur);

GroupSpec parse_factor(Cursor& cur) {
  if (cur.consume('(')) {
    GroupSpec inner = parse_spec(cur);
    cur.expect(')', "to close the factor");
    return inner;
  }
  return parse_spec(cur);
}

GroupSpec parse_spec(Cursor& cur) {
  const std::size_t name_at = cur.pos;
  const std::string name = cur.word();
  GroupSpec spec;
  auto params = [&](int n, const char* what) {
    for (int i = 0; i < n; ++i) {
      cur.expect(':', "before parameter");
      spec.params.push_back(cur.number(what));
    }
  };
  if (name == "cyclic") {
    spec.family = Family::cyclic;
    params(1, "cyclic order");
  } else if (name == "dihedral") {
    spec.family = Family::dihedral;
    params(1, "dihedral parameter");
  } else if (name == "sym") {
    spec.family = Family::sym;
    params(1, "symmetric degree");
  } else if (name == "q8") {
    spec.family = Family::q8;
  } else if (name == "elemab") {
    spec.family = Family::elemab;
    params(2, "elementary-abelian parameter");
  } else if (name == "sl2") {
    spec.family = Family::sl2;
    params(1, "sl2 prime");
  } else if (name == "wreath") {
    spec.family = Family::wreath;
    params(1, "wreath parameter");
  } else if (name == "product") {
    spec.family = Family::product;
    cur.expect(':', "after product");
    spec.factors.push_back(parse_factor(cur));
    cur.expect(',', "between product factors");
    spec.factors.push_back(parse_factor(cur));
  } else if (name == "table") {
    spec.family = Family::table;
    cur.expect(':', "after table");
    spec.path = cur.path_until_delim();
    if (spec.path.empty()) throw ParseError("expected table file path", cur.pos);
  } else {
    throw ParseError("unknown group family '" + name + "'", name_at);
  }
  return spec;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  Cursor cur{text};
  GroupSpec spec = parse_spec(cur);
  if (!cur.done()) throw ParseError("trailing characters after group spec", cur.pos);
  return spec;
}

GensSpec parse_gens_spec(std::string_view text) {
  // Optional "+symmetric" / "+conj-close" suffix.
  GensSpec spec;
  std::string_view body = text;
  if (auto plus = text.rfind('+'); plus != std::string_view::npos) {
    std::string_view mod = text.substr(plus + 1);
    if (mod == "symmetric")
      spec.modifier = GensModifier::symmetric;
    else if (mod == "conj-close")
      spec.modifier = GensModifier::conj_close;
    else
      throw ParseError("unknown gens modifier '" + std::string(mod) + "'", plus + 1);
    body = text.substr(0, plus);
  }

  Cursor cur{body};
  const std::size_t name_at = cur.pos;
  const std::string name = cur.word();
  if (name == "standard") {
    spec.kind = GensKind::standard;
  } else if (name == "all-nonid") {
    spec.kind = GensKind::all_nonid;
  } else if (name == "random") {
    spec.kind = GensKind::random;
    cur.expect(':', "after random");
    spec.count = cur.number("set size");
    cur.expect(':', "before seed");
    spec.seed = cur.number("seed");
  } else if (name == "file") {
    spec.kind = GensKind::file;
    cur.expect(':', "after file");
    spec.path = std::string(body.substr(cur.pos));
    cur.pos = body.size();
    if (spec.path.empty()) throw ParseError("expected generator file path", cur.pos);
  } else {
    throw ParseError("unknown gens spec '" + name + "'", name_at);
  }
  if (!cur.done()) throw ParseError("trailing characters after gens spec", cur.pos);
  return spec;
}

}  // namespace cli
}  // namespace cayleylab
