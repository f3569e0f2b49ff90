#include "revmap/families.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "revmap/errors.hpp"
#include "revmap/numeric.hpp"

namespace revmap {

namespace {

using Images = std::vector<Point>;

/// Rotation i -> i+1 on the block [offset, offset+size).
void rotate_block(Images& images, std::size_t offset, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) images[offset + i] = static_cast<Point>(offset + (i + 1) % size);
}

/// Reflection i -> -i on the block [offset, offset+size).
void reflect_block(Images& images, std::size_t offset, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) images[offset + i] = static_cast<Point>(offset + (size - i) % size);
}

Images identity_images(std::size_t degree) {
  Images images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  return images;
}

void require(bool condition, const std::string& what) {
  if (!condition) throw Error("family relation violated: " + what);
}

bool odd(long long x) { return x % 2 != 0; }

std::string kind_token(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Dihedral: return "D";
    case FamilyKind::DihedralProduct: return "DxD";
    case FamilyKind::Rank3CyclicExt: return "R3";
    case FamilyKind::S4Cover: return "S4C";
    case FamilyKind::Metacyclic: return "MC";
    case FamilyKind::Explicit: return "PERM";
  }
  return "?";
}

}  // namespace

std::string FamilySpec::to_string() const {
  std::string out = kind_token(kind) + ":";
  if (kind == FamilyKind::Explicit) return out + source;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(params[i]);
  }
  return out;
}

FamilySpec FamilySpec::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ValidationError("group spec '" + std::string(text) + "' lacks ':'");
  }
  std::string_view token = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  FamilySpec spec;
  std::size_t arity = 0;
  if (token == "D") {
    spec.kind = FamilyKind::Dihedral;
    arity = 1;
  } else if (token == "DxD") {
    spec.kind = FamilyKind::DihedralProduct;
    arity = 2;
  } else if (token == "R3") {
    spec.kind = FamilyKind::Rank3CyclicExt;
    arity = 3;
  } else if (token == "S4C") {
    spec.kind = FamilyKind::S4Cover;
    arity = 1;
  } else if (token == "MC") {
    spec.kind = FamilyKind::Metacyclic;
    arity = 3;
  } else if (token == "PERM") {
    spec.kind = FamilyKind::Explicit;
    spec.source = std::string(rest);
    if (spec.source.empty()) throw ValidationError("PERM spec needs a file path");
    return spec;
  } else {
    throw ValidationError("unknown group family '" + std::string(token) + "'");
  }
  std::string params(rest);
  std::stringstream stream(params);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      long long value = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      spec.params.push_back(value);
    } catch (const std::exception&) {
      throw ValidationError("bad integer '" + item + "' in group spec");
    }
  }
  if (spec.params.size() != arity) {
    throw ValidationError("group spec '" + std::string(text) + "' expects " +
                          std::to_string(arity) + " parameter(s)");
  }
  return spec;
}

void validate(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Dihedral:
      if (p.size() != 1 || p[0] < 1) throw ValidationError("D:n needs n >= 1");
      return;
    case FamilyKind::DihedralProduct:
      if (p.size() != 2 || p[0] <= 1 || p[1] <= 1 || !odd(p[0]) || !odd(p[1]) ||
          gcd(p[0], p[1]) != 1) {
        throw ValidationError("DxD:m,n needs coprime odd m, n > 1");
      }
      return;
    case FamilyKind::Rank3CyclicExt:
      if (p.size() != 3 || p[0] <= 1 || p[1] <= 1 || p[2] <= 1 || !odd(p[0]) || !odd(p[1]) ||
          !odd(p[2]) || gcd(p[0], p[1]) != 1 || gcd(p[0], p[2]) != 1 || gcd(p[1], p[2]) != 1) {
        throw ValidationError("R3:m,n,l needs pairwise coprime odd m, n, l > 1");
      }
      return;
    case FamilyKind::S4Cover:
      if (p.size() != 1 || p[0] < 3 || !odd(p[0]) || p[0] % 3 != 0) {
        throw ValidationError("S4C:m needs odd m divisible by 3");
      }
      return;
    case FamilyKind::Metacyclic: {
      if (p.size() != 3 || p[0] < 1 || p[1] < 1) throw ValidationError("MC:n,m,lambda needs n, m >= 1");
      long long n = p[0];
      long long lambda = mod(p[2], n);
      if (gcd(lambda, n) != 1 && n > 1) throw ValidationError("MC: lambda must be a unit mod n");
      long long power = 1 % n;
      for (long long i = 0; i < p[1]; ++i) power = power * lambda % n;
      if (power != 1 % n) throw ValidationError("MC: lambda^m must be 1 mod n");
      return;
    }
    case FamilyKind::Explicit:
      return;
  }
}

ElementId LabeledGroup::label(std::string_view name) const {
  auto id = group->generator(name);
  if (!id) throw ValidationError("unknown generator label '" + std::string(name) + "'");
  return *id;
}

ElementId LabeledGroup::word(std::string_view text) const {
  ElementId result = FiniteGroup::identity();
  std::size_t i = 0;
  if (text.empty()) throw ValidationError("empty word");
  if (text == "1" || text == "e") return result;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw ValidationError("unexpected '" + std::string(1, c) + "' in word '" +
                            std::string(text) + "'");
    }
    ElementId base = label(std::string_view(&text[i], 1));
    ++i;
    long long exponent = 1;
    if (i < text.size() && text[i] == '^') ++i;
    bool negative = false;
    if (i < text.size() && text[i] == '-') {
      negative = true;
      ++i;
    }
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      exponent = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        exponent = exponent * 10 + (text[i] - '0');
        ++i;
      }
    } else if (negative || (i > 0 && text[i - 1] == '^')) {
      if (!negative) throw ValidationError("missing exponent in word '" + std::string(text) + "'");
    }
    if (negative) exponent = -exponent;
    result = group->mul(result, group->pow(base, exponent));
  }
  return result;
}

std::string LabeledGroup::spell(ElementId element) const {
  if (element == FiniteGroup::identity()) return "1";
  const FiniteGroup& g = *group;
  struct Step {
    ElementId parent;
    std::string syllable;
  };
  std::vector<bool> seen(g.order(), false);
  std::vector<Step> steps(g.order());
  std::vector<ElementId> queue{FiniteGroup::identity()};
  seen[FiniteGroup::identity()] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    ElementId current = queue[qi];
    for (const auto& gen : g.generators()) {
      ElementId power = gen.id;
      for (std::size_t k = 1; k < g.element_order(gen.id); ++k) {
        ElementId next = g.mul(current, power);
        if (!seen[next]) {
          seen[next] = true;
          steps[next] = {current, k == 1 ? gen.label : gen.label + std::to_string(k)};
          queue.push_back(next);
        }
        power = g.mul(power, gen.id);
      }
    }
    if (seen[element]) break;
  }
  std::vector<std::string> parts;
  for (ElementId e = element; e != FiniteGroup::identity(); e = steps[e].parent) {
    parts.push_back(steps[e].syllable);
  }
  std::string out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) out += *it;
  return out;
}

LabeledGroup dihedral(long long n) {
  FamilySpec spec{FamilyKind::Dihedral, {n}, {}};
  validate(spec);
  std::size_t degree = n >= 3 ? static_cast<std::size_t>(n) : static_cast<std::size_t>(2 * n);
  Permutation g;
  Permutation h;
  if (n == 1) {
    g = Permutation::identity(2);
    h = Permutation::from_cycles(2, {{0, 1}});
  } else if (n == 2) {
    g = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
    h = Permutation::from_cycles(4, {{0, 2}, {1, 3}});
  } else {
    Images rot = identity_images(degree);
    Images ref = identity_images(degree);
    rotate_block(rot, 0, degree);
    reflect_block(ref, 0, degree);
    g = Permutation(rot);
    h = Permutation(ref);
  }
  LabeledGroup result{spec, FiniteGroup::from_generators(degree, {{"g", g}, {"h", h}})};
  const FiniteGroup& G = *result.group;
  ElementId gi = result.label("g");
  ElementId hi = result.label("h");
  require(G.order() == static_cast<std::size_t>(2 * n), "|D_2n| = 2n");
  require(G.element_order(gi) == static_cast<std::size_t>(n), "|g| = n");
  require(G.element_order(hi) == 2, "|h| = 2");
  require(G.conj(gi, hi) == G.inv(gi), "g^h = g^-1");
  return result;
}

LabeledGroup dihedral_product(long long m, long long n) {
  FamilySpec spec{FamilyKind::DihedralProduct, {m, n}, {}};
  validate(spec);
  const auto mm = static_cast<std::size_t>(m);
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t degree = mm + nn;
  Images a = identity_images(degree), u = identity_images(degree);
  Images b = identity_images(degree), v = identity_images(degree);
  rotate_block(a, 0, mm);
  reflect_block(u, 0, mm);
  rotate_block(b, mm, nn);
  reflect_block(v, mm, nn);
  Permutation pu(u), pv(v);
  LabeledGroup result{spec, FiniteGroup::from_generators(degree, {{"a", Permutation(a)},
                                                                  {"u", pu},
                                                                  {"b", Permutation(b)},
                                                                  {"v", pv},
                                                                  {"w", pu * pv}})};
  const FiniteGroup& G = *result.group;
  ElementId ai = result.label("a"), ui = result.label("u"), bi = result.label("b");
  ElementId vi = result.label("v"), wi = result.label("w");
  require(G.order() == static_cast<std::size_t>(4 * m * n), "|G| = 4mn");
  require(G.conj(ai, ui) == G.inv(ai), "a^u = a^-1");
  require(G.conj(bi, vi) == G.inv(bi), "b^v = b^-1");
  require(G.commutator(ai, vi) == 0 && G.commutator(bi, ui) == 0, "[a,v] = [b,u] = 1");
  require(wi == G.mul(ui, vi), "w = uv");
  return result;
}

LabeledGroup rank3_cyclic_ext(long long m, long long n, long long l) {
  FamilySpec spec{FamilyKind::Rank3CyclicExt, {m, n, l}, {}};
  validate(spec);
  const auto mm = static_cast<std::size_t>(m);
  const auto nn = static_cast<std::size_t>(n);
  const auto ll = static_cast<std::size_t>(l);
  const std::size_t degree = mm + nn + ll;
  Images a = identity_images(degree), b = identity_images(degree), c = identity_images(degree);
  Images u = identity_images(degree), v = identity_images(degree);
  rotate_block(a, 0, mm);
  rotate_block(b, mm, nn);
  rotate_block(c, mm + nn, ll);
  reflect_block(u, 0, mm);
  reflect_block(u, mm + nn, ll);
  reflect_block(v, mm, nn);
  reflect_block(v, mm + nn, ll);
  Permutation pu(u), pv(v);
  LabeledGroup result{spec, FiniteGroup::from_generators(degree, {{"a", Permutation(a)},
                                                                  {"b", Permutation(b)},
                                                                  {"c", Permutation(c)},
                                                                  {"u", pu},
                                                                  {"v", pv},
                                                                  {"w", pu * pv}})};
  const FiniteGroup& G = *result.group;
  ElementId ai = result.label("a"), bi = result.label("b"), ci = result.label("c");
  ElementId ui = result.label("u"), vi = result.label("v"), wi = result.label("w");
  require(G.order() == static_cast<std::size_t>(4 * m * n * l), "|G| = 4mnl");
  require(G.conj(ai, ui) == G.inv(ai) && G.conj(bi, ui) == bi && G.conj(ci, ui) == G.inv(ci),
          "(a,b,c)^u = (a^-1,b,c^-1)");
  require(G.conj(ai, vi) == ai && G.conj(bi, vi) == G.inv(bi) && G.conj(ci, vi) == G.inv(ci),
          "(a,b,c)^v = (a,b^-1,c^-1)");
  require(G.conj(ai, wi) == G.inv(ai) && G.conj(bi, wi) == G.inv(bi) && G.conj(ci, wi) == ci,
          "(a,b,c)^w = (a^-1,b^-1,c)");
  return result;
}

LabeledGroup s4_cover(long long m) {
  FamilySpec spec{FamilyKind::S4Cover, {m}, {}};
  validate(spec);
  // Faithful action on 4 + m points: the first four points carry the S4
  // quotient (w a 4-cycle, v a reflection of the square, h a 3-cycle),
  // the remaining m points carry the dihedral quotient <h> : <v>.
  const auto mm = static_cast<std::size_t>(m);
  const std::size_t degree = 4 + mm;
  Images w = identity_images(degree), v = identity_images(degree), h = identity_images(degree);
  w[0] = 1, w[1] = 2, w[2] = 3, w[3] = 0;
  v[1] = 3, v[3] = 1;
  h[1] = 2, h[2] = 3, h[3] = 1;
  reflect_block(w, 4, mm);
  reflect_block(v, 4, mm);
  rotate_block(h, 4, mm);
  Permutation pw(w), pv(v);
  LabeledGroup result{spec, FiniteGroup::from_generators(degree, {{"w", pw},
                                                                  {"v", pv},
                                                                  {"u", pw * pv},
                                                                  {"h", Permutation(h)}})};
  const FiniteGroup& G = *result.group;
  ElementId wi = result.label("w"), vi = result.label("v"), ui = result.label("u");
  ElementId hi = result.label("h");
  ElementId w2 = G.mul(wi, wi);
  ElementId w2u = G.mul(w2, ui);
  require(G.order() == static_cast<std::size_t>(8 * m), "|G| = 8m");
  require(G.element_order(wi) == 4 && G.element_order(vi) == 2, "|w| = 4, |v| = 2");
  require(G.conj(wi, vi) == G.inv(wi), "w^v = w^-1");
  require(G.element_order(hi) == mm, "|h| = m");
  require(G.conj(hi, vi) == G.inv(hi), "h^v = h^-1");
  require(G.conj(ui, hi) == w2u && G.conj(w2u, hi) == w2 && G.conj(w2, hi) == ui,
          "(u, w^2 u, w^2)^h = (w^2 u, w^2, u)");
  return result;
}

LabeledGroup metacyclic(long long n, long long m, long long lambda) {
  FamilySpec spec{FamilyKind::Metacyclic, {n, m, lambda}, {}};
  validate(spec);
  // Right regular representation on normal forms g^i h^j (point i*m + j),
  // using h^j g^k = g^(k mu^j) h^j with mu = lambda^-1 mod n.
  long long lam = mod(lambda, n);
  long long mu = 1 % n;
  for (long long k = 0; k < n; ++k) {
    if ((lam * k) % n == 1 % n) {
      mu = k;
      break;
    }
  }
  const auto degree = static_cast<std::size_t>(n * m);
  Images g(degree), h(degree);
  std::vector<long long> mu_powers(static_cast<std::size_t>(m));
  mu_powers[0] = 1 % n;
  for (long long j = 1; j < m; ++j) mu_powers[j] = mu_powers[j - 1] * mu % n;
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < m; ++j) {
      auto point = static_cast<std::size_t>(i * m + j);
      g[point] = static_cast<Point>(mod(i + mu_powers[j], n) * m + j);
      h[point] = static_cast<Point>(i * m + (j + 1) % m);
    }
  }
  LabeledGroup result{spec, FiniteGroup::from_generators(degree, {{"g", Permutation(g)},
                                                                  {"h", Permutation(h)}})};
  const FiniteGroup& G = *result.group;
  ElementId gi = result.label("g"), hi = result.label("h");
  require(G.order() == static_cast<std::size_t>(n * m), "|G| = nm");
  require(G.conj(gi, hi) == G.pow(gi, lam), "g^h = g^lambda");
  return result;
}

LabeledGroup explicit_group(std::string_view text, std::string source) {
  std::vector<std::string> lines;
  std::string all(text);
  std::stringstream stream(all);
  std::string line;
  while (std::getline(stream, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw ValidationError("permutation file has no generators");
  if (lines.size() > 26) throw ValidationError("at most 26 explicit generators are supported");
  std::size_t degree = 1;
  for (const auto& l : lines) {
    std::size_t value = 0;
    bool in_number = false;
    for (char c : l) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        value = value * 10 + static_cast<std::size_t>(c - '0');
        in_number = true;
      } else {
        if (in_number) degree = std::max(degree, value + 1);
        value = 0;
        in_number = false;
      }
    }
    if (in_number) degree = std::max(degree, value + 1);
  }
  std::vector<LabeledPermutation> gens;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    gens.push_back({std::string(1, static_cast<char>('a' + i)), Permutation::parse(lines[i], degree)});
  }
  FamilySpec spec{FamilyKind::Explicit, {}, std::move(source)};
  return LabeledGroup{spec, FiniteGroup::from_generators(degree, std::move(gens))};
}

LabeledGroup build_family(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Dihedral: return dihedral(p[0]);
    case FamilyKind::DihedralProduct: return dihedral_product(p[0], p[1]);
    case FamilyKind::Rank3CyclicExt: return rank3_cyclic_ext(p[0], p[1], p[2]);
    case FamilyKind::S4Cover: return s4_cover(p[0]);
    case FamilyKind::Metacyclic: return metacyclic(p[0], p[1], p[2]);
    case FamilyKind::Explicit: {
      std::ifstream in(spec.source);
      if (!in) throw ValidationError("cannot open permutation file '" + spec.source + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      return explicit_group(buffer.str(), spec.source);
    }
  }
  throw ValidationError("unknown family");
}

}  // namespace revmap
