#include "orientals/json_io.hpp"

#include <limits>

#include "basis_order.hpp"

namespace orientals {

namespace {

using nlohmann::json;

json basis_json(VertexMask m) {
  json a = json::array();
  for (; m; m &= m - 1) a.push_back(mask::first(m));
  return a;
}

[[noreturn]] void fail(const std::string& at, const std::string& what) { throw ParseError(at.empty() ? "/" : at, what); }

int read_int(const json& doc, const std::string& at, int lo, int hi) {
  if (!doc.is_number_integer()) fail(at, "expected an integer");
  const auto v = doc.get<long long>();
  if (v < lo || v > hi) fail(at, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

VertexMask read_basis(const json& doc, const std::string& at, int ambient) {
  if (!doc.is_array() || doc.empty()) fail(at, "expected a nonempty array of vertices");
  VertexMask m = 0;
  int prev = -1;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const int v = read_int(doc[k], at + "/" + std::to_string(k), 0, ambient);
    if (v <= prev) fail(at + "/" + std::to_string(k), "vertices must be strictly ascending");
    prev = v;
    m |= mask::bit(v);
  }
  return m;
}

const json& field(const json& doc, const std::string& at, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) fail(at, std::string("missing field \"") + name + "\"");
  return *it;
}

}  // namespace

json to_json(const ChainMap& f) {
  json images = json::array();
  for (VertexMask a : detail::basis_order(f.source_dim())) {
    const Chain& c = f.image(a);
    if (c.is_zero()) continue;
    json chain = json::array();
    for (const Term& t : c.terms()) chain.push_back({{"basis", basis_json(t.mask)}, {"coef", t.coef}});
    images.push_back({{"basis", basis_json(a)}, {"chain", std::move(chain)}});
  }
  return {{"format", kJsonFormat},
          {"source_dim", f.source_dim()},
          {"target_dim", f.target_dim()},
          {"images", std::move(images)}};
}

json to_json(const CanonicalDecomposition& d) {
  json alphas = json::array();
  for (int p = d.r - 1; p >= 0; --p) alphas.push_back({{"p", p}, {"morphism", to_json(d.alpha(p))}});
  return {{"format", kJsonFormat}, {"subject", to_json(d.subject)}, {"terminus", d.t}, {"rank", d.r},
          {"corank", d.s},         {"gamma", to_json(d.gamma)},     {"beta", to_json(d.beta())},
          {"alphas", std::move(alphas)}};
}

json to_json(const std::vector<OrMorphism>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(to_json(x));
  return {{"format", kJsonFormat}, {"count", xs.size()}, {"morphisms", std::move(arr)}};
}

ChainMap chain_map_from_json(const json& doc, const std::string& at) {
  if (!doc.is_object()) fail(at, "expected a morphism object");
  if (auto it = doc.find("format"); it != doc.end() && read_int(*it, at + "/format", 0, 1 << 20) != kJsonFormat)
    fail(at + "/format", "unsupported format version");
  const int m = read_int(field(doc, at, "source_dim"), at + "/source_dim", 0, kMaxSourceDim);
  const int n = read_int(field(doc, at, "target_dim"), at + "/target_dim", 0, kMaxAmbient);
  const json& images = field(doc, at, "images");
  if (!images.is_array()) fail(at + "/images", "expected an array");

  std::vector<Chain> out;
  for (VertexMask a = 1; a <= mask::low(m + 1); ++a) out.emplace_back(n, mask::size(a) - 1);
  std::vector<bool> given(out.size(), false);
  for (std::size_t k = 0; k < images.size(); ++k) {
    const std::string here = at + "/images/" + std::to_string(k);
    const json& entry = images[k];
    if (!entry.is_object()) fail(here, "expected an image object");
    const VertexMask a = read_basis(field(entry, here, "basis"), here + "/basis", m);
    if (given[a - 1]) fail(here + "/basis", "image of " + mask::render(a) + " given twice");
    given[a - 1] = true;
    const int q = mask::size(a) - 1;
    const json& chain = field(entry, here, "chain");
    if (!chain.is_array()) fail(here + "/chain", "expected an array of terms");
    std::vector<Term> terms;
    for (std::size_t j = 0; j < chain.size(); ++j) {
      const std::string th = here + "/chain/" + std::to_string(j);
      const json& term = chain[j];
      if (!term.is_object()) fail(th, "expected a term object");
      const VertexMask b = read_basis(field(term, th, "basis"), th + "/basis", n);
      if (mask::size(b) - 1 != q) fail(th + "/basis", "term degree differs from the basis element's degree");
      const json& coef = field(term, th, "coef");
      if (!coef.is_number_integer()) fail(th + "/coef", "expected an integer");
      terms.push_back({b, coef.get<Coefficient>()});
    }
    out[a - 1] = Chain::from_terms(n, q, std::move(terms));
  }
  return ChainMap(m, n, std::move(out));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
}

ChainMap parse_chain_map(std::string_view text) { return chain_map_from_json(parse_json(text)); }

OrMorphism parse_morphism(std::string_view text) { return validate(parse_chain_map(text)); }

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace orientals
