#include "fgaut/splittings.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include <json.hpp>

namespace fgaut {

// ------------------------------------------------------------ RoseSplitting

RoseSplitting::RoseSplitting(Basis basis, Factor vertex_factor,
                             std::vector<std::size_t> stable_positions)
    : basis_(std::move(basis)), vertex_(std::move(vertex_factor)), stable_(std::move(stable_positions)) {
  const std::size_t n = basis_.rank();
  if (vertex_.rank() != n) throw DomainError("vertex factor rank differs from basis rank");
  std::vector<bool> seen(n, false);
  for (auto i : vertex_.indices()) seen[i] = true;
  for (auto p : stable_) {
    if (p >= n || seen[p]) throw DomainError("vertex factor and stable letters must partition the basis");
    seen[p] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw DomainError("vertex factor and stable letters must partition the basis");
  }
}

RoseSplitting RoseSplitting::standard(std::size_t rank, std::size_t petals) {
  if (petals > rank) throw DomainError("more petals than basis letters");
  std::vector<std::size_t> stable(petals);
  std::iota(stable.begin(), stable.end(), rank - petals);
  return RoseSplitting(Basis::standard(rank), Factor::range(rank, 0, rank - petals), std::move(stable));
}

std::size_t RoseSplitting::stable_position(std::size_t petal) const {
  if (petal < 1 || petal > stable_.size()) {
    throw DomainError("petal " + std::to_string(petal) + " out of range");
  }
  return stable_[petal - 1];
}

std::optional<std::size_t> RoseSplitting::petal_of(std::size_t position) const {
  for (std::size_t i = 0; i < stable_.size(); ++i) {
    if (stable_[i] == position) return i + 1;
  }
  return std::nullopt;
}

Word RoseSplitting::stable_letter(std::size_t petal) const {
  return Word::generator(basis_, stable_position(petal));
}

std::optional<Basis> RoseSplitting::vertex_basis() const {
  auto idx = vertex_.indices();
  if (idx.empty()) return std::nullopt;
  return basis_.restrict(idx);
}

Word RoseSplitting::to_vertex(const Word& w) const {
  auto vb = vertex_basis();
  if (!vb) {
    if (!w.is_identity()) throw DomainError("word is not in the trivial vertex group");
    throw DomainError("trivial vertex group has no basis");
  }
  auto idx = vertex_.indices();
  std::vector<Letter> out;
  for (auto l : w.letters()) {
    auto it = std::find(idx.begin(), idx.end(), l.index);
    if (it == idx.end()) throw DomainError("word " + w.to_string() + " is not in the vertex group");
    out.push_back(Letter{static_cast<std::uint32_t>(it - idx.begin()), l.sign});
  }
  return Word(*vb, out);
}

Word RoseSplitting::from_vertex(const Word& w) const {
  auto idx = vertex_.indices();
  if (w.basis().rank() != idx.size()) throw BasisMismatch();
  std::vector<Letter> out;
  for (auto l : w.letters()) out.push_back(Letter{static_cast<std::uint32_t>(idx[l.index]), l.sign});
  return Word(basis_, out);
}

std::string RoseSplitting::spec() const {
  return "rose@N=" + std::to_string(rank()) + ",k=" + std::to_string(petals());
}

RoseSplitting parse_rose_spec(std::string_view spec) {
  constexpr std::string_view head = "rose@";
  if (spec.substr(0, head.size()) != head) throw ParseError(0, "expected 'rose@N=<n>,k=<k>'");
  std::optional<std::size_t> n, k;
  std::size_t pos = head.size();
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    std::string_view item = spec.substr(pos, comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError(pos, "expected key=value");
    std::string_view key = item.substr(0, eq), val = item.substr(eq + 1);
    std::size_t value = 0;
    auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), value);
    if (ec != std::errc{} || p != val.data() + val.size()) throw ParseError(pos + eq + 1, "expected integer");
    if (key == "N") n = value;
    else if (key == "k") k = value;
    else throw ParseError(pos, "unknown key '" + std::string(key) + "'");
    pos = comma + 1;
  }
  if (!n || !k) throw ParseError(spec.size(), "both N and k are required");
  if (*n == 0) throw ParseError(head.size(), "N must be positive");
  return RoseSplitting::standard(*n, *k);
}

CageSplitting CageSplitting::make(Basis basis, Factor a, Factor b, std::vector<std::size_t> connectors) {
  const std::size_t n = basis.rank();
  if (a.rank() != n || b.rank() != n) throw DomainError("cage factor rank differs from basis rank");
  std::vector<int> count(n, 0);
  for (auto i : a.indices()) ++count[i];
  for (auto i : b.indices()) ++count[i];
  for (auto i : connectors) {
    if (i >= n) throw DomainError("connector out of range");
    ++count[i];
  }
  if (std::any_of(count.begin(), count.end(), [](int c) { return c != 1; })) {
    throw DomainError("A, B and connectors must partition the basis");
  }
  return CageSplitting{std::move(basis), std::move(a), std::move(b), std::move(connectors)};
}

// ----------------------------------------------------------- cosets, balls

CosetVertex coset_normal_form(const Word& g, const RoseSplitting& s) {
  if (!(g.basis() == s.basis())) throw BasisMismatch();
  return CosetVertex{strip_suffix(g, s.vertex_factor()).remainder};
}

std::optional<Adjacency> are_adjacent(const CosetVertex& g, const CosetVertex& h,
                                      const RoseSplitting& s) {
  Word d = g.rep.inverse() * h.rep;
  Word core = strip_suffix(strip_prefix(d, s.vertex_factor()).remainder, s.vertex_factor()).remainder;
  if (core.length() != 1) return std::nullopt;
  auto petal = s.petal_of(core.front().index);
  if (!petal) return std::nullopt;
  return Adjacency{*petal, core.front().sign};
}

TreeBall::TreeBall(RoseSplitting splitting, std::size_t radius, std::vector<CosetVertex> vertices,
                   std::vector<std::pair<std::size_t, std::size_t>> edges)
    : splitting_(std::move(splitting)), radius_(radius), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (auto& [a, b] : edges_) {
    if (a >= vertices_.size() || b >= vertices_.size() || a == b) throw DomainError("bad ball edge");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
}

std::optional<std::size_t> TreeBall::find(const CosetVertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || !(*it == v)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool TreeBall::has_edge(const CosetVertex& a, const CosetVertex& b) const {
  auto i = find(a), j = find(b);
  if (!i || !j) return false;
  auto e = std::minmax(*i, *j);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{e.first, e.second});
}

bool TreeBall::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertices_.size();
  for (auto [a, b] : edges_) {
    auto ra = root(a), rb = root(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

bool TreeBall::is_tree() const { return is_connected() && edges_.size() + 1 == vertices_.size(); }

TreeBall build_ball(const RoseSplitting& s, std::size_t radius) {
  std::vector<CosetVertex> vertices;
  for_each_in_ball(s.basis(), radius, [&](const Word& w) {
    if (w.is_identity() || !s.vertex_factor().contains(w.back().index)) vertices.push_back(CosetVertex{w});
  });
  std::sort(vertices.begin(), vertices.end());
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (are_adjacent(vertices[i], vertices[j], s)) edges.emplace_back(i, j);
    }
  }
  return TreeBall(s, radius, std::move(vertices), std::move(edges));
}

namespace {

std::string dot_quote(const std::string& s) { return "\"" + s + "\""; }

std::string sign_text(int sign) { return sign > 0 ? "+1" : "-1"; }

}  // namespace

std::string to_dot(const TreeBall& ball) {
  std::string out = "graph ball {\n";
  out += "  label=" + dot_quote(ball.splitting().spec() + " L=" + std::to_string(ball.radius())) + ";\n";
  for (const auto& v : ball.vertices()) out += "  " + dot_quote(v.rep.to_string()) + ";\n";
  for (auto [a, b] : ball.edges()) {
    const auto& va = ball.vertices()[a];
    const auto& vb = ball.vertices()[b];
    auto adj = are_adjacent(va, vb, ball.splitting());
    out += "  " + dot_quote(va.rep.to_string()) + " -- " + dot_quote(vb.rep.to_string()) +
           " [label=" + dot_quote(std::to_string(adj->petal) + "," + sign_text(adj->sign)) + "];\n";
  }
  return out + "}\n";
}

std::string to_json(const TreeBall& ball) {
  using nlohmann::ordered_json;
  const auto& s = ball.splitting();
  ordered_json j;
  ordered_json split;
  split["kind"] = "rose";
  split["basis"] = s.basis().names();
  split["vertex_factor"] = s.vertex_factor().indices();
  split["stable"] = s.stable_positions();
  j["splitting"] = split;
  j["L"] = ball.radius();
  auto& verts = j["vertices"] = ordered_json::array();
  for (const auto& v : ball.vertices()) verts.push_back(v.rep.to_string());
  auto& edges = j["edges"] = ordered_json::array();
  for (auto [a, b] : ball.edges()) {
    const auto& va = ball.vertices()[a];
    const auto& vb = ball.vertices()[b];
    auto adj = are_adjacent(va, vb, s);
    ordered_json e;
    e["from"] = va.rep.to_string();
    e["to"] = vb.rep.to_string();
    e["petal"] = adj->petal;
    e["sign"] = adj->sign;
    edges.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

TreeBall ball_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    const auto& split = j.at("splitting");
    if (split.at("kind").get<std::string>() != "rose") throw DomainError("unsupported splitting kind");
    Basis basis(split.at("basis").get<std::vector<std::string>>());
    auto vf = split.at("vertex_factor").get<std::vector<std::size_t>>();
    RoseSplitting s(basis, Factor(basis.rank(), vf), split.at("stable").get<std::vector<std::size_t>>());
    std::vector<CosetVertex> vertices;
    for (const auto& v : j.at("vertices")) {
      CosetVertex cv{parse_word(basis, v.get<std::string>())};
      if (!(coset_normal_form(cv.rep, s) == cv)) throw DomainError("vertex " + cv.rep.to_string() + " is not a normal form");
      vertices.push_back(std::move(cv));
    }
    std::sort(vertices.begin(), vertices.end());
    auto index = [&](const std::string& name) {
      CosetVertex cv{parse_word(basis, name)};
      auto it = std::lower_bound(vertices.begin(), vertices.end(), cv);
      if (it == vertices.end() || !(*it == cv)) throw DomainError("edge endpoint " + name + " is not a vertex");
      return static_cast<std::size_t>(it - vertices.begin());
    };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : j.at("edges")) {
      auto a = index(e.at("from").get<std::string>());
      auto b = index(e.at("to").get<std::string>());
      auto adj = are_adjacent(vertices[a], vertices[b], s);
      if (!adj || adj->petal != e.at("petal").get<std::size_t>() || adj->sign != e.at("sign").get<int>()) {
        throw DomainError("edge label does not match the adjacency criterion");
      }
      edges.emplace_back(a, b);
    }
    return TreeBall(std::move(s), j.at("L").get<std::size_t>(), std::move(vertices), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("invalid ball JSON: ") + e.what());
  }
}

// ---------------------------------------------------------- twisted action

std::optional<CosetVertex> base_vertex_image(const Automorphism& phi, const RoseSplitting& s) {
  if (!(phi.basis() == s.basis())) throw BasisMismatch();
  const auto vidx = s.vertex_factor().indices();
  if (vidx.empty()) return CosetVertex{Word(s.basis())};
  // phi(a) = p c p^-1 with c cyclically reduced; phi(A) = pAp^-1 forces c in A.
  const Word w = phi.image(vidx.front());
  std::size_t strip = 0;
  while (2 * strip + 1 < w.length() && w.letters()[strip] == w.letters()[w.length() - 1 - strip].inverse()) {
    ++strip;
  }
  Word p = w.slice(0, strip);
  Word pi = p.inverse();
  for (auto i : vidx) {
    if (!in_factor(pi * phi.image(i) * p, s.vertex_factor())) return std::nullopt;
    // phi(A) must be all of pAp^-1, not a proper subgroup.
    if (!in_factor(phi.inverse().apply(p * Word::generator(s.basis(), i) * pi), s.vertex_factor())) {
      return std::nullopt;
    }
  }
  return coset_normal_form(p, s);
}

TwistedImage twisted_vertex_action(const Automorphism& phi, const CosetVertex& v, const RoseSplitting& s) {
  auto base = base_vertex_image(phi, s);
  Word p = base ? base->rep : Word(s.basis());
  bool checked = false;
  if (base) checked = rose_stab_membership(inner(p).inverse() * phi, s).has_value();
  return TwistedImage{coset_normal_form(phi.apply(v.rep) * p, s), checked};
}

// --------------------------------------------------------------------- W_k

WkElement WkElement::identity(std::size_t k) {
  WkElement w;
  w.perm.resize(k);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.signs.assign(k, 1);
  return w;
}

bool WkElement::is_identity() const { return *this == identity(perm.size()); }

Automorphism WkElement::to_automorphism(const RoseSplitting& s) const {
  if (perm.size() != s.petals()) throw DomainError("W_k element has wrong petal count");
  auto img = Automorphism::identity(s.basis()).images();
  auto inv = img;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    Word xi = s.stable_letter(i + 1);
    Word xj = s.stable_letter(perm[i] + 1);
    img[s.stable_position(i + 1)] = signs[i] > 0 ? xj : xj.inverse();
    inv[s.stable_position(perm[i] + 1)] = signs[i] > 0 ? xi : xi.inverse();
  }
  return make_automorphism(std::move(img), std::move(inv));
}

WkElement operator*(const WkElement& w1, const WkElement& w2) {
  if (w1.perm.size() != w2.perm.size()) throw DomainError("W_k size mismatch");
  WkElement out;
  for (std::size_t i = 0; i < w2.perm.size(); ++i) {
    out.perm.push_back(w1.perm[w2.perm[i]]);
    out.signs.push_back(w2.signs[i] * w1.signs[w2.perm[i]]);
  }
  return out;
}

// ------------------------------------------------------ rose stabilizers

std::optional<RoseStabDecomposition> rose_stab_membership(const Automorphism& phi, const RoseSplitting& s) {
  if (!(phi.basis() == s.basis())) throw BasisMismatch();
  const Factor& a = s.vertex_factor();
  const auto vidx = a.indices();
  for (auto i : vidx) {
    if (!in_factor(phi.image(i), a) || !in_factor(phi.inverse_images()[i], a)) return std::nullopt;
  }
  RoseStabDecomposition d;
  const std::size_t k = s.petals();
  d.w.perm.resize(k);
  d.w.signs.resize(k);
  std::vector<bool> hit(k, false);
  for (std::size_t i = 1; i <= k; ++i) {
    const Word& img = phi.image(s.stable_position(i));
    auto pre = strip_prefix(img, a);
    auto suf = strip_suffix(pre.remainder, a);
    if (suf.remainder.length() != 1) return std::nullopt;
    auto j = s.petal_of(suf.remainder.front().index);
    if (!j || hit[*j - 1]) return std::nullopt;
    hit[*j - 1] = true;
    d.u.push_back(pre.prefix);
    d.v.push_back(suf.suffix);
    d.w.perm[i - 1] = *j - 1;
    d.w.signs[i - 1] = suf.remainder.front().sign;
  }
  if (auto vb = s.vertex_basis()) {
    std::vector<Word> img, inv;
    for (auto i : vidx) {
      img.push_back(s.to_vertex(phi.image(i)));
      inv.push_back(s.to_vertex(phi.inverse_images()[i]));
    }
    d.phi_a = make_automorphism(std::move(img), std::move(inv));
  }
  return d;
}

Automorphism reassemble(const RoseStabDecomposition& d, const RoseSplitting& s) {
  const std::size_t k = s.petals();
  if (d.u.size() != k || d.v.size() != k || d.w.perm.size() != k) {
    throw DomainError("decomposition has wrong petal count");
  }
  auto img = Automorphism::identity(s.basis()).images();
  auto inv = img;
  const auto vidx = s.vertex_factor().indices();
  std::optional<Automorphism> phi_a_inv;
  if (!vidx.empty()) {
    if (!d.phi_a) throw DomainError("decomposition lacks phi|_A");
    phi_a_inv = d.phi_a->inverse();
    for (std::size_t n = 0; n < vidx.size(); ++n) {
      img[vidx[n]] = s.from_vertex(d.phi_a->image(n));
      inv[vidx[n]] = s.from_vertex(phi_a_inv->image(n));
    }
  }
  auto inv_on_a = [&](const Word& w) {
    return phi_a_inv ? s.from_vertex(phi_a_inv->apply(s.to_vertex(w))) : w;
  };
  for (std::size_t i = 0; i < k; ++i) {
    Word xj = s.stable_letter(d.w.perm[i] + 1);
    Word xi = s.stable_letter(i + 1);
    const int e = d.w.signs[i];
    img[s.stable_position(i + 1)] = d.u[i] * (e > 0 ? xj : xj.inverse()) * d.v[i];
    // phi^-1(x_j^e) = phi^-1(u)^-1 x_i phi^-1(v)^-1
    Word pre = inv_on_a(d.u[i]).inverse() * xi * inv_on_a(d.v[i]).inverse();
    inv[s.stable_position(d.w.perm[i] + 1)] = e > 0 ? pre : pre.inverse();
  }
  return make_automorphism(std::move(img), std::move(inv));
}

MkElement rose_to_mk(const RoseStabDecomposition& d, const RoseSplitting& s) {
  if (!d.w.is_identity()) throw DomainError("rose_to_mk needs w = 1");
  if (!d.phi_a) throw DomainError("rose_to_mk needs a nontrivial vertex group");
  std::vector<Word> c;
  for (const auto& u : d.u) c.push_back(s.to_vertex(u).inverse());
  for (const auto& v : d.v) c.push_back(s.to_vertex(v));
  return MkElement(std::move(c), *d.phi_a);
}

Automorphism mk_to_rose(const MkElement& m, const RoseSplitting& s) {
  const std::size_t k = s.petals();
  if (m.arity() != 2 * k) throw DomainError("mk_to_rose needs arity 2k");
  auto vb = s.vertex_basis();
  if (!vb || !(m.basis() == *vb)) throw BasisMismatch();
  RoseStabDecomposition d;
  d.w = WkElement::identity(k);
  d.phi_a = m.phi();
  for (std::size_t i = 0; i < k; ++i) {
    d.u.push_back(s.from_vertex(m.coord(i).inverse()));
    d.v.push_back(s.from_vertex(m.coord(k + i)));
  }
  return reassemble(d, s);
}

MkElement wk_act(const WkElement& w, const MkElement& m) {
  const std::size_t k = w.perm.size();
  if (m.arity() != 2 * k) throw DomainError("W_k acts on arity 2k");
  std::vector<Word> c(2 * k, Word(m.basis()));
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = w.perm[i];
    const bool swap = w.signs[i] < 0;
    c[j] = swap ? m.coord(k + i) : m.coord(i);
    c[k + j] = swap ? m.coord(i) : m.coord(k + i);
  }
  return MkElement(std::move(c), m.phi());
}

bool edge_stab_membership(const Automorphism& phi, const RoseSplitting& s, std::size_t petal) {
  if (petal < 1 || petal > s.petals()) throw DomainError("petal out of range");
  auto d = rose_stab_membership(phi, s);
  return d && d->w.is_identity() && d->u[petal - 1].is_identity();
}

MkElement edge_stab_to_mk(const Automorphism& phi, const RoseSplitting& s) {
  if (!edge_stab_membership(phi, s, 1)) throw DomainError("automorphism does not fix the petal-1 edge");
  auto d = *rose_stab_membership(phi, s);
  if (!d.phi_a) throw DomainError("edge_stab_to_mk needs a nontrivial vertex group");
  std::vector<Word> c;
  for (std::size_t i = 1; i < d.u.size(); ++i) c.push_back(s.to_vertex(d.u[i]).inverse());
  for (const auto& v : d.v) c.push_back(s.to_vertex(v));
  return MkElement(std::move(c), *d.phi_a);
}

std::optional<Automorphism> automorphic_lift(const Automorphism& phi, const RoseSplitting& s, std::size_t petal) {
  auto base = base_vertex_image(phi, s);
  if (!base) return std::nullopt;
  const Word& p = base->rep;
  Word x = s.stable_letter(petal);
  Word q = coset_normal_form(phi.apply(x) * p, s).rep;
  // g = p a with a x A = p^-1 q A.
  auto pre = strip_prefix(p.inverse() * q, s.vertex_factor());
  Word rest = strip_suffix(pre.remainder, s.vertex_factor()).remainder;
  if (rest != x) return std::nullopt;
  Word g = p * pre.prefix;
  return inner(g).inverse() * phi;
}

bool fixes_arc(const Automorphism& phi, const TreeBall& ball, const std::vector<BallEdge>& path) {
  if (path.empty()) throw DomainError("empty path");
  std::vector<CosetVertex> vertices;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& [a, b] = path[i];
    if (!ball.has_edge(a, b)) throw DomainError("path edge " + a.rep.to_string() + " -- " + b.rep.to_string() + " is not in the ball");
    if (i == 0) {
      vertices.push_back(a);
    } else if (!(a == vertices.back())) {
      throw DomainError("path edges are not consecutive");
    }
    if (std::find(vertices.begin(), vertices.end(), b) != vertices.end()) {
      throw DomainError("path is not simple");
    }
    vertices.push_back(b);
  }
  const auto& s = ball.splitting();
  return std::all_of(vertices.begin(), vertices.end(), [&](const CosetVertex& v) {
    return twisted_vertex_action(phi, v, s).vertex == v;
  });
}

ThirdCaseCheck third_case_fixed_element_check(const Automorphism& phi, const RoseSplitting& s, const Word& w) {
  if (!edge_stab_membership(phi, s, 1)) throw DomainError("automorphism does not fix the petal-1 edge");
  if (w.is_identity() || !in_factor(w, s.vertex_factor())) throw DomainError("w must be a nontrivial element of A");
  Word x1 = s.stable_letter(1);
  ThirdCaseCheck out;
  out.fixes_vertices = true;
  for (const Word& rep : {Word(s.basis()), x1, w * x1}) {
    CosetVertex v = coset_normal_form(rep, s);
    if (!(twisted_vertex_action(phi, v, s).vertex == v)) out.fixes_vertices = false;
  }
  out.element_fixed = phi.apply(w) == w;
  return out;
}

// ------------------------------------------------------------------- cages

namespace {

std::optional<Automorphism> restrict_to(const Automorphism& phi, const Factor& f) {
  auto idx = f.indices();
  if (idx.empty()) return std::nullopt;
  Basis fb = phi.basis().restrict(idx);
  auto convert = [&](const Word& w) {
    std::vector<Letter> out;
    for (auto l : w.letters()) {
      auto it = std::find(idx.begin(), idx.end(), l.index);
      out.push_back(Letter{static_cast<std::uint32_t>(it - idx.begin()), l.sign});
    }
    return Word(fb, out);
  };
  std::vector<Word> img, inv;
  for (auto i : idx) {
    img.push_back(convert(phi.image(i)));
    inv.push_back(convert(phi.inverse_images()[i]));
  }
  return make_automorphism(std::move(img), std::move(inv));
}

}  // namespace

std::optional<CageDecomposition> cage_stab_representative(const Automorphism& phi, const CageSplitting& c) {
  if (!(phi.basis() == c.basis)) throw BasisMismatch();
  for (const Factor* f : {&c.factor_a, &c.factor_b}) {
    for (auto i : f->indices()) {
      if (!in_factor(phi.image(i), *f) || !in_factor(phi.inverse_images()[i], *f)) return std::nullopt;
    }
  }
  CageDecomposition d;
  for (auto pos : c.connectors) {
    auto pre = strip_prefix(phi.image(pos), c.factor_a);
    auto suf = strip_suffix(pre.remainder, c.factor_b);
    if (suf.remainder != Word::generator(c.basis, pos)) return std::nullopt;
    d.pairs.emplace_back(pre.prefix, suf.suffix);
  }
  d.phi_a = restrict_to(phi, c.factor_a);
  d.phi_b = restrict_to(phi, c.factor_b);
  return d;
}

// ---------------------------------------------------------------- collapse

RoseSplitting collapse_petal(const RoseSplitting& s, std::size_t petal) {
  if (s.petals() < 2) throw DomainError("collapse_petal needs at least two petals");
  const std::size_t pos = s.stable_position(petal);
  std::vector<std::size_t> stable;
  for (auto p : s.stable_positions()) {
    if (p != pos) stable.push_back(p);
  }
  return RoseSplitting(s.basis(), s.vertex_factor().with(pos), std::move(stable));
}

CosetVertex collapse_vertex_map(const CosetVertex& v, const RoseSplitting& coarse) {
  return coset_normal_form(v.rep, coarse);
}

}  // namespace fgaut
