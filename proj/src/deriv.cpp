#include "qtwist/deriv.hpp"

#include "qtwist/hopf.hpp"

#include <random>
#include <stdexcept>

namespace qtwist {

std::string derivation_tag_name(Derivation d) {
  switch (d) {
    case Derivation::RightHat: return "right-hat";
    case Derivation::LeftHat: return "left-hat";
    case Derivation::Right: return "right";
    case Derivation::Left: return "left";
    case Derivation::BarRight: return "bar-right";
    case Derivation::BarLeft: return "bar-left";
  }
  return "?";
}

Derivation parse_derivation_tag(const std::string& name) {
  for (auto d : {Derivation::RightHat, Derivation::LeftHat, Derivation::Right, Derivation::Left, Derivation::BarRight,
                 Derivation::BarLeft})
    if (derivation_tag_name(d) == name) return d;
  throw std::invalid_argument("unknown derivation '" + name + "'");
}

std::optional<RootVector> positive_degree(const Element& x) {
  std::optional<RootVector> deg;
  for (const auto& [m, c] : x.terms()) {
    if (!m.f.empty() || !is_zero(m.w) || !is_zero(m.wp)) throw std::invalid_argument("element is not in U^+");
    RootVector b = word_weight(m.e, x.spec()->rank());
    if (deg && *deg != b) throw std::invalid_argument("element is not homogeneous");
    deg = b;
  }
  return deg;
}

namespace {

Element e_part(const SpecPtr& spec, const Word& w, const Coeff& c) {
  Monomial m = Monomial::unit(spec->rank());
  m.e = w;
  return Element(spec, m, c);
}

Element extract_hat(const Element& x, int i, bool right) {
  const SpecPtr& spec = x.spec();
  auto beta = positive_degree(x);
  Element out(spec);
  if (!beta || (*beta)[i] == 0) return out;
  int n = spec->rank();
  RootVector ai = unit_root(n, i);
  RootVector rest = *beta - ai;
  const Character& cw = spec->chi_omega();
  TensorElement delta = coproduct(x);
  for (const auto& [t, c] : delta.terms()) {
    const Monomial& a = t[0];
    const Monomial& b = t[1];
    if (right) {
      // c * w_i u (x) e_i = c chi(a_i, wt u) u w_i (x) e_i
      if (!b.f.empty() || !is_zero(b.w) || !is_zero(b.wp) || b.e != Word{i}) continue;
      if (!a.f.empty() || a.w != ai || !is_zero(a.wp)) continue;
      out += e_part(spec, a.e, c * Coeff(cw(ai, word_weight(a.e, n))));
    } else {
      // c * w_g e_i (x) v = c chi(g, a_i) e_i w_g (x) v
      if (!a.f.empty() || a.w != rest || !is_zero(a.wp) || a.e != Word{i}) continue;
      if (!b.f.empty() || !is_zero(b.w) || !is_zero(b.wp)) continue;
      out += e_part(spec, b.e, c * Coeff(cw(rest, ai)));
    }
  }
  return serre_normal_form(out);
}

Element leibniz_hat(const Element& x, int i, bool right) {
  const SpecPtr& spec = x.spec();
  positive_degree(x);
  int n = spec->rank();
  RootVector ai = unit_root(n, i);
  const Character& cw = spec->chi_omega();
  Element out(spec);
  for (const auto& [m, c] : x.terms()) {
    const Word& u = m.e;
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (u[k] != i) continue;
      Word rest = u;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      LaurentScalar f;
      if (right)
        f = cw(ai, word_weight(Word(u.begin() + static_cast<std::ptrdiff_t>(k) + 1, u.end()), n));
      else
        f = cw(word_weight(Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k)), n), ai);
      out += e_part(spec, rest, c * Coeff(f));
    }
  }
  return serre_normal_form(out);
}

using HatFn = Element (*)(const Element&, int, bool);

Element derive(DerivationKind k, const Element& x, HatFn hat) {
  const SpecPtr& spec = x.spec();
  int i = k.i;
  if (i < 0 || i >= spec->rank()) throw std::invalid_argument("derivation index out of range");
  switch (k.tag) {
    case Derivation::RightHat: return hat(x, i, true);
    case Derivation::LeftHat: return hat(x, i, false);
    case Derivation::Right: return spec->t_inverse(i) * hat(x, i, true);
    case Derivation::Left: return spec->t_inverse(i) * hat(x, i, false);
    case Derivation::BarRight:
    case Derivation::BarLeft: {
      auto beta = positive_degree(x);
      if (!beta || (*beta)[i] == 0) return Element(spec);
      RootVector ai = unit_root(spec->rank(), i);
      RootVector rest = *beta - ai;
      const Character& cwp = spec->chi_omega_prime();
      if (k.tag == Derivation::BarRight)
        return Coeff(cwp(ai, rest)) * (spec->t_inverse(i) * hat(x, i, false));
      return Coeff(cwp(rest, ai)) * (spec->t_inverse(i) * hat(x, i, true));
    }
  }
  throw std::logic_error("bad derivation");
}

}  // namespace

Element skew_derivative(DerivationKind k, const Element& x) { return derive(k, x, &extract_hat); }

Element skew_derivative_leibniz(DerivationKind k, const Element& x) { return derive(k, x, &leibniz_hat); }

Element apply_derivations(const std::vector<DerivationKind>& ops, const Element& x) {
  Element cur = x;
  for (std::size_t k = ops.size(); k-- > 0;) {
    if (cur.is_zero()) break;
    cur = skew_derivative(ops[k], cur);
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Module action

Element module_action(const SpecPtr& spec, const Generator& g, const Element& x) {
  auto beta = positive_degree(x);
  if (!beta) return Element(spec);
  const Character& cw = spec->chi_omega();
  switch (g.kind) {
    case Generator::Kind::Omega: return Coeff(cw(g.mu, *beta)) * x;
    case Generator::Kind::OmegaPrime: return Coeff(spec->chi_omega_prime()(g.mu, *beta)) * x;
    case Generator::Kind::E: {
      Element ei = Element::e(spec, g.i);
      RootVector ai = unit_root(spec->rank(), g.i);
      Element v = ei * x - Coeff(cw(ai, *beta)) * (x * ei);
      return serre_normal_form(spec->t_inverse(g.i) * v);
    }
    case Generator::Kind::F:
      return Coeff(spec->t(g.i)) * skew_derivative({Derivation::BarRight, g.i}, x);
  }
  throw std::logic_error("bad generator");
}

Element module_action(const SpecPtr& spec, const GeneratorWord& w, const Element& x) {
  Element cur = x;
  for (std::size_t k = w.size(); k-- > 0;) cur = module_action(spec, w[k], cur);
  return cur;
}

Element module_action(const Element& h, const Element& x) {
  const SpecPtr& spec = h.spec();
  Element out(spec);
  for (const auto& [m, c] : h.terms()) {
    GeneratorWord w;
    for (int i : m.f) w.push_back(Generator::f(i));
    if (!is_zero(m.w)) w.push_back(Generator::omega(m.w));
    if (!is_zero(m.wp)) w.push_back(Generator::omega_prime(m.wp));
    for (int i : m.e) w.push_back(Generator::e(i));
    out += c * module_action(spec, w, x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Properties

namespace {

using Inputs = std::vector<std::string>;

void need(const Inputs& in, std::size_t k) {
  if (in.size() != k) throw std::invalid_argument("expected " + std::to_string(k) + " inputs");
}

Element parse_plus(const SpecPtr& spec, const std::string& text) {
  Element x = parse_element(spec, text);
  positive_degree(x);
  return x;
}

RootVector degree_or_zero(const Element& x) {
  auto d = positive_degree(x);
  return d ? *d : RootVector(x.spec()->rank(), 0);
}

Element d(Derivation tag, int i, const Element& x) { return skew_derivative({tag, i}, x); }

std::string leibniz(const SpecPtr& spec, const Inputs& in, Derivation tag) {
  need(in, 3);
  int i = parse_index(in[0], spec->rank());
  Element x = parse_plus(spec, in[1]), y = parse_plus(spec, in[2]);
  RootVector ai = unit_root(spec->rank(), i);
  RootVector bx = degree_or_zero(x), by = degree_or_zero(y);
  const Character& cw = spec->chi_omega();
  const Character& cwp = spec->chi_omega_prime();
  Element lhs = d(tag, i, x * y);
  Element rhs(spec);
  switch (tag) {
    case Derivation::Right: rhs = Coeff(cw(ai, by)) * (d(tag, i, x) * y) + x * d(tag, i, y); break;
    case Derivation::Left: rhs = d(tag, i, x) * y + Coeff(cw(bx, ai)) * (x * d(tag, i, y)); break;
    case Derivation::BarRight: rhs = Coeff(cwp(ai, by)) * (d(tag, i, x) * y) + x * d(tag, i, y); break;
    case Derivation::BarLeft: rhs = d(tag, i, x) * y + Coeff(cwp(bx, ai)) * (x * d(tag, i, y)); break;
    default: throw std::logic_error("no Leibniz rule for this derivation");
  }
  return residual(lhs - rhs);
}

// D(x e_j) = c e_j-commuted D(x) + delta x, with D on the right (or e_j on the left).
std::string corollary(const SpecPtr& spec, const Inputs& in, Derivation tag, bool hat) {
  need(in, 3);
  int n = spec->rank();
  int i = parse_index(in[0], n), j = parse_index(in[1], n);
  Element x = parse_plus(spec, in[2]);
  Element ej = Element::e(spec, j);
  RootVector ai = unit_root(n, i), aj = unit_root(n, j);
  const Character& cw = spec->chi_omega();
  const Character& cwp = spec->chi_omega_prime();
  Coeff scale = hat ? Coeff(spec->t(i)) : Coeff(1);
  auto D = [&](const Element& y) { return scale * d(tag, i, y); };
  Element delta = i == j ? x : Element(spec);
  Element r(spec);
  switch (tag) {
    case Derivation::Right: r = D(x * ej) - Coeff(cw(ai, aj)) * (D(x) * ej) - delta; break;
    case Derivation::Left: r = D(ej * x) - Coeff(cw(aj, ai)) * (ej * D(x)) - delta; break;
    case Derivation::BarRight: r = D(x * ej) - Coeff(cwp(ai, aj)) * (D(x) * ej) - delta; break;
    case Derivation::BarLeft: r = D(ej * x) - Coeff(cwp(aj, ai)) * (ej * D(x)) - delta; break;
    default: throw std::logic_error("no corollary for this derivation");
  }
  return residual(r);
}

std::string commute(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  int n = spec->rank();
  int i = parse_index(in[0], n), j = parse_index(in[1], n);
  Element x = parse_plus(spec, in[2]);
  Element a = apply_derivations({{Derivation::Right, i}, {Derivation::Left, j}}, x);
  Element b = apply_derivations({{Derivation::Left, j}, {Derivation::Right, i}}, x);
  return residual(a - b);
}

// printed: f_i x - x f_i = d_i(x) w_i - w'_i _id(x); corrected swaps the left side.
std::string lemma_v(const SpecPtr& spec, const Inputs& in, bool printed) {
  need(in, 2);
  int n = spec->rank();
  int i = parse_index(in[0], n);
  Element x = parse_plus(spec, in[1]);
  Element fi = Element::f(spec, i);
  RootVector ai = unit_root(n, i);
  Element lhs = printed ? fi * x - x * fi : x * fi - fi * x;
  Element rhs = d(Derivation::Right, i, x) * Element::omega(spec, ai) -
                Element::omega_prime(spec, ai) * d(Derivation::Left, i, x);
  return residual(lhs - rhs);
}

// Operator Serre identities; with k_outer the k-th power is applied last.
std::string serre_operator(const SpecPtr& spec, const Inputs& in, Derivation tag, bool k_outer) {
  need(in, 3);
  int n = spec->rank();
  int i = parse_index(in[0], n), j = parse_index(in[1], n);
  if (i == j) throw std::invalid_argument("Serre identity needs i != j");
  Element x = parse_plus(spec, in[2]);
  int len = 1 - spec->cartan().a(i, j);
  Element sum(spec);
  for (int k = 0; k <= len; ++k) {
    LaurentScalar c = gauss_binomial(spec->binomial_base(i), len, k) * spec->serre_constant(i, j, k);
    if (k % 2) c = -c;
    int outer = k_outer ? k : len - k;
    std::vector<DerivationKind> ops(static_cast<std::size_t>(outer), {tag, i});
    ops.push_back({tag, j});
    ops.insert(ops.end(), static_cast<std::size_t>(len - outer), {tag, i});
    sum += Coeff(c) * apply_derivations(ops, x);
  }
  return residual(sum);
}

std::string extraction_vs_leibniz(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  Derivation tag = parse_derivation_tag(in[0]);
  int i = parse_index(in[1], spec->rank());
  Element x = parse_plus(spec, in[2]);
  return residual(skew_derivative({tag, i}, x) - skew_derivative_leibniz({tag, i}, x));
}

}  // namespace

std::vector<Property> derivation_properties() {
  using D = Derivation;
  return {
      {"extraction-vs-leibniz", extraction_vs_leibniz},
      {"leibniz-right", [](const SpecPtr& s, const Inputs& in) { return leibniz(s, in, D::Right); }},
      {"leibniz-left", [](const SpecPtr& s, const Inputs& in) { return leibniz(s, in, D::Left); }},
      {"leibniz-bar-right", [](const SpecPtr& s, const Inputs& in) { return leibniz(s, in, D::BarRight); }},
      {"leibniz-bar-left", [](const SpecPtr& s, const Inputs& in) { return leibniz(s, in, D::BarLeft); }},
      {"commute", commute},
      {"lemma-v", [](const SpecPtr& s, const Inputs& in) { return lemma_v(s, in, false); }},
      {"lemma-v-printed", [](const SpecPtr& s, const Inputs& in) { return lemma_v(s, in, true); }},
      {"corollary-right", [](const SpecPtr& s, const Inputs& in) { return corollary(s, in, D::Right, true); }},
      {"corollary-left", [](const SpecPtr& s, const Inputs& in) { return corollary(s, in, D::Left, true); }},
      {"corollary-right-plain", [](const SpecPtr& s, const Inputs& in) { return corollary(s, in, D::Right, false); }},
      {"bar-commute-right", [](const SpecPtr& s, const Inputs& in) { return corollary(s, in, D::BarRight, true); }},
      {"bar-commute-left", [](const SpecPtr& s, const Inputs& in) { return corollary(s, in, D::BarLeft, true); }},
      {"serre-d1", [](const SpecPtr& s, const Inputs& in) { return serre_operator(s, in, D::Left, false); }},
      {"serre-d2", [](const SpecPtr& s, const Inputs& in) { return serre_operator(s, in, D::Right, true); }},
      {"serre-dsk1", [](const SpecPtr& s, const Inputs& in) { return serre_operator(s, in, D::BarRight, true); }},
      {"serre-dsk2", [](const SpecPtr& s, const Inputs& in) { return serre_operator(s, in, D::BarLeft, false); }},
  };
}

namespace {

std::string module_relation(const SpecPtr& spec, const Inputs& in) {
  need(in, 2);
  Relation rel = relation(spec, in[0]);
  Element x = parse_plus(spec, in[1]);
  std::string out;
  for (const auto& part : rel.parts) {
    Element sum(spec);
    for (const auto& [c, w] : part) sum += c * module_action(spec, w, x);
    std::string r = residual(sum);
    if (r == "0") continue;
    if (!out.empty()) out += " ; ";
    out += r;
  }
  return out.empty() ? "0" : out;
}

std::string module_unit(const SpecPtr& spec, const Inputs& in) {
  need(in, 1);
  Element h = parse_element(spec, in[0]);
  Element one(spec, Coeff(1));
  return residual(module_action(h, one) - counit(h) * one);
}

std::string module_product(const SpecPtr& spec, const Inputs& in) {
  need(in, 3);
  Element h = parse_element(spec, in[0]);
  Element x = parse_plus(spec, in[1]), y = parse_plus(spec, in[2]);
  Element rhs(spec);
  TensorElement delta = coproduct(h);
  for (const auto& [t, c] : delta.terms())
    rhs += c * (module_action(Element(spec, t[0]), x) * module_action(Element(spec, t[1]), y));
  return residual(module_action(h, x * y) - rhs);
}

}  // namespace

std::vector<Property> module_algebra_properties() {
  return {{"module-relation", module_relation}, {"module-unit", module_unit}, {"module-product", module_product}};
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

const Property& find(const std::vector<Property>& ps, const std::string& name) {
  for (const auto& p : ps)
    if (p.name == name) return p;
  throw std::logic_error("unregistered property " + name);
}

struct Basis {
  std::vector<std::vector<std::string>> by_height;  // index = height
};

Basis basis_strings(const SpecPtr& spec, int deg_bound) {
  Basis b;
  b.by_height.resize(static_cast<std::size_t>(deg_bound) + 1);
  b.by_height[0].push_back("1");
  for (int h = 1; h <= deg_bound; ++h)
    for (const auto& beta : degrees_of_height(spec->rank(), h))
      for (const auto& w : enumerate_basis(spec, beta)) b.by_height[h].push_back(format_element(Element::e_word(spec, w)));
  return b;
}

std::string label(int i) { return std::to_string(i + 1); }

}  // namespace

Report verify_derivation_identities(const SpecPtr& spec, int deg_bound) {
  if (deg_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  Report rep;
  rep.check = "derivations";
  auto props = derivation_properties();
  int n = spec->rank();
  Basis b = basis_strings(spec, deg_bound);
  auto run = [&](const char* name, Inputs in) { run_property(rep, find(props, name), spec, std::move(in)); };

  for (int h = 1; h <= deg_bound; ++h)
    for (const auto& x : b.by_height[h])
      for (int i = 0; i < n; ++i) {
        for (auto tag : {Derivation::RightHat, Derivation::LeftHat, Derivation::BarRight, Derivation::BarLeft})
          run("extraction-vs-leibniz", {derivation_tag_name(tag), label(i), x});
        run("lemma-v", {label(i), x});
        for (int j = 0; j < n; ++j) {
          run("commute", {label(i), label(j), x});
          if (i != j)
            for (const char* p : {"serre-d1", "serre-d2", "serre-dsk1", "serre-dsk2"}) run(p, {label(i), label(j), x});
        }
      }
  for (int h = 1; h <= deg_bound; ++h)
    for (int h2 = 1; h + h2 <= deg_bound; ++h2)
      for (const auto& x : b.by_height[h])
        for (const auto& y : b.by_height[h2])
          for (int i = 0; i < n; ++i)
            for (const char* p : {"leibniz-right", "leibniz-left", "leibniz-bar-right", "leibniz-bar-left"})
              run(p, {label(i), x, y});
  for (int h = 0; h < deg_bound; ++h)
    for (const auto& x : b.by_height[h])
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (const char* p : {"corollary-right", "corollary-left", "bar-commute-right", "bar-commute-left"})
            run(p, {label(i), label(j), x});
  return rep;
}

Report verify_module_algebra(const SpecPtr& spec, int deg_bound, int trials, std::uint64_t seed) {
  if (deg_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  Report rep;
  rep.check = "module-algebra";
  auto props = module_algebra_properties();
  int n = spec->rank();
  Basis b = basis_strings(spec, deg_bound);
  auto run = [&](const char* name, Inputs in) { run_property(rep, find(props, name), spec, std::move(in)); };

  auto rels = defining_relations(spec);
  for (int h = 0; h <= deg_bound; ++h)
    for (const auto& x : b.by_height[h])
      for (const auto& r : rels) run("module-relation", {r.id, x});

  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
  auto random_h = [&]() {
    auto kind = pick(4);
    int i = static_cast<int>(pick(static_cast<std::size_t>(n)));
    if (kind == 0) return format_element(Element::e(spec, i));
    if (kind == 1) return format_element(Element::f(spec, i));
    RootVector mu(n);
    for (auto& v : mu) v = static_cast<int>(pick(5)) - 2;
    return format_element(kind == 2 ? Element::omega(spec, mu) : Element::omega_prime(spec, mu));
  };
  auto random_x = [&](int h) {
    const auto& v = b.by_height[h];
    return v[pick(v.size())];
  };
  for (int t = 0; t < trials; ++t) {
    std::string h = random_h();
    run("module-unit", {h});
    int hx = 1, hy = 0;
    if (deg_bound > 1) {
      hx = 1 + static_cast<int>(pick(static_cast<std::size_t>(deg_bound - 1)));
      hy = 1 + static_cast<int>(pick(static_cast<std::size_t>(deg_bound - hx)));
    }
    run("module-product", {h, random_x(hx), random_x(hy)});
  }
  return rep;
}

}  // namespace qtwist
