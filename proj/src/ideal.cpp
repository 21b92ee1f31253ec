#include "vvkit/ideal.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace vvkit {

struct Ideal::Cache {
  std::mutex mu;
  std::map<std::string, std::shared_future<GroebnerBasis>> full;
  // Degrevlex truncated bases keyed by their degree bound.
  std::map<int, std::shared_future<GroebnerBasis>> truncated;
};

namespace {

template <class Map, class Key, class Fn>
GroebnerBasis get_or_compute(std::mutex& mu, Map& map, const Key& key, Fn&& compute) {
  std::promise<GroebnerBasis> promise;
  std::shared_future<GroebnerBasis> pending;
  {
    std::lock_guard lock(mu);
    auto it = map.find(key);
    if (it != map.end()) {
      pending = it->second;
    } else {
      map.emplace(key, promise.get_future().share());
    }
  }
  if (pending.valid()) return pending.get();
  try {
    auto basis = compute();
    promise.set_value(basis);
    return basis;
  } catch (...) {
    promise.set_exception(std::current_exception());
    std::lock_guard lock(mu);
    map.erase(key);
    throw;
  }
}

std::string order_key(const MonomialOrder& order) {
  std::string k = order.name();
  for (int w : order.weights()) k += "," + std::to_string(w);
  return k;
}

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("ideals live in different rings");
}

// Ring with one extra leading variable whose name does not clash.
RingPtr with_leading_variable(const RingPtr& ring, std::string* name) {
  std::string t = "_t";
  while (ring->index_of(t)) t += "_";
  std::vector<std::string> vars = {t};
  vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
  if (name) *name = t;
  return make_ring(std::move(vars));
}

std::vector<std::size_t> shifted_map(std::size_t n) {
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i + 1;
  return map;
}

// Drops the leading variable of elements free of it.
std::vector<Polynomial> strip_leading(const std::vector<Polynomial>& elems, const RingPtr& target) {
  std::vector<Polynomial> out;
  for (const auto& e : elems) {
    bool free = std::all_of(e.terms().begin(), e.terms().end(),
                            [](const Term& t) { return t.monomial[0] == 0; });
    if (!free) continue;
    std::vector<Term> terms;
    for (const auto& t : e.terms()) {
      Monomial m(target->arity());
      for (std::size_t i = 0; i < target->arity(); ++i) m.set(i, t.monomial[i + 1]);
      terms.push_back({m, t.coeff});
    }
    out.push_back(Polynomial::from_terms(target, std::move(terms)));
  }
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw std::invalid_argument("ideal needs a ring");
  for (auto& g : generators) {
    if (!g.ring() || !same_ring(g.ring(), ring_)) {
      throw std::invalid_argument("generator lives in a different ring");
    }
    if (g.is_zero()) continue;
    homogeneous_ = homogeneous_ && g.is_homogeneous();
    gens_.push_back(std::move(g));
  }
}

Ideal::Ideal(RingPtr ring, std::initializer_list<std::string_view> generators)
    : Ideal(ring, [&] {
        std::vector<Polynomial> g;
        for (auto s : generators) g.push_back(parse_polynomial(s, ring));
        return g;
      }()) {}

int Ideal::max_generator_degree() const {
  int d = -1;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

GroebnerBasis Ideal::groebner_basis(const MonomialOrder& order) const {
  if (is_zero()) throw std::domain_error("Gröbner basis of the zero ideal");
  return get_or_compute(cache_->mu, cache_->full, order_key(order),
                        [&] { return reduced_groebner_basis(gens_, order); });
}

GroebnerBasis Ideal::groebner_basis_upto(int degree) const {
  if (is_zero()) throw std::domain_error("Gröbner basis of the zero ideal");
  if (!homogeneous_) throw std::invalid_argument("truncated basis of an inhomogeneous ideal");
  const std::string full_key = order_key(MonomialOrder::degrevlex());
  {
    std::unique_lock lock(cache_->mu);
    auto it = cache_->full.find(full_key);
    if (it != cache_->full.end()) {
      auto fut = it->second;
      lock.unlock();
      return fut.get();
    }
    auto jt = cache_->truncated.lower_bound(degree);
    if (jt != cache_->truncated.end()) {
      auto fut = jt->second;
      lock.unlock();
      return fut.get();
    }
  }
  return get_or_compute(cache_->mu, cache_->truncated, degree, [&] {
    GroebnerOptions opt;
    opt.degree_bound = degree;
    return reduced_groebner_basis(gens_, MonomialOrder::degrevlex(), opt);
  });
}

void Ideal::seed_truncated(const GroebnerBasis& basis) const {
  if (!basis.truncated_at()) {
    std::lock_guard lock(cache_->mu);
    std::promise<GroebnerBasis> p;
    p.set_value(basis);
    cache_->full.emplace(order_key(basis.order()), p.get_future().share());
    return;
  }
  std::lock_guard lock(cache_->mu);
  std::promise<GroebnerBasis> p;
  p.set_value(basis);
  cache_->truncated.emplace(*basis.truncated_at(), p.get_future().share());
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

namespace {

// Deduplicates up to scalars, keeping the first occurrence.
std::vector<Polynomial> dedupe(std::vector<Polynomial> gens) {
  std::set<std::string> seen;
  std::vector<Polynomial> out;
  const auto order = MonomialOrder::degrevlex();
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    g = g.monic(order);
    if (seen.insert(g.to_string()).second) out.push_back(std::move(g));
  }
  return out;
}

Ideal trimmed(const RingPtr& ring, std::vector<Polynomial> gens) {
  gens = dedupe(std::move(gens));
  bool homogeneous = std::all_of(gens.begin(), gens.end(),
                                 [](const Polynomial& g) { return g.is_homogeneous(); });
  if (!homogeneous || gens.empty()) return Ideal(ring, std::move(gens));
  // Lower degrees first so the selection keeps the low-degree generators.
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Polynomial& x, const Polynomial& y) { return x.degree() < y.degree(); });
  int top = 0;
  for (const auto& g : gens) top = std::max(top, g.degree());
  GroebnerOptions opt;
  opt.degree_bound = top;
  auto sel = select_minimal_generators({}, gens, MonomialOrder::degrevlex(), opt);
  std::vector<Polynomial> kept;
  for (auto i : sel.selected) kept.push_back(gens[i]);
  Ideal out(ring, std::move(kept));
  out.seed_truncated(sel.basis);
  return out;
}

}  // namespace

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return trimmed(a.ring(), std::move(gens));
}

Ideal power(const Ideal& a, int t) {
  if (t < 1) throw std::invalid_argument("ideal power needs t >= 1");
  Ideal base = a.is_homogeneous() ? trimmed(a.ring(), a.generators()) : a;
  Ideal result = base;
  for (int k = 2; k <= t; ++k) result = product(result, base);
  return result;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring(), std::vector<Polynomial>{});
  std::string tname;
  const RingPtr big = with_leading_variable(a.ring(), &tname);
  const auto map = shifted_map(a.ring()->arity());
  const Polynomial t = Polynomial::variable(big, 0);
  const Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * map_variables(f, big, map));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * map_variables(g, big, map));
  GroebnerOptions opt;
  if (a.is_homogeneous() && b.is_homogeneous()) {
    opt.grading.assign(big->arity(), 1);
    opt.grading[0] = 0;
  }
  const auto gb = reduced_groebner_basis(gens, MonomialOrder::block(1), opt);
  Ideal out(a.ring(), strip_leading(gb.elements(), a.ring()));
  return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (!same_ring(f.ring(), g.ring())) throw std::invalid_argument("polynomials live in different rings");
  const auto order = MonomialOrder::degrevlex();
  const Monomial lg = g.leading_monomial(order);
  const Rational cg = g.leading_coefficient(order);
  Polynomial rem = f;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Monomial lf = rem.leading_monomial(order);
    if (!lg.divides(lf)) return std::nullopt;
    const Monomial m = lf / lg;
    const Rational c = rem.leading_coefficient(order) / cg;
    quot.push_back({m, c});
    rem -= g.times_monomial(m) * c;
  }
  return Polynomial::from_terms(f.ring(), std::move(quot));
}

Ideal quotient(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw std::invalid_argument("quotient by the zero ideal");
  std::optional<Ideal> result;
  for (const auto& g : b.generators()) {
    const Ideal principal(a.ring(), std::vector<Polynomial>{g});
    const Ideal meet = intersect(a, principal);
    std::vector<Polynomial> gens;
    for (const auto& h : meet.generators()) {
      auto q = divide_exact(h, g);
      if (!q) throw std::logic_error("intersection element not divisible by the generator");
      gens.push_back(std::move(*q));
    }
    Ideal part(a.ring(), std::move(gens));
    result = result ? intersect(*result, part) : part;
  }
  return *result;
}

Ideal eliminate(const Ideal& a, const std::vector<std::string>& drop) {
  const auto& ring = a.ring();
  std::vector<bool> dropped(ring->arity(), false);
  for (const auto& name : drop) {
    auto i = ring->index_of(name);
    if (!i) throw std::invalid_argument("unknown variable: " + name);
    dropped[*i] = true;
  }
  const auto k = static_cast<std::size_t>(std::count(dropped.begin(), dropped.end(), true));
  if (k == ring->arity()) throw std::invalid_argument("cannot eliminate every variable");
  std::vector<std::string> kept_names;
  for (std::size_t i = 0; i < ring->arity(); ++i) {
    if (!dropped[i]) kept_names.push_back(ring->name(i));
  }
  const RingPtr small = make_ring(kept_names);
  if (k == 0) return Ideal(small, [&] {
      std::vector<Polynomial> g;
      for (const auto& f : a.generators()) g.push_back(embed(f, small));
      return g;
    }());
  if (a.is_zero()) return Ideal(small, std::vector<Polynomial>{});
  // Dropped variables first, each block in the original relative order.
  std::vector<std::string> perm_names;
  std::vector<std::size_t> map(ring->arity());
  for (std::size_t i = 0; i < ring->arity(); ++i) {
    if (dropped[i]) {
      map[i] = perm_names.size();
      perm_names.push_back(ring->name(i));
    }
  }
  for (std::size_t i = 0; i < ring->arity(); ++i) {
    if (!dropped[i]) {
      map[i] = perm_names.size();
      perm_names.push_back(ring->name(i));
    }
  }
  const RingPtr perm = make_ring(perm_names);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(map_variables(f, perm, map));
  const auto gb = reduced_groebner_basis(gens, MonomialOrder::block(k));
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements()) {
    bool free = true;
    for (const auto& t : e.terms()) {
      for (std::size_t i = 0; i < k; ++i) free = free && t.monomial[i] == 0;
    }
    if (!free) continue;
    std::vector<Term> terms;
    for (const auto& t : e.terms()) {
      Monomial m(small->arity());
      for (std::size_t i = 0; i < small->arity(); ++i) m.set(i, t.monomial[i + k]);
      terms.push_back({m, t.coeff});
    }
    out.push_back(Polynomial::from_terms(small, std::move(terms)));
  }
  return Ideal(small, std::move(out));
}

bool contains(const Ideal& a, const Polynomial& f) {
  if (!same_ring(a.ring(), f.ring())) throw std::invalid_argument("polynomial lives in a different ring");
  if (f.is_zero()) return true;
  if (a.is_zero()) return false;
  if (a.is_homogeneous() && f.is_homogeneous()) {
    return a.groebner_basis_upto(f.degree()).reduces_to_zero(f);
  }
  if (a.is_homogeneous()) {
    // Membership of a sum of homogeneous pieces splits degree by degree.
    for (int d = 0; d <= f.degree(); ++d) {
      auto part = f.homogeneous_part(d);
      if (!part.is_zero() && !a.groebner_basis_upto(f.degree()).reduces_to_zero(part)) return false;
    }
    return true;
  }
  return a.groebner_basis().reduces_to_zero(f);
}

bool is_subset(const Ideal& inner, const Ideal& outer) {
  require_same_ring(inner, outer);
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Polynomial& g) { return contains(outer, g); });
}

bool equals(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.groebner_basis().elements() == b.groebner_basis().elements();
}

std::vector<Polynomial> minimal_generators(const Ideal& a) {
  if (!a.is_homogeneous()) throw std::invalid_argument("minimal generators need a homogeneous ideal");
  if (a.is_zero()) return {};
  std::vector<Polynomial> gens = a.generators();
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Polynomial& x, const Polynomial& y) { return x.degree() < y.degree(); });
  GroebnerOptions opt;
  opt.degree_bound = a.max_generator_degree();
  const auto sel = select_minimal_generators({}, gens, MonomialOrder::degrevlex(), opt);
  std::vector<Polynomial> out;
  for (auto i : sel.selected) out.push_back(gens[i]);
  return out;
}

std::optional<int> min_pure_power(const Ideal& a, std::string_view var) {
  auto i = a.ring()->index_of(var);
  if (!i) throw std::invalid_argument("unknown variable: " + std::string(var));
  if (a.is_zero()) return std::nullopt;
  const auto gb = a.groebner_basis();
  int top = 0;
  for (const auto& e : gb.elements()) top = std::max(top, e.degree());
  const int n = static_cast<int>(a.ring()->arity());
  const int bound = std::max(top + n, n * top);
  Monomial m(a.ring()->arity());
  for (int e = 1; e <= bound; ++e) {
    m.set(*i, e);
    if (gb.reduces_to_zero(Polynomial::from_monomial(a.ring(), m))) return e;
  }
  return std::nullopt;
}

MonomialIdeal initial_ideal(const Ideal& a, const MonomialOrder& order) {
  if (a.is_zero()) throw std::domain_error("initial ideal of the zero ideal");
  return a.groebner_basis(order).initial_ideal();
}

Ideal maximal_ideal_power(const RingPtr& ring, int e) {
  std::vector<Polynomial> gens;
  for (const auto& m : monomials_of_degree(ring->arity(), e)) {
    gens.push_back(Polynomial::from_monomial(ring, m));
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace vvkit
