#include "vvkit/groebner.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <set>
#include <stdexcept>

namespace vvkit {

MonomialIdeal::MonomialIdeal(std::size_t arity, std::vector<Monomial> generators) : arity_(arity) {
  for (const auto& m : generators) {
    if (m.arity() != arity) throw std::invalid_argument("monomial arity mismatch");
  }
  std::sort(generators.begin(), generators.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  for (const auto& m : generators) {
    const bool redundant =
        std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) gens_.push_back(m);
  }
  const auto ord = MonomialOrder::degrevlex();
  std::sort(gens_.begin(), gens_.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

namespace detail {

template <class C>
struct ETerm {
  Monomial m;
  C c;
};

template <class C>
using EPoly = std::vector<ETerm<C>>;

struct IntegerField {
  using C = BigInt;
  static constexpr bool kMonic = false;
  static bool is_zero(const C& c) { return sgn(c) == 0; }
};

struct PrimeField {
  using C = ModP;
  static constexpr bool kMonic = true;
  static bool is_zero(const C& c) { return c.is_zero(); }
};

template <class C>
struct Elem {
  EPoly<C> poly;
  Monomial lead;
  std::uint64_t mask = 0;
  int sugar = 0;
  bool active = true;
};

template <class C>
using Reducers = std::vector<const Elem<C>*>;

// out = alpha * pshift * p[ps..] - beta * gshift * g[gs..], merged in order.
template <class F>
void combine(typename F::C const* alpha, const EPoly<typename F::C>& p, std::size_t ps,
             const Monomial* pshift, const typename F::C& beta, const EPoly<typename F::C>& g,
             std::size_t gs, const Monomial* gshift, const MonomialOrder& ord,
             EPoly<typename F::C>& out) {
  using C = typename F::C;
  out.clear();
  out.reserve((p.size() - ps) + (g.size() - gs));
  std::size_t i = ps, j = gs;
  Monomial pm, gm;
  auto load_p = [&] {
    if (i < p.size()) pm = pshift ? p[i].m * *pshift : p[i].m;
  };
  auto load_g = [&] {
    if (j < g.size()) gm = gshift ? g[j].m * *gshift : g[j].m;
  };
  load_p();
  load_g();
  while (i < p.size() || j < g.size()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == p.size()) {
      c = std::strong_ordering::less;
    } else if (j == g.size()) {
      c = std::strong_ordering::greater;
    } else {
      c = ord.compare(pm, gm);
    }
    if (c > 0) {
      out.push_back({pm, alpha ? C(*alpha * p[i].c) : p[i].c});
      ++i;
      load_p();
    } else if (c < 0) {
      out.push_back({gm, C(-(beta * g[j].c))});
      ++j;
      load_g();
    } else {
      C v = alpha ? C(*alpha * p[i].c - beta * g[j].c) : C(p[i].c - beta * g[j].c);
      if (!F::is_zero(v)) out.push_back({pm, std::move(v)});
      ++i;
      ++j;
      load_p();
      load_g();
    }
  }
}

inline BigInt content(const EPoly<BigInt>& p, std::size_t from, BigInt g = 0) {
  for (std::size_t i = from; i < p.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p[i].c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline void divide_exact(EPoly<BigInt>& p, std::size_t from, const BigInt& d) {
  for (std::size_t i = from; i < p.size(); ++i) {
    mpz_divexact(p[i].c.get_mpz_t(), p[i].c.get_mpz_t(), d.get_mpz_t());
  }
}

// Makes p primitive with positive leading coefficient; returns the factor
// that was divided out (signed).
inline BigInt make_primitive(EPoly<BigInt>& p) {
  if (p.empty()) return 1;
  BigInt c = content(p, 0);
  if (sgn(p.front().c) < 0) c = -c;
  if (c != 1) divide_exact(p, 0, c);
  return c;
}

inline void make_monic(EPoly<ModP>& p) {
  if (p.empty()) return;
  const ModP inv = p.front().c.inverse();
  for (auto& t : p) t.c *= inv;
}

template <class C>
const Elem<C>* find_reducer(const Reducers<C>& reducers, const Monomial& m) {
  const std::uint64_t mask = m.divisibility_mask();
  const Elem<C>* best = nullptr;
  for (const auto* e : reducers) {
    if ((e->mask & ~mask) != 0 || !e->lead.divides(m)) continue;
    if (!best || e->poly.size() < best->poly.size()) best = e;
  }
  return best;
}

// Reduces p modulo the reducers. With `full` the tail is reduced too,
// otherwise reduction stops at the first irreducible leading term. For the
// integer field, `mult` (when given) is multiplied by the overall scalar:
// result = mult * p modulo the ideal.
template <class F>
EPoly<typename F::C> reduce(EPoly<typename F::C> p, const Reducers<typename F::C>& reducers,
                            const MonomialOrder& ord, bool full, Rational* mult = nullptr) {
  using C = typename F::C;
  EPoly<C> r;
  EPoly<C> scratch;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Elem<C>* g = find_reducer(reducers, p[pos].m);
    if (!g) {
      if (!full) {
        r.insert(r.end(), std::make_move_iterator(p.begin() + pos),
                 std::make_move_iterator(p.end()));
        break;
      }
      r.push_back(std::move(p[pos]));
      ++pos;
      continue;
    }
    const Monomial shift = p[pos].m / g->lead;
    if constexpr (F::kMonic) {
      combine<F>(nullptr, p, pos + 1, nullptr, p[pos].c, g->poly, 1, &shift, ord, scratch);
    } else {
      BigInt gc;
      mpz_gcd(gc.get_mpz_t(), p[pos].c.get_mpz_t(), g->poly.front().c.get_mpz_t());
      BigInt alpha, beta;
      mpz_divexact(alpha.get_mpz_t(), g->poly.front().c.get_mpz_t(), gc.get_mpz_t());
      mpz_divexact(beta.get_mpz_t(), p[pos].c.get_mpz_t(), gc.get_mpz_t());
      if (alpha == 1) {
        combine<F>(nullptr, p, pos + 1, nullptr, beta, g->poly, 1, &shift, ord, scratch);
      } else {
        combine<F>(&alpha, p, pos + 1, nullptr, beta, g->poly, 1, &shift, ord, scratch);
        for (auto& t : r) t.c *= alpha;
        if (mult) *mult *= alpha;
      }
      // Keep coefficients small by removing the common content.
      if (!r.empty() || !scratch.empty()) {
        BigInt c = content(r, 0);
        if (c != 1) c = content(scratch, 0, c);
        if (c > 1) {
          divide_exact(r, 0, c);
          divide_exact(scratch, 0, c);
          if (mult) *mult /= c;
        }
      }
    }
    std::swap(p, scratch);
    pos = 0;
  }
  return r;
}

template <class F>
class Engine {
 public:
  using C = typename F::C;

  struct Input {
    EPoly<C> poly;
    int degree = 0;
    bool tracked = false;
    std::size_t index = 0;
  };

  Engine(MonomialOrder order, std::vector<int> grading)
      : order_(std::move(order)), grading_(std::move(grading)), pairs_(PairLess{&order_}) {}

  int wdeg(const Monomial& m) const { return m.weighted_degree(grading_); }

  /// Returns indices of tracked inputs that were accepted.
  std::vector<std::size_t> run(std::vector<Input> inputs, std::optional<int> bound) {
    std::stable_sort(inputs.begin(), inputs.end(), [](const Input& a, const Input& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (a.tracked != b.tracked) return !a.tracked;
      return a.index < b.index;
    });
    std::vector<std::size_t> selected;
    std::size_t next = 0;
    while (!unit_) {
      const int din = next < inputs.size() ? inputs[next].degree : INT_MAX;
      const int dp = pairs_.empty() ? INT_MAX : pairs_.begin()->sugar;
      if (din == INT_MAX && dp == INT_MAX) break;
      const int d = std::min(din, dp);
      if (bound && d > *bound) break;
      if (dp <= din) {
        Pair pr = *pairs_.begin();
        pairs_.erase(pairs_.begin());
        EPoly<C> s = spoly(elems_[pr.i], elems_[pr.j], pr.lcm);
        EPoly<C> r = reduce<F>(std::move(s), reducers_, order_, true);
        if (!r.empty()) insert(std::move(r), pr.sugar);
      } else {
        Input& in = inputs[next++];
        EPoly<C> r = reduce<F>(std::move(in.poly), reducers_, order_, true);
        if (!r.empty()) {
          insert(std::move(r), in.degree);
          if (in.tracked) selected.push_back(in.index);
        }
      }
    }
    std::sort(selected.begin(), selected.end());
    return selected;
  }

  /// Reduced basis: interreduced, normalized, sorted by lead ascending.
  std::vector<Elem<C>> reduced_basis() const {
    std::vector<const Elem<C>*> act;
    if (unit_) {
      Elem<C> one;
      one.poly.push_back({Monomial(arity_), C(1)});
      one.lead = one.poly.front().m;
      return {one};
    }
    for (const auto& e : elems_) {
      if (e.active) act.push_back(&e);
    }
    std::sort(act.begin(), act.end(),
              [&](const Elem<C>* a, const Elem<C>* b) { return order_.less(a->lead, b->lead); });
    std::deque<Elem<C>> out;
    Reducers<C> done;
    for (const auto* e : act) {
      Elem<C> x = *e;
      if constexpr (F::kMonic) {
        // The lead is irreducible by smaller leads; only the tail changes.
        EPoly<C> tail(x.poly.begin() + 1, x.poly.end());
        tail = reduce<F>(std::move(tail), done, order_, true);
        x.poly.resize(1);
        x.poly.insert(x.poly.end(), tail.begin(), tail.end());
        make_monic(x.poly);
      } else {
        x.poly = reduce_tail(std::move(x.poly), done);
        make_primitive(x.poly);
      }
      out.push_back(std::move(x));
      done.push_back(&out.back());
    }
    return {out.begin(), out.end()};
  }

  bool unit() const { return unit_; }
  void set_arity(std::size_t n) { arity_ = n; }

 private:
  struct Pair {
    int sugar;
    Monomial lcm;
    std::size_t i, j;
  };
  struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      if (auto c = ord->compare(a.lcm, b.lcm); c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  // Reduces everything but the leading term. For the integer field the
  // lead coefficient is rescaled to stay in step with the tail.
  EPoly<C> reduce_tail(EPoly<C> p, const Reducers<C>& red) const {
    EPoly<C> rest(std::make_move_iterator(p.begin() + 1), std::make_move_iterator(p.end()));
    p.resize(1);
    if constexpr (F::kMonic) {
      rest = reduce<F>(std::move(rest), red, order_, true);
    } else {
      Rational mult = 1;
      rest = reduce<F>(std::move(rest), red, order_, true, &mult);
      // rest = mult * tail modulo the ideal.
      const Rational lc = Rational(p.front().c) * mult;
      p.front().c = lc.get_num();
      const BigInt den = lc.get_den();
      if (den != 1) {
        for (auto& t : rest) t.c *= den;
      }
    }
    p.insert(p.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
    return p;
  }

  static bool tail_divisible(const Elem<C>& e, const Elem<C>& h) {
    for (std::size_t k = 1; k < e.poly.size(); ++k) {
      if (h.lead.divides(e.poly[k].m)) return true;
    }
    return false;
  }

  EPoly<C> spoly(const Elem<C>& f, const Elem<C>& g, const Monomial& l) const {
    const Monomial tf = l / f.lead, tg = l / g.lead;
    EPoly<C> out;
    if constexpr (F::kMonic) {
      const C one(1);
      combine<F>(nullptr, f.poly, 1, &tf, one, g.poly, 1, &tg, order_, out);
    } else {
      BigInt gc;
      mpz_gcd(gc.get_mpz_t(), f.poly.front().c.get_mpz_t(), g.poly.front().c.get_mpz_t());
      BigInt alpha, beta;
      mpz_divexact(alpha.get_mpz_t(), g.poly.front().c.get_mpz_t(), gc.get_mpz_t());
      mpz_divexact(beta.get_mpz_t(), f.poly.front().c.get_mpz_t(), gc.get_mpz_t());
      combine<F>(&alpha, f.poly, 1, &tf, beta, g.poly, 1, &tg, order_, out);
      make_primitive(out);
    }
    return out;
  }

  void insert(EPoly<C> p, int sugar) {
    if constexpr (F::kMonic) {
      make_monic(p);
    } else {
      make_primitive(p);
    }
    Elem<C> h;
    h.lead = p.front().m;
    h.mask = h.lead.divisibility_mask();
    h.sugar = std::max(sugar, wdeg(h.lead));
    h.poly = std::move(p);
    if (h.lead.is_one()) {
      unit_ = true;
      return;
    }
    const std::size_t hi = elems_.size();
    const Monomial& hl = h.lead;

    // Gebauer–Möller: new pairs (g, h).
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!elems_[g].active) continue;
      cands.push_back({g, lcm(elems_[g].lead, hl), elems_[g].lead.coprime(hl)});
    }
    // Chain criterion among the new pairs: drop (g1, h) when some other
    // (g2, h) has an lcm properly dividing it, or an equal lcm and is
    // kept in its place (the earliest one survives).
    for (std::size_t a = 0; a < cands.size(); ++a) {
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].alive) continue;
        if (!cands[b].lcm.divides(cands[a].lcm)) continue;
        if (cands[b].lcm == cands[a].lcm) {
          // Equal lcm: keep one. Prefer a coprime pair so the pair is
          // discarded by the first criterion, else the earliest.
          if (cands[a].coprime && !cands[b].coprime) continue;
          if (cands[a].coprime == cands[b].coprime && a < b) continue;
        }
        cands[a].alive = false;
        break;
      }
    }
    // Old pairs that h makes redundant.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->lcm;
      if (hl.divides(l) && lcm(elems_[it->i].lead, hl) != l && lcm(elems_[it->j].lead, hl) != l) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    for (const auto& c : cands) {
      if (!c.alive || c.coprime) continue;
      const auto& g = elems_[c.g];
      const int s = std::max(g.sugar - wdeg(g.lead), h.sugar - wdeg(hl)) + wdeg(c.lcm);
      pairs_.insert(Pair{s, c.lcm, c.g, hi});
    }
    // Elements whose lead is now redundant stop acting as reducers.
    for (auto& e : elems_) {
      if (e.active && hl.divides(e.lead)) e.active = false;
    }
    elems_.push_back(std::move(h));
    reducers_.clear();
    for (const auto& e : elems_) {
      if (e.active) reducers_.push_back(&e);
    }
    // Keep reducer tails reduced; unreduced tails make coefficients explode.
    const Elem<C>& added = elems_.back();
    for (std::size_t k = 0; k + 1 < elems_.size(); ++k) {
      auto& e = elems_[k];
      if (!e.active || !tail_divisible(e, added)) continue;
      e.poly = reduce_tail(std::move(e.poly), reducers_);
      if constexpr (F::kMonic) {
        make_monic(e.poly);
      } else {
        make_primitive(e.poly);
      }
    }
  }

  MonomialOrder order_;
  std::vector<int> grading_;
  std::deque<Elem<C>> elems_;
  Reducers<C> reducers_;
  std::set<Pair, PairLess> pairs_;
  bool unit_ = false;
  std::size_t arity_ = 0;
};

EPoly<BigInt> to_integer(const Polynomial& p, const MonomialOrder& ord, BigInt* denominator = nullptr) {
  BigInt den = 1;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  EPoly<BigInt> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    BigInt c = t.coeff.get_num() * (den / t.coeff.get_den());
    out.push_back({t.monomial, std::move(c)});
  }
  std::sort(out.begin(), out.end(),
            [&](const ETerm<BigInt>& a, const ETerm<BigInt>& b) { return ord.greater(a.m, b.m); });
  if (denominator) *denominator = den;
  return out;
}

EPoly<ModP> to_modular(const Polynomial& p, const MonomialOrder& ord) {
  EPoly<ModP> out;
  for (const auto& t : p.terms()) {
    ModP c = ModP::from(t.coeff);
    if (!c.is_zero()) out.push_back({t.monomial, c});
  }
  std::sort(out.begin(), out.end(),
            [&](const ETerm<ModP>& a, const ETerm<ModP>& b) { return ord.greater(a.m, b.m); });
  return out;
}

struct GroebnerData {
  RingPtr ring;
  MonomialOrder order;
  std::vector<int> grading;
  std::optional<int> truncated;
  std::vector<Polynomial> elements;
  std::vector<Monomial> leads;
  std::deque<Elem<BigInt>> integer_elems;
  Reducers<BigInt> reducers;
};

}  // namespace detail

GroebnerBasis make_groebner_basis(std::shared_ptr<const detail::GroebnerData> data) {
  GroebnerBasis g;
  g.data_ = std::move(data);
  return g;
}

namespace {

using detail::EPoly;
using detail::Elem;
using detail::Engine;
using detail::IntegerField;
using detail::PrimeField;

void check_inputs(std::span<const Polynomial> gens, const RingPtr& ring) {
  for (const auto& g : gens) {
    if (!g.ring() || !same_ring(g.ring(), ring)) {
      throw std::invalid_argument("generators live in different rings");
    }
  }
}

void check_grading(const std::vector<int>& grading, std::size_t arity) {
  if (grading.empty()) return;
  if (grading.size() != arity) throw std::invalid_argument("grading has wrong length");
  for (int w : grading) {
    if (w < 0) throw std::invalid_argument("grading weights must be nonnegative");
  }
}

struct RunOutput {
  GroebnerBasis basis;
  std::vector<std::size_t> selected;
};

RunOutput run_integer(const RingPtr& ring, std::span<const Polynomial> background,
                      std::span<const Polynomial> tracked, const MonomialOrder& order,
                      const GroebnerOptions& options, bool require_homogeneous) {
  check_inputs(background, ring);
  check_inputs(tracked, ring);
  check_grading(options.grading, ring->arity());
  bool homogeneous = true;
  for (auto span : {background, tracked}) {
    for (const auto& g : span) homogeneous = homogeneous && g.is_homogeneous(options.grading);
  }
  if (!homogeneous && (require_homogeneous || options.degree_bound)) {
    throw std::invalid_argument("input is not homogeneous for the requested grading");
  }
  Engine<IntegerField> engine(order, options.grading);
  engine.set_arity(ring->arity());
  std::vector<Engine<IntegerField>::Input> inputs;
  auto add = [&](std::span<const Polynomial> span, bool tr) {
    for (std::size_t i = 0; i < span.size(); ++i) {
      if (span[i].is_zero()) continue;
      Engine<IntegerField>::Input in;
      in.poly = detail::to_integer(span[i], order);
      detail::make_primitive(in.poly);
      in.degree = span[i].weighted_degree(options.grading);
      in.tracked = tr;
      in.index = i;
      inputs.push_back(std::move(in));
    }
  };
  add(background, false);
  add(tracked, true);
  auto selected = engine.run(std::move(inputs), options.degree_bound);

  auto data = std::make_shared<detail::GroebnerData>();
  data->ring = ring;
  data->order = order;
  data->grading = options.grading;
  data->truncated = options.degree_bound;
  for (auto& e : engine.reduced_basis()) {
    std::vector<Term> terms;
    terms.reserve(e.poly.size());
    const Rational lc(e.poly.front().c);
    for (const auto& t : e.poly) terms.push_back({t.m, Rational(t.c) / lc});
    data->elements.push_back(Polynomial::from_terms(ring, std::move(terms)));
    data->leads.push_back(e.lead);
    e.mask = e.lead.divisibility_mask();
    e.active = true;
    data->integer_elems.push_back(std::move(e));
  }
  for (const auto& e : data->integer_elems) data->reducers.push_back(&e);
  return {make_groebner_basis(std::move(data)), std::move(selected)};
}

}  // namespace

const RingPtr& GroebnerBasis::ring() const { return data_->ring; }
const MonomialOrder& GroebnerBasis::order() const { return data_->order; }
const std::vector<Polynomial>& GroebnerBasis::elements() const { return data_->elements; }
const std::vector<Monomial>& GroebnerBasis::leading_monomials() const { return data_->leads; }
std::optional<int> GroebnerBasis::truncated_at() const { return data_->truncated; }
const std::vector<int>& GroebnerBasis::grading() const { return data_->grading; }
bool GroebnerBasis::is_unit() const { return data_->leads.size() == 1 && data_->leads[0].is_one(); }

namespace {

void check_nf_input(const detail::GroebnerData& d, const Polynomial& p) {
  if (!p.ring() || !same_ring(p.ring(), d.ring)) {
    throw std::invalid_argument("polynomial and basis live in different rings");
  }
  if (d.truncated) {
    // A truncated basis only decides homogeneous input up to its bound.
    if (!p.is_homogeneous(d.grading) || p.weighted_degree(d.grading) > *d.truncated) {
      throw std::logic_error("truncated basis used beyond its degree bound");
    }
  }
}

}  // namespace

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  check_nf_input(*data_, p);
  if (p.is_zero()) return p;
  BigInt den;
  auto ip = detail::to_integer(p, data_->order, &den);
  Rational mult = 1;
  auto r = detail::reduce<IntegerField>(std::move(ip), data_->reducers, data_->order, true, &mult);
  // r = mult * den * p modulo the ideal.
  const Rational scale = mult * Rational(den);
  std::vector<Term> terms;
  terms.reserve(r.size());
  for (const auto& t : r) terms.push_back({t.m, Rational(t.c) / scale});
  return Polynomial::from_terms(data_->ring, std::move(terms));
}

bool GroebnerBasis::reduces_to_zero(const Polynomial& p) const {
  check_nf_input(*data_, p);
  if (p.is_zero()) return true;
  auto ip = detail::to_integer(p, data_->order);
  detail::make_primitive(ip);
  return detail::reduce<IntegerField>(std::move(ip), data_->reducers, data_->order, false).empty();
}

MonomialIdeal GroebnerBasis::initial_ideal() const {
  return MonomialIdeal(data_->ring->arity(), data_->leads);
}

GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order,
                                     const GroebnerOptions& options) {
  if (gens.empty()) throw std::invalid_argument("reduced_groebner_basis needs generators");
  return run_integer(gens.front().ring(), {}, gens, order, options, false).basis;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) { return g.normal_form(p); }

bool is_groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order) {
  if (gens.empty()) throw std::invalid_argument("is_groebner_basis needs generators");
  check_inputs(gens, gens.front().ring());
  std::deque<Elem<BigInt>> elems;
  detail::Reducers<BigInt> red;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Elem<BigInt> e;
    e.poly = detail::to_integer(g, order);
    detail::make_primitive(e.poly);
    e.lead = e.poly.front().m;
    e.mask = e.lead.divisibility_mask();
    elems.push_back(std::move(e));
    red.push_back(&elems.back());
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const auto& f = elems[i];
      const auto& g = elems[j];
      const Monomial l = lcm(f.lead, g.lead);
      const Monomial tf = l / f.lead, tg = l / g.lead;
      EPoly<BigInt> s;
      BigInt alpha = g.poly.front().c, beta = f.poly.front().c;
      detail::combine<IntegerField>(&alpha, f.poly, 1, &tf, beta, g.poly, 1, &tg, order, s);
      if (!detail::reduce<IntegerField>(std::move(s), red, order, false).empty()) return false;
    }
  }
  return true;
}

MinimalGeneratorSelection select_minimal_generators(std::span<const Polynomial> background,
                                                    std::span<const Polynomial> tracked,
                                                    const MonomialOrder& order,
                                                    const GroebnerOptions& options) {
  RingPtr ring;
  if (!background.empty()) {
    ring = background.front().ring();
  } else if (!tracked.empty()) {
    ring = tracked.front().ring();
  } else {
    throw std::invalid_argument("select_minimal_generators needs generators");
  }
  auto out = run_integer(ring, background, tracked, order, options, true);
  return {std::move(out.selected), std::move(out.basis)};
}

std::vector<Monomial> modular_leading_monomials(std::span<const Polynomial> gens,
                                                const MonomialOrder& order,
                                                const GroebnerOptions& options) {
  if (gens.empty()) throw std::invalid_argument("modular_leading_monomials needs generators");
  const auto& ring = gens.front().ring();
  check_inputs(gens, ring);
  check_grading(options.grading, ring->arity());
  bool homogeneous = true;
  for (const auto& g : gens) homogeneous = homogeneous && g.is_homogeneous(options.grading);
  if (!homogeneous && options.degree_bound) {
    throw std::invalid_argument("input is not homogeneous for the requested grading");
  }
  Engine<PrimeField> engine(order, options.grading);
  engine.set_arity(ring->arity());
  std::vector<Engine<PrimeField>::Input> inputs;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto p = detail::to_modular(gens[i], order);
    if (p.empty()) continue;
    inputs.push_back({std::move(p), gens[i].weighted_degree(options.grading), false, i});
  }
  engine.run(std::move(inputs), options.degree_bound);
  std::vector<Monomial> out;
  for (const auto& e : engine.reduced_basis()) out.push_back(e.lead);
  return out;
}

}  // namespace vvkit
