#include "vvkit/vava.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <stdexcept>

#include "vvkit/hilbert.hpp"
#include "vvkit/linalg.hpp"

namespace vvkit {

namespace {

BigInt ambient_dim(std::size_t arity, int d) {
  if (d < 0) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(d) + arity - 1, arity - 1);
  return r;
}

// dim a_d for d = 0..top from one truncated basis.
std::vector<BigInt> ideal_dims(const Ideal& a, int top) {
  const auto n = a.ring()->arity();
  std::vector<BigInt> out(static_cast<std::size_t>(top + 1), 0);
  if (a.is_zero() || top < 0) return out;
  const auto gb = a.groebner_basis_upto(top);
  std::vector<Monomial> leads;
  for (const auto& m : gb.leading_monomials()) {
    if (m.degree() <= top) leads.push_back(m);
  }
  const auto hs = hilbert_series(MonomialIdeal(n, std::move(leads)));
  for (int d = 0; d <= top; ++d) out[d] = ambient_dim(n, d) - hs.coefficient(d);
  return out;
}

void check_pair(const Ideal& j, const Ideal& i, int t) {
  if (t < 2) throw std::invalid_argument("VV pieces need t >= 2");
  if (!same_ring(j.ring(), i.ring())) throw std::invalid_argument("ideals live in different rings");
  if (!j.is_homogeneous() || !i.is_homogeneous()) throw std::invalid_argument("VV pieces need homogeneous ideals");
  if (!is_subset(j, i)) throw std::invalid_argument("J is not contained in I");
}

// The ideals entering one VV piece.
struct PieceIdeals {
  Ideal j;
  Ideal it;     // I^t
  Ideal jit1;   // J I^{t-1}
};

GradedDims piece_dims(const PieceIdeals& p, std::optional<int> e, int t) {
  GradedDims out;
  if (p.j.is_zero()) return out;
  const Ideal s = sum(p.j, p.it);
  if (e) {
    // Beyond this degree J_d = sum g R_{d - deg g} lies in J m^{e(t-1)}.
    const int top = p.j.max_generator_degree() + *e * (t - 1) - 1;
    const auto dj = ideal_dims(p.j, top);
    const auto dit = ideal_dims(p.it, top);
    const auto ds = ideal_dims(s, top);
    const auto djit = ideal_dims(p.jit1, top);
    for (int d = 0; d <= top; ++d) {
      const BigInt v = dj[d] + dit[d] - ds[d] - djit[d];
      if (v < 0) throw std::logic_error("negative VV dimension");
      if (v != 0) out[d] = v.get_si();
    }
    return out;
  }
  const auto series = hilbert_series(p.jit1) + hilbert_series(s) - hilbert_series(p.j) - hilbert_series(p.it);
  if (series.pole_order() != 0) throw std::domain_error("VV piece has infinite length");
  for (std::size_t d = 0; d < series.numerator().size(); ++d) {
    const BigInt& v = series.numerator()[d];
    if (v < 0) throw std::logic_error("negative VV dimension");
    if (v != 0) out[static_cast<int>(d)] = v.get_si();
  }
  return out;
}

std::vector<Rational> coordinates(const Polynomial& f, const std::vector<Monomial>& mons) {
  std::vector<Rational> v(mons.size());
  for (const auto& t : f.terms()) {
    auto it = std::find(mons.begin(), mons.end(), t.monomial);
    if (it == mons.end()) throw std::logic_error("term outside the coordinate range");
    v[static_cast<std::size_t>(it - mons.begin())] = t.coeff;
  }
  return v;
}

Polynomial from_coordinates(const RingPtr& ring, std::span<const Rational> v, const std::vector<Monomial>& mons) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < mons.size(); ++k) {
    if (v[k] != 0) terms.push_back({mons[k], v[k]});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::optional<Polynomial> witness_in_degree(const PieceIdeals& p, int d) {
  const auto ring = p.j.ring();
  const auto mons = monomials_of_degree(ring->arity(), d);
  // Echelon basis of J_d.
  std::vector<std::vector<Rational>> spanning;
  for (const auto& g : p.j.generators()) {
    if (g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(ring->arity(), d - g.degree())) {
      spanning.push_back(coordinates(g.times_monomial(m), mons));
    }
  }
  RationalMatrix jd(spanning.size(), mons.size());
  for (std::size_t r = 0; r < spanning.size(); ++r) {
    for (std::size_t c = 0; c < mons.size(); ++c) jd(r, c) = spanning[r][c];
  }
  const std::size_t rk = row_reduce(jd).size();
  // Combinations of the J_d basis that vanish modulo I^t.
  const auto git = p.it.groebner_basis_upto(d);
  RationalMatrix images(rk, mons.size());
  for (std::size_t r = 0; r < rk; ++r) {
    const auto nf = git.normal_form(from_coordinates(ring, jd.row(r), mons));
    const auto v = coordinates(nf, mons);
    for (std::size_t c = 0; c < mons.size(); ++c) images(r, c) = v[c];
  }
  const auto kernel = left_kernel(images);
  if (kernel.empty()) return std::nullopt;
  RationalMatrix meet(kernel.size(), mons.size());
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    for (std::size_t r = 0; r < rk; ++r) {
      if (kernel[k][r] == 0) continue;
      for (std::size_t c = 0; c < mons.size(); ++c) meet(k, c) += kernel[k][r] * jd(r, c);
    }
  }
  const std::size_t mk = row_reduce(meet).size();
  const auto gj = p.jit1.groebner_basis_upto(d);
  for (std::size_t r = 0; r < mk; ++r) {
    auto w = from_coordinates(ring, meet.row(r), mons);
    if (!gj.reduces_to_zero(w)) return w;
  }
  return std::nullopt;
}

PieceIdeals piece_ideals(const Ideal& j, const Ideal& i, int t) {
  const Ideal prev = t - 1 == 1 ? i : power(i, t - 1);
  return {j, product(prev, i), product(j, prev)};
}

VVStep run_step(const PieceIdeals& p, std::optional<int> e, int t) {
  VVStep step;
  step.t = t;
  step.graded_dims = piece_dims(p, e, t);
  step.equal = step.graded_dims.empty();
  if (!step.equal) step.witness = witness_in_degree(p, step.graded_dims.begin()->first);
  return step;
}

}  // namespace

std::optional<int> mprimary_exponent(const Ideal& i) {
  if (i.is_zero()) return std::nullopt;
  const auto hs = hilbert_series(i);
  if (hs.pole_order() != 0) return std::nullopt;
  return static_cast<int>(hs.numerator().size());
}

GradedDims vv_piece(const Ideal& j, const Ideal& i, int t) {
  check_pair(j, i, t);
  return piece_dims(piece_ideals(j, i, t), mprimary_exponent(i), t);
}

std::optional<Polynomial> vv_witness(const Ideal& j, const Ideal& i, int t) {
  check_pair(j, i, t);
  const auto p = piece_ideals(j, i, t);
  const auto dims = piece_dims(p, mprimary_exponent(i), t);
  if (dims.empty()) return std::nullopt;
  return witness_in_degree(p, dims.begin()->first);
}

bool is_vv_witness(const Ideal& j, const Ideal& i, int t, const Polynomial& w) {
  if (w.is_zero() || !w.is_homogeneous()) return false;
  const auto p = piece_ideals(j, i, t);
  return contains(j, w) && contains(p.it, w) && !contains(p.jit1, w);
}

VVReport vv_torsion_free(const Ideal& j, const Ideal& i, int tmax, const VVOptions& options) {
  check_pair(j, i, 2);
  const auto e = mprimary_exponent(i);
  if (!e) throw std::invalid_argument("Jacobian ideal is not m-primary");
  VVReport report;
  report.base = j;
  report.jacobian = i;
  report.tmax = tmax;
  if (tmax < 2) return report;

  // I^1..I^tmax, built incrementally.
  std::vector<Ideal> powers = {Ideal(), i};
  auto ensure_power = [&](int t) {
    while (static_cast<int>(powers.size()) <= t) powers.push_back(product(powers.back(), i));
  };
  auto step_for = [&](int t) {
    return run_step({j, powers[t], product(j, powers[t - 1])}, e, t);
  };

  if (options.threads <= 1) {
    for (int t = 2; t <= tmax; ++t) {
      ensure_power(t);
      report.per_t.push_back(step_for(t));
      if (!report.per_t.back().equal && options.stop_at_failure) break;
    }
  } else {
    ensure_power(tmax);
    std::vector<VVStep> steps(static_cast<std::size_t>(tmax + 1));
    std::vector<std::future<void>> running;
    std::size_t next = 2;
    // Simple fixed-size pool over t.
    std::mutex mu;
    auto worker = [&] {
      while (true) {
        std::size_t t;
        {
          std::lock_guard lock(mu);
          if (next > static_cast<std::size_t>(tmax)) return;
          t = next++;
        }
        steps[t] = step_for(static_cast<int>(t));
      }
    };
    for (unsigned k = 0; k < options.threads; ++k) running.push_back(std::async(std::launch::async, worker));
    for (auto& f : running) f.get();
    for (int t = 2; t <= tmax; ++t) {
      report.per_t.push_back(steps[t]);
      if (!steps[t].equal && options.stop_at_failure) break;
    }
  }
  for (const auto& step : report.per_t) {
    if (!step.equal) {
      report.torsion_free = false;
      if (!report.first_failure) report.first_failure = step.t;
    }
  }
  return report;
}

bool mpower_in_ideal(const Ideal& i, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (!i.is_homogeneous()) throw std::invalid_argument("homogeneous ideal expected");
  if (i.is_zero()) return false;
  return hilbert_function(i, e) == 0;
}

ReesPresentation relation_type(const Ideal& j, const Ideal& i, int bound) {
  if (bound < 1) throw std::invalid_argument("relation type bound must be positive");
  if (!same_ring(j.ring(), i.ring())) throw std::invalid_argument("ideals live in different rings");
  if (!j.is_homogeneous() || !i.is_homogeneous()) throw std::invalid_argument("homogeneous ideals expected");
  if (i.is_zero()) throw std::invalid_argument("I is the zero ideal");
  if (!is_subset(j, i)) throw std::invalid_argument("J is not contained in I");
  const auto& ring = j.ring();
  const std::size_t n = ring->arity();

  // a_1..a_m: minimal generators of I modulo J.
  std::vector<Polynomial> igens = i.generators();
  std::stable_sort(igens.begin(), igens.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  GroebnerOptions sel_opt;
  sel_opt.degree_bound = i.max_generator_degree();
  const auto sel = select_minimal_generators(j.generators(), igens, MonomialOrder::degrevlex(), sel_opt);
  std::vector<Polynomial> a;
  for (auto k : sel.selected) a.push_back(igens[k]);
  const std::size_t m = a.size();

  ReesPresentation out;
  out.fiber_size = m;
  if (m == 0) return out;

  // Ring (u, base variables, T_1..T_m).
  auto fresh = [&](std::string name) {
    while (ring->index_of(name)) name += "_";
    return name;
  };
  const std::string u = fresh("u");
  std::vector<std::string> names = {u};
  names.insert(names.end(), ring->variables().begin(), ring->variables().end());
  std::vector<std::string> fiber_names;
  for (std::size_t k = 0; k < m; ++k) fiber_names.push_back(fresh("T" + std::to_string(k + 1)));
  names.insert(names.end(), fiber_names.begin(), fiber_names.end());
  const RingPtr big = make_ring(names);

  std::vector<int> grading(big->arity(), 1);
  for (std::size_t k = 0; k < m; ++k) grading[1 + n + k] = a[k].degree() + 1;

  std::vector<std::size_t> shift(n);
  for (std::size_t v = 0; v < n; ++v) shift[v] = v + 1;
  std::vector<Polynomial> gens;
  for (const auto& g : j.generators()) gens.push_back(map_variables(g, big, shift));
  const Polynomial uu = Polynomial::variable(big, 0);
  for (std::size_t k = 0; k < m; ++k) {
    gens.push_back(Polynomial::variable(big, 1 + n + k) - map_variables(a[k], big, shift) * uu);
  }
  GroebnerOptions opt;
  opt.grading = grading;
  const auto gb = reduced_groebner_basis(gens, MonomialOrder::block(1).with_weights(grading), opt);

  // Relations: basis elements free of u, moved to (base variables, T).
  std::vector<std::string> small_names(names.begin() + 1, names.end());
  const RingPtr small = make_ring(small_names);
  std::vector<int> small_grading(grading.begin() + 1, grading.end());
  std::vector<Polynomial> relations;
  for (const auto& e : gb.elements()) {
    bool free = std::all_of(e.terms().begin(), e.terms().end(), [](const Term& t) { return t.monomial[0] == 0; });
    if (!free) continue;
    std::vector<Term> terms;
    for (const auto& t : e.terms()) {
      Monomial mm(small->arity());
      for (std::size_t v = 0; v < small->arity(); ++v) mm.set(v, t.monomial[v + 1]);
      terms.push_back({mm, t.coeff});
    }
    relations.push_back(Polynomial::from_terms(small, std::move(terms)));
  }
  std::stable_sort(relations.begin(), relations.end(), [&](const Polynomial& x, const Polynomial& y) {
    return x.weighted_degree(small_grading) < y.weighted_degree(small_grading);
  });
  std::vector<Polynomial> background;
  std::vector<std::size_t> embed_map(n);
  for (std::size_t v = 0; v < n; ++v) embed_map[v] = v;
  for (const auto& g : j.generators()) background.push_back(map_variables(g, small, embed_map));

  GroebnerOptions min_opt;
  min_opt.grading = small_grading;
  const auto order = MonomialOrder::degrevlex().with_weights(small_grading);
  const auto minimal = select_minimal_generators(background, relations, order, min_opt);
  for (auto k : minimal.selected) {
    int base = 0, fiber = 0;
    for (const auto& t : relations[k].terms()) {
      int b = 0, f = 0;
      for (std::size_t v = 0; v < n; ++v) b += t.monomial[v];
      for (std::size_t v = n; v < n + m; ++v) f += t.monomial[v];
      base = std::max(base, b);
      fiber = std::max(fiber, f);
    }
    out.generator_bidegrees.emplace_back(base, fiber);
    out.relation_type = std::max(out.relation_type, fiber);
  }
  std::sort(out.generator_bidegrees.begin(), out.generator_bidegrees.end());
  out.exceeded_bound = out.relation_type > bound;
  return out;
}

}  // namespace vvkit
