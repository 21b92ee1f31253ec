#include "vvkit/repro.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <optional>
#include <stdexcept>

namespace vvkit {

namespace {

// Seeds pinned for the point-configuration claims.
constexpr std::uint64_t kSeed = 1;

const char* status_of(bool ok) { return ok ? "pass" : "fail"; }

template <class T>
std::vector<T> parallel_map(std::size_t n, unsigned threads, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  if (threads <= 1 || n <= 1) {
    for (std::size_t k = 0; k < n; ++k) out[k] = fn(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) out[k] = fn(k);
  };
  std::vector<std::future<void>> running;
  for (unsigned k = 0; k < std::min<std::size_t>(threads, n); ++k) {
    running.push_back(std::async(std::launch::async, worker));
  }
  for (auto& f : running) f.get();
  return out;
}

Polynomial line_through(const std::vector<Rational>& p, const std::vector<Rational>& q, const RingPtr& ring) {
  const Rational a = p[1] * q[2] - p[2] * q[1];
  const Rational b = p[2] * q[0] - p[0] * q[2];
  const Rational c = p[0] * q[1] - p[1] * q[0];
  return Polynomial::variable(ring, 0) * a + Polynomial::variable(ring, 1) * b + Polynomial::variable(ring, 2) * c;
}

Polynomial prod(const std::vector<Polynomial>& fs, const RingPtr& ring) {
  Polynomial out = Polynomial::constant(ring, 1);
  for (const auto& f : fs) out = multiply(out, f);
  return out;
}

Polynomial monomial(const RingPtr& ring, std::initializer_list<int> exps, const Rational& c = 1) {
  return Polynomial::from_monomial(ring, Monomial(exps), c);
}

// Distinct values avoiding 0, 1 and -1: 2, -2, 3, -3, 1/2, -1/2, ...
std::vector<Rational> distinct_values(int count) {
  std::vector<Rational> out;
  for (int k = 2; static_cast<int>(out.size()) < count; ++k) {
    for (Rational v : {Rational(k), Rational(-k), Rational(1, k), Rational(-1, k)}) {
      if (static_cast<int>(out.size()) < count) out.push_back(v);
    }
  }
  return out;
}

struct Pair {
  Ideal j;
  Ideal i;
};

Pair jacobian_pair(const PointConfiguration& cfg) {
  const Ideal j = ideal_of_points(cfg);
  return {j, jacobian(j, cfg.dim()).jacobian};
}

// ---- Claims --------------------------------------------------------------

ReproResult four_collinear_witness() {
  const auto ring = plane_ring();
  const Ideal j(ring, {"z", "x^3*y - x*y^3"});
  const Ideal i = jacobian(j, 2).jacobian;
  const auto dims = vv_piece(j, i, 2);
  const auto f = parse_polynomial("x^3*y - x*y^3", ring);
  const auto w = multiply(monomial(ring, {0, 4, 0}), f);
  const bool witness = is_vv_witness(j, i, 2, w);
  ReproResult r;
  r.details["base"] = ideal_to_json(j);
  r.details["jacobian"] = ideal_to_json(i);
  r.details["t2_nonzero"] = !dims.empty();
  r.details["witness"] = w.to_string();
  r.details["witness_valid"] = witness;
  r.status = status_of(!dims.empty() && witness);
  return r;
}

ReproResult pencil_claim(int s) {
  const auto pencil = collinear_pencil(s);
  const Ideal fi(pencil.f.ring(), {pencil.f});
  const Ideal left = intersect(fi, power(pencil.a, 2));
  const Ideal right = product(fi, pencil.a);
  const auto hl = hilbert_series(left);
  const auto hr = hilbert_series(right);
  const HilbertSeries want_l(pencil_intersection_numerator(s), 1);
  const HilbertSeries want_r(pencil_product_numerator(s), 1);
  const bool differ = !equals(left, right);
  ReproResult r;
  r.details["s"] = s;
  r.details["f"] = pencil.f.to_string();
  r.details["intersection_series"] = series_to_json(hl);
  r.details["product_series"] = series_to_json(hr);
  r.details["predicted_intersection_series"] = series_to_json(want_l);
  r.details["predicted_product_series"] = series_to_json(want_r);
  r.details["ideals_differ"] = differ;
  r.status = status_of(differ && hl == want_l && hr == want_r);
  return r;
}

ReproResult two_off_line_claim(int s) {
  const auto cfg = two_off_line_config(s);
  const auto ring = plane_ring();
  const auto& p = cfg.points();
  const std::size_t a = static_cast<std::size_t>(s) - 2, b = a + 1;  // the two off-line points
  auto l = [&](std::size_t i, std::size_t k) { return line_through(p[i].coords(), p[k].coords(), ring); };
  const auto z = Polynomial::variable(ring, 2);
  std::vector<Polynomial> tail = {l(s - 3, b)};
  for (std::size_t i = 0; i + 3 < static_cast<std::size_t>(s); ++i) tail.push_back(l(i, a));
  const Ideal hb(ring, {multiply(z, l(a, b)), prod({z, l(0, a), l(s - 3, b)}, ring), prod(tail, ring)});

  std::vector<BigInt> num = {1, 2, 2};
  while (static_cast<int>(num.size()) < s - 2) num.push_back(1);
  const HilbertSeries want(num, 1);

  const Pair pr = jacobian_pair(cfg);
  const auto g = two_off_line_form(s);
  const auto e = multiply(monomial(ring, {0, 2 * s - 8, 0}), g) - monomial(ring, {0, 1, 2 * s - 3});
  const bool homogeneous = e.is_homogeneous();
  const bool witness = homogeneous && is_vv_witness(pr.j, pr.i, 2, e);
  const auto hs_hb = hilbert_series(hb);
  const auto hs_pts = hilbert_series(pr.j);
  const bool hb_inside = is_subset(hb, pr.j);

  ReproResult r;
  r.details["s"] = s;
  r.details["points"] = points_to_json(cfg);
  r.details["minor_ideal"] = ideal_to_json(hb);
  r.details["minor_ideal_series"] = series_to_json(hs_hb);
  r.details["points_series"] = series_to_json(hs_pts);
  r.details["predicted_series"] = series_to_json(want);
  r.details["contained"] = hb_inside;
  r.details["witness"] = e.to_string();
  r.details["witness_homogeneous"] = homogeneous;
  r.details["witness_valid"] = witness;
  r.status = status_of(hb_inside && hs_hb == want && hs_pts == want && witness);
  return r;
}

ReproResult three_off_line_claim(int s) {
  const auto cfg = three_off_line_config(s);
  const auto ring = plane_ring();
  const auto& p = cfg.points();
  auto l = [&](std::size_t i, std::size_t k) { return line_through(p[i].coords(), p[k].coords(), ring); };
  const std::size_t u = static_cast<std::size_t>(s) - 3, v = u + 1, w = u + 2;  // 0-based off-line points
  const auto z = Polynomial::variable(ring, 2);
  const Ideal a(ring, {prod({z, l(u, w), l(v, w)}, ring), prod({z, l(u, w), l(u, v)}, ring),
                       prod({z, l(v, w), l(u, v)}, ring)});
  std::vector<Polynomial> gf = {l(0, u), l(1, v)};
  for (std::size_t i = 2; i < u; ++i) gf.push_back(l(i, w));
  const auto g = prod(gf, ring);
  const Ideal colon = quotient(a, Ideal(ring, {g}));
  const bool colon_ok = equals(colon, Ideal(ring, {z}));

  const Pair pr = jacobian_pair(cfg);
  const bool generated = equals(sum(a, Ideal(ring, {g})), pr.j);
  std::vector<Polynomial> lin;
  for (std::size_t i = 0; i < u; ++i) {
    lin.push_back(Polynomial::variable(ring, 0) - Polynomial::variable(ring, 1) * Rational(p[i][0] / p[i][1]));
  }
  const auto f = prod(lin, ring);
  const auto e = multiply(monomial(ring, {0, 2 * s - 10, 0}), f) - monomial(ring, {0, 1, 3 * s - 14});
  const bool witness = is_vv_witness(pr.j, pr.i, 2, e);

  ReproResult r;
  r.details["s"] = s;
  r.details["points"] = points_to_json(cfg);
  r.details["colon"] = ideal_to_json(colon);
  r.details["colon_is_z"] = colon_ok;
  r.details["generates_points_ideal"] = generated;
  r.details["witness"] = e.to_string();
  r.details["witness_valid"] = witness;
  r.status = status_of(colon_ok && generated && witness);
  return r;
}

// Verdict for a sampled configuration, compared with `expect_free` when given.
ReproResult verdict_claim(const PointConfiguration& cfg, std::optional<bool> expect_free) {
  const Pair pr = jacobian_pair(cfg);
  const auto report = vv_torsion_free(pr.j, pr.i, static_cast<int>(cfg.size()));
  ReproResult r;
  r.details["points"] = points_to_json(cfg);
  r.details["class"] = class_to_json(classify_config(cfg));
  r.details["tmax"] = report.tmax;
  r.details["verdict"] = report.torsion_free ? "torsion-free" : "not torsion-free";
  r.details["first_failure"] = report.first_failure ? Json(*report.first_failure) : Json(nullptr);
  if (report.first_failure && report.per_t.back().witness) {
    r.details["witness"] = report.per_t.back().witness->to_string();
  }
  r.status = expect_free ? status_of(report.torsion_free == *expect_free) : "indeterminate";
  return r;
}

struct LabelRun {
  std::string label;
  Json details;
  bool torsion_free = true;
  int relation_type = 0;
  std::size_t s = 0;
  Pair pair;
  PointConfiguration cfg;
};

LabelRun run_label(const std::string& label, bool with_rees) {
  LabelRun out;
  out.label = label;
  out.cfg = sample_config(label, kSeed);
  out.s = out.cfg.size();
  out.pair = jacobian_pair(out.cfg);
  const auto report = vv_torsion_free(out.pair.j, out.pair.i, static_cast<int>(out.s));
  out.torsion_free = report.torsion_free;
  out.details["label"] = label;
  out.details["seed"] = kSeed;
  out.details["points"] = points_to_json(out.cfg);
  out.details["verdict"] = report.torsion_free ? "torsion-free" : "not torsion-free";
  out.details["first_failure"] = report.first_failure ? Json(*report.first_failure) : Json(nullptr);
  if (report.first_failure) {
    const auto& step = report.per_t.back();
    out.details["witness"] = step.witness ? Json(step.witness->to_string()) : Json(nullptr);
  }
  if (with_rees) {
    const auto rees = relation_type(out.pair.j, out.pair.i, static_cast<int>(out.s));
    out.relation_type = rees.relation_type;
    out.details["relation_type"] = rees.relation_type;
  }
  return out;
}

std::vector<std::string> case_labels(int s) {
  const int cases = s == 5 ? 5 : 11;
  std::vector<std::string> out;
  for (int k = 1; k <= cases; ++k) out.push_back(std::to_string(s) + ":" + std::to_string(k));
  return out;
}

ReproResult five_points_claim(const ReproOptions& opt) {
  const auto labels = case_labels(5);
  const auto runs = parallel_map<LabelRun>(labels.size(), opt.threads,
                                          [&](std::size_t k) { return run_label(labels[k], k == 0); });
  bool ok = true;
  ReproResult r;
  r.details["labels"] = Json::array();
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const bool want = k == 0 || k == 3 || k == 4;
    ok = ok && runs[k].torsion_free == want;
    r.details["labels"].push_back(runs[k].details);
  }
  // Extra checks on the general configuration.
  const auto& general = runs[0];
  const auto hs = hilbert_series(general.pair.j);
  const HilbertSeries want_hs(std::vector<BigInt>{1, 2, 2}, 1);
  std::vector<Polynomial> igens = general.pair.i.generators();
  std::stable_sort(igens.begin(), igens.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  const auto sel = select_minimal_generators(general.pair.j.generators(), igens, MonomialOrder::degrevlex(), {});
  std::vector<int> degrees;
  for (auto k : sel.selected) degrees.push_back(igens[k].degree());
  const bool cubics = degrees == std::vector<int>{3, 3, 3, 3};
  r.details["general_series"] = series_to_json(hs);
  r.details["general_jacobian_degrees_mod_base"] = degrees;
  ok = ok && hs == want_hs && cubics && general.relation_type == 2;
  r.status = status_of(ok);
  return r;
}

ReproResult six_points_claim(const ReproOptions& opt) {
  const auto labels = case_labels(6);
  const auto runs = parallel_map<LabelRun>(labels.size(), opt.threads,
                                          [&](std::size_t k) { return run_label(labels[k], false); });
  bool ok = true;
  ReproResult r;
  r.details["labels"] = Json::array();
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const int case_no = static_cast<int>(k) + 1;
    const bool want = !(case_no == 2 || case_no == 3 || case_no == 7 || case_no == 11);
    ok = ok && runs[k].torsion_free == want;
    Json d = runs[k].details;
    if (case_no == 7 || case_no == 11) {
      const auto& pr = runs[k].pair;
      std::optional<Polynomial> conic;
      for (const auto& g : pr.j.generators()) {
        if (g.degree() == 2) conic = g;
      }
      const auto n = min_pure_power(pr.i, "z");
      bool valid = false;
      if (conic && n) {
        const auto w = multiply(monomial(pr.j.ring(), {0, 0, *n - 1}), *conic);
        valid = is_vv_witness(pr.j, pr.i, 2, w);
        d["conic_witness"] = w.to_string();
      }
      d["min_pure_power_z"] = n ? Json(*n) : Json(nullptr);
      d["conic_witness_valid"] = valid;
      ok = ok && valid;
    }
    r.details["labels"].push_back(d);
  }
  r.status = status_of(ok);
  return r;
}

ReproResult general_position_claim() {
  ReproResult r;
  bool ok = true;
  r.details["cases"] = Json::array();
  for (int d : {3, 4}) {
    const int s = d * (d + 1) / 2;
    const auto cfg = normalize_to_frame(sample_config(std::to_string(s) + "-general", kSeed));
    const auto gens = glp_binomial_generators_checked(d, cfg);
    const Ideal j(plane_ring(), gens);
    const Ideal pts = ideal_of_points(cfg);
    const bool same = equals(j, pts);
    auto got = initial_ideal(pts).generators();
    auto want = glp_initial_monomials(d);
    bool initial = got.size() == want.size();
    for (const auto& m : want) initial = initial && std::find(got.begin(), got.end(), m) != got.end();
    bool hf = true;
    for (int t = 0; t <= s; ++t) hf = hf && hilbert_function(pts, t) == std::min(s, (t + 1) * (t + 2) / 2);
    Json c;
    c["d"] = d;
    c["points"] = points_to_json(cfg);
    c["generators"] = polynomials_to_json(gens);
    c["equal_to_points_ideal"] = same;
    c["initial_ideal_matches"] = initial;
    c["hilbert_function_maximal"] = hf;
    r.details["cases"].push_back(c);
    ok = ok && same && initial && hf;
  }
  r.status = status_of(ok);
  return r;
}

ReproResult minors_claim(int d) {
  const int s = d * (d + 1) / 2;
  const auto cfg = sample_config(std::to_string(s) + "-general", kSeed);
  const auto data = jacobian(ideal_of_points(cfg), 2);
  const bool same = equals(data.minors, maximal_ideal_power(plane_ring(), 2 * d - 2));
  ReproResult r;
  r.details["d"] = d;
  r.details["s"] = s;
  r.details["points"] = points_to_json(cfg);
  r.details["minors_equal_m_power"] = same;
  r.details["exponent"] = 2 * d - 2;
  r.status = status_of(same);
  return r;
}

ReproResult relation_type_bound_claim(const ReproOptions& opt) {
  std::vector<std::string> labels = case_labels(5);
  for (const auto& l : case_labels(6)) labels.push_back(l);
  struct Row {
    Json details;
    bool ok = false;
  };
  const auto rows = parallel_map<Row>(labels.size(), opt.threads, [&](std::size_t k) {
    const auto cfg = sample_config(labels[k], kSeed);
    const auto pr = jacobian_pair(cfg);
    const int s = static_cast<int>(cfg.size());
    const auto rees = relation_type(pr.j, pr.i, s);
    Row row;
    row.details["label"] = labels[k];
    row.details["s"] = s;
    row.details["relation_type"] = rees.relation_type;
    row.details["bidegrees"] = rees_to_json(rees)["generator_bidegrees"];
    row.ok = rees.relation_type <= s && !rees.exceeded_bound;
    return row;
  });
  ReproResult r;
  bool ok = true;
  r.details["labels"] = Json::array();
  for (const auto& row : rows) {
    ok = ok && row.ok;
    r.details["labels"].push_back(row.details);
  }
  r.status = status_of(ok);
  return r;
}

using Runner = std::function<ReproResult(const ReproOptions&)>;

struct Entry {
  ReproClaim claim;
  Runner run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e = {
        {{"ATFN", "relation type of the Jacobian ideal is at most s on all sampled 5- and 6-point cases"},
         relation_type_bound_claim},
        {{"CONJ-d6", "m^10 inside the Jacobian ideal of 21 general points (experiment)"},
         [](const ReproOptions& o) { return conjecture_experiment(6, kSeed, 3, o); }},
        {{"P41", "five points: torsion-free exactly for cases 1, 4, 5"}, five_points_claim},
        {{"P42", "binomial(d+1,2) general points, d = 3, 4: explicit degree-d generators"},
         [](const ReproOptions&) { return general_position_claim(); }},
        {{"P43", "6 general points: the 2-minors of the Jacobian matrix generate m^4"},
         [](const ReproOptions&) { return minors_claim(3); }},
        {{"P43-d4", "10 general points: the 2-minors generate m^6"},
         [](const ReproOptions&) { return minors_claim(4); }},
        {{"P43-d5", "15 general points: the 2-minors generate m^8", true},
         [](const ReproOptions&) { return minors_claim(5); }},
        {{"P44", "six points: not torsion-free exactly for cases 2, 3, 7, 11"}, six_points_claim},
        {{"R15b", "4 collinear points: y^4 f is a degree-2 witness"},
         [](const ReproOptions&) { return four_collinear_witness(); }},
        {{"T22-claim", "pencil of 5 lines: (f) cap a^2 differs from (f)a with the predicted series"},
         [](const ReproOptions&) { return pencil_claim(6); }},
        {{"T22-s4", "4 points, 3 on a line: stated to be not torsion-free"},
         [](const ReproOptions&) { return verdict_claim(sample_config("4:3", kSeed), false); }},
        {{"T23-s7", "7 points, 5 on a line, off variant: verdict reported, no expectation"},
         [](const ReproOptions&) { return verdict_claim(two_off_line_config(7), std::nullopt); }},
        {{"T23", "8 points, 6 on a line: ideal via series and explicit witness"},
         [](const ReproOptions&) { return two_off_line_claim(8); }},
        {{"T24", "9 points, 6 on a line: colon ideal and explicit witness", true},
         [](const ReproOptions&) { return three_off_line_claim(9); }},
    };
    std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) { return a.claim.id < b.claim.id; });
    return e;
  }();
  return entries;
}

}  // namespace

Json ReproResult::to_json() const {
  Json out;
  out["claim"] = id;
  out["status"] = status;
  out["details"] = details;
  return out;
}

const std::vector<ReproClaim>& repro_claims() {
  static const std::vector<ReproClaim> claims = [] {
    std::vector<ReproClaim> out;
    for (const auto& e : registry()) out.push_back(e.claim);
    return out;
  }();
  return claims;
}

const ReproClaim& find_claim(const std::string& id) {
  for (const auto& e : registry()) {
    if (e.claim.id == id) return e.claim;
  }
  throw std::invalid_argument("unknown claim id: " + id);
}

ReproResult run_repro(const std::string& id, const ReproOptions& options) {
  for (const auto& e : registry()) {
    if (e.claim.id != id) continue;
    auto result = e.run(options);
    result.id = id;
    return result;
  }
  throw std::invalid_argument("unknown claim id: " + id);
}

ReproResult conjecture_experiment(int d, std::uint64_t seed, int trials, const ReproOptions& options) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  const int s = d * (d + 1) / 2;
  const int e = 2 * d - 2;
  const auto rows = parallel_map<Json>(static_cast<std::size_t>(trials), options.threads, [&](std::size_t k) {
    const auto cfg = sample_config(std::to_string(s) + "-general", seed + k);
    const auto i = jacobian(ideal_of_points(cfg), 2).jacobian;
    Json row;
    row["seed"] = seed + k;
    row["points"] = points_to_json(cfg);
    row["contains_m_power"] = mpower_in_ideal(i, e);
    const auto exp = mprimary_exponent(i);
    row["least_m_power"] = exp ? Json(*exp) : Json(nullptr);
    return row;
  });
  ReproResult r;
  r.id = "CONJ-d" + std::to_string(d);
  r.status = "experimental";
  r.details["d"] = d;
  r.details["s"] = s;
  r.details["exponent"] = e;
  r.details["trials"] = rows;
  int held = 0;
  for (const auto& row : rows) held += row["contains_m_power"].get<bool>() ? 1 : 0;
  r.details["held"] = held;
  return r;
}

CollinearPencil collinear_pencil(int s) {
  if (s < 4) throw std::invalid_argument("pencil needs s >= 4");
  const auto ring = make_ring({"x", "y"});
  const auto x = Polynomial::variable(ring, 0);
  const auto y = Polynomial::variable(ring, 1);
  std::vector<Polynomial> lines;
  for (const auto& a : distinct_values(s - 1)) lines.push_back(x - y * a);
  const auto f = prod(lines, ring);
  const auto fx = differentiate(f, 0);
  const auto fy = differentiate(f, 1);
  return {f, Ideal(ring, {multiply(x, fx), multiply(y, fx), multiply(x, fy), multiply(y, fy)})};
}

std::vector<BigInt> pencil_intersection_numerator(int s) {
  std::vector<BigInt> num(static_cast<std::size_t>(3 * s - 6), 0);
  for (int k = 0; k <= 2 * s - 3; ++k) num[k] = 1;
  num[2 * s - 2] -= 3;
  for (int k = 2 * s - 1; k <= 3 * s - 8; ++k) num[k] -= 1;
  num[3 * s - 7] -= 2;
  return num;
}

std::vector<BigInt> pencil_product_numerator(int s) {
  std::vector<BigInt> num(static_cast<std::size_t>(3 * s - 5), 0);
  for (int k = 0; k <= 2 * s - 3; ++k) num[k] = 1;
  num[2 * s - 2] -= 3;
  for (int k = 2 * s - 1; k <= 3 * s - 7; ++k) num[k] -= 1;
  num[3 * s - 6] -= 1;
  return num;
}

PointConfiguration two_off_line_config(int s) {
  if (s < 5) throw std::invalid_argument("needs s >= 5");
  std::vector<std::vector<Rational>> pts;
  for (const auto& a : distinct_values(s - 2)) pts.push_back({1, a, 0});
  pts.push_back({0, 0, 1});
  pts.push_back({1, 1, 1});
  return PointConfiguration::from_coordinates(pts);
}

Polynomial two_off_line_form(int s) {
  const auto ring = plane_ring();
  const auto x = Polynomial::variable(ring, 0);
  const auto y = Polynomial::variable(ring, 1);
  std::vector<Polynomial> lines;
  Rational scale = 1;
  for (const auto& a : distinct_values(s - 2)) {
    lines.push_back(y - x * a);
    scale *= 1 - a;
  }
  return prod(lines, ring) * (1 / scale);
}

PointConfiguration three_off_line_config(int s) {
  if (s < 6) throw std::invalid_argument("needs s >= 6");
  const int n = s - 3;
  std::vector<Rational> a;
  int k = 2;
  if (n % 2 == 1) {
    a = {2, 3, Rational(1, 6)};
    k = 4;
  }
  for (; static_cast<int>(a.size()) < n; ++k) {
    if (k == 6) continue;
    a.push_back(k);
    a.push_back(Rational(1, k));
  }
  std::vector<std::vector<Rational>> pts;
  for (const auto& v : a) pts.push_back({v, 1, 0});
  pts.push_back({1, 0, 1});
  pts.push_back({0, 1, 1});
  pts.push_back({0, 0, 1});
  return PointConfiguration::from_coordinates(pts);
}

}  // namespace vvkit
