#include "vvkit/geometry.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <regex>
#include <set>
#include <stdexcept>

namespace vvkit {

ProjectivePoint::ProjectivePoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  auto last = std::find_if(coords_.rbegin(), coords_.rend(), [](const Rational& c) { return c != 0; });
  if (last == coords_.rend()) throw std::invalid_argument("zero vector is not a projective point");
  const Rational scale = *last;
  for (auto& c : coords_) c /= scale;
}

std::string ProjectivePoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ":";
    s += vvkit::to_string(coords_[i]);
  }
  return s + "]";
}

PointConfiguration::PointConfiguration(std::vector<ProjectivePoint> points) : points_(std::move(points)) {
  if (points_.empty()) return;
  const auto len = points_.front().size();
  if (len < 2) throw std::invalid_argument("points need at least two coordinates");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != len) throw std::invalid_argument("points have different lengths");
    for (std::size_t j = 0; j < i; ++j) {
      if (points_[i] == points_[j]) throw std::invalid_argument("repeated point " + points_[i].to_string());
    }
  }
}

PointConfiguration PointConfiguration::from_coordinates(const std::vector<std::vector<Rational>>& coords) {
  std::vector<ProjectivePoint> pts;
  for (const auto& c : coords) pts.emplace_back(c);
  return PointConfiguration(std::move(pts));
}

PointConfiguration PointConfiguration::from_columns(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> coords(m.cols(), std::vector<Rational>(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) coords[j][i] = m(i, j);
  }
  return from_coordinates(coords);
}

RingPtr ring_for(const PointConfiguration& cfg) {
  if (cfg.dim() == 2) return plane_ring();
  std::vector<std::string> vars;
  for (std::size_t i = 0; i <= cfg.dim(); ++i) vars.push_back("x" + std::to_string(i));
  return make_ring(std::move(vars));
}

Ideal point_ideal(const ProjectivePoint& p, const RingPtr& ring) {
  if (p.size() != ring->arity()) throw std::invalid_argument("point does not match the ring");
  std::size_t k = p.size() - 1;
  while (p[k] == 0) --k;
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == k) continue;
    gens.push_back(Polynomial::variable(ring, i) - Polynomial::variable(ring, k) * p[i]);
  }
  return Ideal(ring, std::move(gens));
}

Ideal ideal_of_points(const PointConfiguration& cfg) {
  if (cfg.size() == 0) throw std::invalid_argument("empty configuration");
  const auto ring = ring_for(cfg);
  Ideal acc = point_ideal(cfg.points().front(), ring);
  for (std::size_t i = 1; i < cfg.size(); ++i) {
    acc = intersect(acc, point_ideal(cfg.points()[i], ring));
  }
  return Ideal(ring, minimal_generators(acc));
}

namespace {

Rational det3(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

std::vector<Rational> cross(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

void require_plane(const PointConfiguration& cfg) {
  if (cfg.dim() != 2) throw std::invalid_argument("configuration is not in the plane");
}

// Maximal collinear subsets with at least 3 points, as sorted index sets.
std::vector<std::vector<std::size_t>> collinear_sets(const PointConfiguration& cfg) {
  const auto& p = cfg.points();
  std::set<std::vector<std::size_t>> lines;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      std::vector<std::size_t> on = {i, j};
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (k != i && k != j && det3(p[i], p[j], p[k]) == 0) on.push_back(k);
      }
      if (on.size() >= 3) {
        std::sort(on.begin(), on.end());
        lines.insert(on);
      }
    }
  }
  return {lines.begin(), lines.end()};
}

}  // namespace

std::optional<Polynomial> conic_through(const PointConfiguration& cfg) {
  require_plane(cfg);
  const auto ring = plane_ring();
  const auto mons = monomials_of_degree(3, 2);
  RationalMatrix a(cfg.size(), mons.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const auto& pt = cfg.points()[i].coords();
    for (std::size_t j = 0; j < mons.size(); ++j) {
      a(i, j) = Polynomial::from_monomial(ring, mons[j]).evaluate(pt);
    }
  }
  // Kernel of the evaluation map = left kernel of its transpose.
  RationalMatrix at(mons.size(), cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    for (std::size_t j = 0; j < mons.size(); ++j) at(j, i) = a(i, j);
  }
  const auto kernel = left_kernel(at);
  if (kernel.size() != 1) return std::nullopt;
  std::vector<Term> terms;
  for (std::size_t j = 0; j < mons.size(); ++j) terms.push_back({mons[j], kernel[0][j]});
  return Polynomial::from_terms(ring, std::move(terms));
}

bool is_irreducible_conic(const Polynomial& q) {
  if (q.degree() != 2 || !q.is_homogeneous() || q.ring()->arity() != 3) return false;
  RationalMatrix m(3, 3);
  for (const auto& t : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < 3; ++v) {
      for (int e = 0; e < t.monomial[v]; ++e) idx.push_back(v);
    }
    if (idx[0] == idx[1]) {
      m(idx[0], idx[0]) = t.coeff;
    } else {
      m(idx[0], idx[1]) = t.coeff / 2;
      m(idx[1], idx[0]) = t.coeff / 2;
    }
  }
  return rank(m) == 3;
}

ConfigClass classify_config(const PointConfiguration& cfg) {
  require_plane(cfg);
  if (cfg.size() < 3) throw std::invalid_argument("classification needs at least 3 points");
  ConfigClass out;
  out.s = cfg.size();
  const auto lines = collinear_sets(cfg);
  for (const auto& l : lines) out.profile.push_back(l.size());
  std::sort(out.profile.rbegin(), out.profile.rend());

  const std::size_t top = out.profile.empty() ? 0 : out.profile.front();
  const std::size_t k = lines.size();
  if (k == 0) {
    out.descriptor = "general";
  } else if (k == 1) {
    out.descriptor = std::to_string(top) + "-fold";
  } else {
    out.descriptor = "mixed";
  }

  auto share_point = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::any_of(a.begin(), a.end(),
                       [&](std::size_t i) { return std::find(b.begin(), b.end(), i) != b.end(); });
  };

  switch (out.s) {
    case 4:
      out.label = k == 0 ? 1 : top == 4 ? 2 : 3;
      break;
    case 5:
      if (k == 0) {
        out.label = 1;
      } else if (top == 5) {
        out.label = 2;
      } else if (top == 4) {
        out.label = 3;
      } else {
        out.label = k == 1 ? 4 : 5;
      }
      break;
    case 6:
      if (top == 6) {
        out.label = 2;
      } else if (top == 5) {
        out.label = 3;
      } else if (top == 4) {
        out.label = k == 1 ? 4 : 5;
      } else if (k == 0) {
        const auto conic = conic_through(cfg);
        out.label = conic && is_irreducible_conic(*conic) ? 11 : 1;
      } else if (k == 1) {
        out.label = 6;
      } else if (k == 2) {
        out.label = share_point(lines[0], lines[1]) ? 8 : 7;
      } else {
        out.label = k == 3 ? 9 : 10;
      }
      break;
    default:
      break;
  }
  return out;
}

namespace {

struct LabelSpec {
  enum class Kind { CaseList, General, Collinear, Fold } kind;
  std::size_t s = 0;
  int number = 0;   // case number
  std::size_t r = 0;
  int incidence = 0;  // -1 off, +1 in, 0 unspecified
};

LabelSpec parse_label(const std::string& label) {
  std::smatch m;
  static const std::regex case_re(R"(([456]):(\d+))");
  static const std::regex general_re(R"((\d+)-general)");
  static const std::regex collinear_re(R"((\d+)-collinear)");
  static const std::regex fold_re(R"(\((\d+),(\d+)\)-fold(-in|-off)?)");
  LabelSpec spec{};
  if (std::regex_match(label, m, case_re)) {
    spec.kind = LabelSpec::Kind::CaseList;
    spec.s = std::stoul(m[1]);
    spec.number = std::stoi(m[2]);
    const int limit = spec.s == 4 ? 3 : spec.s == 5 ? 5 : 11;
    if (spec.number < 1 || spec.number > limit) throw std::invalid_argument("unknown label: " + label);
  } else if (std::regex_match(label, m, general_re)) {
    spec.kind = LabelSpec::Kind::General;
    spec.s = std::stoul(m[1]);
  } else if (std::regex_match(label, m, collinear_re)) {
    spec.kind = LabelSpec::Kind::Collinear;
    spec.s = std::stoul(m[1]);
  } else if (std::regex_match(label, m, fold_re)) {
    spec.kind = LabelSpec::Kind::Fold;
    spec.s = std::stoul(m[1]);
    spec.r = std::stoul(m[2]);
    if (m[3].matched) spec.incidence = m[3] == "-in" ? 1 : -1;
    if (spec.r >= spec.s || spec.s - spec.r < 3) throw std::invalid_argument("unsatisfiable label: " + label);
    if (spec.incidence != 0 && spec.r != 2) {
      throw std::invalid_argument("in/off variants need exactly two remaining points: " + label);
    }
  } else {
    throw std::invalid_argument("unknown label: " + label);
  }
  if (spec.s < 3 || spec.s > 40) throw std::invalid_argument("unsupported point count: " + label);
  return spec;
}

bool matches(const PointConfiguration& cfg, const LabelSpec& spec) {
  if (cfg.size() != spec.s || cfg.dim() != 2) return false;
  const auto cls = classify_config(cfg);
  switch (spec.kind) {
    case LabelSpec::Kind::CaseList:
      return cls.label == spec.number;
    case LabelSpec::Kind::General:
      return cls.profile.empty();
    case LabelSpec::Kind::Collinear:
      return cls.profile == std::vector<std::size_t>{spec.s};
    case LabelSpec::Kind::Fold:
      if (spec.incidence == 1) return cls.profile == std::vector<std::size_t>{spec.s - 2, 3};
      return cls.profile == std::vector<std::size_t>{spec.s - spec.r};
  }
  return false;
}

using Vec = std::vector<Rational>;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Vec box_point() {
    while (true) {
      Vec v = {uniform(-9, 9), uniform(-9, 9), uniform(-9, 9)};
      if (v[0] != 0 || v[1] != 0 || v[2] != 0) return v;
    }
  }

  Vec line() {
    while (true) {
      Vec l = {uniform(-3, 3), uniform(-3, 3), uniform(-3, 3)};
      if (l[0] != 0 || l[1] != 0 || l[2] != 0) return l;
    }
  }

  // Box points on the line, projectively distinct, in a random order.
  std::vector<Vec> points_on(const Vec& l, std::size_t count) {
    std::vector<Vec> found;
    std::set<std::vector<std::string>> seen;
    for (int a = -9; a <= 9; ++a) {
      for (int b = -9; b <= 9; ++b) {
        for (int c = -9; c <= 9; ++c) {
          if ((a == 0 && b == 0 && c == 0) || l[0] * a + l[1] * b + l[2] * c != 0) continue;
          ProjectivePoint p(Vec{a, b, c});
          std::vector<std::string> key;
          for (const auto& x : p.coords()) key.push_back(to_string(x));
          if (seen.insert(key).second) found.push_back({a, b, c});
        }
      }
    }
    std::shuffle(found.begin(), found.end(), rng_);
    if (found.size() > count) found.resize(count);
    return found;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// One candidate with `on_line` points on a line and the rest from the box.
std::vector<Vec> line_plus_generic(Sampler& smp, std::size_t on_line, std::size_t rest) {
  auto pts = smp.points_on(smp.line(), on_line);
  for (std::size_t i = 0; i < rest; ++i) pts.push_back(smp.box_point());
  return pts;
}

// Two lines through a common point P, with a and b further points.
std::vector<Vec> two_lines_meeting(Sampler& smp, std::size_t a, std::size_t b) {
  const Vec l1 = smp.line();
  const Vec l2 = smp.line();
  const Vec p = cross(l1, l2);
  std::vector<Vec> pts = {p};
  for (auto& q : smp.points_on(l1, a)) pts.push_back(q);
  for (auto& q : smp.points_on(l2, b)) pts.push_back(q);
  return pts;
}

std::vector<Vec> candidate(Sampler& smp, const LabelSpec& spec) {
  const std::size_t s = spec.s;
  auto generic = [&](std::size_t n) {
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(smp.box_point());
    return pts;
  };
  switch (spec.kind) {
    case LabelSpec::Kind::General:
      return generic(s);
    case LabelSpec::Kind::Collinear:
      return smp.points_on(smp.line(), s);
    case LabelSpec::Kind::Fold:
      if (spec.incidence == 1) {
        // Line through two extra points meets the long line at a member.
        auto pts = two_lines_meeting(smp, s - 3, 2);
        return pts;
      }
      return line_plus_generic(smp, s - spec.r, spec.r);
    case LabelSpec::Kind::CaseList:
      break;
  }
  const int n = spec.number;
  if (s == 4) {
    if (n == 1) return generic(4);
    return line_plus_generic(smp, n == 2 ? 4 : 3, n == 2 ? 0 : 1);
  }
  if (s == 5) {
    switch (n) {
      case 1: return generic(5);
      case 2: return smp.points_on(smp.line(), 5);
      case 3: return line_plus_generic(smp, 4, 1);
      case 4: return line_plus_generic(smp, 3, 2);
      default: return two_lines_meeting(smp, 2, 2);
    }
  }
  switch (n) {
    case 1: return generic(6);
    case 2: return smp.points_on(smp.line(), 6);
    case 3: return line_plus_generic(smp, 5, 1);
    case 4: return line_plus_generic(smp, 4, 2);
    case 5: return two_lines_meeting(smp, 3, 2);
    case 6: return line_plus_generic(smp, 3, 3);
    case 7: {
      auto pts = smp.points_on(smp.line(), 3);
      for (auto& q : smp.points_on(smp.line(), 3)) pts.push_back(q);
      return pts;
    }
    case 8: {
      auto pts = two_lines_meeting(smp, 2, 2);
      pts.push_back(smp.box_point());
      return pts;
    }
    case 9: {
      // Triangle vertices plus one more point on each side.
      const Vec l1 = smp.line(), l2 = smp.line(), l3 = smp.line();
      std::vector<Vec> pts = {cross(l1, l2), cross(l1, l3), cross(l2, l3)};
      for (const auto& l : {l1, l2, l3}) {
        for (auto& q : smp.points_on(l, 1)) pts.push_back(q);
      }
      return pts;
    }
    case 10: {
      // Pairwise intersections of four lines.
      std::vector<Vec> ls = {smp.line(), smp.line(), smp.line(), smp.line()};
      std::vector<Vec> pts;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) pts.push_back(cross(ls[i], ls[j]));
      }
      return pts;
    }
    default: {
      // Image of (u^2, uv, v^2) under an integer matrix.
      RationalMatrix a(3, 3);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) a(i, j) = smp.uniform(-2, 2);
      }
      std::vector<Vec> pts;
      for (int k = 0; k < 6; ++k) {
        const Rational u = smp.uniform(-3, 3), v = smp.uniform(-3, 3);
        const Vec w = {u * u, u * v, v * v};
        Vec p(3);
        for (std::size_t i = 0; i < 3; ++i) p[i] = a(i, 0) * w[0] + a(i, 1) * w[1] + a(i, 2) * w[2];
        pts.push_back(p);
      }
      return pts;
    }
  }
}

std::optional<PointConfiguration> to_configuration(const std::vector<Vec>& pts) {
  std::vector<ProjectivePoint> out;
  for (const auto& p : pts) {
    if (p.size() != 3 || std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; })) {
      return std::nullopt;
    }
    ProjectivePoint q(p);
    if (std::find(out.begin(), out.end(), q) != out.end()) return std::nullopt;
    out.push_back(std::move(q));
  }
  return PointConfiguration(std::move(out));
}

}  // namespace

bool matches_label(const PointConfiguration& cfg, const std::string& label) {
  return matches(cfg, parse_label(label));
}

PointConfiguration sample_config(const std::string& label, std::uint64_t seed) {
  const auto spec = parse_label(label);
  Sampler smp(seed);
  for (int draw = 0; draw < 10000; ++draw) {
    const auto pts = candidate(smp, spec);
    if (pts.size() != spec.s) continue;
    auto cfg = to_configuration(pts);
    if (cfg && matches(*cfg, spec)) return *cfg;
  }
  throw std::runtime_error("no configuration for " + label + " within 10^4 draws");
}

namespace {

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial acc = Polynomial::constant(ring, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      sub.push_back(std::move(row));
    }
    const Polynomial term = m[0][j] * determinant(sub, ring);
    if (j % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Polynomial> minors(const std::vector<std::vector<Polynomial>>& matrix, std::size_t k) {
  if (matrix.empty() || k == 0 || k > matrix.size() || k > matrix.front().size()) {
    throw std::invalid_argument("minor size exceeds the matrix");
  }
  const RingPtr ring = matrix.front().front().ring();
  std::vector<Polynomial> out;
  combinations(matrix.size(), k, [&](const std::vector<std::size_t>& rows) {
    combinations(matrix.front().size(), k, [&](const std::vector<std::size_t>& cols) {
      std::vector<std::vector<Polynomial>> sub;
      for (auto r : rows) {
        std::vector<Polynomial> row;
        for (auto c : cols) row.push_back(matrix[r][c]);
        sub.push_back(std::move(row));
      }
      out.push_back(determinant(sub, ring));
    });
  });
  return out;
}

JacobianData jacobian(const Ideal& j, std::size_t codim) {
  if (!j.is_homogeneous()) throw std::invalid_argument("jacobian needs a homogeneous ideal");
  if (j.is_zero()) throw std::invalid_argument("jacobian of the zero ideal");
  const auto ring = j.ring();
  const auto rows = minimal_generators(j);
  if (codim == 0 || codim > rows.size() || codim > ring->arity()) {
    throw std::invalid_argument("codimension exceeds the Jacobian matrix");
  }
  JacobianData out;
  out.base = Ideal(ring, rows);
  for (const auto& g : rows) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < ring->arity(); ++v) row.push_back(differentiate(g, v));
    out.theta.push_back(std::move(row));
  }
  out.minors = Ideal(ring, minors(out.theta, codim));
  out.jacobian = Ideal(ring, minimal_generators(sum(out.base, out.minors)));
  return out;
}

PointConfiguration normalize_to_frame(const PointConfiguration& cfg) {
  require_plane(cfg);
  if (cfg.size() < 4) throw std::invalid_argument("frame normalization needs four points");
  const auto& p = cfg.points();
  RationalMatrix basis(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) basis(i, j) = p[j][i];
  }
  const auto lambda = solve(basis, p[3].coords());
  if (!lambda || std::any_of(lambda->begin(), lambda->end(), [](const Rational& c) { return c == 0; })) {
    throw std::domain_error("first four points do not form a projective frame");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) basis(i, j) *= (*lambda)[j];
  }
  const auto inv = *inverse(basis);
  std::vector<std::vector<Rational>> moved;
  for (const auto& q : p) {
    std::vector<Rational> v(3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) v[i] += inv(i, j) * q[j];
    }
    moved.push_back(std::move(v));
  }
  return PointConfiguration::from_coordinates(moved);
}

namespace {

Monomial mono(int a, int b, int c) { return Monomial{a, b, c}; }

std::vector<Monomial> glp_leads(int d) {
  std::vector<Monomial> leads;
  for (int i = 1; i <= d - 1; ++i) leads.push_back(mono(d - i, i, 0));
  leads.push_back(mono(d - 1, 0, 1));
  leads.push_back(mono(d - 2, 1, 1));
  return leads;
}

}  // namespace

std::vector<Monomial> glp_initial_monomials(int d) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  auto leads = glp_leads(d);
  leads.push_back(mono(0, d, 1));
  return MonomialIdeal(3, std::move(leads)).generators();
}

std::vector<Polynomial> glp_binomial_generators(int d, const PointConfiguration& cfg) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  require_plane(cfg);
  const std::size_t s = static_cast<std::size_t>(d * (d + 1) / 2);
  if (cfg.size() != s) throw std::invalid_argument("expected binomial(d+1, 2) points");
  const auto& p = cfg.points();
  const std::vector<Rational> frame[4] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    if (p[i].coords() != frame[i]) throw std::invalid_argument("first four points are not the standard frame");
  }
  const auto leads = glp_leads(d);
  std::vector<Monomial> excluded = leads;
  excluded.push_back(mono(d, 0, 0));
  excluded.push_back(mono(0, d, 0));
  excluded.push_back(mono(0, 0, d));
  std::vector<Monomial> basis;
  for (const auto& m : monomials_of_degree(3, d)) {
    if (std::find(excluded.begin(), excluded.end(), m) == excluded.end()) basis.push_back(m);
  }
  const auto ring = plane_ring();
  // Rows: points past the coordinate points (the coordinate points kill the
  // pure powers and every monomial of the basis automatically).
  const std::size_t n = basis.size();
  RationalMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      a(r, c) = Polynomial::from_monomial(ring, basis[c]).evaluate(p[3 + r].coords());
    }
  }
  std::vector<Polynomial> out;
  for (const auto& lead : leads) {
    const Polynomial lp = Polynomial::from_monomial(ring, lead);
    std::vector<Rational> rhs(n);
    for (std::size_t r = 0; r < n; ++r) rhs[r] = -lp.evaluate(p[3 + r].coords());
    const auto alpha = solve(a, rhs);
    if (!alpha) throw std::domain_error("singular coefficient system");
    std::vector<Term> terms = {{lead, 1}};
    for (std::size_t c = 0; c < n; ++c) terms.push_back({basis[c], (*alpha)[c]});
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

std::vector<Polynomial> glp_binomial_generators_checked(int d, const PointConfiguration& cfg) {
  require_plane(cfg);
  if (!collinear_sets(cfg).empty()) throw std::domain_error("points are not in general linear position");
  return glp_binomial_generators(d, cfg);
}

}  // namespace vvkit
