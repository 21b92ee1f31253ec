// Command-line front end. Every subcommand prints one JSON document on
// stdout. Exit status: 0 success or claim holds, 1 well-formed negative
// answer, 2 usage or computation error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "vvkit/repro.hpp"

using namespace vvkit;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

unsigned env_threads() {
  const char* v = std::getenv("VVKIT_THREADS");
  if (!v || !*v) return 1;
  try {
    const long n = std::stol(v);
    return n < 1 ? 1u : static_cast<unsigned>(n);
  } catch (const std::exception&) {
    throw std::invalid_argument("VVKIT_THREADS must be a positive integer");
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// A points file or an ideal file.
struct Input {
  std::optional<PointConfiguration> points;
  Ideal ideal;
};

Input load(const std::string& path) {
  const Json j = read_json_file(path);
  Input in;
  if (j.is_object() && j.contains("points")) {
    in.points = points_from_json(j);
    in.ideal = ideal_of_points(*in.points);
  } else {
    in.ideal = ideal_from_json(j);
  }
  return in;
}

std::size_t codim_of(const Input& in) {
  if (in.points) return in.points->dim();
  const auto hs = hilbert_series(in.ideal);
  return in.ideal.ring()->arity() - static_cast<std::size_t>(hs.pole_order());
}

// Number of points for a points file, the multiplicity otherwise.
int point_count(const Input& in) {
  if (in.points) return static_cast<int>(in.points->size());
  return static_cast<int>(hilbert_series(in.ideal).multiplicity().get_si());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gröbner bases, Hilbert series and Valabrega-Valla checks for plane point sets"};
  app.require_subcommand(1);
  int code = kOk;

  std::string file;
  std::string order = "degrevlex";
  auto* gb = app.add_subcommand("gb", "reduced Gröbner basis of an ideal file");
  gb->add_option("file", file, "ideal JSON")->required();
  gb->add_option("--order", order, "lex, degrevlex or block:k");

  auto* points_ideal = app.add_subcommand("points-ideal", "defining ideal of a points file");
  points_ideal->add_option("file", file, "points JSON")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of R/I");
  hilbert->add_option("file", file, "ideal or points JSON")->required();

  auto* classify = app.add_subcommand("classify", "collinearity profile and case label");
  classify->add_option("file", file, "points JSON")->required();

  std::string label;
  std::uint64_t seed = 1;
  auto* sample = app.add_subcommand("sample", "sample a configuration of a given class");
  sample->add_option("--class", label, "e.g. 6:7, 5-general, (7,2)-fold-off")->required();
  sample->add_option("--seed", seed);

  auto* jac = app.add_subcommand("jacobian", "Jacobian ideal J + minors");
  jac->add_option("file", file, "ideal or points JSON")->required();

  std::string tmax = "auto";
  auto* vv = app.add_subcommand("vv-check", "torsion-freeness of the Jacobian ideal");
  vv->add_option("file", file, "ideal or points JSON")->required();
  vv->add_option("--tmax", tmax, "auto (number of points) or an integer >= 2");

  int bound = 0;
  auto* rt = app.add_subcommand("relation-type", "relation type of I/J");
  rt->add_option("file", file, "ideal or points JSON")->required();
  rt->add_option("--bound", bound, "fiber-degree bound (default: number of points)");

  int e = 0;
  auto* mp = app.add_subcommand("mpower", "whether (x_1..x_n)^e lies in the ideal");
  mp->add_option("file", file, "ideal JSON")->required();
  mp->add_option("--e", e)->required();

  std::string claim;
  bool slow = false;
  auto* repro = app.add_subcommand("repro", "run a registered claim, or 'all', or 'list'");
  repro->add_option("id", claim)->required();
  repro->add_flag("--slow", slow, "include long-running claims");

  int d = 6;
  int trials = 3;
  auto* conj = app.add_subcommand("conjecture", "m^{2d-2} containment experiment");
  conj->add_option("--d", d);
  conj->add_option("--seed", seed);
  conj->add_option("--trials", trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? kOk : kError;
  }

  try {
    const unsigned threads = env_threads();
    if (*gb) {
      const auto in = load(file);
      emit(basis_to_json(in.ideal.groebner_basis(MonomialOrder::parse(order))));
    } else if (*points_ideal) {
      const auto cfg = points_from_json(read_json_file(file));
      emit(ideal_to_json(ideal_of_points(cfg)));
    } else if (*hilbert) {
      emit(series_to_json(hilbert_series(load(file).ideal)));
    } else if (*classify) {
      emit(class_to_json(classify_config(points_from_json(read_json_file(file)))));
    } else if (*sample) {
      const auto cfg = sample_config(label, seed);
      Json out = points_to_json(cfg);
      out["class"] = class_to_json(classify_config(cfg));
      emit(out);
    } else if (*jac) {
      const auto in = load(file);
      const auto data = jacobian(in.ideal, codim_of(in));
      Json out;
      out["base"] = ideal_to_json(data.base);
      out["minors"] = ideal_to_json(data.minors);
      out["jacobian"] = ideal_to_json(data.jacobian);
      emit(out);
    } else if (*vv) {
      const auto in = load(file);
      const int t = tmax == "auto" ? point_count(in) : std::stoi(tmax);
      if (t < 2) throw std::invalid_argument("--tmax must be at least 2");
      VVOptions opt;
      opt.threads = threads;
      const auto i = jacobian(in.ideal, codim_of(in)).jacobian;
      const auto report = vv_torsion_free(in.ideal, i, t, opt);
      emit(report_to_json(report));
      code = report.torsion_free ? kOk : kNegative;
    } else if (*rt) {
      const auto in = load(file);
      const auto i = jacobian(in.ideal, codim_of(in)).jacobian;
      const auto rees = relation_type(in.ideal, i, bound > 0 ? bound : point_count(in));
      emit(rees_to_json(rees));
      code = rees.exceeded_bound ? kNegative : kOk;
    } else if (*mp) {
      const bool inside = mpower_in_ideal(load(file).ideal, e);
      Json out;
      out["e"] = e;
      out["contained"] = inside;
      emit(out);
      code = inside ? kOk : kNegative;
    } else if (*repro) {
      ReproOptions opt;
      opt.threads = threads;
      if (claim == "list") {
        Json out = Json::array();
        for (const auto& c : repro_claims()) out.push_back({{"id", c.id}, {"description", c.description}, {"slow", c.slow}});
        emit(out);
      } else if (claim == "all") {
        Json out = Json::array();
        for (const auto& c : repro_claims()) {
          if (c.slow && !slow) continue;
          const auto r = run_repro(c.id, opt);
          if (r.status == "fail") code = kNegative;
          out.push_back(r.to_json());
        }
        emit(out);
      } else {
        const auto& c = find_claim(claim);
        if (c.slow && !slow) throw std::invalid_argument(claim + " is long-running; pass --slow");
        const auto r = run_repro(claim, opt);
        emit(r.to_json());
        if (r.status == "fail") code = kNegative;
      }
    } else if (*conj) {
      ReproOptions opt;
      opt.threads = threads;
      emit(conjecture_experiment(d, seed, trials, opt).to_json());
    }
  } catch (const std::exception& ex) {
    std::cerr << "vvkit: " << ex.what() << '\n';
    return kError;
  }
  return code;
}
