#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vvkit/json_io.hpp"

namespace vvkit {

/// Outcome of one registered claim. `status` is "pass", "fail",
/// "indeterminate" or, for open conjectures, "experimental".
struct ReproResult {
  std::string id;
  std::string status;
  Json details;

  Json to_json() const;
};

struct ReproOptions {
  unsigned threads = 1;
};

struct ReproClaim {
  std::string id;
  std::string description;
  /// Excluded from default runs; needs an explicit opt-in.
  bool slow = false;
};

/// All registered claims, sorted by id.
const std::vector<ReproClaim>& repro_claims();
/// Throws std::invalid_argument for an unknown id.
const ReproClaim& find_claim(const std::string& id);
ReproResult run_repro(const std::string& id, const ReproOptions& options = {});

/// m^{2d-2} inside the Jacobian ideal of binomial(d+1, 2) sampled general
/// points, one trial per seed offset. Always reports "experimental".
ReproResult conjecture_experiment(int d, std::uint64_t seed, int trials, const ReproOptions& options = {});

// Named configurations used by the collinear-family claims.

/// f = prod (x - a_i y) over a_1..a_{s-1} in k[x, y], and the ideal
/// (x f_x, y f_x, x f_y, y f_y).
struct CollinearPencil {
  Polynomial f;
  Ideal a;
};
CollinearPencil collinear_pencil(int s);
/// Numerators of the series of k[x,y]/((f) cap a^2) and k[x,y]/(f)a
/// predicted for the pencil of s - 1 lines.
std::vector<BigInt> pencil_intersection_numerator(int s);
std::vector<BigInt> pencil_product_numerator(int s);

/// s - 2 points [1:a_i:0] with a_i not 0 or 1, plus [0:0:1] and [1:1:1].
PointConfiguration two_off_line_config(int s);
/// The degree s - 2 binary form through the points on z = 0 with value 1
/// at (1, 1).
Polynomial two_off_line_form(int s);

/// s - 3 points [a_i:1:0] with prod a_i = 1, plus [1:0:1], [0:1:1], [0:0:1].
PointConfiguration three_off_line_config(int s);

}  // namespace vvkit
