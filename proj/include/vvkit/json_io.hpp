#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "vvkit/geometry.hpp"
#include "vvkit/groebner.hpp"
#include "vvkit/hilbert.hpp"
#include "vvkit/ideal.hpp"
#include "vvkit/vava.hpp"

namespace vvkit {

/// Insertion-ordered, so identical inputs serialize byte for byte.
using Json = nlohmann::ordered_json;

/// Thrown for structurally invalid documents.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// {"ring": {"vars": [...]}, "gens": ["<poly>", ...]}
Json ideal_to_json(const Ideal& a);
Ideal ideal_from_json(const Json& j);

// {"dim": n, "points": [["1","0","0"], ...]}
Json points_to_json(const PointConfiguration& cfg);
PointConfiguration points_from_json(const Json& j);

Json polynomials_to_json(const std::vector<Polynomial>& ps);
Json basis_to_json(const GroebnerBasis& gb);
Json series_to_json(const HilbertSeries& hs);
Json class_to_json(const ConfigClass& c);
Json report_to_json(const VVReport& r);
Json rees_to_json(const ReesPresentation& r);

/// Reads and parses a file; FormatError on I/O or syntax failure.
Json read_json_file(const std::string& path);

}  // namespace vvkit
