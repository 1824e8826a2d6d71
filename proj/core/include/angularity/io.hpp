#pragma once

// JSON formats for forms, cones, polytopes, weights, boxes and partitions.
// Parse failures raise ParseError naming the offending JSON path.

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "angularity/cones.hpp"
#include "angularity/curvmeas.hpp"
#include "angularity/exterior.hpp"
#include "angularity/polytope.hpp"
#include "angularity/repcomb.hpp"

namespace angularity {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Reads and parses a JSON file; the path of errors is the file name.
Json load_json_file(const std::string& file);

/// "p/q", "p", or a JSON number (converted exactly).
Rational rational_from_json(const Json& j, const std::string& path);
std::string rational_to_string(const Rational& q);

/// {"n", "base", "fiber", "terms": [{"base_idx": [...], "fiber_idx": [...], "coef"}]}
/// with 1-based strictly increasing indices.
BiGradedForm form_from_json(const Json& j, const std::string& path = "$");
Json to_json(const BiGradedForm& omega);

/// {"n", "generators": [[...]], "lineality": [[...]]}
PolyCone cone_from_json(const Json& j, const std::string& path = "$");
Json to_json(const PolyCone& cone);

/// {"n", "vertices": [[...]]} with rational or float coordinates.
Polytope polytope_from_json(const Json& j, const std::string& path = "$");
Json to_json(const Polytope& p);

/// {"variant": "federer" | "quadratic" | "constcoeff" | "tabulated-id",
///  "k", "Q"?, "omega"?, "id"?}
WeightSpec weight_from_json(const Json& j, int n, const std::string& path = "$");
/// A single weight object or an array of them.
std::vector<WeightSpec> weights_from_json(const Json& j, int n, const std::string& path = "$");

/// "all" or {"lo": [...], "hi": [...]}.
BorelBox box_from_json(const Json& j, int n, const std::string& path = "$");

Partition partition_from_json(const Json& j, const std::string& path = "$");
Json to_json(const Partition& p);

}  // namespace angularity
