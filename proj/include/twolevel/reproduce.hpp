#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twolevel/polytope.hpp"
#include "twolevel/stable_matching.hpp"

namespace twolevel {

struct Assertion {
  std::string name;
  bool pass = false;
};

struct SuiteOptions {
  PolytopeOptions poly;
  bool extended = false;      // long runs (facets of the 12-dimensional integer hull)
  std::uint64_t seed = 2017;  // randomized corpora
};

struct SuiteResult {
  std::string id;
  nlohmann::json payload;
  std::vector<Assertion> assertions;

  bool passed() const;
  void expect(std::string name, bool pass) { assertions.push_back({std::move(name), pass}); }
};

/// Known suite ids in a fixed order.
const std::vector<std::string>& suite_ids();
/// Error(UnknownId) for an id outside suite_ids().
SuiteResult reproduce(const std::string& id, const SuiteOptions& opt = {});

/// The marriage corpus: cyclic instances with n stable matchings for every
/// n in 2..5, then random instances with n in 1..5 up to `count` in total.
std::vector<SMInstance> marriage_corpus(std::size_t count, std::uint64_t seed);

}  // namespace twolevel
