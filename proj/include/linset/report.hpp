#pragma once

// JSON/CSV rendering of results. Objects use sorted keys and integer
// encodings only, so equal requests produce identical bytes.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "linset/classify.hpp"
#include "linset/finitefield.hpp"
#include "linset/geometry.hpp"
#include "linset/projline.hpp"

namespace linset {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

Json field_json(const FieldSpec& spec);
Json header_json(const FieldCtx& F, const std::string& command, std::uint64_t seed = 0);

Json profile_json(const LinearSetProfile& prof);
Json class_json(const ClassReport& rep);
Json map_json(const SemilinearMap& m);
Json rank_distribution_json(const FieldCtx& F, const std::vector<std::uint64_t>& dist, bool mrd);
Json blocking_json(const BlockingReport& rep);

// Header `r,count`, one row per rank.
std::string rank_distribution_csv(const std::vector<std::uint64_t>& dist);

struct Report {
  Json header;
  Json body;
  bool falsified = false;
  // Tabular rendering when the body has one; empty otherwise.
  std::string csv;
};

// Throws BadParams for an unknown format or a body with no CSV form.
std::string emit(const Report& report, const std::string& format);

}  // namespace linset
