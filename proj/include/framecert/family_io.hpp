#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "framecert/certificates.hpp"
#include "framecert/hilbert.hpp"
#include "framecert/numerics.hpp"
#include "framecert/schauder.hpp"

namespace framecert {

// On-disk family description: a dimension, the member vectors, and for
// Schauder work an optional functional list and norm exponent. An optional
// dual family rides along for certificates that accept one.
struct FamilyFile {
  std::size_t dimension = 0;
  std::vector<std::vector<double>> vectors;
  std::optional<std::vector<std::vector<double>>> dual;
  std::optional<std::vector<std::vector<double>>> functionals;
  std::optional<PNorm> p;
};

FamilyFile parse_family(const nlohmann::json& j, const std::string& context);
FamilyFile load_family_file(const std::string& path);
nlohmann::ordered_json family_json(const FamilyFile& file);
void save_family_file(const std::string& path, const FamilyFile& file);

VectorFamily to_vector_family(const FamilyFile& file);
FamilyFile from_vector_family(const VectorFamily& fam);
Matrix rows_matrix(const std::vector<std::vector<double>>& rows, std::size_t dimension,
                   const std::string& context);

PNorm parse_pnorm(const nlohmann::json& j, const std::string& context);
nlohmann::json pnorm_json(PNorm p);

nlohmann::ordered_json bounds_json(const FrameBounds& b);
nlohmann::ordered_json trace_json(const SeriesTrace& t);
nlohmann::ordered_json report_json(const CertificateReport& report);
nlohmann::ordered_json dichotomy_json(const DichotomyReport& report);

}  // namespace framecert
