#include "framecert/family_io.hpp"

#include <cmath>
#include <fstream>

#include "framecert/errors.hpp"

namespace framecert {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::vector<std::vector<double>> parse_rows(const json& j, std::size_t dimension,
                                            const std::string& context) {
  if (!j.is_array() || j.empty()) {
    raise(ErrorKind::ParseError, context + ": expected a non-empty array of rows");
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(j.size());
  std::size_t line = 0;
  for (const auto& row : j) {
    ++line;
    if (!row.is_array() || row.size() != dimension) {
      raise(ErrorKind::ParseError, context + " row " + std::to_string(line) +
                                       ": expected " + std::to_string(dimension) + " numbers");
    }
    std::vector<double> values;
    values.reserve(dimension);
    for (const auto& v : row) {
      if (!v.is_number()) {
        raise(ErrorKind::ParseError,
              context + " row " + std::to_string(line) + ": non-numeric entry");
      }
      const double x = v.get<double>();
      if (!std::isfinite(x)) {
        raise(ErrorKind::ParseError,
              context + " row " + std::to_string(line) + ": non-finite entry");
      }
      values.push_back(x);
    }
    rows.push_back(std::move(values));
  }
  return rows;
}

json rows_json(const std::vector<std::vector<double>>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

}  // namespace

PNorm parse_pnorm(const json& j, const std::string& context) {
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v == 1) return PNorm::one;
    if (v == 2) return PNorm::two;
    raise(ErrorKind::UnsupportedNorm,
          context + ": exact operator norms exist for p in {1, 2, inf} only");
  }
  if (j.is_string() && j.get<std::string>() == "inf") return PNorm::inf;
  raise(ErrorKind::ParseError, context + ": field \"p\" must be 1, 2, or \"inf\"");
}

json pnorm_json(PNorm p) {
  switch (p) {
    case PNorm::one: return json(1);
    case PNorm::two: return json(2);
    case PNorm::inf: return json("inf");
  }
  return json();
}

FamilyFile parse_family(const json& j, const std::string& context) {
  if (!j.is_object()) raise(ErrorKind::ParseError, context + ": expected a JSON object");
  if (!j.contains("dimension") || !j["dimension"].is_number_unsigned()) {
    raise(ErrorKind::ParseError, context + ": field \"dimension\" must be a positive integer");
  }
  FamilyFile file;
  file.dimension = j["dimension"].get<std::size_t>();
  if (file.dimension == 0) {
    raise(ErrorKind::ParseError, context + ": field \"dimension\" must be positive");
  }
  if (!j.contains("vectors")) {
    raise(ErrorKind::ParseError, context + ": field \"vectors\" is required");
  }
  file.vectors = parse_rows(j["vectors"], file.dimension, context + ".vectors");
  if (j.contains("dual")) {
    file.dual = parse_rows(j["dual"], file.dimension, context + ".dual");
    if (file.dual->size() != file.vectors.size()) {
      raise(ErrorKind::ParseError, context + ": dual count must match vectors");
    }
  }
  if (j.contains("functionals")) {
    file.functionals = parse_rows(j["functionals"], file.dimension, context + ".functionals");
    if (file.functionals->size() != file.vectors.size()) {
      raise(ErrorKind::ParseError, context + ": functionals count must match vectors");
    }
  }
  if (j.contains("p")) file.p = parse_pnorm(j["p"], context);
  return file;
}

FamilyFile load_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::ParseError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    raise(ErrorKind::ParseError, path + ": " + e.what());
  }
  return parse_family(j, path);
}

ordered_json family_json(const FamilyFile& file) {
  ordered_json out;
  out["dimension"] = file.dimension;
  out["vectors"] = rows_json(file.vectors);
  if (file.dual) out["dual"] = rows_json(*file.dual);
  if (file.functionals) out["functionals"] = rows_json(*file.functionals);
  if (file.p) out["p"] = pnorm_json(*file.p);
  return out;
}

void save_family_file(const std::string& path, const FamilyFile& file) {
  std::ofstream out(path);
  if (!out) raise(ErrorKind::ParseError, "cannot write " + path);
  out << family_json(file).dump(2) << '\n';
}

VectorFamily to_vector_family(const FamilyFile& file) {
  std::vector<double> packed;
  packed.reserve(file.vectors.size() * file.dimension);
  for (const auto& row : file.vectors) packed.insert(packed.end(), row.begin(), row.end());
  return VectorFamily(file.dimension, std::move(packed));
}

FamilyFile from_vector_family(const VectorFamily& fam) {
  FamilyFile file;
  file.dimension = fam.dimension();
  file.vectors.reserve(fam.size());
  for (std::size_t k = 0; k < fam.size(); ++k) {
    const auto v = fam.vec(k);
    file.vectors.emplace_back(v.begin(), v.end());
  }
  return file;
}

Matrix rows_matrix(const std::vector<std::vector<double>>& rows, std::size_t dimension,
                   const std::string& context) {
  if (rows.empty()) raise(ErrorKind::ParseError, context + ": empty row list");
  std::vector<double> packed;
  packed.reserve(rows.size() * dimension);
  for (const auto& r : rows) {
    if (r.size() != dimension) {
      raise(ErrorKind::ParseError, context + ": row length mismatch");
    }
    packed.insert(packed.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), dimension, std::move(packed));
}

ordered_json bounds_json(const FrameBounds& b) {
  ordered_json out;
  out["lower"] = b.lower;
  out["upper"] = b.upper;
  return out;
}

ordered_json trace_json(const SeriesTrace& t) {
  ordered_json out;
  out["partial_sums"] = t.partial_sums;
  out["verdict_hint"] = to_string(t.verdict);
  return out;
}

ordered_json report_json(const CertificateReport& report) {
  ordered_json out;
  out["theorem"] = report.theorem;
  ordered_json hv;
  for (const auto& [name, value] : report.hypothesis_values) hv[name] = value;
  out["hypothesis_values"] = hv;
  out["hypothesis_ok"] = report.hypothesis_ok;
  out["predicted"] = report.predicted ? bounds_json(*report.predicted) : ordered_json(nullptr);
  out["actual"] = report.actual ? bounds_json(*report.actual) : ordered_json(nullptr);
  out["enclosed"] = report.enclosed ? ordered_json(*report.enclosed) : ordered_json(nullptr);
  ordered_json extras;
  for (const auto& [name, value] : report.extras) extras[name] = value;
  extras["checks_ok"] = report.checks_ok;
  if (!report.notes.empty()) extras["notes"] = report.notes;
  out["extras"] = extras;
  ordered_json traces;
  for (const auto& [name, trace] : report.series_traces) traces[name] = trace_json(trace);
  out["series_traces"] = traces;
  return out;
}

ordered_json dichotomy_json(const DichotomyReport& report) {
  ordered_json out;
  out["ambient"] = report.ambient;
  out["codim"] = report.codim;
  out["witness_ratios"] = report.witness_ratios;
  out["diff_sq_trace"] = trace_json(report.diff_sq_trace);
  out["note"] = report.note;
  return out;
}

}  // namespace framecert
