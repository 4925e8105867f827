// Batch front door: load vector families from JSON files, run perturbation
// certificates, and emit machine-readable reports.
//
//   framecert bounds <family.json>
//   framecert certify <theorem> <base.json> <perturbed.json> [--lambda --mu --seed --p]
//   framecert gallery <name> [--depth N] [--out DIR]
//   framecert gap <k.json> <l.json>
//
// Exit codes: 0 success / certificate passed, 1 hypothesis failed,
// 2 usage or input error, 3 enclosure or internal-check failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "framecert/errors.hpp"
#include "framecert/family_io.hpp"
#include "framecert/gallery.hpp"

namespace fc = framecert;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitHypothesisFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSoundness = 3;

void emit(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int report_exit(const fc::CertificateReport& report) {
  if (!report.hypothesis_ok) return kExitHypothesisFailed;
  if (!report.checks_ok || !report.enclosed.value_or(true)) return kExitSoundness;
  return kExitOk;
}

int run_bounds(const std::string& path) {
  const fc::FamilyFile file = fc::load_family_file(path);
  const fc::VectorFamily fam = fc::to_vector_family(file);

  const fc::FrameInfo frame = fc::frame_bounds(fam);
  const fc::RieszInfo riesz = fc::riesz_bounds(fam);
  ordered_json out;
  out["frame_bounds"] = fc::bounds_json(frame.bounds);
  out["is_frame"] = frame.is_frame;
  out["riesz_bounds"] = fc::bounds_json(riesz.bounds);
  out["is_riesz"] = riesz.is_riesz;
  try {
    out["sequence_bounds"] = fc::bounds_json(fc::frame_sequence_bounds(fam));
  } catch (const fc::Error& e) {
    if (e.kind() != fc::ErrorKind::ZeroFamily) throw;
    out["sequence_bounds"] = nullptr;
  }
  out["excess"] = fc::excess(fam);
  out["rank"] = fc::rank(fc::synthesis(fam));
  emit(out);
  return kExitOk;
}

fc::SchauderFramePair load_pair(const fc::FamilyFile& file, std::optional<fc::PNorm> p_flag,
                                const std::string& path) {
  if (!file.functionals) {
    fc::raise(fc::ErrorKind::ParseError, path + ": schauder theorems need \"functionals\"");
  }
  const fc::PNorm p = p_flag ? *p_flag : file.p.value_or(fc::PNorm::two);
  return fc::SchauderFramePair(
      fc::PNormSpace{file.dimension, p},
      fc::rows_matrix(file.vectors, file.dimension, path + ".vectors"),
      fc::rows_matrix(*file.functionals, file.dimension, path + ".functionals"));
}

int run_certify(const std::string& theorem, const std::string& base_path,
                const std::string& pert_path, double lambda, double mu, std::uint64_t seed,
                std::optional<fc::PNorm> p_flag) {
  const fc::FamilyFile base = fc::load_family_file(base_path);
  const fc::FamilyFile pert = fc::load_family_file(pert_path);
  if (base.dimension != pert.dimension) {
    fc::raise(fc::ErrorKind::DimensionMismatch, "base and perturbed dimensions differ");
  }

  fc::CertificateReport report;
  if (theorem == "thm31" || theorem == "thm33" || theorem == "thm34") {
    const fc::SchauderFramePair pair = load_pair(base, p_flag, base_path);
    if (theorem == "thm34") {
      if (!pert.functionals) {
        fc::raise(fc::ErrorKind::ParseError,
                  pert_path + ": thm34 needs the perturbed \"functionals\"");
      }
      report = fc::thm34_certificate(
          pair, fc::rows_matrix(*pert.functionals, pert.dimension, pert_path), seed);
    } else {
      const fc::Matrix y = fc::rows_matrix(pert.vectors, pert.dimension, pert_path);
      report = theorem == "thm31" ? fc::thm31_certificate(pair, y, seed)
                                  : fc::thm33_certificate(pair, y, seed);
    }
  } else {
    const fc::VectorFamily f = fc::to_vector_family(base);
    const fc::VectorFamily h = fc::to_vector_family(pert);
    std::optional<fc::VectorFamily> dual;
    if (base.dual) {
      fc::FamilyFile dual_file;
      dual_file.dimension = base.dimension;
      dual_file.vectors = *base.dual;
      dual = fc::to_vector_family(dual_file);
    }

    if (theorem == "pw") {
      report = fc::paley_wiener_report(f, h);
    } else if (theorem == "christensen") {
      report = fc::christensen_certificate(f, h, lambda, mu, seed);
    } else if (theorem == "thm21") {
      report = fc::thm21_certificate(f, h, dual ? &*dual : nullptr);
    } else if (theorem == "fz") {
      report = fc::favier_zalik_certificate(f, h);
    } else if (theorem == "qc") {
      report = fc::quadratic_closeness_check(f, h);
    } else if (theorem == "nearriesz") {
      report = fc::near_riesz_excess_certificate(f, h);
    } else if (theorem == "gap") {
      report = fc::gap_certificate(f, h, dual ? &*dual : nullptr);
    } else if (theorem == "riesz") {
      report = fc::riesz_sequence_certificate(f, h);
    } else {
      fc::raise(fc::ErrorKind::UnknownTheorem, theorem);
    }
  }
  emit(fc::report_json(report));
  return report_exit(report);
}

int run_gap(const std::string& k_path, const std::string& l_path) {
  const fc::VectorFamily k_fam = fc::to_vector_family(fc::load_family_file(k_path));
  const fc::VectorFamily l_fam = fc::to_vector_family(fc::load_family_file(l_path));
  const fc::GapValue delta = fc::gap(k_fam, l_fam);

  const fc::Matrix uk = fc::orthonormal_span(fc::synthesis(k_fam));
  const fc::Matrix ul = fc::orthonormal_span(fc::synthesis(l_fam));
  double sigma_min = 0.0;
  if (uk.cols() > 0 && ul.cols() > 0) {
    const fc::Matrix projected = fc::multiply(fc::multiply(ul, fc::transpose(ul)), uk);
    const auto sv = fc::singular_values(projected);
    sigma_min = sv.empty() ? 0.0 : sv.back();
  }
  ordered_json out;
  out["delta"] = delta.delta;
  out["dim_K"] = uk.cols();
  out["dim_L"] = ul.cols();
  out["sigma_min_projection"] = sigma_min;
  emit(out);
  return kExitOk;
}

void write_family(const std::filesystem::path& dir, const std::string& filename,
                  const std::string& key, fc::FamilyFile file, ordered_json& files_entry) {
  const std::filesystem::path path = dir / filename;
  fc::save_family_file(path.string(), file);
  files_entry[key] = path.string();
}

int run_gallery(const std::string& name, std::size_t depth, const std::string& out_dir) {
  namespace gal = fc::gallery;
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);

  ordered_json summary;
  summary["name"] = name;
  summary["depth"] = depth;
  ordered_json files;

  if (name == "ex21" || name == "remark22") {
    fc::VectorFamily f(1, 1), h(1, 1), g(1, 1);
    fc::SeriesTrace lambda_trace, mu_trace;
    if (name == "ex21") {
      gal::Example21 ex = gal::example21(depth);
      summary["n_offset"] = ex.n_offset;
      f = std::move(ex.f);
      h = std::move(ex.h);
      g = std::move(ex.g);
      lambda_trace = std::move(ex.lambda_trace);
      mu_trace = std::move(ex.mu_trace);
    } else {
      gal::Remark22 ex = gal::example_remark22(depth);
      f = std::move(ex.f);
      h = std::move(ex.h);
      g = std::move(ex.g);
      lambda_trace = std::move(ex.lambda_trace);
      mu_trace = std::move(ex.mu_trace);
    }
    fc::FamilyFile f_file = fc::from_vector_family(f);
    f_file.dual = fc::from_vector_family(g).vectors;
    write_family(dir, name + "_f.json", "f", std::move(f_file), files);
    write_family(dir, name + "_h.json", "h", fc::from_vector_family(h), files);

    const fc::FrameInfo fb = fc::frame_bounds(f);
    summary["f_bounds"] = fc::bounds_json(fb.bounds);
    summary["f_is_frame"] = fb.is_frame;
    summary["h_bounds"] = fc::bounds_json(fc::frame_bounds(h).bounds);
    summary["lambda_trace"] = fc::trace_json(lambda_trace);
    summary["mu_trace"] = fc::trace_json(mu_trace);
    summary["lambda"] = lambda_trace.total();
    summary["mu"] = mu_trace.total();
  } else if (name == "ex22") {
    const gal::Example22 ex = gal::example22(depth);
    write_family(dir, "ex22_f.json", "f", fc::from_vector_family(ex.f), files);
    write_family(dir, "ex22_g.json", "g", fc::from_vector_family(ex.g), files);
    summary["ratios"] = ex.ratios;
    summary["diff_sq_trace"] = fc::trace_json(ex.diff_sq_trace);
    summary["nonzero_part_is_riesz"] = ex.nonzero_part_riesz;
    summary["nonzero_part_bounds"] = fc::bounds_json(ex.nonzero_part_bounds);
  } else if (name == "ex31") {
    const gal::Example31 ex = gal::example31(depth);
    fc::FamilyFile pair_file;
    pair_file.dimension = depth;
    pair_file.p = fc::PNorm::two;
    for (std::size_t k = 0; k < ex.pair.size(); ++k) {
      pair_file.vectors.emplace_back(ex.pair.x(k).begin(), ex.pair.x(k).end());
    }
    pair_file.functionals.emplace();
    for (std::size_t k = 0; k < ex.pair.size(); ++k) {
      pair_file.functionals->emplace_back(ex.pair.f(k).begin(), ex.pair.f(k).end());
    }
    write_family(dir, "ex31_pair.json", "pair", std::move(pair_file), files);

    fc::FamilyFile y_file;
    y_file.dimension = depth;
    for (std::size_t k = 0; k < ex.y_rows.rows(); ++k) {
      y_file.vectors.emplace_back(ex.y_rows.row(k).begin(), ex.y_rows.row(k).end());
    }
    write_family(dir, "ex31_y.json", "y", std::move(y_file), files);

    summary["n_offset"] = ex.n_offset;
    summary["reconstruction_residual"] = fc::reconstruction_residual(ex.pair);
    summary["mu_trace"] = fc::trace_json(ex.mu_trace);
    summary["lambda_trace"] = fc::trace_json(ex.lambda_trace);
    summary["mu"] = ex.mu_trace.total();
    summary["lambda"] = ex.lambda_trace.total();
  } else if (name == "dichotomy") {
    const gal::Dichotomy demo = gal::dichotomy_demo(depth);
    write_family(dir, "dichotomy_f.json", "f", fc::from_vector_family(demo.f), files);
    if (demo.report.extension) {
      write_family(dir, "dichotomy_g.json", "g",
                   fc::from_vector_family(*demo.report.extension), files);
    }
    if (demo.report.witness) {
      write_family(dir, "dichotomy_h.json", "h",
                   fc::from_vector_family(*demo.report.witness), files);
    }
    summary["dichotomy"] = fc::dichotomy_json(demo.report);
  } else {
    fc::raise(fc::ErrorKind::UnknownGallery, name);
  }

  summary["files"] = files;
  const std::filesystem::path summary_path = dir / (name + "_summary.json");
  std::ofstream out(summary_path);
  if (!out) fc::raise(fc::ErrorKind::ParseError, "cannot write " + summary_path.string());
  out << summary.dump(2) << '\n';
  emit(summary);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional frame perturbation certificates"};
  app.require_subcommand(1);

  std::string family_path;
  auto* bounds_cmd = app.add_subcommand("bounds", "frame/Riesz/sequence bounds of a family");
  bounds_cmd->add_option("file", family_path, "family JSON file")->required();

  std::string theorem, base_path, pert_path;
  double lambda = 0.0, mu = 0.0;
  std::uint64_t seed = 0;
  std::string p_text;
  auto* certify_cmd = app.add_subcommand("certify", "run a perturbation certificate");
  certify_cmd
      ->add_option("theorem", theorem,
                   "one of pw, christensen, thm21, fz, qc, nearriesz, gap, riesz, "
                   "thm31, thm33, thm34")
      ->required();
  certify_cmd->add_option("base", base_path, "base family JSON file")->required();
  certify_cmd->add_option("perturbed", pert_path, "perturbed family JSON file")->required();
  certify_cmd->add_option("--lambda", lambda, "closeness parameter (christensen)");
  certify_cmd->add_option("--mu", mu, "closeness parameter (christensen)");
  certify_cmd->add_option("--seed", seed, "seed for sampled validation (default 0)");
  certify_cmd->add_option("--p", p_text, "norm exponent override: 1, 2, or inf");

  std::string gallery_name, out_dir = ".";
  std::size_t depth = 4;
  auto* gallery_cmd = app.add_subcommand("gallery", "generate a worked example");
  gallery_cmd
      ->add_option("name", gallery_name, "one of ex21, remark22, ex22, ex31, dichotomy")
      ->required();
  gallery_cmd->add_option("--depth", depth, "truncation depth (default 4)");
  gallery_cmd->add_option("--out", out_dir, "output directory (default .)");

  std::string k_path, l_path;
  auto* gap_cmd = app.add_subcommand("gap", "directional gap between two spans");
  gap_cmd->add_option("k", k_path, "family spanning K")->required();
  gap_cmd->add_option("l", l_path, "family spanning L")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bounds_cmd) return run_bounds(family_path);
    if (*certify_cmd) {
      const std::set<std::string> known = {"pw",        "christensen", "thm21", "fz",
                                           "qc",        "nearriesz",   "gap",   "riesz",
                                           "thm31",     "thm33",       "thm34"};
      if (!known.count(theorem)) fc::raise(fc::ErrorKind::UnknownTheorem, theorem);
      std::optional<fc::PNorm> p_flag;
      if (!p_text.empty()) {
        if (p_text == "1") {
          p_flag = fc::PNorm::one;
        } else if (p_text == "2") {
          p_flag = fc::PNorm::two;
        } else if (p_text == "inf") {
          p_flag = fc::PNorm::inf;
        } else {
          fc::raise(fc::ErrorKind::UnsupportedNorm, "--p must be 1, 2, or inf");
        }
      }
      return run_certify(theorem, base_path, pert_path, lambda, mu, seed, p_flag);
    }
    if (*gallery_cmd) return run_gallery(gallery_name, depth, out_dir);
    if (*gap_cmd) return run_gap(k_path, l_path);
  } catch (const fc::Error& e) {
    ordered_json err;
    err["error"] = fc::to_string(e.kind());
    err["message"] = e.what();
    std::cerr << err.dump(2) << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
