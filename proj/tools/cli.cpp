#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "flatdef/io.hpp"

namespace flatdef::cli {

namespace {

using io::Json;

struct RunConfig {
  std::vector<std::string> inputs;
  std::string format = "text";
  std::optional<std::size_t> max_degree;
  std::string base = "1/2";
  std::size_t count = 12;
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  std::string out_path;
  std::vector<std::string> gens;
  std::vector<std::string> targets;
  std::optional<std::size_t> depth;
  std::size_t m = 1;
  std::size_t n = 0;
};

/// Input or validation failure; reported on the error stream with exit 2.
struct InputFailure {
  std::vector<std::string> lines;
};

bool json_format(const RunConfig& cfg) { return cfg.format == "json"; }

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& xs) {
  std::vector<std::string> parts;
  for (auto x : xs) parts.push_back(std::to_string(x));
  return join(parts, " ");
}

std::string vector_text(const Vector& v) {
  std::vector<std::string> parts;
  for (const auto& c : v) parts.push_back(c.to_string());
  return "[" + join(parts, ", ") + "]";
}

const std::string& single_input(const RunConfig& cfg) {
  if (cfg.inputs.size() != 1) throw CLI::ValidationError("--input", "exactly one --input is required");
  return cfg.inputs.front();
}

Presentation load_presentation(const Json& j, const RunConfig& cfg) {
  Presentation p = io::presentation_from_json(j);
  if (cfg.max_degree) p.max_degree = cfg.max_degree;
  return p;
}

/// An algebra file, or a presentation file that is built on the fly.
struct LoadedAlgebra {
  StructureAlgebra algebra;
  std::optional<BuildResult> built;
  std::vector<std::string> generators;
};

LoadedAlgebra load_algebra(const std::string& path, const RunConfig& cfg) {
  Json j = io::read_json_file(path);
  if (j.is_object() && j.contains("generators")) {
    Presentation p = load_presentation(j, cfg);
    BuildResult b = build(p);
    StructureAlgebra alg = b.algebra;
    return {std::move(alg), std::move(b), p.generators};
  }
  StructureAlgebra alg = io::algebra_from_json(j);
  ValidationReport report = validate(alg);
  if (!report.ok()) {
    InputFailure f{{"invalid algebra table in " + path}};
    for (auto& line : report.lines()) f.lines.push_back("  " + line);
    throw f;
  }
  return {std::move(alg), std::nullopt, {}};
}

Element resolve_generator(const LoadedAlgebra& loaded, const std::string& text) {
  const std::size_t n = loaded.algebra.dim();
  if (loaded.built) {
    auto it = std::find(loaded.generators.begin(), loaded.generators.end(), text);
    if (it != loaded.generators.end())
      return loaded.built->reducer.evaluate_word(
          Word::letter(static_cast<Word::Letter>(it - loaded.generators.begin())));
  }
  const auto& labels = loaded.algebra.labels();
  if (auto it = std::find(labels.begin(), labels.end(), text); it != labels.end())
    return unit_vector(n, static_cast<std::size_t>(it - labels.begin()));
  std::string body = text;
  if (!body.empty() && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  Vector v;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Scalar::parse(item));
  if (v.size() != n)
    throw InvalidInput("generator '" + text + "' is neither a known name nor a coordinate vector of length " +
                       std::to_string(n));
  return v;
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
  const std::string& path = single_input(cfg);
  Presentation p = load_presentation(io::read_json_file(path), cfg);
  BuildResult b = build(p);
  ValidationReport report = validate(b.algebra);
  std::vector<std::string> basis;
  for (const auto& w : b.word_basis) basis.push_back(w.to_string(p.generators));
  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path);
    if (!f) throw InvalidInput("cannot write " + cfg.out_path);
    f << io::to_json(b.algebra).dump(2) << "\n";
  }
  if (json_format(cfg)) {
    Json j;
    j["dim"] = b.algebra.dim();
    j["degree"] = b.degree;
    j["basis"] = basis;
    j["valid"] = report.ok();
    if (cfg.out_path.empty()) j["algebra"] = io::to_json(b.algebra);
    emit_json(out, j);
  } else {
    out << "dimension: " << b.algebra.dim() << "\n";
    out << "truncation degree: " << b.degree << "\n";
    out << "basis words: " << join(basis, ", ") << "\n";
    out << "validation: " << (report.ok() ? "associative and unital" : "FAILED") << "\n";
    if (!cfg.out_path.empty()) out << "algebra written to " << cfg.out_path << "\n";
  }
  return kOk;
}

Json analysis_json(const StructureAlgebra& alg, const ProfileResult& pr) {
  Json j;
  j["dim"] = alg.dim();
  j["radical_dim"] = pr.radical_dim;
  j["semisimple"] = pr.radical_dim == 0;
  j["profile"] = io::to_json(pr.profile);
  j["profile_text"] = pr.profile.to_string();
  j["filtration"] = io::to_json(pr.filtration);
  return j;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.empty()) throw CLI::ValidationError("--input", "at least one --input is required");
  Json docs = Json::array();
  for (std::size_t k = 0; k < cfg.inputs.size(); ++k) {
    LoadedAlgebra loaded = load_algebra(cfg.inputs[k], cfg);
    ProfileResult pr = block_profile(loaded.algebra);
    if (json_format(cfg)) {
      Json j = analysis_json(loaded.algebra, pr);
      j["input"] = cfg.inputs[k];
      docs.push_back(j);
      continue;
    }
    if (cfg.inputs.size() > 1) out << (k ? "\n" : "") << cfg.inputs[k] << "\n";
    const bool semisimple = pr.radical_dim == 0;
    out << "dim: " << loaded.algebra.dim() << "\n";
    out << "radical dim: " << pr.radical_dim << "\n";
    out << "semisimple: " << (semisimple ? "yes" : "no") << "\n";
    out << (semisimple ? "profile: " : "profile of semisimplification: ") << pr.profile.to_string() << "\n";
    out << "filtration dims: " << join_numbers(pr.filtration.dims) << "\n";
    out << "layer dims: " << join_numbers(pr.filtration.layer_dims) << "\n";
  }
  if (json_format(cfg)) emit_json(out, docs.size() == 1 ? docs.front() : docs);
  return kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const std::string& path = single_input(cfg);
  auto family = io::family_from_json(io::read_json_file(path));
  Scalar base = Scalar::parse(cfg.base);
  ScanResult result;
  if (auto* table = std::get_if<DeformationFamily>(&family)) {
    FamilyReport report = validate_family(*table);
    if (!report.ok()) {
      InputFailure f{{"family validation failed for " + path}};
      for (auto& p : report.problems) f.lines.push_back("  " + p);
      throw f;
    }
    result = scan(*table, base, cfg.count);
  } else {
    auto& sampled = std::get<SampledFamily>(family);
    if (cfg.max_degree) sampled.max_degree = cfg.max_degree;
    try {
      sampled.check();
    } catch (const Error& e) {
      throw InputFailure{{"family does not build at t = 0: " + std::string(e.what())}};
    }
    result = scan(sampled, base, cfg.count);
  }
  std::optional<TargetComparison> comparison;
  if (!cfg.targets.empty()) {
    std::vector<BlockProfile> targets;
    for (const auto& t : cfg.targets) targets.push_back(BlockProfile::parse(t));
    comparison = compare_targets(result, targets);
  }

  if (json_format(cfg)) {
    Json j;
    j["schedule"] = {{"base", base.to_string()}, {"count", cfg.count}};
    Json body = io::to_json(result);
    j["rows"] = body["rows"];
    j["verdict"] = body["verdict"];
    if (comparison) {
      Json targets = Json::array();
      for (std::size_t i = 0; i < comparison->targets.size(); ++i)
        targets.push_back({{"profile", comparison->targets[i].to_string()}, {"match", bool(comparison->matches[i])}});
      j["targets"] = targets;
      j["comparison"] = comparison->summary;
    }
    emit_json(out, j);
    return kOk;
  }
  out << "schedule: s_k = " << base.to_string() << " * 2^-k, k = 0.." << cfg.count - 1 << "\n";
  out << "k  s  dim  semisimple  radical_dim  profile\n";
  for (const auto& row : result.rows) {
    out << row.index << "  " << row.s.to_string() << "  " << row.dim << "  ";
    if (row.error) {
      out << "error: " << *row.error << "\n";
      continue;
    }
    out << (row.semisimple ? "yes" : "no") << "  " << row.radical_dim << "  " << row.profile.to_string() << "\n";
  }
  out << "verdict: " << to_string(result.verdict.kind);
  if (result.verdict.profile)
    out << " " << result.verdict.profile->to_string() << " from k0 = " << *result.verdict.from_index;
  out << "\n";
  if (comparison) {
    for (std::size_t i = 0; i < comparison->targets.size(); ++i)
      out << "target " << comparison->targets[i].to_string() << ": " << (comparison->matches[i] ? "match" : "no match")
          << "\n";
    out << comparison->summary << "\n";
  }
  return kOk;
}

int cmd_obstruct(const RunConfig& cfg, std::ostream& out) {
  const std::string& path = single_input(cfg);
  LoadedAlgebra loaded = load_algebra(path, cfg);
  std::vector<std::string> gens = cfg.gens;
  if (gens.empty() && loaded.generators.size() == 2) gens = loaded.generators;
  if (gens.size() != 2) throw CLI::ValidationError("--gen", "exactly two generators are required");
  Element x = resolve_generator(loaded, gens[0]);
  Element y = resolve_generator(loaded, gens[1]);
  ObstructionOptions opts;
  opts.depth = cfg.depth;
  opts.trials = cfg.trials;
  opts.seed = cfg.seed;
  ObstructionReport report;
  try {
    report = admissible_targets(loaded.algebra, x, y, opts);
  } catch (const NotGenerating& e) {
    throw InputFailure{{"NotGenerating: " + std::string(e.what()) + " (algebra dimension " +
                        std::to_string(loaded.algebra.dim()) + ")"}};
  }
  if (json_format(cfg)) {
    Json j = io::to_json(report);
    j["generators"] = {{"x", gens[0]}, {"y", gens[1]}};
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    emit_json(out, j);
    return kOk;
  }
  out << "generators: x = " << gens[0] << " " << vector_text(x) << ", y = " << gens[1] << " " << vector_text(y)
      << "\n";
  out << "family: tower of depth " << report.family.tower_depth.value_or(0) << " (" << report.family.words.size()
      << " words)\n";
  out << "dim_in_N: " << report.dim_in_N << "\n";
  out << "profile  bound  sampled  status\n";
  for (const auto& row : report.targets)
    out << row.profile.to_string() << "  " << (row.bound ? std::to_string(*row.bound) : "none") << "  "
        << row.sampled << "  " << to_string(row.status) << "\n";
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n == 0) throw CLI::ValidationError("n", "n must be at least 1");
  auto profiles = enumerate_semisimple_types(cfg.n);
  if (json_format(cfg)) {
    Json list = Json::array();
    for (const auto& p : profiles) list.push_back(io::to_json(p));
    emit_json(out, Json{{"n", cfg.n}, {"count", profiles.size()}, {"profiles", list}});
    return kOk;
  }
  for (const auto& p : profiles) out << p.to_string() << "\n";
  return kOk;
}

int cmd_identity_span(const RunConfig& cfg, std::ostream& out) {
  LoadedAlgebra loaded = load_algebra(single_input(cfg), cfg);
  Subspace span = identity_span(loaded.algebra, cfg.m);
  Subspace ideal = ideal_closure(loaded.algebra, span);
  if (json_format(cfg)) {
    emit_json(out, Json{{"dim", loaded.algebra.dim()}, {"m", cfg.m}, {"span_dim", span.dim()}, {"ideal_dim", ideal.dim()}});
    return kOk;
  }
  out << "dim: " << loaded.algebra.dim() << "\n";
  out << "s_" << 2 * cfg.m << " evaluation span dim: " << span.dim() << "\n";
  out << "generated ideal dim: " << ideal.dim() << "\n";
  return kOk;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact analysis of finite-dimensional algebras and their polynomial deformations", "flatdef"};
  app.require_subcommand(1);

  auto* build_cmd = app.add_subcommand("build", "Build an algebra from a presentation file");
  build_cmd->add_option("--input", cfg.inputs, "Presentation JSON")->required();
  build_cmd->add_option("--max-degree", cfg.max_degree, "Truncation cap");
  build_cmd->add_option("--out", cfg.out_path, "Write the algebra JSON here");

  auto* analyze_cmd = app.add_subcommand("analyze", "Radical, semisimplicity and block profile");
  analyze_cmd->add_option("--input", cfg.inputs, "Algebra or presentation JSON (repeatable)")->required();
  analyze_cmd->add_option("--max-degree", cfg.max_degree, "Truncation cap for presentation inputs");

  auto* scan_cmd = app.add_subcommand("scan", "Specialize a family along s = base * 2^-k");
  scan_cmd->add_option("--input", cfg.inputs, "Family JSON")->required();
  scan_cmd->add_option("--base", cfg.base, "Schedule base (positive rational)");
  scan_cmd->add_option("--count", cfg.count, "Number of samples");
  scan_cmd->add_option("--max-degree", cfg.max_degree, "Truncation cap for relation families");
  scan_cmd->add_option("--target", cfg.targets, "Candidate profile such as \"1^2\" (repeatable)");

  auto* obstruct_cmd = app.add_subcommand("obstruct", "Exclude semisimple deformation targets");
  obstruct_cmd->add_option("--input", cfg.inputs, "Algebra or presentation JSON")->required();
  obstruct_cmd->add_option("--gen", cfg.gens, "Generator name or coordinate vector (give twice)")
      ->allow_extra_args(false);
  obstruct_cmd->add_option("--depth", cfg.depth, "Tower depth (default: algebra dimension)");
  obstruct_cmd->add_option("--trials", cfg.trials, "Sampling trials per target");
  obstruct_cmd->add_option("--seed", cfg.seed, "Sampling seed");
  obstruct_cmd->add_option("--max-degree", cfg.max_degree, "Truncation cap for presentation inputs");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List semisimple types of dimension n");
  enumerate_cmd->add_option("n", cfg.n, "Dimension")->required();

  auto* span_cmd = app.add_subcommand("identity-span", "Standard identity evaluation span and ideal");
  span_cmd->add_option("--input", cfg.inputs, "Algebra or presentation JSON")->required();
  span_cmd->add_option("--m", cfg.m, "Use s_{2m}")->required()->check(CLI::PositiveNumber);
  span_cmd->add_option("--max-degree", cfg.max_degree, "Truncation cap for presentation inputs");

  for (auto* sub : {build_cmd, analyze_cmd, scan_cmd, obstruct_cmd, enumerate_cmd, span_cmd}) add_common(sub, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build_cmd) return cmd_build(cfg, out);
    if (*analyze_cmd) return cmd_analyze(cfg, out);
    if (*scan_cmd) return cmd_scan(cfg, out);
    if (*obstruct_cmd) return cmd_obstruct(cfg, out);
    if (*enumerate_cmd) return cmd_enumerate(cfg, out);
    if (*span_cmd) return cmd_identity_span(cfg, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputFailure& f) {
    for (const auto& line : f.lines) err << line << "\n";
    return kInput;
  } catch (const BuildError& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    if (e.found_dim()) err << "found dimension: " << *e.found_dim() << "\n";
    return kInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
  return kUsage;
}

}  // namespace flatdef::cli
