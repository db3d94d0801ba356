#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>

#include "iip/batch.hpp"
#include "iip/errors.hpp"
#include "iip/fixtures.hpp"
#include "iip/generator.hpp"
#include "iip/json_io.hpp"
#include "iip/render.hpp"

namespace iip::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  bool json = false;
  bool text = false;
  std::optional<std::uint64_t> seed;

  std::string op_name;
  std::string op_file;
  std::string op_weight = "N";

  std::string verify_file;
  bool verify_lemmas = false;

  bool fixtures_list = false;
  bool fixtures_run = false;
  std::string fixtures_dir;
  std::string fixtures_write;

  std::string predicate = "falsify-main";
  long long budget = 100;
  std::string out_dir;
  std::optional<std::size_t> m_max;
  std::optional<std::size_t> n_max;
  std::optional<std::string> weight_kind;
  std::optional<std::string> cone_kind;
  std::optional<std::size_t> generators;
  std::optional<long> entry_bound;
  bool rejection = false;
  bool serial = false;
};

// Usage errors raised after CLI11 has finished parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts either a bare {"matrix", ...} document or a full instance.
IMatrix load_imatrix(const Json& j) {
  if (j.is_object() && j.contains("matrix")) {
    return imatrix_from_json(j);
  }
  return instance_from_json(j).as_imatrix();
}

int cmd_op(const Options& o, std::ostream& out) {
  const Json doc = read_json_file(o.op_file);
  Json result;
  std::string text;
  if (o.op_name == "mp-inverse") {
    const RatMatrix x = mp_inverse(load_imatrix(doc).matrix());
    result = matrix_to_json(x);
    text = to_string(x);
  } else if (o.op_name == "imp-inverse") {
    const IMatrix x = imp_inverse(load_imatrix(doc));
    result = imatrix_to_json(x);
    text = to_string(x.matrix());
  } else if (o.op_name == "adjoint") {
    const IMatrix x = iadjoint(load_imatrix(doc));
    result = imatrix_to_json(x);
    text = to_string(x.matrix());
  } else if (o.op_name == "dual-cone") {
    PolyCone k = PolyCone::zero(1);
    std::optional<Weight> w;
    if (doc.is_object() && (doc.contains("ambient_dim") || doc.contains("orthant"))) {
      k = cone_from_json(doc);
    } else {
      const Instance inst = instance_from_json(doc);
      k = inst.k();
      w = inst.n();
    }
    if (o.op_weight == "N") {
      if (!w) {
        throw UsageError("dual-cone --weight N needs an instance file (a bare cone has no weight)");
      }
      k = dual_indefinite(k, IndefiniteSpace(*w));
    } else {
      k = dual_euclidean(k);
    }
    result = cone_to_json(k);
    text = to_string(k);
  } else {
    // image-cone: C = A o I o K, which is A K.
    const Instance inst = instance_from_json(doc);
    const IMatrix ai = compose(inst.as_imatrix(), identity_on(inst.domain()));
    const PolyCone c = image_cone(ai.action(), inst.k());
    result = cone_to_json(c);
    text = to_string(c);
  }
  if (o.text) {
    out << text << '\n';
  } else {
    out << Json{{"op", o.op_name}, {"result", result}}.dump(2) << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Instance inst = read_instance(o.verify_file);
  const TheoremReport r = verify_main(inst);
  if (o.json) {
    Json j = report_to_json(r);
    if (!o.verify_lemmas) {
      j.erase("lemmas");
    }
    out << j.dump(2) << '\n';
  } else {
    out << render_report(r, o.verify_lemmas);
  }
  if (r.theorem_falsified()) {
    err << "theorem falsified on " << r.label << ": hypotheses hold but conditions (i)-(iii) disagree\n";
    return kMismatch;
  }
  if (r.lemma_defect()) {
    err << "defect on " << r.label << ": a check guaranteed by M A = A N failed\n";
    return kMismatch;
  }
  return kOk;
}

std::vector<Instance> fixture_inputs(const Options& o) {
  if (o.fixtures_dir.empty()) {
    return fixtures();
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(o.fixtures_dir)) {
    if (e.path().extension() == ".json") {
      files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<Instance> out;
  for (const auto& f : files) {
    Instance inst = read_instance(f);
    if (is_fixture_label(inst.label())) {
      out.push_back(std::move(inst));
    }
  }
  if (out.empty()) {
    throw UsageError("no fixture files (labels R1, R2, R3) in " + o.fixtures_dir);
  }
  return out;
}

int cmd_fixtures(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.fixtures_write.empty()) {
    fs::create_directories(o.fixtures_write);
    for (const auto& inst : fixtures()) {
      write_json_file(fs::path(o.fixtures_write) / (inst.label() + ".json"), instance_to_json(inst));
    }
    out << "wrote 3 fixtures to " << o.fixtures_write << '\n';
    return kOk;
  }
  if (!o.fixtures_run) {
    for (const auto& inst : fixtures()) {
      out << inst.label() << '\n';
    }
    return kOk;
  }

  const std::vector<Instance> inputs = fixture_inputs(o);
  std::size_t mismatches = 0;
  Json results = Json::array();
  for (const auto& inst : inputs) {
    const FixtureCheck c = compare_with_printed_values(inst);
    mismatches += c.mismatches.size();
    Json mm = Json::array();
    for (const auto& m : c.mismatches) {
      mm.push_back({{"quantity", m.quantity}, {"expected", m.expected}, {"actual", m.actual}});
      err << "mismatch " << m.fixture << " " << m.quantity << ": expected " << m.expected << ", got " << m.actual
          << '\n';
    }
    results.push_back({{"fixture", c.fixture}, {"quantities", c.quantities}, {"mismatches", mm}});
    if (!o.json) {
      out << c.fixture << ": " << c.quantities << " quantities, " << c.mismatches.size() << " mismatches\n";
    }
  }
  if (o.json) {
    out << Json{{"fixtures", results}, {"mismatches", mismatches}}.dump(2) << '\n';
  } else {
    out << inputs.size() << " fixtures, " << mismatches << " mismatches\n";
  }
  return mismatches == 0 ? kOk : kMismatch;
}

int cmd_search(const Options& o, std::ostream& out) {
  const SearchPredicate* p = find_predicate(o.predicate);
  if (!p) {
    std::string names;
    for (const auto& q : search_predicates()) {
      names += " " + q.name;
    }
    throw UsageError("unknown predicate '" + o.predicate + "'; known:" + names);
  }
  if (o.budget <= 0) {
    throw UsageError("--budget must be positive");
  }

  GenConfig cfg;
  p->defaults(cfg);
  cfg.seed = o.seed.value_or(1);
  if (o.m_max) {
    cfg.m_max = *o.m_max;
  }
  if (o.n_max) {
    cfg.n_max = *o.n_max;
  }
  if (o.weight_kind) {
    auto k = parse_weight_kind(*o.weight_kind);
    if (!k) {
      throw UsageError("unknown weight kind '" + *o.weight_kind + "'");
    }
    cfg.weight_kind = *k;
  }
  if (o.cone_kind) {
    auto k = parse_cone_kind(*o.cone_kind);
    if (!k) {
      throw UsageError("unknown cone kind '" + *o.cone_kind + "'");
    }
    cfg.cone_kind = *k;
  }
  if (o.generators) {
    cfg.generator_count = *o.generators;
  }
  if (o.entry_bound) {
    cfg.entry_bound = *o.entry_bound;
  }
  if (o.rejection) {
    cfg.invariance_mode = InvarianceMode::Rejection;
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const auto found = search(cfg, *p, static_cast<std::size_t>(o.budget), !o.serial);
  if (!o.out_dir.empty()) {
    fs::create_directories(o.out_dir);
    for (const auto& f : found) {
      write_json_file(fs::path(o.out_dir) / (f.instance.label() + ".json"), instance_to_json(f.instance));
    }
  }

  if (o.json) {
    Json list = Json::array();
    for (const auto& f : found) {
      list.push_back({{"index", f.index}, {"instance", instance_to_json(f.instance)},
                      {"verdict", report_to_json(f.report)["verdict"]}});
    }
    out << Json{{"predicate", p->name}, {"seed", cfg.seed}, {"budget", o.budget}, {"found", list}}.dump(2) << '\n';
  } else {
    out << "predicate " << p->name << " (" << p->description << ")\n";
    out << "seed " << cfg.seed << ", budget " << o.budget << ", " << found.size() << " found\n";
    if (!found.empty()) {
      out << "index  label                 m  n  commutes  invariance  (i)  (ii)  (iii)\n";
      for (const auto& f : found) {
        const auto& r = f.report;
        char line[160];
        std::snprintf(line, sizeof line, "%5zu  %-20s %2zu %2zu  %-8s  %-10s  %-3s  %-4s  %-5s\n", f.index,
                      f.instance.label().c_str(), f.instance.a().rows(), f.instance.a().cols(),
                      r.commutes ? "yes" : "no", r.invariance ? "yes" : "no", r.cond_i ? "T" : "F",
                      r.cond_ii ? "T" : "F", r.cond_iii ? "T" : "F");
        out << line;
      }
    }
  }
  // Finding a counterexample to the theorem itself is a falsification.
  return (p->name == "falsify-main" || p->name == "lemma-defect") && !found.empty() ? kMismatch : kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact indefinite-inner-product algebra, polyhedral cones and theorem verification"};
  app.name("iipcone");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  auto* fmt = app.add_option_group("format");
  fmt->add_flag("--json", o.json, "Emit JSON");
  fmt->add_flag("--text", o.text, "Emit human-readable text");
  fmt->require_option(0, 1);
  app.add_option("--seed", o.seed, "Seed for the instance generator");

  auto* op = app.add_subcommand("op", "Run one algebra or cone operation on an instance file");
  op->add_option("name", o.op_name, "Operation")
      ->required()
      ->check(CLI::IsMember({"mp-inverse", "imp-inverse", "adjoint", "dual-cone", "image-cone"}));
  op->add_option("file", o.op_file, "Instance, matrix or cone JSON")->required()->check(CLI::ExistingFile);
  op->add_option("--weight", o.op_weight, "Weight for dual-cone: N (indefinite) or I (Euclidean)")
      ->check(CLI::IsMember({"N", "I"}));

  auto* verify = app.add_subcommand("verify", "Verify the lemma chain and the main theorem on an instance");
  verify->add_option("file", o.verify_file, "Instance JSON")->required()->check(CLI::ExistingFile);
  verify->add_flag("--lemmas", o.verify_lemmas, "Include the lemma table");

  auto* fix = app.add_subcommand("fixtures", "List, write or reproduce the worked examples");
  auto* fix_mode = fix->add_option_group("mode");
  fix_mode->add_flag("--list", o.fixtures_list, "Print the fixture labels");
  fix_mode->add_flag("--run", o.fixtures_run, "Compare every printed quantity exactly");
  fix_mode->add_option("--write", o.fixtures_write, "Write fixture instance files into DIR");
  fix_mode->require_option(0, 1);
  fix->add_option("--dir", o.fixtures_dir, "With --run, read fixture files from DIR")->check(CLI::ExistingDirectory);

  auto* srch = app.add_subcommand("search", "Seeded counterexample search");
  srch->add_option("--predicate", o.predicate, "Predicate name")->capture_default_str();
  srch->add_option("--budget", o.budget, "Number of instances to generate")->capture_default_str();
  srch->add_option("--out", o.out_dir, "Write found instances into DIR");
  srch->add_option("--m-max", o.m_max, "Largest codomain dimension");
  srch->add_option("--n-max", o.n_max, "Largest domain dimension");
  srch->add_option("--weight-kind", o.weight_kind, "identity|signature_diagonal|cayley_conjugated|mixed");
  srch->add_option("--cone-kind", o.cone_kind, "orthant|random_generators");
  srch->add_option("--generators", o.generators, "Generators per random cone");
  srch->add_option("--entry-bound", o.entry_bound, "Bound on random integer entries");
  srch->add_flag("--rejection", o.rejection, "Rejection sampling for forced invariance");
  srch->add_flag("--serial", o.serial, "Evaluate on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*op) {
      return cmd_op(o, out);
    }
    if (*verify) {
      return cmd_verify(o, out, err);
    }
    if (*fix) {
      return cmd_fixtures(o, out, err);
    }
    return cmd_search(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << '\n';
    return kUsage;
  } catch (const WeightError& e) {
    err << "weight error: " << e.what() << '\n';
    return kUsage;
  } catch (const DefectError& e) {
    err << "defect: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace iip::cli
