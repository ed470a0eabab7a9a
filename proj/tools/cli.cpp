#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "strata/checks.hpp"
#include "strata/geomkit.hpp"
#include "strata/lemmalab.hpp"
#include "strata/polycore.hpp"
#include "strata/stratlat.hpp"
#include "strata/swallowtail.hpp"

namespace strata::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string format;
  std::string out_path;
  int max_degree = 10;
  geomkit::SampleBox box;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string pick_format(const RunConfig& cfg, const std::string& fallback, std::initializer_list<const char*> allowed,
                        const std::string& command) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  for (const char* a : allowed)
    if (f == a) return f;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw UsageError("format '" + f + "' is not supported by '" + command + "' (use " + list + ")");
}

void check_degree(const RunConfig& cfg, int n) {
  if (n < 1) throw UsageError("degree must be >= 1");
  if (n > cfg.max_degree)
    throw UsageError("degree " + std::to_string(n) + " exceeds the cap " + std::to_string(cfg.max_degree) +
                     " (raise it with --max-degree)");
}

// ---------------------------------------------------------------------------

int cmd_mv(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  const auto fmt = pick_format(cfg, "text", {"text", "json"}, "mv");
  const auto p = polycore::MonicPolynomial::parse(text);
  const auto mv = polycore::multiplicity_vector(p);
  const int n = p.degree();
  const int pairs = (n - mv.length()) / 2;
  if (fmt == "json") {
    out << json{{"mv", mv.vec()},     {"n", n},
                {"length", mv.length()}, {"groups", mv.groups()},
                {"surplus", mv.surplus()}, {"codim", mv.surplus()},
                {"pairs", pairs}}
               .dump()
        << "\n";
  } else {
    out << mv.to_string() << " l=" << mv.length() << " q=" << mv.groups() << " surplus=" << mv.surplus()
        << " codim=" << mv.surplus() << " pairs=" << pairs << "\n";
  }
  return kExitOk;
}

int cmd_poset(const RunConfig& cfg, int n, std::ostream& out) {
  const auto fmt = pick_format(cfg, "json", {"json", "dot"}, "poset");
  check_degree(cfg, n);
  const auto poset = stratlat::build_poset(n);
  if (fmt == "dot") out << stratlat::to_dot(poset);
  else out << stratlat::to_json(poset).dump(2) << "\n";
  return kExitOk;
}

int cmd_sample(const RunConfig& cfg, const std::string& mv_text, int n, int count, std::ostream& out) {
  pick_format(cfg, "json", {"json"}, "sample");
  check_degree(cfg, n);
  if (count < 0) throw UsageError("count must be >= 0");
  const auto stratum = stratlat::validate_mv(MultiplicityVector::parse(mv_text), n);
  for (int k = 0; k < count; ++k) {
    const auto point = geomkit::sample_stratum(stratum, cfg.seed + static_cast<std::uint64_t>(k), cfg.box);
    // Sampled parameters are dyadic rationals, so the MV can be recomputed exactly.
    const auto exact = polycore::expand_from_roots(to_exact(point.config));
    if (polycore::multiplicity_vector(exact) != stratum.mv)
      throw DomainError("sampled point failed the exact MV round trip");
    out << geomkit::to_json(point).dump() << "\n";
  }
  return kExitOk;
}

json read_json_argument(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!arg.empty() && arg.front() == '{') {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot read '" + arg + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

int cmd_tangent(const RunConfig& cfg, const std::string& arg, std::ostream& out) {
  pick_format(cfg, "json", {"json"}, "tangent");
  const auto point = geomkit::point_from_json(read_json_argument(arg));
  check_degree(cfg, point.stratum.degree);
  out << geomkit::to_json(geomkit::tangent_frame(point)).dump(2) << "\n";
  return kExitOk;
}

struct VerifyOptions {
  int n = 4;
  std::string which = "all";
  int seeds = 10;
  int samples = 20;
  std::string root_order = "decreasing";
  bool detail = false;
};

std::string fmt_margins(const std::map<std::string, double>& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : m) {
    os << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

int cmd_verify(const RunConfig& cfg, VerifyOptions opt, std::ostream& out) {
  const auto fmt = pick_format(cfg, "text", {"text", "json"}, "verify");
  check_degree(cfg, opt.n);
  std::transform(opt.which.begin(), opt.which.end(), opt.which.begin(), [](unsigned char c) { return std::tolower(c); });
  const auto& lemma_names = lemmalab::lemma_names();
  const bool all = opt.which == "all";
  const bool theorem = all || opt.which == "theorem";
  std::vector<std::string> lemmas;
  if (all) lemmas = lemma_names;
  else if (std::find(lemma_names.begin(), lemma_names.end(), opt.which) != lemma_names.end()) lemmas = {opt.which};
  else if (!theorem) throw UsageError("unknown check '" + opt.which + "'");

  checks::Tolerances tol;
  lemmalab::LemmaOptions lopts;
  lopts.box = cfg.box;
  lopts.order = opt.root_order == "increasing" ? lemmalab::RootOrder::Increasing : lemmalab::RootOrder::Decreasing;
  if (cfg.tol) {
    tol.partials = *cfg.tol;
    lopts.tol_eq = *cfg.tol;
    lopts.tol_neq = *cfg.tol;
  }

  int total = 0;
  int failures = 0;
  json doc{{"n", opt.n}, {"seed", cfg.seed}};
  std::ostringstream text;

  if (theorem) {
    json arr = json::array();
    for (const auto& s : checks::verify_theorem(opt.n, cfg.seed, opt.samples, tol, cfg.box)) {
      ++total;
      const bool pass = s.failures == 0;
      if (!pass) ++failures;
      arr.push_back(checks::to_json(s));
      text << (pass ? "PASS" : "FAIL") << " theorem " << s.stratum.mv.to_string() << " n=" << opt.n
           << " samples=" << s.samples << " min_rank=" << s.min_rank << " min_margin=" << s.min_margin
           << " max_partials_error=" << s.max_partials_error << "\n";
    }
    doc["theorem"] = arr;
  }

  if (!lemmas.empty()) {
    json arr = json::array();
    for (const auto& s : stratlat::enumerate_mvs(opt.n)) {
      if (s.dimension() > opt.n - 2) continue;
      for (int k = 0; k < opt.seeds; ++k) {
        const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(k);
        std::optional<lemmalab::TracedSection> traced;
        std::string trace_error;
        try {
          traced = lemmalab::trace_section(lemmalab::section_setup(s, seed, cfg.box), lopts);
        } catch (const DomainError& e) {
          trace_error = e.what();
        }
        for (const auto& name : lemmas) {
          ++total;
          if (!traced) {
            ++failures;
            arr.push_back({{"lemma", name}, {"stratum", s.mv.vec()}, {"n", opt.n}, {"seed", seed},
                           {"verdict", "FAIL"}, {"notes", {trace_error}}});
            text << "FAIL " << name << " " << s.mv.to_string() << " n=" << opt.n << " seed=" << seed << " "
                 << trace_error << "\n";
            continue;
          }
          const auto rep = lemmalab::verify_lemma(name, *traced, lopts);
          if (!rep.pass) ++failures;
          json j = lemmalab::to_json(rep, *traced);
          if (!opt.detail) {
            j.erase("curves");
            j.erase("base_point");
          }
          arr.push_back(std::move(j));
          text << (rep.pass ? "PASS" : "FAIL") << " " << name << " " << s.mv.to_string() << " n=" << opt.n
               << " seed=" << seed << (rep.vacuous ? " (vacuous)" : "") << " " << fmt_margins(rep.margins);
          for (const auto& note : rep.notes) text << " | " << note;
          text << "\n";
        }
      }
    }
    doc["lemmas"] = arr;
  }

  doc["checks"] = total;
  doc["failures"] = failures;
  doc["verdict"] = failures == 0 ? "PASS" : "FAIL";
  if (fmt == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
    out << "summary: " << total << " checks, " << failures << " failed: " << (failures == 0 ? "PASS" : "FAIL") << "\n";
  }
  return failures == 0 ? kExitOk : kExitFail;
}

int cmd_swallowtail(const RunConfig& cfg, int resolution, std::ostream& out) {
  const auto fmt = pick_format(cfg, "csv", {"csv", "json"}, "swallowtail");
  if (resolution < 2) throw UsageError("resolution must be >= 2");
  const auto pts = swallowtail::mesh(resolution);
  if (fmt == "json") out << swallowtail::to_json(pts).dump(2) << "\n";
  else out << swallowtail::to_csv(pts);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplicity-vector strata of monic real polynomials", "strata"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Random seed")->envname("STRATA_SEED");
  double tol_value = 0;
  auto* tol_opt = app.add_option("--tol", tol_value, "Override verification tolerances")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "csv", "text"}));
  app.add_option("--out", cfg.out_path, "Write output to this file");
  app.add_option("--max-degree", cfg.max_degree, "Degree cap")->check(CLI::Range(1, stratlat::kMaxDegree));
  double box_lo = static_cast<double>(cfg.box.lo);
  double box_hi = static_cast<double>(cfg.box.hi);
  double sep = static_cast<double>(cfg.box.min_separation);
  app.add_option("--box-lo", box_lo, "Lower bound for sampled root positions");
  app.add_option("--box-hi", box_hi, "Upper bound for sampled root positions");
  app.add_option("--separation", sep, "Minimum separation of sampled roots")->check(CLI::PositiveNumber);

  std::string poly;
  auto* mv_cmd = app.add_subcommand("mv", "Multiplicity vector of a monic polynomial");
  mv_cmd->add_option("poly", poly, "Coefficients, degree descending, e.g. 1,0,-2,0,1")->required();

  int poset_n = 0;
  auto* poset_cmd = app.add_subcommand("poset", "Stratification poset for degree n");
  poset_cmd->add_option("n", poset_n, "Degree")->required();

  std::string sample_mv;
  int sample_n = 0;
  int sample_count = 1;
  auto* sample_cmd = app.add_subcommand("sample", "Sample points of a stratum (JSON lines)");
  sample_cmd->add_option("mv", sample_mv, "Multiplicity vector, e.g. [2,1]")->required();
  sample_cmd->add_option("-n,--degree", sample_n, "Degree")->required();
  sample_cmd->add_option("--count", sample_count, "Number of points");

  std::string point_arg;
  auto* tangent_cmd = app.add_subcommand("tangent", "Tangent frame at a stratum point");
  tangent_cmd->add_option("point", point_arg, "Point JSON: a file, '-' for stdin, or inline JSON")->required();

  VerifyOptions vopt;
  auto* verify_cmd = app.add_subcommand("verify", "Run the theorem checks and/or the lemma harness");
  verify_cmd->add_option("-n,--degree", vopt.n, "Degree")->required();
  verify_cmd->add_option("--which", vopt.which, "theorem, slope, uv, slopebis, leftright, updown or all");
  verify_cmd->add_option("--seeds", vopt.seeds, "Seeds per eligible stratum for the lemma harness");
  verify_cmd->add_option("--samples", vopt.samples, "Samples per stratum for the theorem checks");
  verify_cmd->add_option("--root-order", vopt.root_order, "Root indexing in the lemma statements")
      ->check(CLI::IsMember({"increasing", "decreasing"}));
  verify_cmd->add_flag("--detail", vopt.detail, "Include traced curves in JSON output");

  int resolution = 11;
  auto* swallowtail_cmd = app.add_subcommand("swallowtail", "Mesh of the discriminant surface in the a1=0 slice");
  swallowtail_cmd->add_option("--resolution", resolution, "Grid points per axis");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (*tol_opt) cfg.tol = tol_value;
  cfg.box.lo = box_lo;
  cfg.box.hi = box_hi;
  cfg.box.min_separation = sep;
  if (!(cfg.box.lo < cfg.box.hi)) {
    err << "error: --box-lo must be below --box-hi\n";
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*mv_cmd) code = cmd_mv(cfg, poly, buffer);
    else if (*poset_cmd) code = cmd_poset(cfg, poset_n, buffer);
    else if (*sample_cmd) code = cmd_sample(cfg, sample_mv, sample_n, sample_count, buffer);
    else if (*tangent_cmd) code = cmd_tangent(cfg, point_arg, buffer);
    else if (*verify_cmd) code = cmd_verify(cfg, vopt, buffer);
    else if (*swallowtail_cmd) code = cmd_swallowtail(cfg, resolution, buffer);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) {
      err << "error: cannot write '" << cfg.out_path << "'\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace strata::cli
