// Command-line front end: omega, weigh, audit, enumerate, census, dominance,
// montecarlo, klab. Reports go to stdout, timing to stderr.
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 audit violations.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "omega/error.hpp"
#include "omega/exact/interval.hpp"
#include "omega/logic/decide.hpp"
#include "omega/logic/enumeration.hpp"
#include "omega/logic/first_order.hpp"
#include "omega/measures/length_measure.hpp"
#include "omega/measures/montecarlo.hpp"
#include "omega/measures/suggestions.hpp"
#include "omega/minilang/census.hpp"
#include "omega/prefixfree/string_set.hpp"
#include "omega/util/random.hpp"
#include "omega/weights/audit.hpp"
#include "omega/weights/basic.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using omega::exact::Rational;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitViolations = 3;

class Stopwatch {
 public:
  explicit Stopwatch(std::string label) : label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start_;
    std::cerr << label_ << ": " << d.count() << " s\n";
  }

 private:
  std::string label_;
  std::chrono::steady_clock::time_point start_;
};

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

json header(const std::string& command, const json& flags) {
  json h;
  h["command"] = command;
  h["enumeration"] = omega::logic::kEnumerationVersion;
  h["language"] = omega::minilang::kLanguageVersion;
  h["flags"] = flags;
  return h;
}

void print_csv_header(const std::string& command, const json& flags) {
  std::cout << "# command=" << command << " enumeration=" << omega::logic::kEnumerationVersion
            << " language=" << omega::minilang::kLanguageVersion << "\n# flags=" << flags.dump() << "\n";
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<fs::path> theory_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw omega::InputError("corpus directory " + dir.string() + " does not exist");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().filename().string().front() != '.') files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw omega::InputError("corpus directory " + dir.string() + " holds no theory files");
  return files;
}

// ---------------------------------------------------------------- omega

struct OmegaOptions {
  std::string set_file;
  std::string format = "json";
};

int cmd_omega(const OmegaOptions& o) {
  namespace pf = omega::prefixfree;
  const auto set = pf::read_string_set(o.set_file);
  const Rational value = pf::omega(set);
  const auto witness = pf::check_prefix_free(set);
  json r = header("omega", {{"set_file", o.set_file}, {"format", o.format}});
  json strings = json::array();
  for (const auto& s : set.elements()) strings.push_back(s.str());
  r["set"] = strings;
  r["omega"] = value.str();
  r["prefix_free"] = !witness.has_value();
  if (witness) r["witness"] = {witness->prefix.str(), witness->extension.str()};
  r["kraft_bound_holds"] = value <= 1;
  if (!witness) {
    const auto check = pf::interval_measure_equals_omega(set);
    r["interval_measure"] = check.interval_measure.str();
    r["interval_check_equal"] = check.equal;
  }
  if (o.format == "text") {
    std::cout << "Omega = " << value << "\n";
    std::cout << "prefix-free: " << (witness ? "no, witness (" + witness->prefix.str() + ", " +
                                                   witness->extension.str() + ")"
                                             : std::string("yes"))
              << "\n";
    std::cout << "Kraft bound (Omega <= 1): " << (value <= 1 ? "holds" : "fails") << "\n";
    if (!witness) {
      std::cout << "interval measure = " << r["interval_measure"].get<std::string>()
                << (r["interval_check_equal"].get<bool>() ? " (equal)" : " (DIFFERENT)") << "\n";
    }
  } else {
    print_json(r);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- weights

struct WeightOptions {
  std::string weight;
  std::string valuation;
  std::string structure_file;
  std::string reference_file;
  std::string reference_inline;
  std::size_t precision = 64;
  std::string a;
  std::string b;
  std::string c;
  std::string seed_weight = "0";
};

omega::weights::WeightParams weight_params(const WeightOptions& o) {
  omega::weights::WeightParams p;
  if (!o.valuation.empty()) p.valuation = omega::logic::Valuation::parse(o.valuation);
  if (!o.structure_file.empty()) p.structure = omega::logic::read_structure(o.structure_file);
  if (!o.reference_file.empty()) p.reference = omega::logic::read_theory(o.reference_file);
  if (!o.reference_inline.empty()) p.reference = omega::logic::parse_theory_inline(o.reference_inline);
  p.precision = o.precision;
  if (!o.a.empty() || !o.b.empty() || !o.c.empty()) {
    if (o.a.empty() || o.b.empty() || o.c.empty()) throw omega::InputError("--a, --b and --c go together");
    p.alpha = omega::weights::AlphaSpec::geometric(Rational::parse(o.c), Rational::parse(o.a), Rational::parse(o.b));
  }
  p.seed = Rational::parse(o.seed_weight);
  return p;
}

json weight_flags(const WeightOptions& o) {
  return {{"weight", o.weight},       {"valuation", o.valuation}, {"structure", o.structure_file},
          {"reference", o.reference_file}, {"reference_inline", o.reference_inline},
          {"precision", o.precision}, {"a", o.a}, {"b", o.b}, {"c", o.c}, {"seed_weight", o.seed_weight}};
}

json value_json(const omega::weights::WeightValue& v) {
  json j;
  if (v.is_exact()) {
    j["value"] = v.lower.str();
  } else {
    j["lower"] = v.lower.str();
    j["upper"] = v.upper.str();
  }
  return j;
}

struct WeighOptions {
  std::string theory_file;
  std::string corpus_dir;
  bool first_order = false;
  std::string format = "json";
  WeightOptions weight;
};

int cmd_weigh(const WeighOptions& o) {
  json flags = weight_flags(o.weight);
  flags["theory_file"] = o.theory_file;
  flags["corpus"] = o.corpus_dir;
  flags["first_order"] = o.first_order;
  json r = header("weigh", flags);
  r["weight"] = o.weight.weight;
  if (o.first_order) {
    // Only the structure weight reads first-order theories.
    if (o.weight.weight != "wm") throw omega::InputError("--first-order applies to the weight wm only");
    if (o.weight.structure_file.empty()) throw omega::InputError("weight wm on a first-order theory needs --structure");
    const auto m = omega::logic::read_structure(o.weight.structure_file);
    const auto t = omega::logic::read_fo_theory(o.theory_file);
    r["value"] = std::to_string(omega::weights::w_structure(m, t));
  } else {
    auto params = weight_params(o.weight);
    const auto theory = omega::logic::read_theory(o.theory_file);
    r["theory"] = theory.str();
    if (o.weight.weight == "u") {
      if (!o.corpus_dir.empty()) {
        for (const auto& f : theory_files(o.corpus_dir)) params.ordering.push_back(omega::logic::read_theory(f));
      }
      params.ordering.push_back(theory);
    }
    const auto w = omega::weights::make_weight(o.weight.weight, params);
    r["parameters"] = w->parameters();
    const auto v = w->weigh(theory);
    const json value = value_json(v);
    for (const auto& [k, val] : value.items()) r[k] = val;
    if (!v.is_exact()) r["terms"] = params.precision;
  }
  if (o.format == "text") {
    std::cout << o.weight.weight << " = "
              << (r.contains("value") ? r["value"].get<std::string>()
                                      : "[" + r["lower"].get<std::string>() + ", " + r["upper"].get<std::string>() +
                                            "] after " + std::to_string(o.weight.precision) + " terms")
              << "\n";
  } else {
    print_json(r);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- audit

struct AuditOptions {
  std::string corpus_dir;
  std::size_t random = 0;
  std::uint64_t seed = 42;
  std::string principle = "both";
  bool serial = false;
  std::size_t max_listed = 20;
  WeightOptions weight;
};

json report_json(const omega::weights::AuditReport& a, const std::vector<omega::weights::Theory>& corpus,
                 std::size_t max_listed) {
  json j;
  j["principle"] = a.principle;
  j["pairs_checked"] = a.pairs_checked;
  j["violation_count"] = a.violations.size();
  j["pass"] = a.violations.empty();
  json list = json::array();
  for (std::size_t i = 0; i < a.violations.size() && i < max_listed; ++i) {
    const auto& v = a.violations[i];
    list.push_back({{"first", v.first},
                    {"second", v.second},
                    {"first_theory", corpus[v.first].str()},
                    {"second_theory", corpus[v.second].str()},
                    {"first_weight", v.first_weight.str()},
                    {"second_weight", v.second_weight.str()},
                    {"reason", v.reason}});
  }
  j["violations"] = list;
  return j;
}

int cmd_audit(const AuditOptions& o) {
  if (o.corpus_dir.empty() == (o.random == 0)) throw omega::InputError("give exactly one of a corpus directory or --random");
  std::vector<omega::weights::Theory> corpus;
  std::vector<std::string> names;
  if (!o.corpus_dir.empty()) {
    for (const auto& f : theory_files(o.corpus_dir)) {
      corpus.push_back(omega::logic::read_theory(f));
      names.push_back(f.filename().string());
    }
  } else {
    corpus = omega::weights::random_corpus(o.seed, o.random);
  }
  auto params = weight_params(o.weight);
  params.ordering = corpus;
  const auto w = omega::weights::make_weight(o.weight.weight, params);
  json flags = weight_flags(o.weight);
  flags["corpus"] = o.corpus_dir;
  flags["random"] = o.random;
  flags["corpus_seed"] = o.seed;
  flags["principle"] = o.principle;
  flags["serial"] = o.serial;
  json r = header("audit", flags);
  r["weight"] = w->name();
  r["parameters"] = w->parameters();
  r["corpus_size"] = corpus.size();
  if (!names.empty()) r["files"] = names;
  bool clean = true;
  Stopwatch watch("audit " + w->name());
  if (o.principle == "hp" || o.principle == "both") {
    const auto a = o.serial ? omega::weights::hp_audit_serial(*w, corpus) : omega::weights::hp_audit(*w, corpus);
    r["hp"] = report_json(a, corpus, o.max_listed);
    clean = clean && a.violations.empty();
  }
  if (o.principle == "ep" || o.principle == "both") {
    const auto a = o.serial ? omega::weights::ep_audit_serial(*w, corpus) : omega::weights::ep_audit(*w, corpus);
    r["ep"] = report_json(a, corpus, o.max_listed);
    clean = clean && a.violations.empty();
  }
  print_json(r);
  return clean ? kExitOk : kExitViolations;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateOptions {
  std::string start = "1";
  std::size_t count = 20;
  std::string rank;
  std::string format = "json";
};

int cmd_enumerate(const EnumerateOptions& o) {
  namespace lg = omega::logic;
  json r = header("enumerate", {{"start", o.start}, {"count", o.count}, {"rank", o.rank}, {"format", o.format}});
  if (!o.rank.empty()) {
    const auto f = lg::parse_formula(o.rank);
    const auto n = lg::sentence_rank(f);
    r["formula"] = lg::render_tokens(lg::canonical_tokens(f));
    r["index"] = n.str();
    if (o.format == "text") {
      std::cout << n << "\t" << r["formula"].get<std::string>() << "\n";
    } else {
      print_json(r);
    }
    return kExitOk;
  }
  omega::exact::BigInt n(o.start);
  if (n < 1) throw omega::InputError("--start must be at least 1");
  auto tokens = lg::token_unrank(n);
  json rows = json::array();
  for (std::size_t i = 0; i < o.count; ++i) {
    const std::string text = lg::render_tokens(tokens);
    if (o.format == "text") {
      std::cout << n << "\t" << text << "\n";
    } else {
      rows.push_back({{"n", n.str()}, {"sentence", text}});
    }
    tokens = lg::next_sentence(tokens);
    ++n;
  }
  if (o.format != "text") {
    r["sentences"] = rows;
    print_json(r);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- census

struct CensusOptions {
  std::size_t max_chars = 3;
  std::uint64_t fuel = 100;
  std::string format = "csv";
  bool serial = false;
};

int cmd_census(const CensusOptions& o) {
  namespace ml = omega::minilang;
  const json flags = {{"max_chars", o.max_chars}, {"fuel", o.fuel}, {"format", o.format}, {"serial", o.serial}};
  Stopwatch watch("census");
  const auto c = o.serial ? ml::halting_census_serial(o.max_chars, o.fuel) : ml::halting_census(o.max_chars, o.fuel);
  const auto gap = ml::lemma_pi_gap(o.max_chars);
  const auto k = omega::measures::k_number(c);
  if (o.format == "json") {
    json r = header("census", flags);
    json rows = json::array();
    for (const auto& row : c.rows) {
      rows.push_back({{"bit_length", row.bit_length}, {"total", row.total}, {"halted", row.halted}, {"fuel", o.fuel}});
    }
    r["rows"] = rows;
    r["omega_p_partial"] = c.omega_p_partial.str();
    r["omega_h_partial_lower_bound"] = c.omega_h_partial.str();
    r["gap_witness"] = std::string(1, gap.witness);
    r["gap_holds"] = gap.gap_holds;
    r["codes_prefix_free"] = gap.prefix_free;
    r["k_number_lower_bound"] = k.str();
    print_json(r);
    return kExitOk;
  }
  print_csv_header("census", flags);
  std::cout << "bit_length,total,halted,fuel\n";
  for (const auto& row : c.rows) std::cout << row.bit_length << "," << row.total << "," << row.halted << "," << o.fuel << "\n";
  std::cout << "# omega_p_partial=" << c.omega_p_partial << "\n";
  std::cout << "# omega_h_partial_lower_bound=" << c.omega_h_partial << "\n";
  std::cout << "# gap_holds=" << (gap.gap_holds ? "true" : "false") << " codes_prefix_free="
            << (gap.prefix_free ? "true" : "false") << "\n";
  std::cout << "# k_number_lower_bound=" << k.str() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- dominance

struct DominanceOptions {
  std::size_t max_chars = 3;
  std::uint64_t fuel = 100;
  std::size_t measures = 100;
  std::uint64_t seed = 7;
  std::string measure_file;
  std::string format = "csv";
  bool decimal = false;
};

Rational json_rational(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw omega::InputError("expected a rational as a \"p/q\" string");
}

omega::measures::LengthMeasure measure_from_json(const json& j, std::size_t default_support) {
  namespace ms = omega::measures;
  const std::string kind = j.at("kind").get<std::string>();
  const std::size_t support = j.value("support", default_support);
  if (kind == "point-mass") return ms::LengthMeasure::point_mass(j.at("m").get<std::size_t>(), support);
  if (kind == "stop-probability") return ms::LengthMeasure::stop_probability(json_rational(j.at("q")), support);
  if (kind == "explicit") {
    std::vector<Rational> pi;
    for (const auto& v : j.at("pi")) pi.push_back(json_rational(v));
    return ms::LengthMeasure::explicit_table(std::move(pi), j.value("renormalize", false));
  }
  throw omega::InputError("unknown measure kind '" + kind + "'");
}

int cmd_dominance(const DominanceOptions& o) {
  namespace ms = omega::measures;
  const json flags = {{"max_chars", o.max_chars}, {"fuel", o.fuel},     {"measures", o.measures}, {"seed", o.seed},
                      {"measure_file", o.measure_file}, {"format", o.format}, {"decimal", o.decimal}};
  const auto census = omega::minilang::halting_census(o.max_chars, o.fuel);
  const std::size_t support = 8 * o.max_chars;
  std::vector<std::pair<std::string, ms::LengthMeasure>> suite;
  if (!o.measure_file.empty()) {
    std::ifstream in(o.measure_file);
    if (!in) throw omega::InputError("cannot read measure file " + o.measure_file);
    json spec;
    try {
      spec = json::parse(in);
    } catch (const json::exception& e) {
      throw omega::InputError("measure file " + o.measure_file + ": " + e.what());
    }
    if (!spec.is_array()) spec = json::array({spec});
    for (std::size_t i = 0; i < spec.size(); ++i) {
      try {
        auto m = measure_from_json(spec[i], support);
        suite.emplace_back("file-" + std::to_string(i), std::move(m));
      } catch (const json::exception& e) {
        throw omega::InputError("measure " + std::to_string(i) + ": " + e.what());
      }
    }
  } else {
    for (std::size_t m = 1; m <= support; ++m) {
      suite.emplace_back("point-mass-" + std::to_string(m), ms::LengthMeasure::point_mass(m, support));
    }
    for (std::size_t i = 0; i < o.measures; ++i) {
      auto rng = omega::util::stream_rng(o.seed, i);
      suite.emplace_back("random-" + std::to_string(i), ms::random_length_measure(rng, support));
    }
  }
  bool all_strict = true;
  json rows = json::array();
  for (const auto& [id, m] : suite) {
    const auto d = ms::dominance_check(census, m);
    if (d.hypothesis_met && !d.strict) all_strict = false;
    rows.push_back({{"measure_id", id},
                    {"measure", m.description()},
                    {"halting_prob", d.halting_probability.str()},
                    {"omega_partial", d.omega_partial.str()},
                    {"strict", d.strict},
                    {"hypothesis_met", d.hypothesis_met}});
    if (o.decimal) {
      rows.back()["halting_prob_approx"] = format_double(d.halting_probability.to_double());
      rows.back()["omega_partial_approx"] = format_double(d.omega_partial.to_double());
    }
  }
  if (o.format == "json") {
    json r = header("dominance", flags);
    r["rows"] = rows;
    r["all_strict_where_hypothesis_met"] = all_strict;
    print_json(r);
  } else {
    print_csv_header("dominance", flags);
    std::cout << "measure-id,halting-prob,omega-partial,strict,hypothesis-met";
    if (o.decimal) std::cout << ",halting-prob-approx,omega-partial-approx";
    std::cout << "\n";
    for (const auto& row : rows) {
      std::cout << row["measure_id"].get<std::string>() << "," << row["halting_prob"].get<std::string>() << ","
                << row["omega_partial"].get<std::string>() << "," << (row["strict"].get<bool>() ? "true" : "false")
                << "," << (row["hypothesis_met"].get<bool>() ? "true" : "false");
      if (o.decimal) {
        std::cout << "," << row["halting_prob_approx"].get<std::string>() << ","
                  << row["omega_partial_approx"].get<std::string>();
      }
      std::cout << "\n";
    }
    std::cout << "# all_strict_where_hypothesis_met=" << (all_strict ? "true" : "false") << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- montecarlo

struct MonteCarloOptions {
  std::string set_file;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  bool serial = false;
};

int cmd_montecarlo(const MonteCarloOptions& o) {
  namespace ms = omega::measures;
  const auto set = omega::prefixfree::read_string_set(o.set_file);
  Stopwatch watch("montecarlo");
  const auto mc = o.serial ? ms::sample_real_prefix_serial(set, o.trials, o.seed)
                           : ms::sample_real_prefix(set, o.trials, o.seed);
  json r = header("montecarlo", {{"set_file", o.set_file}, {"trials", o.trials}, {"seed", o.seed}, {"serial", o.serial}});
  r["rng"] = mc.rng;
  r["seed"] = mc.seed;
  r["trials"] = mc.trials;
  r["hits"] = mc.hits;
  r["estimate"] = mc.estimate.str();
  r["estimate_approx"] = format_double(mc.estimate.to_double());
  r["target"] = mc.target.str();
  print_json(r);
  return kExitOk;
}

// ---------------------------------------------------------------- klab

struct KlabOptions {
  std::string target;
  std::size_t max_chars = 3;
  std::uint64_t fuel = 100;
};

std::vector<std::uint64_t> parse_output_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    if (first == std::string::npos) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item.substr(first), &used));
      if (item.find_first_not_of(' ', first + used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw omega::InputError("target entries must be nonnegative integers (got '" + item + "')");
    }
  }
  return out;
}

int cmd_klab(const KlabOptions& o) {
  const auto target = parse_output_list(o.target);
  const auto k = omega::minilang::bounded_k(target, o.max_chars, o.fuel);
  json r = header("klab", {{"target", o.target}, {"max_chars", o.max_chars}, {"fuel", o.fuel}});
  r["target"] = target;
  if (k.bits) {
    r["bits"] = *k.bits;
    r["program"] = k.program->str();
  } else {
    r["bits"] = "unknown";
  }
  print_json(r);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact halting-probability measures and theory weights"};
  app.require_subcommand(1);

  OmegaOptions omega_o;
  auto* omega_cmd = app.add_subcommand("omega", "Omega_S, prefix-freeness and the interval check for a string set");
  omega_cmd->add_option("set-file", omega_o.set_file, "one 0/1 string per line")->required();
  omega_cmd->add_option("--format", omega_o.format)->check(CLI::IsMember({"json", "text"}));

  const auto add_weight_flags = [](CLI::App* cmd, WeightOptions& w) {
    cmd->add_option("--weight", w.weight, "registered weight name")->required();
    cmd->add_option("--valuation", w.valuation, "e.g. \"p0=1,p1=0;default=0\" (wv, wm)");
    cmd->add_option("--structure", w.structure_file, "finite structure file (wm)");
    cmd->add_option("--reference", w.reference_file, "reference theory file (wlower, wupper, w4, w5)");
    cmd->add_option("--reference-inline", w.reference_inline, "reference theory, ';'-separated");
    cmd->add_option("--precision", w.precision, "terms k for v and vab")->check(CLI::PositiveNumber);
    cmd->add_option("--a", w.a, "vab: weight of unprovable sentences");
    cmd->add_option("--b", w.b, "vab: weight of provable sentences");
    cmd->add_option("--c", w.c, "vab: alpha_n = c^-n");
    cmd->add_option("--seed-weight", w.seed_weight, "u: weight of the first theory");
  };

  WeighOptions weigh_o;
  auto* weigh_cmd = app.add_subcommand("weigh", "weigh one theory");
  weigh_cmd->add_option("theory-file", weigh_o.theory_file)->required();
  weigh_cmd->add_option("--corpus", weigh_o.corpus_dir, "u: theories preceding this one in the construction");
  weigh_cmd->add_flag("--first-order", weigh_o.first_order, "read the theory as first-order (wm only)");
  weigh_cmd->add_option("--format", weigh_o.format)->check(CLI::IsMember({"json", "text"}));
  add_weight_flags(weigh_cmd, weigh_o.weight);

  AuditOptions audit_o;
  auto* audit_cmd = app.add_subcommand("audit", "HP and EP audits of a weight over a corpus");
  audit_cmd->add_option("corpus-dir", audit_o.corpus_dir, "directory of theory files, read in name order");
  audit_cmd->add_option("--random", audit_o.random, "use a random corpus of this size instead");
  audit_cmd->add_option("--seed", audit_o.seed, "random corpus seed");
  audit_cmd->add_option("--principle", audit_o.principle)->check(CLI::IsMember({"hp", "ep", "both"}));
  audit_cmd->add_flag("--serial", audit_o.serial, "single-threaded reference kernels");
  audit_cmd->add_option("--max-listed", audit_o.max_listed, "violations printed per principle");
  add_weight_flags(audit_cmd, audit_o.weight);

  EnumerateOptions enum_o;
  auto* enum_cmd = app.add_subcommand("enumerate", "list sentences psi_n, or rank a formula");
  enum_cmd->add_option("--start", enum_o.start, "first index (decimal, arbitrary size)");
  enum_cmd->add_option("--count", enum_o.count);
  enum_cmd->add_option("--rank", enum_o.rank, "print the index of this formula instead");
  enum_cmd->add_option("--format", enum_o.format)->check(CLI::IsMember({"json", "text"}));

  CensusOptions census_o;
  auto* census_cmd = app.add_subcommand("census", "halting census of the toy language");
  census_cmd->add_option("--max-chars", census_o.max_chars)->check(CLI::Range(1, 12));
  census_cmd->add_option("--fuel", census_o.fuel)->check(CLI::PositiveNumber);
  census_cmd->add_option("--format", census_o.format)->check(CLI::IsMember({"csv", "json"}));
  census_cmd->add_flag("--serial", census_o.serial);

  DominanceOptions dom_o;
  auto* dom_cmd = app.add_subcommand("dominance", "length measures against the census partial Omega");
  dom_cmd->add_option("--max-chars", dom_o.max_chars)->check(CLI::Range(1, 12));
  dom_cmd->add_option("--fuel", dom_o.fuel)->check(CLI::PositiveNumber);
  dom_cmd->add_option("--measures", dom_o.measures, "random measures besides the point masses");
  dom_cmd->add_option("--seed", dom_o.seed);
  dom_cmd->add_option("--measure-file", dom_o.measure_file, "JSON measure spec(s) instead of the random suite");
  dom_cmd->add_option("--format", dom_o.format)->check(CLI::IsMember({"csv", "json"}));
  dom_cmd->add_flag("--decimal", dom_o.decimal, "add approximate decimal columns");

  MonteCarloOptions mc_o;
  auto* mc_cmd = app.add_subcommand("montecarlo", "estimate Omega_S by sampling real expansions");
  mc_cmd->add_option("set-file", mc_o.set_file)->required();
  mc_cmd->add_option("--trials", mc_o.trials)->check(CLI::PositiveNumber);
  mc_cmd->add_option("--seed", mc_o.seed);
  mc_cmd->add_flag("--serial", mc_o.serial);

  KlabOptions k_o;
  auto* k_cmd = app.add_subcommand("klab", "shortest toy program printing a given output");
  k_cmd->add_option("--target", k_o.target, "comma-separated outputs; empty for none");
  k_cmd->add_option("--max-chars", k_o.max_chars)->check(CLI::Range(1, 12));
  k_cmd->add_option("--fuel", k_o.fuel)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*omega_cmd) return cmd_omega(omega_o);
    if (*weigh_cmd) return cmd_weigh(weigh_o);
    if (*audit_cmd) return cmd_audit(audit_o);
    if (*enum_cmd) return cmd_enumerate(enum_o);
    if (*census_cmd) return cmd_census(census_o);
    if (*dom_cmd) return cmd_dominance(dom_o);
    if (*mc_cmd) return cmd_montecarlo(mc_o);
    if (*k_cmd) return cmd_klab(k_o);
  } catch (const omega::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
