#include "sgdol/harness/config_file.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <string>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "sgdol/core/error.hpp"

namespace sgdol {
namespace {

namespace pt = boost::property_tree;

// Reads typed values out of one section, collecting every problem so the
// final ValidationError lists all offending fields at once.
class Section {
public:
  Section(const pt::ptree& tree, std::string name, std::vector<std::string>& bad)
      : tree_(tree), name_(std::move(name)), bad_(bad) {}

  bool has(const std::string& key) const { return tree_.find(key) != tree_.not_found(); }

  std::string text(const std::string& key, const std::string& fallback = "") {
    seen_.insert(key);
    if (!has(key)) return fallback;
    return trim(strip_comment(tree_.get<std::string>(key)));
  }

  double real(const std::string& key, double fallback) {
    const std::string raw = text(key);
    if (raw.empty()) return fallback;
    double v = 0.0;
    if (!parse(raw, v)) fail(key);
    return v;
  }

  std::size_t count(const std::string& key, std::size_t fallback) {
    const std::string raw = text(key);
    if (raw.empty()) return fallback;
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
    if (ec != std::errc() || ptr != raw.data() + raw.size()) {
      // Negative or fractional counts are reported under the field name.
      fail(key);
      return 0;
    }
    return v;
  }

  std::uint64_t u64(const std::string& key, std::uint64_t fallback) {
    return static_cast<std::uint64_t>(count(key, fallback));
  }

  bool flag(const std::string& key, bool fallback) {
    const std::string raw = text(key);
    if (raw.empty()) return fallback;
    if (raw == "true" || raw == "1" || raw == "yes") return true;
    if (raw == "false" || raw == "0" || raw == "no") return false;
    fail(key);
    return fallback;
  }

  std::vector<double> list(const std::string& key) {
    std::vector<double> out;
    const std::string raw = text(key);
    std::size_t start = 0;
    while (start < raw.size()) {
      std::size_t end = raw.find(',', start);
      if (end == std::string::npos) end = raw.size();
      double v = 0.0;
      if (!parse(trim(raw.substr(start, end - start)), v)) {
        fail(key);
        return {};
      }
      out.push_back(v);
      start = end + 1;
    }
    return out;
  }

  void fail(const std::string& key) { bad_.push_back(name_ + "." + key); }

  void reject_unknown() {
    for (const auto& [key, _] : tree_) {
      if (!seen_.count(key)) bad_.push_back(name_ + "." + key + " (unknown key)");
    }
  }

private:
  // Trailing "; ..." or "# ..." after whitespace.
  static std::string strip_comment(const std::string& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
      if ((s[i] == ';' || s[i] == '#') && (s[i - 1] == ' ' || s[i - 1] == '\t')) {
        return s.substr(0, i);
      }
    }
    return s;
  }

  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  static bool parse(const std::string& raw, double& v) {
    const char* first = raw.data() + (!raw.empty() && raw[0] == '+' ? 1 : 0);
    const auto [ptr, ec] = std::from_chars(first, raw.data() + raw.size(), v);
    return ec == std::errc() && ptr == raw.data() + raw.size() && !raw.empty();
  }

  const pt::ptree& tree_;
  std::string name_;
  std::vector<std::string>& bad_;
  std::set<std::string> seen_;
};

OptimizerConfig parse_optimizer(Section& s, const std::string& name) {
  OptimizerConfig c;
  c.name = name;
  const std::string kind = s.text("kind");
  if (auto k = parse_kind(kind)) {
    c.kind = *k;
  } else {
    s.fail("kind");
  }
  c.M = s.real("M", 0.0);
  c.alpha = s.real("alpha", kDefaultAlpha);
  const std::string curvature = s.text("curvature", "standard");
  if (curvature == "standard") {
    c.curvature = Curvature::kStandard;
  } else if (curvature == "doubled") {
    c.curvature = Curvature::kDoubled;
  } else {
    s.fail("curvature");
  }
  c.clamp_beta_to_zero = s.flag("clamp_beta", false);
  c.keep_regret_steps = s.flag("keep_regret_steps", false);
  c.lr = s.real("lr", 0.0);
  c.adam_beta1 = s.real("beta1", c.adam_beta1);
  c.adam_beta2 = s.real("beta2", c.adam_beta2);
  c.adam_epsilon = s.real("epsilon", c.adam_epsilon);
  c.gl_sigma = s.real("sigma", 0.0);
  c.gl_horizon = s.real("T", 0.0);
  c.gl_f_gap = s.real("f_gap", 0.0);
  c.gl_c = s.real("c", 1.0);
  return c;
}

}  // namespace

ExperimentSpec parse_config(std::istream& in, const std::filesystem::path& base_dir) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ValidationError({"config"}, e.message() + " at line " + std::to_string(e.line()));
  }

  std::vector<std::string> bad;
  ExperimentSpec spec;
  const pt::ptree empty;

  const auto exp_it = tree.find("experiment");
  Section exp(exp_it == tree.not_found() ? empty : exp_it->second, "experiment", bad);
  if (exp_it == tree.not_found()) bad.push_back("experiment");
  spec.T = exp.count("T", 0);
  spec.repetitions = exp.count("repetitions", 1);
  spec.seed = exp.u64("seed", 0);
  spec.report_every = exp.count("report_every", 0);
  spec.keep_raw = exp.flag("keep_raw", false);
  spec.threads = exp.count("threads", 0);
  const std::string output = exp.text("output", "results");
  spec.output = std::filesystem::path(output).is_absolute() ? std::filesystem::path(output)
                                                            : base_dir / output;
  exp.reject_unknown();

  const auto oracle_it = tree.find("oracle");
  Section oracle(oracle_it == tree.not_found() ? empty : oracle_it->second, "oracle", bad);
  if (oracle_it == tree.not_found()) bad.push_back("oracle");
  const std::string kind = oracle.text("kind", "rosenbrock");
  auto& o = spec.oracle;
  if (kind == "rosenbrock") {
    o.kind = OracleKind::kRosenbrock;
    o.sigma = oracle.real("sigma", 0.0);
  } else if (kind == "sigmoid") {
    o.kind = OracleKind::kSigmoid;
    const std::string path = oracle.text("dataset");
    if (!path.empty()) {
      o.dataset = std::filesystem::path(path).is_absolute() ? std::filesystem::path(path)
                                                            : base_dir / path;
    }
    const std::string batch = oracle.text("batch_size", "full");
    if (batch != "full") o.batch_size = oracle.count("batch_size", 0);
    if (batch != "full" && o.batch_size == 0) oracle.fail("batch_size");
    o.balance = oracle.flag("balance", false);
    o.append_bias = oracle.flag("bias", true);
  } else if (kind == "quadratic") {
    o.kind = OracleKind::kQuadratic;
    o.diagonal = oracle.list("diagonal");
    o.noise = oracle.list("noise");
    o.start = oracle.list("start");
  } else {
    oracle.fail("kind");
  }
  oracle.reject_unknown();

  for (const auto& [section, body] : tree) {
    if (section == "experiment" || section == "oracle") continue;
    if (section.rfind("optimizer.", 0) != 0) {
      bad.push_back(section + " (unknown section)");
      continue;
    }
    const std::string name = section.substr(std::string("optimizer.").size());
    Section s(body, section, bad);
    spec.optimizers.push_back(parse_optimizer(s, name));
    s.reject_unknown();
  }

  if (!bad.empty()) throw ValidationError(std::move(bad));
  validate(spec);
  return spec;
}

ExperimentSpec load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  return parse_config(in, path.parent_path());
}

}  // namespace sgdol
