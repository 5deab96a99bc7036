#include "binkg/harness.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "binkg/errors.hpp"
#include "binkg/laplace.hpp"

namespace binkg {

void SyntheticSpec::validate() const {
  if (num_alternatives < 1) throw ConfigError("synthetic M must be at least 1");
  if (dim < 1) throw ConfigError("synthetic d must be at least 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ConfigError("lambda must be positive");
  if (!(feature_low < feature_high)) throw ConfigError("feature_low must be below feature_high");
}

double TruthModel::success(std::span<const double> x) const {
  return sigma(link, dot(w_star, x));
}

double TruthModel::best_success(const AlternativeSet& alts) const {
  double best = 0.0;
  for (const auto& x : alts) best = std::max(best, success(x));
  return best;
}

Instance generate_synthetic(const SyntheticSpec& spec, Link link, Rng& rng) {
  spec.validate();
  std::uniform_real_distribution<double> feature(spec.feature_low, spec.feature_high);
  std::vector<Vector> xs(spec.num_alternatives, Vector(spec.dim + 1));
  for (auto& x : xs) {
    x[0] = 1.0;
    for (std::size_t j = 1; j <= spec.dim; ++j) x[j] = feature(rng);
  }
  std::normal_distribution<double> weight(0.0, 1.0 / std::sqrt(spec.lambda));
  Vector w(spec.dim + 1);
  for (auto& wj : w) wj = weight(rng);
  return Instance{AlternativeSet(std::move(xs)), TruthModel{std::move(w), link}};
}

LabelTable::LabelTable(std::size_t num_alternatives, std::size_t budget)
    : rows_(num_alternatives), cols_(budget), cells_(num_alternatives * budget, 1) {}

Label LabelTable::at(std::size_t alt, std::size_t step) const {
  if (alt >= rows_ || step >= cols_) throw DimensionError("label table index out of range");
  return static_cast<Label>(cells_[alt * cols_ + step]);
}

void LabelTable::set(std::size_t alt, std::size_t step, Label y) {
  if (alt >= rows_ || step >= cols_) throw DimensionError("label table index out of range");
  cells_[alt * cols_ + step] = static_cast<signed char>(y);
}

std::uint64_t LabelTable::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  for (int shift = 0; shift < 64; shift += 8) feed((rows_ >> shift) & 0xff);
  for (int shift = 0; shift < 64; shift += 8) feed((cols_ >> shift) & 0xff);
  for (signed char c : cells_) feed(static_cast<unsigned char>(c));
  return h;
}

LabelTable pregenerate_labels(const AlternativeSet& alts, const TruthModel& truth,
                              std::size_t budget, Rng& rng) {
  if (budget < 1) throw ConfigError("label budget must be at least 1");
  LabelTable table(alts.size(), budget);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (std::size_t m = 0; m < alts.size(); ++m) {
    const double p = truth.success(alts[m]);
    for (std::size_t n = 0; n < budget; ++n)
      table.set(m, n, u01(rng) < p ? Label::positive : Label::negative);
  }
  return table;
}

std::string Policy::name() const {
  switch (kind) {
    case PolicyKind::kg_offline: return "kg";
    case PolicyKind::kg_online: return "kg_online";
    case PolicyKind::baseline: return std::string(to_string(baseline.kind));
  }
  return "unknown";
}

Policy Policy::parse(std::string_view name) {
  if (name == "kg") return Policy{PolicyKind::kg_offline, {}};
  if (name == "kg_online") return Policy{PolicyKind::kg_online, {}};
  Policy p{PolicyKind::baseline, {}};
  p.baseline.kind = parse_baseline(name);
  return p;
}

KgConfig RunConfig::kg_config() const {
  KgConfig kg;
  kg.link = link;
  kg.updater = updater;
  kg.tie_epsilon = tie_epsilon;
  kg.tau = tau;
  kg.bisection = bisection;
  return kg;
}

RunRecord run_policy(const Policy& policy, const GaussianBelief& prior, const Instance& instance,
                     const LabelTable& labels, std::size_t budget, const RunConfig& cfg,
                     Rng& rng) {
  const AlternativeSet& alts = instance.alternatives;
  prior.validate();
  if (alts.dim() != prior.dim()) throw DimensionError("prior and alternatives disagree on d");
  if (labels.num_alternatives() != alts.size())
    throw DimensionError("label table rows do not match the alternative count");
  if (budget > labels.budget()) throw ConfigError("budget exceeds the label table depth");

  const Transition step = cfg.transition();
  step.validate();
  const KgConfig kg_cfg = cfg.kg_config();
  if (policy.kind != PolicyKind::baseline) kg_cfg.validate();

  RunRecord rec;
  rec.policy_name = policy.name();
  rec.chosen.reserve(budget);
  rec.observed.reserve(budget);
  rec.oc_curve.reserve(budget);
  const double best = instance.truth.best_success(alts);

  GaussianBelief belief = prior;
  for (std::size_t n = 0; n < budget; ++n) {
    std::size_t pick = 0;
    switch (policy.kind) {
      case PolicyKind::kg_offline:
        pick = select_offline(kg_scores(belief, alts, kg_cfg), kg_cfg, rng);
        break;
      case PolicyKind::kg_online:
        pick = select_online(belief, alts, kg_cfg, rng);
        break;
      case PolicyKind::baseline:
        pick = baseline_select(policy.baseline, belief, alts, cfg.link, static_cast<int>(n), rng);
        break;
    }
    const Label y = labels.at(pick, n);
    belief = step(belief, {alts[pick], y});
    rec.chosen.push_back(pick);
    rec.observed.push_back(y);

    const std::size_t implemented = implementation_decision(belief, alts, cfg.link);
    rec.oc_curve.push_back(best - instance.truth.success(alts[implemented]));
  }
  rec.final_oc = rec.oc_curve.empty() ? 0.0 : rec.oc_curve.back();
  rec.final_belief = std::move(belief);
  return rec;
}

CurveSummary aggregate(const std::vector<RunRecord>& records) {
  if (records.empty()) throw DimensionError("cannot aggregate zero runs");
  const std::size_t len = records.front().oc_curve.size();
  for (const auto& r : records)
    if (r.oc_curve.size() != len) throw DimensionError("runs have different curve lengths");

  const double n = static_cast<double>(records.size());
  CurveSummary out;
  out.replications = records.size();
  out.mean.assign(len, 0.0);
  out.std_error.assign(len, 0.0);
  for (const auto& r : records)
    for (std::size_t t = 0; t < len; ++t) out.mean[t] += r.oc_curve[t];
  for (auto& v : out.mean) v /= n;
  if (records.size() > 1) {
    for (std::size_t t = 0; t < len; ++t) {
      double ss = 0.0;
      for (const auto& r : records) {
        const double dev = r.oc_curve[t] - out.mean[t];
        ss += dev * dev;
      }
      out.std_error[t] = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_number(const std::string& cell, std::size_t line_no) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (cell.empty() || end != begin + cell.size() || errno == ERANGE || !std::isfinite(v))
    throw DataError("line " + std::to_string(line_no) + ": non-numeric cell '" + cell + "'");
  return v;
}

}  // namespace

Dataset read_csv_dataset(const std::filesystem::path& path, const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());

  Dataset data;
  std::string line;
  std::size_t line_no = 0;
  std::size_t columns = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split_row(line);
    if (columns == 0) {
      columns = cells.size();
      const std::size_t min_cols = schema.has_label ? 2 : 1;
      if (columns < min_cols) throw DataError("header has too few columns for the schema");
      data.feature_names.assign(cells.begin(),
                                cells.end() - (schema.has_label ? 1 : 0));
      continue;
    }
    if (cells.size() != columns)
      throw DataError("line " + std::to_string(line_no) + ": expected " +
                      std::to_string(columns) + " columns, got " + std::to_string(cells.size()));
    Vector row;
    row.reserve(columns);
    for (const auto& c : cells) row.push_back(parse_number(c, line_no));
    if (schema.has_label) {
      const double y = row.back();
      row.pop_back();
      if (y == 1.0)
        data.labels.push_back(Label::positive);
      else if (y == 0.0 || y == -1.0)
        data.labels.push_back(Label::negative);
      else
        throw DataError("line " + std::to_string(line_no) + ": label must be -1, 0 or 1");
    }
    data.rows.push_back(std::move(row));
  }
  if (columns == 0) throw DataError(path.string() + " is empty");
  if (data.rows.empty()) throw DataError(path.string() + " has a header but no data rows");
  return data;
}

AlternativeSet scale_features(const std::vector<Vector>& rows, double low, double high) {
  if (rows.empty()) throw DataError("no rows to scale");
  const std::size_t d = rows.front().size();
  Vector lo(d, INFINITY), hi(d, -INFINITY);
  for (const auto& r : rows) {
    if (r.size() != d) throw DataError("rows have different lengths");
    for (std::size_t j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], r[j]);
      hi[j] = std::max(hi[j], r[j]);
    }
  }
  std::vector<Vector> xs;
  xs.reserve(rows.size());
  for (const auto& r : rows) {
    Vector x(d + 1);
    x[0] = 1.0;
    for (std::size_t j = 0; j < d; ++j)
      x[j + 1] = hi[j] > lo[j] ? low + (high - low) * (r[j] - lo[j]) / (hi[j] - lo[j]) : 0.0;
    xs.push_back(std::move(x));
  }
  return AlternativeSet(std::move(xs));
}

Vector fit_weights(const AlternativeSet& alts, const std::vector<Label>& labels, Link link,
                   double lambda) {
  if (labels.size() != alts.size()) throw DataError("need one label per row to fit weights");
  GaussianBelief belief = GaussianBelief::prior(alts.dim(), lambda);
  for (std::size_t i = 0; i < alts.size(); ++i)
    belief = laplace_step(belief, {alts[i], labels[i]}, link);
  return belief.mean;
}

TruthModel perturb_truth(const Vector& w_fit, Link link, std::optional<double> perturb_scale,
                         Rng& rng) {
  double scale = 0.0;
  if (perturb_scale) {
    scale = *perturb_scale;
  } else {
    double sq = 0.0;
    for (double w : w_fit) sq += w * w;
    scale = 0.1 * std::sqrt(sq) / std::sqrt(static_cast<double>(w_fit.size()));
  }
  if (!(scale >= 0.0) || !std::isfinite(scale))
    throw ConfigError("perturb_scale must be non-negative");
  TruthModel truth{w_fit, link};
  if (scale > 0.0) {
    std::normal_distribution<double> noise(0.0, scale);
    for (auto& w : truth.w_star) w += noise(rng);
  }
  return truth;
}

Instance ingest_csv(const std::filesystem::path& path, const IngestOptions& options, Rng& rng) {
  const Dataset data = read_csv_dataset(path, options.schema);
  AlternativeSet alts = scale_features(data.rows);
  Vector w_fit;
  if (options.schema.has_label) {
    w_fit = fit_weights(alts, data.labels, options.link, options.lambda);
  } else {
    std::normal_distribution<double> prior(0.0, 1.0 / std::sqrt(options.lambda));
    w_fit.resize(alts.dim());
    for (auto& w : w_fit) w = prior(rng);
  }
  TruthModel truth = perturb_truth(w_fit, options.link, options.perturb_scale, rng);
  return Instance{std::move(alts), std::move(truth)};
}

}  // namespace binkg
