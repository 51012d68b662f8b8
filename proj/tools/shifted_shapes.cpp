#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "shifted_shapes/free_cumulants.hpp"
#include "shifted_shapes/io.hpp"
#include "shifted_shapes/limit_shapes.hpp"
#include "shifted_shapes/rsk.hpp"
#include "shifted_shapes/samplers.hpp"
#include "shifted_shapes/spin_characters.hpp"

using namespace shs;

namespace {

struct RunConfig {
  int n = 0;
  int d = 0;
  double c = 1.0;
  std::vector<double> alpha;
  int trials = 1;
  std::uint64_t seed = 0;
  int grid_points = 401;
  double range = 3.0;
  double epsilon = 1e-2;
  std::string format = "csv";
  std::string out = "-";
  int parallel = 0;
  std::string shape;
  std::string word;
};

InversionOptions inversion(const RunConfig& cfg) {
  InversionOptions o;
  o.eps = {cfg.epsilon, cfg.epsilon / 2, cfg.epsilon / 4};
  o.threads = cfg.parallel;
  return o;
}

Grid grid_of(const RunConfig& cfg) { return Grid{-cfg.range, cfg.range, cfg.grid_points}; }

bool json(const RunConfig& cfg) { return cfg.format == "json"; }

void emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open output file " + cfg.out);
  f << payload;
}

std::string curve_payload(const RunConfig& cfg, const SampledProfile& curve) {
  std::ostringstream s;
  if (json(cfg))
    s << to_json(curve).dump() << '\n';
  else
    write_curve_csv(s, curve);
  return s.str();
}

void need(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

StrictPartition parse_shape(const std::string& text) {
  std::vector<int> parts;
  std::stringstream s(text);
  std::string token;
  while (std::getline(s, token, ',')) {
    try {
      parts.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw InvalidArgument("bad part '" + token + "' in shape");
    }
  }
  return StrictPartition(parts);
}

std::string sample_profile(const RunConfig& cfg, bool schur_weyl) {
  need(cfg.n >= 1, "--n must be positive");
  need(cfg.trials >= 1, "--trials must be positive");
  const Grid grid = grid_of(cfg);
  const double scale = 1.0 / std::sqrt(2.0 * cfg.n);
  ShapeSampler sampler;
  Curve reference;
  if (schur_weyl) {
    const int d = cfg.d > 0 ? cfg.d : static_cast<int>(std::floor(std::sqrt(static_cast<double>(cfg.n))));
    need(d >= 1, "--d must be positive");
    const int n = cfg.n;
    sampler = [n, d](Rng& rng) { return sample_schur_weyl(n, d, rng); };
    const auto limit = sw_shape(std::sqrt(static_cast<double>(n)) / d, grid, inversion(cfg));
    reference = [limit](double z) { return limit(z); };
  } else {
    const int n = cfg.n;
    sampler = [n](Rng& rng) { return sample_plancherel(n, rng); };
    reference = lsvk_value;
  }
  const auto result = monte_carlo_profile(sampler, cfg.trials, scale, cfg.seed, grid, reference, cfg.parallel);
  std::cerr << "mean sup-distance to the limit curve: " << format_double(result.mean_deviation()) << '\n';
  return curve_payload(cfg, result.mean);
}

std::string sample_syt(const RunConfig& cfg) {
  need(!cfg.shape.empty(), "--shape is required");
  need(cfg.trials >= 1, "--trials must be positive");
  const StrictPartition xi = parse_shape(cfg.shape);
  std::ostringstream s;
  Json all = Json::array();
  if (!json(cfg)) s << "trial,x,y,entry\n";
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng = stream_rng(cfg.seed, static_cast<std::uint64_t>(t));
    const auto tab = hook_walk_syt(xi, rng);
    if (json(cfg)) {
      all.push_back(to_json(tab));
      continue;
    }
    for (const auto& [x, y] : cells(xi)) s << t << ',' << x << ',' << y << ',' << tab.at(x, y) << '\n';
  }
  if (json(cfg)) s << all.dump() << '\n';
  return s.str();
}

std::string shape_levels(const RunConfig& cfg) {
  std::vector<double> alphas = cfg.alpha;
  if (alphas.empty()) alphas = {0.25, 0.5, 0.75, 1.0};
  const auto family = scaled_level_curves({0.0, 0.0, 1.0}, alphas, grid_of(cfg), inversion(cfg));
  std::ostringstream s;
  if (json(cfg))
    s << to_json(family).dump() << '\n';
  else
    write_family_csv(s, family);
  return s.str();
}

std::string char_table(const RunConfig& cfg) {
  need(cfg.n >= 1, "--n must be positive");
  if (cfg.n > kDefaultOracleBound)
    throw BoundExceeded("character tables are limited to n <= " + std::to_string(kDefaultOracleBound));
  const auto& table = spin_character_table(cfg.n);
  std::ostringstream s;
  Json rows = Json::object();
  if (!json(cfg)) s << "xi,pi,value\n";
  for (const auto& xi : table.shapes())
    for (const auto& pi : table.classes()) {
      const auto v = table.ratio(xi, pi);
      if (json(cfg))
        rows[xi.str()][pi.str()] = to_string(v);
      else
        s << '"' << xi.str() << "\",\"" << pi.str() << "\"," << to_string(v) << '\n';
    }
  if (json(cfg)) s << rows.dump() << '\n';
  return s.str();
}

std::string char_cumulants(const RunConfig& cfg) {
  need(cfg.n >= 1, "--n must be positive");
  const auto constants = plancherel_constants(2 * cfg.n + 2);
  std::ostringstream s;
  Json rows = Json::array();
  if (!json(cfg)) s << "k1,k2,covariance\n";
  for (int k1 = 1; k1 <= cfg.n; k1 += 2)
    for (int k2 = k1; k2 <= cfg.n; k2 += 2) {
      const auto v = clt_covariance(constants, k1, k2);
      if (json(cfg))
        rows.push_back({{"k1", k1}, {"k2", k2}, {"covariance", to_string(v)}});
      else
        s << k1 << ',' << k2 << ',' << to_string(v) << '\n';
    }
  if (json(cfg)) s << rows.dump() << '\n';
  return s.str();
}

std::string char_verify(const RunConfig& cfg, bool& all_ok) {
  need(cfg.n >= 1, "--n must be positive");
  if (cfg.n > kDefaultOracleBound)
    throw BoundExceeded("identity checks are limited to n <= " + std::to_string(kDefaultOracleBound));
  std::vector<std::pair<std::string, bool>> results;
  const auto& table = spin_character_table(cfg.n);
  for (int d = 1; d <= 3; ++d) {
    const auto sw = schur_weyl_measure(cfg.n, d);
    bool ok = true;
    for (const auto& pi : table.classes()) {
      Rational total = 0;
      for (const auto& [xi, p] : sw) total += p * table.ratio(xi, pi);
      const int norm = pi.norm();
      const Rational expected = Rational(1) / (pow(Rational(2), norm / 2) * pow(Rational(d), norm));
      ok = ok && total == expected;
    }
    results.emplace_back("schur-weyl d=" + std::to_string(d), ok);
  }
  {
    const auto pl = plancherel_measure(cfg.n);
    bool ok = true;
    for (const auto& pi : table.classes()) {
      if (pi.reduced().empty()) continue;
      Rational total = 0;
      for (const auto& [xi, p] : pl) total += p * table.ratio(xi, pi);
      ok = ok && total == 0;
    }
    results.emplace_back("plancherel", ok);
  }
  for (int k = 1; k <= std::min(cfg.n, 5); ++k)
    for (const auto& rho : odd_partitions(k))
      results.emplace_back("dstar rho=" + rho.str(), dstar_check(rho, cfg.n).ok);
  std::ostringstream s;
  Json rows = Json::array();
  if (!json(cfg)) s << "identity,result\n";
  for (const auto& [name, ok] : results) {
    all_ok = all_ok && ok;
    if (json(cfg))
      rows.push_back({{"identity", name}, {"result", ok ? "PASS" : "FAIL"}});
    else
      s << '"' << name << "\"," << (ok ? "PASS" : "FAIL") << '\n';
  }
  if (json(cfg)) s << rows.dump() << '\n';
  return s.str();
}

std::string rsk_encode(const RunConfig& cfg) {
  need(!cfg.word.empty(), "--word is required");
  const CircledWord word = parse_word(cfg.word);
  int d = cfg.d;
  for (const auto& letter : word) d = std::max(d, letter.value);
  const auto pair = rsk(word, d);
  std::ostringstream s;
  if (json(cfg)) {
    s << to_json(pair).dump() << '\n';
    return s.str();
  }
  s << "tableau,row,position,entry\n";
  const auto& P = pair.P.rows();
  for (std::size_t y = 0; y < P.size(); ++y)
    for (std::size_t k = 0; k < P[y].size(); ++k)
      s << "P," << y + 1 << ',' << k + 1 << ',' << letter_string(P[y][k]) << '\n';
  const auto& Q = pair.Q.tableau.rows();
  for (std::size_t y = 0; y < Q.size(); ++y)
    for (std::size_t k = 0; k < Q[y].size(); ++k)
      s << "Q," << y + 1 << ',' << k + 1 << ',' << (pair.Q.circled[y][k] ? "c" : "") << Q[y][k] << '\n';
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random shifted Young diagrams, spin characters and limit shapes"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "output path, - for stdout");
    sub->add_option("--parallel", cfg.parallel, "worker count (0: environment or default)")
        ->check(CLI::NonNegativeNumber);
  };
  auto curve_flags = [&cfg](CLI::App* sub) {
    sub->add_option("--grid-points", cfg.grid_points, "grid size")->check(CLI::Range(2, 1000000));
    sub->add_option("--range", cfg.range, "grid covers [-range, range]")->check(CLI::PositiveNumber);
    sub->add_option("--epsilon", cfg.epsilon, "largest imaginary offset")->check(CLI::PositiveNumber);
  };

  auto* sample = app.add_subcommand("sample", "random shapes and tableaux");
  sample->require_subcommand(1);
  auto* s_pl = sample->add_subcommand("plancherel", "mean scaled profile under the shifted Plancherel measure");
  auto* s_sw = sample->add_subcommand("schur-weyl", "mean scaled profile under the shifted Schur-Weyl measure");
  auto* s_syt = sample->add_subcommand("syt", "uniform shifted standard tableaux by the hook walk");
  for (auto* sub : {s_pl, s_sw, s_syt}) {
    common(sub);
    sub->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed);
  }
  for (auto* sub : {s_pl, s_sw}) {
    sub->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
    curve_flags(sub);
  }
  s_sw->add_option("--d", cfg.d, "alphabet size (default floor(sqrt n))")->check(CLI::PositiveNumber);
  s_syt->add_option("--shape", cfg.shape, "strict partition, e.g. 4,2,1")->required();

  auto* shape = app.add_subcommand("shape", "limit curves");
  shape->require_subcommand(1);
  auto* sh_lsvk = shape->add_subcommand("lsvk", "closed-form Plancherel limit");
  auto* sh_sw = shape->add_subcommand("sw", "Schur-Weyl limit for a given c");
  auto* sh_levels = shape->add_subcommand("levels", "level curves from compressed free cumulants");
  auto* sh_ins = shape->add_subcommand("insertion", "insertion-tableau level curve");
  auto* sh_rec = shape->add_subcommand("recording", "recording-tableau level curve");
  for (auto* sub : {sh_lsvk, sh_sw, sh_levels, sh_ins, sh_rec}) {
    common(sub);
    curve_flags(sub);
  }
  sh_sw->add_option("--c", cfg.c)->check(CLI::PositiveNumber);
  sh_levels->add_option("--alpha", cfg.alpha, "comma-separated values in (0, 1]")->delimiter(',');
  for (auto* sub : {sh_ins, sh_rec}) sub->add_option("--alpha", cfg.alpha)->required()->expected(1);

  auto* chr = app.add_subcommand("char", "spin characters");
  chr->require_subcommand(1);
  auto* c_table = chr->add_subcommand("table", "character ratios for all shapes and classes");
  auto* c_cum = chr->add_subcommand("cumulants", "limiting Plancherel covariances");
  auto* c_ver = chr->add_subcommand("verify", "exact identity checks");
  for (auto* sub : {c_table, c_cum, c_ver}) {
    common(sub);
    sub->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  }

  auto* rsk_cmd = app.add_subcommand("rsk", "shifted RSK");
  rsk_cmd->require_subcommand(1);
  auto* r_enc = rsk_cmd->add_subcommand("encode", "word to tableau pair");
  common(r_enc);
  r_enc->add_option("--word", cfg.word, "comma-separated letters, c prefix for circled")->required();
  r_enc->add_option("--d", cfg.d, "alphabet size")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    bool ok = true;
    std::string payload;
    if (s_pl->parsed())
      payload = sample_profile(cfg, false);
    else if (s_sw->parsed())
      payload = sample_profile(cfg, true);
    else if (s_syt->parsed())
      payload = sample_syt(cfg);
    else if (sh_lsvk->parsed())
      payload = curve_payload(cfg, lsvk(grid_of(cfg)));
    else if (sh_sw->parsed())
      payload = curve_payload(cfg, sw_shape(cfg.c, grid_of(cfg), inversion(cfg)));
    else if (sh_levels->parsed())
      payload = shape_levels(cfg);
    else if (sh_ins->parsed())
      payload = curve_payload(cfg, insertion_level_curve(cfg.alpha.at(0), grid_of(cfg), inversion(cfg)));
    else if (sh_rec->parsed())
      payload = curve_payload(cfg, recording_level_curve(cfg.alpha.at(0), grid_of(cfg), inversion(cfg)));
    else if (c_table->parsed())
      payload = char_table(cfg);
    else if (c_cum->parsed())
      payload = char_cumulants(cfg);
    else if (c_ver->parsed())
      payload = char_verify(cfg, ok);
    else if (r_enc->parsed())
      payload = rsk_encode(cfg);
    emit(cfg, payload);
    return ok ? 0 : 1;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const NonConvergence& e) {
    std::cerr << "numerical non-convergence: " << e.what() << '\n';
    return 3;
  } catch (const BoundExceeded& e) {
    std::cerr << "oracle bound exceeded: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
