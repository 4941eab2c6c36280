#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "entroscale/bounds.hpp"
#include "entroscale/cone.hpp"
#include "entroscale/errors.hpp"
#include "entroscale/fitting.hpp"
#include "entroscale/gaussian_sim.hpp"
#include "entroscale/mincut.hpp"

namespace entroscale::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

struct Global {
  std::string out;
  int workers = 0;
  bool quiet = false;
};

struct Options {
  int dim = 1;
  int L = 0;
  int chi = 2;
  std::string tree = "regular:1";
  std::int64_t l = 0;
  std::string seeds;
  std::string blocks;
  std::string block;
  std::optional<int> offset;
  bool homogeneous = false;
  std::string models;
  int lmin = 6;
  std::string in;
  bool edges = false;
};

// Re-raises a library error with the flag that caused it.
template <class F>
auto for_flag(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidInput& e) {
    throw InvalidInput(flag + ": " + e.what());
  }
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Writes through a temporary file and renames it, so a failed run never
// leaves a partial output behind.
void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    f << content;
    if (!f.flush()) throw std::runtime_error("cannot write '" + tmp.string() + "'");
  }
  fs::rename(tmp, path);
}

void emit(const Global& g, std::ostream& out, const std::string& content) {
  if (g.out.empty()) {
    out << content;
  } else {
    write_file(g.out, content);
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::int64_t parse_int(const std::string& text, const std::string& flag) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InvalidInput(flag + ": expected an integer, got '" + text + "'");
  return v;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  for (const auto& part : split(text, ',')) {
    const auto dash = part.find('-', 1);
    const std::int64_t lo = parse_int(part.substr(0, dash), "--seeds");
    const std::int64_t hi = dash == std::string::npos ? lo : parse_int(part.substr(dash + 1), "--seeds");
    if (lo < 0 || hi < lo || hi - lo > 100000) throw InvalidInput("--seeds: bad seed range '" + part + "'");
    for (std::int64_t s = lo; s <= hi; ++s) seeds.push_back(static_cast<std::uint64_t>(s));
  }
  if (seeds.empty()) throw InvalidInput("--seeds: at least one seed is required");
  return seeds;
}

std::vector<int> parse_blocks(const std::string& text) {
  if (text.rfind("special:", 0) == 0) {
    const auto max = parse_int(text.substr(8), "--blocks");
    if (max < 4 || max > (1 << 24)) throw InvalidInput("--blocks: special:max needs 4 <= max <= 2^24");
    return special_sizes(static_cast<int>(max));
  }
  std::vector<int> sizes;
  for (const auto& part : split(text, ',')) {
    const auto l = parse_int(part, "--blocks");
    if (l < 1 || l > (1 << 24)) throw InvalidInput("--blocks: block size out of range: " + part);
    sizes.push_back(static_cast<int>(l));
  }
  if (sizes.empty()) throw InvalidInput("--blocks: no block sizes given");
  return sizes;
}

std::vector<Candidate> parse_models(const std::string& text, int dim) {
  std::string spec = text;
  if (spec.empty()) spec = dim == 1 ? "affinelog,polylog:2,power" : "boundary,boundarylog,power";
  std::vector<Candidate> out;
  for (const auto& part : split(spec, ',')) out.push_back(for_flag("--models", [&] { return Candidate::parse(part); }));
  return out;
}

HolographicTree parse_tree(const Options& o) {
  return for_flag("--tree", [&] { return HolographicTree::from_spec(o.dim, o.tree); });
}

void check_simulation_dim(int dim) {
  if (dim < 1 || dim > 2) throw InvalidInput("--dim: simulations and min cuts support D = 1 or 2, got " + std::to_string(dim));
}

// Validates sizes against L the same way the simulator does, before any work.
void check_blocks(const std::vector<int>& sizes, int L) {
  int previous = 0;
  for (int l : sizes) {
    if (l <= previous) throw InvalidInput("--blocks: block sizes must be strictly increasing");
    if (l - 2 > L / 2) throw InvalidInput("--blocks: block size " + std::to_string(l) + " too large for L = " + std::to_string(L));
    previous = l;
  }
}

json base_config(const std::string& command, const Options& o) {
  json c;
  c["command"] = command;
  c["dim"] = o.dim;
  c["tree"] = o.tree;
  return c;
}

std::string metadata_block(const json& config) { return "# " + config.dump() + "\n"; }

int worker_count(const Global& g) {
  int workers = g.workers;
  if (const char* env = std::getenv("ENTROSCALE_WORKERS")) {
    workers = static_cast<int>(parse_int(env, "ENTROSCALE_WORKERS"));
    if (workers < 1) throw InvalidInput("ENTROSCALE_WORKERS must be at least 1");
  }
  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return workers;
}

// Runs task(i) for i in [0, n) on at most `workers` threads. The first
// exception is rethrown after all threads stop.
void parallel_for(int n, int workers, const std::function<void(int)>& task) {
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex guard;
  auto loop = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(guard);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::min(workers, n); ++t) pool.emplace_back(loop);
  loop();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

json fit_json(const FitResult& r, double best_score) {
  json j;
  j["model"] = r.model.candidate.name();
  j["a"] = r.model.a;
  j["c"] = r.model.c;
  if (r.model.candidate.family == Family::Power) j["alpha"] = r.model.alpha;
  j["rss"] = r.rss;
  j["score"] = r.score;
  j["score_margin"] = r.score - best_score;
  j["accepted"] = r.accepted;
  j["formula"] = r.model.formula();
  return j;
}

// Candidates with too few samples at l >= lmin for their parameter count
// are dropped; at least one must remain.
std::vector<Candidate> feasible_models(const std::vector<Candidate>& models, const std::vector<int>& sizes, int lmin,
                                       const std::string& flag) {
  const auto kept = std::count_if(sizes.begin(), sizes.end(), [&](int l) { return l >= lmin; });
  std::vector<Candidate> out;
  for (const auto& m : models) {
    const int k = m.family == Family::Power ? 3 : 2;
    if (kept >= k + 1) out.push_back(m);
  }
  if (out.empty()) {
    throw InvalidInput(flag + ": only " + std::to_string(kept) + " block sizes with l >= " + std::to_string(lmin) +
                       "; at least 3 are needed to fit a scaling law");
  }
  return out;
}

std::vector<FitResult> rank_models(const EntropyCurve& curve, const std::vector<Candidate>& models, int dim, int lmin) {
  if (models.size() == 1) return {fit(curve, models.front(), dim, FitOptions{lmin})};
  return select_model(curve, models, dim, FitOptions{lmin});
}

json model_names(const std::vector<Candidate>& models) {
  json names = json::array();
  for (const auto& m : models) names.push_back(m.name());
  return names;
}

json ranking_json(const std::vector<FitResult>& ranked) {
  json arr = json::array();
  for (const auto& r : ranked) arr.push_back(fit_json(r, ranked.front().score));
  return arr;
}

// Subcommands.

void cmd_bound(const Global& g, const Options& o, std::ostream& out) {
  const auto tree = parse_tree(o);
  if (o.chi < 2) throw InvalidInput("--chi: bond dimension must be at least 2");
  const int zbar = for_flag("--l", [&] { return crossover_scale(o.l); });
  const auto at_zbar = bound_at_scale(tree, o.l, o.chi, zbar);
  const auto best = optimal_cut_scale(tree, o.l, o.chi);
  const auto cls = classify_scaling(tree, o.chi);

  json config = base_config("bound", o);
  config["chi"] = o.chi;
  config["l"] = o.l;
  json r;
  r["config"] = config;
  r["zbar"] = zbar;
  r["F_zbar"] = at_zbar.F.str();
  r["bound_bits"] = at_zbar.bound_bits;
  r["f_correction"] = to_double(at_zbar.f_correction);
  r["zstar"] = best.zstar;
  r["F_zstar"] = best.result.F.str();
  r["class"] = cls.name();
  r["constant"] = cls.constant;
  r["formula"] = cls.formula();
  if (cls.kind == ScalingKind::PowerLaw || cls.kind == ScalingKind::BulkLaw) r["exponent"] = cls.exponent;

  std::ostringstream text;
  text << "tree: " << tree.label() << "\n"
       << "D: " << o.dim << "\n"
       << "chi: " << o.chi << "\n"
       << "l0: " << o.l << "\n"
       << "zbar: " << zbar << "\n"
       << "F(zbar): " << at_zbar.F.str() << "\n"
       << "bound_bits: " << fmt(at_zbar.bound_bits) << "\n"
       << "z*: " << best.zstar << "\n"
       << "F(z*): " << best.result.F.str() << "\n"
       << "class: " << cls.name() << "\n"
       << "constant: " << fmt(cls.constant) << "\n"
       << "formula: " << cls.formula() << "\n";
  out << text.str();
  if (!g.out.empty()) write_file(g.out, r.dump(2) + "\n");
}

void cmd_profile(const Global& g, const Options& o, std::ostream& out) {
  const auto tree = parse_tree(o);
  const auto profile = for_flag("--l", [&] { return cone_profile(o.l, o.dim); });
  json config = base_config("profile", o);
  config["l"] = o.l;
  std::ostringstream csv;
  csv << metadata_block(config) << "z,l_z,n_tra_z,R_z,cumulative_N_tra\n";
  for (int z = 0; z <= profile.zbar; ++z) {
    csv << z << "," << profile.widths[static_cast<std::size_t>(z)] << ",";
    if (z < profile.zbar) csv << profile.traced[static_cast<std::size_t>(z)].str();
    csv << "," << exact_branch_count(tree, z).str() << "," << cumulative_traced(profile, tree, z).str() << "\n";
  }
  emit(g, out, csv.str());
}

json simulate_config(const std::string& command, const Options& o, const std::vector<int>& sizes) {
  json config = base_config(command, o);
  config["L"] = o.L;
  config["chi"] = o.chi;
  config["homogeneous"] = o.homogeneous;
  config["blocks"] = sizes;
  if (o.offset) {
    config["offset"] = *o.offset;
  } else {
    config["offset"] = "special";
  }
  return config;
}

void check_simulation(const Options& o, const HolographicTree& tree, const std::vector<int>& sizes) {
  check_simulation_dim(o.dim);
  if (o.chi != 2) throw InvalidInput("--chi: the free-fermion simulator carries one mode per bond, so chi must be 2");
  for_flag("--L", [&] { return build_layout(o.dim, o.L, tree); });
  if (o.offset && (*o.offset < 0 || *o.offset >= o.L)) throw InvalidInput("--offset: must lie in [0, L)");
  check_blocks(sizes, o.L);
}

EntropyCurve simulate_one(const Options& o, const HolographicTree& tree, const std::vector<int>& sizes, std::uint64_t seed) {
  const auto net = build_network(o.dim, o.L, tree, o.homogeneous, seed);
  auto curve = entropy_curve(net, sizes, o.offset);
  curve.tree = o.tree;
  return curve;
}

std::string curve_csv(const EntropyCurve& curve, const json& config) {
  std::ostringstream csv;
  write_csv(csv, curve, {config.dump()});
  return csv.str();
}

void cmd_simulate(const Global& g, const Options& o, std::ostream& out) {
  const auto tree = parse_tree(o);
  const auto seed = static_cast<std::uint64_t>(parse_int(o.seeds, "--seed"));
  if (parse_int(o.seeds, "--seed") < 0) throw InvalidInput("--seed: must be non-negative");
  const auto sizes = parse_blocks(o.blocks);
  check_simulation(o, tree, sizes);
  json config = simulate_config("simulate", o, sizes);
  config["seed"] = seed;
  emit(g, out, curve_csv(simulate_one(o, tree, sizes, seed), config));
}

void cmd_fit(const Global& g, const Options& o, std::ostream& out) {
  std::ifstream in(o.in);
  if (!in) throw InvalidInput("--in: cannot open '" + o.in + "'");
  const auto curve = for_flag("--in", [&] { return read_csv(in); });
  const int dim = curve.dim;
  std::vector<int> sizes;
  for (const auto& s : curve.samples) sizes.push_back(s.l);
  const auto models = feasible_models(parse_models(o.models, dim), sizes, o.lmin, "--in");
  const auto ranked = for_flag("--in", [&] { return rank_models(curve, models, dim, o.lmin); });

  json config;
  config["command"] = "fit";
  config["in"] = o.in;
  config["dim"] = dim;
  config["models"] = model_names(models);
  config["lmin"] = o.lmin;
  std::ostringstream csv;
  csv << metadata_block(config) << "rank,model,q,a,c,alpha,rss,score,score_margin,accepted,formula\n";
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const auto& r = ranked[i];
    csv << i + 1 << "," << quote(r.model.candidate.name()) << ","
        << (r.model.candidate.family == Family::PolyLog ? std::to_string(r.model.candidate.q) : "") << "," << fmt(r.model.a)
        << "," << fmt(r.model.c) << "," << (r.model.candidate.family == Family::Power ? fmt(r.model.alpha) : "") << ","
        << fmt(r.rss) << "," << fmt(r.score) << "," << fmt(r.score - ranked.front().score) << ","
        << (r.accepted ? "true" : "false") << "," << quote(r.model.formula()) << "\n";
  }
  emit(g, out, csv.str());
}

void cmd_mincut(const Global& g, const Options& o, std::ostream& out) {
  check_simulation_dim(o.dim);
  const auto tree = parse_tree(o);
  if (o.chi < 2) throw InvalidInput("--chi: bond dimension must be at least 2");
  const auto parts = split(o.block, ',');
  if (parts.size() != 2) throw InvalidInput("--block: expected offset,len");
  const auto offset = parse_int(parts[0], "--block");
  const auto len = parse_int(parts[1], "--block");
  const auto graph = for_flag("--L", [&] { return build_graph(o.dim, o.L, tree); });
  if (offset < 0 || offset >= o.L || len < 1 || len > o.L) throw InvalidInput("--block: offset must lie in [0, L) and len in [1, L]");
  const auto block = hypercube_block(o.dim, o.L, static_cast<int>(offset), static_cast<int>(len));
  const auto cut = min_cut(graph, block, o.chi);

  out << "size: " << cut.size << "\n"
      << "bound_bits: " << fmt(cut.bound_bits) << "\n";
  if (!o.edges) return;
  json config = base_config("mincut", o);
  config["L"] = o.L;
  config["chi"] = o.chi;
  config["block"] = {offset, len};
  static const char* kinds[] = {"top", "decoupler", "disentangler", "leg"};
  std::ostringstream csv;
  csv << metadata_block(config) << "edge,from,to,from_kind,to_kind,from_scale,to_scale\n";
  for (int e : cut.edges) {
    const auto [u, v] = graph.edges[static_cast<std::size_t>(e)];
    csv << e << "," << u << "," << v << "," << kinds[static_cast<int>(graph.kind[static_cast<std::size_t>(u)])] << ","
        << kinds[static_cast<int>(graph.kind[static_cast<std::size_t>(v)])] << "," << graph.scale[static_cast<std::size_t>(u)]
        << "," << graph.scale[static_cast<std::size_t>(v)] << "\n";
  }
  emit(g, out, csv.str());
}

void cmd_sweep(const Global& g, const Options& o, std::ostream& out, std::ostream& err) {
  if (g.out.empty()) throw InvalidInput("--out: sweep needs an output directory");
  const auto tree = parse_tree(o);
  const auto seeds = parse_seeds(o.seeds);
  const auto sizes = parse_blocks(o.blocks);
  if (sizes.size() < 3) throw InvalidInput("--blocks: a sweep needs at least 3 block sizes");
  check_simulation(o, tree, sizes);
  const auto models = feasible_models(parse_models(o.models, o.dim), sizes, o.lmin, "--blocks");
  const int workers = worker_count(g);

  std::vector<EntropyCurve> curves(seeds.size());
  std::mutex log;
  parallel_for(static_cast<int>(seeds.size()), workers, [&](int i) {
    curves[static_cast<std::size_t>(i)] = simulate_one(o, tree, sizes, seeds[static_cast<std::size_t>(i)]);
    if (!g.quiet) {
      std::lock_guard<std::mutex> lock(log);
      err << "seed " << seeds[static_cast<std::size_t>(i)] << " done\n";
    }
  });

  json config = simulate_config("sweep", o, sizes);
  config["seeds"] = seeds;
  config["models"] = model_names(models);
  config["lmin"] = o.lmin;

  // Per-sample mean, summed in seed order so the result is independent of
  // the schedule.
  EntropyCurve mean = curves.front();
  mean.seed = 0;
  for (std::size_t k = 0; k < mean.samples.size(); ++k) {
    double total = 0.0;
    for (const auto& c : curves) total += c.samples[k].S;
    mean.samples[k].S = total / static_cast<double>(curves.size());
  }

  const fs::path dir(g.out);
  json per_seed = json::array();
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    json cfg = config;
    cfg["seed"] = seeds[i];
    write_file(dir / ("seed_" + std::to_string(seeds[i]) + ".csv"), curve_csv(curves[i], cfg));
    const auto ranked = rank_models(curves[i], models, o.dim, o.lmin);
    json s;
    s["seed"] = seeds[i];
    s["winner"] = ranked.front().model.candidate.name();
    s["fits"] = ranking_json(ranked);
    per_seed.push_back(s);
  }
  write_file(dir / "mean.csv", curve_csv(mean, config));

  const auto ranked = rank_models(mean, models, o.dim, o.lmin);
  json summary;
  summary["config"] = config;
  summary["winner"] = ranked.front().model.candidate.name();
  summary["fits"] = ranking_json(ranked);
  summary["per_seed"] = per_seed;
  write_file(dir / "summary.json", summary.dump(2) + "\n");
  out << "winner: " << ranked.front().model.candidate.name() << "\n"
      << "formula: " << ranked.front().model.formula() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement scaling bounds and free-fermion saturation for (branching) MERA", "entroscale"};
  app.require_subcommand(1);
  Global g;
  Options o;
  app.add_option("--out", g.out, "Output file (directory for sweep); stdout if omitted");
  app.add_option("--workers", g.workers, "Worker threads for sweep (default: available parallelism)")->check(CLI::NonNegativeNumber);
  app.add_flag("--quiet", g.quiet, "Suppress progress messages");

  auto add_tree = [&](CLI::App* sub) { sub->add_option("--tree", o.tree, "regular:b, polylog:k, linear, quadratic or file:<path>")->capture_default_str(); };
  auto add_network = [&](CLI::App* sub) {
    sub->add_option("--dim", o.dim, "Lattice dimension D")->required();
    sub->add_option("--L", o.L, "Linear lattice size (power of 2)")->required();
    add_tree(sub);
    sub->add_option("--chi", o.chi, "Bond dimension")->capture_default_str();
  };

  auto* bound = app.add_subcommand("bound", "Entropy bound F(zbar), optimal cut scale and scaling class");
  bound->add_option("--dim", o.dim, "Lattice dimension D")->required();
  bound->add_option("--chi", o.chi, "Bond dimension")->capture_default_str();
  add_tree(bound);
  bound->add_option("--l", o.l, "Special block size 2^k + 2")->required();

  auto* profile = app.add_subcommand("profile", "Causal-cone widths and traced-site counts per scale");
  profile->add_option("--dim", o.dim, "Lattice dimension D")->required();
  add_tree(profile);
  profile->add_option("--l", o.l, "Special block size 2^k + 2")->required();

  auto* simulate = app.add_subcommand("simulate", "Block entropies of one random Gaussian network");
  add_network(simulate);
  simulate->add_option("--seed", o.seeds, "Random seed (required)")->required();
  simulate->add_option("--blocks", o.blocks, "special:max or a comma-separated list of sizes")->required();
  simulate->add_option("--offset", o.offset, "Lowest block corner (default: special location)");
  simulate->add_flag("--homogeneous", o.homogeneous, "Share one decoupler and one disentangler across the network");

  auto* fit = app.add_subcommand("fit", "Fit scaling families to an entropy CSV and rank them");
  fit->add_option("--in", o.in, "Entropy CSV written by simulate or sweep")->required();
  fit->add_option("--models", o.models, "Comma-separated families (affinelog, boundary, boundarylog, polylog:q, power)");
  fit->add_option("--lmin", o.lmin, "Ignore blocks smaller than this")->capture_default_str();

  auto* mincut = app.add_subcommand("mincut", "Exact minimal bond cut around a block");
  add_network(mincut);
  mincut->add_option("--block", o.block, "offset,len of a hypercubic block")->required();
  mincut->add_flag("--edges", o.edges, "Also emit the cut edges as CSV");

  auto* sweep = app.add_subcommand("sweep", "Simulate several seeds, average, fit and summarise");
  add_network(sweep);
  sweep->add_option("--seeds", o.seeds, "Seeds, e.g. 1-5 or 1,4,9 (required)")->required();
  sweep->add_option("--blocks", o.blocks, "special:max or a comma-separated list of sizes")->required();
  sweep->add_option("--offset", o.offset, "Lowest block corner (default: special location)");
  sweep->add_flag("--homogeneous", o.homogeneous, "Share one decoupler and one disentangler across the network");
  sweep->add_option("--models", o.models, "Comma-separated families to compare");
  sweep->add_option("--lmin", o.lmin, "Ignore blocks smaller than this")->capture_default_str();

  for (auto* sub : {bound, profile, simulate, fit, mincut, sweep}) sub->fallthrough();

  std::vector<std::string> argv_store{"entroscale"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what();
    if (app.get_subcommands().empty()) {
      for (const auto& a : args) {
        if (!a.empty() && a[0] != '-') {
          err << " (unknown command '" << a << "'?)";
          break;
        }
      }
    }
    err << "\n";
    return kExitInvalidConfig;
  }

  try {
    if (*bound) cmd_bound(g, o, out);
    if (*profile) cmd_profile(g, o, out);
    if (*simulate) cmd_simulate(g, o, out);
    if (*fit) cmd_fit(g, o, out);
    if (*mincut) cmd_mincut(g, o, out);
    if (*sweep) cmd_sweep(g, o, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace entroscale::cli
