#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cache.hpp"
#include "hochq/chainmap.hpp"
#include "hochq/cohomology.hpp"
#include "hochq/cupprod.hpp"
#include "hochq/error.hpp"
#include "hochq/oracle.hpp"
#include "instance_io.hpp"
#include "json.hpp"

namespace hochq::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string instance_path;
  std::string out_path;
  bool no_cache = false;
  std::uint64_t seed = 0;
  std::optional<int> cap;
  // basis
  int m = -1;
  std::optional<int> g;
  bool invariant = false;
  // cup
  std::string left;
  std::string right;
  // verify
  int samples = -1;
  bool single_specialization = false;
  bool no_projector = false;
  // chainmap
  int chain_n = 0;
  int chain_m = 0;
};

/// Artifact, summary and exit code of one command.
struct Outcome {
  int code = kExitOk;
  std::string artifact;
  std::string summary;
};

json key_to_json(const CochainKey& k) {
  return {{"g", k.g}, {"alpha", k.alpha.exps}, {"beta", k.beta.bits}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// One compact element per line, so listings diff line by line.
std::string dump_lines(const json& arr) {
  if (arr.empty()) return "[]\n";
  std::string s = "[\n";
  for (std::size_t k = 0; k < arr.size(); ++k) {
    s += "  " + arr[k].dump() + (k + 1 < arr.size() ? ",\n" : "\n");
  }
  return s + "]\n";
}

int resolve_cap(const Options& o, const LoadedInstance& li) {
  if (o.cap) {
    if (*o.cap < 0) throw ValidationError("degree_cap", "--cap", "degree cap must be >= 0");
    return *o.cap;
  }
  if (li.degree_cap) return *li.degree_cap;
  throw ValidationError("degree_cap", "--cap", "no --cap given and the instance has no degree_cap");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// A class given inline ("{...}") or as a file path, as {g, alpha, beta}.
CochainKey parse_key(const QInstance& inst, const std::string& arg, const std::string& flag) {
  const std::string text = (!arg.empty() && arg.front() == '{') ? arg : read_text(arg);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(flag + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(flag + ": expected an object {g, alpha, beta}");
  for (const char* field : {"g", "alpha", "beta"}) {
    if (!j.contains(field)) throw ParseError(flag + ": missing field '" + field + "'");
  }
  if (!j["g"].is_number_integer()) throw ParseError(flag + ".g: expected an integer");
  CochainKey k;
  k.g = j["g"].get<int>();
  if (k.g < 0 || k.g >= inst.group.size()) {
    throw ValidationError("group_element", flag + ".g", "no group element " + std::to_string(k.g));
  }
  const auto vec = [&](const char* field) {
    const auto& v = j[field];
    if (!v.is_array() || static_cast<int>(v.size()) != inst.n()) {
      throw ParseError(flag + "." + field + ": expected a list of length " + std::to_string(inst.n()));
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number_integer()) {
        throw ParseError(flag + "." + field + "[" + std::to_string(i) + "]: expected an integer");
      }
      out.push_back(v[i].get<int>());
    }
    return out;
  };
  k.alpha = Monomial(vec("alpha"));
  k.beta = WedgeIndex(vec("beta"));
  for (int i = 0; i < inst.n(); ++i) {
    if (k.alpha[i] < 0) throw ValidationError("alpha", flag + ".alpha", "exponents must be >= 0");
    if (k.beta[i] != 0 && k.beta[i] != 1) throw ValidationError("beta", flag + ".beta", "entries must be 0 or 1");
  }
  return k;
}

// ---------------------------------------------------------------------------
// Commands

Outcome run_hh(const QInstance& inst, int cap) {
  const auto table = hh_dim_table(inst, cap);
  std::ostringstream csv;
  csv << "g_id,m,internal_degree,dim,invariant_dim\n";
  for (int g = 0; g < inst.group.size(); ++g) {
    for (int m = 0; m <= inst.n(); ++m) {
      for (int d = 0; d <= cap; ++d) {
        const auto c = table.at(g, m, d);
        csv << g << ',' << m << ',' << d << ',' << c.dim << ',' << c.invariant_dim << '\n';
      }
    }
  }
  std::ostringstream s;
  s << "hh: n=" << inst.n() << " |G|=" << inst.group.size() << " cap=" << cap << " totals";
  for (int m = 0; m <= inst.n(); ++m) s << " m" << m << '=' << table.total(m);
  s << " invariant";
  for (int m = 0; m <= inst.n(); ++m) s << " m" << m << '=' << table.invariant_total(m);
  s << '\n';
  return {kExitOk, csv.str(), s.str()};
}

Outcome run_basis(const QInstance& inst, const Options& o, int cap) {
  if (o.m < 0 || o.m > inst.n()) {
    throw ValidationError("degree", "--m", "cohomological degree must lie in [0, n]");
  }
  if (o.g && (*o.g < 0 || *o.g >= inst.group.size())) {
    throw ValidationError("group_element", "--g", "no group element " + std::to_string(*o.g));
  }
  std::vector<CohomologyClass> classes;
  if (o.invariant) {
    for (const auto& c : invariant_basis(inst, o.m, cap)) {
      if (!o.g || c.key.g == *o.g) classes.push_back(c);
    }
  } else {
    for (int g = 0; g < inst.group.size(); ++g) {
      if (o.g && g != *o.g) continue;
      for (const auto& c : hh_basis(inst, g, o.m, cap)) classes.push_back(c);
    }
  }
  json arr = json::array();
  for (const auto& c : classes) arr.push_back(key_to_json(c.key));
  std::ostringstream s;
  s << "basis: m=" << o.m << " cap=" << cap << (o.invariant ? " invariant" : "") << " classes="
    << classes.size() << '\n';
  return {kExitOk, dump_lines(arr), s.str()};
}

Outcome run_cup(const QInstance& inst, const CochainKey& left, const CochainKey& right) {
  const auto u = make_class(inst, left);
  const auto v = make_class(inst, right);
  const auto r = cup(inst, u, v);
  json j;
  j["left"] = key_to_json(left);
  j["right"] = key_to_json(right);
  if (r.zero) {
    j["scalar"] = {{"sign", 0},
                   {"free", std::vector<std::int64_t>(inst.scalars.free_rank, 0)},
                   {"torsion", 0}};
    j["result"] = "zero";
  } else {
    j["scalar"] = {{"sign", r.sign}, {"free", r.scalar.free()}, {"torsion", r.scalar.torsion()}};
    j["result"] = key_to_json(r.key);
  }
  j["reason"] = to_string(r.reason);
  std::ostringstream s;
  s << "cup: " << r << '\n';
  return {kExitOk, dump(j), s.str()};
}

Outcome run_center(const QInstance& inst, int cap) {
  const auto basis = center_basis(inst, cap);
  json arr = json::array();
  for (const auto& a : basis) arr.push_back(a.exps);
  std::ostringstream s;
  s << "center: cap=" << cap << " monomials=" << basis.size() << '\n';
  return {kExitOk, dump_lines(arr), s.str()};
}

json piece_to_json(const PieceRecord& p) {
  json j = {{"g", p.g},
            {"gamma", p.gamma},
            {"dims_enumerated", p.dims_enumerated},
            {"dims_oracle", p.dims_oracle},
            {"complex_ok", p.complex_ok},
            {"match", p.match}};
  if (!p.dims_second.empty()) j["dims_second"] = p.dims_second;
  if (p.homotopy_checked) j["homotopy_ok"] = p.homotopy_ok;
  if (p.failed_degree >= 0) j["failed_degree"] = p.failed_degree;
  return j;
}

Outcome run_verify(const LoadedInstance& li, const Options& o, int cap) {
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.homotopy_samples = o.samples;
  vo.second_specialization = !o.single_specialization;
  vo.projector_checks = !o.no_projector;
  const auto report = verify_instance(li.inst, cap, vo);

  json pieces = json::array();
  int homotopy = 0;
  int failed = 0;
  for (const auto& p : report.pieces) {
    pieces.push_back(piece_to_json(p));
    homotopy += p.homotopy_checked ? 1 : 0;
    failed += p.match ? 0 : 1;
  }
  json cells = json::array();
  int failed_cells = 0;
  for (const auto& c : report.cells) {
    cells.push_back({{"m", c.m},
                     {"internal_degree", c.internal_degree},
                     {"enumerated", c.enumerated},
                     {"cell_dim", c.projector.cell_dim},
                     {"projector_rank", c.projector.rank},
                     {"idempotent", c.projector.idempotent},
                     {"match", c.match}});
    failed_cells += c.match ? 0 : 1;
  }
  json j;
  j["instance"] = {{"n", report.n}, {"group_size", report.group_size}, {"hash", li.hash}};
  j["degree_cap"] = report.degree_cap;
  j["seed"] = report.seed;
  j["bound"] = report.bound;
  j["field_order"] = report.field_order;
  j["second_field_order"] = report.second_field_order;
  j["table_ok"] = report.table_ok;
  j["pass"] = report.pass;
  const auto* first = report.first_failure();
  j["first_failure"] = first ? piece_to_json(*first) : json(nullptr);
  j["pieces"] = pieces;
  j["cells"] = cells;

  std::ostringstream s;
  s << "verify: " << (report.pass ? "PASS" : "FAIL") << " n=" << report.n
    << " |G|=" << report.group_size << " cap=" << cap << " pieces=" << report.pieces.size()
    << " homotopy_checked=" << homotopy << " failed_pieces=" << failed
    << " projector_cells=" << report.cells.size() << " failed_cells=" << failed_cells
    << " table_ok=" << (report.table_ok ? "yes" : "no") << " field=Q(zeta_" << report.field_order
    << ")";
  if (report.second_field_order > 0) s << ",Q(zeta_" << report.second_field_order << ")";
  s << '\n';
  if (first) {
    s << "first failure: g=" << first->g << " gamma=" << format_signature(first->gamma)
      << " degree=" << first->failed_degree << '\n';
  }
  return {report.pass ? kExitOk : kExitFailed, dump(j), s.str()};
}

/// q in Z^2 x Z/6 with exponents drawn from the seed.
QMatrix random_q(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ScalarGroupSpec spec{2, 6};
  std::vector<ScalarExponent> upper;
  for (int k = 0; k < n * (n - 1) / 2; ++k) {
    std::vector<std::int64_t> free{static_cast<std::int64_t>(rng() % 5) - 2,
                                   static_cast<std::int64_t>(rng() % 5) - 2};
    upper.push_back(spec.make(free, static_cast<std::int64_t>(rng() % 6)));
  }
  return QMatrix::from_upper(spec, n, upper);
}

json q_to_json(const QMatrix& q) {
  json arr = json::array();
  for (int i = 0; i < q.n(); ++i) {
    for (int j = i + 1; j < q.n(); ++j) arr.push_back(scalar_to_json(q(i, j)));
  }
  return arr;
}

Outcome run_chainmap(const QMatrix& q, int m) {
  const int n = q.n();
  if (m < 1 || m > n) throw ValidationError("degree", "--m", "need 1 <= m <= n");
  const auto report = verify_chain_map(q, m);
  json j;
  j["n"] = n;
  j["m"] = m;
  j["q"] = q_to_json(q);
  const auto* first = report.first_failure();
  j["chain_map"] = {{"cases", report.cases.size()},
                    {"ok", report.ok()},
                    {"first_failure", first ? json(first->indices) : json(nullptr)}};
  json membership = json::array();
  bool pass = report.ok();
  for (int i = 0; i + 2 <= m; ++i) {
    const auto mr = verify_relation_membership(q, m, i);
    json entry = {{"position", i}, {"cases", mr.cases.size()}, {"ok", mr.ok()}};
    entry["first_failure"] = nullptr;
    for (const auto& c : mr.cases) {
      if (!c.ok) {
        entry["first_failure"] = c.indices;
        break;
      }
    }
    pass = pass && mr.ok();
    membership.push_back(entry);
  }
  j["membership"] = membership;
  j["pass"] = pass;
  std::ostringstream s;
  s << "chainmap: " << (pass ? "PASS" : "FAIL") << " n=" << n << " m=" << m
    << " tuples=" << report.cases.size() << " membership_positions=" << membership.size() << '\n';
  if (first) {
    s << "first failing tuple:";
    for (int i : first->indices) s << ' ' << i;
    s << '\n';
  }
  return {pass ? kExitOk : kExitFailed, dump(j), s.str()};
}

// ---------------------------------------------------------------------------
// Dispatch

/// Canonical instance text, command name and parameter string for the cache,
/// plus the closure that computes the outcome.
struct Job {
  std::string canonical;
  std::string command;
  std::string params;
  std::function<Outcome()> compute;
};

std::string bool_param(bool b) { return b ? "1" : "0"; }

LoadedInstance require_instance(const Options& o) {
  if (o.instance_path.empty()) throw ValidationError("instance", "--instance", "--instance is required");
  return load_instance(o.instance_path);
}

Job make_job(const std::string& command, const Options& o) {
  if (command == "chainmap") {
    if (o.chain_n < 1 || o.chain_n > 6) throw ValidationError("n", "--n", "need 1 <= n <= 6");
    std::string canonical = "random:" + std::to_string(o.seed);
    QMatrix q;
    if (!o.instance_path.empty()) {
      auto li = load_instance(o.instance_path);
      if (li.inst.n() != o.chain_n) {
        throw ValidationError("n", "--n", "--n does not match the instance");
      }
      canonical = li.canonical;
      q = li.inst.q;
    } else {
      q = random_q(o.chain_n, o.seed);
    }
    const int m = o.chain_m;
    return {canonical, command, "n=" + std::to_string(o.chain_n) + ";m=" + std::to_string(m),
            [q, m] { return run_chainmap(q, m); }};
  }

  auto li = std::make_shared<LoadedInstance>(require_instance(o));
  const int cap = resolve_cap(o, *li);
  const std::string cap_param = "cap=" + std::to_string(cap);
  if (command == "hh") return {li->canonical, command, cap_param, [li, cap] { return run_hh(li->inst, cap); }};
  if (command == "center") {
    return {li->canonical, command, cap_param, [li, cap] { return run_center(li->inst, cap); }};
  }
  if (command == "basis") {
    const std::string params = cap_param + ";m=" + std::to_string(o.m) +
                               ";g=" + (o.g ? std::to_string(*o.g) : "all") +
                               ";invariant=" + bool_param(o.invariant);
    return {li->canonical, command, params, [li, o, cap] { return run_basis(li->inst, o, cap); }};
  }
  if (command == "cup") {
    const auto left = parse_key(li->inst, o.left, "--left");
    const auto right = parse_key(li->inst, o.right, "--right");
    const std::string params =
        key_to_json(left).dump() + ";" + key_to_json(right).dump();
    return {li->canonical, command, params,
            [li, left, right] { return run_cup(li->inst, left, right); }};
  }
  // verify
  const std::string params = cap_param + ";seed=" + std::to_string(o.seed) +
                             ";samples=" + std::to_string(o.samples) +
                             ";second=" + bool_param(!o.single_specialization) +
                             ";projector=" + bool_param(!o.no_projector);
  return {li->canonical, command, params, [li, o, cap] { return run_verify(*li, o, cap); }};
}

int emit(const Options& o, const Outcome& r, std::ostream& out, std::ostream& err) {
  if (o.out_path.empty()) {
    out << r.artifact;
    out.flush();
  } else {
    std::ofstream f(o.out_path, std::ios::binary | std::ios::trunc);
    if (!f || !(f << r.artifact)) {
      err << "error: cannot write " << o.out_path << '\n';
      return kExitUsage;
    }
  }
  return r.code;
}

int execute(const std::string& command, const Options& o, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Job job = make_job(command, o);
  const ResultCache cache(ResultCache::default_dir());
  const std::string key = ResultCache::key(job.canonical, job.command, job.params);

  Outcome r;
  bool hit = false;
  if (!o.no_cache) {
    if (auto cached = cache.lookup(key)) {
      r = {cached->exit_code, std::move(cached->artifact), std::move(cached->summary)};
      hit = true;
    }
  }
  if (!hit) {
    r = job.compute();
    if (!o.no_cache && !cache.store(key, {r.code, r.artifact, r.summary})) {
      err << "warning: could not write cache entry in " << cache.dir().string() << '\n';
    }
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  err << r.summary;
  err << "time: " << ms << " ms" << (hit ? " (cached)" : "") << '\n';
  return emit(o, r, out, err);
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hochschild cohomology of quantum symmetric algebras and their skew group algebras",
               "hochq"};
  app.require_subcommand(1);
  app.fallthrough();

  const auto add_common = [&](CLI::App* sub, bool needs_cap) {
    sub->add_option("--instance", o.instance_path, "Instance JSON file");
    sub->add_option("--out", o.out_path, "Write the artifact here instead of stdout");
    sub->add_flag("--no-cache", o.no_cache, "Neither read nor write the result cache");
    sub->add_option("--seed", o.seed, "Seed for every sampled subset");
    if (needs_cap) sub->add_option("--cap", o.cap, "Internal degree cap D (default: the instance's degree_cap)");
  };

  auto* hh = app.add_subcommand("hh", "Dimension table as CSV");
  add_common(hh, true);
  auto* basis = app.add_subcommand("basis", "Cohomology basis of degree m as JSON");
  add_common(basis, true);
  basis->add_option("--m", o.m, "Cohomological degree")->required();
  basis->add_option("--g", o.g, "Restrict to one group element");
  basis->add_flag("--invariant", o.invariant, "Only G-invariant classes");
  auto* cupc = app.add_subcommand("cup", "Cup product of two classes");
  add_common(cupc, false);
  cupc->add_option("--left", o.left, "Class {g, alpha, beta}: inline JSON or a file")->required();
  cupc->add_option("--right", o.right, "Class {g, alpha, beta}: inline JSON or a file")->required();
  auto* center = app.add_subcommand("center", "Monomial basis of the center");
  add_common(center, true);
  auto* verify = app.add_subcommand("verify", "Oracle verification of an instance");
  add_common(verify, true);
  verify->add_option("--samples", o.samples, "Homotopy checks on this many acyclic pieces (-1: all)");
  verify->add_flag("--single-specialization", o.single_specialization, "Skip the second specialization");
  verify->add_flag("--no-projector", o.no_projector, "Skip the averaging projector checks");
  verify->require_subcommand(0, 1);
  const auto add_chainmap = [&](CLI::App* sub) {
    add_common(sub, false);
    sub->add_option("--n", o.chain_n, "Number of variables")->required();
    sub->add_option("--m", o.chain_m, "Resolution degree")->required();
  };
  auto* verify_chainmap = verify->add_subcommand("chainmap", "Chain map and relation membership checks");
  add_chainmap(verify_chainmap);
  auto* chainmap = app.add_subcommand("chainmap-check", "Chain map and relation membership checks");
  add_chainmap(chainmap);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, err, err);
    return kExitUsage;
  }

  std::string command;
  if (*hh) command = "hh";
  else if (*basis) command = "basis";
  else if (*cupc) command = "cup";
  else if (*center) command = "center";
  else if (*verify_chainmap || *chainmap) command = "chainmap";
  else command = "verify";

  try {
    return execute(command, o, out, err);
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace hochq::cli
