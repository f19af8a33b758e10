// exprim: command-line front end. Every check prints one "RESULT:" line.
// Exit codes: 0 success, 1 an --expect assertion failed, 2 usage or
// resource errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

#include "exprim/action.hpp"
#include "exprim/bounds.hpp"
#include "exprim/builders.hpp"
#include "exprim/corpus.hpp"
#include "exprim/error.hpp"
#include "exprim/io.hpp"
#include "exprim/modules.hpp"
#include "exprim/regorbit.hpp"
#include "exprim/weyl.hpp"

namespace {

using namespace exprim;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

modules::MeatAxeOptions meataxe_options() {
  modules::MeatAxeOptions o;
  if (const char* env = std::getenv("EXPRIM_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw UsageError("EXPRIM_SEED must be a nonnegative integer");
    o.seed = v;
  }
  return o;
}

groups::MatrixGroup load_group(const std::string& file) { return io::load_matrix_group(io::data_path(file)); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string bits(gf2::Word v, std::size_t d) {
  std::string s(d, '0');
  for (std::size_t i = 0; i < d; ++i) {
    if ((v >> i) & 1) s[i] = '1';
  }
  return s;
}

void describe(const groups::MatrixGroup& g) {
  std::cout << "group: " << (g.name().empty() ? "(unnamed)" : g.name()) << ", dim " << g.dim() << ", "
            << g.generators().size() << " generators";
  if (g.order()) std::cout << ", order " << g.order()->get_str();
  std::cout << '\n';
}

// ---------------------------------------------------------------------------

int cmd_ep_check(const std::string& file, const std::string& expect) {
  const auto g = load_group(file);
  describe(g);
  action::EPOptions options;
  options.meataxe = meataxe_options();
  const auto v = action::is_extremely_primitive(g, options);
  std::cout << "irreducible: " << yes_no(v.reason != action::EPReason::not_irreducible) << " ("
            << modules::to_string(v.irreducibility_method) << ")\n";
  for (const auto& o : v.per_orbit) {
    std::cout << "orbit " << o.label << ": size " << o.size << ", representative " << bits(o.representative, g.dim())
              << ", primitive " << yes_no(o.primitive);
    if (!o.primitive) std::cout << ", block size " << o.block_size;
    std::cout << '\n';
  }
  std::cout << "reason: " << action::to_string(v.reason) << '\n';
  std::cout << "RESULT: EP=" << (v.is_ep ? "true" : "false") << '\n';
  if (!expect.empty() && (expect == "ep") != v.is_ep) return kMismatch;
  return kOk;
}

int cmd_orbits(const std::string& file) {
  const auto g = load_group(file);
  describe(g);
  const auto orbits = action::orbits_on_nonzero(g);
  for (std::size_t i = 0; i < orbits.count(); ++i) {
    std::cout << "orbit " << i << ": size " << orbits.sizes[i] << ", representative "
              << bits(orbits.representatives[i], g.dim());
    if (g.order()) {
      const groups::BigInt stab = *g.order() / groups::BigInt(static_cast<unsigned long>(orbits.sizes[i]));
      std::cout << ", stabiliser order " << stab.get_str();
    }
    std::cout << '\n';
  }
  std::cout << "RESULT: orbits=" << orbits.count() << '\n';
  return kOk;
}

int cmd_regular(const std::string& file, const std::string& method, const std::string& classdata) {
  auto g = load_group(file);
  describe(g);
  if (method == "exact") {
    if (!g.order()) g = g.with_order(groups::chain_order(g));
    const auto r = regorbit::regular_orbit_exact(g);
    std::cout << "RESULT: regular-orbit=" << yes_no(r.exists);
    if (r.witness) std::cout << " witness=" << bits(*r.witness, g.dim());
    std::cout << '\n';
  } else if (method == "cover") {
    const bool covered = regorbit::fixed_space_cover(g, groups::default_cap());
    std::cout << "RESULT: covered=" << yes_no(covered) << " regular-orbit=" << yes_no(!covered) << '\n';
  } else {
    const auto data = classdata.empty() ? groups::prime_order_class_data(g, groups::default_cap())
                                        : io::load_class_data(io::data_path(classdata));
    if (data.dim != g.dim()) throw UsageError("class data is for dimension " + std::to_string(data.dim));
    std::cout << "classes: " << data.records.size() << '\n';
    std::cout << "RESULT: " << regorbit::to_string(regorbit::counting_bound(data, g.dim())) << '\n';
  }
  return kOk;
}

std::pair<long, long> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const long v = std::stol(s);
      return {v, v};
    }
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("expected N or A..B, got '" + s + "'");
  }
}

int cmd_bound(const std::string& name, const std::string& d, const std::string& ell, bool tail,
              const std::string& expect) {
  const auto& entry = bounds::catalog_entry(name);
  long lo = 0, hi = 0;
  if (!d.empty()) {
    if (entry.parameter != "d") throw UsageError(name + " is parametrised by " + entry.parameter + ", use --ell");
    std::tie(lo, hi) = parse_range(d);
  } else {
    if (entry.parameter == "d") throw UsageError(name + " is parametrised by d, use --d");
    std::tie(lo, hi) = parse_range(ell);
  }
  const auto report = bounds::certify_named_bound(name, lo, hi);
  std::map<bounds::Verdict, std::size_t> seen;
  for (const auto& p : report.points) {
    ++seen[p.verdict];
    std::cout << report.parameter << '=' << p.param;
    if (report.parameter != "d") std::cout << " d=" << p.d.get_str();
    std::cout << ": " << bounds::to_string(p.verdict);
    if (p.claimed) std::cout << " (claimed " << bounds::to_string(*p.claimed) << ")";
    std::cout << '\n';
  }
  const std::string summary = seen.size() == 1 ? bounds::to_string(seen.begin()->first) : "mixed";
  std::cout << "RESULT: " << summary << '\n';
  if (tail) {
    const auto t = bounds::tail_certify(name, lo);
    for (const auto& gap : t.gaps) {
      std::cout << "gap term " << gap.term;
      if (gap.parity >= 0) std::cout << " parity " << gap.parity;
      std::cout << ": value at start " << gap.gap_at_start.get_str() << ", " << gap.method << '\n';
    }
    if (!t.reason.empty()) std::cout << "tail: " << t.reason << '\n';
    std::cout << "RESULT: tail " << bounds::to_string(t.verdict) << " from " << report.parameter << '=' << lo << '\n';
  }
  if (!expect.empty() && summary != expect) return kMismatch;
  return kOk;
}

int cmd_weyl(std::size_t ell, const std::string& coeffs) {
  const auto w = weyl::Weight::parse(ell, coeffs);
  std::cout << "weight: " << w.to_string() << '\n';
  std::cout << "RESULT: " << weyl::weyl_orbit_size(w).get_str() << '\n';
  return kOk;
}

int cmd_weyl_floor(std::size_t ell) {
  const auto r = weyl::unitary_dim_floor_check(ell);
  for (const auto& [k, b] : r.bounds) std::cout << "k=" << k << ": " << b.get_str() << '\n';
  std::cout << "floor: " << r.floor.get_str() << " at k=" << r.minimal_k
            << ", closed form " << (r.floor_matches_closed_form ? "matches" : "differs") << '\n';
  if (r.exhaustive) std::cout << "exhaustive: " << r.weights_checked << " weights, " << r.violations.size() << " violations\n";
  for (const auto& v : r.violations) std::cout << "violation: " << v.to_string() << '\n';
  std::cout << "RESULT: " << (r.passed() ? "pass" : "fail") << '\n';
  return kOk;
}

int cmd_jordan(const std::string& factors, std::size_t pad) {
  std::vector<gf2::JordanType> types;
  std::stringstream ss(factors);
  std::string part;
  while (std::getline(ss, part, '|')) types.push_back(gf2::JordanType::parse(part));
  if (pad > 0) types.push_back(gf2::JordanType::from_counts(0, pad));
  if (types.empty()) throw UsageError("no factors given");
  const auto t = gf2::tensor_jordan_involutions(types);
  std::cout << "dimension: " << t.dim() << '\n';
  std::cout << "fixed dimension: " << t.count(2) + t.count(1) << '\n';
  std::cout << "RESULT: " << t.to_string() << '\n';
  return kOk;
}

int cmd_chop(const std::string& file) {
  const auto p = io::load_permutation_group(io::data_path(file));
  const auto module = groups::permutation_module(p.generators);
  const auto parts = modules::chop(module.generators(), meataxe_options());
  std::string dims;
  for (const auto& c : parts) dims += (dims.empty() ? "" : ",") + std::to_string(c.dim);
  std::cout << "permutation module of degree " << p.points << (p.name.empty() ? "" : " (" + p.name + ")") << '\n';
  std::cout << "RESULT: constituents " << dims << '\n';
  return kOk;
}

int cmd_irreducible(const std::string& file) {
  const auto g = load_group(file);
  describe(g);
  const auto r = modules::is_irreducible(g.generators(), meataxe_options());
  if (r.witness) std::cout << "invariant subspace of dimension " << r.witness->dim() << '\n';
  std::cout << "RESULT: irreducible=" << (r.irreducible ? "true" : "false") << " method=" << modules::to_string(r.method)
            << '\n';
  return kOk;
}

struct MakeArgs {
  std::string family;
  std::size_t dim = 0;
  std::string perm;
  unsigned d = 0;
  std::uint64_t r = 0;
  unsigned e = 0;
  std::string out;
};

int cmd_make(const MakeArgs& a) {
  static const std::map<std::string, groups::ClassicalFamily> classical{
      {"gl", groups::ClassicalFamily::gl},          {"sp", groups::ClassicalFamily::sp},
      {"omega+", groups::ClassicalFamily::omega_plus}, {"omega-", groups::ClassicalFamily::omega_minus},
      {"o+", groups::ClassicalFamily::o_plus},      {"o-", groups::ClassicalFamily::o_minus}};
  groups::MatrixGroup g;
  if (const auto it = classical.find(a.family); it != classical.end()) {
    if (a.dim == 0) throw UsageError("--dim is required for " + a.family);
    g = groups::build_classical(it->second, a.dim);
  } else if (a.family == "deleted-perm") {
    if (a.perm.empty()) throw UsageError("--perm is required for deleted-perm");
    const auto p = io::load_permutation_group(io::data_path(a.perm));
    g = groups::build_deleted_perm_module(p.generators);
    g = g.with_order(groups::chain_order(groups::permutation_module(p.generators)));
    if (!p.name.empty()) g = g.with_name(p.name + " on its deleted permutation module");
  } else if (a.family == "semilinear") {
    if (a.d == 0 || a.r == 0 || a.e == 0) throw UsageError("--d, --r and --e are required for semilinear");
    const auto s = groups::build_semilinear(a.d, a.r, a.e);
    g = s.group;
    std::cout << "r prime: " << yes_no(s.r_prime) << ", primitive prime divisor: " << yes_no(s.r_ppd) << '\n';
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  io::save_matrix_group(a.out, g);
  std::cout << "RESULT: wrote " << a.out << " (dim " << g.dim();
  if (g.order()) std::cout << ", order " << g.order()->get_str();
  std::cout << ")\n";
  return kOk;
}

int cmd_classes(const std::string& file, const std::string& out) {
  const auto g = load_group(file);
  const auto data = groups::prime_order_class_data(g, groups::default_cap());
  if (out.empty()) {
    io::write_class_data(std::cout, data);
  } else {
    std::ofstream os(out);
    if (!os) throw ParseError("cannot write " + out);
    io::write_class_data(os, data);
  }
  std::cout << "RESULT: classes=" << data.records.size() << '\n';
  return kOk;
}

int cmd_corpus(const std::string& run) {
  std::vector<int> ids;
  if (run == "all") {
    for (int i = 1; i <= corpus::kCriteria; ++i) ids.push_back(i);
  } else if (run == "ep") {
    ids = {1, 2};
  } else {
    ids = {5, 6};
  }
  // independent criteria run concurrently; output follows criterion order
  const bool parallel = action::default_threads() > 1;
  std::vector<std::future<corpus::CriterionResult>> jobs;
  for (const int id : ids) {
    jobs.push_back(std::async(parallel ? std::launch::async : std::launch::deferred,
                              [id] { return corpus::run_criterion(id); }));
  }
  bool all = true;
  for (auto& job : jobs) {
    const auto r = job.get();
    for (const auto& line : r.details) std::cout << "  [" << r.id << "] " << line << '\n';
    std::cout << "RESULT: criterion " << r.id << " " << (r.passed ? "PASS" : "FAIL") << " " << r.title << '\n';
    all = all && r.passed;
  }
  return all ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremely primitive affine groups over GF(2): checks and bounds"};
  app.require_subcommand(1);

  std::string group, expect, method, classdata, name, d_opt, ell_range, coeffs, factors, perm, run, out;
  std::size_t ell = 0, pad = 0;
  bool tail = false;
  MakeArgs make;

  auto* ep = app.add_subcommand("ep-check", "decide extreme primitivity of V:H");
  ep->add_option("--group", group, "matrix group file")->required();
  ep->add_option("--expect", expect)->check(CLI::IsMember({"ep", "not-ep"}));

  auto* orb = app.add_subcommand("orbits", "orbits on nonzero vectors");
  orb->add_option("--group", group)->required();

  auto* reg = app.add_subcommand("regular", "regular-orbit checks");
  reg->add_option("--group", group)->required();
  reg->add_option("--method", method)->required()->check(CLI::IsMember({"exact", "cover", "bound"}));
  reg->add_option("--classdata", classdata, "class data file for --method bound");

  auto* bnd = app.add_subcommand("bound", "evaluate a catalogued bound");
  bnd->add_option("--name", name)->required();
  auto* d_flag = bnd->add_option("--d", d_opt, "value of d (entries parametrised by d)");
  auto* ell_flag = bnd->add_option("--ell", ell_range, "A..B");
  d_flag->excludes(ell_flag);
  bnd->add_flag("--tail", tail, "also certify every parameter beyond the start");
  bnd->add_option("--expect", expect)->check(CLI::IsMember({"holds", "fails"}));

  auto* wy = app.add_subcommand("weyl", "Weyl orbit size of a 2-restricted weight");
  wy->add_option("--ell", ell)->required();
  wy->add_option("--coeffs", coeffs)->required();

  auto* wf = app.add_subcommand("weyl-floor", "dimension floor check for unitary groups");
  wf->add_option("--ell", ell)->required();

  auto* jd = app.add_subcommand("jordan", "Jordan type of a tensor product of involutions");
  jd->add_option("--factors", factors, "e.g. \"2,1,1|2,1,1\"")->required();
  jd->add_option("--pad-identity", pad, "tensor with the identity of this dimension");

  auto* ch = app.add_subcommand("chop", "composition factors of a permutation module");
  ch->add_option("--perm", perm)->required();

  auto* irr = app.add_subcommand("irreducible", "MeatAxe irreducibility test");
  irr->add_option("--group", group)->required();

  auto* mk = app.add_subcommand("make", "build a group and write it as a .g2m file");
  mk->add_option("--family", make.family)
      ->required()
      ->check(CLI::IsMember({"gl", "sp", "omega+", "omega-", "o+", "o-", "deleted-perm", "semilinear"}));
  mk->add_option("--dim", make.dim);
  mk->add_option("--perm", make.perm);
  mk->add_option("--d", make.d);
  mk->add_option("--r", make.r);
  mk->add_option("--e", make.e);
  mk->add_option("--out", make.out)->required();

  auto* cp = app.add_subcommand("corpus", "run the acceptance suite over the bundled corpus");
  cp->add_option("--run", run)->required()->check(CLI::IsMember({"all", "ep", "bounds"}));

  auto* cl = app.add_subcommand("classes", "prime-order class data of an enumerable group");
  cl->add_option("--group", group)->required();
  cl->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*ep) return cmd_ep_check(group, expect);
    if (*orb) return cmd_orbits(group);
    if (*reg) return cmd_regular(group, method, classdata);
    if (*bnd) {
      if (d_opt.empty() && ell_range.empty()) throw UsageError("bound needs --d or --ell");
      return cmd_bound(name, d_opt, ell_range, tail, expect);
    }
    if (*wy) return cmd_weyl(ell, coeffs);
    if (*wf) return cmd_weyl_floor(ell);
    if (*jd) return cmd_jordan(factors, pad);
    if (*ch) return cmd_chop(perm);
    if (*irr) return cmd_irreducible(group);
    if (*mk) return cmd_make(make);
    if (*cp) return cmd_corpus(run);
    if (*cl) return cmd_classes(group, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
