// The nine acceptance checks over the bundled corpus. Each returns exact
// booleans; the only tolerance is the wall-clock budget pinned below.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "exprim/bounds.hpp"
#include "exprim/corpus.hpp"
#include "exprim/error.hpp"
#include "exprim/oracles.hpp"
#include "exprim/regorbit.hpp"
#include "exprim/weyl.hpp"

namespace exprim::corpus {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Context {
  CriterionResult& result;
  std::ostream* progress;

  void note(const std::string& line) {
    result.details.push_back(line);
    if (progress) *progress << "  " << line << '\n';
  }
  void fail(const std::string& line) {
    result.passed = false;
    note("FAIL " + line);
  }
};

std::string seconds_text(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

void ep_list(Context& c, bool positives) {
  constexpr double kPerEntry = 60;
  for (const auto& s : group_sources()) {
    if (positives ? !s.listed_positive : !s.listed_negative) continue;
    const auto check = run_ep_check(s);
    const std::string head = s.label + " [" + s.file + "] ";
    if (!check.verdict) {
      c.fail(head + "error: " + check.error);
      continue;
    }
    const std::string verdict = std::string("EP=") + (check.verdict->is_ep ? "true" : "false") + " (" +
                                action::to_string(check.verdict->reason) + ", " + seconds_text(check.seconds) + ")";
    if (check.verdict->is_ep != positives) {
      c.fail(head + verdict);
    } else if (check.seconds > kPerEntry) {
      c.fail(head + verdict + " over the per-entry budget");
    } else {
      c.note("ok " + head + verdict);
    }
  }
}

bool enumerable(const groups::MatrixGroup& g) {
  return g.dim() <= 16 && g.order() && *g.order() <= kEnumerableOrder;
}

groups::ClassData class_data_for(const GroupSource& s, const groups::ElementTable& table) {
  const auto cls = io::data_path(std::filesystem::path("data") / std::filesystem::path(s.file).replace_extension(".cls"));
  if (std::filesystem::exists(cls)) return io::load_class_data(cls);
  return groups::prime_order_class_data(table);
}

void regular_orbits(Context& c) {
  std::size_t checked = 0;
  for (const auto& s : group_sources()) {
    groups::MatrixGroup g;
    try {
      g = load(s);
    } catch (const Error&) {
      continue;
    }
    if (!enumerable(g)) continue;
    const auto table = groups::ElementTable::enumerate(g, groups::default_cap());
    const bool exact = regorbit::regular_orbit_exact(g).exists;
    const bool cover = regorbit::fixed_space_cover(table);
    const auto bound = regorbit::counting_bound(class_data_for(s, table), g.dim());
    ++checked;
    const std::string line = s.file + ": regular=" + (exact ? "yes" : "no") + " cover=" + (cover ? "yes" : "no") +
                             " counting=" + regorbit::to_string(bound);
    if (exact == cover) {
      c.fail(line + " (exact and cover disagree)");
    } else if (bound == regorbit::CountingVerdict::regular_orbit_certified && !exact) {
      c.fail(line + " (counting bound certifies a missing regular orbit)");
    } else {
      c.note("ok " + line);
    }
  }
  if (checked < 10) c.fail("only " + std::to_string(checked) + " enumerable groups");
  c.note(std::to_string(checked) + " enumerable groups checked");
}

void fixed_space_bound(Context& c) {
  const std::vector<std::pair<std::string, groups::MatrixGroup>> cases{
      {"Alt_5 = Omega_4^-(2)", groups::build_classical(groups::ClassicalFamily::omega_minus, 4)},
      {"L_3(2)", groups::build_classical(groups::ClassicalFamily::gl, 3)}};
  for (const auto& [name, g] : cases) {
    const auto table = groups::ElementTable::enumerate(g, groups::default_cap());
    if (!groups::is_simple(table)) c.fail(name + " is not simple");
    std::vector<bool> seen(table.size(), false);
    std::size_t classes = 0;
    for (std::size_t x = 1; x < table.size(); ++x) {
      if (seen[x] || !groups::is_prime(table.element_order(x))) continue;
      for (const auto y : table.conjugacy_class(x)) seen[y] = true;
      ++classes;
      const auto alpha = groups::alpha_bruteforce(table, x);
      const std::size_t fix = table.fixed_space_dim(x);
      const std::size_t d = g.dim();
      const std::string line = name + " class of order " + std::to_string(table.element_order(x)) +
                               ": fixdim " + std::to_string(fix) + ", alpha " +
                               (alpha ? std::to_string(*alpha) : std::string("none"));
      // fix <= (1 - 1/alpha) d  <=>  alpha * fix <= (alpha - 1) d
      if (!alpha || *alpha * fix > (*alpha - 1) * d) {
        c.fail(line);
      } else {
        c.note("ok " + line);
      }
    }
    if (classes == 0) c.fail(name + ": no prime-order classes");
  }
}

void catalog_points(Context& c) {
  using bounds::Verdict;
  auto expect = [&c](const std::string& name, long lo, long hi, Verdict want) {
    const auto report = bounds::certify_named_bound(name, lo, hi);
    std::size_t bad = 0;
    for (const auto& p : report.points) {
      if (p.verdict != want || !p.agrees()) {
        ++bad;
        c.fail(name + " at " + report.parameter + "=" + std::to_string(p.param) + ": " + bounds::to_string(p.verdict));
      }
    }
    if (bad == 0) {
      c.note("ok " + name + " " + bounds::to_string(want) + " for " + std::to_string(report.points.size()) +
             " values in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  };
  expect("e8-alpha", 3626, 3626, Verdict::holds);
  expect("e8-alpha", 2728, 2728, Verdict::fails);
  expect("e8-alpha", 2729, 2729, Verdict::holds);
  expect("uni-generic", 8, 40, Verdict::holds);
  expect("uni-spin", 9, 11, Verdict::fails);
  expect("uni-spin", 13, 31, Verdict::holds);
  expect("symp-generic", 9, 40, Verdict::holds);
  expect("symp-spin", 9, 12, Verdict::holds);
  expect("symp-l1l2", 9, 11, Verdict::holds);
  expect("symp-l3", 9, 60, Verdict::holds);
  expect("symp-l3-fail", 9, 60, Verdict::fails);
  expect("ort-generic", 9, 60, Verdict::holds);
  expect("ort-l1l2", 9, 60, Verdict::holds);
  expect("ort-l3", 9, 60, Verdict::holds);
  expect("ort-spin", 10, 13, Verdict::holds);
}

void tails(Context& c) {
  const std::vector<std::pair<std::string, long>> cases{
      {"symp-l3", 9}, {"ort-l3", 9}, {"symp-generic", 9}, {"ort-generic", 9}, {"e8-alpha", 3626}};
  for (const auto& [name, x0] : cases) {
    const auto t = bounds::tail_certify(name, x0);
    const std::string line = name + " from " + std::to_string(x0) + ": " + bounds::to_string(t.verdict);
    if (t.verdict == bounds::TailVerdict::certified) {
      c.note("ok " + line);
    } else {
      c.fail(line + " (" + t.reason + ")");
    }
  }
}

void jordan(Context& c) {
  std::size_t checked = 0;
  for (std::size_t ell = 2; ell <= 12; ++ell) {
    for (std::size_t j = 1; j <= ell / 2; ++j) {
      // j copies of (J_2, J_1^2) padded by the identity of dimension 2^{l-2j}
      std::vector<gf2::JordanType> factors(j, gf2::JordanType::from_counts(1, 2));
      factors.push_back(gf2::JordanType::from_counts(0, std::size_t{1} << (ell - 2 * j)));
      const auto got = gf2::tensor_jordan_involutions(factors);
      // J_2^{2^{l-1}(1 - 2^-j)} + J_1^{2^{l-j}}, fixed dimension 2^{l-1}(1 + 2^-j)
      const std::size_t twos = (std::size_t{1} << (ell - 1)) - (std::size_t{1} << (ell - 1 - j));
      const std::size_t ones = std::size_t{1} << (ell - j);
      const auto want = gf2::JordanType::from_counts(twos, ones);
      const std::size_t fixed = got.count(2) + got.count(1);
      const std::size_t want_fixed = (std::size_t{1} << (ell - 1)) + (std::size_t{1} << (ell - 1 - j));
      ++checked;
      if (got != want || fixed != want_fixed) {
        c.fail("l=" + std::to_string(ell) + " j=" + std::to_string(j) + ": " + got.to_string() + ", expected " +
               want.to_string());
      }
    }
  }
  c.note(std::to_string(checked) + " tensor products checked, largest dimension 4096");
}

void weyl_suite(Context& c) {
  std::size_t weights = 0;
  for (std::size_t ell = 1; ell <= 6; ++ell) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ell); ++mask) {
      weyl::Weight w;
      for (std::size_t i = 0; i < ell; ++i) w.coeffs.push_back((mask >> i) & 1);
      const auto formula = weyl::weyl_orbit_size(w);
      const auto brute = oracles::weyl_orbit_bruteforce(w);
      ++weights;
      if (formula != groups::BigInt(static_cast<unsigned long>(brute))) {
        c.fail(w.to_string() + ": formula " + formula.get_str() + ", enumeration " + std::to_string(brute));
      }
    }
  }
  c.note(std::to_string(weights) + " weights with l <= 6 match the enumeration");
  for (std::size_t ell = 9; ell <= 40; ++ell) {
    const auto r = weyl::unitary_dim_floor_check(ell);
    if (!r.passed()) {
      c.fail("floor check at l=" + std::to_string(ell) + " (minimal k " + std::to_string(r.minimal_k) + ", " +
             std::to_string(r.violations.size()) + " violations)");
    }
  }
  c.note("floor check run for 9 <= l <= 40");
}

std::vector<std::size_t> constituent_dims(const groups::MatrixGroup& g) {
  std::vector<std::size_t> dims;
  for (const auto& part : modules::chop(g.generators())) dims.push_back(part.dim);
  return dims;
}

std::string dims_text(const std::vector<std::size_t>& dims) {
  std::string s = "{";
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s + "}";
}

void meataxe(Context& c) {
  auto chop_check = [&c](const std::string& file, std::vector<std::size_t> want) {
    const auto p = load_permutation_source(file);
    auto dims = constituent_dims(groups::permutation_module(p.generators));
    const std::string line = p.name + " degree " + std::to_string(p.points) + ": " + dims_text(dims);
    std::sort(dims.begin(), dims.end());
    std::sort(want.begin(), want.end());
    if (dims == want) {
      c.note("ok " + line);
    } else {
      c.fail(line + ", expected " + dims_text(want));
    }
  };
  chop_check("m12.perm", {1, 10, 1});
  chop_check("sym5.perm", {1, 4});

  std::vector<std::pair<std::string, groups::MatrixGroup>> modules;
  for (const auto& s : group_sources()) {
    try {
      auto g = load(s);
      if (g.dim() <= 14) modules.emplace_back(s.file, std::move(g));
    } catch (const Error&) {
    }
  }
  for (const auto& p : permutation_sources()) {
    const auto perm = load_permutation_source(p.file);
    if (perm.points <= 14) modules.emplace_back(p.file + " (permutation module)", groups::permutation_module(perm.generators));
  }
  std::size_t irreducible = 0;
  for (const auto& [name, g] : modules) {
    const bool fast = modules::is_irreducible(g.generators()).irreducible;
    const bool slow = modules::is_irreducible_exhaustive(g.generators()).irreducible;
    if (fast != slow) c.fail(name + ": MeatAxe " + (fast ? "irreducible" : "reducible") + ", exhaustive disagrees");
    irreducible += slow;
  }
  c.note(std::to_string(modules.size()) + " modules of dimension <= 14 agree with exhaustive spinning (" +
         std::to_string(irreducible) + " irreducible)");
}

const char* title(int id) {
  switch (id) {
    case 1: return "EP positives";
    case 2: return "EP negatives";
    case 3: return "regular-orbit oracle equivalence";
    case 4: return "fixed-space bound against brute-forced alpha";
    case 5: return "bound catalog point checks";
    case 6: return "tail certification";
    case 7: return "Jordan calculus";
    case 8: return "Weyl suite";
    case 9: return "MeatAxe";
  }
  return "?";
}

}  // namespace

double budget_seconds(int id) {
  switch (id) {
    case 1: return 600;
    case 2: return 180;
    case 3: return 300;
    case 4: return 120;
    case 5: return 60;
    case 6: return 60;
    case 7: return 120;
    case 8: return 120;
    case 9: return 180;
  }
  throw DomainError("no acceptance criterion " + std::to_string(id));
}

CriterionResult run_criterion(int id, std::ostream* progress) {
  CriterionResult r;
  r.id = id;
  r.budget_seconds = budget_seconds(id);
  r.title = title(id);
  r.passed = true;
  Context c{r, progress};
  const auto t0 = Clock::now();
  try {
    switch (id) {
      case 1: ep_list(c, true); break;
      case 2: ep_list(c, false); break;
      case 3: regular_orbits(c); break;
      case 4: fixed_space_bound(c); break;
      case 5: catalog_points(c); break;
      case 6: tails(c); break;
      case 7: jordan(c); break;
      case 8: weyl_suite(c); break;
      case 9: meataxe(c); break;
    }
  } catch (const std::exception& e) {
    c.fail(std::string("threw: ") + e.what());
  }
  r.seconds = since(t0);
  if (r.seconds > r.budget_seconds) c.fail("took " + seconds_text(r.seconds) + ", budget " + seconds_text(r.budget_seconds));
  return r;
}

}  // namespace exprim::corpus
