#include "exprim/corpus.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>

#include "exprim/error.hpp"

namespace exprim::corpus {

using groups::BigInt;
using groups::ClassicalFamily;
using groups::MatrixGroup;
using groups::Permutation;
using groups::permutation_from_cycles;

namespace {

io::PermutationGroup perm_group(std::size_t n, std::vector<Permutation> gens, std::string name) {
  return {n, std::move(gens), std::move(name)};
}

Permutation images(std::vector<std::size_t> one_based) {
  for (auto& x : one_based) --x;
  return one_based;
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> r;
  for (std::size_t i = lo; i <= hi; ++i) r.push_back(i);
  return r;
}

io::PermutationGroup alternating(std::size_t n) {
  // (1,2,3) with (1..n) for odd n, (2..n) for even n
  const auto cycle = n % 2 == 1 ? range(1, n) : range(2, n);
  return perm_group(n, {permutation_from_cycles(n, {{1, 2, 3}}), permutation_from_cycles(n, {cycle})},
                    "Alt_" + std::to_string(n));
}

io::PermutationGroup symmetric(std::size_t n) {
  return perm_group(n, {permutation_from_cycles(n, {{1, 2}}), permutation_from_cycles(n, {range(1, n)})},
                    "Sym_" + std::to_string(n));
}

// M23 inside M24: the standard generators on the projective line over F_23.
const std::vector<std::vector<std::size_t>> kM23Second{{3, 17, 10, 7, 9}, {4, 13, 14, 19, 5}, {8, 18, 11, 12, 23},
                                                       {15, 20, 22, 21, 16}};

io::PermutationGroup l2_17_on_line() {
  // x -> x + 1 and x -> -1/x on {0..16, inf}; point x is x + 1, inf is 18
  Permutation a(18), b(18);
  for (std::size_t x = 0; x < 17; ++x) a[x] = (x + 1) % 17;
  a[17] = 17;
  for (std::size_t x = 1; x < 17; ++x) {
    std::size_t inv = 1;
    while (x * inv % 17 != 1) ++inv;
    b[x] = (17 - inv) % 17;
  }
  b[0] = 17;
  b[17] = 0;
  return perm_group(18, {a, b}, "L_2(17)");
}

io::PermutationGroup l2_11_on_11() {
  // x -> x + 1, x -> 3x on F_11 and an involution-free third generator
  // taken from the exceptional 2-transitive action of degree 11
  Permutation a(11), b(11);
  for (std::size_t x = 0; x < 11; ++x) {
    a[x] = (x + 1) % 11;
    b[x] = 3 * x % 11;
  }
  const Permutation c{0, 1, 5, 3, 7, 2, 8, 4, 6, 10, 9};
  return perm_group(11, {a, b, c}, "L_2(11)");
}

std::vector<PermSource> build_perm_sources() {
  std::vector<PermSource> out;
  out.push_back({"m12.perm", [] {
                   return perm_group(12,
                                     {permutation_from_cycles(12, {range(1, 11)}),
                                      permutation_from_cycles(12, {{3, 7, 11, 8}, {4, 10, 5, 6}}),
                                      permutation_from_cycles(12, {{1, 12}, {2, 11}, {3, 6}, {4, 8}, {5, 9}, {7, 10}})},
                                     "M_12");
                 }});
  out.push_back({"m22.perm", [] {
                   return perm_group(22,
                                     {images({20, 16, 9, 17, 4, 15, 7, 2, 11, 10, 3, 12, 1, 14, 18, 8, 5, 6, 22, 13, 19, 21}),
                                      images({9, 3, 7, 15, 18, 20, 22, 11, 2, 8, 14, 10, 6, 16, 4, 5, 1, 12, 17, 21, 13, 19})},
                                     "M_22");
                 }});
  out.push_back({"m22_2.perm", [] {
                   return perm_group(22,
                                     {images({8, 21, 20, 10, 17, 13, 18, 5, 3, 2, 12, 6, 19, 16, 9, 15, 1, 14, 22, 4, 7, 11}),
                                      images({16, 6, 1, 19, 15, 3, 20, 7, 21, 9, 5, 13, 18, 11, 22, 8, 14, 17, 12, 10, 2, 4})},
                                     "M_22.2");
                 }});
  out.push_back({"m23.perm", [] {
                   return perm_group(23, {permutation_from_cycles(23, {range(1, 23)}), permutation_from_cycles(23, kM23Second)},
                                     "M_23");
                 }});
  out.push_back({"m24.perm", [] {
                   return perm_group(24,
                                     {permutation_from_cycles(24, {range(1, 23)}), permutation_from_cycles(24, kM23Second),
                                      permutation_from_cycles(24, {{1, 24}, {2, 23}, {3, 12}, {4, 16}, {5, 18}, {6, 10},
                                                                   {7, 20}, {8, 14}, {9, 21}, {11, 17}, {13, 22}, {15, 19}})},
                                     "M_24");
                 }});
  out.push_back({"l2_17.perm", l2_17_on_line});
  out.push_back({"l2_11.perm", l2_11_on_11});
  for (std::size_t n = 5; n <= 12; ++n) {
    out.push_back({"alt" + std::to_string(n) + ".perm", [n] { return alternating(n); }});
    out.push_back({"sym" + std::to_string(n) + ".perm", [n] { return symmetric(n); }});
  }
  return out;
}

BigInt permutation_order(const io::PermutationGroup& p) {
  return groups::chain_order(groups::permutation_module(p.generators));
}

MatrixGroup deleted(const std::string& perm_file) {
  const auto p = load_permutation_source(perm_file);
  return groups::build_deleted_perm_module(p.generators)
      .with_order(permutation_order(p))
      .with_name(p.name + " on its deleted permutation module");
}

MatrixGroup constituent(const std::string& perm_file, std::size_t dim, std::size_t which) {
  const auto p = load_permutation_source(perm_file);
  const auto parts = groups::constituents_of_dim(groups::permutation_module(p.generators), dim);
  if (which >= parts.size()) {
    throw DomainError(perm_file + ": no constituent #" + std::to_string(which + 1) + " of dimension " +
                      std::to_string(dim));
  }
  const char tag = static_cast<char>('a' + which);
  return parts[which].with_order(permutation_order(p)).with_name(p.name + " (" + std::to_string(dim) + "-dim " + tag + ")");
}

MatrixGroup classical(ClassicalFamily f, std::size_t d) { return groups::build_classical(f, d); }

MatrixGroup alt7_in_l4() {
  const auto g = groups::find_subgroup(classical(ClassicalFamily::gl, 4), 2520, 1, 20000);
  if (!g) throw ResourceError("no subgroup of order 2520 found in L_4(2)");
  return g->with_name("Alt_7 < L_4(2)");
}

MatrixGroup g2_in_sp6() {
  const auto g = groups::find_subgroup(classical(ClassicalFamily::sp, 6), 12096, 1, 20000);
  if (!g) throw ResourceError("no subgroup of order 12096 found in Sp_6(2)");
  return g->with_name("U_3(3).2 < Sp_6(2)");
}

MatrixGroup u33_in_sp6() {
  const auto g = groups::find_subgroup(g2_in_sp6(), 6048, 1, 20000);
  if (!g) throw ResourceError("no subgroup of order 6048 found in U_3(3).2");
  return g->with_name("U_3(3) < Sp_6(2)");
}

MatrixGroup sp6_on_8() {
  const auto sp6 = classical(ClassicalFamily::sp, 6);
  const auto parts = groups::constituents_of_dim(groups::exterior_power(sp6, 3), 8);
  if (parts.empty()) throw DomainError("the third exterior power of Sp_6(2) has no 8-dimensional constituent");
  return parts.front().with_order(*sp6.order()).with_name("Sp_6(2) (8-dim spin)");
}

std::string ascii_sign(bool minus) { return minus ? "-" : "+"; }

std::vector<GroupSource> build_group_sources() {
  std::vector<GroupSource> out;
  auto add = [&out](std::string file, std::string label, std::string part, std::optional<bool> expected, bool listed,
                    std::function<MatrixGroup()> build) {
    GroupSource s;
    s.file = std::move(file);
    s.label = std::move(label);
    s.part = std::move(part);
    s.expected_ep = expected;
    s.listed_positive = listed && expected == true;
    s.listed_negative = listed && expected == false;
    s.build = std::move(build);
    out.push_back(std::move(s));
  };

  // (ii)(a): r a primitive prime divisor of 2^d - 1, e | d
  struct Semi {
    unsigned d;
    std::uint64_t r;
    unsigned e;
    bool listed;
  };
  const std::vector<Semi> semis{{2, 3, 2, true},  {3, 7, 1, true},   {3, 7, 3, true},   {4, 5, 1, true},
                                {4, 5, 2, true},  {4, 5, 4, true},   {6, 13, 3, true},  {5, 31, 1, false},
                                {5, 31, 5, false}, {7, 127, 1, false}, {7, 127, 7, false}, {8, 17, 1, false},
                                {8, 17, 2, false}, {8, 17, 4, false},  {8, 17, 8, false},  {9, 73, 1, false},
                                {9, 73, 3, false}, {9, 73, 9, false},  {10, 11, 1, false}, {10, 11, 2, false},
                                {10, 11, 5, false}, {10, 11, 10, false}, {11, 23, 1, false}, {11, 23, 11, false},
                                {11, 89, 1, false}, {11, 89, 11, false}};
  for (const auto& s : semis) {
    // Z_r is normal, so its orbits are blocks: the group is EP exactly when
    // the field automorphism fixes every coset of the order-r subgroup,
    // i.e. 2^{d/e} = 1 mod (2^d - 1)/r. Listed entries keep the listed claim.
    const std::uint64_t cosets = ((std::uint64_t{1} << s.d) - 1) / s.r;
    const bool coset_condition = ((std::uint64_t{1} << (s.d / s.e)) - 1) % cosets == 0;
    const std::string tag = "d" + std::to_string(s.d) + "_r" + std::to_string(s.r) + "_e" + std::to_string(s.e);
    add("gammal1_" + tag + ".g2m",
        "(" + std::to_string(s.d) + ", Z_" + std::to_string(s.r) + ".Z_" + std::to_string(s.e) + ")", "ii(a)",
        s.listed || coset_condition, s.listed, [s] { return groups::build_semilinear(s.d, s.r, s.e).group; });
  }

  // (ii)(b)
  for (std::size_t d = 3; d <= 11; ++d) {
    add("l" + std::to_string(d) + "_d" + std::to_string(d) + ".g2m",
        "(" + std::to_string(d) + ", L_" + std::to_string(d) + "(2))", "ii(b)", true, d <= 4,
        [d] { return classical(ClassicalFamily::gl, d); });
  }
  for (std::size_t d = 4; d <= 10; d += 2) {
    add("sp" + std::to_string(d) + "_d" + std::to_string(d) + ".g2m",
        "(" + std::to_string(d) + ", Sp_" + std::to_string(d) + "(2))", "ii(b)", true, d <= 6,
        [d] { return classical(ClassicalFamily::sp, d); });
  }

  // (ii)(c)
  add("a6_d4.g2m", "(4, Alt_6)", "ii(c)", true, true, [] { return deleted("alt6.perm"); });
  add("a7_d4.g2m", "(4, Alt_7)", "ii(c)", true, true, alt7_in_l4);
  add("u33_d6.g2m", "(6, U_3(3))", "ii(c)", true, true, u33_in_sp6);
  add("u33_2_d6.g2m", "(6, U_3(3).2)", "ii(c)", true, true, g2_in_sp6);

  // (ii)(d)
  add("m12_d10.g2m", "(10, M_12)", "ii(d)", true, true, [] { return deleted("m12.perm"); });
  for (std::size_t w = 0; w < 2; ++w) {
    const std::string t(1, static_cast<char>('a' + w));
    // only one of the two dual 10-dimensional M_22 modules is EP; the
    // other carries no claim
    const auto m22_claim = w == 0 ? std::optional<bool>(true) : std::nullopt;
    add("m22_d10" + t + ".g2m", "(10, M_22) " + t, "ii(d)", m22_claim, w == 0,
        [w] { return constituent("m22.perm", 10, w); });
    add("m22_2_d10" + t + ".g2m", "(10, M_22.2) " + t, "ii(d)", m22_claim, w == 0,
        [w] { return constituent("m22_2.perm", 10, w); });
    add("m23_d11" + t + ".g2m", "(11, M_23) " + t, "ii(d)", true, true, [w] { return constituent("m23.perm", 11, w); });
    add("m24_d11" + t + ".g2m", "(11, M_24) " + t, "ii(d)", true, true, [w] { return constituent("m24.perm", 11, w); });
  }
  for (std::size_t k = 2; 2 * k <= 11; ++k) {
    const std::size_t n = 2 * k + 1;
    for (const char* kind : {"alt", "sym"}) {
      const std::string stem = std::string(kind) + std::to_string(n);
      add(stem + "_d" + std::to_string(2 * k) + ".g2m",
          "(" + std::to_string(2 * k) + ", " + (kind[0] == 'a' ? "Alt_" : "Sym_") + std::to_string(n) + ")", "ii(d)", true,
          k <= 3, [stem] { return deleted(stem + ".perm"); });
    }
  }
  for (std::size_t l = 3; 2 * l <= 10; ++l) {
    const std::size_t d = 2 * l;
    for (const bool minus : {false, true}) {
      const std::string s = minus ? "m" : "p";
      add("omega" + std::to_string(d) + s + "_d" + std::to_string(d) + ".g2m",
          "(" + std::to_string(d) + ", Omega_" + std::to_string(d) + "^" + ascii_sign(minus) + "(2))", "ii(d)", true,
          d == 6, [d, minus] { return classical(minus ? ClassicalFamily::omega_minus : ClassicalFamily::omega_plus, d); });
      add("o" + std::to_string(d) + s + "_d" + std::to_string(d) + ".g2m",
          "(" + std::to_string(d) + ", O_" + std::to_string(d) + "^" + ascii_sign(minus) + "(2))", "ii(d)", true, d == 6,
          [d, minus] { return classical(minus ? ClassicalFamily::o_minus : ClassicalFamily::o_plus, d); });
    }
  }
  for (std::size_t w = 0; w < 2; ++w) {
    const std::string t(1, static_cast<char>('a' + w));
    add("l2_17_d8" + t + ".g2m", "(8, L_2(17)) " + t, "ii(d)", true, true, [w] { return constituent("l2_17.perm", 8, w); });
  }
  add("sp6_d8.g2m", "(8, Sp_6(2))", "ii(d)", true, true, sp6_on_8);

  // even-degree deleted modules (2l, Alt_{2l+2}) and (2l, Sym_{2l+2}),
  // recorded without a claim
  for (std::size_t n = 8; n <= 12; n += 2) {
    for (const char* kind : {"alt", "sym"}) {
      const std::string stem = std::string(kind) + std::to_string(n);
      add(stem + "_d" + std::to_string(n - 2) + ".g2m",
          "(" + std::to_string(n - 2) + ", " + (kind[0] == 'a' ? "Alt_" : "Sym_") + std::to_string(n) + ")",
          "even-degree", std::nullopt, false, [stem] { return deleted(stem + ".perm"); });
    }
  }

  // negative controls
  add("gammal1_d4_r15_e4.g2m", "(4, Z_15.Z_4) = GammaL_1(16)", "negative", false, true,
      [] { return groups::build_semilinear(4, 15, 4).group; });
  add("l5_wedge2_d10.g2m", "(10, L_5(2) on the alternating square)", "negative", false, true, [] {
    const auto l5 = classical(ClassicalFamily::gl, 5);
    return groups::exterior_power(l5, 2).with_order(*l5.order()).with_name("L_5(2) on the alternating square");
  });
  add("l2_11_d10.g2m", "(10, L_2(11) deleted permutation module)", "negative", false, true,
      [] { return deleted("l2_11.perm"); });
  return out;
}

}  // namespace

const std::vector<PermSource>& permutation_sources() {
  static const std::vector<PermSource> sources = build_perm_sources();
  return sources;
}

const std::vector<GroupSource>& group_sources() {
  static const std::vector<GroupSource> sources = build_group_sources();
  return sources;
}

const GroupSource& group_source(std::string_view file) {
  for (const auto& s : group_sources()) {
    if (s.file == file) return s;
  }
  throw DomainError("no corpus entry '" + std::string(file) + "'");
}

io::PermutationGroup load_permutation_source(std::string_view file) {
  const auto path = io::data_path(std::filesystem::path("data") / file);
  if (std::filesystem::exists(path)) return io::load_permutation_group(path);
  for (const auto& s : permutation_sources()) {
    if (s.file == file) return s.build();
  }
  throw DomainError("no permutation source '" + std::string(file) + "'");
}

groups::MatrixGroup load(const GroupSource& s) {
  const auto path = io::data_path(std::filesystem::path("data") / s.file);
  if (std::filesystem::exists(path)) return io::load_matrix_group(path);
  return s.build();
}

std::vector<std::string> generate(const std::filesystem::path& dir, std::ostream& log) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  for (const auto& s : permutation_sources()) {
    std::ofstream out(dir / s.file);
    io::write_permutation_group(out, s.build());
    written.push_back(s.file);
  }
  for (const auto& s : group_sources()) {
    std::optional<MatrixGroup> g;
    try {
      g = s.build();
    } catch (const Error& e) {
      log << "skip " << s.file << ": " << e.what() << '\n';
      continue;
    }
    io::save_matrix_group(dir / s.file, *g);
    written.push_back(s.file);
    if (g->order() && *g->order() <= kEnumerableOrder && g->dim() <= 16) {
      const auto table = groups::ElementTable::enumerate(*g, groups::kDefaultCap);
      const std::string cls = std::filesystem::path(s.file).replace_extension(".cls").string();
      std::ofstream out(dir / cls);
      io::write_class_data(out, groups::prime_order_class_data(table));
      written.push_back(cls);
    }
    log << "wrote " << s.file << '\n';
  }
  return written;
}

bool EPCheck::matches() const {
  if (!verdict) return false;
  return !source->expected_ep || *source->expected_ep == verdict->is_ep;
}

EPCheck run_ep_check(const GroupSource& s, const action::EPOptions& options) {
  EPCheck c;
  c.source = &s;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    c.verdict = action::is_extremely_primitive(load(s), options);
  } catch (const Error& e) {
    c.error = e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

}  // namespace exprim::corpus
