#include "exprim/io.hpp"

#include <fstream>
#include <sstream>

#include "exprim/error.hpp"

namespace exprim::io {

using gf2::Matrix;
using gf2::Vector;

namespace {

/// Lines with comments and surrounding blanks removed; empty lines dropped.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = raw.find_last_not_of(" \t\r");
      line = raw.substr(first, last - first + 1);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(number_) + ": " + what);
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::pair<std::string, std::string> split_key(const std::string& line) {
  const auto space = line.find_first_of(" \t");
  if (space == std::string::npos) return {line, ""};
  const auto rest = line.find_first_not_of(" \t", space);
  return {line.substr(0, space), rest == std::string::npos ? "" : line.substr(rest)};
}

std::size_t parse_size(const LineReader& r, const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    r.fail("expected a nonnegative integer, got '" + s + "'");
  }
  if (pos != s.size() || s.front() == '-') r.fail("expected a nonnegative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

groups::BigInt parse_bigint(const LineReader& r, const std::string& s) {
  groups::BigInt v;
  if (s.empty() || s.front() == '-' || v.set_str(s, 10) != 0) r.fail("expected a positive integer, got '" + s + "'");
  return v;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

}  // namespace

groups::MatrixGroup read_matrix_group(std::istream& in) {
  LineReader r(in);
  std::string line;
  std::optional<std::size_t> dim;
  std::optional<groups::BigInt> order;
  std::string name;
  std::vector<Matrix> gens;
  while (r.next(line)) {
    const auto [key, value] = split_key(line);
    if (key == "dim") {
      if (dim) r.fail("duplicate dim");
      dim = parse_size(r, value);
      if (*dim == 0) r.fail("dim must be positive");
    } else if (key == "order") {
      order = parse_bigint(r, value);
    } else if (key == "name") {
      name = value;
    } else if (key == "gen") {
      if (!dim) r.fail("gen before dim");
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < *dim; ++i) {
        if (!r.next(line)) r.fail("file ends inside a generator");
        if (line.size() != *dim || line.find_first_not_of("01") != std::string::npos) {
          r.fail("matrix row must be " + std::to_string(*dim) + " characters from {0,1}");
        }
        rows.push_back(Vector::parse(line));
      }
      gens.push_back(Matrix::from_rows(rows));
    } else {
      r.fail("unknown keyword '" + key + "'");
    }
  }
  if (!dim) throw ParseError("missing dim header");
  if (gens.empty()) throw ParseError("no generators");
  try {
    return groups::MatrixGroup(std::move(gens), std::move(order), std::move(name));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

groups::MatrixGroup load_matrix_group(const std::filesystem::path& path) {
  auto in = open(path);
  return read_matrix_group(in);
}

void write_matrix_group(std::ostream& out, const groups::MatrixGroup& g) {
  out << "dim " << g.dim() << '\n';
  if (g.order()) out << "order " << g.order()->get_str() << '\n';
  if (!g.name().empty()) out << "name " << g.name() << '\n';
  for (const auto& m : g.generators()) {
    out << "gen\n";
    for (std::size_t i = 0; i < m.rows(); ++i) out << m.row(i).to_string() << '\n';
  }
}

std::string format_matrix_group(const groups::MatrixGroup& g) {
  std::ostringstream os;
  write_matrix_group(os, g);
  return os.str();
}

void save_matrix_group(const std::filesystem::path& path, const groups::MatrixGroup& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  write_matrix_group(out, g);
}

PermutationGroup read_permutation_group(std::istream& in) {
  LineReader r(in);
  std::string line;
  PermutationGroup g;
  bool have_points = false;
  while (r.next(line)) {
    const auto [key, value] = split_key(line);
    if (key == "points") {
      g.points = parse_size(r, value);
      have_points = true;
      if (g.points == 0) r.fail("points must be positive");
    } else if (key == "name") {
      g.name = value;
    } else if (key == "gen") {
      if (!have_points) r.fail("gen before points");
      if (!r.next(line)) r.fail("file ends inside a generator");
      std::istringstream is(line);
      std::string tok;
      groups::Permutation p;
      while (is >> tok) {
        const std::size_t v = parse_size(r, tok);
        if (v < 1 || v > g.points) r.fail("image " + tok + " is out of range");
        p.push_back(v - 1);
      }
      if (p.size() != g.points) r.fail("expected " + std::to_string(g.points) + " images");
      if (!groups::is_permutation(p)) r.fail("generator is not a permutation");
      g.generators.push_back(std::move(p));
    } else {
      r.fail("unknown keyword '" + key + "'");
    }
  }
  if (!have_points) throw ParseError("missing points header");
  if (g.generators.empty()) throw ParseError("no generators");
  return g;
}

PermutationGroup load_permutation_group(const std::filesystem::path& path) {
  auto in = open(path);
  return read_permutation_group(in);
}

void write_permutation_group(std::ostream& out, const PermutationGroup& g) {
  out << "points " << g.points << '\n';
  if (!g.name.empty()) out << "name " << g.name << '\n';
  for (const auto& p : g.generators) {
    out << "gen\n";
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i] + 1;
    out << '\n';
  }
}

groups::ClassData read_class_data(std::istream& in) {
  LineReader r(in);
  std::string line;
  groups::ClassData data;
  bool have_dim = false, have_exp = false;
  while (r.next(line)) {
    const auto [key, value] = split_key(line);
    if (key == "dim") {
      data.dim = parse_size(r, value);
      have_dim = true;
    } else if (key == "horder-exp") {
      if (data.order_exponent_bound.set_str(value, 10) != 0) r.fail("bad rational '" + value + "'");
      if (data.order_exponent_bound.get_den() == 0) r.fail("zero denominator");
      data.order_exponent_bound.canonicalize();
      have_exp = true;
    } else if (key == "class") {
      std::istringstream is(value);
      groups::ClassRecord rec;
      std::string k1, v1, k2, v2, k3, v3;
      if (!(is >> rec.label >> k1 >> v1 >> k2 >> v2 >> k3 >> v3) || k1 != "order" || k2 != "size" ||
          k3 != "fixdim") {
        r.fail("expected 'class LABEL order R size S fixdim F'");
      }
      std::string extra;
      if (is >> extra) r.fail("trailing text after class record");
      rec.element_order = parse_size(r, v1);
      rec.class_size = parse_bigint(r, v2);
      rec.fix_dim = parse_size(r, v3);
      data.records.push_back(std::move(rec));
    } else {
      r.fail("unknown keyword '" + key + "'");
    }
  }
  if (!have_dim || !have_exp) throw ParseError("class data needs dim and horder-exp headers");
  for (const auto& rec : data.records) {
    if (rec.fix_dim > data.dim) throw ParseError("class " + rec.label + " has fixdim above dim");
  }
  return data;
}

groups::ClassData load_class_data(const std::filesystem::path& path) {
  auto in = open(path);
  return read_class_data(in);
}

void write_class_data(std::ostream& out, const groups::ClassData& data) {
  out << "dim " << data.dim << '\n';
  const auto& e = data.order_exponent_bound;
  out << "horder-exp " << e.get_num().get_str() << '/' << e.get_den().get_str() << '\n';
  for (const auto& rec : data.records) {
    out << "class " << rec.label << " order " << rec.element_order << " size " << rec.class_size.get_str()
        << " fixdim " << rec.fix_dim << '\n';
  }
}

std::filesystem::path data_path(const std::filesystem::path& name) {
  if (name.is_absolute() || std::filesystem::exists(name)) return name;
  const std::filesystem::path bundled = std::filesystem::path(EXPRIM_DATA_DIR) / name;
  if (std::filesystem::exists(bundled)) return bundled;
  // "data/x.g2m" from outside the source tree
  if (!name.empty() && *name.begin() == "data") {
    const auto stripped = std::filesystem::path(EXPRIM_DATA_DIR) / name.lexically_relative("data");
    if (std::filesystem::exists(stripped)) return stripped;
  }
  return name;
}

}  // namespace exprim::io
