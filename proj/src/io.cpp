#include "distkit/io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace distkit::io {

namespace {

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError(path + ": cannot open file");
  return f;
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Content lines plus an optional tol directive.
std::vector<Line> content_lines(const std::string& text, const std::string& source, std::optional<double>& tol) {
  std::vector<Line> out;
  std::istringstream ss(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(ss, line)) {
    ++no;
    auto toks = split(line);
    if (toks.empty()) continue;
    if (toks[0][0] == '#') {
      if (toks.size() >= 3 && toks[0] == "#" && toks[1] == "tol") {
        try {
          tol = std::stod(toks[2]);
        } catch (const std::exception&) {
          throw InputError(source + ":" + std::to_string(no) + ": field 'tol': not a number '" + toks[2] + "'");
        }
      }
      continue;
    }
    out.push_back(Line{no, std::move(toks)});
  }
  return out;
}

std::size_t parse_count(const std::string& tok, const std::string& where, const std::string& field) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size() || v <= 0) throw std::invalid_argument("bad");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw InputError(where + ": field '" + field + "': expected a positive integer, got '" + tok + "'");
  }
}

Quad parse_token(const std::string& tok, const std::string& where, const std::string& field) {
  try {
    return parse_quad(tok);
  } catch (const std::exception& e) {
    throw InputError(where + ": field '" + field + "': cannot parse '" + tok + "' (" + e.what() + ")");
  }
}

std::string loc(const std::string& source, std::size_t line) { return source + ":" + std::to_string(line); }

}  // namespace

PointFile read_points(std::istream& in, const std::string& source, std::optional<double> tol_override) {
  PointFile pf;
  pf.raw = slurp(in);
  std::optional<double> tol;
  auto lines = content_lines(pf.raw, source, tol);
  if (lines.empty()) throw InputError(source + ": empty point file");
  const Line& head = lines[0];
  pf.from_gram = head.tokens[0] == "gram";
  const std::size_t off = pf.from_gram ? 1 : 0;
  if (head.tokens.size() != 2 + off) {
    throw InputError(loc(source, head.number) + ": header: expected '" + std::string(pf.from_gram ? "gram " : "") +
                     "dim n'");
  }
  const std::size_t dim = parse_count(head.tokens[off], loc(source, head.number), "dim");
  const std::size_t n = parse_count(head.tokens[off + 1], loc(source, head.number), "n");
  if (lines.size() - 1 != n) {
    throw InputError(source + ": header declares " + std::to_string(n) + " rows, found " +
                     std::to_string(lines.size() - 1));
  }
  const std::size_t width = pf.from_gram ? n : dim;
  std::vector<std::vector<Quad>> rows;
  for (std::size_t r = 0; r < n; ++r) {
    const Line& l = lines[r + 1];
    if (l.tokens.size() != width) {
      throw InputError(loc(source, l.number) + ": row " + std::to_string(r + 1) + ": expected " + std::to_string(width) +
                       " fields, found " + std::to_string(l.tokens.size()));
    }
    std::vector<Quad> row;
    for (std::size_t c = 0; c < width; ++c) {
      row.push_back(parse_token(l.tokens[c], loc(source, l.number), "column " + std::to_string(c + 1)));
    }
    rows.push_back(std::move(row));
  }
  pf.tol = tol_override ? *tol_override : tol ? *tol : default_tolerance();
  if (!(pf.tol > 0.0 && pf.tol < 1e-3)) throw InputError(source + ": field 'tol': must lie in (0, 1e-3)");

  std::optional<ExactGram> exact;
  try {
    if (pf.from_gram) {
      ExactGram g{dim, n, {}};
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!(rows[i][j] == rows[j][i])) {
            throw InputError(source + ": Gram matrix is not symmetric at (" + std::to_string(i + 1) + ", " +
                             std::to_string(j + 1) + ")");
          }
          g.entries.push_back(rows[i][j]);
        }
      }
      exact = std::move(g);
    } else {
      exact = gram_of(dim, rows);
    }
    pf.exact_ok = true;
  } catch (const FieldMismatch& e) {
    pf.exact_failure = e.what();
  }

  if (pf.from_gram) {
    if (!exact) throw InputError(source + ": Gram entries mix quadratic fields: " + pf.exact_failure);
    Gram<double> fg = to_float(*exact);
    pf.config = Configuration{points_from_gram(fg, dim, pf.tol), std::move(exact), std::nullopt};
  } else {
    std::vector<double> flat;
    for (const auto& row : rows) {
      for (const Quad& q : row) flat.push_back(q.to_double());
    }
    pf.config = Configuration{PointSet(dim, std::move(flat), pf.tol), std::move(exact),
                              pf.exact_ok ? std::optional(rows) : std::nullopt};
  }
  return pf;
}

PointFile read_points_file(const std::string& path, std::optional<double> tol_override) {
  auto f = open_or_throw(path);
  return read_points(f, path, tol_override);
}

WeightsFile read_weights(std::istream& in, const std::string& source) {
  WeightsFile wf;
  wf.raw = slurp(in);
  std::optional<double> unused;
  for (const Line& l : content_lines(wf.raw, source, unused)) {
    if (l.tokens.size() != 1) throw InputError(loc(source, l.number) + ": expected one weight per line");
    Quad q = parse_token(l.tokens[0], loc(source, l.number), "weight");
    wf.values.push_back(q.to_double());
    wf.exact.push_back(std::move(q));
  }
  if (wf.exact.empty()) throw InputError(source + ": no weights");
  return wf;
}

WeightsFile read_weights_file(const std::string& path) {
  auto f = open_or_throw(path);
  return read_weights(f, path);
}

void write_points(std::ostream& out, const Configuration& config) {
  const PointSet& p = config.points;
  if (config.exact_coords) {
    out << p.dim() << ' ' << p.size() << '\n';
    for (const auto& row : *config.exact_coords) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c].str(true);
      out << '\n';
    }
  } else if (config.exact) {
    const ExactGram& g = *config.exact;
    out << "gram " << g.dim << ' ' << g.n << '\n';
    for (std::size_t i = 0; i < g.n; ++i) {
      for (std::size_t j = 0; j < g.n; ++j) out << (j ? " " : "") << g.at(i, j).str(true);
      out << '\n';
    }
  } else {
    out << p.dim() << ' ' << p.size() << '\n';
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto row = p.point(i);
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << format_double(row[c]);
      out << '\n';
    }
  }
  if (p.tol() != kDefaultTol) out << "# tol " << format_double(p.tol()) << '\n';
}

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

}  // namespace distkit::io
