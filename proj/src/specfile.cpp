#include "acbm/specfile.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace acbm {

namespace {

struct Token {
  std::string text;
  int column; // 1-based
};

// Splits on whitespace outside parentheses.
std::vector<Token> split_words(std::string_view line, int base_column = 1) {
  std::vector<Token> out;
  int depth = 0;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size())
      break;
    const std::size_t start = i;
    while (i < line.size() &&
           (depth > 0 || !std::isspace(static_cast<unsigned char>(line[i])))) {
      if (line[i] == '(')
        ++depth;
      else if (line[i] == ')' && depth > 0)
        --depth;
      ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)),
                   base_column + static_cast<int>(start)});
  }
  return out;
}

std::string basis_name(std::size_t k) { return "e" + std::to_string(k + 1); }

std::size_t parse_index(const Token &t, std::size_t dim, int line) {
  std::size_t value = 0;
  if (t.text.empty() || t.text.size() > 6)
    throw ParseError("expected a basis index", line, t.column);
  for (char c : t.text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected a basis index", line, t.column);
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  if (value < 1 || value > dim)
    throw ParseError("basis index out of range", line, t.column);
  return value - 1;
}

bool is_basis_name(const std::string &name) {
  return name.size() > 1 && name[0] == 'e' &&
         std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool is_coefficient_free(const Scalar &s) { return s.is_zero(); }

} // namespace

Vector parse_linear_combination(std::string_view text,
                                const ParamSpacePtr &params, std::size_t dim,
                                int line, int column_offset) {
  std::vector<std::string> names = params ? params->names()
                                          : std::vector<std::string>{};
  const std::size_t np = names.size();
  for (std::size_t k = 0; k < dim; ++k) {
    if (params && params->index_of(basis_name(k)))
      throw ParseError("parameter name collides with basis vector " +
                           basis_name(k),
                       line, column_offset + 1);
    names.push_back(basis_name(k));
  }
  const auto extended = make_param_space(names);
  const Scalar expr = parse_expr(text, extended, line, column_offset);

  std::vector<Scalar::TermMap> coeff(dim);
  for (const auto &[mono, c] : expr.terms()) {
    std::size_t basis_degree = 0, which = 0;
    for (std::size_t k = 0; k < dim; ++k)
      if (mono[np + k] > 0) {
        basis_degree += mono[np + k];
        which = k;
      }
    if (basis_degree != 1)
      throw ParseError(basis_degree == 0
                           ? "term without a basis vector"
                           : "term is not linear in the basis vectors",
                       line, column_offset + 1);
    Monomial m(mono.begin(), mono.begin() + static_cast<long>(np));
    coeff[which].emplace(std::move(m), c);
  }
  Vector v(dim);
  for (std::size_t k = 0; k < dim; ++k)
    v[k] = Scalar::from_terms(params, std::move(coeff[k]));
  return v;
}

std::string format_linear_combination(const Vector &v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (is_coefficient_free(v[k]))
      continue;
    const Scalar &c = v[k];
    std::string term;
    bool negative = false;
    if (c.terms().size() == 1) {
      const Rational &lead = c.terms().begin()->second;
      negative = lead < 0;
      const Scalar mag = negative ? -c : c;
      const std::string m = mag.str();
      term = (m == "1") ? basis_name(k) : m + "*" + basis_name(k);
    } else {
      term = "(" + c.str() + ")*" + basis_name(k);
    }
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

fixtures::Fixture parse_spec(std::string_view text) {
  std::size_t dim = 0;
  ParamSpacePtr params = make_param_space({});
  bool have_params = false;
  std::optional<LieAlgebra> alg;
  Matrix phi;
  std::optional<Vector> xi, eta;
  Matrix g;
  std::vector<std::vector<bool>> g_set;
  std::set<std::pair<std::size_t, std::size_t>> brackets;
  std::set<std::size_t> phi_cols;
  bool have_metric = false;

  auto require_dim = [&](int line, int column) {
    if (dim == 0)
      throw ParseError("'dim' must come first", line, column);
  };
  auto set_metric = [&](std::size_t i, std::size_t j, const Scalar &v,
                        int line, int column) {
    for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
      if (g_set[a][b] && g[a][b] != v)
        throw ParseError("conflicting metric entry (" + std::to_string(a + 1) +
                             "," + std::to_string(b + 1) + ")",
                         line, column);
      g[a][b] = v;
      g_set[a][b] = true;
    }
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty())
      continue;
    const std::string &kw = words[0].text;

    // Right-hand side after '=' for bracket/phi/xi/eta.
    auto rhs_after_eq = [&](std::size_t eq_word) -> std::pair<std::string_view, int> {
      if (words.size() <= eq_word || words[eq_word].text != "=")
        throw ParseError("expected '='", line_no,
                         words.size() > eq_word ? words[eq_word].column
                                                : static_cast<int>(line.size()) + 1);
      const int col = words[eq_word].column; // 1-based column of '='
      std::string_view rest = line.substr(static_cast<std::size_t>(col));
      return {rest, col};
    };

    if (kw == "dim") {
      if (dim != 0)
        throw ParseError("duplicate 'dim'", line_no, words[0].column);
      if (words.size() != 2)
        throw ParseError("expected 'dim <odd integer>'", line_no, words[0].column);
      const auto &t = words[1];
      std::size_t v = 0;
      for (char c : t.text) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || t.text.size() > 4)
          throw ParseError("expected a positive integer", line_no, t.column);
        v = v * 10 + static_cast<std::size_t>(c - '0');
      }
      if (v == 0 || v % 2 == 0)
        throw ParseError("dimension must be a positive odd integer", line_no,
                         t.column);
      dim = v;
      alg = LieAlgebra(dim, params);
      phi = zero_matrix(dim);
      g = zero_matrix(dim);
      g_set.assign(dim, std::vector<bool>(dim, false));
    } else if (kw == "params") {
      require_dim(line_no, words[0].column);
      if (have_params)
        throw ParseError("duplicate 'params'", line_no, words[0].column);
      if (!brackets.empty() || !phi_cols.empty() || xi || eta || have_metric)
        throw ParseError("'params' must precede expressions", line_no,
                         words[0].column);
      std::vector<std::string> names;
      for (std::size_t w = 1; w < words.size(); ++w) {
        if (!ParamSpace::is_identifier(words[w].text) ||
            is_basis_name(words[w].text))
          throw ParseError("invalid parameter name '" + words[w].text + "'",
                           line_no, words[w].column);
        for (const auto &n : names)
          if (n == words[w].text)
            throw ParseError("duplicate parameter '" + n + "'", line_no,
                             words[w].column);
        names.push_back(words[w].text);
      }
      params = make_param_space(names);
      have_params = true;
      alg = LieAlgebra(dim, params);
    } else if (kw == "bracket") {
      require_dim(line_no, words[0].column);
      if (words.size() < 4)
        throw ParseError("expected 'bracket <i> <j> = <combination>'", line_no,
                         words[0].column);
      const std::size_t i = parse_index(words[1], dim, line_no);
      const std::size_t j = parse_index(words[2], dim, line_no);
      if (i == j)
        throw ParseError("bracket of a basis vector with itself", line_no,
                         words[2].column);
      if (brackets.count({std::min(i, j), std::max(i, j)}))
        throw ParseError("duplicate bracket", line_no, words[0].column);
      brackets.insert({std::min(i, j), std::max(i, j)});
      auto [rest, col] = rhs_after_eq(3);
      alg->set_bracket(i, j, parse_linear_combination(rest, params, dim, line_no, col));
    } else if (kw == "phi") {
      require_dim(line_no, words[0].column);
      if (words.size() < 3)
        throw ParseError("expected 'phi <j> = <combination>'", line_no,
                         words[0].column);
      const std::size_t j = parse_index(words[1], dim, line_no);
      if (!phi_cols.insert(j).second)
        throw ParseError("duplicate 'phi " + std::to_string(j + 1) + "'",
                         line_no, words[0].column);
      auto [rest, col] = rhs_after_eq(2);
      const Vector v = parse_linear_combination(rest, params, dim, line_no, col);
      for (std::size_t i = 0; i < dim; ++i)
        phi[i][j] = v[i];
    } else if (kw == "xi") {
      require_dim(line_no, words[0].column);
      if (xi)
        throw ParseError("duplicate 'xi'", line_no, words[0].column);
      auto [rest, col] = rhs_after_eq(1);
      xi = parse_linear_combination(rest, params, dim, line_no, col);
    } else if (kw == "eta") {
      require_dim(line_no, words[0].column);
      if (eta)
        throw ParseError("duplicate 'eta'", line_no, words[0].column);
      auto [rest, col] = rhs_after_eq(1);
      const auto items = split_words(rest, col + 1);
      if (items.size() != dim)
        throw ParseError("expected " + std::to_string(dim) + " coefficients",
                         line_no, col);
      Vector v;
      for (const auto &t : items)
        v.push_back(parse_expr(t.text, params, line_no, t.column - 1));
      eta = v;
    } else if (kw == "metric") {
      require_dim(line_no, words[0].column);
      if (words.size() < 2)
        throw ParseError("expected 'metric diag' or 'metric row'", line_no,
                         words[0].column);
      have_metric = true;
      if (words[1].text == "diag") {
        if (words.size() != dim + 2)
          throw ParseError("expected " + std::to_string(dim) + " entries",
                           line_no, words[1].column);
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j < dim; ++j) {
            const auto &t = words[2 + i];
            const Scalar v =
                i == j ? parse_expr(t.text, params, line_no, t.column - 1)
                       : Scalar();
            set_metric(i, j, v, line_no, t.column);
          }
      } else if (words[1].text == "row") {
        if (words.size() != dim + 3)
          throw ParseError("expected 'metric row <i>' and " +
                               std::to_string(dim) + " entries",
                           line_no, words[1].column);
        const std::size_t i = parse_index(words[2], dim, line_no);
        for (std::size_t j = 0; j < dim; ++j) {
          const auto &t = words[3 + j];
          set_metric(i, j, parse_expr(t.text, params, line_no, t.column - 1),
                     line_no, t.column);
        }
      } else {
        throw ParseError("expected 'diag' or 'row'", line_no, words[1].column);
      }
    } else {
      throw ParseError("unknown directive '" + kw + "'", line_no,
                       words[0].column);
    }
  }

  std::vector<std::string> missing;
  if (dim == 0)
    missing.push_back("missing 'dim' directive");
  if (!xi)
    missing.push_back("missing 'xi' directive");
  if (!eta)
    missing.push_back("missing 'eta' directive");
  if (!have_metric)
    missing.push_back("missing 'metric' directive");
  if (!missing.empty())
    throw ValidationError(missing);
  return {*alg, make_structure(phi, *xi, *eta, g)};
}

fixtures::Fixture load_spec_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string export_spec(const LieAlgebra &alg, const StructurePack &s) {
  const std::size_t n = alg.dim();
  std::ostringstream os;
  os << "dim " << n << "\n";
  if (alg.params() && alg.params()->size() > 0) {
    os << "params";
    for (const auto &name : alg.params()->names())
      os << " " << name;
    os << "\n";
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector b = alg.bracket_basis(i, j);
      if (!is_zero(b))
        os << "bracket " << i + 1 << " " << j + 1 << " = "
           << format_linear_combination(b) << "\n";
    }
  for (std::size_t j = 0; j < n; ++j) {
    Vector col(n);
    for (std::size_t i = 0; i < n; ++i)
      col[i] = s.phi[i][j];
    if (!is_zero(col))
      os << "phi " << j + 1 << " = " << format_linear_combination(col) << "\n";
  }
  os << "xi = " << format_linear_combination(s.xi) << "\n";
  os << "eta =";
  for (const auto &c : s.eta)
    os << " " << compact(c);
  os << "\n";
  bool diagonal = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      diagonal = diagonal && (i == j || s.g[i][j].is_zero());
  if (diagonal) {
    os << "metric diag";
    for (std::size_t i = 0; i < n; ++i)
      os << " " << compact(s.g[i][i]);
    os << "\n";
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      os << "metric row " << i + 1;
      for (std::size_t j = 0; j < n; ++j)
        os << " " << compact(s.g[i][j]);
      os << "\n";
    }
  }
  return os.str();
}

} // namespace acbm
