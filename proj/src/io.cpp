#include "contactlie/io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace contactlie {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Reads "<tag>[...]" at the front of s and returns the bracket contents.
std::optional<std::string_view> take_bracketed(std::string_view& s, char tag) {
  s = trim(s);
  if (s.size() < 3 || s[0] != tag || s[1] != '[') return std::nullopt;
  const auto close = s.find(']');
  if (close == std::string_view::npos) throw ParseError(0, std::string("unterminated ") + tag + "[...]");
  std::string_view inner = s.substr(2, close - 2);
  s.remove_prefix(close + 1);
  return inner;
}

}  // namespace

Vector parse_rational_list(std::string_view text) {
  Vector out;
  if (trim(text).empty()) return out;
  for (auto part : split(text, ',')) {
    try {
      out.push_back(parse_rational(part));
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, e.what());
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ConfigPtr parse_config_text(std::string_view text) {
  std::optional<std::array<int, 6>> ell;
  std::optional<J0Mode> j0;
  std::vector<Vector> raw_gens;  // slot order
  std::vector<int> gen_lines;

  int lineno = 0;
  for (auto line : split(text, '\n')) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(lineno, "expected 'key: value'");
    const auto key = trim(line.substr(0, colon));
    const auto value = trim(line.substr(colon + 1));
    const auto fields = split_ws(value);

    if (key == "ell") {
      if (ell) throw ParseError(lineno, "duplicate 'ell'");
      if (fields.size() != 6) throw ParseError(lineno, "'ell' needs 6 nonnegative integers");
      std::array<int, 6> v{};
      for (std::size_t k = 0; k < 6; ++k) {
        std::int64_t x = -1;
        try {
          if (!to_int64(parse_rational(fields[k]), x) || x < 0 || x > 1000) throw std::invalid_argument("");
        } catch (const std::invalid_argument&) {
          throw ParseError(lineno, "'ell' entries must be nonnegative integers");
        }
        v[k] = static_cast<int>(x);
      }
      ell = v;
    } else if (key == "j0") {
      if (j0) throw ParseError(lineno, "duplicate 'j0'");
      if (value == "zero") j0 = J0Mode::kZero;
      else if (value == "naturals") j0 = J0Mode::kNaturals;
      else throw ParseError(lineno, "'j0' must be 'zero' or 'naturals'");
    } else if (key == "gamma") {
      Vector g;
      for (auto f : fields) {
        try {
          g.push_back(parse_rational(f));
        } catch (const std::invalid_argument& e) {
          throw ParseError(lineno, e.what());
        }
      }
      raw_gens.push_back(std::move(g));
      gen_lines.push_back(lineno);
    } else {
      throw ParseError(lineno, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!ell) throw ParseError(0, "missing 'ell'");
  if (!j0) throw ParseError(0, "missing 'j0'");

  Shape shape(*ell);
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < raw_gens.size(); ++k) {
    if (raw_gens[k].size() != static_cast<std::size_t>(shape.dim()))
      throw ParseError(gen_lines[k], "generator needs " + std::to_string(shape.dim()) + " entries");
    Vector v(raw_gens[k].size());
    for (int s = 0; s < shape.dim(); ++s)
      v[static_cast<std::size_t>(shape.index_at_slot(s))] = raw_gens[k][static_cast<std::size_t>(s)];
    gens.push_back(std::move(v));
  }
  return AlgebraConfig::create(shape, std::move(gens), *j0);
}

ConfigPtr parse_config_file(const std::string& path) { return parse_config_text(read_file(path)); }

std::string format_basis(const AlgebraConfig& config, const BasisIndex& index) {
  const Shape& s = config.shape();
  std::string out = "x[";
  for (int k = 0; k < s.dim(); ++k) {
    if (k) out += ',';
    out += format_rational(index.alpha[s.index_at_slot(k)]);
  }
  out += ']';
  if (!index.exps.is_zero()) {
    out += "t[";
    for (int k = 0; k < s.dim(); ++k) {
      if (k) out += ',';
      out += std::to_string(index.exps[s.index_at_slot(k)]);
    }
    out += ']';
  }
  return out;
}

BasisIndex parse_basis(const ConfigPtr& config, std::string_view text) {
  const Shape& s = config->shape();
  std::string_view rest = trim(text);
  auto xs = take_bracketed(rest, 'x');
  if (!xs) throw ParseError(0, "expected x[...] in '" + std::string(text) + "'");
  Vector slots = parse_rational_list(*xs);
  if (slots.size() != static_cast<std::size_t>(s.dim()))
    throw ParseError(0, "x[...] needs " + std::to_string(s.dim()) + " entries in '" + std::string(text) + "'");
  Vector alpha(slots.size());
  for (int k = 0; k < s.dim(); ++k) alpha[static_cast<std::size_t>(s.index_at_slot(k))] = slots[static_cast<std::size_t>(k)];
  auto g = config->gamma().resolve(alpha);
  if (!g) throw ParseError(0, "group part of '" + std::string(text) + "' is not in gamma");

  ExponentVector exps = config->zero_exponents();
  if (auto ts = take_bracketed(rest, 't')) {
    Vector t = parse_rational_list(*ts);
    if (t.size() != static_cast<std::size_t>(s.dim()))
      throw ParseError(0, "t[...] needs " + std::to_string(s.dim()) + " entries in '" + std::string(text) + "'");
    for (int k = 0; k < s.dim(); ++k) {
      std::int64_t e = -1;
      if (!to_int64(t[static_cast<std::size_t>(k)], e) || e < 0)
        throw ParseError(0, "t[...] entries must be natural numbers in '" + std::string(text) + "'");
      exps[s.index_at_slot(k)] = e;
    }
  }
  if (!trim(rest).empty()) throw ParseError(0, "trailing text in '" + std::string(text) + "'");
  if (!config->admits(exps))
    throw ParseError(0, "exponents of '" + std::string(text) + "' are outside the semigroup");
  return {std::move(*g), std::move(exps)};
}

std::string format_element(const AlgebraElement& element) {
  if (element.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : element.terms()) {
    const bool neg = c < 0;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += format_rational(neg ? Rational(-c) : c);
    out += '*';
    out += format_basis(*element.config(), idx);
    first = false;
  }
  return out;
}

AlgebraElement parse_element(const ConfigPtr& config, std::string_view text) {
  AlgebraElement out(config);
  std::string_view s = trim(text);
  if (s == "0") return out;
  if (s.empty()) throw ParseError(0, "empty element literal");

  // Split on '+'/'-' outside brackets; a sign right after another operator or
  // at the start belongs to the coefficient.
  std::vector<std::pair<bool, std::string_view>> clauses;
  int depth = 0;
  bool negate = false;
  std::size_t start = 0;
  bool expect_term = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '[') ++depth;
    else if (ch == ']') --depth;
    else if (depth == 0 && (ch == '+' || ch == '-') && !expect_term) {
      clauses.emplace_back(negate, trim(s.substr(start, i - start)));
      negate = ch == '-';
      start = i + 1;
      expect_term = true;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '+' && ch != '-') expect_term = false;
  }
  clauses.emplace_back(negate, trim(s.substr(start)));

  for (auto [neg, clause] : clauses) {
    if (clause.empty()) throw ParseError(0, "empty term in '" + std::string(text) + "'");
    Rational coeff = 1;
    std::string_view basis = clause;
    if (const auto star = clause.find('*'); star != std::string_view::npos) {
      try {
        coeff = parse_rational(clause.substr(0, star));
      } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
      }
      basis = clause.substr(star + 1);
    } else if (!clause.empty() && clause.front() == '-') {
      coeff = -1;
      basis = clause.substr(1);
    }
    if (neg) coeff = -coeff;
    out.add_term(parse_basis(config, basis), coeff);
  }
  return out;
}

namespace {

// Monomial label and scale of a single-term literal.
std::pair<BasisIndex, Rational> single_term(const ConfigPtr& config, std::string_view token) {
  const AlgebraElement e = parse_element(config, token);
  if (e.size() != 1) throw ParseError(0, "expected a single monomial, got '" + std::string(token) + "'");
  return *e.terms().begin();
}

template <typename F>
void for_each_line(std::string_view text, std::size_t fields, F&& f) {
  std::size_t start = 0;
  int number = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != fields)
      throw ParseError(number, "expected " + std::to_string(fields) + " fields, got " + std::to_string(tokens.size()));
    try {
      f(tokens);
    } catch (const ParseError& e) {
      throw ParseError(number, e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(number, e.what());
    }
    if (end == text.size()) break;
  }
}

}  // namespace

std::map<BasisIndex, Rational> parse_functional_text(const ConfigPtr& config, std::string_view text) {
  std::map<BasisIndex, Rational> out;
  for_each_line(text, 2, [&](const std::vector<std::string_view>& t) {
    auto [label, scale] = single_term(config, t[0]);
    out[label] += scale * parse_rational(t[1]);
  });
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::vector<std::tuple<BasisIndex, BasisIndex, Rational>> parse_pair_table_text(const ConfigPtr& config,
                                                                                std::string_view text) {
  std::vector<std::tuple<BasisIndex, BasisIndex, Rational>> out;
  for_each_line(text, 3, [&](const std::vector<std::string_view>& t) {
    auto [a, sa] = single_term(config, t[0]);
    auto [b, sb] = single_term(config, t[1]);
    out.emplace_back(std::move(a), std::move(b), sa * sb * parse_rational(t[2]));
  });
  return out;
}

}  // namespace contactlie
