#include "sympcoh/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include "sympcoh/errors.hpp"

namespace sympcoh {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Cursor over a slice of the original text; columns are reported relative
// to the start of the full input.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t origin) : text_(text), origin_(origin) {}

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char take() {
    skip_space();
    return text_[pos_++];
  }
  std::size_t column() const { return origin_ + pos_; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, column()); }

  std::string digits() {
    skip_space();
    std::string out;
    while (pos_ < text_.size() && (is_digit(text_[pos_]) || is_space(text_[pos_]))) {
      if (!is_space(text_[pos_])) out.push_back(text_[pos_]);
      ++pos_;
    }
    return out;
  }

 private:
  std::string_view text_;
  std::size_t origin_;
  std::size_t pos_ = 0;
};

struct Term {
  Rational coeff;
  std::vector<int> labels;
  std::size_t column;
};

int parse_label(Cursor& cur, const std::string& run, std::size_t n) {
  if (run.empty()) cur.fail("expected a generator label");
  if (run.size() > 3) cur.fail("generator label '" + run + "' out of range");
  const int label = std::stoi(run);
  if (label < 1 || static_cast<std::size_t>(label) > n)
    cur.fail("generator label " + run + " out of range 1.." + std::to_string(n));
  return label;
}

std::vector<int> parse_index(Cursor& cur, std::size_t n, std::optional<std::string> leading_run) {
  std::vector<int> labels;
  if (n <= 9) {
    std::string run = leading_run ? *leading_run : cur.digits();
    if (run.empty()) cur.fail("expected a digit-run multi-index");
    for (char c : run) labels.push_back(parse_label(cur, std::string(1, c), n));
    return labels;
  }
  if (leading_run) cur.fail("digit-run indices are ambiguous above 9 generators; use [i.j]");
  if (cur.peek() != '[') cur.fail("expected '[' to start a multi-index");
  cur.take();
  while (true) {
    labels.push_back(parse_label(cur, cur.digits(), n));
    const char c = cur.peek();
    if (c == '.') {
      cur.take();
      continue;
    }
    if (c == ']') {
      cur.take();
      break;
    }
    cur.fail("expected '.' or ']' in multi-index");
  }
  return labels;
}

Term parse_term(Cursor& cur, std::size_t n, bool negative) {
  Term term{negative ? Rational(-1) : Rational(1), {}, cur.column()};
  std::optional<std::string> leading_run;
  if (is_digit(cur.peek())) {
    std::string num = cur.digits();
    if (cur.peek() == '/') {
      cur.take();
      std::string den = cur.digits();
      if (den.empty()) cur.fail("malformed rational coefficient");
      num += "/" + den;
      if (cur.peek() != '*') cur.fail("rational coefficient must be followed by '*'");
    }
    if (cur.peek() == '*') {
      cur.take();
      Rational c;
      try {
        c = parse_rational(num);
      } catch (const ParseError&) {
        cur.fail("malformed rational coefficient '" + num + "'");
      }
      term.coeff *= c;
    } else {
      leading_run = num;
    }
  } else if (cur.peek() == '.') {
    cur.fail("decimal coefficients are not accepted; use p/q");
  }
  term.labels = parse_index(cur, n, leading_run);
  if (cur.peek() == '.') cur.fail("decimal coefficients are not accepted; use p/q");
  return term;
}

// Parses a signed sum of terms; returns nullopt for a bare "0".
std::optional<std::vector<Term>> parse_sum(std::string_view text, std::size_t origin, std::size_t n) {
  Cursor cur(text, origin);
  if (cur.at_end()) cur.fail("empty expression");
  {
    Cursor probe(text, origin);
    std::string run = probe.digits();
    if (!run.empty() && probe.at_end() && std::all_of(run.begin(), run.end(), [](char c) { return c == '0'; }))
      return std::nullopt;
  }
  std::vector<Term> terms;
  bool first = true;
  while (!cur.at_end()) {
    bool negative = false;
    const char c = cur.peek();
    if (c == '+' || c == '-') {
      negative = c == '-';
      cur.take();
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }
    terms.push_back(parse_term(cur, n, negative));
    first = false;
  }
  return terms;
}

KForm terms_to_form(const std::vector<Term>& terms, std::size_t n) {
  const std::size_t degree = terms.front().labels.size();
  KForm out(n, degree);
  for (const auto& t : terms) {
    if (t.labels.size() != degree)
      throw ParseError("mixed degrees in one expression (" + std::to_string(degree) + " and " +
                           std::to_string(t.labels.size()) + ")",
                       t.column);
    Mask mask = 0;
    int sign = 1;
    for (int label : t.labels) {
      const Mask bit = Mask{1} << (label - 1);
      if (mask & bit) throw ParseError("repeated index " + std::to_string(label) + " in a term", t.column);
      sign *= wedge_sign(mask, bit);
      mask |= bit;
    }
    out.add(mask, sign * t.coeff);
  }
  return out;
}

std::string render_index(Mask m, std::size_t n) {
  std::string out;
  const auto labels = indices_of(m);
  if (n <= 9) {
    for (int l : labels) out += std::to_string(l);
    return out;
  }
  out = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(labels[i]);
  }
  return out + "]";
}

}  // namespace

bool lex_less(Mask a, Mask b) {
  const auto ia = indices_of(a);
  const auto ib = indices_of(b);
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

LieAlgebra parse_salamon(std::string_view text) {
  std::size_t open = 0;
  while (open < text.size() && is_space(text[open])) ++open;
  if (open >= text.size() || text[open] != '(') throw ParseError("expected '('", open);
  std::size_t close = text.size();
  while (close > 0 && is_space(text[close - 1])) --close;
  if (close == 0 || text[close - 1] != ')' || close - 1 <= open) throw ParseError("expected ')'", close);
  --close;

  std::vector<std::pair<std::size_t, std::size_t>> entries;  // [begin, end)
  std::size_t start = open + 1;
  for (std::size_t i = open + 1; i <= close; ++i) {
    if (i == close || text[i] == ',') {
      entries.emplace_back(start, i);
      start = i + 1;
    } else if (text[i] == '(' || text[i] == ')') {
      throw ParseError("unexpected parenthesis", i);
    }
  }
  const std::size_t n = entries.size();
  if (n > kMaxGenerators) throw ParseError("too many generators", open);

  std::vector<KForm> differentials;
  differentials.reserve(n);
  for (const auto& [b, e] : entries) {
    auto terms = parse_sum(text.substr(b, e - b), b, n);
    if (!terms) {
      differentials.emplace_back(n, 2);
      continue;
    }
    for (const auto& t : *terms)
      if (t.labels.size() != 2) throw ParseError("structure-equation terms must be index pairs", t.column);
    differentials.push_back(terms_to_form(*terms, n));
  }
  return LieAlgebra(std::move(differentials));
}

KForm parse_form(std::string_view text, std::size_t n, std::size_t zero_degree) {
  if (n == 0 || n > kMaxGenerators) throw ParseError("unsupported ambient dimension", 0);
  auto terms = parse_sum(text, 0, n);
  if (!terms) return KForm(n, zero_degree);
  return terms_to_form(*terms, n);
}

std::string render_form(const KForm& a) {
  if (a.is_zero()) return "0";
  if (a.degree() == 0) return to_string(a.coeff(0));
  std::vector<std::pair<Mask, Rational>> terms(a.terms().begin(), a.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return lex_less(x.first, y.first); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = sgn(c) < 0;
    if (negative) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    Rational magnitude = abs(c);
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += render_index(m, a.ambient_dim());
    first = false;
  }
  return out;
}

std::string render_salamon(const LieAlgebra& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (i) out += ',';
    out += render_form(g.generator_differential(i));
  }
  return out + ")";
}

}  // namespace sympcoh
