#include "sullivan/dsl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "sullivan/errors.hpp"

namespace sullivan::dsl {

namespace {

constexpr int kMaxDegree = 10000;

enum class Tok { Ident, Number, BadNumber, Colon, Equals, Plus, Minus, Star, Bad, End };

struct Token {
  Tok kind = Tok::End;
  std::string_view text;
  Span span;
};

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }
bool word_char(char c) { return ident_start(c) || digit(c); }

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t start, std::size_t len) {
    out.push_back({kind, line.substr(start, len), {line_no, start + 1, len}});
  };
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (ident_start(c)) {
      while (i < line.size() && word_char(line[i])) ++i;
      push(Tok::Ident, start, i - start);
    } else if (digit(c)) {
      while (i < line.size() && digit(line[i])) ++i;
      bool good = true;
      if (i < line.size() && line[i] == '/') {
        ++i;
        const std::size_t den = i;
        while (i < line.size() && digit(line[i])) ++i;
        good = i > den;
      }
      if (i < line.size() && (word_char(line[i]) || line[i] == '.' || line[i] == '/')) good = false;
      if (!good)
        while (i < line.size() && (word_char(line[i]) || line[i] == '.' || line[i] == '/')) ++i;
      push(good ? Tok::Number : Tok::BadNumber, start, i - start);
    } else {
      ++i;
      switch (c) {
        case ':': push(Tok::Colon, start, 1); break;
        case '=': push(Tok::Equals, start, 1); break;
        case '+': push(Tok::Plus, start, 1); break;
        case '-': push(Tok::Minus, start, 1); break;
        case '*': push(Tok::Star, start, 1); break;
        default: push(Tok::Bad, start, 1);
      }
    }
  }
  const std::size_t end = std::min(i, line.size());
  out.push_back({Tok::End, {}, {line_no, end + 1, 0}});
  return out;
}

Span cover(const Span& a, const Span& b) {
  return {a.line, a.column, b.column + b.length - a.column};
}

class ParseError : public std::exception {
 public:
  explicit ParseError(Diagnostic d) : diag(std::move(d)) {}
  Diagnostic diag;
};

[[noreturn]] void fail(DiagCode code, const Span& span, std::string message) {
  throw ParseError(Diagnostic{code, span, std::move(message)});
}

// Token cursor over one line.
class Cursor {
 public:
  explicit Cursor(const std::vector<Token>& toks) : toks_(toks) {}
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  const Token& expect(Tok kind, std::string_view what) {
    const Token& t = peek();
    if (t.kind == Tok::Bad) fail(DiagCode::InvalidCharacter, t.span, "unexpected character");
    if (t.kind == Tok::BadNumber && kind == Tok::Number)
      fail(DiagCode::MalformedRational, t.span, "malformed rational '" + std::string(t.text) + "'");
    if (t.kind != kind) {
      const std::string got = t.kind == Tok::End ? "end of line" : "'" + std::string(t.text) + "'";
      fail(DiagCode::Syntax, t.span, "expected " + std::string(what) + ", found " + got);
    }
    return next();
  }
  void expect_end() {
    const Token& t = peek();
    if (t.kind == Tok::Bad) fail(DiagCode::InvalidCharacter, t.span, "unexpected character");
    if (t.kind != Tok::End) fail(DiagCode::Syntax, t.span, "unexpected '" + std::string(t.text) + "'");
  }

 private:
  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

Rational parse_rational(const Token& t) {
  const std::string s(t.text);
  Rational q;
  if (q.set_str(s, 10) != 0) fail(DiagCode::MalformedRational, t.span, "malformed rational '" + s + "'");
  if (q.get_den() == 0) fail(DiagCode::MalformedRational, t.span, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// Small nonnegative integer literal, or nullopt when out of range / not an integer.
std::optional<int> parse_small_int(const Token& t) {
  if (t.kind != Tok::Number || t.text.find('/') != std::string_view::npos) return std::nullopt;
  if (t.text.size() > 6) return std::nullopt;
  int v = 0;
  for (char c : t.text) v = v * 10 + (c - '0');
  return v;
}

// expr := [+|-] term {(+|-) term};  term := [-] factor {* factor}
ExprAst parse_expr(Cursor& cur) {
  ExprAst expr;
  expr.span = cur.peek().span;
  bool first = true;
  while (true) {
    const Token& head = cur.peek();
    Rational sign = 1;
    if (head.kind == Tok::Plus || head.kind == Tok::Minus) {
      if (head.kind == Tok::Minus) sign = -1;
      cur.next();
    } else if (!first) {
      break;
    }
    if (cur.peek().kind == Tok::Minus) {  // unary minus on the coefficient
      sign = -sign;
      cur.next();
    }
    TermAst term;
    term.coefficient = sign;
    term.span = cur.peek().span;
    Span last = term.span;
    while (true) {
      const Token& f = cur.peek();
      if (f.kind == Tok::Ident) {
        term.factors.emplace_back(f.text);
      } else if (f.kind == Tok::Number) {
        term.coefficient *= parse_rational(f);
      } else if (f.kind == Tok::BadNumber) {
        fail(DiagCode::MalformedRational, f.span, "malformed rational '" + std::string(f.text) + "'");
      } else if (f.kind == Tok::Bad) {
        fail(DiagCode::InvalidCharacter, f.span, "unexpected character");
      } else {
        const std::string got = f.kind == Tok::End ? "end of line" : "'" + std::string(f.text) + "'";
        fail(DiagCode::Syntax, f.span, "expected a coefficient or name, found " + got);
      }
      last = f.span;
      cur.next();
      if (cur.peek().kind != Tok::Star) break;
      cur.next();
    }
    term.span = cover(term.span, last);
    expr.terms.push_back(std::move(term));
    first = false;
    const Tok k = cur.peek().kind;
    if (k != Tok::Plus && k != Tok::Minus) break;
  }
  if (!expr.terms.empty()) expr.span = cover(expr.terms.front().span, expr.terms.back().span);
  return expr;
}

struct GenInfo {
  int degree;
  std::size_t index;
};

class DocumentParser {
 public:
  explicit DocumentParser(std::string_view text) : text_(text) {}

  ParseResult run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      const std::size_t nl = text_.find('\n', pos);
      const std::string_view line = text_.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++line_no;
      try {
        statement(tokenize(line, line_no));
      } catch (const ParseError& e) {
        diags_.push_back(e.diag);
      }
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    if (doc_.algebra) {
      for (const auto& g : doc_.algebra->gens)
        if (!has_diff_.count(g.name))
          diags_.push_back({DiagCode::MissingDifferential, g.span,
                            "generator '" + g.name + "' has no differential; write 'd " + g.name + " = 0'"});
    }
    ParseResult result;
    if (diags_.empty()) {
      doc_.text = std::string(text_);
      result.document = std::move(doc_);
    }
    result.diagnostics = std::move(diags_);
    return result;
  }

 private:
  enum class Section { None, Algebra, Lie };

  void statement(const std::vector<Token>& toks) {
    Cursor cur(toks);
    const Token& kw = cur.peek();
    if (kw.kind == Tok::End) return;
    if (kw.kind == Tok::Bad) fail(DiagCode::InvalidCharacter, kw.span, "unexpected character");
    if (kw.kind != Tok::Ident) fail(DiagCode::Syntax, kw.span, "expected a keyword");
    cur.next();
    const std::string_view k = kw.text;
    if (k == "algebra") return algebra(cur, kw);
    if (k == "lie") return lie(cur, kw);
    if (k == "gen" || k == "d" || k == "truncate") {
      if (section_ != Section::Algebra)
        fail(DiagCode::MissingHeader, kw.span, "'" + std::string(k) + "' outside an 'algebra' block");
      if (k == "gen") return gen(cur, kw);
      if (k == "d") return diff(cur, kw);
      return truncate(cur, kw);
    }
    if (k == "basis" || k == "bracket") {
      if (section_ != Section::Lie)
        fail(DiagCode::MissingHeader, kw.span, "'" + std::string(k) + "' outside a 'lie' block");
      if (k == "basis") return basis(cur);
      return bracket(cur, kw);
    }
    fail(DiagCode::Syntax, kw.span, "unknown keyword '" + std::string(k) + "'");
  }

  void algebra(Cursor& cur, const Token& kw) {
    const Token& name = cur.expect(Tok::Ident, "an algebra name");
    cur.expect_end();
    if (doc_.algebra) fail(DiagCode::DuplicateAlgebra, cover(kw.span, name.span), "only one algebra per file");
    doc_.algebra = AlgebraDecl{std::string(name.text), cover(kw.span, name.span), {}, {}, std::nullopt};
    section_ = Section::Algebra;
  }

  void lie(Cursor& cur, const Token& kw) {
    const Token& name = cur.expect(Tok::Ident, "a Lie algebra name");
    cur.expect_end();
    doc_.lies.push_back(LieDecl{std::string(name.text), cover(kw.span, name.span), {}, {}});
    lie_names_.clear();
    lie_pairs_.clear();
    section_ = Section::Lie;
  }

  void gen(Cursor& cur, const Token& kw) {
    const Token& name = cur.expect(Tok::Ident, "a generator name");
    cur.expect(Tok::Colon, "':'");
    const Token& d = cur.peek();
    if (d.kind == Tok::Minus) {
      const Token& minus = cur.next();
      fail(DiagCode::InvalidDegree, cover(minus.span, cur.peek().span), "degree must be a positive integer");
    }
    if (d.kind != Tok::Number && d.kind != Tok::BadNumber) cur.expect(Tok::Number, "a degree");
    const auto deg = parse_small_int(d);
    if (!deg || *deg < 1 || *deg > kMaxDegree)
      fail(DiagCode::InvalidDegree, d.span,
           "degree '" + std::string(d.text) + "' must be an integer in 1.." + std::to_string(kMaxDegree));
    cur.next();
    cur.expect_end();
    auto& alg = *doc_.algebra;
    if (gens_.count(std::string(name.text)))
      fail(DiagCode::DuplicateGenerator, name.span, "duplicate generator '" + std::string(name.text) + "'");
    if (alg.gens.size() >= kMaxGenerators)
      fail(DiagCode::TooManyGenerators, name.span, "at most 64 generators are supported");
    gens_.emplace(std::string(name.text), GenInfo{*deg, alg.gens.size()});
    alg.gens.push_back({std::string(name.text), *deg, cover(kw.span, d.span)});
  }

  void diff(Cursor& cur, const Token& kw) {
    const Token& name = cur.expect(Tok::Ident, "a generator name");
    const auto it = gens_.find(std::string(name.text));
    if (it == gens_.end())
      fail(DiagCode::UnknownGenerator, name.span, "unknown generator '" + std::string(name.text) + "'");
    cur.expect(Tok::Equals, "'='");
    ExprAst expr = parse_expr(cur);
    cur.expect_end();
    const int target = it->second.degree + 1;
    for (const auto& term : expr.terms) {
      long long degree = 0;
      for (const auto& f : term.factors) {
        const auto g = gens_.find(f);
        if (g == gens_.end()) fail(DiagCode::UnknownGenerator, factor_span(term, f), "unknown generator '" + f + "'");
        degree += g->second.degree;
      }
      if (term.coefficient != 0 && degree != target)
        fail(DiagCode::InhomogeneousDifferential, term.span,
             "term has degree " + std::to_string(degree) + " but d(" + std::string(name.text) + ") needs degree " +
                 std::to_string(target));
    }
    if (!has_diff_.insert(std::string(name.text)).second)
      fail(DiagCode::DuplicateDifferential, name.span, "second differential for '" + std::string(name.text) + "'");
    doc_.algebra->diffs.push_back({std::string(name.text), std::move(expr), cover(kw.span, name.span)});
  }

  void truncate(Cursor& cur, const Token& kw) {
    const Token& d = cur.peek();
    if (d.kind != Tok::Number && d.kind != Tok::BadNumber)
      fail(DiagCode::InvalidTruncation, d.kind == Tok::End ? kw.span : d.span, "expected a truncation degree");
    const auto t = parse_small_int(d);
    if (!t || *t < 1 || *t > kMaxDegree)
      fail(DiagCode::InvalidTruncation, d.span, "truncation degree must be an integer in 1.." + std::to_string(kMaxDegree));
    cur.next();
    cur.expect_end();
    if (doc_.algebra->truncation) fail(DiagCode::InvalidTruncation, kw.span, "truncation given twice");
    doc_.algebra->truncation = *t;
  }

  void basis(Cursor& cur) {
    auto& decl = doc_.lies.back();
    while (cur.peek().kind != Tok::End) {
      const Token& name = cur.expect(Tok::Ident, "a basis name");
      if (!lie_names_.insert(std::string(name.text)).second)
        fail(DiagCode::DuplicateBasisElement, name.span, "duplicate basis element '" + std::string(name.text) + "'");
      decl.basis.emplace_back(name.text);
    }
  }

  void bracket(Cursor& cur, const Token& kw) {
    auto& decl = doc_.lies.back();
    const Token& left = cur.expect(Tok::Ident, "a basis name");
    if (!lie_names_.count(std::string(left.text)))
      fail(DiagCode::UnknownBasisElement, left.span, "unknown basis element '" + std::string(left.text) + "'");
    const Token& right = cur.expect(Tok::Ident, "a basis name");
    if (!lie_names_.count(std::string(right.text)))
      fail(DiagCode::UnknownBasisElement, right.span, "unknown basis element '" + std::string(right.text) + "'");
    cur.expect(Tok::Equals, "'='");
    ExprAst expr = parse_expr(cur);
    cur.expect_end();
    bool nonzero = false;
    for (const auto& term : expr.terms) {
      if (term.coefficient == 0) continue;
      if (term.factors.size() != 1)
        fail(DiagCode::NonlinearBracket, term.span, "a bracket value must be a linear combination of basis elements");
      if (!lie_names_.count(term.factors[0]))
        fail(DiagCode::UnknownBasisElement, factor_span(term, term.factors[0]),
             "unknown basis element '" + term.factors[0] + "'");
      nonzero = true;
    }
    const std::string l(left.text), r(right.text);
    if (l == r && nonzero) fail(DiagCode::NonlinearBracket, cover(left.span, right.span), "[" + l + ", " + l + "] must be 0");
    if (!lie_pairs_.insert(std::minmax(l, r)).second)
      fail(DiagCode::DuplicateBracket, cover(left.span, right.span), "bracket of " + l + " and " + r + " given twice");
    decl.brackets.push_back({l, r, std::move(expr), cover(kw.span, right.span)});
  }

  // Span of the first occurrence of `name` within a term's source text.
  Span factor_span(const TermAst& term, const std::string& name) const {
    const auto line = line_text(term.span.line);
    const auto from = term.span.column - 1;
    std::size_t at = from;
    while ((at = line.find(name, at)) != std::string_view::npos && at < from + term.span.length) {
      const bool left_ok = at == 0 || !word_char(line[at - 1]);
      const bool right_ok = at + name.size() >= line.size() || !word_char(line[at + name.size()]);
      if (left_ok && right_ok) return {term.span.line, at + 1, name.size()};
      ++at;
    }
    return term.span;
  }

  std::string_view line_text(std::size_t line_no) const {
    std::size_t pos = 0;
    for (std::size_t l = 1; l < line_no; ++l) pos = text_.find('\n', pos) + 1;
    const std::size_t nl = text_.find('\n', pos);
    return text_.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
  }

  std::string_view text_;
  SourceDocument doc_;
  std::vector<Diagnostic> diags_;
  Section section_ = Section::None;
  std::map<std::string, GenInfo> gens_;
  std::set<std::string> has_diff_;
  std::set<std::string> lie_names_;
  std::set<std::pair<std::string, std::string>> lie_pairs_;
};

std::string format_coefficient_term(const Rational& c, const std::vector<std::string>& factors, bool first) {
  std::string out;
  if (first) {
    out = c.get_str();
  } else {
    out = c < 0 ? " - " : " + ";
    out += (c < 0 ? Rational(-c) : c).get_str();
  }
  for (const auto& f : factors) out += " * " + f;
  return out;
}

std::vector<std::string> monomial_factors(const Monomial& m, const Signature& sig) {
  std::vector<std::string> out;
  if (m.is_unit()) return out;
  const std::string s = m.to_string(sig);
  std::size_t pos = 0;
  while (true) {
    const std::size_t star = s.find('*', pos);
    out.push_back(s.substr(pos, star == std::string::npos ? std::string::npos : star - pos));
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return out;
}

Element build(const SignaturePtr& sig, const ExprAst& expr) {
  Element e(sig);
  for (const auto& term : expr.terms) {
    Element t = Element::unit(sig);
    t *= term.coefficient;
    for (const auto& f : term.factors) t = t * Element::generator(sig, f);
    e += t;
  }
  return e;
}

}  // namespace

std::string_view code_name(DiagCode code) {
  switch (code) {
    case DiagCode::Syntax: return "Syntax";
    case DiagCode::InvalidCharacter: return "InvalidCharacter";
    case DiagCode::UnknownGenerator: return "UnknownGenerator";
    case DiagCode::DuplicateGenerator: return "DuplicateGenerator";
    case DiagCode::InvalidDegree: return "InvalidDegree";
    case DiagCode::MalformedRational: return "MalformedRational";
    case DiagCode::InhomogeneousDifferential: return "InhomogeneousDifferential";
    case DiagCode::MissingDifferential: return "MissingDifferential";
    case DiagCode::DuplicateDifferential: return "DuplicateDifferential";
    case DiagCode::MissingHeader: return "MissingHeader";
    case DiagCode::DuplicateAlgebra: return "DuplicateAlgebra";
    case DiagCode::InvalidTruncation: return "InvalidTruncation";
    case DiagCode::TooManyGenerators: return "TooManyGenerators";
    case DiagCode::UnknownBasisElement: return "UnknownBasisElement";
    case DiagCode::DuplicateBasisElement: return "DuplicateBasisElement";
    case DiagCode::DuplicateBracket: return "DuplicateBracket";
    case DiagCode::NonlinearBracket: return "NonlinearBracket";
  }
  return "Unknown";
}

std::string Diagnostic::to_string() const {
  return std::to_string(span.line) + ":" + std::to_string(span.column) + ": error[" + std::string(code_name(code)) +
         "]: " + message;
}

ParseResult parse(std::string_view text) {
  try {
    return DocumentParser(text).run();
  } catch (const std::exception& e) {
    // Defensive: the parser reports problems as diagnostics, never by escaping.
    ParseResult r;
    r.diagnostics.push_back({DiagCode::Syntax, {1, 1, 0}, std::string("parser failure: ") + e.what()});
    return r;
  }
}

CdgaCheck to_cdga(const SourceDocument& doc) {
  if (!doc.algebra) throw UsageError("document has no 'algebra' block");
  const auto& alg = *doc.algebra;
  std::vector<std::pair<std::string, int>> gens;
  for (const auto& g : alg.gens) gens.emplace_back(g.name, g.degree);
  const auto sig = Signature::make(gens);
  std::vector<Element> diff(sig->size(), Element(sig));
  for (const auto& dd : alg.diffs) diff[sig->index_of(dd.generator)] = build(sig, dd.expr);
  return check_d_squared(alg.name, sig, std::move(diff), alg.truncation);
}

LiePresentation to_lie(const SourceDocument& doc, std::size_t index) {
  if (index >= doc.lies.size()) throw UsageError("document has no 'lie' block #" + std::to_string(index));
  const auto& decl = doc.lies[index];
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < decl.basis.size(); ++i) idx[decl.basis[i]] = i;
  std::vector<LiePresentation::Bracket> brackets;
  for (const auto& b : decl.brackets) {
    SparseVector v;
    for (const auto& t : b.expr.terms) {
      if (t.coefficient == 0) continue;
      v = axpy(t.coefficient, unit_vector(idx.at(t.factors.at(0))), v);
    }
    brackets.emplace_back(idx.at(b.left), idx.at(b.right), std::move(v));
  }
  return LiePresentation::make(decl.name, decl.basis, std::move(brackets));
}

std::string format_expression(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    out += format_coefficient_term(c, monomial_factors(m, *e.signature()), first);
    first = false;
  }
  return out;
}

std::string serialize(const Cdga& cdga) {
  std::ostringstream os;
  os << "algebra " << cdga.name() << '\n';
  for (const auto& g : cdga.sig().generators()) os << "gen " << g.name << " : " << g.degree << '\n';
  for (std::size_t i = 0; i < cdga.size(); ++i)
    os << "d " << cdga.sig()[i].name << " = " << format_expression(cdga.d(i)) << '\n';
  if (cdga.explicit_truncation()) os << "truncate " << *cdga.truncation() << '\n';
  return os.str();
}

std::string serialize(const LiePresentation& lie) {
  std::ostringstream os;
  os << "lie " << lie.name() << '\n';
  os << "basis";
  for (const auto& b : lie.basis()) os << ' ' << b;
  os << '\n';
  // Each pair i < j is written as [X_j, X_i] = -c_ij.
  for (const auto& [ij, v] : lie.structure_constants()) {
    os << "bracket " << lie.basis()[ij.second] << ' ' << lie.basis()[ij.first] << " = ";
    bool first = true;
    for (const auto& [k, c] : v) {
      os << format_coefficient_term(Rational(-c), {lie.basis()[k]}, first);
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

Element parse_expression(const SignaturePtr& sig, std::string_view text) {
  if (text.find('\n') != std::string_view::npos) throw UsageError("expression must fit on one line");
  const auto toks = tokenize(text, 1);
  try {
    Cursor cur(toks);
    ExprAst expr = parse_expr(cur);
    cur.expect_end();
    for (const auto& term : expr.terms)
      for (const auto& f : term.factors)
        if (!sig->find(f)) fail(DiagCode::UnknownGenerator, term.span, "unknown generator '" + f + "'");
    return build(sig, expr);
  } catch (const ParseError& e) {
    throw UsageError(e.diag.to_string());
  }
}

}  // namespace sullivan::dsl
