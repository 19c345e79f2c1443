#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sullivan/cdga.hpp"
#include "sullivan/lie.hpp"

// Line-oriented text format for CDGAs (.cdga files) and Lie presentations.
//
//   # comment
//   algebra NAME
//   gen NAME : DEGREE
//   d NAME = EXPR          (every generator needs one; write "d g = 0")
//   truncate DEGREE        (optional)
//
//   lie NAME
//   basis NAME NAME ...
//   bracket NAME NAME = EXPR
//
// EXPR is a +/- separated sum of terms [RATIONAL *] NAME {* NAME}, or 0.
namespace sullivan::dsl {

enum class DiagCode {
  Syntax,
  InvalidCharacter,
  UnknownGenerator,
  DuplicateGenerator,
  InvalidDegree,
  MalformedRational,
  InhomogeneousDifferential,
  MissingDifferential,
  DuplicateDifferential,
  MissingHeader,
  DuplicateAlgebra,
  InvalidTruncation,
  TooManyGenerators,
  UnknownBasisElement,
  DuplicateBasisElement,
  DuplicateBracket,
  NonlinearBracket,
};

std::string_view code_name(DiagCode code);

/// 1-based line and column; length in bytes.
struct Span {
  std::size_t line = 0;
  std::size_t column = 0;
  std::size_t length = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

struct Diagnostic {
  DiagCode code = DiagCode::Syntax;
  Span span;
  std::string message;
  /// "LINE:COL: error[Code]: message"
  [[nodiscard]] std::string to_string() const;
};

struct TermAst {
  Rational coefficient;
  std::vector<std::string> factors;
  Span span;
};

struct ExprAst {
  std::vector<TermAst> terms;
  Span span;
};

struct GenDecl {
  std::string name;
  int degree = 0;
  Span span;
};

struct DiffDecl {
  std::string generator;
  ExprAst expr;
  Span span;
};

struct AlgebraDecl {
  std::string name;
  Span span;
  std::vector<GenDecl> gens;
  std::vector<DiffDecl> diffs;
  std::optional<int> truncation;
};

struct BracketDecl {
  std::string left;
  std::string right;
  ExprAst expr;
  Span span;
};

struct LieDecl {
  std::string name;
  Span span;
  std::vector<std::string> basis;
  std::vector<BracketDecl> brackets;
};

struct SourceDocument {
  std::string text;
  std::optional<AlgebraDecl> algebra;
  std::vector<LieDecl> lies;
};

struct ParseResult {
  std::optional<SourceDocument> document;  ///< set iff diagnostics is empty
  std::vector<Diagnostic> diagnostics;
  [[nodiscard]] bool ok() const { return document.has_value(); }
};

/// Never throws on malformed input; every problem becomes a diagnostic.
ParseResult parse(std::string_view text);

/// Builds and validates the algebra block (UsageError when there is none).
CdgaCheck to_cdga(const SourceDocument& doc);
/// Builds the index-th lie block (UsageError when missing).
LiePresentation to_lie(const SourceDocument& doc, std::size_t index = 0);

std::string serialize(const Cdga& cdga);
std::string serialize(const LiePresentation& lie);

/// Parses one EXPR over sig; throws UsageError carrying the diagnostic.
Element parse_expression(const SignaturePtr& sig, std::string_view text);

/// EXPR rendering used by serialize, e.g. "-1 * x_2_1 * x_3_2".
std::string format_expression(const Element& e);

}  // namespace sullivan::dsl
