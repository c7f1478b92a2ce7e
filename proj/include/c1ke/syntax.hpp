// ============================================================================
// c1ke/syntax.hpp — concrete syntax: parsing and printing
// ============================================================================
//
// ASCII grammar:
//
//     atom   = [A-Za-z][A-Za-z0-9_]*
//     neg    = "~" | "!"        cons = "@"
//     and    = "&"              or   = "|"       imp = "->"
//
// Precedence: {~, @} bind tighter than &, which binds tighter than |, which
// binds tighter than ->.  All binary connectives parse right-associatively,
// so "A & B & C" is A & (B & C) and flat chains reprint without parentheses.
//
// Sequents: "F1, F2, ..., Fn |- G"; the premise list may be empty ("|- G").
// Problem files: UTF-8, one sequent per line, "#" starts a comment, blank
// lines ignored.  A comment of the form "# expect: valid" (or "invalid")
// attaches an expected verdict to the sequent on the same line.
//
// ============================================================================

#ifndef C1KE_SYNTAX_HPP
#define C1KE_SYNTAX_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "c1ke/formula.hpp"

namespace c1ke {

struct SyntaxError : std::runtime_error {
    SyntaxError(std::string message, std::size_t offset, std::vector<std::string> expected);
    std::size_t offset;                  // byte offset into the parsed text
    std::vector<std::string> expected;   // token spellings that would have been accepted
};

FormulaId parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);

enum class PrintStyle : std::uint8_t { Ascii, Unicode, Latex };

// Minimal-parenthesis printing; parse_formula(print_formula(f)) == f.
// Cons sugar is shown where the AST has Cons nodes; expanded forms are
// never re-folded.
std::string print_formula(FormulaId f, PrintStyle style = PrintStyle::Ascii);
std::string print_sequent(const Sequent& s, PrintStyle style = PrintStyle::Ascii);

struct ProblemLine {
    Sequent sequent;
    std::optional<bool> expected_valid;
    std::size_t line_no = 0;
    std::string text;  // sequent text as given (comment stripped)
};

std::vector<ProblemLine> parse_problem_text(std::string_view content);
std::vector<ProblemLine> parse_problem_file(const std::string& path);

// One sequent per line with "# expect:" annotations where known.
std::string format_problem_line(const ProblemLine& line);

}  // namespace c1ke

#endif  // C1KE_SYNTAX_HPP
