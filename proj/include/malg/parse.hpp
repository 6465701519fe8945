#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "malg/poly.hpp"
#include "malg/term.hpp"

namespace malg {

// Raised on malformed input; offset is the byte position of the problem.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

// Generator token style: x<index> everywhere, or single letters a..h
// (slots 1..8) as used in identity files.
enum class GenStyle { Indexed, SlotLetters };

// term ::= gen | "(" term "*" term ")" | "[" term "," term "]" | "{" term "," term "}"
// Ops outside the requested signature (or a Star/Bracket/Brace mix) are rejected.
Term parse_term(std::string_view text, Signature sig, GenStyle style = GenStyle::Indexed);

// poly ::= [sign] [coef] term ( sign [coef] term )*
// coef ::= digit+ [ "/" digit+ ]       sign ::= "+" | "-"
Polynomial parse_poly(std::string_view text, Signature sig, GenStyle style = GenStyle::Indexed);

}  // namespace malg
