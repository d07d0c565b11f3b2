#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "oes/sign.hpp"

namespace oes {

// ASCII notation grammar (no whitespace):
//   sign    := atom (';' atom)*
//   atom    := 'S' int ('x' int)?      ScoreRow(count, rows)
//            | 'C' int                 Comb(teeth)
//            | 'P' int                 Pole(crossings)
//            | 'D' int0 ',' int0       Divided(left, right)
//            | 'L' int 'S' int0        LongShort(longs, shorts)
//            | 'V'                     Chevron
//            | 'X' | '+'               Cross
//   int     := [1-9][0-9]*
//   int0    := '0' | int               (Divided sides, LongShort shorts)

enum class NotationErrorKind {
    UnexpectedCharacter,
    BadInteger,
    EmptySign,
    TrailingInput,
};

struct NotationError {
    std::size_t position = 0;  // zero-based character offset into the input
    NotationErrorKind kind = NotationErrorKind::UnexpectedCharacter;
    std::string message;
};

std::string notation_error_kind_name(NotationErrorKind kind);

using ParseResult = std::variant<Sign, NotationError>;

/// Parses one sign. On failure the error carries the offset of the first
/// violation. Accepted input always yields a well-formed Sign.
ParseResult parse_sign(const std::string& text);

/// Canonical notation for an Opaque-free sign. Satisfies
/// parse_sign(render_sign(s)) == normalize(s).
/// Returns false (and leaves `out` empty) if the sign contains an Opaque
/// atom, for which no notation exists.
bool render_sign(const Sign& sign, std::string& out);

/// Convenience wrapper; throws std::invalid_argument on Opaque atoms.
std::string render_sign(const Sign& sign);

}  // namespace oes
