#include "oes/notation.hpp"

#include <cctype>
#include <stdexcept>

namespace oes {

std::string notation_error_kind_name(NotationErrorKind kind) {
    switch (kind) {
        case NotationErrorKind::UnexpectedCharacter: return "unexpected-character";
        case NotationErrorKind::BadInteger: return "bad-integer";
        case NotationErrorKind::EmptySign: return "empty-sign";
        case NotationErrorKind::TrailingInput: return "trailing-input";
    }
    return "unexpected-character";
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
};

NotationError error_at(std::size_t pos, NotationErrorKind kind, std::string message) {
    return NotationError{pos, kind, std::move(message)};
}

// int: [1-9][0-9]*; with allow_zero, a lone '0' is also accepted.
bool read_int(Cursor& cur, bool allow_zero, int& out, NotationError& err) {
    const std::size_t start = cur.pos;
    if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        err = error_at(start, NotationErrorKind::BadInteger, "expected an integer");
        return false;
    }
    if (cur.peek() == '0') {
        if (!allow_zero) {
            err = error_at(start, NotationErrorKind::BadInteger, "integer must be positive");
            return false;
        }
        ++cur.pos;
        out = 0;
        return true;
    }
    long value = 0;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        value = value * 10 + (cur.peek() - '0');
        if (value > 1'000'000) {
            err = error_at(start, NotationErrorKind::BadInteger, "integer too large");
            return false;
        }
        ++cur.pos;
    }
    out = static_cast<int>(value);
    return true;
}

bool read_atom(Cursor& cur, Atom& out, NotationError& err) {
    if (cur.done()) {
        err = error_at(cur.pos, NotationErrorKind::UnexpectedCharacter, "expected an atom");
        return false;
    }
    const char head = cur.peek();
    const std::size_t head_pos = cur.pos;
    switch (head) {
        case 'S': {
            ++cur.pos;
            int count = 0;
            if (!read_int(cur, false, count, err)) return false;
            int rows = 1;
            if (!cur.done() && cur.peek() == 'x') {
                ++cur.pos;
                const std::size_t rows_pos = cur.pos;
                if (!read_int(cur, false, rows, err)) return false;
                if (rows > count) {
                    err = error_at(rows_pos, NotationErrorKind::BadInteger,
                                   "rows cannot exceed stroke count");
                    return false;
                }
            }
            out = ScoreRow{count, rows};
            return true;
        }
        case 'C': {
            ++cur.pos;
            int teeth = 0;
            if (!read_int(cur, false, teeth, err)) return false;
            out = Comb{teeth};
            return true;
        }
        case 'P': {
            ++cur.pos;
            int crossings = 0;
            if (!read_int(cur, false, crossings, err)) return false;
            out = Pole{crossings};
            return true;
        }
        case 'D': {
            ++cur.pos;
            int left = 0;
            if (!read_int(cur, true, left, err)) return false;
            if (cur.done() || cur.peek() != ',') {
                err = error_at(cur.pos, NotationErrorKind::UnexpectedCharacter,
                               "expected ',' between divided sides");
                return false;
            }
            ++cur.pos;
            const std::size_t right_pos = cur.pos;
            int right = 0;
            if (!read_int(cur, true, right, err)) return false;
            if (left + right < 1) {
                err = error_at(right_pos, NotationErrorKind::BadInteger,
                               "divided sides cannot both be zero");
                return false;
            }
            out = Divided{left, right};
            return true;
        }
        case 'L': {
            ++cur.pos;
            int longs = 0;
            if (!read_int(cur, false, longs, err)) return false;
            if (cur.done() || cur.peek() != 'S') {
                err = error_at(cur.pos, NotationErrorKind::UnexpectedCharacter,
                               "expected 'S' before short-mark count");
                return false;
            }
            ++cur.pos;
            int shorts = 0;
            if (!read_int(cur, true, shorts, err)) return false;
            out = LongShort{longs, shorts};
            return true;
        }
        case 'V':
            ++cur.pos;
            out = Chevron{};
            return true;
        case 'X':
        case '+':
            // 'X' and '+' are treated as one candidate sign.
            ++cur.pos;
            out = Cross{};
            return true;
        default:
            err = error_at(head_pos, NotationErrorKind::UnexpectedCharacter,
                           std::string("unexpected character '") + head + "'");
            return false;
    }
}

}  // namespace

ParseResult parse_sign(const std::string& text) {
    if (text.empty())
        return error_at(0, NotationErrorKind::EmptySign, "empty input");
    Cursor cur{text};
    Sign sign;
    NotationError err;
    Atom atom;
    if (!read_atom(cur, atom, err)) return err;
    sign.atoms.push_back(atom);
    while (!cur.done() && cur.peek() == ';') {
        ++cur.pos;
        if (!read_atom(cur, atom, err)) return err;
        sign.atoms.push_back(atom);
    }
    if (!cur.done())
        return error_at(cur.pos, NotationErrorKind::TrailingInput,
                        "unparsed input after sign");
    return sign;
}

bool render_sign(const Sign& sign, std::string& out) {
    out.clear();
    if (contains_opaque(sign)) return false;
    const Sign canonical = normalize(sign);
    bool first = true;
    for (const Atom& atom : canonical.atoms) {
        if (!first) out += ';';
        first = false;
        std::visit(
            [&out](const auto& a) {
                using T = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<T, ScoreRow>) {
                    out += 'S';
                    out += std::to_string(a.count);
                    if (a.rows != 1) {
                        out += 'x';
                        out += std::to_string(a.rows);
                    }
                } else if constexpr (std::is_same_v<T, Comb>) {
                    out += 'C';
                    out += std::to_string(a.teeth);
                } else if constexpr (std::is_same_v<T, Pole>) {
                    out += 'P';
                    out += std::to_string(a.crossings);
                } else if constexpr (std::is_same_v<T, Divided>) {
                    out += 'D';
                    out += std::to_string(a.left);
                    out += ',';
                    out += std::to_string(a.right);
                } else if constexpr (std::is_same_v<T, LongShort>) {
                    out += 'L';
                    out += std::to_string(a.longs);
                    out += 'S';
                    out += std::to_string(a.shorts);
                } else if constexpr (std::is_same_v<T, Chevron>) {
                    out += 'V';
                } else if constexpr (std::is_same_v<T, Cross>) {
                    out += 'X';
                }
            },
            atom);
    }
    return true;
}

std::string render_sign(const Sign& sign) {
    std::string out;
    if (!render_sign(sign, out))
        throw std::invalid_argument("cannot render a sign containing opaque atoms");
    return out;
}

}  // namespace oes
