#pragma once

/**
 * @file dsl.hpp
 * @brief Text formats: equations, morphisms, periodicity instances.
 *
 * Unknowns are single letters a-z or x1-style indexed tokens (one style per
 * file). Words are runs of digits 1-9, or bracketed integer lists like
 * [1,12,3] for letters >= 10. `#` starts a line comment. Equation files
 * hold one `side = side` per line; morphism files hold `name = word ...`
 * assignments (empty right side for the empty image); instance files hold
 * `s0 = ...`, `u1 = ...`, `t0 = ...`, `v1 = ...` assignments.
 */

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "weq/equations.hpp"
#include "weq/errors.hpp"
#include "weq/periodicity.hpp"
#include "weq/words.hpp"

namespace weq {

struct NameTable {
    std::vector<std::string> names; // index -> surface name

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return i;
        return std::nullopt;
    }

    const std::string& name_of(std::size_t i) const { return names.at(i); }
    std::size_t size() const { return names.size(); }

    static NameTable indexed(std::size_t n) {
        NameTable t;
        for (std::size_t i = 1; i <= n; ++i) t.names.push_back("x" + std::to_string(i));
        return t;
    }

    bool operator==(const NameTable& o) const { return names == o.names; }
};

struct ParsedSystem {
    EquationSystem system;
    NameTable names;
};

struct ParsedMorphism {
    Morphism morphism;
    NameTable names;
};

/// Parse a single word token: "", digit run, or bracketed list.
inline Word parse_word(const std::string& text) {
    Word w;
    if (text.empty()) return w;
    if (text.front() == '[') {
        if (text.back() != ']') throw parse_error("unterminated bracket list", 1, static_cast<int>(text.size()));
        std::string body = text.substr(1, text.size() - 2);
        if (body.empty()) return w;
        std::istringstream in(body);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                throw parse_error("invalid letter '" + item + "' in bracket list", 1, 1);
            Letter a(item);
            if (a < 1) throw parse_error("letter must be >= 1", 1, 1);
            w.letters.push_back(std::move(a));
        }
        return w;
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '1' || c > '9')
            throw parse_error(std::string("invalid digit '") + c + "' in word", 1, static_cast<int>(i + 1));
        w.letters.push_back(Letter(c - '0'));
    }
    return w;
}

inline std::string word_to_text(const Word& w) { return w.to_text(); }

namespace detail {

struct Line {
    std::string text;
    int number; // 1-based
};

inline std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const auto hash = raw.find('#');
        std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
        const auto last = body.find_last_not_of(" \t\r");
        if (last == std::string::npos) continue;
        out.push_back({body.substr(0, last + 1), number});
    }
    return out;
}

struct UnknownToken {
    std::string name;
    bool indexed;      // x<digits> style
    std::size_t index; // 1-based when indexed
    int line, col;
};

/// Scan one equation side into unknown tokens.
inline std::vector<UnknownToken> scan_side(const std::string& text, int line, int col_offset) {
    std::vector<UnknownToken> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        const int col = col_offset + static_cast<int>(i);
        if (c == ' ' || c == '\t') {
            ++i;
            continue;
        }
        if (c == '=') throw parse_error("unexpected '='", line, col);
        if (c < 'a' || c > 'z') throw parse_error(std::string("unexpected character '") + c + "'", line, col);
        if (c == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            const std::string digits = text.substr(i + 1, j - i - 1);
            const std::size_t idx = std::stoull(digits);
            if (idx == 0) throw parse_error("unknown index must be >= 1", line, col);
            out.push_back({"x" + digits, true, idx, line, col});
            i = j;
        } else {
            out.push_back({std::string(1, c), false, 0, line, col});
            ++i;
        }
    }
    return out;
}

inline void split_assignment(const Line& line, std::string& key, std::string& value, int& eq_col) {
    const auto eq = line.text.find('=');
    if (eq == std::string::npos) throw parse_error("expected '='", line.number, 1);
    const auto second = line.text.find('=', eq + 1);
    if (second != std::string::npos)
        throw parse_error("unexpected second '='", line.number, static_cast<int>(second + 1));
    key = line.text.substr(0, eq);
    value = line.text.substr(eq + 1);
    eq_col = static_cast<int>(eq + 1);
    const auto trim = [](std::string& s) {
        const auto a = s.find_first_not_of(" \t");
        const auto b = s.find_last_not_of(" \t");
        s = (a == std::string::npos) ? std::string() : s.substr(a, b - a + 1);
    };
    trim(key);
    trim(value);
}

/// Right side of an assignment: whitespace-separated word tokens, concatenated.
inline Word parse_word_sequence(const std::string& value, int line) {
    Word w;
    std::istringstream in(value);
    std::string tok;
    while (in >> tok) {
        try {
            w = w + parse_word(tok);
        } catch (const parse_error& e) {
            throw parse_error(std::string(e.what()), line, 1);
        }
    }
    return w;
}

} // namespace detail

/// Parse an equation file into a system plus the name table used.
inline ParsedSystem parse_equations(const std::string& text) {
    std::vector<std::vector<detail::UnknownToken>> sides; // lhs, rhs alternating
    std::vector<std::pair<std::size_t, std::size_t>> eq_sides;
    for (const auto& line : detail::content_lines(text)) {
        const auto eq = line.text.find('=');
        if (eq == std::string::npos) throw parse_error("expected '=' in equation", line.number, 1);
        const auto second = line.text.find('=', eq + 1);
        if (second != std::string::npos)
            throw parse_error("unexpected second '='", line.number, static_cast<int>(second + 1));
        auto lhs = detail::scan_side(line.text.substr(0, eq), line.number, 1);
        auto rhs = detail::scan_side(line.text.substr(eq + 1), line.number, static_cast<int>(eq + 2));
        eq_sides.emplace_back(sides.size(), sides.size() + 1);
        sides.push_back(std::move(lhs));
        sides.push_back(std::move(rhs));
    }

    bool any_indexed = false, any_letter = false;
    for (const auto& side : sides) {
        for (const auto& t : side) (t.indexed ? any_indexed : any_letter) = true;
    }
    if (any_indexed && any_letter) {
        for (const auto& side : sides)
            for (const auto& t : side)
                if (!t.indexed) throw parse_error("mixed unknown naming styles ('" + t.name + "')", t.line, t.col);
    }

    NameTable table;
    std::size_t n = 0;
    if (any_indexed) {
        for (const auto& side : sides)
            for (const auto& t : side) n = std::max(n, t.index);
        table = NameTable::indexed(n);
    } else {
        for (const auto& side : sides) {
            for (const auto& t : side) {
                if (!table.index_of(t.name)) table.names.push_back(t.name);
            }
        }
        n = table.size();
    }

    auto resolve = [&](const detail::UnknownToken& t) -> std::size_t {
        if (t.indexed) return t.index - 1;
        return *table.index_of(t.name);
    };
    std::vector<WordEquation> eqs;
    for (auto [li, ri] : eq_sides) {
        std::vector<std::size_t> lhs, rhs;
        for (const auto& t : sides[li]) lhs.push_back(resolve(t));
        for (const auto& t : sides[ri]) rhs.push_back(resolve(t));
        eqs.emplace_back(n, std::move(lhs), std::move(rhs));
    }
    return {EquationSystem(n, std::move(eqs)), std::move(table)};
}

/// Parse a morphism file. With a name table (from an equation file), images
/// are matched by name and every unknown must receive exactly one image.
inline ParsedMorphism parse_morphism(const std::string& text, const NameTable* table = nullptr) {
    std::vector<std::pair<detail::UnknownToken, Word>> assigns;
    for (const auto& line : detail::content_lines(text)) {
        std::string key, value;
        int eq_col = 0;
        detail::split_assignment(line, key, value, eq_col);
        auto toks = detail::scan_side(key, line.number, 1);
        if (toks.size() != 1) throw parse_error("expected a single unknown before '='", line.number, 1);
        assigns.emplace_back(toks.front(), detail::parse_word_sequence(value, line.number));
    }
    bool any_indexed = false, any_letter = false;
    for (const auto& [t, w] : assigns) (t.indexed ? any_indexed : any_letter) = true;
    if (any_indexed && any_letter)
        throw parse_error("mixed unknown naming styles in morphism", assigns.front().first.line, 1);

    NameTable own;
    if (table) {
        own = *table;
    } else if (any_indexed) {
        std::size_t n = 0;
        for (const auto& [t, w] : assigns) n = std::max(n, t.index);
        own = NameTable::indexed(n);
    } else {
        for (const auto& [t, w] : assigns) {
            if (own.index_of(t.name)) throw parse_error("duplicate image for '" + t.name + "'", t.line, t.col);
            own.names.push_back(t.name);
        }
    }

    std::vector<std::optional<Word>> images(own.size());
    for (const auto& [t, w] : assigns) {
        const auto idx = own.index_of(t.name);
        if (!idx) throw parse_error("unknown '" + t.name + "' not in the system", t.line, t.col);
        if (images[*idx]) throw parse_error("duplicate image for '" + t.name + "'", t.line, t.col);
        images[*idx] = w;
    }
    Morphism h;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!images[i]) throw parse_error("no image for '" + own.name_of(i) + "'", 1, 1);
        h.images.push_back(std::move(*images[i]));
    }
    return {std::move(h), std::move(own)};
}

/// Parse an instance file with s/u/t/v assignments.
inline PeriodicityInstance parse_instance(const std::string& text) {
    std::map<char, std::map<std::size_t, Word>> parts;
    for (const auto& line : detail::content_lines(text)) {
        std::string key, value;
        int eq_col = 0;
        detail::split_assignment(line, key, value, eq_col);
        if (key.size() < 2 || std::string("sutv").find(key[0]) == std::string::npos ||
            key.find_first_not_of("0123456789", 1) != std::string::npos)
            throw parse_error("expected s<i>, u<i>, t<i> or v<i> before '='", line.number, 1);
        const std::size_t idx = std::stoull(key.substr(1));
        if ((key[0] == 'u' || key[0] == 'v') && idx == 0)
            throw parse_error("period indices start at 1", line.number, 1);
        auto [it, inserted] = parts[key[0]].emplace(idx, detail::parse_word_sequence(value, line.number));
        if (!inserted) throw parse_error("duplicate key '" + key + "'", line.number, 1);
    }
    auto max_index = [](const std::map<std::size_t, Word>& m) {
        std::size_t mx = 0;
        for (const auto& [i, w] : m) mx = std::max(mx, i);
        return mx;
    };
    const std::size_t m = max_index(parts['u']);
    const std::size_t n = max_index(parts['v']);
    if (m == 0 || n == 0) throw parse_error("instance needs u1 and v1", 1, 1);
    auto gather = [&](char c, std::size_t from, std::size_t to, bool required) {
        std::vector<Word> out;
        for (std::size_t i = from; i <= to; ++i) {
            auto it = parts[c].find(i);
            if (it == parts[c].end()) {
                if (required) throw parse_error(std::string("missing ") + c + std::to_string(i), 1, 1);
                out.push_back(Word{});
            } else {
                out.push_back(it->second);
            }
        }
        return out;
    };
    if (max_index(parts['s']) > m) throw parse_error("s index exceeds m", 1, 1);
    if (max_index(parts['t']) > n) throw parse_error("t index exceeds n", 1, 1);
    return PeriodicityInstance(gather('s', 0, m, false), gather('u', 1, m, true),
                               gather('t', 0, n, false), gather('v', 1, n, true));
}

using ParsedFile = std::variant<ParsedSystem, ParsedMorphism, PeriodicityInstance>;

/// Dispatch on an optional section header ("[equations]", "[morphism]",
/// "[instance]"); without one, assignments of word values parse as a
/// morphism, s/u/t/v assignments as an instance, anything else as equations.
inline ParsedFile parse_dsl(const std::string& text) {
    const auto lines = detail::content_lines(text);
    std::string first_line;
    if (!lines.empty()) {
        const auto a = lines.front().text.find_first_not_of(" \t");
        if (a != std::string::npos) first_line = lines.front().text.substr(a);
    }
    if (!first_line.empty() && first_line.front() == '[' && first_line.find(']') != std::string::npos &&
        first_line.find('=') == std::string::npos) {
        const std::string header = first_line;
        std::string rest;
        std::istringstream in(text);
        std::string raw;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            if (number == lines.front().number) continue;
            rest += raw;
            rest += '\n';
        }
        if (header == "[equations]") return parse_equations(rest);
        if (header == "[morphism]") return parse_morphism(rest);
        if (header == "[instance]") return parse_instance(rest);
        throw parse_error("unknown section header " + header, lines.front().number, 1);
    }
    // heuristics: instance keys, then morphism-shaped assignments
    for (const auto& line : lines) {
        const auto eq = line.text.find('=');
        if (eq == std::string::npos) break;
        std::string key = line.text.substr(0, eq);
        const auto a = key.find_first_not_of(" \t");
        const auto b = key.find_last_not_of(" \t");
        key = a == std::string::npos ? std::string() : key.substr(a, b - a + 1);
        if (key.size() >= 2 && std::string("sutv").find(key[0]) != std::string::npos &&
            key.find_first_not_of("0123456789", 1) == std::string::npos)
            return parse_instance(text);
        break;
    }
    bool morphism_shaped = !lines.empty();
    for (const auto& line : lines) {
        const auto eq = line.text.find('=');
        if (eq == std::string::npos || line.text.find('=', eq + 1) != std::string::npos) {
            morphism_shaped = false;
            break;
        }
        const std::string rhs = line.text.substr(eq + 1);
        if (rhs.find_first_not_of("0123456789[], \t") != std::string::npos) {
            morphism_shaped = false;
            break;
        }
    }
    if (morphism_shaped) return parse_morphism(text);
    return parse_equations(text);
}

/// Serializers (inverse of the parsers on canonical input).

inline std::string equation_to_text(const WordEquation& e, const NameTable& names) {
    std::ostringstream out;
    for (std::size_t i = 0; i < e.lhs.size(); ++i) out << (i ? " " : "") << names.name_of(e.lhs[i]);
    out << " =";
    for (auto x : e.rhs) out << " " << names.name_of(x);
    return out.str();
}

inline std::string system_to_text(const EquationSystem& sys, const NameTable& names) {
    std::string out;
    for (const auto& e : sys.equations) {
        out += equation_to_text(e, names);
        out += '\n';
    }
    return out;
}

inline std::string morphism_to_text(const Morphism& h, const NameTable& names) {
    std::string out;
    for (std::size_t i = 0; i < h.images.size(); ++i) {
        out += names.name_of(i);
        out += " =";
        if (!h.images[i].empty()) {
            out += ' ';
            out += h.images[i].to_text();
        }
        out += '\n';
    }
    return out;
}

inline std::string instance_to_text(const PeriodicityInstance& inst) {
    std::string out;
    auto emit = [&](char c, const std::vector<Word>& ws, std::size_t from) {
        for (std::size_t i = 0; i < ws.size(); ++i) {
            out += c;
            out += std::to_string(from + i);
            out += " =";
            if (!ws[i].empty()) {
                out += ' ';
                out += ws[i].to_text();
            }
            out += '\n';
        }
    };
    emit('s', inst.s, 0);
    emit('u', inst.u, 1);
    emit('t', inst.t, 0);
    emit('v', inst.v, 1);
    return out;
}

} // namespace weq
