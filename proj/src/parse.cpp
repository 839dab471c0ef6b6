#include "tjurina/parse.hpp"

#include <algorithm>
#include <cctype>

#include "tjurina/errors.hpp"

namespace tjurina {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }
    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorCode::ParseError, what + " at position " + std::to_string(pos));
    }
};

struct RawTerm {
    Rat coef{1};
    std::vector<int> exps;  // sized 10, trimmed later
    size_t start = 0;

    int degree() const {
        int d = 0;
        for (int e : exps) d += e;
        return d;
    }
};

std::string read_digits(Cursor& cur) {
    std::string out;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        out += cur.text[cur.pos++];
    }
    return out;
}

// factor := rational | var-power;  rational := digits [ "/" digits ]
// var-power := "x" digit [ "^" digits ]
void read_factor(Cursor& cur, RawTerm& term) {
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        std::string num = read_digits(cur);
        std::string lit = num;
        if (!cur.done() && cur.peek() == '/') {
            ++cur.pos;
            std::string den = read_digits(cur);
            if (den.empty()) cur.error("expected denominator digits");
            lit += "/" + den;
        }
        try {
            term.coef *= rat_from_string(lit);
        } catch (const std::invalid_argument& e) {
            cur.error(e.what());
        }
        return;
    }
    if (cur.peek() == 'x') {
        ++cur.pos;
        if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            cur.error("expected a variable index after 'x'");
        }
        int index = cur.text[cur.pos++] - '0';
        int exp = 1;
        if (!cur.done() && cur.peek() == '^') {
            ++cur.pos;
            std::string digits = read_digits(cur);
            if (digits.empty()) cur.error("expected exponent digits after '^'");
            if (digits.size() > 2) cur.error("exponent too large (supported range is 0..63)");
            exp = std::stoi(digits);
            if (exp > 63) cur.error("exponent too large (supported range is 0..63)");
        }
        term.exps[static_cast<size_t>(index)] += exp;
        return;
    }
    cur.error(std::string("unexpected character '") + cur.peek() + "'");
}

}  // namespace

HomogeneousPoly parse_poly(const std::string& text, std::optional<int> n_vars_override) {
    Cursor cur{text};
    std::vector<RawTerm> terms;

    cur.skip_ws();
    if (cur.done()) cur.error("empty polynomial");
    bool first = true;
    while (true) {
        int sign = 1;
        cur.skip_ws();
        if (cur.done()) {
            if (first) cur.error("empty polynomial");
            cur.error("dangling sign");
        }
        if (cur.peek() == '+' || cur.peek() == '-') {
            sign = (cur.peek() == '-') ? -1 : 1;
            ++cur.pos;
            cur.skip_ws();
        } else if (!first) {
            cur.error("expected '+' or '-' between terms");
        }
        if (cur.done()) cur.error("term expected");

        RawTerm term;
        term.exps.assign(10, 0);
        term.start = cur.pos;
        bool any_factor = false;
        while (true) {
            if (cur.done()) break;
            char c = cur.peek();
            if (c == '*') {
                ++cur.pos;
                cur.skip_ws();
                if (cur.done()) cur.error("factor expected after '*'");
                read_factor(cur, term);
                any_factor = true;
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == 'x') {
                read_factor(cur, term);
                any_factor = true;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                size_t save = cur.pos;
                cur.skip_ws();
                if (!cur.done() && (std::isdigit(static_cast<unsigned char>(cur.peek())) ||
                                    cur.peek() == 'x' || cur.peek() == '*')) {
                    continue;  // whitespace inside the term, keep reading factors
                }
                cur.pos = save;
                break;
            } else {
                break;
            }
        }
        if (!any_factor) cur.error("term expected");
        if (sign < 0) term.coef = -term.coef;
        terms.push_back(std::move(term));
        first = false;

        cur.skip_ws();
        if (cur.done()) break;
        if (cur.peek() != '+' && cur.peek() != '-') {
            cur.error(std::string("unexpected character '") + cur.peek() + "'");
        }
    }

    int max_index = -1;
    for (const RawTerm& t : terms) {
        for (int j = 9; j >= 0; --j) {
            if (t.exps[static_cast<size_t>(j)] > 0) {
                max_index = std::max(max_index, j);
                break;
            }
        }
    }
    int n_vars = std::max(max_index + 1, 1);
    if (n_vars_override) {
        if (*n_vars_override < n_vars) {
            fail(ErrorCode::BadInput, "nvars=" + std::to_string(*n_vars_override) +
                                          " is smaller than the largest variable used (x" +
                                          std::to_string(n_vars - 1) + ")");
        }
        if (*n_vars_override > 10) fail(ErrorCode::BadInput, "at most 10 variables (x0..x9) are supported");
        n_vars = *n_vars_override;
    }

    int degree = terms.front().degree();
    bool homogeneous = true;
    for (const RawTerm& t : terms) homogeneous = homogeneous && (t.degree() == degree);
    if (!homogeneous) {
        std::string detail = "input is not homogeneous; term degrees:";
        for (const RawTerm& t : terms) {
            size_t end = t.start;
            while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
            std::string snippet = text.substr(t.start, end - t.start);
            while (!snippet.empty() && std::isspace(static_cast<unsigned char>(snippet.back()))) snippet.pop_back();
            detail += " [" + snippet + ": " + std::to_string(t.degree()) + "]";
        }
        fail(ErrorCode::NotHomogeneous, detail);
    }

    HomogeneousPoly f(n_vars, degree);
    for (const RawTerm& t : terms) {
        std::vector<int> exps(t.exps.begin(), t.exps.begin() + n_vars);
        f.add_term(Monomial(std::move(exps)), t.coef);
    }
    return f;
}

std::string render(const HomogeneousPoly& f) { return f.str(); }

std::vector<Rat> parse_point(const std::string& text) {
    std::vector<Rat> coords;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        // trim
        size_t a = piece.find_first_not_of(" \t");
        size_t b = piece.find_last_not_of(" \t");
        if (a == std::string::npos) fail(ErrorCode::BadInput, "empty coordinate in point");
        try {
            coords.push_back(rat_from_string(piece.substr(a, b - a + 1)));
        } catch (const std::invalid_argument& e) {
            fail(ErrorCode::BadInput, std::string("bad coordinate: ") + e.what());
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return coords;
}

}  // namespace tjurina
