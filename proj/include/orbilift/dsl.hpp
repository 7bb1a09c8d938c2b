/*
   Copyright 2026 The orbilift authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ORBILIFT_DSL_HPP
#define ORBILIFT_DSL_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "orbilift/connection.hpp"
#include "orbilift/linalg.hpp"
#include "orbilift/polymap.hpp"
#include "orbilift/tensor.hpp"

namespace orbilift::dsl {

// ---------------------------------------------------------------------------
// session model
// ---------------------------------------------------------------------------

struct GroupDecl {
    std::string name;
    std::vector<CycMatrix> generators;

    friend bool operator==(const GroupDecl& a, const GroupDecl& b) {
        return a.name == b.name && a.generators == b.generators;
    }
};

struct TensorDecl {
    std::string name;
    bool is_form = false;
    TensorField value{0, 0, {}};

    friend bool operator==(const TensorDecl& a, const TensorDecl& b) {
        return a.name == b.name && a.is_form == b.is_form && a.value == b.value;
    }
};

struct ConnectionDecl {
    std::string name;
    ChristoffelConnection value;

    friend bool operator==(const ConnectionDecl& a, const ConnectionDecl& b) {
        return a.name == b.name && a.value == b.value;
    }
};

struct MapDecl {
    std::string name;
    PolyMap forward;
    PolyMap inverse;

    friend bool operator==(const MapDecl& a, const MapDecl& b) {
        return a.name == b.name && a.forward.source_vars == b.forward.source_vars &&
               a.forward.components == b.forward.components &&
               a.inverse.components == b.inverse.components;
    }
};

struct Command {
    std::string kind;               // analyze, invariants, divisor, lift,
                                    // lift-connection, solomon, validate, check-diffeo
    std::vector<std::string> args;  // object/group names ("thm37" for validate)

    friend bool operator==(const Command& a, const Command& b) {
        return a.kind == b.kind && a.args == b.args;
    }
};

struct SessionSpec {
    VarList coords;  // V-side coordinate names; empty = default z-chart
    std::vector<GroupDecl> groups;
    std::vector<TensorDecl> tensors;
    std::vector<ConnectionDecl> connections;
    std::vector<MapDecl> maps;
    std::vector<Command> commands;

    const GroupDecl* find_group(const std::string& n) const {
        for (const auto& g : groups)
            if (g.name == n) return &g;
        return nullptr;
    }
    const TensorDecl* find_tensor(const std::string& n) const {
        for (const auto& t : tensors)
            if (t.name == n) return &t;
        return nullptr;
    }
    const ConnectionDecl* find_connection(const std::string& n) const {
        for (const auto& c : connections)
            if (c.name == n) return &c;
        return nullptr;
    }
    const MapDecl* find_map(const std::string& n) const {
        for (const auto& m : maps)
            if (m.name == n) return &m;
        return nullptr;
    }

    friend bool operator==(const SessionSpec& a, const SessionSpec& b) {
        return a.coords == b.coords && a.groups == b.groups && a.tensors == b.tensors &&
               a.connections == b.connections && a.maps == b.maps && a.commands == b.commands;
    }
};

// ---------------------------------------------------------------------------
// lexer
// ---------------------------------------------------------------------------

struct Token {
    enum Kind { Ident, Int, Sym, Otimes, End };
    Kind kind = End;
    std::string text;
    int line = 0, col = 0;
};

class ParseError : public Error {
  public:
    ParseError(int line, int col, const std::string& msg)
        : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg) {}
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) { lex(src); }

    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }

    Token next() {
        Token t = peek();
        if (pos_ < toks_.size() - 1) ++pos_;
        return t;
    }

  private:
    void lex(const std::string& src) {
        int line = 1, col = 1;
        std::size_t i = 0;
        auto advance = [&](std::size_t k) {
            for (std::size_t j = 0; j < k; ++j) {
                if (src[i + j] == '\n') {
                    ++line;
                    col = 1;
                } else {
                    ++col;
                }
            }
            i += k;
        };
        while (i < src.size()) {
            const char c = src[i];
            if (c == '#') {
                std::size_t j = i;
                while (j < src.size() && src[j] != '\n') ++j;
                advance(j - i);
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance(1);
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = i;
                while (j < src.size() &&
                       (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                    ++j;
                std::string word = src.substr(i, j - i);
                // the two hyphenated command keywords
                if ((word == "lift" && src.compare(j, 11, "-connection") == 0) ||
                    (word == "check" && src.compare(j, 7, "-diffeo") == 0)) {
                    const std::size_t extra = word == "lift" ? 11 : 7;
                    word = src.substr(i, j - i + extra);
                    j += extra;
                }
                toks_.push_back({Token::Ident, word, line, col});
                advance(j - i);
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
                toks_.push_back({Token::Int, src.substr(i, j - i), line, col});
                advance(j - i);
                continue;
            }
            if (c == '(' && i + 2 < src.size() && src[i + 1] == 'x' && src[i + 2] == ')') {
                toks_.push_back({Token::Otimes, "(x)", line, col});
                advance(3);
                continue;
            }
            static const std::string syms = "=[](){},:+-*/^";
            if (syms.find(c) != std::string::npos) {
                toks_.push_back({Token::Sym, std::string(1, c), line, col});
                advance(1);
                continue;
            }
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        toks_.push_back({Token::End, "", line, col});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// parser
// ---------------------------------------------------------------------------

class Parser {
  public:
    explicit Parser(const std::string& src) : lex_(src) {}

    SessionSpec parse() {
        SessionSpec spec;
        while (lex_.peek().kind != Token::End) {
            const Token& t = lex_.peek();
            if (t.kind != Token::Ident)
                throw ParseError(t.line, t.col, "expected a statement keyword, got '" + t.text + "'");
            if (t.text == "coords") parse_coords(spec);
            else if (t.text == "group") parse_group(spec);
            else if (t.text == "tensor") parse_tensor(spec, false);
            else if (t.text == "form") parse_tensor(spec, true);
            else if (t.text == "connection") parse_connection(spec);
            else if (t.text == "map") parse_map(spec);
            else if (t.text == "analyze" || t.text == "invariants" || t.text == "divisor")
                parse_simple_command(spec);
            else if (t.text == "lift" || t.text == "lift-connection" || t.text == "solomon")
                parse_over_command(spec);
            else if (t.text == "validate") parse_validate(spec);
            else if (t.text == "check-diffeo") parse_check_diffeo(spec);
            else
                throw ParseError(t.line, t.col,
                                 "unknown statement '" + t.text +
                                     "' (expected coords/group/tensor/form/connection/map or a command)");
        }
        return spec;
    }

  private:
    static bool is_reserved(const std::string& w) {
        static const std::set<std::string> words{
            "coords", "group",   "tensor", "form",    "connection", "map",
            "analyze", "invariants", "divisor", "lift", "lift-connection",
            "solomon", "validate", "check-diffeo", "over", "from", "to",
            "inverse", "zeta", "d", "ddy", "x", "thm37"};
        return words.count(w) > 0;
    }

    Token expect_sym(const std::string& s) {
        const Token t = lex_.next();
        if (t.kind != Token::Sym || t.text != s)
            throw ParseError(t.line, t.col, "expected '" + s + "', got '" + t.text + "'");
        return t;
    }

    Token expect_ident() {
        const Token t = lex_.next();
        if (t.kind != Token::Ident)
            throw ParseError(t.line, t.col, "expected an identifier, got '" + t.text + "'");
        return t;
    }

    Token expect_keyword(const std::string& w) {
        const Token t = lex_.next();
        if (t.kind != Token::Ident || t.text != w)
            throw ParseError(t.line, t.col, "expected '" + w + "', got '" + t.text + "'");
        return t;
    }

    std::string expect_name() {
        const Token t = expect_ident();
        if (is_reserved(t.text))
            throw ParseError(t.line, t.col, "'" + t.text + "' is a reserved word");
        return t.text;
    }

    bool peek_sym(const std::string& s, std::size_t ahead = 0) const {
        const Token& t = lex_.peek(ahead);
        return t.kind == Token::Sym && t.text == s;
    }

    bool peek_slot_start(std::size_t ahead = 0) const {
        const Token& t = lex_.peek(ahead);
        return t.kind == Token::Ident && (t.text == "d" || t.text == "ddy") &&
               peek_sym("(", ahead + 1);
    }

    long long expect_int() {
        const Token t = lex_.next();
        if (t.kind != Token::Int)
            throw ParseError(t.line, t.col, "expected an integer, got '" + t.text + "'");
        return std::stoll(t.text);
    }

    // ---- scalar / rational-function expressions -------------------------

    RationalFunction parse_rexpr(bool allow_vars) {
        RationalFunction acc = parse_rterm(allow_vars, false);
        while (peek_sym("+") || peek_sym("-")) {
            const bool plus = lex_.next().text == "+";
            RationalFunction rhs = parse_rterm(allow_vars, false);
            acc = plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    // stop_at_slots: inside tensor terms a '*' followed by d(...) / ddy(...)
    // ends the scalar coefficient
    RationalFunction parse_rterm(bool allow_vars, bool stop_at_slots) {
        RationalFunction acc = parse_rfactor(allow_vars);
        while (peek_sym("*") || peek_sym("/")) {
            if (stop_at_slots && peek_sym("*") && peek_slot_start(1)) {
                lex_.next();  // consume '*', the caller continues with slots
                break;
            }
            const bool mul = lex_.next().text == "*";
            RationalFunction rhs = parse_rfactor(allow_vars);
            acc = mul ? acc * rhs : acc / rhs;
        }
        return acc;
    }

    RationalFunction parse_rfactor(bool allow_vars) {
        if (peek_sym("-")) {
            lex_.next();
            return -parse_rfactor(allow_vars);
        }
        RationalFunction base = parse_ratom(allow_vars);
        if (peek_sym("^")) {
            lex_.next();
            const Token t = lex_.peek();
            const long long e = expect_int();
            if (e < 0) throw ParseError(t.line, t.col, "negative exponents are not supported");
            base = base.pow(e);
        }
        return base;
    }

    RationalFunction parse_ratom(bool allow_vars) {
        const Token& t = lex_.peek();
        if (t.kind == Token::Int) {
            lex_.next();
            return RationalFunction(
                Polynomial::constant(Cyclotomic(BigRational(BigInt::from_string(t.text)))));
        }
        if (t.kind == Token::Ident && t.text == "zeta") {
            lex_.next();
            expect_sym("(");
            const long long n = expect_int();
            expect_sym(")");
            if (n <= 0) throw ParseError(t.line, t.col, "zeta order must be positive");
            return RationalFunction(
                Polynomial::constant(Cyclotomic::zeta(static_cast<unsigned>(n))));
        }
        if (t.kind == Token::Ident) {
            if (!allow_vars)
                throw ParseError(t.line, t.col, "variables are not allowed in this context");
            if (is_reserved(t.text))
                throw ParseError(t.line, t.col, "'" + t.text + "' is a reserved word");
            lex_.next();
            return RationalFunction(Polynomial::variable(t.text));
        }
        if (peek_sym("(")) {
            lex_.next();
            RationalFunction inner = parse_rexpr(allow_vars);
            expect_sym(")");
            return inner;
        }
        throw ParseError(t.line, t.col, "expected a number, zeta(N), variable or '('");
    }

    Cyclotomic parse_scalar() {
        const Token at = lex_.peek();
        RationalFunction f = parse_rexpr(false);
        if (!f.is_polynomial() || !f.as_polynomial().is_constant())
            throw ParseError(at.line, at.col, "matrix entries must be constant scalars");
        return f.as_polynomial().constant_value();
    }

    // ---- declarations ----------------------------------------------------

    void parse_coords(SessionSpec& spec) {
        const Token at = lex_.next();  // 'coords'
        if (!spec.coords.empty()) throw ParseError(at.line, at.col, "coords declared twice");
        while (lex_.peek().kind == Token::Ident && !is_reserved(lex_.peek().text))
            spec.coords.push_back(expect_name());
        if (spec.coords.empty())
            throw ParseError(at.line, at.col, "coords needs at least one name");
        VarList sorted = spec.coords;
        std::sort(sorted.begin(), sorted.end(), NaturalLess());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError(at.line, at.col, "coordinate names must be distinct");
        if (sorted != spec.coords)
            throw ParseError(at.line, at.col, "coordinates must be listed in natural order");
    }

    CycMatrix parse_matrix() {
        const Token at = expect_sym("[");
        std::vector<std::vector<Cyclotomic>> rows;
        while (true) {
            expect_sym("[");
            std::vector<Cyclotomic> row;
            while (true) {
                row.push_back(parse_scalar());
                if (peek_sym(",")) {
                    lex_.next();
                    continue;
                }
                break;
            }
            expect_sym("]");
            rows.push_back(std::move(row));
            if (peek_sym(",")) {
                lex_.next();
                continue;
            }
            break;
        }
        expect_sym("]");
        const std::size_t n = rows.size();
        for (const auto& r : rows)
            if (r.size() != n)
                throw ParseError(at.line, at.col, "matrix must be square");
        CycMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
        return m;
    }

    void parse_group(SessionSpec& spec) {
        lex_.next();  // 'group'
        const Token at = lex_.peek();
        const std::string name = expect_name();
        if (spec.find_group(name)) throw ParseError(at.line, at.col, "duplicate group " + name);
        expect_sym("=");
        GroupDecl decl;
        decl.name = name;
        while (true) {
            decl.generators.push_back(parse_matrix());
            if (peek_sym(",")) {
                lex_.next();
                continue;
            }
            break;
        }
        const std::size_t dim = decl.generators.front().rows();
        for (const auto& g : decl.generators)
            if (g.rows() != dim)
                throw ParseError(at.line, at.col, "generators must share one dimension");
        spec.groups.push_back(std::move(decl));
    }

    struct Slot {
        bool contravariant = false;
        std::string var;
        bool wedged_to_next = false;  // '^' joiner to the following slot
    };

    Slot parse_slot() {
        const Token t = expect_ident();
        Slot s;
        if (t.text == "d") s.contravariant = false;
        else if (t.text == "ddy") s.contravariant = true;
        else throw ParseError(t.line, t.col, "expected d(...) or ddy(...)");
        expect_sym("(");
        s.var = expect_name();
        expect_sym(")");
        return s;
    }

    // one additive tensor term: optional scalar coefficient, then slots
    // joined by (x) or ^
    TensorField parse_tensor_term(const Token& at) {
        RationalFunction coeff(Polynomial::constant(1));
        std::vector<Slot> slots;
        if (!peek_slot_start()) {
            coeff = parse_rterm(true, true);
        }
        while (peek_slot_start()) {
            slots.push_back(parse_slot());
            if (lex_.peek().kind == Token::Otimes) {
                lex_.next();
                if (!peek_slot_start())
                    throw ParseError(lex_.peek().line, lex_.peek().col,
                                     "expected a slot after (x)");
                continue;
            }
            if (peek_sym("^")) {
                lex_.next();
                if (!peek_slot_start())
                    throw ParseError(lex_.peek().line, lex_.peek().col,
                                     "expected a slot after '^'");
                slots.back().wedged_to_next = true;
                continue;
            }
            break;
        }

        unsigned p = 0, q = 0;
        std::set<std::string> names;
        for (const auto& s : slots) {
            (s.contravariant ? p : q) += 1;
            names.insert(s.var);
            if (s.wedged_to_next && s.contravariant)
                throw ParseError(at.line, at.col, "wedge applies to covariant slots only");
        }
        for (const auto& v : coeff.num().vars()) names.insert(v);
        for (const auto& v : coeff.den().vars()) names.insert(v);
        VarList coords(names.begin(), names.end());
        std::sort(coords.begin(), coords.end(), NaturalLess());

        auto coord_index = [&](const std::string& v) -> unsigned {
            return static_cast<unsigned>(
                std::find(coords.begin(), coords.end(), v) - coords.begin());
        };

        // wedge blocks among the covariant slots, in order of appearance
        std::vector<std::vector<unsigned>> cov_blocks;
        std::vector<unsigned> contra;
        bool in_block = false;
        for (const auto& s : slots) {
            if (s.contravariant) {
                contra.push_back(coord_index(s.var));
                in_block = false;
                continue;
            }
            if (!in_block) cov_blocks.push_back({});
            cov_blocks.back().push_back(coord_index(s.var));
            in_block = s.wedged_to_next;
        }

        TensorField T(p, q, coords);
        // expand each wedge block by signed permutations
        std::vector<std::vector<std::pair<std::vector<unsigned>, int>>> expansions;
        for (const auto& block : cov_blocks) {
            std::vector<std::pair<std::vector<unsigned>, int>> exp;
            std::vector<unsigned> perm(block.size());
            for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<unsigned>(i);
            // enumerate permutations with their signs
            std::vector<unsigned> order = perm;
            std::sort(order.begin(), order.end());
            do {
                int sign = 1;
                for (std::size_t i = 0; i < order.size(); ++i)
                    for (std::size_t j = i + 1; j < order.size(); ++j)
                        if (order[i] > order[j]) sign = -sign;
                std::vector<unsigned> image(block.size());
                for (std::size_t i = 0; i < block.size(); ++i) image[i] = block[order[i]];
                exp.emplace_back(image, sign);
            } while (std::next_permutation(order.begin(), order.end()));
            expansions.push_back(std::move(exp));
        }
        // cartesian product over block expansions
        std::vector<std::size_t> pick(expansions.size(), 0);
        while (true) {
            MultiIndex idx;
            idx.reserve(p + q);
            for (unsigned c : contra) idx.push_back(c);
            int sign = 1;
            for (std::size_t b = 0; b < expansions.size(); ++b) {
                const auto& [image, s] = expansions[b][pick[b]];
                sign *= s;
                for (unsigned c : image) idx.push_back(c);
            }
            T.add_component(idx, sign > 0 ? coeff : -coeff);
            std::size_t k = expansions.size();
            while (k > 0) {
                if (++pick[k - 1] < expansions[k - 1].size()) break;
                pick[k - 1] = 0;
                --k;
            }
            if (k == 0) break;
        }
        return T;
    }

    void parse_tensor(SessionSpec& spec, bool is_form) {
        lex_.next();  // 'tensor' / 'form'
        const Token at = lex_.peek();
        const std::string name = expect_name();
        if (spec.find_tensor(name)) throw ParseError(at.line, at.col, "duplicate tensor " + name);
        expect_sym("=");
        TensorField acc{0, 0, {}};
        bool first = true;
        bool negate = false;
        if (peek_sym("-")) {
            lex_.next();
            negate = true;
        }
        while (true) {
            const Token term_at = lex_.peek();
            TensorField term = parse_tensor_term(term_at);
            if (negate) term = term.scaled(RationalFunction(Polynomial::constant(-1)));
            if (first) {
                acc = term;
                first = false;
            } else {
                if (term.p() != acc.p() || term.q() != acc.q())
                    throw ParseError(term_at.line, term_at.col,
                                     "tensor terms must share one (p,q) signature");
                // merge onto the union chart
                VarList merged = Polynomial::merge_vars(acc.coords(), term.coords());
                acc = acc.rebased(merged) + term.rebased(merged);
            }
            if (peek_sym("+") || peek_sym("-")) {
                negate = lex_.next().text == "-";
                continue;
            }
            break;
        }
        if (acc.is_zero())
            throw ParseError(at.line, at.col, "tensor " + name + " is identically zero");
        if (is_form) {
            if (acc.p() != 0)
                throw ParseError(at.line, at.col, "forms are covariant (no ddy slots)");
            if (!is_skew_covariant(acc))
                throw ParseError(at.line, at.col, "form is not skew-symmetric; use ^ between slots");
        }
        spec.tensors.push_back(TensorDecl{name, is_form, std::move(acc)});
    }

    VarList parse_coord_list() {
        expect_sym("[");
        VarList vars;
        while (true) {
            vars.push_back(expect_name());
            if (peek_sym("]")) break;
        }
        expect_sym("]");
        return vars;
    }

    void parse_connection(SessionSpec& spec) {
        lex_.next();  // 'connection'
        const Token at = lex_.peek();
        const std::string name = expect_name();
        if (spec.find_connection(name))
            throw ParseError(at.line, at.col, "duplicate connection " + name);
        const VarList coords = parse_coord_list();
        expect_sym("=");
        expect_sym("{");
        ChristoffelConnection conn(coords);
        auto coord_index = [&](const Token& t) -> unsigned {
            auto it = std::find(coords.begin(), coords.end(), t.text);
            if (it == coords.end())
                throw ParseError(t.line, t.col, "unknown connection coordinate " + t.text);
            return static_cast<unsigned>(it - coords.begin());
        };
        if (!peek_sym("}")) {
            while (true) {
                const Token ta = expect_ident();
                const Token tb = expect_ident();
                const Token tc = expect_ident();
                expect_sym(":");
                RationalFunction v = parse_rexpr(true);
                conn.set_component(coord_index(ta), coord_index(tb), coord_index(tc), v);
                if (peek_sym(",")) {
                    lex_.next();
                    continue;
                }
                break;
            }
        }
        expect_sym("}");
        spec.connections.push_back(ConnectionDecl{name, std::move(conn)});
    }

    std::vector<Polynomial> parse_poly_tuple(const VarList& allowed) {
        expect_sym("(");
        std::vector<Polynomial> out;
        while (true) {
            const Token at = lex_.peek();
            RationalFunction f = parse_rexpr(true);
            if (!f.is_polynomial())
                throw ParseError(at.line, at.col, "map components must be polynomial");
            Polynomial p = f.as_polynomial();
            for (const auto& v : p.vars())
                if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
                    throw ParseError(at.line, at.col, "unknown map variable " + v);
            out.push_back(std::move(p));
            if (peek_sym(",")) {
                lex_.next();
                continue;
            }
            break;
        }
        expect_sym(")");
        return out;
    }

    void parse_map(SessionSpec& spec) {
        lex_.next();  // 'map'
        const Token at = lex_.peek();
        const std::string name = expect_name();
        if (spec.find_map(name)) throw ParseError(at.line, at.col, "duplicate map " + name);
        const VarList coords = parse_coord_list();
        expect_sym("=");
        std::vector<Polynomial> fwd = parse_poly_tuple(coords);
        expect_keyword("inverse");
        std::vector<Polynomial> inv = parse_poly_tuple(coords);
        if (fwd.size() != coords.size() || inv.size() != coords.size())
            throw ParseError(at.line, at.col, "map needs one component per coordinate");
        spec.maps.push_back(
            MapDecl{name, PolyMap(coords, coords, fwd), PolyMap(coords, coords, inv)});
    }

    // ---- commands ---------------------------------------------------------

    void parse_simple_command(SessionSpec& spec) {
        const std::string kind = lex_.next().text;
        spec.commands.push_back(Command{kind, {expect_name()}});
    }

    void parse_over_command(SessionSpec& spec) {
        const std::string kind = lex_.next().text;
        const std::string obj = expect_name();
        expect_keyword("over");
        const std::string grp = expect_name();
        spec.commands.push_back(Command{kind, {obj, grp}});
    }

    void parse_validate(SessionSpec& spec) {
        lex_.next();  // 'validate'
        expect_keyword("thm37");
        spec.commands.push_back(Command{"validate", {"thm37"}});
    }

    void parse_check_diffeo(SessionSpec& spec) {
        lex_.next();  // 'check-diffeo'
        const std::string f = expect_name();
        expect_keyword("from");
        const std::string src = expect_name();
        expect_keyword("to");
        const std::string dst = expect_name();
        spec.commands.push_back(Command{"check-diffeo", {f, src, dst}});
    }

    Lexer lex_;
};

inline SessionSpec parse(const std::string& source) { return Parser(source).parse(); }

// ---------------------------------------------------------------------------
// printer (canonical re-serialization; parse(print(s)) == s structurally)
// ---------------------------------------------------------------------------

inline std::string print_tensor(const TensorField& T) {
    if (T.components().empty()) throw Error("print_tensor: declared tensors are never zero");
    return T.to_string();
}

inline std::string print(const SessionSpec& spec) {
    std::string out;
    if (!spec.coords.empty()) {
        out += "coords";
        for (const auto& v : spec.coords) out += " " + v;
        out += "\n";
    }
    for (const auto& g : spec.groups) {
        out += "group " + g.name + " = ";
        bool first_m = true;
        for (const auto& m : g.generators) {
            if (!first_m) out += ", ";
            first_m = false;
            out += "[";
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (i) out += ", ";
                out += "[";
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    if (j) out += ", ";
                    out += m.at(i, j).to_string();
                }
                out += "]";
            }
            out += "]";
        }
        out += "\n";
    }
    for (const auto& t : spec.tensors)
        out += std::string(t.is_form ? "form " : "tensor ") + t.name + " = " +
               print_tensor(t.value) + "\n";
    for (const auto& c : spec.connections) {
        out += "connection " + c.name + " [";
        for (std::size_t i = 0; i < c.value.coords().size(); ++i)
            out += (i ? " " : "") + c.value.coords()[i];
        out += "] = { ";
        bool first_e = true;
        for (const auto& [idx, v] : c.value.components()) {
            if (!first_e) out += ", ";
            first_e = false;
            out += c.value.coords()[idx[0]] + " " + c.value.coords()[idx[1]] + " " +
                   c.value.coords()[idx[2]] + " : " + v.to_string();
        }
        out += " }\n";
    }
    for (const auto& m : spec.maps) {
        out += "map " + m.name + " [";
        for (std::size_t i = 0; i < m.forward.source_vars.size(); ++i)
            out += (i ? " " : "") + m.forward.source_vars[i];
        out += "] = (";
        for (std::size_t i = 0; i < m.forward.components.size(); ++i)
            out += (i ? ", " : "") + m.forward.components[i].to_string();
        out += ") inverse (";
        for (std::size_t i = 0; i < m.inverse.components.size(); ++i)
            out += (i ? ", " : "") + m.inverse.components[i].to_string();
        out += ")\n";
    }
    for (const auto& cmd : spec.commands) {
        if (cmd.kind == "analyze" || cmd.kind == "invariants" || cmd.kind == "divisor") {
            out += cmd.kind + " " + cmd.args[0] + "\n";
        } else if (cmd.kind == "lift" || cmd.kind == "lift-connection" || cmd.kind == "solomon") {
            out += cmd.kind + " " + cmd.args[0] + " over " + cmd.args[1] + "\n";
        } else if (cmd.kind == "validate") {
            out += "validate thm37\n";
        } else if (cmd.kind == "check-diffeo") {
            out += "check-diffeo " + cmd.args[0] + " from " + cmd.args[1] + " to " + cmd.args[2] +
                   "\n";
        }
    }
    return out;
}

}  // namespace orbilift::dsl

#endif
