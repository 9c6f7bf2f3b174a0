#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "vcw/core.hpp"

namespace vcw {

// Boolean expressions over member names with &, |, ! and parentheses, plus
// the literals true/false. Bare names may use letters, digits and _.<>=,+-#;
// anything else (grid names like "(3,5)") goes in single quotes: '(3,5)'.
class BoolExpr {
public:
    enum class Kind { Const, Var, Not, And, Or };
    struct Node {
        Kind kind;
        bool value = false;     // Const
        std::size_t var = 0;    // Var: member index
        std::size_t a = 0, b = 0;
    };

    static BoolExpr parse(const std::string& text, const SetFamily& f) {
        Parser p{text, 0, f, {}};
        BoolExpr e;
        e.root_ = p.parse_or(e.nodes_);
        p.skip_ws();
        if (p.pos != text.size())
            throw ParseError("unexpected trailing input in expression at position " +
                             std::to_string(p.pos));
        for (const auto& n : e.nodes_) {
            if (n.kind != Kind::Var) continue;
            bool seen = false;
            for (std::size_t v : e.referenced_)
                if (v == n.var) { seen = true; break; }
            if (!seen) e.referenced_.push_back(n.var);
        }
        return e;
    }

    // distinct members referenced, in first-reference order
    const std::vector<std::size_t>& referenced() const { return referenced_; }

    Bitset eval(const SetFamily& f) const {
        return eval_node(f, root_);
    }

private:
    struct Parser {
        const std::string& s;
        std::size_t pos;
        const SetFamily& fam;
        std::string scratch;

        void skip_ws() {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        bool bare_char(char c) const {
            return std::isalnum(static_cast<unsigned char>(c)) ||
                   std::string_view("_.<>=,+-#").find(c) != std::string_view::npos;
        }

        std::size_t parse_or(std::vector<Node>& nodes) {
            std::size_t lhs = parse_and(nodes);
            for (skip_ws(); pos < s.size() && s[pos] == '|'; skip_ws()) {
                ++pos;
                const std::size_t rhs = parse_and(nodes);
                nodes.push_back({Kind::Or, false, 0, lhs, rhs});
                lhs = nodes.size() - 1;
            }
            return lhs;
        }
        std::size_t parse_and(std::vector<Node>& nodes) {
            std::size_t lhs = parse_not(nodes);
            for (skip_ws(); pos < s.size() && s[pos] == '&'; skip_ws()) {
                ++pos;
                const std::size_t rhs = parse_not(nodes);
                nodes.push_back({Kind::And, false, 0, lhs, rhs});
                lhs = nodes.size() - 1;
            }
            return lhs;
        }
        std::size_t parse_not(std::vector<Node>& nodes) {
            skip_ws();
            if (pos < s.size() && s[pos] == '!') {
                ++pos;
                const std::size_t inner = parse_not(nodes);
                nodes.push_back({Kind::Not, false, 0, inner, 0});
                return nodes.size() - 1;
            }
            return parse_atom(nodes);
        }
        std::size_t parse_atom(std::vector<Node>& nodes) {
            skip_ws();
            if (pos >= s.size()) throw ParseError("expression ends unexpectedly");
            if (s[pos] == '(') {
                ++pos;
                const std::size_t inner = parse_or(nodes);
                skip_ws();
                if (pos >= s.size() || s[pos] != ')')
                    throw ParseError("missing closing parenthesis in expression");
                ++pos;
                return inner;
            }
            std::string name;
            if (s[pos] == '\'') {
                const std::size_t end = s.find('\'', pos + 1);
                if (end == std::string::npos)
                    throw ParseError("unterminated quoted name in expression");
                name = s.substr(pos + 1, end - pos - 1);
                pos = end + 1;
            } else {
                const std::size_t start = pos;
                while (pos < s.size() && bare_char(s[pos])) ++pos;
                if (pos == start)
                    throw ParseError(std::string("unexpected character '") + s[pos] +
                                     "' in expression");
                name = s.substr(start, pos - start);
                if (name == "true" || name == "false") {
                    nodes.push_back({Kind::Const, name == "true", 0, 0, 0});
                    return nodes.size() - 1;
                }
            }
            nodes.push_back({Kind::Var, false, fam.member_index(name), 0, 0});
            return nodes.size() - 1;
        }
    };

    Bitset eval_node(const SetFamily& f, std::size_t i) const {
        const Node& n = nodes_[i];
        switch (n.kind) {
            case Kind::Const: return n.value ? f.universe.full_mask() : f.universe.empty_mask();
            case Kind::Var: return f.mask(n.var);
            case Kind::Not: return eval_node(f, n.a).flipped();
            case Kind::And: return eval_node(f, n.a) & eval_node(f, n.b);
            case Kind::Or: return eval_node(f, n.a) | eval_node(f, n.b);
        }
        throw std::logic_error("bad expression node");
    }

    std::vector<Node> nodes_;
    std::size_t root_ = 0;
    std::vector<std::size_t> referenced_;
};

inline Bitset boolean_combo(const SetFamily& f, const std::string& expr) {
    return BoolExpr::parse(expr, f).eval(f);
}

struct ComboBound {
    std::size_t components;
    std::size_t distinct_members;  // the K of the K+1 guarantee
};

// Component count of a boolean combination under an order. When the order
// came from order_id1 on this family, the count is at most K+1 where K is
// the number of distinct members referenced.
inline ComboBound combo_component_bound(const SetFamily& f, const LinearOrder& order,
                                        const std::string& expr) {
    const BoolExpr e = BoolExpr::parse(expr, f);
    order.validate(f.universe.size());
    return {convex_components(order, e.eval(f)), e.referenced().size()};
}

} // namespace vcw
