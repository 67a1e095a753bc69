#ifndef METDIM_EXPR_HPP
#define METDIM_EXPR_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "metdim/distance.hpp"
#include "metdim/families.hpp"
#include "metdim/graph.hpp"
#include "metdim/hadamard.hpp"
#include "metdim/named.hpp"

namespace metdim {
namespace exprdetail {

// Recursive-descent evaluator for constructor expressions:
//   expr := name | name '(' arg {',' arg} ')'
// Arguments are integers, bare words (construction tags, named-graph keys), or
// nested expressions, depending on the function. A bare name evaluates the
// registered named graph of that name.
class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Graph parse() {
        Graph g = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("expression: " + what + " at position " +
                                    std::to_string(pos_) + " in '" + s_ + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected a name");
        if (std::isdigit(static_cast<unsigned char>(s_[start]))) fail("name cannot start with a digit");
        return s_.substr(start, pos_ - start);
    }

    int integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
            fail("expected an integer");
        long long v = 0;
        try {
            v = std::stoll(s_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            fail("integer out of range");
        }
        if (v < -1000000 || v > 1000000) fail("integer out of range");
        return int(v);
    }

    std::vector<int> int_args(size_t lo, size_t hi) {
        expect('(');
        std::vector<int> args;
        if (!peek(')')) {
            args.push_back(integer());
            while (peek(',')) {
                ++pos_;
                args.push_back(integer());
            }
        }
        expect(')');
        if (args.size() < lo || args.size() > hi) fail("wrong number of arguments");
        return args;
    }

    Graph expr() {
        std::string name = ident();
        if (!peek('(')) return named_graph(name);

        // transforms taking a nested expression
        if (name == "complement") { auto g = wrapped(); return metdim::complement(g); }
        if (name == "line_graph") { auto g = wrapped(); return metdim::line_graph(g); }
        if (name == "bipartite_double") { auto g = wrapped(); return metdim::bipartite_double(g); }
        if (name == "halved") { auto g = wrapped(); return metdim::halved(g); }
        if (name == "distance_graph" || name == "subconstituent") {
            expect('(');
            Graph g = expr();
            expect(',');
            int i = integer();
            expect(')');
            return name == "distance_graph" ? metdim::distance_graph(g, i)
                                            : metdim::subconstituent(g, i);
        }
        if (name == "named") {
            expect('(');
            std::string key = ident();
            expect(')');
            return named_graph(key);
        }
        if (name == "hadamard") {
            expect('(');
            int order = integer();
            std::string tag;
            if (peek(',')) {
                ++pos_;
                tag = ident();
            } else {
                tag = (order > 0 && (order & (order - 1)) == 0) ? "sylvester" : "paley1";
            }
            expect(')');
            if (tag == "sylvester") return hadamard_graph(hadamard_sylvester(order));
            if (tag == "paley1") return hadamard_graph(hadamard_paley1(order));
            fail("unknown hadamard construction '" + tag + "'");
        }

        // leaf families over integer arguments
        if (name == "complete") {
            int n = int_args(1, 1)[0];
            if (n < 2) throw std::invalid_argument("complete: need n >= 2");
            return complete_multipartite(std::vector<int>(n, 1));
        }
        if (name == "complete_bipartite") {
            auto a = int_args(2, 2);
            return complete_multipartite({a[0], a[1]});
        }
        if (name == "multipartite") return complete_multipartite(int_args(1, 64));
        if (name == "cycle") return cycle(int_args(1, 1)[0]);
        if (name == "johnson") { auto a = int_args(2, 2); return johnson(a[0], a[1]); }
        if (name == "kneser") { auto a = int_args(2, 2); return kneser(a[0], a[1]); }
        if (name == "hamming") { auto a = int_args(2, 2); return hamming(a[0], a[1]); }
        if (name == "paley") return paley(int_args(1, 1)[0]);
        if (name == "knn_minus_i") return knn_minus_i(int_args(1, 1)[0]);
        if (name == "folded_cube") return folded_cube(int_args(1, 1)[0]);
        if (name == "pg2") return pg2_incidence(int_args(1, 1)[0]);
        fail("unknown constructor '" + name + "'");
    }

    Graph wrapped() {
        expect('(');
        Graph g = expr();
        expect(')');
        return g;
    }

    std::string s_;
    size_t pos_ = 0;
};

}  // namespace exprdetail

inline Graph parse_expression(const std::string& text) {
    return exprdetail::Parser(text).parse();
}

}  // namespace metdim

#endif  // METDIM_EXPR_HPP
