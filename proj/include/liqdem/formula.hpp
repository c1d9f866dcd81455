#pragma once

// Propositional language over the issue set. Internally every formula is
// built from atoms, negation and conjunction; the parser accepts the richer
// connective set (|, ->, <->) and desugars on the fly.
//
// Text syntax:   atom  ::= issue label ("p0", "q", ...)
//                top   ::= "T"
//                unary ::= "!" unary | "(" iff ")" | top | atom
//                and   ::= unary ("&" unary)*
//                or    ::= and ("|" and)*
//                imp   ::= or ("->" imp)?          (right associative)
//                iff   ::= imp ("<->" imp)*

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liqdem/common.hpp"

namespace liqdem {

class IssueSet {
public:
    IssueSet() = default;

    explicit IssueSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.empty()) throw InputError("IssueSet: at least one issue required");
        if (static_cast<int>(labels_.size()) > kMaxIssues)
            throw EnumerationLimitError("IssueSet: more than " + std::to_string(kMaxIssues) + " issues");
        for (std::size_t i = 0; i < labels_.size(); ++i)
            for (std::size_t j = i + 1; j < labels_.size(); ++j)
                if (labels_[i] == labels_[j])
                    throw InputError("IssueSet: duplicate label '" + labels_[i] + "'");
    }

    // p0, p1, ..., p{m-1}
    static IssueSet numbered(int m) {
        std::vector<std::string> labels;
        labels.reserve(m);
        for (int i = 0; i < m; ++i) labels.push_back("p" + std::to_string(i));
        return IssueSet(std::move(labels));
    }

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(IssueId i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<IssueId> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == name) return static_cast<IssueId>(i);
        return std::nullopt;
    }

private:
    std::vector<std::string> labels_;
};

struct Literal {
    IssueId issue = 0;
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend bool operator<(const Literal& a, const Literal& b) {
        return a.issue != b.issue ? a.issue < b.issue : a.positive < b.positive;
    }

    Literal negated() const { return {issue, !positive}; }
};

inline Literal pos(IssueId i) { return {i, true}; }
inline Literal neg(IssueId i) { return {i, false}; }

class Formula {
public:
    Formula() : Formula(top()) {}

    bool is_top() const { return node_->kind == Kind::True; }

    static Formula top() {
        static const Formula t{std::make_shared<Node>(Node{Kind::True, 0, nullptr, nullptr})};
        return t;
    }

    static Formula atom(IssueId i) {
        return Formula{std::make_shared<Node>(Node{Kind::Atom, i, nullptr, nullptr})};
    }

    static Formula negation(Formula a) {
        return Formula{std::make_shared<Node>(Node{Kind::Not, 0, std::move(a.node_), nullptr})};
    }

    static Formula conjunction(Formula a, Formula b) {
        return Formula{std::make_shared<Node>(Node{Kind::And, 0, std::move(a.node_), std::move(b.node_)})};
    }

    // Desugared connectives.
    static Formula disjunction(Formula a, Formula b) {
        return negation(conjunction(negation(std::move(a)), negation(std::move(b))));
    }
    static Formula implication(Formula a, Formula b) {
        return negation(conjunction(std::move(a), negation(std::move(b))));
    }
    static Formula equivalence(Formula a, Formula b) {
        Formula forward = implication(a, b);
        Formula backward = implication(std::move(b), std::move(a));
        return conjunction(std::move(forward), std::move(backward));
    }

    static Formula literal(Literal l) {
        return l.positive ? atom(l.issue) : negation(atom(l.issue));
    }

    bool eval(std::uint32_t valuation) const { return eval(node_.get(), valuation); }

    // Largest referenced atom index, or -1 for constant formulas.
    int max_atom() const { return max_atom(node_.get()); }

    std::string to_string(const IssueSet& issues) const { return print(node_.get(), issues); }

private:
    enum class Kind { True, Atom, Not, And };

    struct Node {
        Kind kind;
        IssueId atom;
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
    };

    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static bool eval(const Node* n, std::uint32_t v) {
        switch (n->kind) {
            case Kind::True: return true;
            case Kind::Atom: return (v >> n->atom) & 1u;
            case Kind::Not:  return !eval(n->lhs.get(), v);
            case Kind::And:  return eval(n->lhs.get(), v) && eval(n->rhs.get(), v);
        }
        return false;
    }

    static int max_atom(const Node* n) {
        switch (n->kind) {
            case Kind::True: return -1;
            case Kind::Atom: return n->atom;
            case Kind::Not:  return max_atom(n->lhs.get());
            case Kind::And:  return std::max(max_atom(n->lhs.get()), max_atom(n->rhs.get()));
        }
        return -1;
    }

    static std::string print(const Node* n, const IssueSet& issues) {
        switch (n->kind) {
            case Kind::True: return "T";
            case Kind::Atom: return issues.label(n->atom);
            case Kind::Not:  return "!" + wrap(n->lhs.get(), issues);
            case Kind::And:  return wrap(n->lhs.get(), issues) + " & " + wrap(n->rhs.get(), issues);
        }
        return {};
    }

    static std::string wrap(const Node* n, const IssueSet& issues) {
        if (n->kind == Kind::And) return "(" + print(n, issues) + ")";
        return print(n, issues);
    }

    std::shared_ptr<const Node> node_;
};

namespace detail {

class FormulaParser {
public:
    FormulaParser(const std::string& text, const IssueSet& issues)
        : text_(text), issues_(issues) {}

    Formula parse() {
        Formula f = parse_iff();
        skip_ws();
        if (pos_ != text_.size())
            throw InputError("formula: unexpected token at position " + std::to_string(pos_));
        return f;
    }

private:
    Formula parse_iff() {
        Formula f = parse_imp();
        while (match("<->")) f = Formula::equivalence(f, parse_imp());
        return f;
    }

    Formula parse_imp() {
        Formula f = parse_or();
        if (match("->")) return Formula::implication(f, parse_imp());
        return f;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '|') {
                ++pos_;
                f = Formula::disjunction(f, parse_and());
            } else break;
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '&') {
                ++pos_;
                f = Formula::conjunction(f, parse_unary());
            } else break;
        }
        return f;
    }

    Formula parse_unary() {
        skip_ws();
        if (pos_ >= text_.size()) throw InputError("formula: unexpected end of input");
        char c = text_[pos_];
        if (c == '!') { ++pos_; return Formula::negation(parse_unary()); }
        if (c == '(') {
            ++pos_;
            Formula f = parse_iff();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw InputError("formula: missing ')'");
            ++pos_;
            return f;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = read_ident();
            if (name == "T") return Formula::top();
            auto idx = issues_.index_of(name);
            if (!idx) throw InputError("formula: unknown issue '" + name + "'");
            return Formula::atom(*idx);
        }
        throw InputError(std::string("formula: unexpected character '") + c + "'");
    }

    std::string read_ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    bool match(const char* tok) {
        skip_ws();
        std::size_t len = std::char_traits<char>::length(tok);
        if (text_.compare(pos_, len, tok) == 0) {
            pos_ += len;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    const IssueSet& issues_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Formula parse_formula(const std::string& text, const IssueSet& issues) {
    return detail::FormulaParser(text, issues).parse();
}

} // namespace liqdem
