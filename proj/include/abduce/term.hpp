#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace abduce {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonGroundError : Error {
    explicit NonGroundError(const std::string& what) : Error(what) {}
};

/// Two disjoint variable classes: ordinary variables and abducible
/// variables, which act as placeholders for abducible constants.
enum class VarKind { Ordinary, Abducible };

struct Variable {
    std::string name;
    VarKind kind = VarKind::Ordinary;

    bool operator==(const Variable& o) const { return kind == o.kind && name == o.name; }
    bool operator<(const Variable& o) const {
        if (kind != o.kind) return kind < o.kind;
        return name < o.name;
    }
};

/// Immutable first-order term: a variable or a function application.
/// Constants are applications of arity 0. Nodes are shared; copying a
/// Term is cheap and thread-safe.
class Term {
public:
    static Term var(std::string name, VarKind kind);
    static Term var(const Variable& v) { return var(v.name, v.kind); }
    static Term app(std::string symbol, std::vector<Term> args);
    static Term constant(std::string symbol) { return app(std::move(symbol), {}); }

    bool is_var() const { return node_->is_var; }
    bool is_app() const { return !node_->is_var; }
    bool is_const() const { return is_app() && node_->args.empty(); }
    bool is_compound() const { return is_app() && !node_->args.empty(); }

    VarKind var_kind() const { return node_->vkind; }
    Variable as_variable() const { return Variable{node_->name, node_->vkind}; }

    /// Variable name or function symbol.
    const std::string& name() const { return node_->name; }
    const std::vector<Term>& args() const { return node_->args; }
    std::size_t arity() const { return node_->args.size(); }

    bool ground() const { return node_->ground; }
    std::size_t hash() const { return node_->hash; }
    /// Symbol count, variables included.
    std::size_t weight() const { return node_->weight; }

    bool operator==(const Term& o) const;
    bool operator!=(const Term& o) const { return !(*this == o); }

    /// Fixed total syntactic order; used for canonical forms only.
    int cmp(const Term& o) const;

    bool contains_var(const Variable& v) const;

private:
    struct Node {
        bool is_var;
        VarKind vkind;
        std::string name;
        std::vector<Term> args;
        std::size_t hash;
        std::size_t weight;
        bool ground;
    };
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Position in a term: a path of argument indices.
using Path = std::vector<int>;

/// All positions of t in preorder, the root first.
std::vector<std::pair<Path, Term>> positions(const Term& t);
Term subterm_at(const Term& t, const Path& p);
Term replace_at(const Term& t, const Path& p, const Term& s);

/// Variables of t in first-occurrence order, deduplicated.
void collect_vars(const Term& t, std::vector<Variable>& out);
std::vector<Variable> variables(const Term& t);

std::string to_string(const Term& t);

/// The declared abducible constants with their total order <_A.
/// ordered()[0] is the minimum a0.
class Abducibles {
public:
    Abducibles() = default;
    explicit Abducibles(std::vector<std::string> ordered);

    bool empty() const { return ordered_.empty(); }
    std::size_t size() const { return ordered_.size(); }
    bool contains(const std::string& name) const { return rank_.count(name) != 0; }
    /// Position in <_A; -1 if not abducible.
    int rank(const std::string& name) const;
    const std::string& a0() const;
    const std::vector<std::string>& ordered() const { return ordered_; }

private:
    std::vector<std::string> ordered_;
    std::map<std::string, int> rank_;
};

/// Function symbols with arities; every symbol has exactly one arity and
/// abducibles are constants.
class Signature {
public:
    /// Registers a use of `symbol` with `arity`. Returns the previously
    /// recorded arity on a mismatch, nullopt on success.
    std::optional<std::size_t> use(const std::string& symbol, std::size_t arity);
    bool known(const std::string& symbol) const { return arity_.count(symbol) != 0; }
    std::optional<std::size_t> arity_of(const std::string& symbol) const;
    const std::map<std::string, std::size_t>& symbols() const { return arity_; }

private:
    std::map<std::string, std::size_t> arity_;
};

bool contains_abducible_constant(const Term& t, const Abducibles& abd);
/// A term is abstracted when it contains no abducible constant.
inline bool term_abstracted(const Term& t, const Abducibles& abd) {
    return !contains_abducible_constant(t, abd);
}
/// t lies in V_A ∪ A.
bool is_a_term(const Term& t, const Abducibles& abd);

} // namespace abduce
