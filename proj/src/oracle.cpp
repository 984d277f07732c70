#include "abduce/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace abduce {
namespace oracle {

namespace {

// Congruence closure over a shared subterm DAG: union-find with
// congruence propagation through parent applications.
class Congruence {
public:
    int add(const Term& t) {
        std::vector<int> kids;
        kids.reserve(t.arity());
        for (const auto& a : t.args()) kids.push_back(add(a));
        Key key{t.name(), std::move(kids)};
        auto it = node_of_.find(key);
        if (it != node_of_.end()) return it->second;
        int id = static_cast<int>(nodes_.size());
        nodes_.push_back(Node{key, id});
        node_of_.emplace(nodes_.back().key, id);
        return id;
    }

    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        pending_.emplace_back(a, b);
        process();
    }

    bool same(int a, int b) { return find(a) == find(b); }

private:
    struct Key {
        std::string sym;
        std::vector<int> kids;
        bool operator==(const Key& o) const { return sym == o.sym && kids == o.kids; }
        bool operator<(const Key& o) const {
            if (sym != o.sym) return sym < o.sym;
            return kids < o.kids;
        }
    };
    struct Node {
        Key key;
        int rep;
    };

    int find(int x) {
        int r = x;
        while (nodes_[static_cast<std::size_t>(r)].rep != r) r = nodes_[static_cast<std::size_t>(r)].rep;
        while (nodes_[static_cast<std::size_t>(x)].rep != r) {
            int next = nodes_[static_cast<std::size_t>(x)].rep;
            nodes_[static_cast<std::size_t>(x)].rep = r;
            x = next;
        }
        return r;
    }

    Key rep_key(int id) {
        Key k = nodes_[static_cast<std::size_t>(id)].key;
        for (int& c : k.kids) c = find(c);
        return k;
    }

    void process() {
        while (!pending_.empty()) {
            auto [a, b] = pending_.back();
            pending_.pop_back();
            a = find(a);
            b = find(b);
            if (a == b) continue;
            nodes_[static_cast<std::size_t>(a)].rep = b;
            // congruence: any two applications whose children now meet merge too
            std::map<Key, int> sigs;
            for (std::size_t i = 0; i < nodes_.size(); ++i) {
                int id = static_cast<int>(i);
                Key k = rep_key(id);
                auto it = sigs.find(k);
                if (it == sigs.end()) {
                    sigs.emplace(std::move(k), id);
                } else if (find(it->second) != find(id)) {
                    pending_.emplace_back(it->second, id);
                }
            }
        }
    }

    std::vector<Node> nodes_;
    std::map<Key, int> node_of_;
    std::vector<std::pair<int, int>> pending_;
};

// Splitting search over clause literals, congruence closure as the
// theory check. At every node one closure over all problem terms is
// built; clauses with an already-congruent positive literal or an
// already-asserted literal need no branch, and branches asserting a
// disequation between congruent sides are pruned.
class SatSearch {
public:
    explicit SatSearch(const std::vector<Clause>& clauses) : clauses_(clauses) {}

    bool run() {
        std::vector<Literal> asserted;
        return rec(asserted);
    }

private:
    bool rec(std::vector<Literal>& asserted) {
        Congruence cc;
        for (const auto& c : clauses_)
            for (const auto& l : c.lits()) {
                cc.add(l.lhs());
                cc.add(l.rhs());
            }
        std::vector<std::pair<int, int>> diseq;
        for (const auto& l : asserted) {
            int a = cc.add(l.lhs());
            int b = cc.add(l.rhs());
            if (l.positive())
                cc.merge(a, b);
            else
                diseq.emplace_back(a, b);
        }
        for (auto [a, b] : diseq)
            if (cc.same(a, b)) return false;

        auto satisfied = [&](const Clause& c) {
            for (const auto& l : c.lits()) {
                if (l.positive() && cc.same(cc.add(l.lhs()), cc.add(l.rhs()))) return true;
                if (!l.positive() && std::find(asserted.begin(), asserted.end(), l) != asserted.end())
                    return true;
            }
            return false;
        };
        const Clause* branch = nullptr;
        for (const auto& c : clauses_) {
            if (!satisfied(c)) {
                branch = &c;
                break;
            }
        }
        if (!branch) return true;

        // positive literals first, then input order
        std::vector<const Literal*> order;
        for (const auto& l : branch->lits())
            if (l.positive()) order.push_back(&l);
        for (const auto& l : branch->lits())
            if (!l.positive()) order.push_back(&l);
        for (const Literal* l : order) {
            if (!l->positive() && cc.same(cc.add(l->lhs()), cc.add(l->rhs()))) continue;
            asserted.push_back(*l);
            if (rec(asserted)) return true;
            asserted.pop_back();
        }
        return false;
    }

    const std::vector<Clause>& clauses_;
};

} // namespace

Sat decide_sat(const std::vector<Clause>& clauses) {
    for (const auto& c : clauses) {
        if (!c.ground()) throw NonGroundError("oracle requires ground clauses: " + to_string(c));
        if (c.empty()) return Sat::Unsat;
    }
    return SatSearch(clauses).run() ? Sat::Sat : Sat::Unsat;
}

bool entails(const std::vector<Clause>& s, const Clause& c) {
    std::vector<Clause> all = s;
    for (auto& unit : negate_ground_clause(c)) all.push_back(std::move(unit));
    return decide_sat(all) == Sat::Unsat;
}

bool entails_clause(const Clause& d, const Clause& c) { return entails({d}, c); }

bool is_valid(const Clause& c) { return entails({}, c); }

std::vector<Clause> enumerate_a_implicates(const std::vector<Clause>& s, const Abducibles& abd,
                                           std::size_t max_len, bool prime_only) {
    if (decide_sat(s) == Sat::Unsat)
        throw InputUnsatisfiableError("cannot enumerate implicates of an unsatisfiable set");
    // canonical literal alphabet: a ~ b with a strictly before b in <_A
    std::vector<Literal> alphabet;
    const auto& names = abd.ordered();
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            for (bool pos : {true, false})
                alphabet.emplace_back(pos, Term::constant(names[i]), Term::constant(names[j]));
    std::vector<Clause> found;
    std::vector<Literal> current;
    std::function<void(std::size_t)> walk = [&](std::size_t start) {
        if (!current.empty()) {
            Clause c(current);
            if (!is_syntactic_tautology(c) && entails(s, c)) found.push_back(c);
        }
        if (current.size() == max_len) return;
        for (std::size_t k = start; k < alphabet.size(); ++k) {
            current.push_back(alphabet[k]);
            walk(k + 1);
            current.pop_back();
        }
    };
    walk(0);
    if (prime_only) {
        std::vector<Clause> prime;
        for (std::size_t i = 0; i < found.size(); ++i) {
            bool drop = false;
            for (std::size_t j = 0; j < found.size() && !drop; ++j) {
                if (i == j) continue;
                if (!entails_clause(found[j], found[i])) continue;
                bool back = entails_clause(found[i], found[j]);
                if (!back || j < i) drop = true; // strictly stronger, or an earlier equivalent
            }
            if (!drop) prime.push_back(found[i]);
        }
        return prime;
    }
    return found;
}

} // namespace oracle
} // namespace abduce
