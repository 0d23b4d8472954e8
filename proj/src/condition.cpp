/* condition.cpp -- canonical transition conditions and normal forms */

#include "gfgaut/condition.hpp"

#include <algorithm>

namespace gfgaut {

Cond Cond::leaf(StateId q) {
    Cond c;
    c.kind_ = CondKind::Leaf;
    c.state_ = q;
    return c;
}

Cond Cond::make(CondKind k, std::vector<Cond> ops) {
    switch (k) {
    case CondKind::Leaf: throw Error("Cond::make: Leaf takes no operand list");
    case CondKind::And: return conj(std::move(ops));
    case CondKind::Or: return disj(std::move(ops));
    }
    throw Error("Cond::make: bad kind");
}

Cond Cond::conj(std::vector<Cond> ops) {
    if (ops.empty()) throw Error("condition with empty operand list");
    std::vector<Cond> flat;
    for (auto& op : ops) {
        if (op.kind() == CondKind::And) {
            for (const auto& sub : op.operands()) flat.push_back(sub);
        } else {
            flat.push_back(std::move(op));
        }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.size() == 1) return flat.front();
    Cond c;
    c.kind_ = CondKind::And;
    c.ops_ = std::move(flat);
    return c;
}

Cond Cond::disj(std::vector<Cond> ops) {
    if (ops.empty()) throw Error("condition with empty operand list");
    std::vector<Cond> flat;
    for (auto& op : ops) {
        if (op.kind() == CondKind::Or) {
            for (const auto& sub : op.operands()) flat.push_back(sub);
        } else {
            flat.push_back(std::move(op));
        }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.size() == 1) return flat.front();
    Cond c;
    c.kind_ = CondKind::Or;
    c.ops_ = std::move(flat);
    return c;
}

StateId Cond::state() const {
    if (kind_ != CondKind::Leaf) throw Error("state() on a non-leaf condition");
    return state_;
}

const std::vector<Cond>& Cond::operands() const {
    if (kind_ == CondKind::Leaf) throw Error("operands() on a leaf condition");
    return ops_;
}

bool Cond::contains_and() const {
    if (kind_ == CondKind::And) return true;
    if (kind_ == CondKind::Leaf) return false;
    return std::any_of(ops_.begin(), ops_.end(), [](const Cond& c) { return c.contains_and(); });
}

bool Cond::contains_or() const {
    if (kind_ == CondKind::Or) return true;
    if (kind_ == CondKind::Leaf) return false;
    return std::any_of(ops_.begin(), ops_.end(), [](const Cond& c) { return c.contains_or(); });
}

void Cond::for_each_state(const std::function<void(StateId)>& fn) const {
    if (kind_ == CondKind::Leaf) {
        fn(state_);
        return;
    }
    for (const auto& op : ops_) op.for_each_state(fn);
}

bool Cond::eval(const std::function<bool(StateId)>& truth) const {
    switch (kind_) {
    case CondKind::Leaf: return truth(state_);
    case CondKind::And:
        return std::all_of(ops_.begin(), ops_.end(),
                           [&](const Cond& c) { return c.eval(truth); });
    case CondKind::Or:
        return std::any_of(ops_.begin(), ops_.end(),
                           [&](const Cond& c) { return c.eval(truth); });
    }
    return false;
}

Cond Cond::dual() const {
    if (kind_ == CondKind::Leaf) return *this;
    std::vector<Cond> ops;
    ops.reserve(ops_.size());
    for (const auto& op : ops_) ops.push_back(op.dual());
    return kind_ == CondKind::And ? disj(std::move(ops)) : conj(std::move(ops));
}

std::pair<Cond, Cond> Cond::split_binary() const {
    if (kind_ == CondKind::Leaf) throw Error("split_binary() on a leaf condition");
    const size_t n = ops_.size();
    const size_t half = (n + 1) / 2;
    std::vector<Cond> left(ops_.begin(), ops_.begin() + half);
    std::vector<Cond> right(ops_.begin() + half, ops_.end());
    if (kind_ == CondKind::And) return {conj(std::move(left)), conj(std::move(right))};
    return {disj(std::move(left)), disj(std::move(right))};
}

int Cond::compare(const Cond& a, const Cond& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_ ? -1 : 1;
    if (a.kind_ == CondKind::Leaf)
        return a.state_ == b.state_ ? 0 : (a.state_ < b.state_ ? -1 : 1);
    const size_t n = std::min(a.ops_.size(), b.ops_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = compare(a.ops_[i], b.ops_[i]);
        if (c != 0) return c;
    }
    if (a.ops_.size() != b.ops_.size()) return a.ops_.size() < b.ops_.size() ? -1 : 1;
    return 0;
}

namespace {

void sort_unique(Clause& c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
}

bool subset_of(const Clause& a, const Clause& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Keeps only minimal clauses (absorption).
ClauseList antichain(ClauseList cs) {
    std::sort(cs.begin(), cs.end(), [](const Clause& a, const Clause& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    ClauseList kept;
    for (auto& c : cs) {
        bool absorbed = false;
        for (const auto& k : kept) {
            if (subset_of(k, c)) {
                absorbed = true;
                break;
            }
        }
        if (!absorbed) kept.push_back(std::move(c));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

ClauseList cross(const ClauseList& a, const ClauseList& b) {
    ClauseList out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a) {
        for (const auto& y : b) {
            Clause c = x;
            c.insert(c.end(), y.begin(), y.end());
            sort_unique(c);
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ClauseList dnf_rec(const Cond& c) {
    switch (c.kind()) {
    case CondKind::Leaf: return {{c.state()}};
    case CondKind::Or: {
        ClauseList out;
        for (const auto& op : c.operands()) {
            ClauseList sub = dnf_rec(op);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }
    case CondKind::And: {
        ClauseList out = {{}};
        for (const auto& op : c.operands()) out = cross(out, dnf_rec(op));
        return out;
    }
    }
    return {};
}

} // namespace

ClauseList to_dnf_clauses(const Cond& c) { return antichain(dnf_rec(c)); }

ClauseList to_cnf_clauses(const Cond& c) { return antichain(dnf_rec(c.dual())); }

Cond cond_from_dnf(const ClauseList& clauses) {
    if (clauses.empty()) throw Error("empty clause list");
    std::vector<Cond> terms;
    terms.reserve(clauses.size());
    for (const auto& cl : clauses) {
        std::vector<Cond> leaves;
        leaves.reserve(cl.size());
        for (StateId q : cl) leaves.push_back(Cond::leaf(q));
        terms.push_back(Cond::conj(std::move(leaves)));
    }
    return Cond::disj(std::move(terms));
}

Cond cond_from_cnf(const ClauseList& clauses) {
    if (clauses.empty()) throw Error("empty clause list");
    std::vector<Cond> terms;
    terms.reserve(clauses.size());
    for (const auto& cl : clauses) {
        std::vector<Cond> leaves;
        leaves.reserve(cl.size());
        for (StateId q : cl) leaves.push_back(Cond::leaf(q));
        terms.push_back(Cond::disj(std::move(leaves)));
    }
    return Cond::conj(std::move(terms));
}

ClauseList dnf_shape_clauses(const Cond& c) {
    auto clause_of = [](const Cond& t) -> Clause {
        if (t.is_leaf()) return {t.state()};
        if (t.kind() != CondKind::And) throw Error("condition not in DNF shape");
        Clause cl;
        for (const auto& op : t.operands()) {
            if (!op.is_leaf()) throw Error("condition not in DNF shape");
            cl.push_back(op.state());
        }
        return cl;
    };
    if (c.kind() == CondKind::Or) {
        ClauseList out;
        for (const auto& op : c.operands()) out.push_back(clause_of(op));
        return out;
    }
    return {clause_of(c)};
}

} // namespace gfgaut
